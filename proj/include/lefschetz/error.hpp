// Copyright 2026 The lefschetz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace lefschetz {

/// Base class of every exception thrown by the library.
///
/// `code()` is a stable, machine-readable identifier (kebab-case) that the
/// CLI forwards verbatim in JSON diagnostics.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Caller supplied data outside an operation's domain (bad parameters,
/// malformed input, type mismatches between morphisms).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The input is well-formed but the requested mathematical statement does
/// not hold for it (e.g. a round trip is not the identity, ranks do not add
/// up, the class is not expressible in the modelled ring).
class DomainFailure : public Error {
public:
    using Error::Error;
};

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw InvalidArgument("overflow", "multiplicity overflow in addition");
    }
    return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw InvalidArgument("overflow", "multiplicity overflow in multiplication");
    }
    return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw InvalidArgument("overflow", "integer overflow in addition");
    }
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw InvalidArgument("overflow", "integer overflow in subtraction");
    }
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw InvalidArgument("overflow", "integer overflow in multiplication");
    }
    return r;
}

}  // namespace detail
}  // namespace lefschetz
