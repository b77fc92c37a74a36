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

// Variety expression grammar:
//
//   sum     := product ('+' product)*
//   product := atom ('*' atom)*
//   atom    := '(' sum ')'
//            | 'point'
//            | 'P' '(' int ')' | 'Q' '(' int ')' | 'M0' '(' int ')'
//            | 'Gr' '(' int ',' int ')'
//            | 'toric' '[' int (',' int)* ']'
//            | 'blowup' '(' sum ';' sum ';' int ')'
//            | 'projbundle' '(' sum ';' int ')'
//            | 'fano' '(' int ';' ['odd_trivial' '='] ('true' | 'false') ')'
//
// `*` is the product of varieties, `+` the disjoint union; both associate
// to the left.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "lefschetz/error.hpp"
#include "lefschetz/varieties.hpp"

namespace lefschetz {

class ParseError : public InvalidArgument {
public:
    ParseError(std::size_t offset, const std::string& what);

    /// Byte offset into the input where parsing stopped.
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Parses and validates. Syntax errors throw ParseError; parameter bound
/// violations throw InvalidArgument with the offending node path.
ExprPtr parse_expr(std::string_view text);

}  // namespace lefschetz
