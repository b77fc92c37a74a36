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

#include "lefschetz/rational_matrix.hpp"

#include <algorithm>
#include <regex>
#include <utility>

#include "lefschetz/error.hpp"

namespace lefschetz {

Rational parse_rational(const std::string& text) {
    static const std::regex pattern(R"(\s*([+-]?[0-9]+)\s*(?:/\s*([0-9]+))?\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern)) {
        throw InvalidArgument("bad-rational", "not a rational number: '" + text + "'");
    }
    mpz_class num(m[1].str());
    mpz_class den(m[2].matched ? m[2].str() : std::string("1"));
    if (den == 0) throw InvalidArgument("bad-rational", "zero denominator in '" + text + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

namespace {

// In-place reduction to row echelon form; returns the pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& a, RationalMatrix* companion) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != row) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
            if (companion) {
                for (std::size_t j = 0; j < companion->cols(); ++j) std::swap((*companion)(p, j), (*companion)(row, j));
            }
        }
        Rational inv = 1 / a(row, col);
        for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) *= inv;
        if (companion) {
            for (std::size_t j = 0; j < companion->cols(); ++j) (*companion)(row, j) *= inv;
        }
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col) == 0) continue;
            Rational factor = a(i, col);
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= factor * a(row, j);
            if (companion) {
                for (std::size_t j = 0; j < companion->cols(); ++j) (*companion)(i, j) -= factor * (*companion)(row, j);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t RationalMatrix::rank() const {
    RationalMatrix copy = *this;
    return row_reduce(copy, nullptr).size();
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    RationalMatrix copy = *this;
    RationalMatrix inv = identity(rows_);
    if (row_reduce(copy, &inv).size() != rows_) return std::nullopt;
    return inv;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw InvalidArgument("shape-mismatch", "matrix sum of incompatible shapes");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw InvalidArgument("shape-mismatch", "matrix product of incompatible shapes");
    }
    RationalMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

}  // namespace lefschetz
