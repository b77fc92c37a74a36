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

#include "lefschetz/parse.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace lefschetz {

ParseError::ParseError(std::size_t offset, const std::string& what)
    : InvalidArgument("syntax-error", "syntax error at byte " + std::to_string(offset) + ": " + what),
      offset_(offset) {}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr parse() {
        ExprPtr e = sum();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'" +
                 (pos_ < text_.size() ? std::string(", found '") + text_[pos_] + "'" : std::string(" at end of input")));
        }
    }

    std::string identifier() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    std::int64_t integer() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::int64_t value = 0;
        const char* first = text_.data() + start;
        const char* last = text_.data() + pos_;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last || first == last) {
            pos_ = start;
            fail("expected an integer");
        }
        return value;
    }

    bool boolean() {
        const std::size_t start = pos_;
        std::string word = identifier();
        if (word == "odd_trivial") {
            expect('=');
            word = identifier();
        }
        if (word == "true") return true;
        if (word == "false") return false;
        pos_ = start;
        skip_ws();
        fail("expected 'true' or 'false'");
    }

    ExprPtr sum() {
        ExprPtr e = prod();
        while (accept('+')) e = disjoint_union(e, prod());
        return e;
    }

    ExprPtr prod() {
        ExprPtr e = atom();
        while (accept('*')) e = product(e, atom());
        return e;
    }

    ExprPtr atom() {
        if (accept('(')) {
            ExprPtr e = sum();
            expect(')');
            return e;
        }
        skip_ws();
        const std::size_t start = pos_;
        const std::string name = identifier();
        if (name == "point") return point();
        if (name == "P") return unary(projective);
        if (name == "Q") return unary(quadric);
        if (name == "M0") return unary(moduli_m0);
        if (name == "Gr") {
            expect('(');
            const auto k = integer();
            expect(',');
            const auto n = integer();
            expect(')');
            return grassmannian(k, n);
        }
        if (name == "toric") {
            expect('[');
            std::vector<std::int64_t> cones{integer()};
            while (accept(',')) cones.push_back(integer());
            expect(']');
            return toric(std::move(cones));
        }
        if (name == "blowup") {
            expect('(');
            ExprPtr base = sum();
            expect(';');
            ExprPtr center = sum();
            expect(';');
            const auto c = integer();
            expect(')');
            return blowup(std::move(base), std::move(center), c);
        }
        if (name == "projbundle") {
            expect('(');
            ExprPtr base = sum();
            expect(';');
            const auto r = integer();
            expect(')');
            return proj_bundle(std::move(base), r);
        }
        if (name == "fano") {
            expect('(');
            const auto b = integer();
            expect(';');
            const bool odd_trivial = boolean();
            expect(')');
            return fano3fold(b, odd_trivial);
        }
        pos_ = start;
        if (name.empty()) fail(pos_ < text_.size() ? "expected an expression" : "unexpected end of input");
        fail("unknown constructor '" + name + "'");
    }

    ExprPtr unary(ExprPtr (*make)(std::int64_t)) {
        expect('(');
        const auto v = integer();
        expect(')');
        return make(v);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(std::string_view text) {
    ExprPtr e = Parser(text).parse();
    validate(*e);
    return e;
}

}  // namespace lefschetz
