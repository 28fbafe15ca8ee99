/*
   Copyright 2026 the geiser authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GEISER_PARSER_HPP
#define GEISER_PARSER_HPP

#include "geiser/ratfunc.hpp"

#include <cctype>
#include <string>

namespace geiser {

// Recursive-descent parser for the expression grammar:
//   variables x y z t, constants i j zeta(N)^k, integer and p/q literals,
//   operators + - * / ^ and parentheses.
class ExpressionParser {
public:
    ExpressionParser(std::string text, int conductor) : text_(std::move(text)), n_(conductor) {}

    RationalFunction parse() {
        RationalFunction r = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw parse_error("unexpected trailing input", pos_);
        return r;
    }

private:
    RationalFunction parse_expr() {
        RationalFunction acc = parse_term();
        while (true) {
            skip_ws();
            if (match('+')) {
                acc += parse_term();
            } else if (match('-')) {
                acc -= parse_term();
            } else {
                return acc;
            }
        }
    }

    RationalFunction parse_term() {
        RationalFunction acc = parse_unary();
        while (true) {
            skip_ws();
            if (match('*')) {
                acc *= parse_unary();
            } else if (match('/')) {
                RationalFunction d = parse_unary();
                if (d.is_zero()) throw parse_error("division by zero", pos_);
                acc /= d;
            } else {
                return acc;
            }
        }
    }

    RationalFunction parse_unary() {
        skip_ws();
        if (match('-')) return -parse_unary();
        if (match('+')) return parse_unary();
        return parse_power();
    }

    RationalFunction parse_power() {
        RationalFunction base = parse_atom();
        skip_ws();
        if (match('^')) {
            long e = parse_integer();
            return base.pow(e);
        }
        return base;
    }

    RationalFunction parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw parse_error("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction r = parse_expr();
            expect(')');
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt v = parse_natural();
            return RationalFunction::constant(CycNumber::from_rational(n_, BigRational(v)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            std::string ident;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ident += text_[pos_++];
            if (ident == "x") return RationalFunction::variable(n_, Var::x);
            if (ident == "y") return RationalFunction::variable(n_, Var::y);
            if (ident == "z") return RationalFunction::variable(n_, Var::z);
            if (ident == "t") return RationalFunction::variable(n_, Var::t);
            if (ident == "i") return RationalFunction::constant(CycNumber::unit_i(n_));
            if (ident == "j") return RationalFunction::constant(CycNumber::unit_j(n_));
            if (ident == "zeta") {
                expect('(');
                long m = parse_integer();
                expect(')');
                if (m <= 0) throw parse_error("zeta conductor must be positive", start);
                if (n_ % m != 0)
                    throw parse_error("zeta(" + std::to_string(m) + ") does not embed in Q(zeta_" +
                                          std::to_string(n_) + ")",
                                      start);
                return RationalFunction::constant(CycNumber::zeta(n_, n_ / m));
            }
            throw parse_error("unknown identifier '" + ident + "'", start);
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }

    long parse_integer() {
        skip_ws();
        bool neg = false;
        if (match('-')) neg = true;
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw parse_error("expected integer", pos_);
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000) throw parse_error("exponent too large", pos_);
            ++pos_;
        }
        return neg ? -v : v;
    }

    BigInt parse_natural() {
        BigInt v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool match(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!match(c)) throw parse_error(std::string("expected '") + c + "'", pos_);
    }

    std::string text_;
    int n_;
    std::size_t pos_ = 0;
};

inline RationalFunction parse_rational(const std::string& text, int conductor) {
    return ExpressionParser(text, conductor).parse();
}

inline MultiPoly parse_poly(const std::string& text, int conductor) {
    return parse_rational(text, conductor).as_polynomial();
}

} // namespace geiser

#endif
