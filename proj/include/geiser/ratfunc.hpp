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

#ifndef GEISER_RATFUNC_HPP
#define GEISER_RATFUNC_HPP

#include "geiser/gcd.hpp"

namespace geiser {

// Reduced quotient of two polynomials: gcd(num, den) constant and the
// denominator monic (grlex-leading coefficient 1).  Canonical, so equality
// is structural.
class RationalFunction {
public:
    explicit RationalFunction(int conductor)
        : num_(MultiPoly::zero(conductor)), den_(MultiPoly::one(conductor)) {}
    RationalFunction(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }
    explicit RationalFunction(MultiPoly num)
        : num_(std::move(num)), den_(MultiPoly::one(num_.conductor())) {
        normalize();
    }

    static RationalFunction variable(int conductor, Var v) {
        return RationalFunction(MultiPoly::variable(conductor, v));
    }
    static RationalFunction constant(const CycNumber& c) {
        return RationalFunction(MultiPoly::constant(c));
    }

    const MultiPoly& numerator() const { return num_; }
    const MultiPoly& denominator() const { return den_; }
    int conductor() const { return num_.conductor(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    MultiPoly as_polynomial() const {
        if (!is_polynomial()) throw domain_error("expression has a non-constant denominator");
        return num_ * den_.constant_value().inverse();
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    RationalFunction operator-() const {
        RationalFunction r(*this);
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.num_.is_zero()) throw domain_error("division by zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction pow(long e) const {
        if (e < 0) {
            if (num_.is_zero()) throw domain_error("negative power of zero");
            return RationalFunction(den_, num_).pow(-e);
        }
        return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
    }

    // Substitute rational functions for variables (simultaneous; null = keep).
    RationalFunction substituted(const std::array<const RationalFunction*, 4>& rep) const {
        RationalFunction n = eval_poly(num_, rep);
        RationalFunction d = eval_poly(den_, rep);
        if (d.is_zero()) throw domain_error("substitution lands in the indeterminacy locus");
        return n / d;
    }

    std::string to_string() const {
        if (den_ == MultiPoly::one(conductor())) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    static RationalFunction eval_poly(const MultiPoly& p, const std::array<const RationalFunction*, 4>& rep) {
        const int n = p.conductor();
        RationalFunction acc(n);
        std::array<std::vector<RationalFunction>, 4> powers; // powers[v][k] = rep_v^k
        for (Var v : all_vars) powers[static_cast<unsigned>(v)].push_back(constant(CycNumber::one(n)));
        auto power_of = [&](Var v, unsigned k) -> const RationalFunction& {
            auto& cache = powers[static_cast<unsigned>(v)];
            while (cache.size() <= k) {
                const RationalFunction* base = rep[static_cast<unsigned>(v)];
                RationalFunction b = base ? *base : variable(n, v);
                cache.push_back(cache.back() * b);
            }
            return cache[k];
        };
        for (const auto& [m, c] : p.terms()) {
            RationalFunction term = constant(c);
            for (Var v : all_vars)
                if (m[v] > 0) term *= power_of(v, m[v]);
            acc += term;
        }
        return acc;
    }

    void normalize() {
        if (num_.conductor() != den_.conductor()) throw conductor_mismatch("rational function conductor mismatch");
        if (den_.is_zero()) throw domain_error("zero denominator");
        if (num_.is_zero()) {
            den_ = MultiPoly::one(num_.conductor());
            return;
        }
        MultiPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
        CycNumber lc = den_.leading_coefficient().inverse();
        num_ = num_ * lc;
        den_ = den_ * lc;
    }

    MultiPoly num_, den_;
};

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

} // namespace geiser

#endif
