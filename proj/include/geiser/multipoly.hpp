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

#ifndef GEISER_MULTIPOLY_HPP
#define GEISER_MULTIPOLY_HPP

#include "geiser/cyclotomic.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace geiser {

enum class Var : unsigned { x = 0, y = 1, z = 2, t = 3 };

inline constexpr std::array<Var, 4> all_vars{Var::x, Var::y, Var::z, Var::t};

inline const char* var_name(Var v) {
    static const char* names[4] = {"x", "y", "z", "t"};
    return names[static_cast<unsigned>(v)];
}

struct Monomial {
    std::array<unsigned, 4> e{0, 0, 0, 0};

    unsigned operator[](Var v) const { return e[static_cast<unsigned>(v)]; }
    unsigned& operator[](Var v) { return e[static_cast<unsigned>(v)]; }
    unsigned total() const { return e[0] + e[1] + e[2] + e[3]; }
    bool is_one() const { return total() == 0; }

    bool divides(const Monomial& o) const {
        for (int i = 0; i < 4; ++i)
            if (e[static_cast<std::size_t>(i)] > o.e[static_cast<std::size_t>(i)]) return false;
        return true;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < 4; ++i) r.e[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)] + o.e[static_cast<std::size_t>(i)];
        return r;
    }
    Monomial operator/(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < 4; ++i) {
            if (e[static_cast<std::size_t>(i)] < o.e[static_cast<std::size_t>(i)])
                throw domain_error("monomial division underflow");
            r.e[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)] - o.e[static_cast<std::size_t>(i)];
        }
        return r;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
};

// Graded lexicographic with x < y < z < t: total degree first, then exponents
// compared from t down to x.  Fixed globally so printed forms are stable.
inline bool grlex_less(const Monomial& a, const Monomial& b) {
    unsigned ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb;
    for (int i = 3; i >= 0; --i)
        if (a.e[static_cast<std::size_t>(i)] != b.e[static_cast<std::size_t>(i)])
            return a.e[static_cast<std::size_t>(i)] < b.e[static_cast<std::size_t>(i)];
    return false;
}

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

// Sparse multivariate polynomial in x, y, z, t over Q(zeta_N).  No zero
// coefficients are stored; terms are kept grlex-descending.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, CycNumber, GrlexGreater>;

    explicit MultiPoly(int conductor) : n_(conductor) {}

    static MultiPoly zero(int conductor) { return MultiPoly(conductor); }
    static MultiPoly constant(const CycNumber& c) {
        MultiPoly p(c.conductor());
        if (!c.is_zero()) p.terms_.emplace(Monomial{}, c);
        return p;
    }
    static MultiPoly constant(int conductor, const BigRational& q) {
        return constant(CycNumber::from_rational(conductor, q));
    }
    static MultiPoly constant(int conductor, long v) {
        return constant(CycNumber::from_int(conductor, v));
    }
    static MultiPoly variable(int conductor, Var v, unsigned power = 1) {
        MultiPoly p(conductor);
        if (power == 0) return one(conductor);
        Monomial m;
        m[v] = power;
        p.terms_.emplace(m, CycNumber::one(conductor));
        return p;
    }
    static MultiPoly one(int conductor) { return constant(conductor, 1); }
    static MultiPoly term(const CycNumber& c, const Monomial& m) {
        MultiPoly p(c.conductor());
        if (!c.is_zero()) p.terms_.emplace(m, c);
        return p;
    }

    int conductor() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    CycNumber constant_value() const {
        if (terms_.empty()) return CycNumber::zero(n_);
        if (!is_constant()) throw domain_error("polynomial is not constant");
        return terms_.begin()->second;
    }

    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.total()));
        return d; // -1 for the zero polynomial
    }
    int degree(Var v) const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[v]));
        return d;
    }
    bool depends_on(Var v) const {
        for (const auto& [m, c] : terms_)
            if (m[v] > 0) return true;
        return false;
    }
    int valuation(Var v) const {
        if (terms_.empty()) throw domain_error("valuation of zero polynomial");
        unsigned val = UINT32_MAX;
        for (const auto& [m, c] : terms_) val = std::min(val, m[v]);
        return static_cast<int>(val);
    }
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        unsigned d = terms_.begin()->first.total();
        for (const auto& [m, c] : terms_)
            if (m.total() != d) return false;
        return true;
    }

    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw domain_error("leading term of zero polynomial");
        return terms_.begin()->first;
    }
    const CycNumber& leading_coefficient() const {
        if (terms_.empty()) throw domain_error("leading term of zero polynomial");
        return terms_.begin()->second;
    }

    CycNumber coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? CycNumber::zero(n_) : it->second;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly operator-() const {
        MultiPoly r(n_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        check_same(a, b);
        MultiPoly r(a);
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        check_same(a, b);
        MultiPoly r(a);
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        check_same(a, b);
        MultiPoly r(a.n_);
        if (a.terms_.empty() || b.terms_.empty()) return r;
        const MultiPoly& small = a.terms_.size() <= b.terms_.size() ? a : b;
        const MultiPoly& large = a.terms_.size() <= b.terms_.size() ? b : a;
        for (const auto& [ms, cs] : small.terms_)
            for (const auto& [ml, cl] : large.terms_) r.add_term(ms * ml, cs * cl);
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const CycNumber& c) {
        if (a.n_ != c.conductor()) throw conductor_mismatch("scalar conductor mismatch");
        MultiPoly r(a.n_);
        if (c.is_zero()) return r;
        for (const auto& [m, cc] : a.terms_) {
            CycNumber prod = cc * c;
            if (!prod.is_zero()) r.terms_.emplace(m, prod);
        }
        return r;
    }
    friend MultiPoly operator*(const CycNumber& c, const MultiPoly& a) { return a * c; }

    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly pow(unsigned e) const {
        MultiPoly acc = one(n_);
        MultiPoly base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    MultiPoly derive(Var v) const {
        MultiPoly r(n_);
        for (const auto& [m, c] : terms_) {
            if (m[v] == 0) continue;
            Monomial dm = m;
            dm[v] -= 1;
            r.add_term(dm, c * CycNumber::from_int(n_, static_cast<long>(m[v])));
        }
        return r;
    }

    // Simultaneous substitution: vars with a non-null entry are replaced, the
    // others stay.  See SubstitutionEngine below for reuse across several
    // polynomials.
    MultiPoly substituted(const std::array<const MultiPoly*, 4>& rep) const;

    MultiPoly substitute(Var v, const MultiPoly& value) const {
        std::array<const MultiPoly*, 4> rep{nullptr, nullptr, nullptr, nullptr};
        rep[static_cast<unsigned>(v)] = &value;
        return substituted(rep);
    }

    MultiPoly substitute(Var v, const CycNumber& value) const {
        // Collect by powers of v: sum_k coeff_k * value^k.
        std::map<unsigned, MultiPoly> slices;
        for (const auto& [m, c] : terms_) {
            Monomial rest = m;
            unsigned k = rest[v];
            rest[v] = 0;
            auto it = slices.find(k);
            if (it == slices.end()) it = slices.emplace(k, MultiPoly(n_)).first;
            it->second.add_term(rest, c);
        }
        MultiPoly r(n_);
        CycNumber p = CycNumber::one(n_);
        unsigned prev = 0;
        for (auto& [k, slice] : slices) {
            for (; prev < k; ++prev) p = p * value;
            r += slice * p;
        }
        return r;
    }

    CycNumber evaluate(const std::array<CycNumber, 4>& point) const {
        for (const auto& p : point)
            if (p.conductor() != n_) throw conductor_mismatch("evaluation conductor mismatch");
        // Power tables per variable.
        std::array<std::vector<CycNumber>, 4> pows;
        for (Var v : all_vars)
            pows[static_cast<unsigned>(v)].push_back(CycNumber::one(n_));
        auto power = [&](Var v, unsigned k) -> const CycNumber& {
            auto& cache = pows[static_cast<unsigned>(v)];
            while (cache.size() <= k) cache.push_back(cache.back() * point[static_cast<unsigned>(v)]);
            return cache[k];
        };
        CycNumber acc = CycNumber::zero(n_);
        for (const auto& [m, c] : terms_) {
            CycNumber term = c;
            for (Var v : all_vars)
                if (m[v] > 0) term = term * power(v, m[v]);
            acc += term;
        }
        return acc;
    }
    CycNumber evaluate_xyz(const CycNumber& x, const CycNumber& y, const CycNumber& z) const {
        return evaluate({x, y, z, CycNumber::zero(n_)});
    }

    // Exact division; throws when the remainder is nonzero.
    MultiPoly exact_div(const MultiPoly& d) const {
        auto q = try_exact_div(d);
        if (!q) throw domain_error("non-exact polynomial division");
        return *q;
    }
    std::optional<MultiPoly> try_exact_div(const MultiPoly& d) const {
        check_same(*this, d);
        if (d.is_zero()) throw domain_error("division by zero polynomial");
        MultiPoly rem(*this), quot(n_);
        const Monomial& dm = d.leading_monomial();
        const CycNumber dcinv = d.leading_coefficient().inverse();
        while (!rem.is_zero()) {
            const Monomial& rm = rem.leading_monomial();
            if (!dm.divides(rm)) return std::nullopt;
            CycNumber qc = rem.leading_coefficient() * dcinv;
            Monomial qm = rm / dm;
            quot.add_term(qm, qc);
            rem -= d.multiplied_by_term(qc, qm);
        }
        return quot;
    }
    bool divides(const MultiPoly& dividend) const { return dividend.try_exact_div(*this).has_value(); }

    MultiPoly multiplied_by_term(const CycNumber& c, const Monomial& m) const {
        MultiPoly r(n_);
        if (c.is_zero()) return r;
        for (const auto& [mm, cc] : terms_) {
            CycNumber prod = cc * c;
            if (!prod.is_zero()) r.terms_.emplace(mm * m, prod);
        }
        return r;
    }

    Monomial monomial_content() const {
        if (terms_.empty()) return Monomial{};
        Monomial m;
        for (int i = 0; i < 4; ++i) m.e[static_cast<std::size_t>(i)] = UINT32_MAX;
        for (const auto& [mm, c] : terms_)
            for (int i = 0; i < 4; ++i)
                m.e[static_cast<std::size_t>(i)] = std::min(m.e[static_cast<std::size_t>(i)], mm.e[static_cast<std::size_t>(i)]);
        return m;
    }
    MultiPoly divide_monomial(const Monomial& m) const {
        MultiPoly r(n_);
        for (const auto& [mm, c] : terms_) r.terms_.emplace(mm / m, c);
        return r;
    }

    // Coefficients as polynomials in the other variables, index = power of v.
    std::vector<MultiPoly> coefficients_in(Var v) const {
        std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(degree(v) + 1, 1)), MultiPoly(n_));
        for (const auto& [m, c] : terms_) {
            Monomial rest = m;
            unsigned k = rest[v];
            rest[v] = 0;
            out[k].add_term(rest, c);
        }
        return out;
    }
    static MultiPoly from_coefficients_in(Var v, const std::vector<MultiPoly>& coeffs, int conductor) {
        MultiPoly r(conductor);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            MultiPoly vk = variable(conductor, v, static_cast<unsigned>(k));
            r += coeffs[k] * vk;
        }
        return r;
    }
    MultiPoly coefficient_of(Var v, unsigned power) const {
        MultiPoly r(n_);
        for (const auto& [m, c] : terms_) {
            if (m[v] != power) continue;
            Monomial rest = m;
            rest[v] = 0;
            r.add_term(rest, c);
        }
        return r;
    }

    // Homogenize with `v` so that every term reaches `target` total degree.
    MultiPoly homogenize(Var v, unsigned target) const {
        MultiPoly r(n_);
        for (const auto& [m, c] : terms_) {
            if (m.total() > target) throw domain_error("homogenization target below degree");
            Monomial hm = m;
            hm[v] += target - m.total();
            r.terms_.emplace(hm, c);
        }
        return r;
    }
    MultiPoly dehomogenize(Var v) const { return substitute(v, CycNumber::one(n_)); }

    // Normalize the grlex-leading coefficient to 1.
    MultiPoly monic() const {
        if (terms_.empty()) return *this;
        return *this * leading_coefficient().inverse();
    }

    // Integer-primitive representative: clears coordinate denominators and
    // divides by the integer content.  Used to keep PRS intermediates small.
    MultiPoly integer_primitive() const {
        if (terms_.empty()) return *this;
        BigInt lcm_den = 1, gcd_num = 0;
        for (const auto& [m, c] : terms_)
            for (const auto& q : c.coords()) {
                if (q == 0) continue;
                lcm_den = boost::multiprecision::lcm(lcm_den, den(q));
            }
        for (const auto& [m, c] : terms_)
            for (const auto& q : c.coords()) {
                if (q == 0) continue;
                gcd_num = boost::multiprecision::gcd(gcd_num, num(q) * (lcm_den / den(q)));
            }
        BigRational scale(lcm_den, gcd_num);
        return *this * CycNumber::from_rational(n_, scale);
    }

    MultiPoly embed(int target) const {
        MultiPoly r(target);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.embed(target));
        return r;
    }

    std::string to_string() const;

    void add_term(const Monomial& m, const CycNumber& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

private:
    static void check_same(const MultiPoly& a, const MultiPoly& b) {
        if (a.n_ != b.n_)
            throw conductor_mismatch("polynomial conductor mismatch: " + std::to_string(a.n_) +
                                     " vs " + std::to_string(b.n_));
    }

    int n_;
    TermMap terms_;
};

// Memoized simultaneous substitution.  Power products of the replacement
// polynomials are shared between calls, which matters when composing the
// three components of a map: the dominant cost is building the monomial
// products once, not three times.
class SubstitutionEngine {
public:
    SubstitutionEngine(int conductor, const std::array<const MultiPoly*, 4>& rep)
        : n_(conductor), rep_(rep) {
        for (const auto* p : rep_)
            if (p && p->conductor() != n_) throw conductor_mismatch("substitution conductor mismatch");
    }

    MultiPoly operator()(const MultiPoly& p) {
        MultiPoly result(n_);
        for (const auto& [m, c] : p.terms()) result += power_product(m) * c;
        return result;
    }

private:
    const MultiPoly& power_product(const Monomial& m) {
        auto it = memo_.find(m);
        if (it != memo_.end()) return it->second;
        if (m.is_one()) return memo_.emplace(m, MultiPoly::one(n_)).first->second;
        Var v = Var::x;
        for (Var vv : all_vars)
            if (m[vv] > 0) {
                v = vv;
                break;
            }
        Monomial prev = m;
        prev[v] -= 1;
        const MultiPoly base = rep_[static_cast<unsigned>(v)]
                                   ? *rep_[static_cast<unsigned>(v)]
                                   : MultiPoly::variable(n_, v);
        MultiPoly value = power_product(prev) * base;
        return memo_.emplace(m, std::move(value)).first->second;
    }

    int n_;
    std::array<const MultiPoly*, 4> rep_;
    std::map<Monomial, MultiPoly, GrlexGreater> memo_;
};

inline MultiPoly MultiPoly::substituted(const std::array<const MultiPoly*, 4>& rep) const {
    SubstitutionEngine engine(n_, rep);
    return engine(*this);
}

inline std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

inline std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.to_string();
        const bool composite = cs.find(' ') != std::string::npos;
        bool negative = false;
        if (!composite && !cs.empty() && cs[0] == '-') {
            negative = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        std::string mono;
        for (Var v : all_vars) {
            if (m[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_name(v);
            if (m[v] > 1) mono += "^" + std::to_string(m[v]);
        }
        if (mono.empty()) {
            os << (composite ? "(" + cs + ")" : cs);
        } else if (composite) {
            os << "(" << cs << ")*" << mono;
        } else if (cs == "1") {
            os << mono;
        } else {
            os << cs << "*" << mono;
        }
    }
    return os.str();
}

} // namespace geiser

#endif
