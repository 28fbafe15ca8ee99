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

#ifndef GEISER_CYCLOTOMIC_HPP
#define GEISER_CYCLOTOMIC_HPP

#include "geiser/numbers.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <vector>

namespace geiser {

inline int euler_phi(int n) {
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace detail {

// Dense univariate polynomials, index = exponent.  Only used for building
// cyclotomic polynomials and for inversion modulo Phi_N.
using ZPoly = std::vector<BigInt>;
using QPoly = std::vector<BigRational>;

inline void zp_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline void qp_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials, divisor monic-leading.
inline ZPoly zp_exact_div(ZPoly a, const ZPoly& b) {
    ZPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, BigInt(0));
    while (a.size() >= b.size()) {
        BigInt lc = a.back();
        if (lc % b.back() != 0) throw domain_error("non-exact polynomial division");
        BigInt coef = lc / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = coef;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= coef * b[i];
        zp_trim(a);
        if (a.empty()) break;
    }
    if (!a.empty()) throw domain_error("non-exact polynomial division");
    return q;
}

inline QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qp_trim(r);
    return r;
}

inline QPoly qp_sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), BigRational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qp_trim(a);
    return a;
}

// a mod b and quotient, over Q, b nonzero.
inline std::pair<QPoly, QPoly> qp_divmod(QPoly a, const QPoly& b) {
    QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, BigRational(0));
    while (a.size() >= b.size() && !a.empty()) {
        BigRational coef = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = coef;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= coef * b[i];
        qp_trim(a);
    }
    return {q, a};
}

} // namespace detail

// Phi_n as a dense integer polynomial, via Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d.
inline detail::ZPoly cyclotomic_polynomial(int n) {
    if (n <= 0) throw domain_error("conductor must be positive");
    std::vector<detail::ZPoly> phi(static_cast<std::size_t>(n) + 1);
    for (int m = 1; m <= n; ++m) {
        if (n % m != 0) continue;
        detail::ZPoly f(static_cast<std::size_t>(m) + 1, BigInt(0));
        f[0] = -1;
        f[static_cast<std::size_t>(m)] = 1; // x^m - 1
        for (int d = 1; d < m; ++d)
            if (m % d == 0) f = detail::zp_exact_div(f, phi[static_cast<std::size_t>(d)]);
        phi[static_cast<std::size_t>(m)] = f;
    }
    return phi[static_cast<std::size_t>(n)];
}

struct CycContext {
    int n = 0;
    int deg = 0;                       // phi(n)
    detail::ZPoly phi;                 // monic, degree deg
    std::vector<std::vector<BigInt>> zeta_pow; // zeta^k reduced, k in [0, 2deg-2]

    static std::shared_ptr<const CycContext> get(int n) {
        static std::mutex mtx;
        static std::map<int, std::shared_ptr<const CycContext>> cache;
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
        auto ctx = std::make_shared<CycContext>();
        ctx->n = n;
        ctx->phi = cyclotomic_polynomial(n);
        ctx->deg = static_cast<int>(ctx->phi.size()) - 1;
        const int d = ctx->deg;
        ctx->zeta_pow.resize(static_cast<std::size_t>(2 * d - 1));
        for (int k = 0; k < d; ++k) {
            std::vector<BigInt> e(static_cast<std::size_t>(d), BigInt(0));
            e[static_cast<std::size_t>(k)] = 1;
            ctx->zeta_pow[static_cast<std::size_t>(k)] = std::move(e);
        }
        for (int k = d; k <= 2 * d - 2; ++k) {
            // zeta^k = zeta * zeta^(k-1), reduced: shift then subtract lead * phi.
            std::vector<BigInt> e(static_cast<std::size_t>(d), BigInt(0));
            const auto& prev = ctx->zeta_pow[static_cast<std::size_t>(k - 1)];
            for (int i = 0; i < d - 1; ++i) e[static_cast<std::size_t>(i + 1)] = prev[static_cast<std::size_t>(i)];
            const BigInt lead = prev[static_cast<std::size_t>(d - 1)];
            if (lead != 0)
                for (int i = 0; i < d; ++i) e[static_cast<std::size_t>(i)] -= lead * ctx->phi[static_cast<std::size_t>(i)];
            ctx->zeta_pow[static_cast<std::size_t>(k)] = std::move(e);
        }
        cache.emplace(n, ctx);
        return ctx;
    }
};

// An element of Q(zeta_N) on the power basis 1, zeta, ..., zeta^(phi(N)-1).
// Always kept reduced modulo Phi_N, so equality is coordinate-wise.
class CycNumber {
public:
    explicit CycNumber(int conductor)
        : n_(conductor), c_(static_cast<std::size_t>(CycContext::get(conductor)->deg), BigRational(0)) {}

    static CycNumber from_rational(int conductor, const BigRational& q) {
        CycNumber r(conductor);
        r.c_[0] = q;
        return r;
    }
    static CycNumber from_int(int conductor, long v) { return from_rational(conductor, BigRational(v)); }
    static CycNumber zero(int conductor) { return CycNumber(conductor); }
    static CycNumber one(int conductor) { return from_int(conductor, 1); }

    static CycNumber zeta(int conductor, long power = 1) {
        auto ctx = CycContext::get(conductor);
        long k = power % conductor;
        if (k < 0) k += conductor;
        if (ctx->deg == 1) return from_int(conductor, conductor == 2 && k == 1 ? -1 : 1);
        CycNumber r(conductor);
        if (k < ctx->deg) {
            r.c_[static_cast<std::size_t>(k)] = 1;
            return r;
        }
        // zeta^k with k >= deg: square-and-multiply on zeta.
        CycNumber acc = one(conductor);
        CycNumber base(conductor);
        base.c_[1] = 1;
        long e = k;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    // i = zeta_N^(N/4); requires 4 | N.
    static CycNumber unit_i(int conductor) {
        if (conductor % 4 != 0)
            throw extension_required("i is not representable in Q(zeta_" + std::to_string(conductor) + ")");
        return zeta(conductor, conductor / 4);
    }

    // j = e^(2 pi i / 3) = zeta_N^(N/3); requires 3 | N.
    static CycNumber unit_j(int conductor) {
        if (conductor % 3 != 0)
            throw extension_required("j is not representable in Q(zeta_" + std::to_string(conductor) + ")");
        return zeta(conductor, conductor / 3);
    }

    int conductor() const { return n_; }
    const std::vector<BigRational>& coords() const { return c_; }

    bool is_zero() const {
        for (const auto& q : c_)
            if (q != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    const BigRational& rational_value() const {
        if (!is_rational()) throw domain_error("value is not rational");
        return c_[0];
    }
    bool is_one() const { return is_rational() && c_[0] == 1; }

    friend bool operator==(const CycNumber& a, const CycNumber& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }
    friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

    CycNumber operator-() const {
        CycNumber r(*this);
        for (auto& q : r.c_) q = -q;
        return r;
    }

    friend CycNumber operator+(const CycNumber& a, const CycNumber& b) {
        check_same(a, b);
        CycNumber r(a);
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend CycNumber operator-(const CycNumber& a, const CycNumber& b) {
        check_same(a, b);
        CycNumber r(a);
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
        return r;
    }
    friend CycNumber operator*(const CycNumber& a, const CycNumber& b) {
        check_same(a, b);
        if (a.is_rational()) {
            if (a.c_[0] == 0) return zero(a.n_);
            CycNumber r(b);
            for (auto& q : r.c_) q *= a.c_[0];
            return r;
        }
        if (b.is_rational()) return b * a;
        auto ctx = CycContext::get(a.n_);
        const std::size_t d = a.c_.size();
        std::vector<BigRational> conv(2 * d - 1, BigRational(0));
        for (std::size_t i = 0; i < d; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (b.c_[j] == 0) continue;
                conv[i + j] += a.c_[i] * b.c_[j];
            }
        }
        CycNumber r(a.n_);
        for (std::size_t k = 0; k < conv.size(); ++k) {
            if (conv[k] == 0) continue;
            if (k < d) {
                r.c_[k] += conv[k];
            } else {
                const auto& red = ctx->zeta_pow[k];
                for (std::size_t i = 0; i < d; ++i)
                    if (red[i] != 0) r.c_[i] += conv[k] * red[i];
            }
        }
        return r;
    }

    CycNumber inverse() const {
        if (is_zero()) throw domain_error("division by zero in Q(zeta_" + std::to_string(n_) + ")");
        if (is_rational()) return from_rational(n_, BigRational(1) / c_[0]);
        // Extended Euclid over Q[X] against Phi_N: u*a + v*Phi = 1.
        auto ctx = CycContext::get(n_);
        detail::QPoly a(c_.begin(), c_.end());
        detail::qp_trim(a);
        detail::QPoly b(ctx->phi.size());
        for (std::size_t i = 0; i < ctx->phi.size(); ++i) b[i] = BigRational(ctx->phi[i]);
        detail::QPoly r0 = b, r1 = a;
        detail::QPoly s0 = {}, s1 = {BigRational(1)}; // coefficients of `a`
        while (!r1.empty() && r1.size() > 1) {
            auto [q, r2] = detail::qp_divmod(r0, r1);
            detail::QPoly s2 = detail::qp_sub(s0, detail::qp_mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r1.empty()) throw domain_error("element not invertible (Phi_N not coprime?)");
        // r1 is a nonzero constant: u = s1 / r1.
        CycNumber inv(n_);
        for (std::size_t i = 0; i < s1.size(); ++i) inv.c_[i] = s1[i] / r1[0];
        return inv;
    }

    friend CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inverse(); }

    CycNumber& operator+=(const CycNumber& o) { return *this = *this + o; }
    CycNumber& operator-=(const CycNumber& o) { return *this = *this - o; }
    CycNumber& operator*=(const CycNumber& o) { return *this = *this * o; }
    CycNumber& operator/=(const CycNumber& o) { return *this = *this / o; }

    CycNumber pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        CycNumber acc = one(n_);
        CycNumber base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    // Image under zeta_n -> zeta_target^(target/n); requires n | target.
    CycNumber embed(int target) const {
        if (target == n_) return *this;
        if (target % n_ != 0)
            throw domain_error("conductor " + std::to_string(n_) + " does not divide " + std::to_string(target));
        const long step = target / n_;
        CycNumber r = zero(target);
        CycNumber zk = one(target);
        const CycNumber zstep = zeta(target, step);
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] != 0) r += from_rational(target, c_[k]) * zk;
            zk = zk * zstep;
        }
        return r;
    }

    // Exact square root inside Q(zeta_N) for rational values.  Returns empty
    // when the value is a rational with no square root in the field; throws
    // extension_required for non-rational values (no such constant shows up
    // in any construction this library performs).
    std::optional<CycNumber> sqrt_in_field() const;

    std::string to_string() const;

    // Raw power-basis coordinates as comma-separated fractions.
    std::string coords_string() const {
        std::string out = "(";
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (k > 0) out += ", ";
            out += geiser::to_string(c_[k]);
        }
        return out + ")";
    }

private:
    static void check_same(const CycNumber& a, const CycNumber& b) {
        if (a.n_ != b.n_)
            throw conductor_mismatch("conductor mismatch: " + std::to_string(a.n_) + " vs " + std::to_string(b.n_));
    }

    int n_;
    std::vector<BigRational> c_;
};

namespace detail {

inline int legendre_symbol(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    long result = 1, base = a, e = (p - 1) / 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result == 1 ? 1 : -1;
}

// Quadratic Gauss sum: squares to p for p = 1 mod 4, to -p for p = 3 mod 4.
inline CycNumber gauss_sum(int conductor, long p) {
    CycNumber g = CycNumber::zero(conductor);
    for (long a = 1; a < p; ++a) {
        CycNumber term = CycNumber::zeta(conductor, a * (conductor / p));
        if (legendre_symbol(a, p) < 0) term = -term;
        g += term;
    }
    return g;
}

// Conductor of Q(sqrt(d)) for square-free d != 0, 1.
inline long quadratic_field_conductor(long d) {
    long m = d >= 0 ? d : -d;
    long r = ((d % 4) + 4) % 4;
    return r == 1 ? m : 4 * m;
}

} // namespace detail

inline std::optional<CycNumber> CycNumber::sqrt_in_field() const {
    if (is_zero()) return zero(n_);
    if (!is_rational())
        throw extension_required("square root of non-rational constant " + to_string() +
                                 " is not supported");
    const BigRational q = c_[0];
    // Candidate square-free parts d: built from -1, 2 and the odd primes
    // dividing N (only those can have sqrt(d) in Q(zeta_N)).
    std::vector<long> odd_primes;
    int m = n_;
    while (m % 2 == 0) m /= 2;
    for (int p = 3; p * p <= m; p += 2)
        if (m % p == 0) {
            odd_primes.push_back(p);
            while (m % p == 0) m /= p;
        }
    if (m > 1) odd_primes.push_back(m);
    std::vector<long> candidates;
    const std::size_t subsets = std::size_t(1) << odd_primes.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        long base = 1;
        for (std::size_t i = 0; i < odd_primes.size(); ++i)
            if (mask & (std::size_t(1) << i)) base *= odd_primes[i];
        for (long two : {1L, 2L})
            for (long s : {1L, -1L}) candidates.push_back(s * two * base);
    }
    for (long d : candidates) {
        if (d != 1 && detail::quadratic_field_conductor(d) != 0 && n_ % detail::quadratic_field_conductor(d) != 0)
            continue;
        auto root = exact_sqrt(q / d);
        if (!root) continue;
        // Build sqrt(d) explicitly, then verify.
        CycNumber sd = one(n_);
        long dd = d;
        if (dd < 0) dd = -dd;
        if (dd % 2 == 0) {
            // sqrt(2) = zeta_8 + zeta_8^-1; requires 8 | N (guaranteed by conductor test).
            sd = sd * (zeta(n_, n_ / 8) + zeta(n_, 7L * (n_ / 8)));
            dd /= 2;
        }
        for (long p : odd_primes)
            if (dd % p == 0) sd = sd * detail::gauss_sum(n_, p);
        // sd^2 = +-|d'|; correct the sign with i when needed.
        CycNumber target = from_rational(n_, BigRational(d));
        if (sd * sd != target) {
            if (n_ % 4 != 0) continue;
            sd = sd * unit_i(n_);
            if (sd * sd != target) continue;
        }
        CycNumber result = from_rational(n_, *root) * sd;
        if (result * result == *this) return result;
    }
    return std::nullopt;
}

inline std::string CycNumber::to_string() const {
    if (is_rational()) return geiser::to_string(c_[0]);
    // Shorthands r*i, r*j, r*j^2 when exact.
    auto try_unit = [&](const CycNumber& unit, const std::string& name) -> std::optional<std::string> {
        // this = r * unit?
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (unit.c_[k] == 0) continue;
            BigRational r = c_[k] / unit.c_[k];
            CycNumber cand = from_rational(n_, r) * unit;
            if (cand == *this) {
                if (r == 1) return name;
                if (r == -1) return "-" + name;
                return geiser::to_string(r) + "*" + name;
            }
            break;
        }
        return std::nullopt;
    };
    auto try_affine = [&](const CycNumber& unit, const std::string& name) -> std::optional<std::string> {
        // this = a + b * unit with rational a, b?
        for (std::size_t k = 1; k < c_.size(); ++k) {
            if (unit.c_[k] == 0) continue;
            BigRational b = c_[k] / unit.c_[k];
            if (b == 0) break;
            CycNumber rest = *this - from_rational(n_, b) * unit;
            if (!rest.is_rational() || rest.c_[0] == 0) break;
            std::string out = geiser::to_string(rest.c_[0]);
            out += (b < 0) ? " - " : " + ";
            BigRational babs = b < 0 ? -b : b;
            if (babs != 1) out += geiser::to_string(babs) + "*";
            out += name;
            return out;
        }
        return std::nullopt;
    };
    if (n_ % 4 == 0) {
        if (auto s = try_unit(unit_i(n_), "i")) return *s;
    }
    if (n_ % 3 == 0) {
        const CycNumber j = unit_j(n_);
        if (auto s = try_unit(j, "j")) return *s;
        if (auto s = try_unit(j * j, "j^2")) return *s;
    }
    if (n_ % 4 == 0) {
        if (auto s = try_affine(unit_i(n_), "i")) return *s;
    }
    if (n_ % 3 == 0) {
        // a + b j^2 rewrites as (a - b) - b j, so the j-form subsumes it.
        if (auto s = try_affine(unit_j(n_), "j")) return *s;
    }
    // General form: polynomial in zeta(N).
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        BigRational coef = c_[k];
        if (first) {
            if (coef < 0) {
                os << "-";
                coef = -coef;
            }
            first = false;
        } else {
            os << (coef < 0 ? " - " : " + ");
            if (coef < 0) coef = -coef;
        }
        const bool has_zeta = k > 0;
        if (coef != 1 || !has_zeta) {
            os << geiser::to_string(coef);
            if (has_zeta) os << "*";
        }
        if (has_zeta) {
            os << "zeta(" << n_ << ")";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const CycNumber& c) { return os << c.to_string(); }

} // namespace geiser

#endif
