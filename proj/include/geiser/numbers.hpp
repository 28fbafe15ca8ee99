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

#ifndef GEISER_NUMBERS_HPP
#define GEISER_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace geiser {

// Arbitrary-precision integers and normalized rationals.  cpp_rational keeps
// gcd(num, den) = 1 and den > 0, which is exactly the invariant we need.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Violated mathematical precondition (division by zero, degenerate input, ...).
class domain_error : public error {
public:
    using error::error;
};

class conductor_mismatch : public domain_error {
public:
    using domain_error::domain_error;
};

// A construction needs a square root (or root of unity) that does not live in
// the configured cyclotomic field.
class extension_required : public domain_error {
public:
    using domain_error::domain_error;
};

class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t position)
        : error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

inline BigInt num(const BigRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const BigRational& q) { return boost::multiprecision::denominator(q); }

inline std::string to_string(const BigRational& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

inline std::optional<BigInt> exact_sqrt(const BigInt& n) {
    if (n < 0) return std::nullopt;
    BigInt r = boost::multiprecision::sqrt(n);
    if (r * r != n) return std::nullopt;
    return r;
}

inline std::optional<BigRational> exact_sqrt(const BigRational& q) {
    auto n = exact_sqrt(num(q));
    if (!n) return std::nullopt;
    auto d = exact_sqrt(den(q));
    if (!d) return std::nullopt;
    return BigRational(*n, *d);
}

inline int sign(const BigRational& q) { return q.sign(); }

} // namespace geiser

#endif
