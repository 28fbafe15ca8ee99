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

#include "geiser/cyclotomic.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace geiser;

TEST(EulerPhi, SmallValues) {
    EXPECT_EQ(euler_phi(1), 1);
    EXPECT_EQ(euler_phi(7), 6);
    EXPECT_EQ(euler_phi(12), 4);
    EXPECT_EQ(euler_phi(84), 24);
}

TEST(CyclotomicPolynomial, KnownCases) {
    // Phi_12 = x^4 - x^2 + 1
    auto p12 = cyclotomic_polynomial(12);
    ASSERT_EQ(p12.size(), 5u);
    EXPECT_EQ(p12[0], 1);
    EXPECT_EQ(p12[1], 0);
    EXPECT_EQ(p12[2], -1);
    EXPECT_EQ(p12[3], 0);
    EXPECT_EQ(p12[4], 1);
    // Phi_7 = 1 + x + ... + x^6
    auto p7 = cyclotomic_polynomial(7);
    ASSERT_EQ(p7.size(), 7u);
    for (auto& c : p7) EXPECT_EQ(c, 1);
    EXPECT_EQ(cyclotomic_polynomial(84).size(), 25u);
}

TEST(CycNumber, PhiVanishesOnZeta) {
    for (int n : {3, 4, 7, 12, 84}) {
        auto phi = cyclotomic_polynomial(n);
        CycNumber z = CycNumber::zeta(n);
        CycNumber acc = CycNumber::zero(n);
        for (std::size_t k = 0; k < phi.size(); ++k)
            acc += CycNumber::from_rational(n, BigRational(phi[k])) * z.pow(static_cast<long>(k));
        EXPECT_TRUE(acc.is_zero()) << "Phi_" << n << "(zeta) != 0";
    }
}

TEST(CycNumber, UnitsInConductor12) {
    const int n = 12;
    CycNumber i = CycNumber::unit_i(n);
    CycNumber j = CycNumber::unit_j(n);
    EXPECT_EQ(i * i, -CycNumber::one(n));
    EXPECT_EQ(j * j * j, CycNumber::one(n));
    // j = zeta^2 - 1 on the power basis.
    CycNumber expect = CycNumber::zeta(n, 2) - CycNumber::one(n);
    EXPECT_EQ(j, expect);
    // (2 zeta - zeta^3)^2 = 3, i.e. sqrt(3) is in the field.
    CycNumber s3 = CycNumber::from_int(n, 2) * CycNumber::zeta(n) - CycNumber::zeta(n, 3);
    EXPECT_EQ(s3 * s3, CycNumber::from_int(n, 3));
    // (zeta^3)^2 = -1.
    EXPECT_EQ(CycNumber::zeta(n, 3) * CycNumber::zeta(n, 3), CycNumber::from_int(n, -1));
}

TEST(CycNumber, FieldAxiomsRandomized) {
    const int n = 12;
    std::mt19937_64 rng(20260811);
    std::uniform_int_distribution<int> coef(-9, 9);
    auto random_elem = [&] {
        CycNumber v = CycNumber::zero(n);
        for (int k = 0; k < 4; ++k)
            v += CycNumber::from_rational(n, BigRational(coef(rng), 1 + std::abs(coef(rng)))) *
                 CycNumber::zeta(n, k);
        return v;
    };
    for (int trial = 0; trial < 50; ++trial) {
        CycNumber a = random_elem(), b = random_elem(), c = random_elem();
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), CycNumber::one(n));
            EXPECT_EQ((a / a), CycNumber::one(n));
        }
    }
}

TEST(CycNumber, DivisionByZeroThrows) {
    const int n = 12;
    EXPECT_THROW(CycNumber::one(n) / CycNumber::zero(n), domain_error);
}

TEST(CycNumber, ConductorMismatchThrows) {
    EXPECT_THROW(CycNumber::one(12) + CycNumber::one(7), conductor_mismatch);
}

TEST(CycNumber, EmbedIntoLargerField) {
    // 1 embeds to 1.
    EXPECT_EQ(CycNumber::one(12).embed(84), CycNumber::one(84));
    // j embeds to zeta_84^28 with cube 1.
    CycNumber j84 = CycNumber::unit_j(12).embed(84);
    EXPECT_EQ(j84, CycNumber::zeta(84, 28));
    EXPECT_EQ(j84 * j84 * j84, CycNumber::one(84));
    EXPECT_NE(j84, CycNumber::one(84));
    // i embeds to zeta_84^21 with square -1.
    CycNumber i84 = CycNumber::unit_i(12).embed(84);
    EXPECT_EQ(i84, CycNumber::zeta(84, 21));
    EXPECT_EQ(i84 * i84, CycNumber::from_int(84, -1));
    // Embedding is a ring homomorphism on random elements.
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int trial = 0; trial < 10; ++trial) {
        CycNumber a = CycNumber::zero(12), b = CycNumber::zero(12);
        for (int k = 0; k < 4; ++k) {
            a += CycNumber::from_int(12, coef(rng)) * CycNumber::zeta(12, k);
            b += CycNumber::from_int(12, coef(rng)) * CycNumber::zeta(12, k);
        }
        EXPECT_EQ((a * b).embed(84), a.embed(84) * b.embed(84));
        EXPECT_EQ((a + b).embed(84), a.embed(84) + b.embed(84));
    }
    EXPECT_THROW(CycNumber::one(12).embed(18), domain_error);
}

TEST(CycNumber, SqrtInField) {
    const int n = 12;
    auto sqrt_of = [&](long v) { return CycNumber::from_int(n, v).sqrt_in_field(); };
    // 4, -1, 3, -3, 12, -27 all have roots in Q(zeta_12).
    for (long v : {4L, -1L, 3L, -3L, 12L, -27L, 0L, 9L}) {
        auto r = sqrt_of(v);
        ASSERT_TRUE(r.has_value()) << "sqrt(" << v << ")";
        EXPECT_EQ(*r * *r, CycNumber::from_int(n, v));
    }
    // 2, 5, -5, 7 do not.
    for (long v : {2L, 5L, -5L, 7L, 6L}) EXPECT_FALSE(sqrt_of(v).has_value()) << v;
    // Rational example: -1/3.
    auto r = CycNumber::from_rational(n, BigRational(-1, 3)).sqrt_in_field();
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r * *r, CycNumber::from_rational(n, BigRational(-1, 3)));
    // sqrt(7) exists in Q(zeta_84) (7 = 3 mod 4, so conductor 28 | 84).
    auto r7 = CycNumber::from_int(84, -7).sqrt_in_field();
    ASSERT_TRUE(r7.has_value());
    EXPECT_EQ(*r7 * *r7, CycNumber::from_int(84, -7));
    // Non-rational input is rejected loudly.
    EXPECT_THROW(CycNumber::zeta(12).sqrt_in_field(), extension_required);
}

TEST(CycNumber, AffineShorthandPrinting) {
    const int n = 12;
    CycNumber j = CycNumber::unit_j(n);
    EXPECT_EQ((j - CycNumber::one(n)).to_string(), "-1 + j");
    // 3 - 2 j^2 = 5 + 2 j: the printer prefers the j-form.
    EXPECT_EQ((CycNumber::from_int(n, 3) - CycNumber::from_int(n, 2) * j * j).to_string(),
              "5 + 2*j");
    EXPECT_EQ((CycNumber::from_rational(n, BigRational(1, 2)) + CycNumber::unit_i(n)).to_string(),
              "1/2 + i");
}

TEST(CycNumber, Printing) {
    const int n = 12;
    EXPECT_EQ(CycNumber::from_int(n, 5).to_string(), "5");
    EXPECT_EQ(CycNumber::from_rational(n, BigRational(-2, 3)).to_string(), "-2/3");
    EXPECT_EQ(CycNumber::unit_i(n).to_string(), "i");
    EXPECT_EQ((-CycNumber::unit_j(n)).to_string(), "-j");
    EXPECT_EQ((CycNumber::from_int(n, 2) * CycNumber::unit_j(n) * CycNumber::unit_j(n)).to_string(),
              "2*j^2");
    EXPECT_EQ(CycNumber::zeta(n).to_string(), "zeta(12)");
    CycNumber v = CycNumber::from_int(n, 2) * CycNumber::zeta(n) - CycNumber::zeta(n, 3);
    EXPECT_EQ(v.to_string(), "2*zeta(12) - zeta(12)^3");
}
