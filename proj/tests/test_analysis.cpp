/*
   Copyright 2026 The rmsid Authors

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

#include <cmath>
#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include "rmsid/analysis.hpp"

namespace rmsid {
namespace {

TEST(TotalVariation, Examples) {
    const std::vector<double> p{0.5, 0.5}, q{1, 0}, r{0, 1};
    EXPECT_DOUBLE_EQ(total_variation(p, p), 0);
    EXPECT_DOUBLE_EQ(total_variation(q, r), 2);
    EXPECT_DOUBLE_EQ(total_variation(p, q), 1);
    const std::vector<Rational> a{Rational(1, 3), Rational(2, 3)}, b{Rational(1, 2), Rational(1, 2)};
    EXPECT_EQ(total_variation(a, b), Rational(1, 3));
    const std::vector<double> bad{0.5, 0.5 + 1e-9};
    EXPECT_THROW(total_variation(bad, p), Error);
    EXPECT_THROW(total_variation(p, std::vector<double>{1.0}), Error);
}

TEST(Renyi2, Examples) {
    const std::vector<double> p{0.25, 0.75};
    EXPECT_NEAR(renyi2(p, p), 0, 1e-15);
    const std::vector<double> point{1, 0, 0, 0, 0}, uniform(5, 0.2);
    EXPECT_NEAR(renyi2(point, uniform), std::log2(5.0), 1e-12);
    EXPECT_EQ(renyi2(uniform, point), std::numeric_limits<double>::infinity());
}

TEST(ChannelModel, RowsAreStochastic) {
    for (std::uint64_t q : {2, 3, 5}) {
        for (const auto& w : {ChannelModel::symmetric(q, Rational(1, 8)), ChannelModel::erasure(q, Rational(1, 3)),
                              ChannelModel::identity(q), ChannelModel::uniform_noise(q),
                              ChannelModel::product(ChannelModel::symmetric(q, Rational(1, 4)), 2)}) {
            for (const auto& row : w.rows()) {
                Rational sum = 0;
                for (const auto& v : row) {
                    EXPECT_GE(v, 0);
                    sum += v;
                }
                EXPECT_EQ(sum, 1);
            }
        }
    }
    EXPECT_EQ(ChannelModel::erasure(3, Rational(1, 2)).outputs(), 4u);
    EXPECT_THROW(ChannelModel::symmetric(3, Rational(3, 2)), Error);
}

TEST(ConditionalD2, Examples) {
    EXPECT_NEAR(conditional_d2_uniform(ChannelModel::identity(2)), 1.0, 1e-15);
    EXPECT_NEAR(conditional_d2_uniform(ChannelModel::identity(7)), std::log2(7.0), 1e-12);
    EXPECT_NEAR(conditional_d2_uniform(ChannelModel::uniform_noise(5)), 0.0, 1e-15);
    const std::vector<Rational> uniform3(3, Rational(1, 3));
    // Erasure: q(1 - delta) + delta.
    EXPECT_EQ(conditional_d2_power(ChannelModel::erasure(3, Rational(1, 4)), uniform3), Rational(3 * 3 + 1, 4));
}

TEST(ConditionalD2, ProductAdditivity) {
    for (const Rational& delta : {Rational(0), Rational(1, 8), Rational(1, 4), Rational(1, 2)}) {
        const ChannelModel w = ChannelModel::symmetric(2, delta);
        const std::vector<Rational> u2(2, Rational(1, 2)), u4(4, Rational(1, 4));
        const Rational single = conditional_d2_power(w, u2);
        EXPECT_EQ(conditional_d2_power(ChannelModel::product(w, 2), u4), single * single);
        EXPECT_NEAR(conditional_d2_uniform(ChannelModel::product(w, 2)), 2 * conditional_d2_uniform(w), 1e-12);
    }
}

TEST(ConditionalD2, NonUniformInput) {
    const ChannelModel w = ChannelModel::symmetric(2, Rational(1, 4));
    const std::vector<Rational> input{Rational(1, 4), Rational(3, 4)};
    // P_Y = (1/4 * 3/4 + 3/4 * 1/4, 1/4 * 1/4 + 3/4 * 3/4) = (3/8, 5/8).
    const Rational expected = Rational(1, 4) * (Rational(9, 16) / Rational(3, 8) + Rational(1, 16) / Rational(5, 8)) +
                              Rational(3, 4) * (Rational(1, 16) / Rational(3, 8) + Rational(9, 16) / Rational(5, 8));
    EXPECT_EQ(conditional_d2_power(w, input), expected);
    const std::vector<double> input_d{0.25, 0.75};
    EXPECT_NEAR(conditional_d2(w, input_d), std::log2(to_double(expected)), 1e-12);
}

struct Frozen {
    std::uint64_t q;
    std::uint32_t len;
    Rational delta, max_tv, pairwise, tight_squared, simplified_squared;
};

// Reference values from a separate exact-fraction enumeration.
const std::vector<Frozen> kFrozen{
    {2, 2, Rational(0), Rational(1), Rational(2), Rational(4), Rational(8)},
    {2, 2, Rational(1, 8), Rational(11, 16), Rational(11, 8), Rational(123, 64), Rational(625, 128)},
    {2, 2, Rational(1, 4), Rational(5, 12), Rational(5, 6), Rational(3, 4), Rational(25, 8)},
    {2, 2, Rational(1, 2), Rational(0), Rational(0), Rational(0), Rational(2)},
    {2, 3, Rational(0), Rational(1), Rational(2), Rational(5), Rational(8)},
    {2, 3, Rational(1, 8), Rational(279, 448), Rational(279, 224), Rational(8235, 4096), Rational(15625, 4096)},
    {2, 3, Rational(1, 4), Rational(19, 56), Rational(19, 28), Rational(305, 448), Rational(125, 64)},
    {3, 2, Rational(0), Rational(4, 3), Rational(2), Rational(8), Rational(12)},
    {3, 2, Rational(1, 8), Rational(377, 384), Rational(377, 256), Rational(71825, 16384), Rational(29403, 4096)},
    {3, 2, Rational(1, 4), Rational(65, 96), Rational(65, 64), Rational(2225, 1024), Rational(1083, 256)},
    {3, 2, Rational(1, 2), Rational(5, 24), Rational(5, 16), Rational(17, 64), Rational(27, 16)},
    {3, 2, Rational(2, 3), Rational(0), Rational(0), Rational(0), Rational(4, 3)},
    {3, 3, Rational(0), Rational(4, 3), Rational(2), Rational(80, 9), Rational(12)},
    {3, 3, Rational(1, 8), Rational(673, 768), Rational(673, 512), Rational(9269585, 2359296),
     Rational(2910897, 524288)},
    {3, 3, Rational(1, 4), Rational(665, 1248), Rational(665, 832), Rational(58625, 36864), Rational(20577, 8192)},
    {3, 3, Rational(1, 2), Rational(19, 156), Rational(19, 104), Rational(1085, 7488), Rational(81, 128)},
    {3, 3, Rational(2, 3), Rational(0), Rational(0), Rational(0), Rational(4, 9)},
};

TEST(ExactLeakage, MatchesFrozenReference) {
    for (const auto& c : kFrozen) {
        const SecrecyParams params(Field::of_order(c.q), c.len);
        const LeakageReport r = exact_leakage(params, ChannelModel::symmetric(c.q, c.delta));
        EXPECT_TRUE(r.exact_arithmetic);
        EXPECT_NEAR(r.exact_max_tv, to_double(c.max_tv), 1e-12) << c.q << ' ' << c.len << ' ' << c.delta;
        EXPECT_NEAR(r.exact_pairwise_tv, to_double(c.pairwise), 1e-12);
        EXPECT_NEAR(r.bound_tight, std::min(2.0, std::sqrt(to_double(c.tight_squared))), 1e-9);
        EXPECT_NEAR(r.bound_simplified, std::min(2.0, std::sqrt(to_double(c.simplified_squared))), 1e-9);
        EXPECT_TRUE(r.max_within_tight);
        EXPECT_TRUE(r.pairwise_within_tight);
        EXPECT_TRUE(r.tight_within_simplified);
    }
}

TEST(ExactLeakage, Examples) {
    const SecrecyParams p22(Field::of_order(2), 2);
    EXPECT_EQ(exact_leakage(p22, ChannelModel::uniform_noise(2)).exact_max_tv, 0);
    const LeakageReport id = exact_leakage(p22, ChannelModel::identity(2));
    EXPECT_NEAR(id.exact_max_tv, 1.0, 1e-15);
    EXPECT_NEAR(id.kappa_true, 1.0, 1e-12);
    const LeakageReport bsc = exact_leakage(p22, ChannelModel::symmetric(2, Rational(1, 4)));
    EXPECT_LE(bsc.exact_max_tv, bsc.bound_tight);
}

TEST(ExactLeakage, IdentityEavesdropperClosedForm) {
    for (std::uint64_t q : {2, 3, 4})
        for (std::uint32_t len : {2u, 3u}) {
            const LeakageReport r = exact_leakage(SecrecyParams(Field::of_order(q), len), ChannelModel::identity(q));
            EXPECT_NEAR(r.exact_max_tv, 2 * (1 - 1.0 / q), 1e-12);
            EXPECT_NEAR(r.exact_pairwise_tv, 2, 1e-12);
            EXPECT_NEAR(r.d2_bits, len * std::log2(static_cast<double>(q)), 1e-12);
        }
}

TEST(ExactLeakage, ReportInvariantsAndDegradation) {
    for (std::uint64_t q : {2, 3, 4})
        for (std::uint32_t len : {2u, 3u}) {
            const SecrecyParams params(Field::of_order(q), len);
            double previous = 3;
            for (int i = 0; i <= 8; ++i) {
                const Rational delta = Rational(BigInt(i) * (q - 1), BigInt(8) * q);
                const LeakageReport r = exact_leakage(params, ChannelModel::symmetric(q, delta));
                EXPECT_LE(r.exact_pairwise_tv, 2 * r.exact_max_tv + 1e-12);
                EXPECT_LE(r.exact_max_tv, 2);
                EXPECT_LE(r.exact_max_tv, previous + 1e-12) << q << ' ' << len << ' ' << delta;
                EXPECT_TRUE(r.max_within_tight && r.pairwise_within_tight && r.tight_within_simplified);
                previous = r.exact_max_tv;
            }
            const LeakageReport e = exact_leakage(params, ChannelModel::erasure(q, Rational(1, 2)));
            EXPECT_TRUE(e.max_within_tight && e.pairwise_within_tight && e.tight_within_simplified);
        }
}

TEST(ExactLeakage, FloatingPathAgreesWithExactPath) {
    // q = 5, l' = 3 exceeds the rational budget and runs in double precision.
    const SecrecyParams params(Field::of_order(5), 3);
    const LeakageReport r = exact_leakage(params, ChannelModel::symmetric(5, Rational(1, 2)));
    EXPECT_FALSE(r.exact_arithmetic);
    EXPECT_TRUE(r.max_within_tight && r.pairwise_within_tight && r.tight_within_simplified);
    const LeakageReport id = exact_leakage(params, ChannelModel::identity(5));
    EXPECT_NEAR(id.exact_max_tv, 2 * (1 - 1.0 / 5), 1e-9);
}

TEST(ExactLeakage, RejectsOversizedEnumeration) {
    const SecrecyParams params(Field::of_order(16), 4);
    EXPECT_THROW(exact_leakage(params, ChannelModel::identity(16)), Error);
    EXPECT_THROW(exact_leakage(SecrecyParams(Field::of_order(3), 2), ChannelModel::identity(2)), Error);
}

TEST(ExactIdError, Examples) {
    IdCodeParams params(Field::of_order(5), 1, 2);
    const auto& f = params.field();
    const Identity a(params, FieldVector(f, {1, 2, 3}));
    EXPECT_EQ(exact_id_error(params, a, a), 1);
    const Identity c1(params, FieldVector(f, {1, 0, 0})), c2(params, FieldVector(f, {3, 0, 0}));
    EXPECT_EQ(exact_id_error(params, c1, c2), 0);
    // r^2 - 1 vanishes at r = 1, 4.
    const Identity sq(params, FieldVector(f, {0, 0, 1})), one(params, FieldVector(f, {1, 0, 0}));
    EXPECT_EQ(exact_id_error(params, sq, one), Rational(2, 5));
}

TEST(ExactIdError, AgreesWithTagEvaluation) {
    IdCodeParams params(Field::of_order(7), 2, 3);
    const auto& f = params.field();
    SeededEntropy rng(51);
    for (int t = 0; t < 20; ++t) {
        const Identity a = Identity::random(params, rng), b = Identity::random(params, rng);
        int agree = 0;
        for (Symbol x = 0; x < 7; ++x)
            for (Symbol y = 0; y < 7; ++y)
                agree += evaluate_tag(a, FieldVector(f, {x, y})) == evaluate_tag(b, FieldVector(f, {x, y}));
        EXPECT_EQ(exact_id_error(params, a, b), Rational(agree, 49));
        EXPECT_LE(exact_id_error(params, a, b), Rational(3, 7));
    }
}

TEST(MonomialExponents, GradedDescendingOrder) {
    const auto e = monomial_exponents(2, 2);
    const std::vector<std::vector<std::uint32_t>> expected{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    EXPECT_EQ(e, expected);
    EXPECT_EQ(monomial_exponents(3, 4).size(), 35u);
}

}  // namespace
}  // namespace rmsid
