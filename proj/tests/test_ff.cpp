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
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rmsid/ff.hpp"

namespace rmsid {
namespace {

using oracle::oracle_mul;
using oracle::oracle_lowest_irreducible;
using Digits = oracle::Digits;

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kConfigured{{2, 1}, {3, 1}, {5, 1}, {2, 4},
                                                                       {3, 2}, {2, 16}, {3, 10}};

TEST(Field, AdditionExamples) {
    auto f9 = Field::get(3, 2);
    const Symbol a = f9->from_digits(Digits{1, 2});
    const Symbol b = f9->from_digits(Digits{2, 2});
    EXPECT_EQ(f9->digits(f9->add(a, b)), (Digits{0, 1}));
    EXPECT_EQ(f9->add(a, 0), a);

    auto f16 = Field::get(2, 4);
    EXPECT_EQ(f16->add(0b1010, 0b0110), 0b1100u);
}

TEST(Field, MultiplicationExamples) {
    auto f5 = Field::of_order(5);
    EXPECT_EQ(f5->mul(3, 4), 2u);
    for (Symbol a = 0; a < 5; ++a) {
        EXPECT_EQ(f5->mul(a, 1), a);
        EXPECT_EQ(f5->mul(a, 0), 0u);
    }
}

TEST(Field, InverseExamples) {
    EXPECT_EQ(Field::of_order(5)->inv(2), 3u);
    EXPECT_EQ(Field::of_order(5)->inv(1), 1u);
    auto f7 = Field::of_order(7);
    Symbol found = 0;
    for (Symbol c = 1; c < 7; ++c)
        if ((3 * c) % 7 == 1) found = c;
    EXPECT_EQ(found, 5u);
    EXPECT_EQ(f7->inv(3), found);
    try {
        f7->inv(0);
        FAIL() << "inverse of zero";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::division_by_zero);
    }
}

TEST(Field, ModulusIsLowestIrreducible) {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {2, 8}, {7, 2}}) {
        auto f = Field::get(p, m);
        EXPECT_EQ(f->params().irreducible, oracle_lowest_irreducible(p, m)) << f->name();
    }
    EXPECT_EQ(Field::get(2, 4)->params().irreducible, (Digits{1, 1, 0, 0, 1}));
    EXPECT_EQ(Field::get(3, 2)->params().irreducible, (Digits{1, 0, 1}));
}

TEST(Field, RejectsInvalidParameters) {
    EXPECT_THROW(Field::get(4, 1), Error);
    EXPECT_THROW(Field::of_order(6), Error);
    EXPECT_THROW(Field::of_order(1), Error);
    EXPECT_THROW(Field::with_modulus(2, {1, 0, 1}), Error);  // x^2 + 1 = (x + 1)^2
    EXPECT_THROW(Field::with_modulus(3, {1, 0, 2}), Error);  // not monic
    auto f = Field::with_modulus(2, {1, 1, 1});
    EXPECT_EQ(f->size(), 4u);
}

TEST(Field, InterningReturnsOneInstance) {
    EXPECT_EQ(Field::get(3, 10).get(), Field::of_order(59049).get());
    EXPECT_EQ(Field::get(2, 4)->size(), 16u);
}

TEST(Field, MixedFieldsAreRejected) {
    auto f3 = Field::of_order(3);
    auto f5 = Field::of_order(5);
    FieldElement a(*f3, 1), b(*f5, 1);
    EXPECT_THROW((void)(a + b), Error);
    EXPECT_THROW((void)(a * b), Error);
    EXPECT_THROW((void)(a == b), Error);
}

TEST(Field, AxiomsOnConfiguredFields) {
    SeededEntropy rng(11);
    for (auto [p, m] : kConfigured) {
        auto f = Field::get(p, m);
        for (int t = 0; t < 2000; ++t) {
            const Symbol a = sample_symbol(rng, *f), b = sample_symbol(rng, *f), c = sample_symbol(rng, *f);
            ASSERT_EQ(f->add(f->add(a, b), c), f->add(a, f->add(b, c)));
            ASSERT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
            ASSERT_EQ(f->add(a, b), f->add(b, a));
            ASSERT_EQ(f->mul(a, b), f->mul(b, a));
            ASSERT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
            ASSERT_EQ(f->add(a, f->neg(a)), 0u);
            ASSERT_EQ(f->sub(f->add(a, b), b), a);
            if (a != 0) ASSERT_EQ(f->mul(a, f->inv(a)), 1u);
        }
    }
}

TEST(Field, Frobenius) {
    SeededEntropy rng(12);
    for (auto [p, m] : kConfigured) {
        auto f = Field::get(p, m);
        for (int t = 0; t < 500; ++t) {
            const Symbol a = sample_symbol(rng, *f), b = sample_symbol(rng, *f);
            ASSERT_EQ(f->pow(f->add(a, b), p), f->add(f->pow(a, p), f->pow(b, p)));
        }
    }
}

TEST(Field, TablePathMatchesOracleExhaustively) {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81}) {
        auto f = Field::of_order(q);
        const auto& irr = f->params().irreducible;
        for (Symbol a = 0; a < q; ++a)
            for (Symbol b = 0; b < q; ++b) {
                const std::uint64_t expected = oracle_mul(a, b, f->characteristic(), irr);
                ASSERT_EQ(f->mul(a, b), expected) << f->name() << ' ' << a << ' ' << b;
                ASSERT_EQ(f->mul_reference(a, b), expected);
                ASSERT_EQ(f->add(a, b), f->add_reference(a, b));
            }
    }
}

TEST(Field, MultiplicativeOrderExhaustively) {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81}) {
        auto f = Field::of_order(q);
        for (Symbol a = 1; a < q; ++a) ASSERT_EQ(f->pow(a, q - 1), 1u) << f->name();
    }
}

TEST(Field, TablePathMatchesReferenceOnLargeFields) {
    SeededEntropy rng(13);
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 16}, {3, 10}}) {
        auto f = Field::get(p, m);
        ASSERT_TRUE(f->has_tables());
        for (int t = 0; t < 100000; ++t) {
            const Symbol a = sample_symbol(rng, *f), b = sample_symbol(rng, *f);
            ASSERT_EQ(f->mul(a, b), f->mul_reference(a, b));
        }
        for (int t = 0; t < 2000; ++t) {
            const Symbol a = sample_symbol(rng, *f), b = sample_symbol(rng, *f);
            ASSERT_EQ(f->mul(a, b), oracle_mul(a, b, p, f->params().irreducible));
        }
    }
}

TEST(Field, LargeFieldWithoutTables) {
    auto f = Field::get(2, 24);
    EXPECT_FALSE(f->has_tables());
    SeededEntropy rng(14);
    for (int t = 0; t < 2000; ++t) {
        const Symbol a = sample_symbol(rng, *f), b = sample_symbol(rng, *f);
        ASSERT_EQ(f->mul(a, b), f->mul_reference(a, b));
        ASSERT_EQ(f->mul(a, b), oracle_mul(a, b, 2, f->params().irreducible));
        if (a != 0) ASSERT_EQ(f->mul(a, f->inv(a)), 1u);
    }
    auto g = Field::get(1048583, 1);  // prime above the table limit
    EXPECT_FALSE(g->has_tables());
    EXPECT_EQ(g->mul(1048582, 1048582), 1u);
}

TEST(Field, DigitsRoundTrip) {
    auto f = Field::get(3, 4);
    for (Symbol a = 0; a < f->size(); ++a) {
        const auto d = f->digits(a);
        ASSERT_EQ(d.size(), 4u);
        for (auto x : d) ASSERT_LT(x, 3u);
        ASSERT_EQ(f->from_digits(d), a);
    }
}

TEST(Field, DotProduct) {
    auto f3 = Field::of_order(3);
    FieldVector u(*f3, {1, 2}), v(*f3, {2, 2});
    FieldVector zero = FieldVector::zeros(*f3, 2);
    EXPECT_EQ(dot(u, v).value(), 0u);
    EXPECT_EQ(dot(u, zero).value(), 0u);
    auto f7 = Field::of_order(7);
    FieldVector w(*f7, {3, 5, 6});
    for (std::size_t i = 0; i < 3; ++i) {
        FieldVector e = FieldVector::zeros(*f7, 3);
        e.set(i, 1);
        EXPECT_EQ(dot(e, w), w[i]);
    }
    EXPECT_THROW(dot(u, FieldVector::zeros(*f3, 3)), Error);
    EXPECT_THROW(dot(u, FieldVector::zeros(*f7, 2)), Error);
}

TEST(Field, SampleUniformCounterSource) {
    auto f5 = Field::of_order(5);
    ScriptedEntropy rng({0, 1, 2, 3, 4});
    std::vector<int> hits(5, 0);
    for (int i = 0; i < 5; ++i) ++hits[sample_uniform(rng, *f5).value()];
    for (int h : hits) EXPECT_EQ(h, 1);
}

TEST(Field, SampleUniformChiSquare) {
    auto f9 = Field::of_order(9);
    SeededEntropy rng(2024);
    const int draws = 100000;
    std::vector<double> counts(9, 0);
    for (int i = 0; i < draws; ++i) ++counts[sample_uniform(rng, *f9).value()];
    double chi2 = 0;
    for (double c : counts) chi2 += (c - draws / 9.0) * (c - draws / 9.0) / (draws / 9.0);
    EXPECT_LT(chi2, 26.12);  // 99.9% quantile, 8 degrees of freedom
}

TEST(Field, SampleTwoElementField) {
    auto f2 = Field::of_order(2);
    SeededEntropy rng(5);
    int ones = 0;
    for (int i = 0; i < 10000; ++i) ones += static_cast<int>(sample_uniform(rng, *f2).value());
    EXPECT_NEAR(ones / 10000.0, 0.5, 0.02);
}

}  // namespace
}  // namespace rmsid
