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
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rmsid/wiretap.hpp"

namespace rmsid {
namespace {

using oracle::all_scripts;

TEST(SecrecyParams, Validation) {
    auto f = Field::of_order(3);
    EXPECT_THROW(SecrecyParams(f, 1), Error);
    EXPECT_THROW(SecrecyParams(f, 2, 1.0), Error);
    EXPECT_THROW(SecrecyParams(f, 2, -0.1), Error);
    EXPECT_THROW(SecrecyParams(f, 2, 0.0, 0.0), Error);
    EXPECT_THROW(SecrecyParams(f, 2, 0.0, 2.5), Error);
    EXPECT_NO_THROW(SecrecyParams(f, 2, 0.99, 2.0));
}

TEST(SeedSpace, Counts) {
    EXPECT_EQ(normalized_vector_count(2, 3), 7);
    EXPECT_EQ(normalized_vector_count(2, 3) * 2, 14);
    EXPECT_EQ(normalized_vector_count(3, 2), 4);
    EXPECT_EQ(pivot_probability(2, 3, 3), Rational(4, 7));
    for (std::uint64_t q : {2, 3, 4, 5})
        for (std::uint32_t len = 2; len <= 4; ++len)
            EXPECT_EQ(BigInt(oracle::normalized_vectors(q, len).size()), normalized_vector_count(q, len));
}

TEST(SeedSampler, SymbolicMassIsUniform) {
    struct Case {
        std::uint64_t q;
        std::uint32_t len;
    };
    for (auto c : std::vector<Case>{{3, 2}, {2, 3}, {2, 2}, {4, 2}, {3, 3}}) {
        auto f = Field::of_order(c.q);
        const SecrecyParams params(f, c.len);
        const auto mass = oracle::sampler_mass(params);
        const auto seeds = oracle::all_seeds(*f, c.len);
        const Rational expected(BigInt(1), normalized_vector_count(c.q, c.len) * c.q);
        EXPECT_EQ(mass.first_attempt.size(), seeds.size());
        Rational total = 0;
        for (const auto& seed : seeds) {
            EXPECT_EQ(mass.probability(oracle::key_of(seed)), expected) << c.q << ' ' << c.len;
            total += mass.probability(oracle::key_of(seed));
        }
        EXPECT_EQ(total, 1);
        // Pivot marginal.
        for (std::uint32_t i = 1; i <= c.len; ++i) {
            Rational pivot_mass = 0;
            for (const auto& seed : seeds)
                if (seed.pivot == i) pivot_mass += mass.probability(oracle::key_of(seed));
            EXPECT_EQ(pivot_mass, pivot_probability(c.q, c.len, i));
        }
    }
}

TEST(SeedSampler, OutputsAreNormalized) {
    SeededEntropy rng(41);
    const SecrecyParams params(Field::get(3, 10), 5);
    for (int t = 0; t < 1000; ++t) EXPECT_NO_THROW(validate_seed(sample_seed(rng, params)));
}

TEST(Seed, ValidationRejectsMalformed) {
    auto f = Field::of_order(3);
    EXPECT_THROW(validate_seed({FieldVector(*f, {2, 1}), FieldElement(*f, 0), 1}), Error);
    EXPECT_THROW(validate_seed({FieldVector(*f, {2, 2}), FieldElement(*f, 0), 2}), Error);
    EXPECT_THROW(validate_seed({FieldVector(*f, {1, 0}), FieldElement(*f, 0), 3}), Error);
    EXPECT_NO_THROW(validate_seed({FieldVector(*f, {1, 0}), FieldElement(*f, 0), 1}));
}

TEST(Encryption, HandExample) {
    auto f = Field::of_order(3);
    const Seed seed{FieldVector(*f, {2, 1}), FieldElement(*f, 1), 2};
    ScriptedEntropy rng({1});
    const Ciphertext x = encrypt(seed, FieldElement(*f, 0), rng);
    EXPECT_EQ(x.x, FieldVector(*f, {1, 0}));
    EXPECT_EQ(decrypt(seed, x).value(), 0u);
    // Unit vector at the pivot with s0 = 0 reads the pivot coordinate.
    const Seed unit{FieldVector(*f, {0, 1}), FieldElement(*f, 0), 2};
    EXPECT_EQ(decrypt(unit, Ciphertext{FieldVector(*f, {2, 1})}).value(), 1u);
}

TEST(Encryption, ExhaustiveRoundTripAndPreimageUniformity) {
    for (std::uint64_t q : {2, 3, 4})
        for (std::uint32_t len : {2u, 3u}) {
            auto f = Field::of_order(q);
            const auto scripts = all_scripts(*f, len - 1);
            for (const auto& seed : oracle::all_seeds(*f, len)) {
                std::vector<std::uint64_t> marginal;
                for (Symbol m = 0; m < q; ++m) {
                    std::set<std::vector<Symbol>> hits;
                    for (const auto& script : scripts) {
                        ScriptedEntropy rng(script);
                        const Ciphertext x = encrypt(seed, FieldElement(*f, m), rng);
                        ASSERT_EQ(rng.consumed(), script.size());
                        ASSERT_EQ(decrypt(seed, x).value(), m);
                        hits.insert({x.x.values().begin(), x.x.values().end()});
                    }
                    ASSERT_EQ(hits.size(), scripts.size());
                    ASSERT_EQ(BigInt(hits.size()), big_pow(q, len - 1));
                }
            }
        }
}

TEST(Encryption, CiphertextMarginalOverSeedsIsUniform) {
    for (std::uint64_t q : {2, 3})
        for (std::uint32_t len : {2u, 3u}) {
            auto f = Field::of_order(q);
            const auto scripts = all_scripts(*f, len - 1);
            const auto seeds = oracle::all_seeds(*f, len);
            for (Symbol m = 0; m < q; ++m) {
                std::map<std::vector<Symbol>, int> counts;
                for (const auto& seed : seeds)
                    for (const auto& script : scripts) {
                        ScriptedEntropy rng(script);
                        const Ciphertext x = encrypt(seed, FieldElement(*f, m), rng);
                        ++counts[{x.x.values().begin(), x.x.values().end()}];
                    }
                ASSERT_EQ(BigInt(counts.size()), big_pow(q, len));
                const int expected = static_cast<int>(seeds.size() * scripts.size() / counts.size());
                for (const auto& [x, c] : counts) ASSERT_EQ(c, expected);
            }
        }
}

TEST(Encryption, LengthMismatch) {
    auto f = Field::of_order(3);
    const Seed seed{FieldVector(*f, {2, 1}), FieldElement(*f, 1), 2};
    EXPECT_THROW(decrypt(seed, Ciphertext{FieldVector(*f, {1, 0, 0})}), Error);
}

TEST(LeakageBound, Examples) {
    const SecrecyParams p32(Field::of_order(3), 2);
    const LeakageBound zero = leakage_bound(p32, 0);
    EXPECT_EQ(zero.tight, 0);
    EXPECT_NEAR(zero.simplified, 2 / std::sqrt(3.0), 1e-12);
    EXPECT_NEAR(zero.simplified, 1.1547, 1e-4);
    const LeakageBound noiseless = leakage_bound(p32, 2 * std::log2(3.0));
    EXPECT_EQ(noiseless.simplified, 2);
    EXPECT_THROW(leakage_bound(p32, -0.1), Error);
    EXPECT_THROW(leakage_bound(p32, 2 * std::log2(3.0) + 0.01), Error);
}

TEST(LeakageBound, MatchesDirectFormulaAndDominance) {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 9, 59049})
        for (std::uint32_t len = 2; len <= 6; ++len) {
            const SecrecyParams params(Field::of_order(q), len);
            const double lq = std::log2(static_cast<double>(q));
            const double a = to_double(tight_bound_factor(q, len));
            const double direct_a = (std::pow(q, len) - std::pow(q, len - 1) + std::pow(q, len - 2) - 1) /
                                    ((std::pow(q, len) - 1) * std::pow(q, len - 1));
            ASSERT_NEAR(a, direct_a, 1e-12 * direct_a);
            for (int step = 0; step <= 20; ++step) {
                const double d2 = len * lq * step / 20;
                const LeakageBound b = leakage_bound(params, d2);
                ASSERT_NEAR(b.tight, std::min(2.0, 2 * std::sqrt(direct_a * (std::exp2(d2) - 1))), 1e-9);
                ASSERT_NEAR(b.simplified, std::min(2.0, 2 * std::sqrt(std::exp2(d2) / std::pow(q, len - 1))), 1e-9);
                ASSERT_LE(b.tight, b.simplified + 1e-12);
            }
        }
}

TEST(MinCipherLength, ReferencePoint) {
    const CipherLength c = min_cipher_length(59049, 0.0, 0.85e-3);
    EXPECT_EQ(c.ell_prime, 3u);
    // (2 + log2 q + 2 log2(1/eps)) / log2 q with q = 3^10, eps = 0.00085.
    const double lq = 10 * std::log2(3.0);
    EXPECT_NEAR(c.real_bound, (2 + lq + 2 * std::log2(1 / 0.85e-3)) / lq, 1e-12);
    EXPECT_NEAR(c.real_bound, 2.41331, 1e-5);
}

TEST(MinCipherLength, KappaSweep) {
    const std::vector<std::pair<double, std::uint32_t>> expected{{0, 3},   {0.1, 3}, {0.2, 4}, {0.3, 4},
                                                                 {0.4, 5}, {0.5, 5}, {0.6, 7}, {0.7, 9},
                                                                 {0.8, 13}, {0.9, 25}, {0.99, 242}};
    std::uint32_t previous = 0;
    for (auto [kappa, len] : expected) {
        const std::uint32_t got = min_cipher_length(59049, kappa, 0.85e-3).ell_prime;
        EXPECT_EQ(got, len) << kappa;
        EXPECT_GE(got, previous);
        previous = got;
    }
    EXPECT_THROW(min_cipher_length(59049, 1.0, 0.85e-3), Error);
    EXPECT_THROW(min_cipher_length(59049, 0.0, 0.0), Error);
}

TEST(MinCipherLength, FloorAtTwo) {
    const CipherLength c = min_cipher_length(59049, 0.0, 1.0);
    EXPECT_LT(c.real_bound, 2);
    EXPECT_EQ(c.ell_prime, 2u);
}

TEST(MinCipherLength, FeedsBackIntoBound) {
    for (std::uint64_t q : {2, 3, 16, 59049, 65536})
        for (double eps : {1.0, 0.5, 1e-3, 0.85e-3, 1e-6})
            for (int i = 0; i < 20; ++i) {
                const double kappa = i * 0.05;
                const CipherLength c = min_cipher_length(q, kappa, eps);
                const SecrecyParams params(Field::of_order(q), c.ell_prime, kappa);
                const double d2 = kappa * c.ell_prime * std::log2(static_cast<double>(q));
                ASSERT_LE(leakage_bound(params, d2).simplified, eps * (1 + 1e-12)) << q << ' ' << eps << ' ' << kappa;
                if (c.ell_prime > 2) {
                    const SecrecyParams shorter(Field::of_order(q), c.ell_prime - 1, kappa);
                    const double d2s = kappa * (c.ell_prime - 1) * std::log2(static_cast<double>(q));
                    ASSERT_GT(leakage_bound(shorter, d2s).simplified, eps * (1 - 1e-12));
                }
            }
}

TEST(BudgetSplit, Examples) {
    EXPECT_DOUBLE_EQ(split_leakage_budget(0.3, 1), 0.3);
    EXPECT_NEAR(split_leakage_budget(1e-4, 2), 1e-2, 1e-15);
    EXPECT_NEAR(split_leakage_budget(1e-4, 2, BudgetPolicy::additive), 5e-5, 1e-18);
    EXPECT_DOUBLE_EQ(split_leakage_budget(0.3, 1, BudgetPolicy::additive), 0.3);
    EXPECT_THROW(split_leakage_budget(0.3, 0), Error);
    EXPECT_EQ(parse_budget_policy("additive"), BudgetPolicy::additive);
    EXPECT_THROW(parse_budget_policy("other"), Error);
}

TEST(TagEncryption, RoundTrip) {
    auto f = Field::of_order(5);
    const SecrecyParams params(f, 3);
    SeededEntropy rng(42);
    for (std::uint32_t n = 0; n <= 4; ++n) {
        MultiChallenge mc;
        std::vector<Seed> seeds;
        for (std::uint32_t i = 0; i < n; ++i) {
            mc.challenges.push_back({FieldVector(*f, {static_cast<Symbol>(i % 5)}), sample_uniform(rng, *f)});
            seeds.push_back(sample_seed(rng, params));
        }
        const auto xs = encrypt_tags(mc, seeds, rng);
        ASSERT_EQ(xs.size(), n);
        const auto tags = decrypt_tags(xs, seeds);
        for (std::uint32_t i = 0; i < n; ++i) ASSERT_EQ(tags[i], mc.challenges[i].tag);
        if (n > 0) {
            seeds.pop_back();
            EXPECT_THROW(encrypt_tags(mc, seeds, rng), Error);
            EXPECT_THROW(decrypt_tags(xs, seeds), Error);
        }
    }
}

}  // namespace
}  // namespace rmsid
