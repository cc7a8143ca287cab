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

#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "rmsid/bench.hpp"
#include "rmsid/plan.hpp"

namespace rmsid {
namespace {

TEST(Plan, ComposesModuleOperations) {
    auto f = Field::of_order(5);
    const PlanReport p = plan(f, 1, 2, 0.0);
    const IdCodeParams base(f, 1, 2);
    const RsErrorQuote rs = epsilon_2rs(base);
    const std::uint32_t n = required_rm_challenges(base);
    const double budget = split_leakage_budget(to_double(rs.error), n);
    const CipherLength len = min_cipher_length(5, 0.0, budget);
    EXPECT_EQ(p.rs.error, rs.error);
    EXPECT_EQ(p.rs.params, rs.params);
    EXPECT_EQ(p.n_challenges, n);
    EXPECT_EQ(p.id_params.n_challenges(), n);
    EXPECT_DOUBLE_EQ(p.per_challenge_budget, budget);
    EXPECT_EQ(p.length.ell_prime, len.ell_prime);
    EXPECT_EQ(p.plain_symbols, 2u * n);
    EXPECT_EQ(p.secret_symbols, (1u + len.ell_prime) * n);
    EXPECT_DOUBLE_EQ(p.identity_bits, code_size_bits(base));
    EXPECT_EQ(p.rm_error, error_bound(base.with_challenges(n)));
}

TEST(Plan, ParameterGridSnapshot) {
    const PlanReport p = plan(Field::get(3, 10), 2, 20, 0.2);
    EXPECT_EQ(p.rs.params.k_in(), 3u);
    EXPECT_EQ(p.rs.params.k_out(), 77);
    EXPECT_NEAR(to_double(p.rs.error), 3.387017598598769e-05, 1e-18);
    EXPECT_EQ(p.n_challenges, 2u);
    EXPECT_EQ(p.rm_error, Rational(400, 3486784401));
    EXPECT_NEAR(p.per_challenge_budget, 0.005819808930367705, 1e-15);
    EXPECT_EQ(p.length.ell_prime, 3u);
    EXPECT_NEAR(p.length.real_bound, 2.5788662179564255, 1e-12);
    EXPECT_EQ(p.plain_symbols, 6u);
    EXPECT_EQ(p.secret_symbols, 10u);
    EXPECT_EQ(p.secret_bytes, 20u);
    const auto j = to_json(p);
    EXPECT_EQ(j["eps_2rs_exact"], "6973568878/205891132094649");
    EXPECT_EQ(to_json(plan(Field::get(3, 10), 2, 20, 0.2)).dump(), j.dump());
}

TEST(Plan, PolicyAndOverride) {
    auto f = Field::get(3, 10);
    const PlanReport additive = plan(f, 2, 20, 0.2, BudgetPolicy::additive);
    EXPECT_NEAR(additive.per_challenge_budget, 3.387017598598769e-05 / 2, 1e-18);
    EXPECT_GE(additive.length.ell_prime, plan(f, 2, 20, 0.2).length.ell_prime);
    const PlanReport loose = plan(f, 2, 20, 0.0, BudgetPolicy::paper, 1.0);
    EXPECT_EQ(loose.length.ell_prime, 2u);
    const PlanReport extreme = plan(f, 2, 20, 0.99);
    EXPECT_GT(extreme.length.ell_prime, 100u);
    EXPECT_THROW(plan(f, 2, 0, 0.0), Error);  // zero error target
}

TEST(Plan, LengthCurve) {
    const auto rows = length_curve(59049, 0.85e-3, {0.0, 0.5, 0.9});
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0].length.ell_prime, 3u);
    EXPECT_EQ(rows[1].length.ell_prime, 5u);
    EXPECT_EQ(rows[2].length.ell_prime, 25u);
    const std::string csv = length_curve_csv(59049, 0.85e-3, rows);
    EXPECT_EQ(csv.substr(0, csv.find('\n', csv.find('\n') + 1)), "# length-csv v1\nq,epsilon,kappa,ell_prime,ell_prime_real");
}

TEST(Plan, Grids) {
    EXPECT_EQ(reference_grid().size(), 25u);
    const auto grid = bench_grid();
    EXPECT_EQ(grid.size(), 13u);
    for (auto [ell, k] : grid) EXPECT_LE(binomial(std::uint64_t{ell} + k, ell), kBenchMaxCoefficients);
}

TEST(Bench, RepetitionRules) {
    const PlanReport p = plan(Field::get(3, 10), 2, 20, 0.0);
    BenchOptions options;
    options.reps = 0;
    EXPECT_TRUE(run_bench(p, options).empty());
    options.reps = 10;
    EXPECT_THROW(run_bench(p, options), Error);
}

TEST(Bench, RecordsArePositive) {
    const PlanReport p = plan(Field::get(3, 10), 2, 20, 0.5);
    BenchOptions options;
    options.reps = 30;
    options.min_sample_seconds = 1e-5;
    const auto records = run_bench(p, options);
    ASSERT_EQ(records.size(), 4u);
    std::set<std::string> ops;
    for (const auto& r : records) {
        ops.insert(r.operation);
        EXPECT_GT(r.min_s, 0);
        EXPECT_LE(r.min_s, r.median_s);
        EXPECT_EQ(r.reps, 30u);
        EXPECT_EQ(r.ell_prime, p.length.ell_prime);
        const std::string row = to_csv(r);
        EXPECT_EQ(std::count(row.begin(), row.end(), ','), 11);
    }
    EXPECT_EQ(ops, (std::set<std::string>{"challenge", "encrypt", "decrypt", "verify"}));
    EXPECT_EQ(bench_csv_header(),
              "# bench-csv v1\noperation,q,ell,k,n,ell_prime,kappa,reps,mean_s,median_s,min_s,identity_bits\n");
}

}  // namespace
}  // namespace rmsid
