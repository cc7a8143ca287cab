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

#ifndef RMSID_PLAN_HPP
#define RMSID_PLAN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rmsid/rmid.hpp"
#include "rmsid/rsid.hpp"
#include "rmsid/wiretap.hpp"

namespace rmsid {

/// End-to-end parameter choice for secret identification: target error,
/// challenge count, per-challenge leakage budget, ciphertext length and the
/// resulting wire sizes.
struct PlanReport {
    IdCodeParams id_params;
    RsErrorQuote rs;
    std::uint32_t n_challenges = 1;
    /// (k/q)^n.
    Rational rm_error;
    double kappa = 0;
    BudgetPolicy policy = BudgetPolicy::paper;
    /// Total leakage allowed; the double-RS error unless overridden.
    double leakage_target = 0;
    double per_challenge_budget = 0;
    CipherLength length;
    std::uint64_t plain_symbols = 0;
    std::uint64_t secret_symbols = 0;
    std::uint64_t plain_bytes = 0;
    std::uint64_t secret_bytes = 0;
    double identity_bits = 0;
};

/// epsilon_2rs -> required_rm_challenges -> split_leakage_budget ->
/// min_cipher_length. `leakage_target` replaces the double-RS error as the
/// total leakage budget when given.
PlanReport plan(std::shared_ptr<const Field> field, std::uint32_t ell, std::uint32_t k, double kappa,
                BudgetPolicy policy = BudgetPolicy::paper, std::optional<double> leakage_target = std::nullopt);

nlohmann::ordered_json to_json(const PlanReport& report);

/// Identity sizes covered by the parameter grid: ell in [2, 6], k in
/// {10, ..., 50} * ell.
std::vector<std::pair<std::uint32_t, std::uint32_t>> reference_grid();

struct LengthRow {
    double kappa = 0;
    CipherLength length;
};

/// Ciphertext length against kappa for fixed q and epsilon.
std::vector<LengthRow> length_curve(std::uint64_t q, double epsilon, const std::vector<double>& kappas);
/// "kappa,ell_prime,ell_prime_real" followed by one row per kappa.
std::string length_curve_csv(std::uint64_t q, double epsilon, const std::vector<LengthRow>& rows);

}  // namespace rmsid

#endif
