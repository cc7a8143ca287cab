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

#include "rmsid/plan.hpp"

#include <sstream>

namespace rmsid {

PlanReport plan(std::shared_ptr<const Field> field, std::uint32_t ell, std::uint32_t k, double kappa,
                BudgetPolicy policy, std::optional<double> leakage_target) {
    const IdCodeParams base(field, ell, k);
    RsErrorQuote rs = epsilon_2rs(base);
    const std::uint32_t n = required_rm_challenges(base);
    const double target = leakage_target ? *leakage_target : to_double(rs.error);
    if (!(target > 0)) throw Error(ErrorKind::infeasible, "zero leakage target admits no finite ciphertext length");
    const double budget = split_leakage_budget(std::min(target, 1.0), n, policy);
    const CipherLength length = min_cipher_length(field->size(), kappa, budget);

    const IdCodeParams id_params = base.with_challenges(n);
    const std::uint64_t plain = (std::uint64_t{ell} + 1) * n;
    const std::uint64_t secret = (std::uint64_t{ell} + length.ell_prime) * n;
    PlanReport r{.id_params = id_params,
                 .rs = std::move(rs),
                 .n_challenges = n,
                 .rm_error = error_bound(id_params),
                 .kappa = kappa,
                 .policy = policy,
                 .leakage_target = target,
                 .per_challenge_budget = budget,
                 .length = length,
                 .plain_symbols = plain,
                 .secret_symbols = secret,
                 .plain_bytes = plain * field->symbol_bytes(),
                 .secret_bytes = secret * field->symbol_bytes(),
                 .identity_bits = code_size_bits(base)};
    return r;
}

nlohmann::ordered_json to_json(const PlanReport& r) {
    const FieldParams& f = r.id_params.field().params();
    return {{"q", f.q},
            {"p", f.p},
            {"m", f.m},
            {"ell", r.id_params.ell()},
            {"k", r.id_params.k()},
            {"identity_bits", r.identity_bits},
            {"eps_2rs", to_double(r.rs.error)},
            {"eps_2rs_exact", to_string(r.rs.error)},
            {"k_in", r.rs.params.k_in()},
            {"k_out", r.rs.params.k_out().str()},
            {"rs_size_bits", r.rs.size_bits},
            {"n_challenges", r.n_challenges},
            {"rm_error", to_double(r.rm_error)},
            {"rm_error_exact", to_string(r.rm_error)},
            {"kappa", r.kappa},
            {"budget_policy", to_string(r.policy)},
            {"leakage_target", r.leakage_target},
            {"per_challenge_budget", r.per_challenge_budget},
            {"ell_prime", r.length.ell_prime},
            {"ell_prime_real", r.length.real_bound},
            {"wire_symbols_plain", r.plain_symbols},
            {"wire_symbols_secret", r.secret_symbols},
            {"wire_bytes_plain", r.plain_bytes},
            {"wire_bytes_secret", r.secret_bytes}};
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> reference_grid() {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> grid;
    for (std::uint32_t ell = 2; ell <= 6; ++ell)
        for (std::uint32_t mult = 10; mult <= 50; mult += 10) grid.emplace_back(ell, mult * ell);
    return grid;
}

std::vector<LengthRow> length_curve(std::uint64_t q, double epsilon, const std::vector<double>& kappas) {
    std::vector<LengthRow> rows;
    for (double kappa : kappas) rows.push_back({kappa, min_cipher_length(q, kappa, epsilon)});
    return rows;
}

std::string length_curve_csv(std::uint64_t q, double epsilon, const std::vector<LengthRow>& rows) {
    std::ostringstream out;
    out.precision(17);
    out << "# length-csv v1\nq,epsilon,kappa,ell_prime,ell_prime_real\n";
    for (const auto& row : rows)
        out << q << ',' << epsilon << ',' << row.kappa << ',' << row.length.ell_prime << ',' << row.length.real_bound
            << '\n';
    return out.str();
}

}  // namespace rmsid
