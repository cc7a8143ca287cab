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

#include "rmsid/wiretap.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace rmsid {

SecrecyParams::SecrecyParams(std::shared_ptr<const Field> field, std::uint32_t ell_prime, double kappa,
                             double epsilon)
    : field_(std::move(field)), ell_prime_(ell_prime), kappa_(kappa), epsilon_(epsilon) {
    if (!field_) throw Error(ErrorKind::invalid_parameter, "secrecy parameters need a field");
    if (ell_prime_ < 2) throw Error(ErrorKind::invalid_parameter, "ciphertext length must be at least 2");
    if (!(kappa_ >= 0.0 && kappa_ < 1.0)) throw Error(ErrorKind::invalid_parameter, "kappa must lie in [0, 1)");
    if (!(epsilon_ > 0.0 && epsilon_ <= 2.0)) throw Error(ErrorKind::invalid_parameter, "epsilon must lie in (0, 2]");
}

void validate_seed(const Seed& seed) {
    const Field& f = seed.s.field();
    if (&seed.s0.field() != &f) throw Error(ErrorKind::field_mismatch, "seed offset over the wrong field");
    const std::size_t len = seed.s.size();
    if (seed.pivot < 1 || seed.pivot > len)
        throw Error(ErrorKind::invalid_parameter, "seed pivot " + std::to_string(seed.pivot) + " out of range");
    const auto s = seed.s.values();
    if (s[seed.pivot - 1] != 1) throw Error(ErrorKind::invalid_parameter, "seed pivot coordinate must be 1");
    for (std::size_t j = seed.pivot; j < len; ++j)
        if (s[j] != 0) throw Error(ErrorKind::invalid_parameter, "seed coordinates above the pivot must be 0");
}

BigInt normalized_vector_count(std::uint64_t q, std::uint32_t len) {
    if (q < 2) throw Error(ErrorKind::invalid_parameter, "field size must be at least 2");
    return (big_pow(q, len) - 1) / (q - 1);
}

Rational pivot_probability(std::uint64_t q, std::uint32_t len, std::uint32_t pivot) {
    if (pivot < 1 || pivot > len) throw Error(ErrorKind::invalid_parameter, "pivot out of range");
    return Rational(big_pow(q, pivot - 1), normalized_vector_count(q, len));
}

Seed sample_seed(EntropySource& rng, const SecrecyParams& params) {
    const Field& f = params.field();
    const std::uint32_t len = params.ell_prime();
    std::uint32_t pivot = 0;
    while (pivot == 0) {
        for (std::uint32_t i = len; i >= 1; --i) {
            if (sample_symbol(rng, f) != 0) {
                pivot = i;
                break;
            }
        }
    }
    std::vector<Symbol> s(len, 0);
    s[pivot - 1] = 1;
    for (std::uint32_t j = 0; j + 1 < pivot; ++j) s[j] = sample_symbol(rng, f);
    FieldElement s0 = sample_uniform(rng, f);
    return {FieldVector(f, std::move(s)), s0, pivot};
}

Ciphertext encrypt(const Seed& seed, const FieldElement& m, EntropySource& rng) {
    validate_seed(seed);
    const Field& f = seed.s.field();
    if (&m.field() != &f) throw Error(ErrorKind::field_mismatch, "message over the wrong field");
    const auto s = seed.s.values();
    const std::size_t p = seed.pivot - 1;
    std::vector<Symbol> x(s.size());
    Symbol rhs = f.sub(m.value(), seed.s0.value());
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (j == p) continue;
        x[j] = sample_symbol(rng, f);
        rhs = f.sub(rhs, f.mul(s[j], x[j]));
    }
    x[p] = rhs;
    return {FieldVector(f, std::move(x))};
}

FieldElement decrypt(const Seed& seed, const Ciphertext& x) {
    validate_seed(seed);
    return dot(seed.s, x.x) + seed.s0;
}

Rational tight_bound_factor(std::uint64_t q, std::uint32_t ell_prime) {
    if (ell_prime < 2) throw Error(ErrorKind::invalid_parameter, "ciphertext length must be at least 2");
    const BigInt top = big_pow(q, ell_prime);
    const BigInt below = big_pow(q, ell_prime - 1);
    return Rational(top - below + big_pow(q, ell_prime - 2) - 1, (top - 1) * below);
}

LeakageBound leakage_bound(const SecrecyParams& params, double d2_bits) {
    const double log2_q = std::log2(static_cast<double>(params.field().size()));
    const double lp = params.ell_prime();
    const double d2_max = lp * log2_q;
    if (!(d2_bits >= 0.0) || d2_bits > d2_max * (1 + 1e-12))
        throw Error(ErrorKind::invalid_parameter,
                    "d2_bits must lie in [0, " + std::to_string(d2_max) + "], got " + std::to_string(d2_bits));
    const double inv_q = 1.0 / static_cast<double>(params.field().size());
    const double inv_q_len = std::exp2(-d2_max);
    const double log2_factor = std::log2(1 - inv_q + inv_q * inv_q - inv_q_len) - std::log2(1 - inv_q_len) -
                               (lp - 1) * log2_q;
    LeakageBound out;
    if (d2_bits > 0) {
        const double log2_excess = d2_bits + std::log1p(-std::exp2(-d2_bits)) * std::numbers::log2e;
        out.tight = std::min(2.0, 2 * std::exp2((log2_factor + log2_excess) / 2));
    }
    out.simplified = std::min(2.0, 2 * std::exp2((d2_bits - (lp - 1) * log2_q) / 2));
    return out;
}

CipherLength min_cipher_length(std::uint64_t q, double kappa, double epsilon) {
    if (q < 2) throw Error(ErrorKind::invalid_parameter, "field size must be at least 2");
    if (!(kappa >= 0.0)) throw Error(ErrorKind::invalid_parameter, "kappa must be nonnegative");
    if (kappa >= 1.0) throw Error(ErrorKind::infeasible, "no finite ciphertext length for kappa >= 1");
    if (!(epsilon > 0.0 && epsilon <= 1.0)) throw Error(ErrorKind::invalid_parameter, "epsilon must lie in (0, 1]");
    const double log2_q = std::log2(static_cast<double>(q));
    const double real = (2 + log2_q + 2 * std::log2(1 / epsilon)) / ((1 - kappa) * log2_q);
    if (real > 1e9) throw Error(ErrorKind::too_large, "ciphertext length bound " + std::to_string(real));
    return {std::max<std::uint32_t>(2, static_cast<std::uint32_t>(std::ceil(real))), real};
}

double split_leakage_budget(double epsilon_total, std::uint32_t n, BudgetPolicy policy) {
    if (n < 1) throw Error(ErrorKind::invalid_parameter, "challenge count must be at least 1");
    if (!(epsilon_total > 0.0 && epsilon_total <= 1.0))
        throw Error(ErrorKind::invalid_parameter, "leakage budget must lie in (0, 1]");
    if (policy == BudgetPolicy::additive) return epsilon_total / n;
    return std::pow(epsilon_total, 1.0 / n);
}

BudgetPolicy parse_budget_policy(const std::string& text) {
    if (text == "paper") return BudgetPolicy::paper;
    if (text == "additive") return BudgetPolicy::additive;
    throw Error(ErrorKind::parse_error, "unknown budget policy '" + text + "'");
}

std::string to_string(BudgetPolicy policy) { return policy == BudgetPolicy::paper ? "paper" : "additive"; }

std::vector<Ciphertext> encrypt_tags(const MultiChallenge& mc, const std::vector<Seed>& seeds, EntropySource& rng) {
    if (seeds.size() != mc.challenges.size())
        throw Error(ErrorKind::shape_mismatch, std::to_string(seeds.size()) + " seeds for " +
                                                   std::to_string(mc.challenges.size()) + " challenges");
    std::vector<Ciphertext> out;
    out.reserve(seeds.size());
    for (std::size_t i = 0; i < seeds.size(); ++i) out.push_back(encrypt(seeds[i], mc.challenges[i].tag, rng));
    return out;
}

std::vector<FieldElement> decrypt_tags(const std::vector<Ciphertext>& xs, const std::vector<Seed>& seeds) {
    if (seeds.size() != xs.size())
        throw Error(ErrorKind::shape_mismatch,
                    std::to_string(seeds.size()) + " seeds for " + std::to_string(xs.size()) + " ciphertexts");
    std::vector<FieldElement> out;
    out.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out.push_back(decrypt(seeds[i], xs[i]));
    return out;
}

}  // namespace rmsid
