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

#ifndef RMSID_WIRETAP_HPP
#define RMSID_WIRETAP_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "rmsid/bignum.hpp"
#include "rmsid/entropy.hpp"
#include "rmsid/ff.hpp"
#include "rmsid/rmid.hpp"

namespace rmsid {

/// Ciphertext length, eavesdropper information fraction and leakage budget.
class SecrecyParams {
  public:
    SecrecyParams(std::shared_ptr<const Field> field, std::uint32_t ell_prime, double kappa = 0.0,
                  double epsilon = 1.0);

    const Field& field() const noexcept { return *field_; }
    const std::shared_ptr<const Field>& field_ptr() const noexcept { return field_; }
    std::uint32_t ell_prime() const noexcept { return ell_prime_; }
    double kappa() const noexcept { return kappa_; }
    double epsilon() const noexcept { return epsilon_; }

  private:
    std::shared_ptr<const Field> field_;
    std::uint32_t ell_prime_;
    double kappa_;
    double epsilon_;
};

/// Hyperplane seed. `s` is normalized by its highest nonzero coordinate:
/// s[pivot] = 1 and s[j] = 0 above it. `pivot` is 1-based.
struct Seed {
    FieldVector s;
    FieldElement s0;
    std::uint32_t pivot = 0;

    bool operator==(const Seed&) const = default;
};

/// Checks the normalization invariant; throws invalid_parameter.
void validate_seed(const Seed& seed);

struct Ciphertext {
    FieldVector x;

    bool operator==(const Ciphertext&) const = default;
};

/// (q^len - 1) / (q - 1), the number of normalized nonzero vectors.
BigInt normalized_vector_count(std::uint64_t q, std::uint32_t len);
/// q^(pivot-1) / |S'|.
Rational pivot_probability(std::uint64_t q, std::uint32_t len, std::uint32_t pivot);

/// Uniform over normalized vectors times GF(q). Digits are scanned from the
/// top coordinate down; the first nonzero one becomes the pivot, which gives
/// it probability q^(pivot-1)/|S'| (an all-zero scan restarts). The scanned
/// digit is then replaced by 1 and the lower coordinates drawn uniformly.
Seed sample_seed(EntropySource& rng, const SecrecyParams& params);

/// Uniform point on the hyperplane {x : s.x + s0 = m}: free coordinates are
/// drawn in index order, the pivot coordinate is solved for.
Ciphertext encrypt(const Seed& seed, const FieldElement& m, EntropySource& rng);
FieldElement decrypt(const Seed& seed, const Ciphertext& x);

struct LeakageBound {
    double tight = 0;
    double simplified = 0;
};

/// Total variation leakage bound for an eavesdropper with d2_bits of
/// conditional Renyi-2 information, both forms clamped to 2.
LeakageBound leakage_bound(const SecrecyParams& params, double d2_bits);
/// The squared tight form divided by 4, exactly: A (2^d2 - 1) with
/// A = (q^l - q^(l-1) + q^(l-2) - 1) / ((q^l - 1) q^(l-1)).
Rational tight_bound_factor(std::uint64_t q, std::uint32_t ell_prime);

struct CipherLength {
    std::uint32_t ell_prime = 0;
    double real_bound = 0;
};

/// Smallest ell' >= 2 with ell' >= (2 + log2 q + 2 log2(1/eps)) / ((1-kappa) log2 q).
CipherLength min_cipher_length(std::uint64_t q, double kappa, double epsilon);

enum class BudgetPolicy { paper, additive };

/// eps^(1/n) under the paper policy, eps/n under the additive one.
double split_leakage_budget(double epsilon_total, std::uint32_t n, BudgetPolicy policy = BudgetPolicy::paper);
BudgetPolicy parse_budget_policy(const std::string& text);
std::string to_string(BudgetPolicy policy);

/// One fresh seed per challenge; the randomness r travels in the clear.
std::vector<Ciphertext> encrypt_tags(const MultiChallenge& mc, const std::vector<Seed>& seeds, EntropySource& rng);
std::vector<FieldElement> decrypt_tags(const std::vector<Ciphertext>& xs, const std::vector<Seed>& seeds);

}  // namespace rmsid

#endif
