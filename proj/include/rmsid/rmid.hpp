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

#ifndef RMSID_RMID_HPP
#define RMSID_RMID_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "rmsid/bignum.hpp"
#include "rmsid/entropy.hpp"
#include "rmsid/ff.hpp"

namespace rmsid {

/// Reed-Muller identification code parameters: identities are polynomials of
/// total degree <= k in `ell` variables over GF(q); a challenge is the point
/// r in GF(q)^ell plus the tag p_i(r), repeated `n_challenges` times.
class IdCodeParams {
  public:
    IdCodeParams(std::shared_ptr<const Field> field, std::uint32_t ell, std::uint32_t k,
                 std::uint32_t n_challenges = 1);

    const Field& field() const noexcept { return *field_; }
    const std::shared_ptr<const Field>& field_ptr() const noexcept { return field_; }
    std::uint32_t ell() const noexcept { return ell_; }
    std::uint32_t k() const noexcept { return k_; }
    std::uint32_t n_challenges() const noexcept { return n_; }

    /// C(ell + k, ell), exact.
    const BigInt& coefficient_count() const noexcept { return coefficient_count_; }
    /// Coefficient count as a size; throws too_large when an identity of this
    /// size cannot be held in memory.
    std::size_t materialized_size() const;

    IdCodeParams with_challenges(std::uint32_t n) const { return {field_, ell_, k_, n}; }

    bool operator==(const IdCodeParams& rhs) const {
        return field_ == rhs.field_ && ell_ == rhs.ell_ && k_ == rhs.k_ && n_ == rhs.n_;
    }

  private:
    std::shared_ptr<const Field> field_;
    std::uint32_t ell_;
    std::uint32_t k_;
    std::uint32_t n_;
    BigInt coefficient_count_;
};

/// Upper limit on materialized coefficient vectors (16 GiB of symbols).
inline constexpr std::uint64_t kMaxCoefficients = std::uint64_t{1} << 32;

/// Coefficients in graded-lexicographic order: degree 0, 1, ..., k; within a
/// degree, exponent tuples in descending lexicographic order (x1^d first).
class Identity {
  public:
    Identity(IdCodeParams params, FieldVector coeffs);

    static Identity zero(const IdCodeParams& params);
    static Identity random(const IdCodeParams& params, EntropySource& rng);

    const IdCodeParams& params() const noexcept { return params_; }
    const FieldVector& coeffs() const noexcept { return coeffs_; }

    bool operator==(const Identity& rhs) const { return params_ == rhs.params_ && coeffs_ == rhs.coeffs_; }

  private:
    IdCodeParams params_;
    FieldVector coeffs_;
};

struct Challenge {
    FieldVector r;
    FieldElement tag;

    bool operator==(const Challenge&) const = default;
};

struct MultiChallenge {
    std::vector<Challenge> challenges;

    bool operator==(const MultiChallenge&) const = default;
};

/// Big-endian base-q expansion of the byte string, right-aligned in the
/// coefficient vector. Leading zero bytes do not change the value, so the
/// inverse returns the minimal (no leading zero) byte string.
Identity identity_from_bytes(std::span<const std::uint8_t> data, const IdCodeParams& params);
std::vector<std::uint8_t> bytes_from_identity(const Identity& id);

/// p_i(r). Monomials are produced in one graded sweep where each monomial
/// costs a single multiplication by one variable; table fields run the sweep
/// entirely in the logarithm domain.
FieldElement evaluate_tag(const Identity& id, const FieldVector& r);
/// Same sweep through plain Field operations (no log-domain path).
FieldElement evaluate_tag_portable(const Identity& id, const FieldVector& r);

Challenge generate_challenge(const Identity& id, EntropySource& rng);
bool verify(const Identity& id, const Challenge& challenge);

MultiChallenge generate_multi(const Identity& id, EntropySource& rng);
/// Accepts iff every challenge verifies; the count must equal n_challenges.
bool verify_multi(const Identity& id, const MultiChallenge& mc);

/// (k/q)^n, exact.
Rational error_bound(const IdCodeParams& params);
/// C(ell + k, ell) * log2 q.
double code_size_bits(const IdCodeParams& params);

/// Ratios for the family q = 2^(n^2), k = 2^(n^2 - n), ell = 2^n, computed
/// from exponents only.
struct CapacityDiagnostics {
    std::uint32_t n_seq = 0;
    double log2_q = 0;
    double log2_k = 0;
    double log2_ell = 0;
    /// log T / log R = 1 / ell.
    double tag_ratio = 0;
    /// k / q.
    double error_ratio = 0;
    /// log C(k+ell, ell) / (ell log q) from the binomial lower bound
    /// ((k+ell)/ell)^ell.
    double binomial_lower = 0;
    /// Same from the upper bound (e (k+ell)/ell)^ell.
    double binomial_upper = 0;
    /// log C(k+ell, ell) / (ell log q) evaluated term by term.
    double binomial_ratio = 0;
    /// loglog I / log R including the loglog q term.
    double loglog_ratio = 0;
    /// (n^2 - 2n) / n^2, the limit both bounds approach.
    double asymptote = 0;
    /// log2(1 + ell/k) / log2 q: distance between binomial_lower and the
    /// bound obtained by dropping the +ell in (k+ell)/ell.
    double lower_gap = 0;
};

CapacityDiagnostics capacity_diagnostics(std::uint32_t n_seq);

}  // namespace rmsid

#endif
