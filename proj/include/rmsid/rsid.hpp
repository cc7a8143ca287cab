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

#ifndef RMSID_RSID_HPP
#define RMSID_RSID_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "rmsid/bignum.hpp"
#include "rmsid/entropy.hpp"
#include "rmsid/ff.hpp"
#include "rmsid/polynomial.hpp"
#include "rmsid/rmid.hpp"

namespace rmsid {

/// GF(q^d) realised as GF(q)[y]/(g) with g the lowest monic irreducible of
/// degree d. Elements are d base-field coordinates, y^0 first.
class TowerField {
  public:
    TowerField(std::shared_ptr<const Field> base, std::uint32_t degree);

    const Field& base() const noexcept { return *base_; }
    std::uint32_t degree() const noexcept { return degree_; }
    const poly::Poly& modulus() const noexcept { return modulus_; }

    std::vector<Symbol> add(const std::vector<Symbol>& a, const std::vector<Symbol>& b) const;
    std::vector<Symbol> mul(const std::vector<Symbol>& a, const std::vector<Symbol>& b) const;

  private:
    std::shared_ptr<const Field> base_;
    std::uint32_t degree_;
    poly::Poly modulus_;
};

/// Concatenated Reed-Solomon identification code: an outer polynomial with
/// k_out coefficients over GF(q^k_in), whose value at r1 is read as an inner
/// polynomial with k_in coefficients over GF(q), evaluated at r2.
class RsIdParams {
  public:
    RsIdParams(std::shared_ptr<const Field> field, std::uint32_t k_in, BigInt k_out);

    const Field& field() const noexcept { return *field_; }
    const std::shared_ptr<const Field>& field_ptr() const noexcept { return field_; }
    std::uint32_t k_in() const noexcept { return k_in_; }
    const BigInt& k_out() const noexcept { return k_out_; }

    bool operator==(const RsIdParams& rhs) const {
        return field_ == rhs.field_ && k_in_ == rhs.k_in_ && k_out_ == rhs.k_out_;
    }

  private:
    std::shared_ptr<const Field> field_;
    std::uint32_t k_in_;
    BigInt k_out_;
};

struct RsErrorQuote {
    RsIdParams params;
    /// (k_out-1)/q^k_in + (k_in-1)/q, clamped to [0, 1].
    Rational error;
    /// k_out * k_in * log2 q.
    double size_bits = 0;
};

RsErrorQuote rs_quote(const RsIdParams& params);

/// Outer coefficients laid out one after another, k_in symbols each.
class RsIdentity {
  public:
    RsIdentity(RsIdParams params, FieldVector coeffs);

    static RsIdentity random(const RsIdParams& params, EntropySource& rng);

    const RsIdParams& params() const noexcept { return params_; }
    const FieldVector& coeffs() const noexcept { return coeffs_; }

  private:
    RsIdParams params_;
    FieldVector coeffs_;
};

struct RsChallenge {
    /// Outer evaluation point, k_in coordinates of a GF(q^k_in) element.
    FieldVector r1;
    FieldElement r2;
    FieldElement tag;
};

FieldElement rs_evaluate_tag(const RsIdentity& id, const FieldVector& r1, const FieldElement& r2);
RsChallenge rs_generate_challenge(const RsIdentity& id, EntropySource& rng);
bool rs_verify(const RsIdentity& id, const RsChallenge& challenge);

/// Smallest double-RS error among codes no larger than the Reed-Muller
/// target. The largest achievable size k_in*k_out <= C(ell+k, ell) is fixed
/// first; among pairs of that size the smallest error wins, ties going to the
/// smaller k_in.
RsErrorQuote epsilon_2rs(const IdCodeParams& target, std::uint32_t k_in_max = 8);

/// Smallest n >= 1 with per_challenge^n <= target.
std::uint32_t required_challenges(const Rational& per_challenge, const Rational& target);
/// required_challenges(k/q, epsilon_2rs(target).error); 1 when k = 0.
std::uint32_t required_rm_challenges(const IdCodeParams& target);

}  // namespace rmsid

#endif
