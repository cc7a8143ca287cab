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

#ifndef RMSID_ANALYSIS_HPP
#define RMSID_ANALYSIS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rmsid/bignum.hpp"
#include "rmsid/rmid.hpp"
#include "rmsid/wiretap.hpp"

namespace rmsid {

/// Sum |P - Q| (not halved). Both inputs must be normalized to within 1e-12.
double total_variation(std::span<const double> p, std::span<const double> q);
/// Exact variant; both inputs must sum to exactly 1.
Rational total_variation(std::span<const Rational> p, std::span<const Rational> q);

/// log2 sum_{x in supp Q} P(x)^2 / Q(x), or +infinity when supp P is not
/// contained in supp Q.
double renyi2(std::span<const double> p, std::span<const double> q);

enum class ChannelKind { symmetric, erasure, identity, uniform_noise, product };

/// Row-stochastic transition matrix with exact rational entries. Erasure
/// channels carry one extra output symbol (index q).
class ChannelModel {
  public:
    static ChannelModel symmetric(std::uint64_t q, const Rational& delta);
    static ChannelModel erasure(std::uint64_t q, const Rational& delta);
    static ChannelModel identity(std::uint64_t q);
    static ChannelModel uniform_noise(std::uint64_t q);
    /// Independent uses over `length` symbols; inputs and outputs indexed
    /// with the first symbol as the least significant digit.
    static ChannelModel product(const ChannelModel& symbol_channel, std::uint32_t length);

    ChannelKind kind() const noexcept { return kind_; }
    const Rational& delta() const noexcept { return delta_; }
    std::size_t inputs() const noexcept { return rows_.size(); }
    std::size_t outputs() const noexcept { return rows_.empty() ? 0 : rows_.front().size(); }
    const std::vector<std::vector<Rational>>& rows() const noexcept { return rows_; }
    std::vector<std::vector<double>> rows_double() const;
    std::string name() const;

  private:
    ChannelModel(ChannelKind kind, Rational delta, std::vector<std::vector<Rational>> rows);

    ChannelKind kind_;
    Rational delta_;
    std::vector<std::vector<Rational>> rows_;
};

ChannelKind parse_channel_kind(const std::string& text);
std::string to_string(ChannelKind kind);

/// sum_x P_X(x) sum_z W(z|x)^2 / P_Y(z) with P_Y = P_X W, exactly; this is
/// 2 raised to the conditional Renyi-2 divergence.
Rational conditional_d2_power(const ChannelModel& w, std::span<const Rational> input);
/// Conditional Renyi-2 divergence in bits.
double conditional_d2(const ChannelModel& w, std::span<const double> input);
/// Same with the uniform input distribution.
double conditional_d2_uniform(const ChannelModel& w);

struct LeakageReport {
    std::uint64_t q = 0;
    std::uint32_t ell_prime = 0;
    std::string channel;
    /// max_m || P_{SZ|m} - mean_m P_{SZ|m} ||
    double exact_max_tv = 0;
    /// max_{m,m'} || P_{SZ|m} - P_{SZ|m'} ||
    double exact_pairwise_tv = 0;
    /// Conditional Renyi-2 divergence of the ell'-fold channel, uniform input.
    double d2_bits = 0;
    double kappa_true = 0;
    double bound_tight = 0;
    double bound_simplified = 0;
    /// Dominance verdicts, decided exactly when `exact_arithmetic` holds and
    /// with a 1e-12 tolerance otherwise.
    bool max_within_tight = false;
    bool pairwise_within_tight = false;
    bool tight_within_simplified = false;
    bool exact_arithmetic = false;
    std::uint64_t states = 0;
};

/// Largest enumeration exact_leakage accepts: q^l' * |S| * |Z|^l'.
inline constexpr std::uint64_t kMaxLeakageStates = 100'000'000;
/// Below this size the enumeration runs in rational arithmetic.
inline constexpr std::uint64_t kExactLeakageStates = 1'000'000;

/// Builds P_{SZ|m} for every message by walking every seed and every
/// ciphertext, and compares both distinguishability statistics with the
/// bound. `w` is the per-symbol eavesdropper channel.
LeakageReport exact_leakage(const SecrecyParams& params, const ChannelModel& w);

/// |{r : p_i(r) = p_j(r)}| / q^ell by enumerating every r, with monomials
/// expanded from explicit exponent tuples.
Rational exact_id_error(const IdCodeParams& params, const Identity& id_i, const Identity& id_j);

/// Exponent tuples of total degree <= k in graded, descending-lexicographic
/// order, built by direct enumeration.
std::vector<std::vector<std::uint32_t>> monomial_exponents(std::uint32_t ell, std::uint32_t k);

}  // namespace rmsid

#endif
