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

#include "rmsid/rsid.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

namespace rmsid {

TowerField::TowerField(std::shared_ptr<const Field> base, std::uint32_t degree)
    : base_(std::move(base)), degree_(degree) {
    if (degree_ < 1) throw Error(ErrorKind::invalid_parameter, "extension degree must be at least 1");
    modulus_ = poly::lowest_irreducible(*base_, degree_);
}

std::vector<Symbol> TowerField::add(const std::vector<Symbol>& a, const std::vector<Symbol>& b) const {
    std::vector<Symbol> out(degree_);
    for (std::uint32_t i = 0; i < degree_; ++i) out[i] = base_->add(a[i], b[i]);
    return out;
}

std::vector<Symbol> TowerField::mul(const std::vector<Symbol>& a, const std::vector<Symbol>& b) const {
    poly::Poly out = poly::mulmod(*base_, a, b, modulus_);
    out.resize(degree_, 0);
    return out;
}

RsIdParams::RsIdParams(std::shared_ptr<const Field> field, std::uint32_t k_in, BigInt k_out)
    : field_(std::move(field)), k_in_(k_in), k_out_(std::move(k_out)) {
    if (!field_) throw Error(ErrorKind::invalid_parameter, "double Reed-Solomon code needs a field");
    if (k_in_ < 1 || k_in_ >= field_->size())
        throw Error(ErrorKind::invalid_parameter, "k_in must lie in [1, q)");
    if (k_out_ < 1 || k_out_ >= big_pow(field_->size(), k_in_))
        throw Error(ErrorKind::invalid_parameter, "k_out must lie in [1, q^k_in)");
}

RsErrorQuote rs_quote(const RsIdParams& params) {
    const BigInt q = params.field().size();
    Rational error = Rational(params.k_out() - 1, big_pow(params.field().size(), params.k_in())) +
                     Rational(BigInt(params.k_in() - 1), q);
    if (error > 1) error = 1;
    const double size = params.k_out().convert_to<double>() * params.k_in() *
                        std::log2(static_cast<double>(params.field().size()));
    return {params, error, size};
}

RsIdentity::RsIdentity(RsIdParams params, FieldVector coeffs) : params_(std::move(params)), coeffs_(std::move(coeffs)) {
    if (&coeffs_.field() != &params_.field())
        throw Error(ErrorKind::field_mismatch, "identity coefficients over the wrong field");
    if (BigInt(coeffs_.size()) != params_.k_out() * params_.k_in())
        throw Error(ErrorKind::shape_mismatch, "double Reed-Solomon identity needs k_out * k_in symbols");
}

RsIdentity RsIdentity::random(const RsIdParams& params, EntropySource& rng) {
    const BigInt total = params.k_out() * params.k_in();
    if (total > kMaxCoefficients) throw Error(ErrorKind::too_large, "identity with " + total.str() + " symbols");
    std::vector<Symbol> coeffs(total.convert_to<std::size_t>());
    for (auto& c : coeffs) c = sample_symbol(rng, params.field());
    return {params, FieldVector(params.field(), std::move(coeffs))};
}

FieldElement rs_evaluate_tag(const RsIdentity& id, const FieldVector& r1, const FieldElement& r2) {
    const Field& f = id.params().field();
    const std::uint32_t d = id.params().k_in();
    if (&r1.field() != &f || &r2.field() != &f) throw Error(ErrorKind::field_mismatch, "challenge over the wrong field");
    if (r1.size() != d) throw Error(ErrorKind::shape_mismatch, "outer point needs k_in coordinates");
    const TowerField outer(id.params().field_ptr(), d);
    const std::vector<Symbol> point(r1.values().begin(), r1.values().end());
    const auto coeffs = id.coeffs().values();
    const std::size_t k_out = coeffs.size() / d;
    std::vector<Symbol> acc(d, 0);
    for (std::size_t j = k_out; j-- > 0;) {
        const std::vector<Symbol> c(coeffs.begin() + j * d, coeffs.begin() + (j + 1) * d);
        acc = outer.add(outer.mul(acc, point), c);
    }
    return {f, poly::evaluate(f, acc, r2.value())};
}

RsChallenge rs_generate_challenge(const RsIdentity& id, EntropySource& rng) {
    const Field& f = id.params().field();
    std::vector<Symbol> r1(id.params().k_in());
    for (auto& v : r1) v = sample_symbol(rng, f);
    FieldVector point(f, std::move(r1));
    FieldElement r2 = sample_uniform(rng, f);
    FieldElement tag = rs_evaluate_tag(id, point, r2);
    return {std::move(point), r2, tag};
}

bool rs_verify(const RsIdentity& id, const RsChallenge& challenge) {
    return rs_evaluate_tag(id, challenge.r1, challenge.r2) == challenge.tag;
}

RsErrorQuote epsilon_2rs(const IdCodeParams& target, std::uint32_t k_in_max) {
    const auto& field = target.field_ptr();
    const std::uint64_t q = field->size();
    const BigInt& capacity = target.coefficient_count();

    // Largest outer length for each inner length, and the largest size overall.
    std::vector<BigInt> k_out_cap(k_in_max + 1, 0);
    BigInt best_size = 0;
    for (std::uint32_t k_in = 1; k_in <= k_in_max && k_in < q; ++k_in) {
        BigInt cap = capacity / k_in;
        const BigInt field_cap = big_pow(q, k_in) - 1;
        if (cap > field_cap) cap = field_cap;
        k_out_cap[k_in] = cap;
        if (cap >= 1 && cap * k_in > best_size) best_size = cap * k_in;
    }
    if (best_size == 0) throw Error(ErrorKind::infeasible, "no double Reed-Solomon code fits the target size");

    std::optional<RsErrorQuote> best;
    for (std::uint32_t k_in = 1; k_in <= k_in_max && k_in < q; ++k_in) {
        if (best_size % k_in != 0) continue;
        const BigInt k_out = best_size / k_in;
        if (k_out > k_out_cap[k_in]) continue;
        RsErrorQuote quote = rs_quote(RsIdParams(field, k_in, k_out));
        if (!best || quote.error < best->error) best = std::move(quote);
    }
    return *best;
}

std::uint32_t required_challenges(const Rational& per_challenge, const Rational& target) {
    if (per_challenge < 0 || per_challenge >= 1)
        throw Error(ErrorKind::invalid_parameter, "per-challenge error must lie in [0, 1)");
    if (per_challenge == 0) return 1;
    if (target <= 0) throw Error(ErrorKind::infeasible, "a zero error target is unreachable");
    if (per_challenge <= target) return 1;
    // Start from the floating estimate, then settle exactly.
    const double estimate = log2_rational(target) / log2_rational(per_challenge);
    std::uint32_t n = std::max<std::uint32_t>(1, static_cast<std::uint32_t>(std::floor(estimate)) - 1);
    if (n > 1 && rational_pow(per_challenge, n) <= target) n = 1;
    Rational power = rational_pow(per_challenge, n);
    while (power > target) {
        power *= per_challenge;
        ++n;
    }
    return n;
}

std::uint32_t required_rm_challenges(const IdCodeParams& target) {
    if (target.k() == 0) return 1;
    return required_challenges(Rational(BigInt(target.k()), BigInt(target.field().size())),
                               epsilon_2rs(target).error);
}

}  // namespace rmsid
