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

#include "rmsid/rmid.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace rmsid {

IdCodeParams::IdCodeParams(std::shared_ptr<const Field> field, std::uint32_t ell, std::uint32_t k,
                           std::uint32_t n_challenges)
    : field_(std::move(field)), ell_(ell), k_(k), n_(n_challenges) {
    if (!field_) throw Error(ErrorKind::invalid_parameter, "identification code needs a field");
    if (ell_ < 1) throw Error(ErrorKind::invalid_parameter, "ell must be at least 1");
    if (k_ >= field_->size())
        throw Error(ErrorKind::invalid_parameter,
                    "degree k = " + std::to_string(k_) + " must be below q = " + std::to_string(field_->size()));
    if (n_ < 1) throw Error(ErrorKind::invalid_parameter, "at least one challenge is required");
    coefficient_count_ = binomial(std::uint64_t{ell_} + k_, ell_);
}

std::size_t IdCodeParams::materialized_size() const {
    if (coefficient_count_ > kMaxCoefficients)
        throw Error(ErrorKind::too_large, "identity with " + coefficient_count_.str() + " coefficients");
    return coefficient_count_.convert_to<std::size_t>();
}

Identity::Identity(IdCodeParams params, FieldVector coeffs) : params_(std::move(params)), coeffs_(std::move(coeffs)) {
    if (&coeffs_.field() != &params_.field())
        throw Error(ErrorKind::field_mismatch, "identity coefficients over the wrong field");
    if (coeffs_.size() != params_.materialized_size())
        throw Error(ErrorKind::shape_mismatch, "identity needs " + params_.coefficient_count().str() +
                                                   " coefficients, got " + std::to_string(coeffs_.size()));
}

Identity Identity::zero(const IdCodeParams& params) {
    return {params, FieldVector::zeros(params.field(), params.materialized_size())};
}

Identity Identity::random(const IdCodeParams& params, EntropySource& rng) {
    std::vector<Symbol> coeffs(params.materialized_size());
    for (auto& c : coeffs) c = sample_symbol(rng, params.field());
    return {params, FieldVector(params.field(), std::move(coeffs))};
}

Identity identity_from_bytes(std::span<const std::uint8_t> data, const IdCodeParams& params) {
    BigInt value;
    if (!data.empty()) boost::multiprecision::import_bits(value, data.begin(), data.end(), 8, true);
    const std::size_t count = params.materialized_size();
    std::vector<Symbol> coeffs(count, 0);
    const BigInt q = params.field().size();
    std::size_t slot = count;
    while (value != 0) {
        if (slot == 0)
            throw Error(ErrorKind::capacity_exceeded,
                        std::to_string(data.size()) + " bytes exceed the identity capacity of " +
                            std::to_string(code_size_bits(params)) + " bits");
        BigInt quotient, digit;
        boost::multiprecision::divide_qr(value, q, quotient, digit);
        coeffs[--slot] = digit.convert_to<Symbol>();
        value = std::move(quotient);
    }
    return {params, FieldVector(params.field(), std::move(coeffs))};
}

std::vector<std::uint8_t> bytes_from_identity(const Identity& id) {
    BigInt value = 0;
    const std::uint64_t q = id.params().field().size();
    for (auto c : id.coeffs().values()) value = value * q + c;
    std::vector<std::uint8_t> out;
    if (value != 0) boost::multiprecision::export_bits(value, std::back_inserter(out), 8, true);
    return out;
}

namespace {

// Graded sweep over monomials. For degree d the monomials are
//   x_1 * (all degree d-1 monomials), x_2 * (those free of x_1), ...
// and the monomials of degree d-1 free of x_1..x_{j-1} are exactly the last
// tail[ell-j+1] entries of the previous degree, which keeps the order
// graded and descending-lexicographic.
template <class Ops>
Symbol sweep(Ops& ops, std::span<const Symbol> coeffs, std::uint32_t ell, std::uint32_t k) {
    using Value = typename Ops::Value;
    std::vector<Value> prev{ops.one()};
    std::vector<Value> cur;
    auto acc = ops.zero();
    ops.accumulate(acc, coeffs[0], prev[0]);
    std::vector<std::uint64_t> tail(ell + 1, 1);
    std::size_t idx = 1;
    for (std::uint32_t d = 1; d <= k; ++d) {
        cur.clear();
        for (std::uint32_t j = 0; j < ell; ++j) {
            const std::size_t start = prev.size() - tail[ell - j];
            for (std::size_t t = start; t < prev.size(); ++t) cur.push_back(ops.times_variable(prev[t], j));
        }
        for (const Value& m : cur) ops.accumulate(acc, coeffs[idx++], m);
        std::uint64_t running = 0;
        for (std::uint32_t v = 1; v <= ell; ++v) tail[v] = running += tail[v];
        std::swap(prev, cur);
    }
    return ops.finish(acc);
}

struct FieldOps {
    using Value = Symbol;
    const Field& f;
    std::span<const Symbol> r;

    Value one() const { return 1; }
    Value zero() const { return 0; }
    Value times_variable(Value v, std::uint32_t j) const { return f.mul(v, r[j]); }
    void accumulate(Value& acc, Symbol c, Value m) const { acc = f.add(acc, f.mul(c, m)); }
    Symbol finish(Value acc) const { return acc; }
};

// Values are discrete logarithms; Field::kNoLog stands for zero. Products
// become index additions and sums go through the Zech table.
struct LogOps {
    using Value = std::uint32_t;
    static constexpr Value kZero = Field::kNoLog;
    std::uint32_t ord;
    std::span<const std::uint32_t> log;
    std::span<const std::uint32_t> exp;
    std::span<const std::uint32_t> zech;
    std::vector<std::uint32_t> r_log;

    Value one() const { return 0; }
    Value zero() const { return kZero; }
    Value times_variable(Value v, std::uint32_t j) const {
        const Value rl = r_log[j];
        if (v == kZero || rl == kZero) return kZero;
        const Value s = v + rl;
        return s >= ord ? s - ord : s;
    }
    void accumulate(Value& acc, Symbol c, Value m) const {
        if (c == 0 || m == kZero) return;
        Value t = log[c] + m;
        if (t >= ord) t -= ord;
        if (acc == kZero) {
            acc = t;
            return;
        }
        const Value d = t >= acc ? t - acc : t + ord - acc;
        const Value z = zech[d];
        if (z == kZero) {
            acc = kZero;
            return;
        }
        acc += z;
        if (acc >= ord) acc -= ord;
    }
    Symbol finish(Value acc) const { return acc == kZero ? 0 : exp[acc]; }
};

void check_point(const Identity& id, const FieldVector& r) {
    if (&r.field() != &id.params().field()) throw Error(ErrorKind::field_mismatch, "evaluation point over the wrong field");
    if (r.size() != id.params().ell())
        throw Error(ErrorKind::shape_mismatch, "evaluation point has " + std::to_string(r.size()) +
                                                   " coordinates, expected " + std::to_string(id.params().ell()));
}

}  // namespace

FieldElement evaluate_tag_portable(const Identity& id, const FieldVector& r) {
    check_point(id, r);
    const Field& f = id.params().field();
    FieldOps ops{f, r.values()};
    return {f, sweep(ops, id.coeffs().values(), id.params().ell(), id.params().k())};
}

FieldElement evaluate_tag(const Identity& id, const FieldVector& r) {
    const Field& f = id.params().field();
    if (!f.has_tables()) return evaluate_tag_portable(id, r);
    check_point(id, r);
    LogOps ops{static_cast<std::uint32_t>(f.order()), f.log_table(), f.exp_table(), f.zech_table(), {}};
    ops.r_log.reserve(r.size());
    for (auto v : r.values()) ops.r_log.push_back(f.log_table()[v]);
    return {f, sweep(ops, id.coeffs().values(), id.params().ell(), id.params().k())};
}

Challenge generate_challenge(const Identity& id, EntropySource& rng) {
    const Field& f = id.params().field();
    std::vector<Symbol> r(id.params().ell());
    for (auto& v : r) v = sample_symbol(rng, f);
    FieldVector point(f, std::move(r));
    FieldElement tag = evaluate_tag(id, point);
    return {std::move(point), tag};
}

bool verify(const Identity& id, const Challenge& challenge) {
    if (&challenge.tag.field() != &id.params().field())
        throw Error(ErrorKind::field_mismatch, "challenge tag over the wrong field");
    return evaluate_tag(id, challenge.r) == challenge.tag;
}

MultiChallenge generate_multi(const Identity& id, EntropySource& rng) {
    MultiChallenge mc;
    mc.challenges.reserve(id.params().n_challenges());
    for (std::uint32_t i = 0; i < id.params().n_challenges(); ++i) mc.challenges.push_back(generate_challenge(id, rng));
    return mc;
}

bool verify_multi(const Identity& id, const MultiChallenge& mc) {
    if (mc.challenges.size() != id.params().n_challenges())
        throw Error(ErrorKind::shape_mismatch, "expected " + std::to_string(id.params().n_challenges()) +
                                                   " challenges, got " + std::to_string(mc.challenges.size()));
    bool accept = true;
    for (const auto& c : mc.challenges) accept = verify(id, c) && accept;
    return accept;
}

Rational error_bound(const IdCodeParams& params) {
    return rational_pow(Rational(BigInt(params.k()), BigInt(params.field().size())), params.n_challenges());
}

double code_size_bits(const IdCodeParams& params) {
    return params.coefficient_count().convert_to<double>() * std::log2(static_cast<double>(params.field().size()));
}

CapacityDiagnostics capacity_diagnostics(std::uint32_t n_seq) {
    if (n_seq < 1 || n_seq > 60) throw Error(ErrorKind::invalid_parameter, "n_seq must lie in [1, 60]");
    const double n = n_seq;
    const double log2e = std::numbers::log2e;
    CapacityDiagnostics d;
    d.n_seq = n_seq;
    d.log2_q = n * n;
    d.log2_k = n * n - n;
    d.log2_ell = n;
    d.tag_ratio = std::exp2(-n);
    d.error_ratio = std::exp2(d.log2_k - d.log2_q);

    // log2((k + ell) / ell) = a + log2(1 + 2^-a) with a = log2(k / ell).
    const double a = d.log2_k - d.log2_ell;
    const double log2_ratio = a >= 0 ? a + std::log1p(std::exp2(-a)) * log2e : std::log1p(std::exp2(a)) * log2e;
    d.binomial_lower = log2_ratio / d.log2_q;
    d.binomial_upper = (log2_ratio + log2e) / d.log2_q;
    d.asymptote = a / d.log2_q;
    d.lower_gap = (log2_ratio - a) / d.log2_q;

    // log2 C(k+ell, ell) / ell = log2 k - log2(ell!)/ell + (1/ell) sum_i log2(1 + i/k).
    const double ell = std::exp2(d.log2_ell);
    const double inv_k = std::exp2(-d.log2_k);
    double tail;
    if (ell * inv_k <= 1e-6) {
        tail = (ell + 1) / 2 * inv_k * log2e;  // sum_i i/k, divided by ell
    } else {
        double s = 0;
        for (std::uint64_t i = 1; i <= static_cast<std::uint64_t>(ell); ++i)
            s += std::log1p(static_cast<double>(i) * inv_k);
        tail = s * log2e / ell;
    }
    const double per_variable = d.log2_k - std::lgamma(ell + 1) * log2e / ell + tail;
    d.binomial_ratio = per_variable / d.log2_q;
    d.loglog_ratio = (std::log2(d.log2_q) / ell + per_variable) / d.log2_q;
    return d;
}

}  // namespace rmsid
