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

#include "rmsid/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace rmsid {

namespace {

void check_same_size(std::size_t a, std::size_t b) {
    if (a != b)
        throw Error(ErrorKind::shape_mismatch,
                    "distributions over different supports (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
}

void check_normalized(std::span<const double> p) {
    double sum = 0;
    for (double v : p) {
        if (!(v >= 0)) throw Error(ErrorKind::invalid_parameter, "negative probability");
        sum += v;
    }
    const double tolerance = 1e-12 + static_cast<double>(p.size()) * std::numeric_limits<double>::epsilon();
    if (std::abs(sum - 1) > tolerance)
        throw Error(ErrorKind::invalid_parameter, "distribution sums to " + std::to_string(sum));
}

void check_normalized(std::span<const Rational> p) {
    Rational sum = 0;
    for (const auto& v : p) {
        if (v < 0) throw Error(ErrorKind::invalid_parameter, "negative probability");
        sum += v;
    }
    if (sum != 1) throw Error(ErrorKind::invalid_parameter, "distribution sums to " + to_string(sum));
}

double as_double(double v) { return v; }
double as_double(const Rational& v) { return to_double(v); }

template <class T>
T absolute(const T& v) {
    return v < 0 ? T(-v) : v;
}

}  // namespace

double total_variation(std::span<const double> p, std::span<const double> q) {
    check_same_size(p.size(), q.size());
    check_normalized(p);
    check_normalized(q);
    double sum = 0;
    for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
    return sum;
}

Rational total_variation(std::span<const Rational> p, std::span<const Rational> q) {
    check_same_size(p.size(), q.size());
    check_normalized(p);
    check_normalized(q);
    Rational sum = 0;
    for (std::size_t i = 0; i < p.size(); ++i) sum += absolute(Rational(p[i] - q[i]));
    return sum;
}

double renyi2(std::span<const double> p, std::span<const double> q) {
    check_same_size(p.size(), q.size());
    double sum = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        if (q[i] == 0) return std::numeric_limits<double>::infinity();
        sum += p[i] * p[i] / q[i];
    }
    return std::log2(sum);
}

ChannelModel::ChannelModel(ChannelKind kind, Rational delta, std::vector<std::vector<Rational>> rows)
    : kind_(kind), delta_(std::move(delta)), rows_(std::move(rows)) {}

ChannelModel ChannelModel::symmetric(std::uint64_t q, const Rational& delta) {
    if (q < 2) throw Error(ErrorKind::invalid_parameter, "channel alphabet needs at least 2 symbols");
    if (delta < 0 || delta > 1) throw Error(ErrorKind::invalid_parameter, "delta must lie in [0, 1]");
    const Rational off = delta / (q - 1);
    std::vector<std::vector<Rational>> rows(q, std::vector<Rational>(q, off));
    for (std::uint64_t x = 0; x < q; ++x) rows[x][x] = 1 - delta;
    return {ChannelKind::symmetric, delta, std::move(rows)};
}

ChannelModel ChannelModel::erasure(std::uint64_t q, const Rational& delta) {
    if (q < 2) throw Error(ErrorKind::invalid_parameter, "channel alphabet needs at least 2 symbols");
    if (delta < 0 || delta > 1) throw Error(ErrorKind::invalid_parameter, "delta must lie in [0, 1]");
    std::vector<std::vector<Rational>> rows(q, std::vector<Rational>(q + 1, 0));
    for (std::uint64_t x = 0; x < q; ++x) {
        rows[x][x] = 1 - delta;
        rows[x][q] = delta;
    }
    return {ChannelKind::erasure, delta, std::move(rows)};
}

ChannelModel ChannelModel::identity(std::uint64_t q) {
    ChannelModel w = symmetric(q, 0);
    w.kind_ = ChannelKind::identity;
    return w;
}

ChannelModel ChannelModel::uniform_noise(std::uint64_t q) {
    if (q < 2) throw Error(ErrorKind::invalid_parameter, "channel alphabet needs at least 2 symbols");
    std::vector<std::vector<Rational>> rows(q, std::vector<Rational>(q, Rational(1, q)));
    return {ChannelKind::uniform_noise, Rational(q - 1, q), std::move(rows)};
}

ChannelModel ChannelModel::product(const ChannelModel& w, std::uint32_t length) {
    if (length < 1) throw Error(ErrorKind::invalid_parameter, "product length must be at least 1");
    std::vector<std::vector<Rational>> rows{{Rational(1)}};
    for (std::uint32_t step = 0; step < length; ++step) {
        // New symbol becomes the most significant digit.
        std::vector<std::vector<Rational>> next(rows.size() * w.inputs(),
                                                std::vector<Rational>(rows.front().size() * w.outputs()));
        for (std::size_t a = 0; a < w.inputs(); ++a)
            for (std::size_t x = 0; x < rows.size(); ++x)
                for (std::size_t b = 0; b < w.outputs(); ++b)
                    for (std::size_t z = 0; z < rows.front().size(); ++z)
                        next[a * rows.size() + x][b * rows.front().size() + z] = w.rows_[a][b] * rows[x][z];
        rows = std::move(next);
    }
    return {ChannelKind::product, w.delta_, std::move(rows)};
}

std::vector<std::vector<double>> ChannelModel::rows_double() const {
    std::vector<std::vector<double>> out(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (const auto& v : rows_[i]) out[i].push_back(to_double(v));
    return out;
}

std::string ChannelModel::name() const {
    switch (kind_) {
        case ChannelKind::symmetric:
        case ChannelKind::erasure:
            return to_string(kind_) + "(" + to_string(delta_) + ")";
        default:
            return to_string(kind_);
    }
}

ChannelKind parse_channel_kind(const std::string& text) {
    if (text == "symmetric") return ChannelKind::symmetric;
    if (text == "erasure") return ChannelKind::erasure;
    if (text == "identity") return ChannelKind::identity;
    if (text == "uniform" || text == "uniform-noise") return ChannelKind::uniform_noise;
    throw Error(ErrorKind::parse_error, "unknown channel '" + text + "'");
}

std::string to_string(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::symmetric: return "symmetric";
        case ChannelKind::erasure: return "erasure";
        case ChannelKind::identity: return "identity";
        case ChannelKind::uniform_noise: return "uniform-noise";
        case ChannelKind::product: return "product";
    }
    return "unknown";
}

namespace {

template <class T>
T d2_power(const std::vector<std::vector<T>>& w, std::span<const T> input) {
    check_same_size(w.size(), input.size());
    const std::size_t outputs = w.empty() ? 0 : w.front().size();
    std::vector<T> out(outputs, T(0));
    for (std::size_t x = 0; x < w.size(); ++x)
        for (std::size_t z = 0; z < outputs; ++z) out[z] += input[x] * w[x][z];
    T total = 0;
    for (std::size_t x = 0; x < w.size(); ++x) {
        if (input[x] == 0) continue;
        T inner = 0;
        for (std::size_t z = 0; z < outputs; ++z)
            if (w[x][z] != 0) inner += w[x][z] * w[x][z] / out[z];
        total += input[x] * inner;
    }
    return total;
}

}  // namespace

Rational conditional_d2_power(const ChannelModel& w, std::span<const Rational> input) {
    check_normalized(input);
    return d2_power(w.rows(), input);
}

double conditional_d2(const ChannelModel& w, std::span<const double> input) {
    check_normalized(input);
    return std::log2(d2_power(w.rows_double(), input));
}

double conditional_d2_uniform(const ChannelModel& w) {
    const std::vector<double> input(w.inputs(), 1.0 / static_cast<double>(w.inputs()));
    return std::log2(d2_power(w.rows_double(), std::span<const double>(input)));
}

namespace {

struct SeedVector {
    std::vector<Symbol> s;
    Symbol s0;
};

// Every normalized nonzero vector (highest nonzero coordinate equal to 1)
// times every offset.
std::vector<SeedVector> enumerate_seeds(const Field& f, std::uint32_t len) {
    const std::uint64_t q = f.size();
    std::vector<SeedVector> seeds;
    for (std::uint32_t pivot = 1; pivot <= len; ++pivot) {
        std::vector<Symbol> s(len, 0);
        s[pivot - 1] = 1;
        while (true) {
            for (Symbol s0 = 0; s0 < q; ++s0) seeds.push_back({s, s0});
            std::uint32_t j = 0;
            while (j + 1 < pivot && s[j] == q - 1) s[j++] = 0;
            if (j + 1 >= pivot) break;
            ++s[j];
        }
    }
    return seeds;
}

template <class T>
struct LeakageValues {
    T max_tv = 0;
    T pairwise_tv = 0;
    T d2_power = 0;
};

template <class T>
T convert(const Rational& v) {
    if constexpr (std::is_same_v<T, Rational>)
        return v;
    else
        return to_double(v);
}

template <class T>
LeakageValues<T> enumerate_leakage(const Field& f, std::uint32_t len, const ChannelModel& vector_channel) {
    const std::uint64_t q = f.size();
    const std::size_t inputs = vector_channel.inputs();
    const std::size_t outputs = vector_channel.outputs();
    std::vector<std::vector<T>> w(inputs, std::vector<T>(outputs));
    for (std::size_t x = 0; x < inputs; ++x)
        for (std::size_t z = 0; z < outputs; ++z) w[x][z] = convert<T>(vector_channel.rows()[x][z]);

    const auto seeds = enumerate_seeds(f, len);
    const std::size_t cells = seeds.size() * outputs;
    // P(s, z | m) = W(z | x) / (|S| |h_s^{-1}(m)|) summed over the preimage.
    const T weight = convert<T>(Rational(BigInt(1), BigInt(seeds.size()) * big_pow(q, len - 1)));
    std::vector<std::vector<T>> dist(q, std::vector<T>(cells, T(0)));
    std::vector<Symbol> x(len, 0);
    for (std::size_t si = 0; si < seeds.size(); ++si) {
        const auto& seed = seeds[si];
        std::fill(x.begin(), x.end(), 0);
        for (std::size_t xi = 0; xi < inputs; ++xi) {
            Symbol m = seed.s0;
            for (std::uint32_t j = 0; j < len; ++j) m = f.add(m, f.mul(seed.s[j], x[j]));
            auto& row = dist[m];
            for (std::size_t z = 0; z < outputs; ++z)
                if (w[xi][z] != 0) row[si * outputs + z] += weight * w[xi][z];
            for (std::uint32_t j = 0; j < len; ++j) {
                if (++x[j] < q) break;
                x[j] = 0;
            }
        }
    }

    LeakageValues<T> out;
    std::vector<T> mean(cells, T(0));
    for (const auto& row : dist)
        for (std::size_t c = 0; c < cells; ++c) mean[c] += row[c];
    for (auto& v : mean) v /= T(q);
    for (const auto& row : dist) {
        T tv = 0;
        for (std::size_t c = 0; c < cells; ++c) tv += absolute(T(row[c] - mean[c]));
        if (tv > out.max_tv) out.max_tv = tv;
    }
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = a + 1; b < q; ++b) {
            T tv = 0;
            for (std::size_t c = 0; c < cells; ++c) tv += absolute(T(dist[a][c] - dist[b][c]));
            if (tv > out.pairwise_tv) out.pairwise_tv = tv;
        }
    const std::vector<T> uniform(inputs, T(1) / T(inputs));
    out.d2_power = d2_power(w, std::span<const T>(uniform));
    return out;
}

template <class T>
bool within(const T& value, const T& bound_squared) {
    const T capped = std::min<T>(bound_squared, T(4));
    if constexpr (std::is_same_v<T, Rational>)
        return value * value <= capped;
    else
        return value <= std::sqrt(capped) + 1e-12;
}

template <class T>
void fill_report(LeakageReport& report, const LeakageValues<T>& v, const Rational& factor, std::uint64_t q,
                 std::uint32_t len) {
    const T a = convert<T>(factor);
    const T tight_squared = T(4) * a * (v.d2_power - T(1));
    const T simplified_squared = T(4) * v.d2_power / convert<T>(Rational(big_pow(q, len - 1)));
    report.exact_max_tv = as_double(v.max_tv);
    report.exact_pairwise_tv = as_double(v.pairwise_tv);
    report.max_within_tight = within(v.max_tv, tight_squared);
    report.pairwise_within_tight = within(v.pairwise_tv, tight_squared);
    if constexpr (std::is_same_v<T, Rational>) {
        report.tight_within_simplified = std::min<T>(tight_squared, T(4)) <= std::min<T>(simplified_squared, T(4));
        report.d2_bits = log2_rational(v.d2_power);
    } else {
        report.tight_within_simplified = std::min(tight_squared, 4.0) <= std::min(simplified_squared, 4.0) + 1e-12;
        report.d2_bits = std::log2(v.d2_power);
    }
}

}  // namespace

LeakageReport exact_leakage(const SecrecyParams& params, const ChannelModel& w) {
    const Field& f = params.field();
    const std::uint64_t q = f.size();
    const std::uint32_t len = params.ell_prime();
    if (w.inputs() != q) throw Error(ErrorKind::shape_mismatch, "channel input alphabet differs from the field");
    const BigInt seed_count = normalized_vector_count(q, len) * q;
    const BigInt states = big_pow(q, len) * seed_count * big_pow(w.outputs(), len);
    if (states > kMaxLeakageStates)
        throw Error(ErrorKind::too_large, "leakage enumeration over " + states.str() + " states");

    LeakageReport report;
    report.q = q;
    report.ell_prime = len;
    report.channel = w.name();
    report.states = states.convert_to<std::uint64_t>();
    report.exact_arithmetic = states <= kExactLeakageStates;

    const ChannelModel vector_channel = ChannelModel::product(w, len);
    const Rational factor = tight_bound_factor(q, len);
    if (report.exact_arithmetic)
        fill_report(report, enumerate_leakage<Rational>(f, len, vector_channel), factor, q, len);
    else
        fill_report(report, enumerate_leakage<double>(f, len, vector_channel), factor, q, len);

    const double log2_q = std::log2(static_cast<double>(q));
    report.d2_bits = std::clamp(report.d2_bits, 0.0, len * log2_q);
    report.kappa_true = report.d2_bits / (len * log2_q);
    const LeakageBound bound = leakage_bound(params, report.d2_bits);
    report.bound_tight = bound.tight;
    report.bound_simplified = bound.simplified;
    return report;
}

std::vector<std::vector<std::uint32_t>> monomial_exponents(std::uint32_t ell, std::uint32_t k) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> current(ell, 0);
    auto fill = [&](auto& self, std::uint32_t position, std::uint32_t remaining) -> void {
        if (position + 1 == ell) {
            current[position] = remaining;
            out.push_back(current);
            return;
        }
        for (std::uint32_t e = remaining + 1; e-- > 0;) {
            current[position] = e;
            self(self, position + 1, remaining - e);
        }
    };
    for (std::uint32_t d = 0; d <= k; ++d) fill(fill, 0, d);
    return out;
}

Rational exact_id_error(const IdCodeParams& params, const Identity& id_i, const Identity& id_j) {
    if (!(id_i.params() == params) || !(id_j.params() == params))
        throw Error(ErrorKind::shape_mismatch, "identities do not match the code parameters");
    const Field& f = params.field();
    const std::uint64_t q = f.size();
    const BigInt points = big_pow(q, params.ell());
    if (points > 10'000'000) throw Error(ErrorKind::too_large, "enumeration over " + points.str() + " points");

    const auto exponents = monomial_exponents(params.ell(), params.k());
    const auto ci = id_i.coeffs().values();
    const auto cj = id_j.coeffs().values();
    std::vector<Symbol> diff(exponents.size());
    for (std::size_t t = 0; t < diff.size(); ++t) diff[t] = f.sub(ci[t], cj[t]);

    // powers[j][e] = r_j^e, rebuilt per point.
    std::vector<std::vector<Symbol>> powers(params.ell(), std::vector<Symbol>(params.k() + 1));
    std::vector<Symbol> r(params.ell(), 0);
    std::uint64_t agree = 0;
    const std::uint64_t total = points.convert_to<std::uint64_t>();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        for (std::uint32_t j = 0; j < params.ell(); ++j) {
            powers[j][0] = 1;
            for (std::uint32_t e = 1; e <= params.k(); ++e) powers[j][e] = f.mul_reference(powers[j][e - 1], r[j]);
        }
        Symbol value = 0;
        for (std::size_t t = 0; t < exponents.size(); ++t) {
            if (diff[t] == 0) continue;
            Symbol term = diff[t];
            for (std::uint32_t j = 0; j < params.ell(); ++j) term = f.mul_reference(term, powers[j][exponents[t][j]]);
            value = f.add_reference(value, term);
        }
        if (value == 0) ++agree;
        for (std::uint32_t j = 0; j < params.ell(); ++j) {
            if (++r[j] < q) break;
            r[j] = 0;
        }
    }
    return Rational(BigInt(agree), points);
}

}  // namespace rmsid
