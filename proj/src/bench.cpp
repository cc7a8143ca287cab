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

#include "rmsid/bench.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

namespace rmsid {

namespace {

using Clock = std::chrono::steady_clock;

volatile std::uint64_t g_sink = 0;

struct Timing {
    double mean = 0;
    double median = 0;
    double min = 0;
};

template <class Fn>
double time_batch(Fn& fn, std::uint64_t inner) {
    const auto start = Clock::now();
    for (std::uint64_t i = 0; i < inner; ++i) fn();
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <class Fn>
Timing measure(Fn fn, std::uint32_t reps, double min_sample) {
    for (int i = 0; i < 3; ++i) fn();
    std::uint64_t inner = 1;
    while (inner < (std::uint64_t{1} << 20) && time_batch(fn, inner) < min_sample) inner *= 2;

    std::vector<double> samples(reps);
    for (auto& s : samples) s = time_batch(fn, inner) / static_cast<double>(inner);
    std::sort(samples.begin(), samples.end());
    Timing t;
    t.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / reps;
    t.median = reps % 2 ? samples[reps / 2] : (samples[reps / 2 - 1] + samples[reps / 2]) / 2;
    t.min = samples.front();
    return t;
}

}  // namespace

std::vector<BenchRecord> run_bench(const PlanReport& plan, const BenchOptions& options) {
    if (options.reps == 0) return {};
    if (options.reps < kMinBenchReps)
        throw Error(ErrorKind::invalid_parameter, "benchmarks need at least " + std::to_string(kMinBenchReps) +
                                                      " repetitions, got " + std::to_string(options.reps));
    const IdCodeParams& params = plan.id_params;
    SeededEntropy rng(options.seed);
    const Identity id = Identity::random(params, rng);
    const SecrecyParams secrecy(params.field_ptr(), plan.length.ell_prime, plan.kappa);

    MultiChallenge mc = generate_multi(id, rng);
    std::vector<Seed> seeds;
    for (std::uint32_t i = 0; i < params.n_challenges(); ++i) seeds.push_back(sample_seed(rng, secrecy));
    std::vector<Ciphertext> xs = encrypt_tags(mc, seeds, rng);

    auto record = [&](std::string op, const Timing& t) {
        return BenchRecord{std::move(op),
                           params.field().size(),
                           params.ell(),
                           params.k(),
                           params.n_challenges(),
                           plan.length.ell_prime,
                           plan.kappa,
                           options.reps,
                           t.mean,
                           t.median,
                           t.min,
                           plan.identity_bits};
    };

    std::vector<BenchRecord> out;
    out.push_back(record("challenge", measure(
                                          [&] {
                                              MultiChallenge fresh = generate_multi(id, rng);
                                              g_sink = g_sink + fresh.challenges.back().tag.value();
                                          },
                                          options.reps, options.min_sample_seconds)));
    out.push_back(record("encrypt", measure(
                                        [&] {
                                            auto cts = encrypt_tags(mc, seeds, rng);
                                            g_sink = g_sink + cts.back().x.values().back();
                                        },
                                        options.reps, options.min_sample_seconds)));
    out.push_back(record("decrypt", measure(
                                        [&] {
                                            auto tags = decrypt_tags(xs, seeds);
                                            g_sink = g_sink + tags.back().value();
                                        },
                                        options.reps, options.min_sample_seconds)));
    out.push_back(record("verify", measure([&] { g_sink = g_sink + verify_multi(id, mc); }, options.reps,
                                           options.min_sample_seconds)));
    return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> bench_grid(std::uint64_t max_coefficients) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (auto [ell, k] : reference_grid())
        if (binomial(std::uint64_t{ell} + k, ell) <= max_coefficients) out.emplace_back(ell, k);
    return out;
}

std::string bench_csv_header() {
    return "# bench-csv v1\noperation,q,ell,k,n,ell_prime,kappa,reps,mean_s,median_s,min_s,identity_bits\n";
}

std::string to_csv(const BenchRecord& r) {
    std::ostringstream out;
    out.precision(9);
    out << r.operation << ',' << r.q << ',' << r.ell << ',' << r.k << ',' << r.n << ',' << r.ell_prime << ','
        << r.kappa << ',' << r.reps << ',' << r.mean_s << ',' << r.median_s << ',' << r.min_s << ','
        << r.identity_bits << '\n';
    return out.str();
}

}  // namespace rmsid
