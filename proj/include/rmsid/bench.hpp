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

#ifndef RMSID_BENCH_HPP
#define RMSID_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rmsid/plan.hpp"

namespace rmsid {

struct BenchRecord {
    std::string operation;
    std::uint64_t q = 0;
    std::uint32_t ell = 0;
    std::uint32_t k = 0;
    std::uint32_t n = 0;
    std::uint32_t ell_prime = 0;
    double kappa = 0;
    std::uint32_t reps = 0;
    double mean_s = 0;
    double median_s = 0;
    double min_s = 0;
    double identity_bits = 0;
};

struct BenchOptions {
    std::uint32_t reps = 30;
    /// Each timed sample repeats the operation until it spans at least this.
    double min_sample_seconds = 50e-6;
    std::uint64_t seed = 1;
};

inline constexpr std::uint32_t kMinBenchReps = 30;
inline constexpr std::uint64_t kBenchMaxCoefficients = std::uint64_t{1} << 22;
inline const std::vector<double> kBenchKappas{0.0, 0.2, 0.5, 0.8};

/// Times n-challenge generation, n-tag encryption, decryption and
/// verification for one plan. Times are per call of the whole n-fold
/// operation. reps == 0 yields no records; 0 < reps < 30 is rejected.
std::vector<BenchRecord> run_bench(const PlanReport& plan, const BenchOptions& options = {});

/// Grid points whose identities have at most `max_coefficients` coefficients.
std::vector<std::pair<std::uint32_t, std::uint32_t>> bench_grid(std::uint64_t max_coefficients = kBenchMaxCoefficients);

/// Schema line "# bench-csv v1" and the column header.
std::string bench_csv_header();
std::string to_csv(const BenchRecord& record);

}  // namespace rmsid

#endif
