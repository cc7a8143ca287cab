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

#ifndef RMSID_ENTROPY_HPP
#define RMSID_ENTROPY_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace rmsid {

/// Source of uniform integers. Every randomized operation in the library
/// draws exclusively through this interface, so a caller-owned source makes
/// runs reproducible and lets tests script exact draw sequences.
class EntropySource {
  public:
    virtual ~EntropySource() = default;

    /// Uniform integer in [0, bound). `bound` must be at least 1.
    virtual std::uint64_t uniform_below(std::uint64_t bound) = 0;
};

/// mt19937_64-backed source. The engine output is fully specified by the
/// standard and the reduction to [0, bound) is done here, so identical seeds
/// give identical draws on every platform.
class SeededEntropy final : public EntropySource {
  public:
    explicit SeededEntropy(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t uniform_below(std::uint64_t bound) override;

  private:
    std::mt19937_64 engine_;
};

/// Replays a fixed script of draws. Throws when the script runs out or a
/// scripted value is not below the requested bound.
class ScriptedEntropy final : public EntropySource {
  public:
    explicit ScriptedEntropy(std::vector<std::uint64_t> script)
        : script_(std::move(script)) {}

    std::uint64_t uniform_below(std::uint64_t bound) override;

    std::size_t consumed() const noexcept { return position_; }

  private:
    std::vector<std::uint64_t> script_;
    std::size_t position_ = 0;
};

/// Seed drawn from std::random_device, for non-deterministic CLI runs.
std::uint64_t fresh_seed();

}  // namespace rmsid

#endif
