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

#include "rmsid/entropy.hpp"

#include <string>

#include "rmsid/error.hpp"

namespace rmsid {

std::uint64_t SeededEntropy::uniform_below(std::uint64_t bound) {
    if (bound == 0) throw Error(ErrorKind::invalid_parameter, "uniform_below: bound must be positive");
    if (bound == 1) return 0;
    // Reject the low (2^64 mod bound) outputs so the remainder is unbiased.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = engine_();
        if (x >= threshold) return x % bound;
    }
}

std::uint64_t ScriptedEntropy::uniform_below(std::uint64_t bound) {
    if (position_ >= script_.size())
        throw Error(ErrorKind::invalid_parameter, "scripted entropy exhausted");
    const std::uint64_t v = script_[position_];
    if (v >= bound)
        throw Error(ErrorKind::invalid_parameter,
                    "scripted draw " + std::to_string(v) + " not below bound " + std::to_string(bound));
    ++position_;
    return v;
}

std::uint64_t fresh_seed() {
    std::random_device device;
    return (std::uint64_t{device()} << 32) ^ device();
}

}  // namespace rmsid
