// Copyright 2026 The qhdrg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef QHDRG_RNG_H
#define QHDRG_RNG_H

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>

namespace qhdrg {

/// Sub-stream labels. Each trial draws from independent streams keyed by purpose.
enum class StreamLabel : std::uint64_t {
    QuditNoise = 1,
    MeasurementNoise = 2,
    Bootstrap = 3,
};

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Order-dependent hash of a sequence of words. Used to derive cell and trial seeds.
std::uint64_t hash_words(std::initializer_list<std::uint64_t> words);

/// Deterministic stream derived from (master seed, trial index, label). Two streams with the
/// same triple produce identical draws no matter which thread owns them or when they run.
class RngStream {
   public:
    using result_type = std::uint64_t;

    RngStream(std::uint64_t master_seed, std::uint64_t trial_index, StreamLabel label);

    static constexpr result_type min() {
        return std::numeric_limits<result_type>::min();
    }
    static constexpr result_type max() {
        return std::numeric_limits<result_type>::max();
    }
    result_type operator()() {
        return engine_();
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace qhdrg

#endif
