// Copyright 2026 The jaws Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace jaws {

/**
 * Seeded pseudorandom stream.
 *
 * `split(k)` derives substream k from the seed alone, so substreams do not
 * depend on how much of the parent has been consumed. Monte Carlo loops use
 * one substream per sample, which keeps results independent of scheduling.
 */
class RngState {
  public:
    explicit RngState(std::uint64_t seed);

    RngState split(std::uint64_t stream) const;

    std::uint64_t seed() const { return seed_; }

    double normal();
    double uniform();
    double chi2(double dof);
    double chi(double dof);

    std::mt19937_64 &engine() { return engine_; }

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

std::uint64_t splitmix64(std::uint64_t x);

} // namespace jaws
