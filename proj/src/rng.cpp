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

#include "jaws/rng.hpp"

#include <cmath>

namespace jaws {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

RngState::RngState(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

RngState RngState::split(std::uint64_t stream) const {
    return RngState(splitmix64(seed_ ^ splitmix64(stream + 0x632BE59BD9B4E019ULL)));
}

double RngState::normal() { return normal_(engine_); }

double RngState::uniform() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
}

// A fresh distribution object per call keeps draws free of cached state.
double RngState::chi2(double dof) {
    return std::gamma_distribution<double>(0.5 * dof, 2.0)(engine_);
}

double RngState::chi(double dof) { return std::sqrt(chi2(dof)); }

} // namespace jaws
