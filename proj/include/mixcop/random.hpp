// Copyright 2026 The mixcop Authors
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

// Seeded random source shared by the simulators and the latent-score
// generator. Only the raw 64-bit engine output is used, so streams are
// identical across standard libraries.

#ifndef MIXCOP_RANDOM_HPP_
#define MIXCOP_RANDOM_HPP_

#include <cstdint>
#include <random>

#include "mixcop/numerics.hpp"

namespace mixcop {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  // Uniform on the open interval (0, 1) with 53 random bits.
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal() { return numerics::normal_quantile(uniform()); }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

}  // namespace mixcop

#endif  // MIXCOP_RANDOM_HPP_
