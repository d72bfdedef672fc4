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


// Draws mixed samples whose copula is a given parametric family: the
// ordinal variable discretizes U at fixed cumulative probabilities and
// Y = Phi^-1(V).

#ifndef MIXCOP_TESTS_COPULA_SAMPLER_HPP_
#define MIXCOP_TESTS_COPULA_SAMPLER_HPP_

#include <algorithm>
#include <vector>

#include "mixcop/copula.hpp"
#include "mixcop/numerics.hpp"
#include "mixcop/random.hpp"
#include "mixcop/sample.hpp"

namespace testsampler {

inline mixcop::MixedPairSample copula_sample(const mixcop::CopulaSpec& spec, const std::vector<double>& cum,
                                             std::size_t n, std::uint64_t seed) {
  mixcop::Rng rng(seed);
  std::vector<int> x(n);
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = rng.uniform();
    const double w = rng.uniform();
    const double u = mixcop::numerics::find_root(
        [&](double t) { return mixcop::copula_cond_1g2(spec, t, v) - w; }, 0.0, 1.0, 1e-13, 1e-14);
    x[i] = 1 + static_cast<int>(std::upper_bound(cum.begin(), cum.end(), u) - cum.begin());
    y[i] = mixcop::numerics::normal_quantile(v);
  }
  return mixcop::make_sample(std::move(x), std::move(y), static_cast<int>(cum.size()) + 1);
}

}  // namespace testsampler

#endif  // MIXCOP_TESTS_COPULA_SAMPLER_HPP_
