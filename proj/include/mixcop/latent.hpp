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

// Polyserial correlation and latent normal scores for the ordinal
// variable. The scores fall in the bins cut by the ordinal margin and
// carry the within-category ordering of a Gaussian-copula draw.

#ifndef MIXCOP_LATENT_HPP_
#define MIXCOP_LATENT_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "mixcop/sample.hpp"

namespace mixcop {

struct LatentScoreSet {
  std::vector<double> u_z;  // latent uniforms, F_X(x-1) < u_z <= F_X(x)
  std::vector<double> z;    // normal scores of u_z
  std::vector<double> u_w;  // Gaussian-copula draws whose ranks u_z inherit
  std::vector<double> psi;  // bin-uniform draws, in generation order per index
  double rho_n = 0.0;
  std::uint64_t seed = 0;
};

// Log-likelihood of the latent-Gaussian model for (x, Phi^-1(u_y)) up to
// the constant from the continuous margin.
double polyserial_loglik(const PseudoObs& p, double rho);

// Maximum likelihood polyserial correlation. Throws ValidationError when
// the ordinal variable has a single category.
double polyserial_mle(const PseudoObs& p);

// rho_n is clipped to +-0.999. Deterministic for a given seed.
LatentScoreSet gen_latent_scores(const PseudoObs& p, double rho_n, std::uint64_t seed);

// (z_i, Phi^-1(u_iY)) for every observation.
std::vector<std::pair<double, double>> normal_score_pairs(const LatentScoreSet& ls, const PseudoObs& p);

}  // namespace mixcop

#endif  // MIXCOP_LATENT_HPP_
