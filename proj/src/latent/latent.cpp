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

#include "mixcop/latent.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mixcop/error.hpp"
#include "mixcop/numerics.hpp"
#include "mixcop/random.hpp"

namespace mixcop {
namespace {

constexpr double kRhoClip = 0.999;

std::vector<double> normal_scores(const std::vector<double>& u) {
  std::vector<double> s(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) s[i] = numerics::normal_quantile(u[i]);
  return s;
}

double loglik_from_scores(const PseudoObs& p, const std::vector<double>& s, double rho) {
  const double r = std::sqrt((1.0 - rho) * (1.0 + rho));
  double total = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto j = static_cast<std::size_t>(p.x[i]);
    const double lo = (p.cutpoints[j - 1] - rho * s[i]) / r;
    const double hi = (p.cutpoints[j] - rho * s[i]) / r;
    total += numerics::log_normal_pdf(s[i]) + std::log(std::max(numerics::normal_interval_prob(lo, hi), 1e-300));
  }
  return total;
}

}  // namespace

double polyserial_loglik(const PseudoObs& p, double rho) {
  if (!(std::fabs(rho) < 1.0)) throw DomainError("polyserial correlation must lie in (-1, 1)");
  return loglik_from_scores(p, normal_scores(p.u_y), rho);
}

double polyserial_mle(const PseudoObs& p) {
  if (p.k < 2) throw ValidationError("polyserial correlation needs at least two categories");
  if (p.x.size() != p.u_y.size()) throw ValidationError("pseudo-observation lengths differ");
  const std::vector<double> s = normal_scores(p.u_y);
  const numerics::Bound bound{-0.9999, 0.9999};
  const double start = 0.0;
  numerics::MinimizeOptions opts;
  opts.tolerance = 1e-13;
  opts.x_tolerance = 1e-9;
  const numerics::OptimizerReport rep = numerics::minimize(
      [&](std::span<const double> th) { return -loglik_from_scores(p, s, th[0]); },
      std::span<const numerics::Bound>(&bound, 1), std::span<const double>(&start, 1), opts);
  return rep.argmin[0];
}

LatentScoreSet gen_latent_scores(const PseudoObs& p, double rho_n, std::uint64_t seed) {
  const std::size_t n = p.u_y.size();
  if (p.x.size() != n) throw ValidationError("pseudo-observation lengths differ");
  LatentScoreSet ls;
  ls.rho_n = std::clamp(rho_n, -kRhoClip, kRhoClip);
  ls.seed = seed;
  ls.u_z.assign(n, 0.0);
  ls.z.assign(n, 0.0);
  ls.u_w.assign(n, 0.0);
  ls.psi.assign(n, 0.0);

  std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(p.k));
  for (std::size_t i = 0; i < n; ++i) members[static_cast<std::size_t>(p.x[i] - 1)].push_back(i);

  Rng rng(seed);
  const double r = std::sqrt((1.0 - ls.rho_n) * (1.0 + ls.rho_n));
  for (int j = 1; j <= p.k; ++j) {
    const std::vector<std::size_t>& idx = members[static_cast<std::size_t>(j - 1)];
    if (idx.empty()) continue;
    for (std::size_t i : idx) {
      const double w = rng.uniform();
      ls.u_w[i] = numerics::normal_cdf(r * numerics::normal_quantile(w) +
                                       ls.rho_n * numerics::normal_quantile(p.u_y[i]));
    }
    const double lo = p.fx[static_cast<std::size_t>(j - 1)];
    const double hi = p.fx[static_cast<std::size_t>(j)];
    std::vector<double> psi;
    psi.reserve(idx.size());
    for (std::size_t i : idx) {
      double v = rng.uniform(lo, hi);
      if (v <= lo) v = std::nextafter(lo, hi);
      v = std::min({v, hi, std::nextafter(1.0, 0.0)});
      ls.psi[i] = v;
      psi.push_back(v);
    }
    std::sort(psi.begin(), psi.end());

    // Stable ranking of u_w inside the category: ties go by index.
    std::vector<std::size_t> order(idx.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return ls.u_w[idx[a]] < ls.u_w[idx[b]]; });
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
      const std::size_t i = idx[order[rank]];
      ls.u_z[i] = psi[rank];
      ls.z[i] = numerics::normal_quantile(psi[rank]);
    }
  }
  return ls;
}

std::vector<std::pair<double, double>> normal_score_pairs(const LatentScoreSet& ls, const PseudoObs& p) {
  if (ls.z.size() != p.u_y.size()) throw ValidationError("latent scores and pseudo-observations differ in length");
  std::vector<std::pair<double, double>> out(ls.z.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = {ls.z[i], numerics::normal_quantile(p.u_y[i])};
  return out;
}

}  // namespace mixcop
