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

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>

#include "mixcop/fit.hpp"
#include "mixcop/latent.hpp"

namespace mixcop {
namespace {

std::vector<std::size_t> ordinal_ranks(std::span<const double> v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<std::size_t> r(v.size());
  for (std::size_t t = 0; t < idx.size(); ++t) r[idx[t]] = t + 1;
  return r;
}

// Binomial(n, p) probabilities by recurrence outward from the mode.
std::vector<double> binomial_pmf(std::size_t n, double p) {
  std::vector<double> pmf(n + 1, 0.0);
  if (p <= 0.0) {
    pmf[0] = 1.0;
    return pmf;
  }
  if (p >= 1.0) {
    pmf[n] = 1.0;
    return pmf;
  }
  const double nd = static_cast<double>(n);
  const auto mode = static_cast<std::size_t>(std::min(nd, std::floor((nd + 1.0) * p)));
  const double md = static_cast<double>(mode);
  pmf[mode] = std::exp(std::lgamma(nd + 1.0) - std::lgamma(md + 1.0) - std::lgamma(nd - md + 1.0) +
                       md * std::log(p) + (nd - md) * std::log1p(-p));
  const double odds = p / (1.0 - p);
  for (std::size_t m = mode; m < n && pmf[m] > 0.0; ++m) {
    pmf[m + 1] = pmf[m] * static_cast<double>(n - m) / static_cast<double>(m + 1) * odds;
  }
  for (std::size_t m = mode; m > 0 && pmf[m] > 0.0; --m) {
    pmf[m - 1] = pmf[m] * static_cast<double>(m) / static_cast<double>(n - m + 1) / odds;
  }
  return pmf;
}

// tail[r] = P(Bin(n, p) >= r) = F_B(p; r, n + 1 - r) for r = 1..n.
std::vector<double> binomial_tail(std::size_t n, double p) {
  const std::vector<double> pmf = binomial_pmf(n, p);
  std::vector<double> tail(n + 2, 0.0);
  for (std::size_t r = n + 1; r-- > 0;) tail[r] = tail[r + 1] + pmf[r];
  return tail;
}

}  // namespace

EmpiricalBetaCopula::EmpiricalBetaCopula(std::span<const double> u_z, std::span<const double> u_y)
    : r_z_(ordinal_ranks(u_z)), r_y_(ordinal_ranks(u_y)) {
  if (u_z.size() != u_y.size()) throw ValidationError("beta copula inputs differ in length");
  if (u_z.empty()) throw ValidationError("beta copula needs at least one point");
  rz_by_ry_.resize(n());
  for (std::size_t i = 0; i < n(); ++i) rz_by_ry_[r_y_[i] - 1] = r_z_[i];
}

double EmpiricalBetaCopula::cdf(double u, double v) const {
  if (u <= 0.0 || v <= 0.0) return 0.0;
  const std::vector<double> tu = binomial_tail(n(), std::min(u, 1.0));
  const std::vector<double> tv = binomial_tail(n(), std::min(v, 1.0));
  double s = 0.0;
  for (std::size_t i = 0; i < n(); ++i) s += tu[r_z_[i]] * tv[r_y_[i]];
  return std::clamp(s / static_cast<double>(n()), 0.0, 1.0);
}

std::function<double(double)> EmpiricalBetaCopula::section(double u) const {
  // C(u, v) = (1/n) sum_m pmf_v(m) A(m) with A(m) = sum_{r <= m} tail_u(rz of rank r).
  const std::size_t nn = n();
  auto cum = std::make_shared<std::vector<double>>(nn + 1, 0.0);
  if (u > 0.0) {
    const std::vector<double> tu = binomial_tail(nn, std::min(u, 1.0));
    for (std::size_t r = 1; r <= nn; ++r) (*cum)[r] = (*cum)[r - 1] + tu[rz_by_ry_[r - 1]];
  }
  return [cum, nn](double v) {
    if (v <= 0.0) return 0.0;
    const std::vector<double> pmf = binomial_pmf(nn, std::min(v, 1.0));
    double s = 0.0;
    for (std::size_t m = 1; m <= nn; ++m) s += pmf[m] * (*cum)[m];
    return std::clamp(s / static_cast<double>(nn), 0.0, 1.0);
  };
}

AveragedBetaCopula::AveragedBetaCopula(std::vector<EmpiricalBetaCopula> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ValidationError("averaged beta copula needs at least one part");
}

double AveragedBetaCopula::cdf(double u, double v) const {
  double s = 0.0;
  for (const auto& b : parts_) s += b.cdf(u, v);
  return s / static_cast<double>(parts_.size());
}

std::function<double(double)> AveragedBetaCopula::section(double u) const {
  std::vector<std::function<double(double)>> secs;
  for (const auto& b : parts_) secs.push_back(b.section(u));
  return [secs = std::move(secs)](double v) {
    double s = 0.0;
    for (const auto& f : secs) s += f(v);
    return s / static_cast<double>(secs.size());
  };
}

double beta_copula_cdf(const EmpiricalBetaCopula& b, double u_z, double u_y) { return b.cdf(u_z, u_y); }

double empirical_copula_cdf(const EmpiricalBetaCopula& b, double u_z, double u_y) {
  const double n = static_cast<double>(b.n());
  std::size_t count = 0;
  for (std::size_t i = 0; i < b.n(); ++i) {
    if (static_cast<double>(b.r_z()[i]) <= u_z * n && static_cast<double>(b.r_y()[i]) <= u_y * n) ++count;
  }
  return static_cast<double>(count) / n;
}

EmpiricalBetaCopula fit_beta_copula(const PseudoObs& p, std::uint64_t seed) {
  const LatentScoreSet ls = gen_latent_scores(p, polyserial_mle(p), seed);
  return EmpiricalBetaCopula(ls.u_z, p.u_y);
}

AveragedBetaCopula fit_beta_copula_averaged(const PseudoObs& p, std::uint64_t seed, int replicates) {
  if (replicates < 1) throw ValidationError("replicate count must be positive");
  const double rho = polyserial_mle(p);
  std::vector<EmpiricalBetaCopula> parts;
  for (int s = 0; s < replicates; ++s) {
    const LatentScoreSet ls = gen_latent_scores(p, rho, seed + static_cast<std::uint64_t>(s));
    parts.emplace_back(ls.u_z, p.u_y);
  }
  return AveragedBetaCopula(std::move(parts));
}

}  // namespace mixcop
