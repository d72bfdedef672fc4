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
#include <limits>

#include "mixcop/fit.hpp"

namespace mixcop {
namespace {

constexpr double kFloor = 1e-300;

// P(u- < U <= u+ | V = v) with the subtraction done on the side of the
// conditional distribution that avoids cancellation.
double rectangle(const CopulaSpec& spec, double lo, double hi, double v) {
  if (lo <= 0.0) return copula_cond_1g2(spec, hi, v);
  if (hi >= 1.0) return copula_cond_1g2_upper(spec, lo, v);
  const double h_lo = copula_cond_1g2(spec, lo, v);
  if (h_lo > 0.5) return copula_cond_1g2_upper(spec, lo, v) - copula_cond_1g2_upper(spec, hi, v);
  return copula_cond_1g2(spec, hi, v) - h_lo;
}

double interval_t(double lo, double hi, double df) {
  if (lo > 0.0) return numerics::student_t_cdf(-lo, df) - numerics::student_t_cdf(-hi, df);
  return numerics::student_t_cdf(hi, df) - numerics::student_t_cdf(lo, df);
}

// t-copula log-likelihood for fixed nu with the margin quantiles cached.
struct TProfile {
  double nu;
  std::vector<double> t_level;  // T_nu^-1(F_X(j)), infinite at the ends
  std::vector<double> t_y;
  std::vector<double> scale;    // sqrt((nu + t_y^2) / (nu + 1))

  TProfile(const PseudoObs& p, double nu_) : nu(nu_) {
    t_level.resize(p.fx.size());
    for (std::size_t j = 0; j < p.fx.size(); ++j) {
      const double f = p.fx[j];
      t_level[j] = f <= 0.0 ? -numerics::kInf : f >= 1.0 ? numerics::kInf : numerics::student_t_quantile(f, nu);
    }
    t_y.resize(p.n());
    scale.resize(p.n());
    for (std::size_t i = 0; i < p.n(); ++i) {
      t_y[i] = numerics::student_t_quantile(p.u_y[i], nu);
      scale[i] = std::sqrt((nu + t_y[i] * t_y[i]) / (nu + 1.0));
    }
  }

  double loglik(const PseudoObs& p, double rho) const {
    const double r = std::sqrt((1.0 - rho) * (1.0 + rho));
    double total = 0.0;
    for (std::size_t i = 0; i < p.n(); ++i) {
      const auto j = static_cast<std::size_t>(p.x[i]);
      const double d = r * scale[i];
      const double lo = (t_level[j - 1] - rho * t_y[i]) / d;
      const double hi = (t_level[j] - rho * t_y[i]) / d;
      total += std::log(std::max(interval_t(lo, hi, nu + 1.0), kFloor));
    }
    return total;
  }
};

double negated_loglik(const CopulaFamily& family, const PseudoObs& p, std::span<const double> theta) {
  std::vector<double> th(theta.begin(), theta.end());
  if (!in_domain(family.tag, th)) return numerics::kInf;
  return -mixed_loglik(CopulaSpec(family, std::move(th)), p);
}

FitResult fit_student_t(const CopulaFamily& family, const PseudoObs& p, const numerics::MinimizeOptions& options) {
  const FamilyInfo& info = family_info(family.tag);
  // The likelihood is flat in nu: profile rho over a log grid first.
  static constexpr double kGrid[] = {2, 2.5, 3, 4, 5, 6, 8, 10, 13, 17, 22, 28, 36, 50};
  double best_value = numerics::kInf;
  double best_rho = 0.5;
  double best_nu = 8.0;
  std::size_t evaluations = 0;
  numerics::MinimizeOptions inner = options;
  inner.multistart = 2;
  const numerics::Bound rho_bound = info.search[0];
  for (double nu : kGrid) {
    const TProfile prof(p, nu);
    const double start = best_rho;
    const auto rep = numerics::minimize([&](std::span<const double> th) { return -prof.loglik(p, th[0]); },
                                        std::span<const numerics::Bound>(&rho_bound, 1),
                                        std::span<const double>(&start, 1), inner);
    evaluations += rep.evaluations;
    if (rep.value < best_value) {
      best_value = rep.value;
      best_rho = rep.argmin[0];
      best_nu = nu;
    }
  }
  numerics::MinimizeOptions polish = options;
  polish.multistart = 1;
  polish.initial_step = 0.2;
  const double start[] = {best_rho, best_nu};
  numerics::OptimizerReport rep = numerics::minimize(
      [&](std::span<const double> th) { return negated_loglik(family, p, th); }, info.search, start, polish);
  rep.evaluations += evaluations;
  if (rep.value > best_value) {
    rep.value = best_value;
    rep.argmin = {best_rho, best_nu};
  }
  return make_fit_result(CopulaSpec(family, rep.argmin), -rep.value, p.n(), rep);
}

}  // namespace

Criterion parse_criterion(std::string_view name) {
  if (name == "aic") return Criterion::AIC;
  if (name == "bic") return Criterion::BIC;
  throw ValidationError("criterion must be aic or bic, got '" + std::string(name) + "'");
}

double criterion_value(const FitResult& fit, Criterion criterion) {
  return criterion == Criterion::AIC ? fit.aic : fit.bic;
}

double mixed_loglik(const CopulaSpec& spec, const PseudoObs& p) {
  if (p.u_plus.size() != p.n() || p.u_minus.size() != p.n()) {
    throw ValidationError("pseudo-observation lengths differ");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < p.n(); ++i) {
    const double prob = rectangle(spec, p.u_minus[i], p.u_plus[i], p.u_y[i]);
    total += std::log(std::max(prob, kFloor));
  }
  return total;
}

FitResult make_fit_result(const CopulaSpec& spec, double loglik, std::size_t n, numerics::OptimizerReport report) {
  FitResult r;
  r.spec = spec;
  r.loglik = loglik;
  r.n = n;
  const double d = static_cast<double>(spec.num_params());
  r.aic = 2.0 * d - 2.0 * loglik;
  r.bic = d * std::log(static_cast<double>(n)) - 2.0 * loglik;
  r.optimizer = std::move(report);
  return r;
}

FitResult fit_family(const CopulaFamily& family, const PseudoObs& p, const numerics::MinimizeOptions& options) {
  const FamilyInfo& info = family_info(family.tag);
  if (info.num_params() == 0) {
    const CopulaSpec spec(family, {});
    numerics::OptimizerReport rep;
    rep.value = -mixed_loglik(spec, p);
    rep.evaluations = 1;
    rep.converged = true;
    return make_fit_result(spec, -rep.value, p.n(), rep);
  }
  if (family.tag == Family::StudentT) return fit_student_t(family, p, options);

  numerics::OptimizerReport rep = numerics::minimize(
      [&](std::span<const double> th) { return negated_loglik(family, p, th); }, info.search, info.start, options);
  if (!std::isfinite(rep.value)) {
    FitResult best;
    best.optimizer = rep;
    throw FitError("no finite likelihood found for " + family_name(family), best);
  }
  return make_fit_result(CopulaSpec(family, rep.argmin), -rep.value, p.n(), rep);
}

std::vector<FitResult> select_model(const std::vector<CopulaFamily>& families, const PseudoObs& p,
                                    Criterion criterion) {
  if (families.empty()) throw ValidationError("model selection needs at least one family");
  std::vector<FitResult> fits;
  std::string failures;
  for (const CopulaFamily& f : families) {
    try {
      fits.push_back(fit_family(f, p));
    } catch (const NumericalError& e) {
      failures += " " + family_name(f) + ": " + e.what() + ";";
    }
  }
  if (fits.empty()) throw Error("every fit failed:" + failures);
  std::stable_sort(fits.begin(), fits.end(), [&](const FitResult& a, const FitResult& b) {
    const double ca = criterion_value(a, criterion);
    const double cb = criterion_value(b, criterion);
    if (ca != cb) return ca < cb;
    if (a.spec.num_params() != b.spec.num_params()) return a.spec.num_params() < b.spec.num_params();
    return family_name(a.spec.family()) < family_name(b.spec.family());
  });
  return fits;
}

}  // namespace mixcop
