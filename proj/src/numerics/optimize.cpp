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
#include <numeric>

#include "mixcop/error.hpp"
#include "mixcop/numerics.hpp"

namespace mixcop::numerics {
namespace {

constexpr double kPenalty = std::numeric_limits<double>::max();

// Start perturbations in transformed space; sign alternates per coordinate.
constexpr double kStartOffsets[] = {1.5, -1.5, 3.0, -3.0, 0.75, -0.75, 2.25, -2.25};

class Problem {
 public:
  Problem(const Objective& objective, std::span<const Bound> bounds, std::size_t max_evals)
      : objective_(objective), bounds_(bounds.begin(), bounds.end()), max_evals_(max_evals) {}

  std::size_t dim() const { return bounds_.size(); }
  std::size_t evaluations() const { return evaluations_; }
  bool exhausted() const { return evaluations_ >= max_evals_; }

  std::vector<double> to_natural(const std::vector<double>& t) const {
    std::vector<double> x(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) x[i] = from_unconstrained(t[i], bounds_[i]);
    return x;
  }

  double operator()(const std::vector<double>& t) {
    ++evaluations_;
    const std::vector<double> x = to_natural(t);
    const double value = objective_(x);
    return std::isfinite(value) ? value : kPenalty;
  }

 private:
  const Objective& objective_;
  std::vector<Bound> bounds_;
  std::size_t max_evals_;
  std::size_t evaluations_ = 0;
};

struct Run {
  std::vector<double> t;
  double value;
  bool converged;
};

Run nelder_mead(Problem& problem, std::vector<double> t0, double f0, double step,
                const MinimizeOptions& options) {
  const std::size_t n = problem.dim();
  std::vector<std::vector<double>> simplex(n + 1, t0);
  std::vector<double> values(n + 1, f0);
  for (std::size_t i = 0; i < n; ++i) {
    simplex[i + 1][i] += step;
    values[i + 1] = problem(simplex[i + 1]);
  }
  std::vector<std::size_t> order(n + 1);
  bool converged = false;
  while (!problem.exhausted()) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[n - 1];

    double diameter = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        diameter = std::max(diameter, std::fabs(simplex[i][j] - simplex[best][j]));
      }
    }
    const double spread = values[worst] - values[best];
    if (values[worst] < kPenalty &&
        (diameter <= options.x_tolerance ||
         spread <= options.tolerance * (std::fabs(values[best]) + std::fabs(values[worst])) +
                       1e-300)) {
      converged = true;
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j] / n;
    }
    auto along = [&](double coef) {
      std::vector<double> p(n);
      for (std::size_t j = 0; j < n; ++j) {
        p[j] = centroid[j] + coef * (simplex[worst][j] - centroid[j]);
      }
      return p;
    };

    std::vector<double> reflected = along(-1.0);
    const double fr = problem(reflected);
    if (fr < values[best]) {
      std::vector<double> expanded = along(-2.0);
      const double fe = problem(expanded);
      if (fe < fr) {
        simplex[worst] = std::move(expanded);
        values[worst] = fe;
      } else {
        simplex[worst] = std::move(reflected);
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second_worst]) {
      simplex[worst] = std::move(reflected);
      values[worst] = fr;
      continue;
    }
    const bool outside = fr < values[worst];
    std::vector<double> contracted = along(outside ? -0.5 : 0.5);
    const double fc = problem(contracted);
    if (fc < (outside ? fr : values[worst])) {
      simplex[worst] = std::move(contracted);
      values[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t j = 0; j < n; ++j) {
        simplex[i][j] = simplex[best][j] + 0.5 * (simplex[i][j] - simplex[best][j]);
      }
      values[i] = problem(simplex[i]);
    }
  }
  const auto it = std::min_element(values.begin(), values.end());
  const std::size_t best = static_cast<std::size_t>(it - values.begin());
  return Run{simplex[best], values[best], converged};
}

}  // namespace

double to_unconstrained(double x, const Bound& b) {
  const bool lo_finite = std::isfinite(b.lo);
  const bool hi_finite = std::isfinite(b.hi);
  if (lo_finite && hi_finite) {
    const double width = b.hi - b.lo;
    const double z = std::clamp((x - b.lo) / width, 1e-15, 1.0 - 1e-15);
    return std::log(z) - std::log1p(-z);
  }
  if (lo_finite) return std::log(std::max(x - b.lo, 1e-300));
  if (hi_finite) return std::log(std::max(b.hi - x, 1e-300));
  return x;
}

double from_unconstrained(double t, const Bound& b) {
  const bool lo_finite = std::isfinite(b.lo);
  const bool hi_finite = std::isfinite(b.hi);
  if (lo_finite && hi_finite) {
    const double z = t >= 0.0 ? 1.0 / (1.0 + std::exp(-t)) : std::exp(t) / (1.0 + std::exp(t));
    return std::clamp(b.lo + (b.hi - b.lo) * z, b.lo, b.hi);
  }
  if (lo_finite) return b.lo + std::exp(t);
  if (hi_finite) return b.hi - std::exp(t);
  return t;
}

OptimizerReport minimize(const Objective& objective, std::span<const Bound> bounds,
                         std::span<const double> start, const MinimizeOptions& options) {
  if (start.size() != bounds.size()) {
    throw DomainError("minimize: start and bounds have different sizes");
  }
  Problem problem(objective, bounds, options.max_evaluations);
  const std::size_t n = bounds.size();

  std::vector<double> t0(n);
  for (std::size_t i = 0; i < n; ++i) t0[i] = to_unconstrained(start[i], bounds[i]);

  OptimizerReport report;
  if (n == 0) {
    report.value = problem(t0);
    report.evaluations = problem.evaluations();
    report.converged = true;
    if (report.value >= kPenalty) throw OptimizationError("minimize: non-finite objective");
    return report;
  }

  const int starts = std::max(1, options.multistart);
  std::vector<double> best_t;
  double best_value = kPenalty;
  bool best_converged = false;
  for (int s = 0; s < starts; ++s) {
    std::vector<double> t = t0;
    if (s > 0) {
      const double offset = kStartOffsets[(s - 1) % std::size(kStartOffsets)];
      for (std::size_t i = 0; i < n; ++i) t[i] += (i % 2 == 0 ? offset : -offset);
    }
    double value = problem(t);
    if (value >= kPenalty) continue;
    bool converged = false;
    for (int restart = 0; restart < 8 && !problem.exhausted(); ++restart) {
      const double step = restart == 0 ? options.initial_step : 0.1 * options.initial_step;
      Run run = nelder_mead(problem, t, value, step, options);
      const double improvement = value - run.value;
      t = std::move(run.t);
      value = run.value;
      converged = run.converged;
      if (restart > 0) ++report.restarts;
      if (restart > 0 &&
          improvement <= options.tolerance * std::fabs(value) + 1e-300) {
        break;
      }
    }
    if (value < best_value) {
      best_value = value;
      best_t = t;
      best_converged = converged;
    }
  }
  report.evaluations = problem.evaluations();
  if (best_t.empty()) {
    throw OptimizationError("minimize: objective non-finite at every start point");
  }
  report.argmin = problem.to_natural(best_t);
  report.value = best_value;
  report.converged = best_converged;
  return report;
}

}  // namespace mixcop::numerics
