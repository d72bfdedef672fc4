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
#include <utility>

#include "mixcop/error.hpp"
#include "mixcop/klatlas.hpp"

namespace mixcop {
namespace {

constexpr double kFloor = 1e-300;

double rectangle(const CopulaSpec& spec, double lo, double hi, double v) {
  if (lo <= 0.0) return copula_cond_1g2(spec, hi, v);
  if (hi >= 1.0) return copula_cond_1g2_upper(spec, lo, v);
  const double h_lo = copula_cond_1g2(spec, lo, v);
  if (h_lo > 0.5) return copula_cond_1g2_upper(spec, lo, v) - copula_cond_1g2_upper(spec, hi, v);
  return copula_cond_1g2(spec, hi, v) - h_lo;
}

// Panels in normal-score space. The posterior P(X | y) can turn sharply where
// s crosses a low-density gap between mixture modes, so the range is bisected
// until a 16-point rule resolves every model-only moment on each panel.
constexpr int kProbeOrder = 16;
constexpr double kPanelTol = 1e-11;
constexpr int kMaxDepth = 14;

struct Probe {
  const ProbabilityModel* model;
  const ModelMargins* margins;
  numerics::QuadratureRule rule = numerics::gauss_legendre(kProbeOrder);

  std::vector<double> moments(double a, double b) const {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    std::vector<double> out;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      const double s = mid + half * rule.nodes[j];
      const double w = half * rule.weights[j] * numerics::normal_pdf(s);
      const std::vector<double> p = model_conditional(*model, margins->score_quantile(s));
      if (out.empty()) out.assign(p.size() + 1, 0.0);
      for (std::size_t i = 0; i < p.size(); ++i) {
        out[i] += w * p[i];
        if (p[i] > 0.0) out.back() += w * p[i] * std::log(p[i]);
      }
    }
    return out;
  }

  void split(double a, double b, const std::vector<double>& whole, int depth,
             std::vector<std::pair<double, double>>& panels) const {
    const double m = 0.5 * (a + b);
    const std::vector<double> left = moments(a, m);
    const std::vector<double> right = moments(m, b);
    double err = 0.0;
    for (std::size_t i = 0; i < whole.size(); ++i) err = std::max(err, std::abs(left[i] + right[i] - whole[i]));
    if (err <= kPanelTol || depth >= kMaxDepth) {
      panels.emplace_back(a, b);
      return;
    }
    split(a, m, left, depth + 1, panels);
    split(m, b, right, depth + 1, panels);
  }
};

std::vector<std::pair<double, double>> score_panels(const ProbabilityModel& model, const ModelMargins& margins,
                                                    double s_max) {
  const Probe probe{&model, &margins};
  std::vector<std::pair<double, double>> panels;
  probe.split(-s_max, s_max, probe.moments(-s_max, s_max), 0, panels);
  return panels;
}

}  // namespace

KlIntegrator::KlIntegrator(const ProbabilityModel& model, int order, double s_max)
    : k_(model_categories(model)), order_(order) {
  if (order < 2) throw ValidationError("quadrature order must be at least 2");
  if (!(s_max > 0.0)) throw ValidationError("normal-score truncation must be positive");
  const ModelMargins margins = model_margins(model);
  fx_ = margins.fx;
  // Each panel carries order/10 + 1 nodes, so doubling the order doubles every panel.
  const auto panels = score_panels(model, margins, s_max);
  const numerics::QuadratureRule rule = numerics::gauss_legendre(std::max(2, order / 10 + 1));
  const auto k = static_cast<std::size_t>(k_);
  const std::size_t n = panels.size() * rule.nodes.size();
  v_.resize(n);
  weight_.resize(n);
  p_.resize(n * k);
  double ex = 0.0;
  double exv = 0.0;
  std::size_t j = 0;
  for (const auto& [a, b] : panels) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    for (std::size_t r = 0; r < rule.nodes.size(); ++r, ++j) {
      const double s = mid + half * rule.nodes[r];
      v_[j] = numerics::normal_cdf(s);
      weight_[j] = half * rule.weights[r] * numerics::normal_pdf(s);
      const std::vector<double> p = model_conditional(model, margins.score_quantile(s));
      for (std::size_t i = 0; i < k; ++i) {
        p_[j * k + i] = p[i];
        if (p[i] > 0.0) neg_entropy_ += weight_[j] * p[i] * std::log(p[i]);
        const double code = static_cast<double>(i + 1);
        ex += weight_[j] * code * p[i];
        exv += weight_[j] * code * p[i] * v_[j];
      }
    }
  }
  orientation_ = exv - 0.5 * ex;
}

double KlIntegrator::kl(const CopulaSpec& spec) const {
  const auto k = static_cast<std::size_t>(k_);
  double cross = 0.0;
  for (std::size_t j = 0; j < v_.size(); ++j) {
    double row = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      const double p = p_[j * k + i];
      if (p <= 0.0) continue;
      const double q = k == 1 ? 1.0 : rectangle(spec, fx_[i], fx_[i + 1], v_[j]);
      row += p * std::log(std::max(q, kFloor));
    }
    cross += weight_[j] * row;
  }
  const double value = neg_entropy_ - cross;
  if (!std::isfinite(value)) throw NumericalError("non-finite KL integrand for " + family_name(spec.family()));
  return value;
}

double kl_divergence(const CopulaSpec& spec, const ProbabilityModel& model, int quadrature_order) {
  return KlIntegrator(model, quadrature_order).kl(spec);
}

KlResult kl_minimize(const CopulaFamily& family, const KlIntegrator& integrator, const KlOptions& options) {
  const FamilyInfo& info = family_info(family.tag);
  KlResult r;
  r.family = family;
  r.quadrature_order = integrator.order();
  if (info.num_params() == 0) {
    r.kl = integrator.kl(CopulaSpec(family, {}));
    r.optimizer.value = r.kl;
    r.optimizer.evaluations = 1;
    r.optimizer.converged = true;
    return r;
  }
  const auto objective = [&](std::span<const double> theta) {
    std::vector<double> th(theta.begin(), theta.end());
    if (!in_domain(family.tag, th)) return numerics::kInf;
    return integrator.kl(CopulaSpec(family, std::move(th)));
  };
  r.optimizer = numerics::minimize(objective, info.search, info.start, options.minimize);
  r.theta_hat = r.optimizer.argmin;
  r.kl = r.optimizer.value;
  return r;
}

KlResult kl_minimize(const CopulaFamily& family, const ProbabilityModel& model, const KlOptions& options) {
  const KlIntegrator integrator(model, options.quadrature_order, options.s_max);
  return kl_minimize(family, integrator, options);
}

LadderReport family_ladder_search(const ProbabilityModel& model, const KlOptions& options) {
  LadderReport report;
  KlIntegrator integrator(model, options.quadrature_order, options.s_max);
  if (integrator.orientation() < 0.0) {
    integrator = KlIntegrator(reverse_model(model), options.quadrature_order, options.s_max);
    report.reversed = true;
  }
  for (const LadderGroup& group : default_ladder()) {
    for (const CopulaFamily& family : group.families) {
      KlResult r;
      try {
        r = kl_minimize(family, integrator, options);
      } catch (const Error& e) {
        r.family = family;
        r.failed = true;
        r.error = e.what();
      }
      r.ladder_step = group.step;
      r.group = std::string(group.label);
      report.results.push_back(std::move(r));
    }
  }
  std::stable_sort(report.results.begin(), report.results.end(), [](const KlResult& a, const KlResult& b) {
    if (a.failed != b.failed) return b.failed;
    return a.kl < b.kl;
  });
  return report;
}

}  // namespace mixcop
