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

#include "mixcop/diagnose.hpp"

#include <algorithm>
#include <cmath>

#include "mixcop/error.hpp"
#include "mixcop/numerics.hpp"

namespace mixcop {
namespace {

constexpr double kEdge = 1e-10;

struct Bin {
  double lo;
  double hi;
};

Bin category_bin(const PseudoObs& p, int j) {
  if (j < 1 || j > p.k) {
    throw ValidationError("category " + std::to_string(j) + " outside 1.." + std::to_string(p.k));
  }
  const Bin b{p.fx[static_cast<std::size_t>(j - 1)], p.fx[static_cast<std::size_t>(j)]};
  if (!(b.hi > b.lo)) throw ValidationError("category " + std::to_string(j) + " has zero probability");
  return b;
}

}  // namespace

double cond_cdf_uniform(const CopulaEvaluator& c, const PseudoObs& p, int j, double v) {
  const Bin b = category_bin(p, j);
  if (v <= 0.0) return 0.0;
  if (v >= 1.0) return 1.0;
  const double num = c.cdf(b.hi, v) - (b.lo > 0.0 ? c.cdf(b.lo, v) : 0.0);
  return std::clamp(num / (b.hi - b.lo), 0.0, 1.0);
}

double cond_cdf(const CopulaEvaluator& c, const PseudoObs& p, int j, double y) {
  return cond_cdf_uniform(c, p, j, p.margin.cdf(y));
}

double cond_quantile_uniform(const CopulaEvaluator& c, const PseudoObs& p, int j, double q) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("conditional quantile level must lie in (0, 1)");
  const Bin b = category_bin(p, j);
  const auto upper = c.section(b.hi);
  const auto lower = c.section(b.lo);
  const double width = b.hi - b.lo;
  const auto f = [&](double v) {
    const double num = upper(v) - (b.lo > 0.0 ? lower(v) : 0.0);
    return std::clamp(num / width, 0.0, 1.0) - q;
  };
  return numerics::find_root(f, kEdge, 1.0 - kEdge, 1e-12, 1e-13);
}

double cond_quantile(const CopulaEvaluator& c, const PseudoObs& p, int j, double q) {
  return p.margin.quantile(cond_quantile_uniform(c, p, j, q));
}

std::vector<QQPanel> qq_panels(const CopulaEvaluator& c, const MixedPairSample& s, const PseudoObs& p) {
  if (s.n() != p.n() || s.k != p.k) throw ValidationError("sample and pseudo-observations do not match");
  std::vector<QQPanel> panels;
  for (int j = 1; j <= s.k; ++j) {
    QQPanel panel;
    panel.category = j;
    for (std::size_t i = 0; i < s.n(); ++i) {
      if (s.x[i] == j) panel.empirical_q.push_back(s.y[i]);
    }
    std::sort(panel.empirical_q.begin(), panel.empirical_q.end());
    const std::size_t nj = panel.empirical_q.size();
    const Bin b = category_bin(p, j);
    const auto upper = c.section(b.hi);
    const auto lower = c.section(b.lo);
    const auto f_base = [&](double v) {
      return std::clamp((upper(v) - (b.lo > 0.0 ? lower(v) : 0.0)) / (b.hi - b.lo), 0.0, 1.0);
    };
    for (std::size_t m = 1; m <= nj; ++m) {
      const double q = (static_cast<double>(m) - 0.5) / static_cast<double>(nj);
      const double v = numerics::find_root([&](double w) { return f_base(w) - q; }, kEdge, 1.0 - kEdge, 1e-12, 1e-13);
      panel.q.push_back(q);
      panel.model_pit.push_back(v);
      panel.model_q.push_back(p.margin.quantile(v));
      panel.empirical_pit.push_back(p.margin.cdf(panel.empirical_q[m - 1]));
    }
    // Monotone by construction up to root tolerance; enforce it exactly.
    for (std::size_t m = 1; m < nj; ++m) {
      panel.model_q[m] = std::max(panel.model_q[m], panel.model_q[m - 1]);
      panel.model_pit[m] = std::max(panel.model_pit[m], panel.model_pit[m - 1]);
    }
    panel.discrepancy = qq_discrepancy(panel);
    panels.push_back(std::move(panel));
  }
  return panels;
}

double qq_discrepancy(const QQPanel& panel) {
  if (panel.model_pit.size() != panel.empirical_pit.size()) {
    throw ValidationError("Q-Q panel vectors differ in length");
  }
  double d = 0.0;
  for (std::size_t m = 0; m < panel.model_pit.size(); ++m) {
    d = std::max(d, std::fabs(panel.model_pit[m] - panel.empirical_pit[m]));
  }
  return d;
}

}  // namespace mixcop
