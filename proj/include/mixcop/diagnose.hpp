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

// Conditional distribution of the continuous variable given an ordinal
// category under an estimated copula, and conditional Q-Q panels.

#ifndef MIXCOP_DIAGNOSE_HPP_
#define MIXCOP_DIAGNOSE_HPP_

#include <vector>

#include "mixcop/evaluator.hpp"
#include "mixcop/sample.hpp"

namespace mixcop {

struct QQPanel {
  int category = 0;
  std::vector<double> q;              // plotting positions (m - 0.5)/n_j
  std::vector<double> model_q;        // model conditional quantiles
  std::vector<double> empirical_q;    // sorted y within the category
  std::vector<double> model_pit;      // F_Y(model_q)
  std::vector<double> empirical_pit;  // F_Y(empirical_q)
  double discrepancy = 0.0;           // max |model_pit - empirical_pit|
};

// F_{Y|X}(y | j) from the copula and the margins in p.
double cond_cdf(const CopulaEvaluator& c, const PseudoObs& p, int j, double y);

// Same, with the continuous argument already on the uniform scale.
double cond_cdf_uniform(const CopulaEvaluator& c, const PseudoObs& p, int j, double v);

// Root v in (1e-10, 1 - 1e-10) of cond_cdf_uniform(v) = q. Throws
// BracketError when q is not bracketed there.
double cond_quantile_uniform(const CopulaEvaluator& c, const PseudoObs& p, int j, double q);

// F_Y^-1 of cond_quantile_uniform, using the margin stored in p.
double cond_quantile(const CopulaEvaluator& c, const PseudoObs& p, int j, double q);

std::vector<QQPanel> qq_panels(const CopulaEvaluator& c, const MixedPairSample& s, const PseudoObs& p);

double qq_discrepancy(const QQPanel& panel);

}  // namespace mixcop

#endif  // MIXCOP_DIAGNOSE_HPP_
