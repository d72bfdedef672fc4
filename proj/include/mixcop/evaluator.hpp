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

// Anything that can report a bivariate copula CDF: a parametric
// specification or a nonparametric estimate.

#ifndef MIXCOP_EVALUATOR_HPP_
#define MIXCOP_EVALUATOR_HPP_

#include <functional>
#include <string>

#include "mixcop/copula.hpp"

namespace mixcop {

class CopulaEvaluator {
 public:
  virtual ~CopulaEvaluator() = default;

  virtual double cdf(double u, double v) const = 0;
  virtual std::string describe() const = 0;

  // v -> C(u, v) for a fixed u. Evaluators override this when work can be
  // shared across repeated calls at the same u.
  virtual std::function<double(double)> section(double u) const {
    return [this, u](double v) { return cdf(u, v); };
  }
};

class ParametricEvaluator final : public CopulaEvaluator {
 public:
  explicit ParametricEvaluator(CopulaSpec spec) : spec_(std::move(spec)) {}

  double cdf(double u, double v) const override { return copula_cdf(spec_, u, v); }
  std::string describe() const override { return family_name(spec_.family()); }
  const CopulaSpec& spec() const { return spec_; }

 private:
  CopulaSpec spec_;
};

}  // namespace mixcop

#endif  // MIXCOP_EVALUATOR_HPP_
