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

// Maximum likelihood for parametric copulas on mixed data, AIC/BIC model
// selection, and the empirical beta copula.

#ifndef MIXCOP_FIT_HPP_
#define MIXCOP_FIT_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mixcop/copula.hpp"
#include "mixcop/error.hpp"
#include "mixcop/evaluator.hpp"
#include "mixcop/numerics.hpp"
#include "mixcop/sample.hpp"

namespace mixcop {

struct FitResult {
  CopulaSpec spec;
  double loglik = 0.0;
  double aic = 0.0;
  double bic = 0.0;
  std::size_t n = 0;
  numerics::OptimizerReport optimizer;
};

enum class Criterion { AIC, BIC };

Criterion parse_criterion(std::string_view name);
double criterion_value(const FitResult& fit, Criterion criterion);

// Raised when estimation fails; carries the best point reached.
class FitError : public OptimizationError {
 public:
  FitError(const std::string& what, FitResult best) : OptimizationError(what), best_(std::move(best)) {}
  const FitResult& best() const { return best_; }

 private:
  FitResult best_;
};

// Sum over observations of log[C_{1|2}(u+ | u_y) - C_{1|2}(u- | u_y)],
// each term floored at 1e-300.
double mixed_loglik(const CopulaSpec& spec, const PseudoObs& p);

FitResult make_fit_result(const CopulaSpec& spec, double loglik, std::size_t n,
                          numerics::OptimizerReport report = {});

FitResult fit_family(const CopulaFamily& family, const PseudoObs& p,
                     const numerics::MinimizeOptions& options = {});

// Fits every family and sorts by the criterion, then parameter count, then
// name. Families whose fit throws are left out; if all fail, throws Error.
std::vector<FitResult> select_model(const std::vector<CopulaFamily>& families, const PseudoObs& p,
                                    Criterion criterion);

// Empirical beta copula of a sample of pseudo-observations. Ranks are
// taken with ties broken by index, so both rank vectors are permutations
// of 1..n.
class EmpiricalBetaCopula final : public CopulaEvaluator {
 public:
  EmpiricalBetaCopula(std::span<const double> u_z, std::span<const double> u_y);

  double cdf(double u, double v) const override;
  std::function<double(double)> section(double u) const override;
  std::string describe() const override { return "empirical-beta"; }

  const std::vector<std::size_t>& r_z() const { return r_z_; }
  const std::vector<std::size_t>& r_y() const { return r_y_; }
  std::size_t n() const { return r_z_.size(); }

 private:
  std::vector<std::size_t> r_z_;
  std::vector<std::size_t> r_y_;
  std::vector<std::size_t> rz_by_ry_;  // rz_by_ry_[r - 1] = r_z of the point with r_y = r
};

// Pointwise average of several empirical beta copulas.
class AveragedBetaCopula final : public CopulaEvaluator {
 public:
  explicit AveragedBetaCopula(std::vector<EmpiricalBetaCopula> parts);

  double cdf(double u, double v) const override;
  std::function<double(double)> section(double u) const override;
  std::string describe() const override { return "empirical-beta-averaged"; }
  std::size_t size() const { return parts_.size(); }

 private:
  std::vector<EmpiricalBetaCopula> parts_;
};

double beta_copula_cdf(const EmpiricalBetaCopula& b, double u_z, double u_y);
double empirical_copula_cdf(const EmpiricalBetaCopula& b, double u_z, double u_y);

// Latent scores from the polyserial correlation with the given seed, then
// the empirical beta copula of (u_z, u_y).
EmpiricalBetaCopula fit_beta_copula(const PseudoObs& p, std::uint64_t seed);

// Average over seeds seed, seed + 1, ..., seed + replicates - 1.
AveragedBetaCopula fit_beta_copula_averaged(const PseudoObs& p, std::uint64_t seed, int replicates);

}  // namespace mixcop

#endif  // MIXCOP_FIT_HPP_
