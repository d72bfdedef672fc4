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

// Reference probability models for one ordinal and one continuous
// variable, the KL divergence of a copula-based approximation, the
// family-ladder search and sampling from the models.

#ifndef MIXCOP_KLATLAS_HPP_
#define MIXCOP_KLATLAS_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mixcop/copula.hpp"
#include "mixcop/numerics.hpp"
#include "mixcop/sample.hpp"

namespace mixcop {

enum class ComponentKind { Normal, StudentT, SkewNormal };

// [Y | X = i] has density (1/sigma_i) p((y - mu_i)/sigma_i). For t
// components p is the t(nu_i) density; for skew normal components
// p(z) = 2 phi(z) Phi(alpha_i z).
struct MixtureModel {
  std::vector<double> pi;
  ComponentKind component = ComponentKind::Normal;
  std::vector<double> mu;
  std::vector<double> sigma;  // defaults to 1 when empty
  std::vector<double> nu;     // t components
  std::vector<double> alpha;  // skew normal components
};

enum class YMargin { Normal, StudentT, ExtremeValue };
enum class Link { Probit, Logit };

// Y from the margin, then P(X <= i | Y = y) = F(a y + b_i) with
// b_1 < ... < b_{k-1} and F the link CDF.
struct RegressionModel {
  YMargin margin = YMargin::Normal;
  double nu = 3.0;  // StudentT margin
  Link link = Link::Probit;
  double a = 1.0;
  std::vector<double> b;
};

using ProbabilityModel = std::variant<MixtureModel, RegressionModel>;

int model_categories(const ProbabilityModel& model);

// Throws ValidationError when the parameters do not define a model.
void validate_model(const ProbabilityModel& model);

// g(i, y): probability of category i times the density of Y given i.
double model_joint_density(const ProbabilityModel& model, int i, double y);

// P(X = i | Y = y) for i = 1..k.
std::vector<double> model_conditional(const ProbabilityModel& model, double y);

struct ModelMargins {
  std::vector<double> fx;  // F_X(0..k)
  std::function<double(double)> cdf;
  std::function<double(double)> sf;
  std::function<double(double)> pdf;
  std::function<double(double)> quantile;
  // y with F_Y(y) = Phi(s), accurate in both tails.
  std::function<double(double)> score_quantile;
};

ModelMargins model_margins(const ProbabilityModel& model);

// h(i, y; theta) = f_Y(y) [C_{1|2}(F_X(i) | F_Y(y)) - C_{1|2}(F_X(i-1) | F_Y(y))].
double copula_joint_density(const CopulaSpec& spec, const ModelMargins& margins, int i, double y);

// Relabel categories i -> k + 1 - i.
ProbabilityModel reverse_model(const ProbabilityModel& model);

// Distribution of (X, -Y). Only defined for symmetric regression margins.
ProbabilityModel reflect_model(const ProbabilityModel& model);

MixedPairSample sample_from_model(const ProbabilityModel& model, std::size_t n, std::uint64_t seed);

struct KlOptions {
  int quadrature_order = 201;
  double s_max = 6.5;  // normal-score truncation of the continuous margin
  numerics::MinimizeOptions minimize;
};

struct KlResult {
  CopulaFamily family;
  std::vector<double> theta_hat;
  double kl = numerics::kInf;
  int quadrature_order = 0;
  numerics::OptimizerReport optimizer;
  int ladder_step = 0;
  std::string group;
  bool failed = false;
  std::string error;
};

// Precomputed quadrature for one model. The divergence is integrated on
// the normal-score scale s = Phi^-1(F_Y(y)), where dF_Y = phi(s) ds.
class KlIntegrator {
 public:
  explicit KlIntegrator(const ProbabilityModel& model, int order = 201, double s_max = 6.5);

  double kl(const CopulaSpec& spec) const;
  // Covariance of X and F_Y(Y); positive for positively oriented models.
  double orientation() const { return orientation_; }
  const std::vector<double>& fx() const { return fx_; }
  int k() const { return k_; }
  int order() const { return order_; }
  std::size_t nodes() const { return v_.size(); }

 private:
  int k_;
  int order_;
  std::vector<double> fx_;
  std::vector<double> v_;       // F_Y at the nodes
  std::vector<double> weight_;  // Gauss-Legendre weight times phi(s)
  std::vector<double> p_;       // P(X = i | y) row-major by node
  double neg_entropy_ = 0.0;    // integral of sum_i p log p
  double orientation_ = 0.0;
};

double kl_divergence(const CopulaSpec& spec, const ProbabilityModel& model, int quadrature_order = 201);

KlResult kl_minimize(const CopulaFamily& family, const KlIntegrator& integrator, const KlOptions& options = {});
KlResult kl_minimize(const CopulaFamily& family, const ProbabilityModel& model, const KlOptions& options = {});

struct LadderReport {
  std::vector<KlResult> results;  // ascending kl, failures last
  bool reversed = false;          // categories were relabeled to orient the model
};

LadderReport family_ladder_search(const ProbabilityModel& model, const KlOptions& options = {});

// Rows of the two reference tables.
struct TableRow {
  std::string id;
  int table = 0;  // 1: two categories, 2: three categories
  ProbabilityModel model;
  std::string reference_family;  // family reported for the row
  double reference_kl = 0.0;
  bool typo = false;             // printed link is not a probability; logistic reading used
  std::string description;
};

const std::vector<TableRow>& table_rows();
const TableRow& find_row(std::string_view id);

// Maps names such as "Survival BB10", "t(28)" or "Asymmetric Gumbel".
CopulaFamily reference_family(std::string_view printed);

enum class TableSelection { Two, Three, All };
TableSelection parse_table_selection(std::string_view name);

struct RowReport {
  TableRow row;
  LadderReport ladder;
  KlResult reference;  // the reported family's minimum
  double seconds = 0.0;
  bool refused = false;  // strict mode skipped a reinterpreted row
  std::string error;
};

RowReport reproduce_row(const TableRow& row, bool strict = false, const KlOptions& options = {});

// strict: refuse the rows whose printed link had to be reinterpreted.
std::vector<RowReport> reproduce_tables(TableSelection which, bool strict = false, const KlOptions& options = {});

}  // namespace mixcop

#endif  // MIXCOP_KLATLAS_HPP_
