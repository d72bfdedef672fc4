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

// Parametric bivariate copula families: CDF C(u, v; theta), the two
// conditional distributions (h-functions) and the survival rotation.
//
// Slot convention: the first argument u belongs to the ordinal variable
// and v to the continuous one, so the rectangle likelihood and the KL
// engine only need cond_1g2(u | v) = dC/dv.

#ifndef MIXCOP_COPULA_HPP_
#define MIXCOP_COPULA_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "mixcop/numerics.hpp"

namespace mixcop {

enum class Family {
  Independence,
  Gaussian,
  StudentT,
  Frank,
  Plackett,
  Gumbel,
  Clayton,
  Joe,
  BB1,
  BB7,
  BB8,
  BB10,
  AsymmetricGumbel,
};

enum class Rotation { None, Survival };

struct CopulaFamily {
  Family tag = Family::Independence;
  Rotation rotation = Rotation::None;

  friend bool operator==(const CopulaFamily&, const CopulaFamily&) = default;
};

// A closed or open interval of admissible parameter values.
struct ParamDomain {
  double lo;
  double hi;
  bool lo_closed;
  bool hi_closed;

  bool contains(double x) const {
    return (lo_closed ? x >= lo : x > lo) && (hi_closed ? x <= hi : x < hi);
  }
};

// Static description of a family: parameter names, natural domains, and
// the box plus start point used when estimating the parameters.
struct FamilyInfo {
  std::string_view name;
  std::vector<std::string_view> param_names;
  std::vector<ParamDomain> domain;
  std::vector<numerics::Bound> search;
  std::vector<double> start;

  std::size_t num_params() const { return domain.size(); }
};

const FamilyInfo& family_info(Family tag);

// "gaussian", "survival-bb1", ... and back. parse_family throws
// ValidationError on unknown names.
std::string family_name(const CopulaFamily& family);
CopulaFamily parse_family(std::string_view name);

// Family plus parameter vector, validated against the natural domain on
// construction (DomainError).
class CopulaSpec {
 public:
  CopulaSpec() = default;
  CopulaSpec(CopulaFamily family, std::vector<double> theta);
  CopulaSpec(Family tag, std::vector<double> theta)
      : CopulaSpec(CopulaFamily{tag, Rotation::None}, std::move(theta)) {}

  const CopulaFamily& family() const { return family_; }
  const std::vector<double>& theta() const { return theta_; }
  std::size_t num_params() const { return theta_.size(); }

 private:
  CopulaFamily family_;
  std::vector<double> theta_;
};

bool in_domain(Family tag, const std::vector<double>& theta);

double copula_cdf(const CopulaSpec& spec, double u, double v);

// C_{1|2}(u | v) = dC(u, v)/dv. Throws DomainError for v outside (0, 1).
double copula_cond_1g2(const CopulaSpec& spec, double u, double v);

// C_{2|1}(v | u) = dC(u, v)/du, with arguments in (u, v) order.
double copula_cond_2g1(const CopulaSpec& spec, double u, double v);

// 1 - C_{1|2}(u | v), computed without cancellation where the family
// allows it (Gaussian and t).
double copula_cond_1g2_upper(const CopulaSpec& spec, double u, double v);

CopulaSpec rotate_survival(const CopulaSpec& spec);

// One step of the candidate-family search.
struct LadderGroup {
  int step;                // 1..5
  std::string_view label;  // baseline, tail-asymmetric, ...
  std::vector<CopulaFamily> families;
};

std::vector<LadderGroup> default_ladder();

// Flattened default_ladder in search order.
std::vector<CopulaFamily> default_ladder_families();

}  // namespace mixcop

#endif  // MIXCOP_COPULA_HPP_
