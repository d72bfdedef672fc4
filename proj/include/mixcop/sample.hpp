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

// Mixed ordinal/continuous samples: category recoding and merging,
// pseudo-observations, orientation and rank correlation.

#ifndef MIXCOP_SAMPLE_HPP_
#define MIXCOP_SAMPLE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mixcop {

struct MixedPairSample {
  std::vector<int> x;     // codes 1..k
  std::vector<double> y;
  int k = 0;
  std::vector<std::size_t> counts;  // counts[j-1] = n_j
  std::vector<std::string> labels;  // labels[j-1] is the original value of code j

  std::size_t n() const { return x.size(); }
};

struct BuildOptions {
  // Each pair maps a label onto the label it is merged into.
  std::vector<std::pair<std::string, std::string>> merges;
  // Explicit category order (after merging). Empty: numeric order when
  // every label parses as a number, lexicographic otherwise.
  std::vector<std::string> order;
  std::size_t min_size = 10;
};

// Throws ValidationError on length mismatch, empty input, fewer than two
// categories, n < min_size, labels missing from an explicit order, or a
// listed category with no observations.
MixedPairSample build_sample(const std::vector<std::string>& x_raw,
                             const std::vector<double>& y_raw,
                             const BuildOptions& options = {});

// Sample from codes already in 1..k. Every category must be observed.
MixedPairSample make_sample(std::vector<int> x, std::vector<double> y, int k,
                            std::vector<std::string> labels = {});

// Nonparametric continuous margin: piecewise linear through the points
// (y_(r), midrank/(n+1)) of the distinct sorted values with exponential
// tails beyond the sample range. quantile() inverts cdf() exactly at the
// knots, so quantile(u_iY) returns y_i.
class EmpiricalMargin {
 public:
  EmpiricalMargin() = default;
  explicit EmpiricalMargin(std::span<const double> y);

  double cdf(double y) const;
  double quantile(double p) const;
  std::size_t n() const { return n_; }

 private:
  std::vector<double> knots_;   // distinct sorted y
  std::vector<double> levels_;  // midrank/(n+1) at each knot
  double lo_scale_ = 1.0;
  double hi_scale_ = 1.0;
  std::size_t n_ = 0;
};

// User-supplied parametric margin for the continuous variable.
struct ContinuousMargin {
  std::function<double(double)> cdf;
  std::function<double(double)> quantile;
};

struct PseudoObs {
  std::vector<double> u_plus;
  std::vector<double> u_minus;
  std::vector<double> u_y;
  std::vector<double> fx;         // F_X(0..k): fx[0] = 0, fx[k] = 1
  std::vector<double> cutpoints;  // zeta_0..zeta_k with infinite ends
  std::vector<int> x;
  int k = 0;
  ContinuousMargin margin;        // F_Y and its inverse as used for u_y

  std::size_t n() const { return u_y.size(); }
};

struct PseudoObsOptions {
  // Break ties in y at random instead of by midranks.
  bool jitter_ties = false;
  std::uint64_t seed = 0;
};

PseudoObs pseudo_observations(const MixedPairSample& s, const PseudoObsOptions& options = {});
PseudoObs pseudo_observations(const MixedPairSample& s, const ContinuousMargin& margin);

struct Oriented {
  MixedPairSample sample;
  bool flipped_x = false;
  bool flipped_y = false;
};

// Makes Spearman's rho nonnegative by reversing the categories (default)
// or by negating y.
Oriented orient_positive(const MixedPairSample& s, bool flip_y = false);

// Reverses the category order: code j becomes k + 1 - j.
MixedPairSample reverse_categories(const MixedPairSample& s);

// Midranks (1-based, ties averaged).
std::vector<double> midranks(std::span<const double> v);

double pearson_rho(std::span<const double> a, std::span<const double> b);
double spearman_rho(std::span<const double> a, std::span<const double> b);
double spearman_rho(const MixedPairSample& s);

}  // namespace mixcop

#endif  // MIXCOP_SAMPLE_HPP_
