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

#include "mixcop/sample.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <numeric>

#include "mixcop/error.hpp"
#include "mixcop/numerics.hpp"
#include "mixcop/random.hpp"

namespace mixcop {
namespace {

std::optional<double> parse_number(const std::string& s) {
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::string apply_merges(std::string label,
                         const std::vector<std::pair<std::string, std::string>>& merges) {
  // Follow chains such as a -> b -> c, bounded to stay safe on cycles.
  for (std::size_t step = 0; step <= merges.size(); ++step) {
    const auto it = std::find_if(merges.begin(), merges.end(),
                                 [&](const auto& m) { return m.first == label; });
    if (it == merges.end() || it->second == label) break;
    label = it->second;
  }
  return label;
}

void check_categories(const std::vector<std::size_t>& counts, const std::vector<std::string>& labels) {
  for (std::size_t j = 0; j < counts.size(); ++j) {
    if (counts[j] == 0) {
      const std::string name = j < labels.size() ? labels[j] : std::to_string(j + 1);
      throw ValidationError("category '" + name + "' has no observations");
    }
  }
}

}  // namespace

MixedPairSample build_sample(const std::vector<std::string>& x_raw, const std::vector<double>& y_raw,
                             const BuildOptions& options) {
  if (x_raw.empty()) throw ValidationError("empty sample");
  if (x_raw.size() != y_raw.size()) {
    throw ValidationError("ordinal and continuous columns differ in length (" +
                          std::to_string(x_raw.size()) + " vs " + std::to_string(y_raw.size()) + ")");
  }
  if (x_raw.size() < options.min_size) {
    throw ValidationError("sample size " + std::to_string(x_raw.size()) + " is below the minimum of " +
                          std::to_string(options.min_size));
  }
  for (std::size_t i = 0; i < y_raw.size(); ++i) {
    if (!std::isfinite(y_raw[i])) {
      throw ValidationError("non-finite continuous value at row " + std::to_string(i + 1));
    }
  }

  std::vector<std::string> merged(x_raw.size());
  for (std::size_t i = 0; i < x_raw.size(); ++i) merged[i] = apply_merges(x_raw[i], options.merges);

  std::vector<std::string> labels;
  if (!options.order.empty()) {
    labels = options.order;
  } else {
    labels = merged;
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    const bool numeric = std::all_of(labels.begin(), labels.end(),
                                     [](const std::string& s) { return parse_number(s).has_value(); });
    if (numeric) {
      std::stable_sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
        return *parse_number(a) < *parse_number(b);
      });
    }
  }
  if (labels.size() < 2) throw ValidationError("the ordinal variable needs at least two categories");

  std::map<std::string, int> code;
  for (std::size_t j = 0; j < labels.size(); ++j) {
    if (!code.emplace(labels[j], static_cast<int>(j) + 1).second) {
      throw ValidationError("category '" + labels[j] + "' listed twice in the order");
    }
  }
  std::vector<int> x(merged.size());
  for (std::size_t i = 0; i < merged.size(); ++i) {
    const auto it = code.find(merged[i]);
    if (it == code.end()) {
      throw ValidationError("row " + std::to_string(i + 1) + ": label '" + merged[i] +
                            "' is not in the category order");
    }
    x[i] = it->second;
  }
  const int k = static_cast<int>(labels.size());
  return make_sample(std::move(x), y_raw, k, std::move(labels));
}

MixedPairSample make_sample(std::vector<int> x, std::vector<double> y, int k, std::vector<std::string> labels) {
  if (x.empty()) throw ValidationError("empty sample");
  if (x.size() != y.size()) throw ValidationError("ordinal and continuous columns differ in length");
  if (k < 1) throw ValidationError("category count must be positive");
  MixedPairSample s;
  s.counts.assign(static_cast<std::size_t>(k), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 1 || x[i] > k) {
      throw ValidationError("ordinal code " + std::to_string(x[i]) + " at row " + std::to_string(i + 1) +
                            " outside 1.." + std::to_string(k));
    }
    ++s.counts[static_cast<std::size_t>(x[i] - 1)];
  }
  if (labels.empty()) {
    for (int j = 1; j <= k; ++j) labels.push_back(std::to_string(j));
  }
  if (labels.size() != static_cast<std::size_t>(k)) throw ValidationError("label count differs from k");
  check_categories(s.counts, labels);
  s.x = std::move(x);
  s.y = std::move(y);
  s.k = k;
  s.labels = std::move(labels);
  return s;
}

std::vector<double> midranks(std::span<const double> v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
    const double mid = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) r[idx[t]] = mid;
    i = j + 1;
  }
  return r;
}

EmpiricalMargin::EmpiricalMargin(std::span<const double> y) : n_(y.size()) {
  if (y.empty()) throw ValidationError("empirical margin needs at least one value");
  const std::vector<double> r = midranks(y);
  std::vector<std::pair<double, double>> pts(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) pts[i] = {y[i], r[i]};
  std::sort(pts.begin(), pts.end());
  const double denom = static_cast<double>(n_) + 1.0;
  for (const auto& [value, rank] : pts) {
    if (knots_.empty() || value != knots_.back()) {
      knots_.push_back(value);
      levels_.push_back(rank / denom);
    }
  }
  if (knots_.size() >= 2) {
    lo_scale_ = levels_[0] * (knots_[1] - knots_[0]) / (levels_[1] - levels_[0]);
    const std::size_t m = knots_.size() - 1;
    hi_scale_ = (1.0 - levels_[m]) * (knots_[m] - knots_[m - 1]) / (levels_[m] - levels_[m - 1]);
  }
}

double EmpiricalMargin::cdf(double y) const {
  if (std::isnan(y)) return y;
  if (y <= knots_.front()) {
    if (y == knots_.front()) return levels_.front();
    return knots_.size() < 2 ? 0.0 : levels_.front() * std::exp((y - knots_.front()) / lo_scale_);
  }
  if (y >= knots_.back()) {
    if (y == knots_.back()) return levels_.back();
    return knots_.size() < 2 ? 1.0 : 1.0 - (1.0 - levels_.back()) * std::exp(-(y - knots_.back()) / hi_scale_);
  }
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), y);
  const std::size_t j = static_cast<std::size_t>(it - knots_.begin());
  const double w = (y - knots_[j - 1]) / (knots_[j] - knots_[j - 1]);
  return levels_[j - 1] + w * (levels_[j] - levels_[j - 1]);
}

double EmpiricalMargin::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("empirical quantile needs p in (0, 1)");
  if (knots_.size() < 2) return knots_.front();
  if (p <= levels_.front()) return knots_.front() + lo_scale_ * std::log(p / levels_.front());
  if (p >= levels_.back()) return knots_.back() - hi_scale_ * std::log((1.0 - p) / (1.0 - levels_.back()));
  const auto it = std::upper_bound(levels_.begin(), levels_.end(), p);
  const std::size_t j = static_cast<std::size_t>(it - levels_.begin());
  const double w = (p - levels_[j - 1]) / (levels_[j] - levels_[j - 1]);
  return knots_[j - 1] + w * (knots_[j] - knots_[j - 1]);
}

namespace {

PseudoObs ordinal_part(const MixedPairSample& s) {
  PseudoObs p;
  const double n = static_cast<double>(s.n());
  p.k = s.k;
  p.x = s.x;
  p.fx.assign(static_cast<std::size_t>(s.k) + 1, 0.0);
  std::size_t cum = 0;
  for (int j = 1; j <= s.k; ++j) {
    cum += s.counts[static_cast<std::size_t>(j - 1)];
    p.fx[static_cast<std::size_t>(j)] = j == s.k ? 1.0 : static_cast<double>(cum) / n;
  }
  p.cutpoints.assign(p.fx.size(), 0.0);
  p.cutpoints.front() = -numerics::kInf;
  p.cutpoints.back() = numerics::kInf;
  for (int j = 1; j < s.k; ++j) {
    p.cutpoints[static_cast<std::size_t>(j)] = numerics::normal_quantile(p.fx[static_cast<std::size_t>(j)]);
  }
  p.u_plus.resize(s.n());
  p.u_minus.resize(s.n());
  for (std::size_t i = 0; i < s.n(); ++i) {
    p.u_plus[i] = p.fx[static_cast<std::size_t>(s.x[i])];
    p.u_minus[i] = p.fx[static_cast<std::size_t>(s.x[i] - 1)];
  }
  return p;
}

}  // namespace

PseudoObs pseudo_observations(const MixedPairSample& s, const PseudoObsOptions& options) {
  PseudoObs p = ordinal_part(s);
  const double denom = static_cast<double>(s.n()) + 1.0;
  std::vector<double> r;
  if (options.jitter_ties) {
    Rng rng(options.seed);
    std::vector<std::pair<double, std::uint64_t>> key(s.n());
    for (std::size_t i = 0; i < s.n(); ++i) key[i] = {s.y[i], rng.next()};
    std::vector<std::size_t> idx(s.n());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
    r.resize(s.n());
    for (std::size_t t = 0; t < idx.size(); ++t) r[idx[t]] = static_cast<double>(t + 1);
  } else {
    r = midranks(s.y);
  }
  p.u_y.resize(s.n());
  for (std::size_t i = 0; i < s.n(); ++i) p.u_y[i] = r[i] / denom;
  auto margin = std::make_shared<EmpiricalMargin>(s.y);
  p.margin.cdf = [margin](double y) { return margin->cdf(y); };
  p.margin.quantile = [margin](double v) { return margin->quantile(v); };
  return p;
}

PseudoObs pseudo_observations(const MixedPairSample& s, const ContinuousMargin& margin) {
  if (!margin.cdf || !margin.quantile) throw ValidationError("parametric margin needs cdf and quantile");
  PseudoObs p = ordinal_part(s);
  p.u_y.resize(s.n());
  for (std::size_t i = 0; i < s.n(); ++i) {
    const double u = margin.cdf(s.y[i]);
    if (!(u > 0.0 && u < 1.0)) {
      throw ValidationError("parametric margin maps row " + std::to_string(i + 1) + " outside (0, 1)");
    }
    p.u_y[i] = u;
  }
  p.margin = margin;
  return p;
}

MixedPairSample reverse_categories(const MixedPairSample& s) {
  MixedPairSample out = s;
  for (int& c : out.x) c = s.k + 1 - c;
  std::reverse(out.counts.begin(), out.counts.end());
  std::reverse(out.labels.begin(), out.labels.end());
  return out;
}

Oriented orient_positive(const MixedPairSample& s, bool flip_y) {
  Oriented o{s, false, false};
  if (spearman_rho(s) >= 0.0) return o;
  if (flip_y) {
    for (double& v : o.sample.y) v = -v;
    o.flipped_y = true;
  } else {
    o.sample = reverse_categories(s);
    o.flipped_x = true;
  }
  return o;
}

double pearson_rho(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ValidationError("correlation inputs differ in length");
  if (a.size() < 3) throw ValidationError("correlation needs at least three pairs");
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  if (saa == 0.0 || sbb == 0.0) throw DomainError("correlation undefined for a constant column");
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

double spearman_rho(std::span<const double> a, std::span<const double> b) {
  return pearson_rho(midranks(a), midranks(b));
}

double spearman_rho(const MixedPairSample& s) {
  const std::vector<double> x(s.x.begin(), s.x.end());
  return spearman_rho(x, s.y);
}

}  // namespace mixcop
