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
#include "mixcop/klatlas.hpp"
#include "mixcop/random.hpp"

namespace mixcop {
namespace {

using numerics::kInf;

constexpr double kLog2 = 0.69314718055994530942;

double log_normal_cdf(double x) {
  if (x > -37.0) return std::log(numerics::normal_cdf(x));
  // Asymptotic expansion of the Mills ratio.
  const double x2 = x * x;
  return numerics::log_normal_pdf(x) - std::log(-x) + std::log1p(-1.0 / x2 + 3.0 / (x2 * x2) - 15.0 / (x2 * x2 * x2));
}

// One location-scale component.
struct Component {
  ComponentKind kind;
  double mu;
  double sigma;
  double nu;
  double alpha;

  double log_pdf(double y) const {
    const double z = (y - mu) / sigma;
    switch (kind) {
      case ComponentKind::Normal:
        return numerics::log_normal_pdf(z) - std::log(sigma);
      case ComponentKind::StudentT:
        return numerics::log_student_t_pdf(z, nu) - std::log(sigma);
      case ComponentKind::SkewNormal:
        return kLog2 + numerics::log_normal_pdf(z) + log_normal_cdf(alpha * z) - std::log(sigma);
    }
    return -kInf;
  }

  double cdf(double y) const {
    const double z = (y - mu) / sigma;
    switch (kind) {
      case ComponentKind::Normal:
        return numerics::normal_cdf(z);
      case ComponentKind::StudentT:
        return numerics::student_t_cdf(z, nu);
      case ComponentKind::SkewNormal:
        return skew_cdf(z, alpha);
    }
    return 0.0;
  }

  double sf(double y) const {
    const double z = (y - mu) / sigma;
    switch (kind) {
      case ComponentKind::Normal:
        return numerics::normal_cdf(-z);
      case ComponentKind::StudentT:
        return numerics::student_t_cdf(-z, nu);
      case ComponentKind::SkewNormal:
        return skew_cdf(-z, -alpha);
    }
    return 0.0;
  }

  double draw(Rng& rng) const {
    switch (kind) {
      case ComponentKind::Normal:
        return mu + sigma * rng.normal();
      case ComponentKind::StudentT:
        return mu + sigma * numerics::student_t_quantile(rng.uniform(), nu);
      case ComponentKind::SkewNormal: {
        // Z = delta |N0| + sqrt(1 - delta^2) N1 has the skew normal law.
        const double delta = alpha / std::sqrt(1.0 + alpha * alpha);
        const double n0 = std::fabs(rng.normal());
        const double n1 = rng.normal();
        return mu + sigma * (delta * n0 + std::sqrt(1.0 - delta * delta) * n1);
      }
    }
    return mu;
  }

  // 2 Phi_2(z, 0; -delta).
  static double skew_cdf(double z, double a) {
    const double delta = a / std::sqrt(1.0 + a * a);
    if (std::fabs(delta) >= 1.0 - 1e-15) {
      return a > 0 ? std::max(0.0, 2.0 * numerics::normal_cdf(z) - 1.0) : std::min(1.0, 2.0 * numerics::normal_cdf(z));
    }
    return std::clamp(2.0 * numerics::bivariate_normal_cdf(z, 0.0, -delta), 0.0, 1.0);
  }
};

std::vector<Component> components(const MixtureModel& m) {
  std::vector<Component> out;
  for (std::size_t i = 0; i < m.pi.size(); ++i) {
    Component c{m.component, m.mu[i], m.sigma.empty() ? 1.0 : m.sigma[i], m.nu.empty() ? 0.0 : m.nu[i],
                m.alpha.empty() ? 0.0 : m.alpha[i]};
    out.push_back(c);
  }
  return out;
}

double link_cdf(Link link, double t) {
  if (link == Link::Probit) return numerics::normal_cdf(t);
  return t >= 0.0 ? 1.0 / (1.0 + std::exp(-t)) : std::exp(t) / (1.0 + std::exp(t));
}

// F(hi) - F(lo) on the tail side that avoids cancellation.
double link_interval(Link link, double lo, double hi) {
  if (lo > 0.0) return link_cdf(link, -lo) - link_cdf(link, -hi);
  return link_cdf(link, hi) - link_cdf(link, lo);
}

struct RegMargin {
  YMargin kind;
  double nu;

  double cdf(double y) const {
    switch (kind) {
      case YMargin::Normal:
        return numerics::normal_cdf(y);
      case YMargin::StudentT:
        return numerics::student_t_cdf(y, nu);
      case YMargin::ExtremeValue:
        return std::exp(-std::exp(-y));
    }
    return 0.0;
  }
  double sf(double y) const {
    switch (kind) {
      case YMargin::Normal:
        return numerics::normal_cdf(-y);
      case YMargin::StudentT:
        return numerics::student_t_cdf(-y, nu);
      case YMargin::ExtremeValue:
        return -std::expm1(-std::exp(-y));
    }
    return 0.0;
  }
  double pdf(double y) const {
    switch (kind) {
      case YMargin::Normal:
        return numerics::normal_pdf(y);
      case YMargin::StudentT:
        return numerics::student_t_pdf(y, nu);
      case YMargin::ExtremeValue:
        return std::exp(-y - std::exp(-y));
    }
    return 0.0;
  }
  double quantile(double p) const {
    switch (kind) {
      case YMargin::Normal:
        return numerics::normal_quantile(p);
      case YMargin::StudentT:
        return numerics::student_t_quantile(p, nu);
      case YMargin::ExtremeValue:
        return -std::log(-std::log(p));
    }
    return 0.0;
  }
  double score_quantile(double s) const {
    switch (kind) {
      case YMargin::Normal:
        return s;
      case YMargin::StudentT:
        return s > 0.0 ? -numerics::student_t_quantile(numerics::normal_cdf(-s), nu)
                       : numerics::student_t_quantile(numerics::normal_cdf(s), nu);
      case YMargin::ExtremeValue:
        return s > 0.0 ? -std::log(-std::log1p(-numerics::normal_cdf(-s)))
                       : -std::log(-std::log(numerics::normal_cdf(s)));
    }
    return s;
  }
};

// Root of cdf(y) = p using whichever of cdf and sf keeps precision,
// expanding the bracket as needed.
double invert_cdf(const std::function<double(double)>& cdf, const std::function<double(double)>& sf, double p,
                  double centre, double scale) {
  const bool lower = p <= 0.5;
  const auto f = [&](double y) { return lower ? cdf(y) - p : (1.0 - p) - sf(y); };
  double lo = centre - scale;
  double hi = centre + scale;
  for (int i = 0; i < 200 && f(lo) > 0.0; ++i) lo -= (hi - lo);
  for (int i = 0; i < 200 && f(hi) < 0.0; ++i) hi += (hi - lo);
  return numerics::find_root(f, lo, hi, 0.0, 1e-13 * std::max(1.0, std::fabs(centre) + scale));
}

// Same with the target given as a normal score, so both tails are exact.
double invert_score(const std::function<double(double)>& cdf, const std::function<double(double)>& sf, double s,
                    double centre, double scale) {
  const bool lower = s <= 0.0;
  const double target = numerics::normal_cdf(lower ? s : -s);
  const auto f = [&](double y) { return lower ? cdf(y) - target : target - sf(y); };
  double lo = centre - scale;
  double hi = centre + scale;
  for (int i = 0; i < 200 && f(lo) > 0.0; ++i) lo -= (hi - lo);
  for (int i = 0; i < 200 && f(hi) < 0.0; ++i) hi += (hi - lo);
  return numerics::find_root(f, lo, hi, 0.0, 1e-13 * std::max(1.0, std::fabs(centre) + scale));
}

void check_category(const ProbabilityModel& model, int i) {
  const int k = model_categories(model);
  if (i < 1 || i > k) throw DomainError("category " + std::to_string(i) + " outside 1.." + std::to_string(k));
}

}  // namespace

int model_categories(const ProbabilityModel& model) {
  if (const auto* m = std::get_if<MixtureModel>(&model)) return static_cast<int>(m->pi.size());
  return static_cast<int>(std::get<RegressionModel>(model).b.size()) + 1;
}

void validate_model(const ProbabilityModel& model) {
  if (const auto* m = std::get_if<MixtureModel>(&model)) {
    const std::size_t k = m->pi.size();
    if (k < 1) throw ValidationError("mixture needs at least one component");
    if (m->mu.size() != k) throw ValidationError("mixture mu length differs from pi");
    if (!m->sigma.empty() && m->sigma.size() != k) throw ValidationError("mixture sigma length differs from pi");
    double total = 0.0;
    for (double p : m->pi) {
      if (!(p > 0.0)) throw ValidationError("mixing proportions must be positive");
      total += p;
    }
    if (std::fabs(total - 1.0) > 1e-9) throw ValidationError("mixing proportions must sum to 1");
    for (double s : m->sigma) {
      if (!(s > 0.0)) throw ValidationError("component scales must be positive");
    }
    if (m->component == ComponentKind::StudentT) {
      if (m->nu.size() != k) throw ValidationError("t mixture needs one nu per component");
      for (double v : m->nu) {
        if (!(v > 0.0)) throw ValidationError("degrees of freedom must be positive");
      }
    }
    if (m->component == ComponentKind::SkewNormal && m->alpha.size() != k) {
      throw ValidationError("skew normal mixture needs one alpha per component");
    }
    return;
  }
  const auto& r = std::get<RegressionModel>(model);
  if (r.b.empty()) throw ValidationError("regression model needs at least one cutoff");
  for (std::size_t i = 1; i < r.b.size(); ++i) {
    if (!(r.b[i] > r.b[i - 1])) throw ValidationError("cutoffs must be strictly increasing");
  }
  if (r.margin == YMargin::StudentT && !(r.nu > 0.0)) throw ValidationError("degrees of freedom must be positive");
  if (!std::isfinite(r.a)) throw ValidationError("slope must be finite");
}

std::vector<double> model_conditional(const ProbabilityModel& model, double y) {
  const int k = model_categories(model);
  std::vector<double> p(static_cast<std::size_t>(k));
  if (const auto* m = std::get_if<MixtureModel>(&model)) {
    const std::vector<Component> comps = components(*m);
    std::vector<double> lw(p.size());
    double top = -kInf;
    for (std::size_t i = 0; i < p.size(); ++i) {
      lw[i] = std::log(m->pi[i]) + comps[i].log_pdf(y);
      top = std::max(top, lw[i]);
    }
    double total = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) total += p[i] = std::exp(lw[i] - top);
    for (double& v : p) v /= total;
    return p;
  }
  const auto& r = std::get<RegressionModel>(model);
  for (int i = 1; i <= k; ++i) {
    const double lo = i == 1 ? -kInf : r.a * y + r.b[static_cast<std::size_t>(i - 2)];
    const double hi = i == k ? kInf : r.a * y + r.b[static_cast<std::size_t>(i - 1)];
    p[static_cast<std::size_t>(i - 1)] = std::max(0.0, link_interval(r.link, lo, hi));
  }
  return p;
}

double model_joint_density(const ProbabilityModel& model, int i, double y) {
  check_category(model, i);
  if (const auto* m = std::get_if<MixtureModel>(&model)) {
    const auto idx = static_cast<std::size_t>(i - 1);
    return m->pi[idx] * std::exp(components(*m)[idx].log_pdf(y));
  }
  const auto& r = std::get<RegressionModel>(model);
  return RegMargin{r.margin, r.nu}.pdf(y) * model_conditional(model, y)[static_cast<std::size_t>(i - 1)];
}

ModelMargins model_margins(const ProbabilityModel& model) {
  validate_model(model);
  ModelMargins out;
  const int k = model_categories(model);
  out.fx.assign(static_cast<std::size_t>(k) + 1, 0.0);
  if (const auto* m = std::get_if<MixtureModel>(&model)) {
    for (int i = 1; i <= k; ++i) {
      out.fx[static_cast<std::size_t>(i)] = out.fx[static_cast<std::size_t>(i - 1)] + m->pi[static_cast<std::size_t>(i - 1)];
    }
    out.fx.back() = 1.0;
    const std::vector<Component> comps = components(*m);
    const std::vector<double> pi = m->pi;
    out.cdf = [comps, pi](double y) {
      double s = 0.0;
      for (std::size_t i = 0; i < comps.size(); ++i) s += pi[i] * comps[i].cdf(y);
      return std::min(s, 1.0);
    };
    out.sf = [comps, pi](double y) {
      double s = 0.0;
      for (std::size_t i = 0; i < comps.size(); ++i) s += pi[i] * comps[i].sf(y);
      return std::min(s, 1.0);
    };
    out.pdf = [comps, pi](double y) {
      double s = 0.0;
      for (std::size_t i = 0; i < comps.size(); ++i) s += pi[i] * std::exp(comps[i].log_pdf(y));
      return s;
    };
    double centre = 0.0;
    double scale = 1.0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      centre += pi[i] * comps[i].mu;
      scale = std::max(scale, 4.0 * comps[i].sigma);
    }
    const auto cdf = out.cdf;
    const auto sf = out.sf;
    out.quantile = [cdf, sf, centre, scale](double p) {
      if (!(p > 0.0 && p < 1.0)) throw DomainError("quantile level must lie in (0, 1)");
      return invert_cdf(cdf, sf, p, centre, scale);
    };
    out.score_quantile = [cdf, sf, centre, scale](double s) { return invert_score(cdf, sf, s, centre, scale); };
    return out;
  }

  const auto& r = std::get<RegressionModel>(model);
  const RegMargin margin{r.margin, r.nu};
  out.cdf = [margin](double y) { return margin.cdf(y); };
  out.sf = [margin](double y) { return margin.sf(y); };
  out.pdf = [margin](double y) { return margin.pdf(y); };
  out.quantile = [margin](double p) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("quantile level must lie in (0, 1)");
    return margin.quantile(p);
  };
  out.score_quantile = [margin](double s) { return margin.score_quantile(s); };
  // F_X(i) = E[F(a Y + b_i)], integrated on the normal-score scale.
  for (int i = 1; i < k; ++i) {
    const double b = r.b[static_cast<std::size_t>(i - 1)];
    const auto f = [&](double s) {
      return numerics::normal_pdf(s) * link_cdf(r.link, r.a * margin.score_quantile(s) + b);
    };
    out.fx[static_cast<std::size_t>(i)] = numerics::integrate_adaptive(f, -9.0, 9.0, 1e-15, 1e-13, 4000);
  }
  out.fx.back() = 1.0;
  return out;
}

double copula_joint_density(const CopulaSpec& spec, const ModelMargins& margins, int i, double y) {
  const int k = static_cast<int>(margins.fx.size()) - 1;
  if (i < 1 || i > k) throw DomainError("category outside the margin");
  const double v = margins.cdf(y);
  const double f = margins.pdf(y);
  if (!(v > 0.0 && v < 1.0)) return 0.0;
  const double lo = margins.fx[static_cast<std::size_t>(i - 1)];
  const double hi = margins.fx[static_cast<std::size_t>(i)];
  double q;
  if (i == 1) {
    q = copula_cond_1g2(spec, hi, v);
  } else if (i == k) {
    q = copula_cond_1g2_upper(spec, lo, v);
  } else {
    q = copula_cond_1g2(spec, hi, v) - copula_cond_1g2(spec, lo, v);
  }
  return f * std::max(q, 0.0);
}

ProbabilityModel reverse_model(const ProbabilityModel& model) {
  if (const auto* m = std::get_if<MixtureModel>(&model)) {
    MixtureModel r = *m;
    std::reverse(r.pi.begin(), r.pi.end());
    std::reverse(r.mu.begin(), r.mu.end());
    std::reverse(r.sigma.begin(), r.sigma.end());
    std::reverse(r.nu.begin(), r.nu.end());
    std::reverse(r.alpha.begin(), r.alpha.end());
    return r;
  }
  RegressionModel r = std::get<RegressionModel>(model);
  const std::vector<double> b = r.b;
  r.a = -r.a;
  for (std::size_t i = 0; i < b.size(); ++i) r.b[i] = -b[b.size() - 1 - i];
  return r;
}

ProbabilityModel reflect_model(const ProbabilityModel& model) {
  if (const auto* m = std::get_if<MixtureModel>(&model)) {
    MixtureModel r = *m;
    for (double& v : r.mu) v = -v;
    for (double& v : r.alpha) v = -v;
    return r;
  }
  RegressionModel r = std::get<RegressionModel>(model);
  if (r.margin == YMargin::ExtremeValue) throw ValidationError("the extreme value margin is not symmetric");
  r.a = -r.a;
  return r;
}

MixedPairSample sample_from_model(const ProbabilityModel& model, std::size_t n, std::uint64_t seed) {
  validate_model(model);
  if (n < 1) throw ValidationError("sample size must be positive");
  const int k = model_categories(model);
  Rng rng(seed);
  std::vector<int> x(n);
  std::vector<double> y(n);
  if (const auto* m = std::get_if<MixtureModel>(&model)) {
    const std::vector<Component> comps = components(*m);
    for (std::size_t t = 0; t < n; ++t) {
      const double u = rng.uniform();
      double cum = 0.0;
      int cat = k;
      for (int i = 1; i < k; ++i) {
        cum += m->pi[static_cast<std::size_t>(i - 1)];
        if (u <= cum) {
          cat = i;
          break;
        }
      }
      x[t] = cat;
      y[t] = comps[static_cast<std::size_t>(cat - 1)].draw(rng);
    }
  } else {
    const auto& r = std::get<RegressionModel>(model);
    const RegMargin margin{r.margin, r.nu};
    for (std::size_t t = 0; t < n; ++t) {
      y[t] = margin.quantile(rng.uniform());
      const double u = rng.uniform();
      int cat = k;
      for (int i = 1; i < k; ++i) {
        if (u <= link_cdf(r.link, r.a * y[t] + r.b[static_cast<std::size_t>(i - 1)])) {
          cat = i;
          break;
        }
      }
      x[t] = cat;
    }
  }
  // A category can be unobserved in a small sample; keep the codes and
  // let make_sample reject it so callers see the problem.
  return make_sample(std::move(x), std::move(y), k);
}

}  // namespace mixcop
