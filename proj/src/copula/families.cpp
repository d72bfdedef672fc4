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
#include <array>
#include <cmath>
#include <string>

#include "mixcop/copula.hpp"
#include "mixcop/error.hpp"

namespace mixcop {
namespace {

using numerics::kInf;

constexpr double kLog2 = 0.69314718055994530942;

// log(exp(a) + exp(b))
double log_add(double a, double b) {
  const double m = std::max(a, b);
  if (m == -kInf) return -kInf;
  return m + std::log1p(std::exp(std::min(a, b) - m));
}

// log(exp(a) + exp(b) - 1) for a, b >= 0.
double log_add_minus_one(double a, double b) {
  const double m = std::max(a, b);
  if (m < 1.0) return std::log1p(std::expm1(a) + std::expm1(b));
  return m + std::log(std::exp(a - m) + std::exp(b - m) - std::exp(-m));
}

// log(1 + exp(x))
double log1p_exp(double x) { return x > 30.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }

// log(expm1(a)) for a > 0.
double log_expm1(double a) { return a > 30.0 ? a + std::log1p(-std::exp(-a)) : std::log(std::expm1(a)); }

// log(-expm1(a)) = log(1 - exp(a)) for a < 0.
double log_one_minus_exp(double a) {
  return a > -kLog2 ? std::log(-std::expm1(a)) : std::log1p(-std::exp(a));
}

double clamp01(double x) { return std::isnan(x) ? x : std::clamp(x, 0.0, 1.0); }

// ---------------------------------------------------------------------------
// Base (unrotated) families on the open unit square. h12 is dC/dv, h21 is
// dC/du; upper12 is 1 - h12.
// ---------------------------------------------------------------------------

double gaussian_h_arg(const double* th, double u, double v) {
  const double rho = th[0];
  return (numerics::normal_quantile(u) - rho * numerics::normal_quantile(v)) /
         std::sqrt((1.0 - rho) * (1.0 + rho));
}

double t_h_arg(const double* th, double u, double v) {
  const double rho = th[0];
  const double nu = th[1];
  const double tu = numerics::student_t_quantile(u, nu);
  const double tv = numerics::student_t_quantile(v, nu);
  // Divided through by |tv| when it is large: for small nu the quantile
  // can overflow far in the tail, and the argument has a finite limit.
  const double s = std::max(1.0, std::fabs(tv));
  const double a = tu / s;
  const double b = std::isinf(tv) ? std::copysign(1.0, tv) : tv / s;
  return (a - rho * b) /
         std::sqrt((nu / (s * s) + b * b) * (1.0 - rho) * (1.0 + rho) / (nu + 1.0));
}

double t_cdf(const double* th, double u, double v) {
  const double rho = th[0];
  const double nu = th[1];
  const double tu = numerics::student_t_quantile(u, nu);
  const double tv = numerics::student_t_quantile(v, nu);
  // Mixture over W ~ chi^2_nu: P(Z1 <= tu sqrt(W/nu), Z2 <= tv sqrt(W/nu)),
  // integrated in z = log W.
  const double log_norm = 0.5 * nu * kLog2 + std::lgamma(0.5 * nu);
  const auto integrand = [&](double z) {
    const double w = std::exp(z);
    const double log_density = 0.5 * nu * z - 0.5 * w - log_norm;
    if (log_density < -745.0) return 0.0;
    const double s = std::sqrt(w / nu);
    return numerics::bivariate_normal_cdf(tu * s, tv * s, rho) * std::exp(log_density);
  };
  const double z_lo = std::log(nu) - 90.0 / nu - 5.0;
  const double z_hi = std::log(nu + 30.0 * std::sqrt(2.0 * nu) + 90.0);
  return numerics::integrate_adaptive(integrand, z_lo, z_hi, 1e-14, 1e-12, 4000);
}

// d + ab with a = expm1(-tu), b = expm1(-tv), d = expm1(-t), written as
// e^{-tu} expm1(-tv) + e^{-tv} expm1(-t(1 - v)); both terms share a sign.
double frank_den(double t, double u, double v) {
  return std::exp(-t * u) * std::expm1(-t * v) + std::exp(-t * v) * std::expm1(-t * (1.0 - v));
}

double frank_cdf(const double* th, double u, double v) {
  const double t = th[0];
  if (std::fabs(t) < 1e-9) return u * v;
  const double d = std::expm1(-t);
  const double r = std::expm1(-t * u) * std::expm1(-t * v) / d;
  if (std::fabs(r) < 0.5) return -std::log1p(r) / t;
  return -std::log(frank_den(t, u, v) / d) / t;
}

double frank_h12(const double* th, double u, double v) {
  const double t = th[0];
  if (std::fabs(t) < 1e-9) return u;
  return std::exp(-t * v) * std::expm1(-t * u) / frank_den(t, u, v);
}

// 1 - h = (d - a) / (d + ab), with d - a = e^{-tu} expm1(-t(1 - u)).
double frank_upper12(const double* th, double u, double v) {
  const double t = th[0];
  if (std::fabs(t) < 1e-9) return 1.0 - u;
  return std::exp(-t * u) * std::expm1(-t * (1.0 - u)) / frank_den(t, u, v);
}

double plackett_cdf(const double* th, double u, double v) {
  const double eta = th[0];
  const double s = 1.0 + (eta - 1.0) * (u + v);
  const double r = std::sqrt(s * s - 4.0 * eta * (eta - 1.0) * u * v);
  return 2.0 * eta * u * v / (s + r);
}

// h = (r - w) / 2r and 1 - h = (r + w) / 2r with w = s - 2 eta u. Since
// r^2 - w^2 = 4 eta u (1 - u), the smaller of the two is rewritten
// without cancellation.
void plackett_pair(const double* th, double u, double v, double* h, double* upper) {
  const double eta = th[0];
  const double s = 1.0 + (eta - 1.0) * (u + v);
  const double r = std::sqrt(s * s - 4.0 * eta * (eta - 1.0) * u * v);
  const double w = s - 2.0 * eta * u;
  const double g = 2.0 * eta * u * (1.0 - u);
  if (w >= 0.0) {
    *h = g / (r * (r + w));
    *upper = (r + w) / (2.0 * r);
  } else {
    *h = (r - w) / (2.0 * r);
    *upper = g / (r * (r - w));
  }
}

double plackett_h12(const double* th, double u, double v) {
  double h, upper;
  plackett_pair(th, u, v, &h, &upper);
  return h;
}

double plackett_upper12(const double* th, double u, double v) {
  double h, upper;
  plackett_pair(th, u, v, &h, &upper);
  return upper;
}

double gumbel_cdf(const double* th, double u, double v) {
  const double d = th[0];
  const double x = -std::log(u);
  const double y = -std::log(v);
  const double ls = log_add(d * std::log(x), d * std::log(y));
  return std::exp(-std::exp(ls / d));
}

// The conditional h-functions below are written as log h in terms of a
// ratio r against the conditioning variable, so that both h and 1 - h keep
// full relative accuracy in the tails.

// log h = -y expm1(log1p(r)/d) + (1/d - 1) log1p(r), r = (x/y)^d.
double gumbel_log_h12(const double* th, double u, double v) {
  const double d = th[0];
  const double x = -std::log(u);
  const double y = -std::log(v);
  const double l1r = log1p_exp(d * (std::log(x) - std::log(y)));
  return -y * std::expm1(l1r / d) + (1.0 / d - 1.0) * l1r;
}

double clayton_cdf(const double* th, double u, double v) {
  const double d = th[0];
  if (d < 1e-10) return u * v;
  const double lt = log_add_minus_one(-d * std::log(u), -d * std::log(v));
  return std::exp(-lt / d);
}

// log h = -(1/d + 1) log1p(r), r = (u^-d - 1) v^d.
double clayton_log_h12(const double* th, double u, double v) {
  const double d = th[0];
  if (d < 1e-10) return std::log(u);
  const double lr = log_expm1(-d * std::log(u)) + d * std::log(v);
  return -(1.0 / d + 1.0) * log1p_exp(lr);
}

double joe_cdf(const double* th, double u, double v) {
  const double d = th[0];
  // S = a + b (1 - a) with a = (1-u)^d, b = (1-v)^d; C = 1 - S^(1/d).
  const double la = d * std::log1p(-u);
  const double lb = d * std::log1p(-v);
  const double log_s = log_add(la, lb + log_one_minus_exp(la));
  return -std::expm1(log_s / d);
}

// log h = log(1 - a) + (1/d - 1) log1p(r), a = (1-u)^d, b = (1-v)^d,
// r = a (1/b - 1).
double joe_log_h12(const double* th, double u, double v) {
  const double d = th[0];
  const double la = d * std::log1p(-u);
  const double lb = d * std::log1p(-v);
  const double lr = la + log_expm1(-lb);
  return log_one_minus_exp(la) + (1.0 / d - 1.0) * log1p_exp(lr);
}

struct BB1Terms {
  double log_one_plus_t;
  double ls;
  double ly;
};

BB1Terms bb1_terms(const double* th, double u, double v) {
  const double theta = th[0];
  const double delta = th[1];
  const double lx = log_expm1(-theta * std::log(u));
  const double ly = log_expm1(-theta * std::log(v));
  const double ls = log_add(delta * lx, delta * ly);
  return BB1Terms{log1p_exp(ls / delta), ls, ly};
}

double bb1_cdf(const double* th, double u, double v) {
  return std::exp(-bb1_terms(th, u, v).log_one_plus_t / th[0]);
}

// With x = u^-theta - 1, y = v^-theta - 1, r = (x/y)^delta and
// e = expm1(log1p(r)/delta):
// log h = (1/delta - 1) log1p(r) - (1/theta + 1) log1p((1 - v^theta) e).
double bb1_log_h12(const double* th, double u, double v) {
  const double theta = th[0];
  const double delta = th[1];
  const double lx = log_expm1(-theta * std::log(u));
  const double ly = log_expm1(-theta * std::log(v));
  const double l1r = log1p_exp(delta * (lx - ly));
  const double e = std::expm1(l1r / delta);
  const double one_minus_vt = -std::expm1(theta * std::log(v));
  return (1.0 / delta - 1.0) * l1r - (1.0 / theta + 1.0) * std::log1p(one_minus_vt * e);
}

struct BB7Terms {
  double ls;              // log S, S = a^-d + b^-d - 1
  double log_one_minus_w; // log(1 - S^(-1/d))
  double lb;
};

BB7Terms bb7_terms(const double* th, double u, double v) {
  const double theta = th[0];
  const double delta = th[1];
  const double la = log_one_minus_exp(theta * std::log1p(-u));
  const double lb = log_one_minus_exp(theta * std::log1p(-v));
  const double ls = log_add_minus_one(-delta * la, -delta * lb);
  return BB7Terms{ls, log_one_minus_exp(-ls / delta), lb};
}

double bb7_cdf(const double* th, double u, double v) {
  const BB7Terms t = bb7_terms(th, u, v);
  return -std::expm1(t.log_one_minus_w / th[0]);
}

// With A = 1 - (1-u)^theta, B = 1 - (1-v)^theta, r = (A^-delta - 1) B^delta
// and g = -expm1(-log1p(r)/delta):
// log h = -(1/delta + 1) log1p(r) + (1/theta - 1) log1p(g B/(1-v)^theta).
double bb7_log_h12(const double* th, double u, double v) {
  const double theta = th[0];
  const double delta = th[1];
  const double la = log_one_minus_exp(theta * std::log1p(-u));
  const double lb = log_one_minus_exp(theta * std::log1p(-v));
  const double l1r = log1p_exp(log_expm1(-delta * la) + delta * lb);
  const double g = -std::expm1(-l1r / delta);
  const double odds = std::expm1(-theta * std::log1p(-v));  // B / (1-v)^theta
  return -(1.0 / delta + 1.0) * l1r + (1.0 / theta - 1.0) * std::log1p(g * odds);
}

double bb8_a(double vartheta, double delta, double t) {
  return -std::expm1(vartheta * std::log1p(-delta * t));
}

// D = (1 - delta u)^vt - (1 - delta)^vt, so that eta - A(u) = D >= 0.
double bb8_d(double vt, double delta, double u) {
  if (delta < 1.0) {
    return std::exp(vt * std::log1p(-delta)) * std::expm1(vt * std::log1p(delta * (1.0 - u) / (1.0 - delta)));
  }
  return std::exp(vt * std::log1p(-u));
}

// 1 - A(u)A(v)/eta = (D(u) + (1 - delta v)^vt (1 - (1 - delta u)^vt)) / eta.
double bb8_cdf(const double* th, double u, double v) {
  const double vt = th[0];
  const double delta = th[1];
  const double eta = bb8_a(vt, delta, 1.0);
  const double pv = std::exp(vt * std::log1p(-delta * v));
  const double log_k = std::log(bb8_d(vt, delta, u) + pv * bb8_a(vt, delta, u)) - std::log(eta);
  return -std::expm1(log_k / vt) / delta;
}

// With D = (1 - delta u)^vt - (1 - delta)^vt = eta - A(u) and
// R = D A(v) / (eta (1 - delta v)^vt):
// log h = log1p(-D/eta) + (1/vt - 1) log1p(R).
double bb8_log_h12(const double* th, double u, double v) {
  const double vt = th[0];
  const double delta = th[1];
  const double eta = bb8_a(vt, delta, 1.0);
  const double d = bb8_d(vt, delta, u);
  const double r = d * bb8_a(vt, delta, v) / (eta * std::exp(vt * std::log1p(-delta * v)));
  return std::log1p(-d / eta) + (1.0 / vt - 1.0) * std::log1p(r);
}

double bb10_cdf(const double* th, double u, double v) {
  const double vt = th[0];
  const double pi = th[1];
  const double su = -std::expm1(std::log(u) / vt);
  const double sv = -std::expm1(std::log(v) / vt);
  return u * v * std::exp(-vt * std::log1p(-pi * su * sv));
}

double bb10_log_h12(const double* th, double u, double v) {
  const double vt = th[0];
  const double pi = th[1];
  const double su = -std::expm1(std::log(u) / vt);
  const double sv = -std::expm1(std::log(v) / vt);
  return std::log(u) + std::log1p(-pi * su) - (vt + 1.0) * std::log1p(-pi * su * sv);
}

double asym_gumbel_log_cdf(const double* th, double u, double v, double* ls_out) {
  const double d = th[0];
  const double a1 = th[1];
  const double a2 = th[2];
  const double x = -std::log(u);
  const double y = -std::log(v);
  const double ls = log_add(d * std::log(a1 * x), d * std::log(a2 * y));
  if (ls_out != nullptr) *ls_out = ls;
  return -(1.0 - a1) * x - (1.0 - a2) * y - std::exp(ls / d);
}

double asym_gumbel_cdf(const double* th, double u, double v) {
  return std::exp(asym_gumbel_log_cdf(th, u, v, nullptr));
}

// d/dv of the Khoudraji-Gumbel CDF with the roles of (x, a1) and (y, a2)
// as given. With r = (a1 x / (a2 y))^d:
// log h = -(1 - a1) x - a2 y expm1(log1p(r)/d) + log1p(a2 expm1((1/d - 1) log1p(r))).
double asym_gumbel_log_h(double d, double a1, double a2, double x, double y) {
  const double l1r = log1p_exp(d * (std::log(a1 * x) - std::log(a2 * y)));
  return -(1.0 - a1) * x - a2 * y * std::expm1(l1r / d) +
         std::log1p(a2 * std::expm1((1.0 / d - 1.0) * l1r));
}

double asym_gumbel_log_h12(const double* th, double u, double v) {
  return asym_gumbel_log_h(th[0], th[1], th[2], -std::log(u), -std::log(v));
}

double asym_gumbel_log_h21(const double* th, double u, double v) {
  return asym_gumbel_log_h(th[0], th[2], th[1], -std::log(v), -std::log(u));
}

double base_cdf(Family tag, const double* th, double u, double v) {
  switch (tag) {
    case Family::Independence:
      return u * v;
    case Family::Gaussian:
      return numerics::bivariate_normal_cdf(numerics::normal_quantile(u),
                                            numerics::normal_quantile(v), th[0]);
    case Family::StudentT:
      return t_cdf(th, u, v);
    case Family::Frank:
      return frank_cdf(th, u, v);
    case Family::Plackett:
      return plackett_cdf(th, u, v);
    case Family::Gumbel:
      return gumbel_cdf(th, u, v);
    case Family::Clayton:
      return clayton_cdf(th, u, v);
    case Family::Joe:
      return joe_cdf(th, u, v);
    case Family::BB1:
      return bb1_cdf(th, u, v);
    case Family::BB7:
      return bb7_cdf(th, u, v);
    case Family::BB8:
      return bb8_cdf(th, u, v);
    case Family::BB10:
      return bb10_cdf(th, u, v);
    case Family::AsymmetricGumbel:
      return asym_gumbel_cdf(th, u, v);
  }
  return 0.0;
}

// log h12 for the families written in log form; NaN for the others.
double base_log_h12(Family tag, const double* th, double u, double v) {
  switch (tag) {
    case Family::Gumbel:
      return gumbel_log_h12(th, u, v);
    case Family::Clayton:
      return clayton_log_h12(th, u, v);
    case Family::Joe:
      return joe_log_h12(th, u, v);
    case Family::BB1:
      return bb1_log_h12(th, u, v);
    case Family::BB7:
      return bb7_log_h12(th, u, v);
    case Family::BB8:
      return bb8_log_h12(th, u, v);
    case Family::BB10:
      return bb10_log_h12(th, u, v);
    case Family::AsymmetricGumbel:
      return asym_gumbel_log_h12(th, u, v);
    default:
      return std::nan("");
  }
}

double base_h12(Family tag, const double* th, double u, double v) {
  switch (tag) {
    case Family::Independence:
      return u;
    case Family::Gaussian:
      return numerics::normal_cdf(gaussian_h_arg(th, u, v));
    case Family::StudentT:
      return numerics::student_t_cdf(t_h_arg(th, u, v), th[1] + 1.0);
    case Family::Frank:
      return frank_h12(th, u, v);
    case Family::Plackett:
      return plackett_h12(th, u, v);
    default:
      return std::exp(base_log_h12(tag, th, u, v));
  }
}

double base_upper12(Family tag, const double* th, double u, double v) {
  switch (tag) {
    case Family::Independence:
      return 1.0 - u;
    case Family::Gaussian:
      return numerics::normal_cdf(-gaussian_h_arg(th, u, v));
    case Family::StudentT:
      return numerics::student_t_cdf(-t_h_arg(th, u, v), th[1] + 1.0);
    case Family::Frank:
      return frank_upper12(th, u, v);
    case Family::Plackett:
      return plackett_upper12(th, u, v);
    default:
      return -std::expm1(base_log_h12(tag, th, u, v));
  }
}

// dC/du; every family except the asymmetric Gumbel is exchangeable.
double base_h21(Family tag, const double* th, double u, double v) {
  if (tag == Family::AsymmetricGumbel) return std::exp(asym_gumbel_log_h21(th, u, v));
  return base_h12(tag, th, v, u);
}

double base_upper21(Family tag, const double* th, double u, double v) {
  if (tag == Family::AsymmetricGumbel) return -std::expm1(asym_gumbel_log_h21(th, u, v));
  return base_upper12(tag, th, v, u);
}

void check_conditioning(double v, const char* fn) {
  if (!(v > 0.0 && v < 1.0)) {
    throw DomainError(std::string(fn) + ": conditioning value must lie in (0, 1)");
  }
}

ParamDomain open(double lo, double hi) { return ParamDomain{lo, hi, false, false}; }
ParamDomain closed_lo(double lo, double hi) { return ParamDomain{lo, hi, true, false}; }
ParamDomain closed_hi(double lo, double hi) { return ParamDomain{lo, hi, false, true}; }

const std::array<FamilyInfo, 13>& registry() {
  static const std::array<FamilyInfo, 13> infos = {{
      {"independence", {}, {}, {}, {}},
      {"gaussian", {"rho"}, {open(-1, 1)}, {{-0.999, 0.999}}, {0.5}},
      {"t",
       {"rho", "nu"},
       {open(-1, 1), closed_hi(1, 50)},
       {{-0.999, 0.999}, {1.01, 50.0}},
       {0.5, 8.0}},
      {"frank", {"theta"}, {open(-kInf, kInf)}, {{-35.0, 35.0}}, {3.0}},
      {"plackett", {"eta"}, {open(0, kInf)}, {{1e-3, 1e4}}, {4.0}},
      {"gumbel", {"delta"}, {closed_lo(1, kInf)}, {{1.0, 40.0}}, {1.5}},
      {"clayton", {"delta"}, {open(0, kInf)}, {{1e-4, 40.0}}, {1.0}},
      {"joe", {"delta"}, {closed_lo(1, kInf)}, {{1.0, 40.0}}, {1.5}},
      {"bb1",
       {"theta", "delta"},
       {open(0, kInf), closed_lo(1, kInf)},
       {{1e-4, 15.0}, {1.0, 15.0}},
       {0.5, 1.5}},
      {"bb7",
       {"theta", "delta"},
       {closed_lo(1, kInf), open(0, kInf)},
       {{1.0, 15.0}, {1e-4, 15.0}},
       {1.5, 0.5}},
      {"bb8",
       {"vartheta", "delta"},
       {closed_lo(1, kInf), closed_hi(0, 1)},
       {{1.0, 40.0}, {1e-4, 1.0}},
       {2.0, 0.7}},
      {"bb10",
       {"vartheta", "pi"},
       {open(0, kInf), closed_hi(0, 1)},
       {{1e-2, 40.0}, {1e-4, 1.0}},
       {2.0, 0.7}},
      {"asym-gumbel",
       {"delta", "a1", "a2"},
       {closed_lo(1, kInf), closed_hi(0, 1), closed_hi(0, 1)},
       {{1.0, 40.0}, {1e-3, 1.0}, {1e-3, 1.0}},
       {2.0, 0.8, 0.8}},
  }};
  return infos;
}

}  // namespace

const FamilyInfo& family_info(Family tag) { return registry()[static_cast<std::size_t>(tag)]; }

std::string family_name(const CopulaFamily& family) {
  std::string name(family_info(family.tag).name);
  return family.rotation == Rotation::Survival ? "survival-" + name : name;
}

CopulaFamily parse_family(std::string_view name) {
  CopulaFamily family;
  constexpr std::string_view kPrefix = "survival-";
  if (name.starts_with(kPrefix)) {
    family.rotation = Rotation::Survival;
    name.remove_prefix(kPrefix.size());
  }
  for (std::size_t i = 0; i < registry().size(); ++i) {
    if (registry()[i].name == name) {
      family.tag = static_cast<Family>(i);
      return family;
    }
  }
  throw ValidationError("unknown copula family '" + std::string(name) + "'");
}

bool in_domain(Family tag, const std::vector<double>& theta) {
  const FamilyInfo& info = family_info(tag);
  if (theta.size() != info.num_params()) return false;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (!std::isfinite(theta[i]) || !info.domain[i].contains(theta[i])) return false;
  }
  // Frank at theta = 0 is the independence copula, not a member.
  return !(tag == Family::Frank && theta[0] == 0.0);
}

CopulaSpec::CopulaSpec(CopulaFamily family, std::vector<double> theta)
    : family_(family), theta_(std::move(theta)) {
  if (!in_domain(family_.tag, theta_)) {
    std::string msg = "parameter vector outside the domain of " + family_name(family_) + ": (";
    for (std::size_t i = 0; i < theta_.size(); ++i) {
      msg += (i ? ", " : "") + std::to_string(theta_[i]);
    }
    throw DomainError(msg + ")");
  }
}

double copula_cdf(const CopulaSpec& spec, double u, double v) {
  if (u <= 0.0 || v <= 0.0) return 0.0;
  if (u >= 1.0) return std::min(v, 1.0);
  if (v >= 1.0) return u;
  const Family tag = spec.family().tag;
  const double* th = spec.theta().data();
  double c;
  if (spec.family().rotation == Rotation::Survival) {
    c = u + v - 1.0 + base_cdf(tag, th, 1.0 - u, 1.0 - v);
  } else {
    c = base_cdf(tag, th, u, v);
  }
  return std::clamp(c, std::max(0.0, u + v - 1.0), std::min(u, v));
}

double copula_cond_1g2(const CopulaSpec& spec, double u, double v) {
  check_conditioning(v, "copula_cond_1g2");
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  const Family tag = spec.family().tag;
  const double* th = spec.theta().data();
  if (spec.family().rotation == Rotation::Survival) {
    return clamp01(base_upper12(tag, th, 1.0 - u, 1.0 - v));
  }
  return clamp01(base_h12(tag, th, u, v));
}

double copula_cond_1g2_upper(const CopulaSpec& spec, double u, double v) {
  check_conditioning(v, "copula_cond_1g2_upper");
  if (u <= 0.0) return 1.0;
  if (u >= 1.0) return 0.0;
  const Family tag = spec.family().tag;
  const double* th = spec.theta().data();
  if (spec.family().rotation == Rotation::Survival) {
    return clamp01(base_h12(tag, th, 1.0 - u, 1.0 - v));
  }
  return clamp01(base_upper12(tag, th, u, v));
}

double copula_cond_2g1(const CopulaSpec& spec, double u, double v) {
  check_conditioning(u, "copula_cond_2g1");
  if (v <= 0.0) return 0.0;
  if (v >= 1.0) return 1.0;
  const Family tag = spec.family().tag;
  const double* th = spec.theta().data();
  if (spec.family().rotation == Rotation::Survival) {
    return clamp01(base_upper21(tag, th, 1.0 - u, 1.0 - v));
  }
  return clamp01(base_h21(tag, th, u, v));
}

CopulaSpec rotate_survival(const CopulaSpec& spec) {
  CopulaFamily family = spec.family();
  family.rotation = family.rotation == Rotation::None ? Rotation::Survival : Rotation::None;
  return CopulaSpec(family, spec.theta());
}

std::vector<LadderGroup> default_ladder() {
  constexpr Rotation N = Rotation::None;
  constexpr Rotation S = Rotation::Survival;
  return {
      {1, "baseline", {{Family::Gaussian, N}}},
      {2,
       "tail-asymmetric",
       {{Family::Gumbel, N},
        {Family::Gumbel, S},
        {Family::Joe, N},
        {Family::Joe, S},
        {Family::Clayton, N},
        {Family::Clayton, S},
        {Family::BB1, N},
        {Family::BB1, S},
        {Family::BB7, N},
        {Family::BB7, S}}},
      {3,
       "tail-quadrant-independent",
       {{Family::Frank, N},
        {Family::Plackett, N},
        {Family::BB8, N},
        {Family::BB8, S},
        {Family::BB10, N},
        {Family::BB10, S}}},
      {4, "tail-dependent", {{Family::StudentT, N}}},
      {5, "permutation-asymmetric", {{Family::AsymmetricGumbel, N}}},
  };
}

std::vector<CopulaFamily> default_ladder_families() {
  std::vector<CopulaFamily> out;
  for (const LadderGroup& g : default_ladder()) {
    out.insert(out.end(), g.families.begin(), g.families.end());
  }
  return out;
}

}  // namespace mixcop
