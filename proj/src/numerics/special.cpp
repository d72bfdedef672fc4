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
#include <string>

#include "mixcop/error.hpp"
#include "mixcop/numerics.hpp"

namespace mixcop::numerics {
namespace {

constexpr double kSqrt2 = 1.41421356237309504880;
constexpr double kSqrt2Pi = 2.50662827463100050242;
constexpr double kTwoPi = 6.28318530717958647692;

// Rational approximation of the lower-tail normal quantile (relative error
// about 1e-9), refined below by a Halley step.
double acklam_lower(double p) {
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

double lower_quantile(double p) {
  double x = acklam_lower(p);
  const double e = 0.5 * std::erfc(-x / kSqrt2) - p;
  const double u = e * kSqrt2Pi * std::exp(0.5 * x * x);
  x -= u / (1.0 + 0.5 * x * u);
  return x;
}

// Continued fraction for the incomplete beta (modified Lentz).
double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIter = 20000;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  return h;
}

double log_beta_prefactor(double x, double a, double b) {
  return std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) +
         b * std::log1p(-x);
}

// P(X > h, Y > k) for the standard bivariate normal.
double bivariate_upper(double h, double k, double r) {
  static const QuadratureRule rule = gauss_legendre(30);
  double hk = h * k;
  double bvn = 0.0;
  if (std::fabs(r) < 0.925) {
    const double hs = 0.5 * (h * h + k * k);
    const double asr = std::asin(r);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double sn = std::sin(0.5 * asr * (rule.nodes[i] + 1.0));
      bvn += rule.weights[i] * std::exp((sn * hk - hs) / (1.0 - sn * sn));
    }
    return bvn * asr / (2.0 * kTwoPi) + normal_cdf(-h) * normal_cdf(-k);
  }
  if (r < 0.0) {
    k = -k;
    hk = -hk;
  }
  const double as = (1.0 - r) * (1.0 + r);
  const double a = std::sqrt(as);
  const double bs = (h - k) * (h - k);
  const double c = (4.0 - hk) / 8.0;
  const double d = (12.0 - hk) / 16.0;
  bvn = a * std::exp(-0.5 * (bs / as + hk)) *
        (1.0 - c * (bs - as) * (1.0 - d * bs / 5.0) / 3.0 + c * d * as * as / 5.0);
  if (hk > -160.0) {
    const double bb = std::sqrt(bs);
    bvn -= std::exp(-0.5 * hk) * kSqrt2Pi * normal_cdf(-bb / a) * bb *
           (1.0 - c * bs * (1.0 - d * bs / 5.0) / 3.0);
  }
  const double half = 0.5 * a;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = half * (rule.nodes[i] + 1.0);
    const double xs = t * t;
    const double rs = std::sqrt(1.0 - xs);
    bvn += half * rule.weights[i] *
           (std::exp(-0.5 * bs / xs - hk / (1.0 + rs)) / rs -
            std::exp(-0.5 * (bs / xs + hk)) * (1.0 + c * xs * (1.0 + d * xs)));
  }
  bvn = -bvn / kTwoPi;
  if (r > 0.0) return bvn + normal_cdf(-std::max(h, k));
  return -bvn + std::max(0.0, normal_cdf(-h) - normal_cdf(-k));
}

}  // namespace

double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double log_normal_pdf(double x) { return -0.5 * x * x - 0.91893853320467274178; }

double normal_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("normal_quantile: p must lie in (0, 1), got " + std::to_string(p));
  }
  if (p > 0.5) return -lower_quantile(1.0 - p);
  return lower_quantile(p);
}

double normal_interval_prob(double lo, double hi) {
  if (!(hi > lo)) return 0.0;
  if (lo > 0.0) return normal_cdf(-lo) - normal_cdf(-hi);
  return normal_cdf(hi) - normal_cdf(lo);
}

double regularized_incomplete_beta(double x, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw DomainError("regularized_incomplete_beta: shape parameters must be positive");
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("regularized_incomplete_beta: x must lie in [0, 1]");
  }
  if (x == 0.0 || x == 1.0) return x;
  const double bt = std::exp(log_beta_prefactor(x, a, b));
  if (x < (a + 1.0) / (a + b + 2.0)) return bt * beta_continued_fraction(a, b, x) / a;
  return 1.0 - bt * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double inverse_incomplete_beta(double p, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw DomainError("inverse_incomplete_beta: shape parameters must be positive");
  }
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("inverse_incomplete_beta: p outside [0, 1]");
  if (p == 0.0) return 0.0;
  if (p == 1.0) return 1.0;
  const double a1 = a - 1.0;
  const double b1 = b - 1.0;
  double x;
  if (a >= 1.0 && b >= 1.0) {
    const double pp = p < 0.5 ? p : 1.0 - p;
    const double t = std::sqrt(-2.0 * std::log(pp));
    x = (2.30753 + t * 0.27061) / (1.0 + t * (0.99229 + t * 0.04481)) - t;
    if (p < 0.5) x = -x;
    const double al = (x * x - 3.0) / 6.0;
    const double h = 2.0 / (1.0 / (2.0 * a - 1.0) + 1.0 / (2.0 * b - 1.0));
    const double w = (x * std::sqrt(al + h) / h) -
                     (1.0 / (2.0 * b - 1.0) - 1.0 / (2.0 * a - 1.0)) * (al + 5.0 / 6.0 - 2.0 / (3.0 * h));
    x = a / (a + b * std::exp(2.0 * w));
  } else {
    const double lna = std::log(a / (a + b));
    const double lnb = std::log(b / (a + b));
    const double t = std::exp(a * lna) / a;
    const double u = std::exp(b * lnb) / b;
    const double w = t + u;
    if (p < t / w) {
      x = std::pow(a * w * p, 1.0 / a);
    } else {
      x = 1.0 - std::pow(b * w * (1.0 - p), 1.0 / b);
    }
  }
  const double afac = -std::lgamma(a) - std::lgamma(b) + std::lgamma(a + b);
  for (int j = 0; j < 60; ++j) {
    if (x <= 0.0 || x >= 1.0) break;
    const double err = regularized_incomplete_beta(x, a, b) - p;
    double t = std::exp(a1 * std::log(x) + b1 * std::log1p(-x) + afac);
    const double u = err / t;
    t = u / (1.0 - 0.5 * std::min(1.0, u * (a1 / x - b1 / (1.0 - x))));
    x -= t;
    if (x <= 0.0) x = 0.5 * (x + t);
    if (x >= 1.0) x = 0.5 * (x + t + 1.0);
    if (std::fabs(t) < 1e-15 * x && j > 0) break;
  }
  return std::clamp(x, 0.0, 1.0);
}

double log_student_t_pdf(double x, double nu) {
  if (!(nu > 0.0)) throw DomainError("student_t: degrees of freedom must be positive");
  return std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) - 0.5 * std::log(nu * kPi) -
         0.5 * (nu + 1.0) * std::log1p(x * x / nu);
}

double student_t_pdf(double x, double nu) { return std::exp(log_student_t_pdf(x, nu)); }

double student_t_cdf(double x, double nu) {
  if (!(nu > 0.0)) throw DomainError("student_t_cdf: degrees of freedom must be positive");
  if (x == 0.0) return 0.5;
  if (std::isinf(x)) return x > 0.0 ? 1.0 : 0.0;
  const double x2 = x * x;
  double tail;
  if (x2 < nu) {
    // Central region: the complementary form avoids I_t with t close to 1.
    tail = 0.5 * (1.0 - regularized_incomplete_beta(x2 / (nu + x2), 0.5, 0.5 * nu));
  } else {
    tail = 0.5 * regularized_incomplete_beta(nu / (nu + x2), 0.5 * nu, 0.5);
  }
  return x > 0.0 ? 1.0 - tail : tail;
}

double student_t_quantile(double p, double nu) {
  if (!(nu > 0.0)) throw DomainError("student_t_quantile: degrees of freedom must be positive");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("student_t_quantile: p must lie in (0, 1)");
  if (p == 0.5) return 0.0;
  if (nu == 1.0) return std::tan(kPi * (p - 0.5));
  if (nu == 2.0) return (2.0 * p - 1.0) / std::sqrt(2.0 * p * (1.0 - p));
  const double q = p < 0.5 ? p : 1.0 - p;
  const double two_q = 2.0 * q;
  double x;
  if (two_q < 0.5) {
    const double z = inverse_incomplete_beta(two_q, 0.5 * nu, 0.5);
    x = std::sqrt(nu * (1.0 - z) / z);
  } else {
    const double w = inverse_incomplete_beta(1.0 - two_q, 0.5, 0.5 * nu);
    x = std::sqrt(nu * w / (1.0 - w));
  }
  // Newton polish on the lower tail.
  double xl = -x;
  for (int it = 0; it < 2; ++it) {
    const double f = student_t_cdf(xl, nu) - q;
    const double d = student_t_pdf(xl, nu);
    if (!(d > 0.0) || !std::isfinite(f)) break;
    const double step = f / d;
    if (!std::isfinite(step) || std::fabs(step) > 0.5 * std::fabs(xl) + 1e-3) break;
    xl -= step;
  }
  return p < 0.5 ? xl : -xl;
}

double bivariate_normal_cdf(double x, double y, double rho) {
  if (!(std::fabs(rho) < 1.0)) {
    throw DomainError("bivariate_normal_cdf: |rho| must be < 1");
  }
  if (x == -kInf || y == -kInf) return 0.0;
  if (x == kInf) return normal_cdf(y);
  if (y == kInf) return normal_cdf(x);
  const double value = bivariate_upper(-x, -y, rho);
  return std::clamp(value, std::max(0.0, normal_cdf(x) + normal_cdf(y) - 1.0),
                    std::min(normal_cdf(x), normal_cdf(y)));
}

double owens_t(double h, double a) {
  if (a == 0.0) return 0.0;
  if (a < 0.0) return -owens_t(h, -a);
  const double hh = 0.5 * h * h;
  const auto integrand = [hh](double t) {
    const double s = 1.0 + t * t;
    return std::exp(-hh * s) / s;
  };
  return integrate_adaptive(integrand, 0.0, a, 1e-16, 1e-14) / kTwoPi;
}

}  // namespace mixcop::numerics
