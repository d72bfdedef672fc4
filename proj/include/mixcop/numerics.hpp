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

// Special functions, quadrature, root finding and derivative-free
// minimization shared by the copula, fitting and KL modules. Everything
// here is a pure function of its arguments.

#ifndef MIXCOP_NUMERICS_HPP_
#define MIXCOP_NUMERICS_HPP_

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace mixcop::numerics {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kInvSqrt2Pi = 0.39894228040143267794;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------------------
// Normal distribution
// ---------------------------------------------------------------------------

double normal_pdf(double x);
double log_normal_pdf(double x);

// Standard normal CDF. Saturates to exactly 0/1 far in the tails.
double normal_cdf(double x);

// Inverse of normal_cdf on the open interval (0, 1); throws DomainError
// for p outside (0, 1).
double normal_quantile(double p);

// P(lo < Z <= hi) for standard normal Z, evaluated on whichever tail keeps
// the difference free of cancellation.
double normal_interval_prob(double lo, double hi);

// ---------------------------------------------------------------------------
// Beta / Student t
// ---------------------------------------------------------------------------

// Regularized incomplete beta I_x(a, b).
double regularized_incomplete_beta(double x, double a, double b);

// Inverse in x of regularized_incomplete_beta for fixed (a, b).
double inverse_incomplete_beta(double p, double a, double b);

double student_t_pdf(double x, double nu);
double log_student_t_pdf(double x, double nu);
double student_t_cdf(double x, double nu);
double student_t_quantile(double p, double nu);

// ---------------------------------------------------------------------------
// Bivariate normal and related
// ---------------------------------------------------------------------------

// P(X <= x, Y <= y) for standard bivariate normal with correlation rho.
// Throws DomainError for |rho| >= 1.
double bivariate_normal_cdf(double x, double y, double rho);

// Owen's T function T(h, a).
double owens_t(double h, double a);

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

struct QuadratureRule {
  std::vector<double> nodes;    // increasing, on [-1, 1]
  std::vector<double> weights;  // sum to 2
  int order = 0;
};

// Gauss-Legendre rule with `order` nodes; exact for polynomials of degree
// up to 2*order - 1.
QuadratureRule gauss_legendre(int order);

// Applies `rule` to f over [a, b].
double integrate(const QuadratureRule& rule, const std::function<double(double)>& f,
                 double a, double b);

// Globally adaptive 7/15-point Gauss-Kronrod integration over a finite
// interval. Stops once the estimated error is below
// max(abs_tol, rel_tol * |integral|) or `max_intervals` are in use.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol = 1e-12, double rel_tol = 1e-12,
                          int max_intervals = 2000);

// ---------------------------------------------------------------------------
// Root finding
// ---------------------------------------------------------------------------

// Brent's method with bisection fallback. Requires a sign change between
// f(lo) and f(hi) (BracketError otherwise). Terminates once
// |f(root)| <= f_tolerance or the bracket is narrower than x_tolerance.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double f_tolerance = 1e-10, double x_tolerance = 1e-12);

// ---------------------------------------------------------------------------
// Minimization
// ---------------------------------------------------------------------------

// Per-parameter box. Infinite ends are allowed; the optimizer works in an
// unconstrained coordinate obtained by a scaled logit (both ends finite),
// a log shift (one end finite) or the identity.
struct Bound {
  double lo = -kInf;
  double hi = kInf;
};

struct OptimizerReport {
  std::vector<double> argmin;
  double value = kInf;
  std::size_t evaluations = 0;
  bool converged = false;
  int restarts = 0;
};

struct MinimizeOptions {
  int multistart = 5;
  double tolerance = 1e-10;  // on objective spread, relative
  double x_tolerance = 1e-8; // on simplex diameter, transformed space
  std::size_t max_evaluations = 20000;
  double initial_step = 0.6;  // simplex edge in transformed space
};

using Objective = std::function<double(std::span<const double>)>;

// Nelder-Mead simplex descent in transformed coordinates. Start 0 is
// `start`; the remaining multistart - 1 starts are fixed perturbations of
// it. Each start is restarted from its own optimum until the restart no
// longer improves. Throws OptimizationError if the objective is
// non-finite at every start.
OptimizerReport minimize(const Objective& objective, std::span<const Bound> bounds,
                         std::span<const double> start,
                         const MinimizeOptions& options = {});

// Coordinate transforms used by minimize, exposed for tests and callers
// that build their own start points.
double to_unconstrained(double x, const Bound& b);
double from_unconstrained(double t, const Bound& b);

}  // namespace mixcop::numerics

#endif  // MIXCOP_NUMERICS_HPP_
