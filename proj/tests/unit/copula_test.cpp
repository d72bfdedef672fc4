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
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "copula_fixtures.hpp"
#include "mixcop/copula.hpp"
#include "mixcop/error.hpp"
#include "oracles.hpp"

namespace mixcop {
namespace {

std::vector<CopulaFamily> all_families() {
  std::vector<CopulaFamily> out{{Family::Independence, Rotation::None}};
  for (const CopulaFamily& f : default_ladder_families()) out.push_back(f);
  return out;
}

// Random parameters inside a moderate part of the search box.
std::vector<double> random_theta(Family tag, std::mt19937_64& gen) {
  const FamilyInfo& info = family_info(tag);
  std::vector<double> th;
  for (const numerics::Bound& b : info.search) {
    const double lo = std::max(b.lo, -20.0);
    const double hi = std::min(b.hi, 20.0);
    th.push_back(std::uniform_real_distribution<double>(lo, hi)(gen));
  }
  if (tag == Family::StudentT) th[1] = std::min(th[1], 30.0);
  if (tag == Family::Plackett) th[0] = std::exp(std::uniform_real_distribution<double>(-4.0, 5.0)(gen));
  return th;
}

std::string label(const CopulaSpec& s) {
  std::string out = family_name(s.family());
  for (double t : s.theta()) out += " " + std::to_string(t);
  return out;
}

TEST(CopulaCdf, ClosedFormValues) {
  EXPECT_NEAR(copula_cdf(CopulaSpec(Family::Independence, {}), 0.3, 0.7), 0.21, 1e-15);
  EXPECT_NEAR(copula_cdf(CopulaSpec(Family::Gaussian, {0.0}), 0.3, 0.7), 0.21, 1e-12);
  EXPECT_NEAR(copula_cdf(CopulaSpec(Family::Gumbel, {2.0}), 0.5, 0.5), std::pow(2.0, -std::sqrt(2.0)), 1e-14);
}

TEST(CopulaCdf, GaussianMatchesBivariateNormal) {
  for (double rho : {-0.7, 0.3, 0.9}) {
    for (auto [u, v] : {std::pair{0.2, 0.6}, {0.9, 0.95}, {0.01, 0.5}}) {
      const double ref = oracle::bivariate_normal_cdf(numerics::normal_quantile(u), numerics::normal_quantile(v), rho);
      EXPECT_NEAR(copula_cdf(CopulaSpec(Family::Gaussian, {rho}), u, v), ref, 1e-10);
    }
  }
}

TEST(CondCdf, ClosedFormValues) {
  for (double rho : {-0.8, 0.0, 0.4, 0.99}) {
    EXPECT_NEAR(copula_cond_1g2(CopulaSpec(Family::Gaussian, {rho}), 0.5, 0.5), 0.5, 1e-15);
  }
  for (double v : {0.1, 0.5, 0.9}) EXPECT_NEAR(copula_cond_1g2(CopulaSpec(Family::Independence, {}), 0.3, v), 0.3, 1e-15);
  EXPECT_NEAR(copula_cond_1g2(CopulaSpec(Family::Clayton, {1.0}), 0.4, 0.5), 4.0 / 12.25, 1e-14);
  EXPECT_NEAR(copula_cond_2g1(CopulaSpec(Family::Independence, {}), 0.2, 0.7), 0.7, 1e-15);
  EXPECT_NEAR(copula_cond_2g1(CopulaSpec(Family::Gaussian, {0.5}), 0.5, 0.5), 0.5, 1e-15);
}

TEST(CondCdf, AsymmetricGumbelMatchesFiniteDifference) {
  const CopulaSpec s(Family::AsymmetricGumbel, {2.0, 0.9, 0.4});
  const double e = 1e-5;
  const double fd = (copula_cdf(s, 0.5 + e, 0.5) - copula_cdf(s, 0.5 - e, 0.5)) / (2.0 * e);
  EXPECT_NEAR(copula_cond_2g1(s, 0.5, 0.5), fd, 1e-6);
  const double fd12 = (copula_cdf(s, 0.5, 0.5 + e) - copula_cdf(s, 0.5, 0.5 - e)) / (2.0 * e);
  EXPECT_NEAR(copula_cond_1g2(s, 0.5, 0.5), fd12, 1e-6);
  EXPECT_GT(std::fabs(copula_cond_1g2(s, 0.3, 0.6) - copula_cond_2g1(s, 0.6, 0.3)), 1e-3);
}

TEST(CondCdf, MatchesHighPrecisionFixtures) {
  for (const auto& p : fixtures::copula_points()) {
    const CopulaSpec s(p.family, p.theta);
    const std::string where = label(s) + " at " + std::to_string(p.u) + "," + std::to_string(p.v);
    const auto tol = [](double ref) { return 1e-12 + 1e-9 * std::fabs(ref); };
    if (!std::isnan(p.cdf)) EXPECT_NEAR(copula_cdf(s, p.u, p.v), p.cdf, tol(p.cdf)) << where;
    EXPECT_NEAR(copula_cond_1g2(s, p.u, p.v), p.h12, tol(p.h12)) << where;
    EXPECT_NEAR(copula_cond_2g1(s, p.u, p.v), p.h21, tol(p.h21)) << where;
    EXPECT_NEAR(copula_cond_1g2_upper(s, p.u, p.v), 1.0 - p.h12, tol(1.0 - p.h12)) << where;
  }
}

TEST(Survival, Rotation) {
  const CopulaSpec ind(Family::Independence, {});
  EXPECT_NEAR(copula_cdf(rotate_survival(ind), 0.3, 0.7), 0.21, 1e-15);
  const CopulaSpec g(Family::Gumbel, {2.0});
  EXPECT_NEAR(copula_cdf(rotate_survival(g), 0.5, 0.5), copula_cdf(g, 0.5, 0.5), 1e-14);
  const CopulaSpec c(Family::Clayton, {2.5});
  EXPECT_NEAR(copula_cdf(rotate_survival(c), 0.8, 0.9), 0.8 + 0.9 - 1.0 + copula_cdf(c, 0.2, 0.1), 1e-14);
  EXPECT_EQ(rotate_survival(g).family().rotation, Rotation::Survival);
  EXPECT_EQ(rotate_survival(rotate_survival(g)).family().rotation, Rotation::None);
}

TEST(Survival, DoubleRotationIsIdentity) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> unit(0.01, 0.99);
  for (const CopulaFamily& f : all_families()) {
    const CopulaSpec s(f, random_theta(f.tag, gen));
    const CopulaSpec back = rotate_survival(rotate_survival(s));
    for (int i = 0; i < 20; ++i) {
      const double u = unit(gen);
      const double v = unit(gen);
      EXPECT_NEAR(copula_cdf(back, u, v), copula_cdf(s, u, v), 1e-13) << label(s);
      const CopulaSpec base(CopulaFamily{f.tag, Rotation::None}, s.theta());
      if (f.rotation == Rotation::Survival) {
        EXPECT_NEAR(copula_cond_1g2(s, u, v), 1.0 - copula_cond_1g2(base, 1.0 - u, 1.0 - v), 1e-12) << label(s);
      }
    }
  }
}

class FamilyProperties : public testing::TestWithParam<CopulaFamily> {};

TEST_P(FamilyProperties, UniformMarginsAndFrechetBounds) {
  std::mt19937_64 gen(101);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const CopulaSpec s(GetParam(), random_theta(GetParam().tag, gen));
    const double u = unit(gen);
    const double v = unit(gen);
    EXPECT_NEAR(copula_cdf(s, u, 1.0), u, 1e-9) << label(s);
    EXPECT_NEAR(copula_cdf(s, 1.0, v), v, 1e-9) << label(s);
    EXPECT_NEAR(copula_cdf(s, u, 0.0), 0.0, 1e-15) << label(s);
    EXPECT_NEAR(copula_cdf(s, 0.0, v), 0.0, 1e-15) << label(s);
    const double c = copula_cdf(s, u, v);
    EXPECT_GE(c, std::max(u + v - 1.0, 0.0) - 1e-10) << label(s) << " " << u << " " << v;
    EXPECT_LE(c, std::min(u, v) + 1e-10) << label(s) << " " << u << " " << v;
  }
}

TEST_P(FamilyProperties, TwoIncreasing) {
  std::mt19937_64 gen(202);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const CopulaSpec s(GetParam(), random_theta(GetParam().tag, gen));
    double u1 = unit(gen), u2 = unit(gen), v1 = unit(gen), v2 = unit(gen);
    if (u1 > u2) std::swap(u1, u2);
    if (v1 > v2) std::swap(v1, v2);
    const double vol = copula_cdf(s, u2, v2) - copula_cdf(s, u1, v2) - copula_cdf(s, u2, v1) + copula_cdf(s, u1, v1);
    EXPECT_GE(vol, -1e-10) << label(s);
  }
}

TEST_P(FamilyProperties, ConditionalIsMonotoneDistribution) {
  std::mt19937_64 gen(303);
  std::uniform_real_distribution<double> unit(1e-6, 1.0 - 1e-6);
  for (int i = 0; i < 200; ++i) {
    const CopulaSpec s(GetParam(), random_theta(GetParam().tag, gen));
    const double v = unit(gen);
    EXPECT_NEAR(copula_cond_1g2(s, 0.0, v), 0.0, 1e-15) << label(s);
    EXPECT_NEAR(copula_cond_1g2(s, 1.0, v), 1.0, 1e-15) << label(s);
    double prev = 0.0;
    for (double u = 0.05; u < 1.0; u += 0.05) {
      const double h = copula_cond_1g2(s, u, v);
      EXPECT_GE(h, prev - 1e-12) << label(s);
      EXPECT_NEAR(h + copula_cond_1g2_upper(s, u, v), 1.0, 1e-12) << label(s);
      EXPECT_GE(copula_cond_1g2_upper(s, u, v), 0.0);
      prev = h;
    }
  }
}

TEST_P(FamilyProperties, ConditionalIntegratesToCdf) {
  std::mt19937_64 gen(404);
  std::uniform_real_distribution<double> unit(0.02, 0.98);
  for (int i = 0; i < 15; ++i) {
    const CopulaSpec s(GetParam(), random_theta(GetParam().tag, gen));
    const double u = unit(gen);
    const double v = unit(gen);
    const double q = oracle::integrate([&](double w) { return copula_cond_1g2(s, u, w); }, 0.0, v, 1e-10);
    EXPECT_NEAR(q, copula_cdf(s, u, v), 1e-6) << label(s) << " " << u << " " << v;
    const double q21 = oracle::integrate([&](double w) { return copula_cond_2g1(s, w, v); }, 0.0, u, 1e-10);
    EXPECT_NEAR(q21, copula_cdf(s, u, v), 1e-6) << label(s) << " " << u << " " << v;
  }
}

INSTANTIATE_TEST_SUITE_P(AllFamilies, FamilyProperties, testing::ValuesIn(all_families()),
                         [](const testing::TestParamInfo<CopulaFamily>& info) {
                           std::string name = family_name(info.param);
                           std::replace(name.begin(), name.end(), '-', '_');
                           return name;
                         });

TEST(Limits, ApproachIndependence) {
  const CopulaSpec pi(Family::Independence, {});
  std::vector<CopulaSpec> near{CopulaSpec(Family::Frank, {1e-3}), CopulaSpec(Family::Plackett, {1.0 + 1e-3}),
                               CopulaSpec(Family::Gaussian, {1e-3}), CopulaSpec(Family::Clayton, {1e-3})};
  for (const CopulaSpec& s : near) {
    for (double u : {0.1, 0.5, 0.8}) {
      for (double v : {0.2, 0.6, 0.95}) {
        EXPECT_NEAR(copula_cdf(s, u, v), copula_cdf(pi, u, v), 1e-3) << label(s);
        EXPECT_NEAR(copula_cond_1g2(s, u, v), u, 1e-3) << label(s);
      }
    }
  }
}

TEST(Limits, StudentTFarTail) {
  // For small nu the t quantile of a tiny v overflows; the conditional
  // tends to T_{nu+1}(rho sqrt((nu+1)/(1-rho^2))) as v -> 0.
  const double rho = 0.27, nu = 1.3;
  const CopulaSpec t(Family::StudentT, {rho, nu});
  const double limit = oracle::student_t_cdf(rho * std::sqrt((nu + 1.0) / (1.0 - rho * rho)), nu + 1.0);
  for (double u : {0.2, 0.5, 0.9}) {
    for (double v : {1e-250, 1e-300}) {
      const double h = copula_cond_1g2(t, u, v);
      EXPECT_TRUE(std::isfinite(h));
      EXPECT_NEAR(h, limit, 1e-6) << u << " " << v;
      EXPECT_NEAR(copula_cond_1g2_upper(t, u, v), 1.0 - limit, 1e-6);
    }
  }
}

TEST(Limits, BoundaryCasesReduce) {
  // Gumbel at delta = 1 and BB1 at delta = 1 (Clayton) are exact reductions.
  for (double u : {0.2, 0.7}) {
    for (double v : {0.3, 0.9}) {
      EXPECT_NEAR(copula_cdf(CopulaSpec(Family::Gumbel, {1.0}), u, v), u * v, 1e-15);
      EXPECT_NEAR(copula_cdf(CopulaSpec(Family::BB1, {2.0, 1.0}), u, v), copula_cdf(CopulaSpec(Family::Clayton, {2.0}), u, v), 1e-14);
      EXPECT_NEAR(copula_cdf(CopulaSpec(Family::BB7, {1.0, 2.0}), u, v), copula_cdf(CopulaSpec(Family::Clayton, {2.0}), u, v), 1e-14);
      EXPECT_NEAR(copula_cdf(CopulaSpec(Family::BB8, {3.0, 1.0}), u, v), copula_cdf(CopulaSpec(Family::Joe, {3.0}), u, v), 1e-14);
      EXPECT_NEAR(copula_cdf(CopulaSpec(Family::AsymmetricGumbel, {3.0, 1.0, 1.0}), u, v),
                  copula_cdf(CopulaSpec(Family::Gumbel, {3.0}), u, v), 1e-14);
    }
  }
}

TEST(Domain, RejectsParametersOutside) {
  EXPECT_THROW(CopulaSpec(Family::Gaussian, {1.0}), DomainError);
  EXPECT_THROW(CopulaSpec(Family::Gaussian, {-1.2}), DomainError);
  EXPECT_THROW(CopulaSpec(Family::Gaussian, {}), DomainError);
  EXPECT_THROW(CopulaSpec(Family::StudentT, {0.5, 1.0}), DomainError);
  EXPECT_THROW(CopulaSpec(Family::StudentT, {0.5, 51.0}), DomainError);
  EXPECT_THROW(CopulaSpec(Family::Gumbel, {0.9}), DomainError);
  EXPECT_THROW(CopulaSpec(Family::Clayton, {0.0}), DomainError);
  EXPECT_THROW(CopulaSpec(Family::Plackett, {0.0}), DomainError);
  EXPECT_THROW(CopulaSpec(Family::Joe, {0.5}), DomainError);
  EXPECT_THROW(CopulaSpec(Family::BB1, {0.0, 1.5}), DomainError);
  EXPECT_THROW(CopulaSpec(Family::BB1, {1.0, 0.5}), DomainError);
  EXPECT_THROW(CopulaSpec(Family::BB7, {0.5, 1.0}), DomainError);
  EXPECT_THROW(CopulaSpec(Family::BB8, {2.0, 1.5}), DomainError);
  EXPECT_THROW(CopulaSpec(Family::BB10, {2.0, 0.0}), DomainError);
  EXPECT_THROW(CopulaSpec(Family::BB10, {0.0, 0.5}), DomainError);
  EXPECT_THROW(CopulaSpec(Family::AsymmetricGumbel, {2.0, 1.2, 0.5}), DomainError);
  EXPECT_NO_THROW(CopulaSpec(Family::BB10, {0.5, 0.5}));
  EXPECT_NO_THROW(CopulaSpec(Family::StudentT, {0.5, 50.0}));
}

TEST(Domain, BoundaryConditioningValue) {
  const CopulaSpec s(Family::Gumbel, {2.0});
  EXPECT_THROW(copula_cond_1g2(s, 0.5, 0.0), DomainError);
  EXPECT_THROW(copula_cond_1g2(s, 0.5, 1.0), DomainError);
  EXPECT_THROW(copula_cond_2g1(s, 1.0, 0.5), DomainError);
}

TEST(Registry, NamesRoundTrip) {
  for (const CopulaFamily& f : all_families()) EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_EQ(family_name(CopulaFamily{Family::BB1, Rotation::Survival}), "survival-bb1");
  EXPECT_THROW(parse_family("bb99"), ValidationError);
  EXPECT_EQ(family_info(Family::AsymmetricGumbel).num_params(), 3u);
  EXPECT_EQ(family_info(Family::StudentT).num_params(), 2u);
  EXPECT_EQ(family_info(Family::Independence).num_params(), 0u);
}

TEST(Registry, DefaultLadder) {
  const auto ladder = default_ladder();
  ASSERT_EQ(ladder.size(), 5u);
  EXPECT_EQ(ladder[0].families, (std::vector<CopulaFamily>{{Family::Gaussian, Rotation::None}}));
  const auto s = Rotation::Survival;
  const auto n = Rotation::None;
  EXPECT_EQ(ladder[1].families,
            (std::vector<CopulaFamily>{{Family::Gumbel, n}, {Family::Gumbel, s}, {Family::Joe, n}, {Family::Joe, s},
                                       {Family::Clayton, n}, {Family::Clayton, s}, {Family::BB1, n}, {Family::BB1, s},
                                       {Family::BB7, n}, {Family::BB7, s}}));
  EXPECT_EQ(ladder[2].families,
            (std::vector<CopulaFamily>{{Family::Frank, n}, {Family::Plackett, n}, {Family::BB8, n}, {Family::BB8, s},
                                       {Family::BB10, n}, {Family::BB10, s}}));
  EXPECT_EQ(ladder[3].families, (std::vector<CopulaFamily>{{Family::StudentT, n}}));
  EXPECT_EQ(ladder[4].families, (std::vector<CopulaFamily>{{Family::AsymmetricGumbel, n}}));
  for (int i = 0; i < 5; ++i) EXPECT_EQ(ladder[i].step, i + 1);
  EXPECT_EQ(default_ladder_families().size(), 19u);
  EXPECT_EQ(default_ladder_families().front(), (CopulaFamily{Family::Gaussian, n}));
}

}  // namespace
}  // namespace mixcop
