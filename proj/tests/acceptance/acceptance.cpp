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


// Acceptance run: one PASS/FAIL line per criterion with supporting
// detail. Exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "commands.hpp"
#include "loglik_fixture.hpp"
#include "mixcop/copula.hpp"
#include "mixcop/diagnose.hpp"
#include "mixcop/evaluator.hpp"
#include "mixcop/fit.hpp"
#include "mixcop/klatlas.hpp"
#include "mixcop/latent.hpp"
#include "mixcop/numerics.hpp"
#include "mixcop/random.hpp"
#include "mixcop/sample.hpp"
#include "oracles.hpp"
#include "stats.hpp"

namespace {

using namespace mixcop;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

class Check {
 public:
  void check(bool ok, const std::string& what) {
    pass_ = pass_ && ok;
    detail(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void detail(const std::string& line) { lines_.push_back(line); }
  bool pass() const { return pass_; }
  const std::vector<std::string>& lines() const { return lines_; }

 private:
  bool pass_ = true;
  std::vector<std::string> lines_;
};

std::string f(const char* format, ...) __attribute__((format(printf, 1, 2)));
std::string f(const char* format, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, format);
  std::vsnprintf(buf, sizeof buf, format, ap);
  va_end(ap);
  return buf;
}

MixedPairSample simulate(const char* id, std::size_t n, std::uint64_t seed) {
  return orient_positive(sample_from_model(find_row(id).model, n, seed)).sample;
}

const CopulaFamily kGaussian{Family::Gaussian, Rotation::None};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// 1. Exact-match models.
void exact_match(Check& c) {
  for (const char* id : {"D1", "H1"}) {
    const auto t0 = Clock::now();
    const ProbabilityModel& m = find_row(id).model;
    const KlResult r = kl_minimize(kGaussian, m);
    const double secs = seconds_since(t0);
    // The expected sign follows the orientation of the model.
    const double want = KlIntegrator(m).orientation() > 0 ? kInvSqrt2 : -kInvSqrt2;
    c.check(r.kl <= 1e-5 && std::fabs(r.theta_hat[0] - want) <= 0.01 && secs < 10.0,
            f("%s: kl %.2e (<= 1e-5), rho %.5f (target %.5f +- 0.01), %.1f s (< 10 s)", id, r.kl, r.theta_hat[0],
              want, secs));
  }
}

double best_t(const char* id) {
  return kl_minimize({Family::StudentT, Rotation::None}, find_row(id).model).kl;
}

// 2. Tight table rows.
void tight_rows(Check& c) {
  const auto t0 = Clock::now();
  const double a1 = kl_minimize(kGaussian, find_row("A1").model).kl;
  c.check(std::fabs(a1 - 0.0001) <= 0.0005, f("A1 Gaussian kl %.5f (0.0001 +- 0.0005)", a1));
  const double e1 = kl_minimize(kGaussian, find_row("E1").model).kl;
  c.check(std::fabs(e1 - 0.0016) <= 0.001, f("E1 Gaussian kl %.5f (0.0016 +- 0.001)", e1));
  const double d2 = best_t("D2");
  c.check(d2 <= 1e-4, f("D2 best t kl %.2e (<= 1e-4)", d2));
  const double h2 = best_t("H2");
  c.check(h2 <= 1e-4, f("H2 best t kl %.2e (<= 1e-4, logistic reading)", h2));
  const double secs = seconds_since(t0);
  c.check(secs < 120.0, f("runtime %.1f s (< 120 s)", secs));
}

// 3 and 4 share one sweep over both tables.
struct Sweep {
  std::map<std::string, RowReport> rows;
  double seconds = 0.0;
};

const Sweep& sweep() {
  static const Sweep s = [] {
    Sweep out;
    const auto t0 = Clock::now();
    for (RowReport& r : reproduce_tables(TableSelection::All)) out.rows[r.row.id] = std::move(r);
    out.seconds = seconds_since(t0);
    return out;
  }();
  return s;
}

void named_rows(Check& c) {
  const Sweep& s = sweep();
  const std::vector<std::string> ids = {"A2", "A3", "A4", "B1", "B2", "B3", "B4", "C1", "C2", "C3", "C4",
                                        "E2", "E3", "E4", "F1", "F2", "F3", "F4", "G1", "G2"};
  for (const std::string& id : ids) {
    const RowReport& r = s.rows.at(id);
    if (!r.error.empty()) {
      c.check(false, id + ": " + r.error);
      continue;
    }
    const cli::KlRowCheck k = cli::check_kl_row(r);
    const KlResult& best = r.ladder.results.front();
    const double tol = std::max(0.3 * r.row.reference_kl, 0.003);
    c.check(k.in_tolerance && k.near_minimum,
            f("%s %-18s kl %.5f vs %.4g (+- %.4f)%s; ladder min %.5f (%s)%s", id.c_str(),
              r.row.reference_family.c_str(), k.named_kl, r.row.reference_kl, tol, k.in_tolerance ? "" : " OUTSIDE",
              k.best_kl, family_name(best.family).c_str(), k.near_minimum ? "" : ", gap > 0.003"));
  }
  c.check(s.seconds < 900.0, f("full sweep %.1f s (< 900 s)", s.seconds));
}

void poor_rows(Check& c) {
  const Sweep& s = sweep();
  for (const char* id : {"E3", "E4", "G1", "G2", "G3", "G4", "F2"}) {
    const RowReport& r = s.rows.at(id);
    const KlResult& best = r.ladder.results.front();
    c.check(r.error.empty() && best.kl >= 0.01,
            f("%s ladder min %.5f (%s), needs >= 0.01", id, best.kl, family_name(best.family).c_str()));
  }
}

// 5. Latent scores on simulated mixtures.
void latent_scores(Check& c) {
  for (const char* id : {"E1", "E2", "E3", "E4"}) {
    std::size_t violations = 0, misaligned = 0;
    int uniform = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const MixedPairSample s = simulate(id, 1000, seed);
      const PseudoObs p = pseudo_observations(s);
      const LatentScoreSet ls = gen_latent_scores(p, polyserial_mle(p), seed);
      for (std::size_t i = 0; i < s.n(); ++i) {
        if (!(ls.u_z[i] > p.fx[s.x[i] - 1] && ls.u_z[i] <= p.fx[s.x[i]])) ++violations;
      }
      for (int j = 1; j <= s.k; ++j) {
        std::vector<double> uz, uw;
        for (std::size_t i = 0; i < s.n(); ++i) {
          if (s.x[i] == j) {
            uz.push_back(ls.u_z[i]);
            uw.push_back(ls.u_w[i]);
          }
        }
        if (teststats::ordinal_ranks(uz) != teststats::ordinal_ranks(uw)) ++misaligned;
      }
      uniform += teststats::ks_uniform_pvalue(ls.u_z) > 0.01;
    }
    c.check(violations == 0 && misaligned == 0 && uniform >= 18,
            f("%s: bin violations %zu, misaligned categories %zu, KS p > 0.01 in %d/20 seeds (>= 18)", id,
              violations, misaligned, uniform));
  }
}

double sup_to_empirical(const EmpiricalBetaCopula& b) {
  double sup = 0.0;
  for (int i = 0; i <= 40; ++i) {
    for (int j = 0; j <= 40; ++j) {
      sup = std::max(sup, std::fabs(beta_copula_cdf(b, i / 40.0, j / 40.0) - empirical_copula_cdf(b, i / 40.0, j / 40.0)));
    }
  }
  return sup;
}

// 6. Empirical beta copula.
void beta_copula(Check& c) {
  const EmpiricalBetaCopula small = fit_beta_copula(pseudo_observations(simulate("E1", 200, 6)), 6);
  const EmpiricalBetaCopula large = fit_beta_copula(pseudo_observations(simulate("E1", 2000, 6)), 6);
  double margin = 0.0, increment = 0.0;
  const int g = 40;
  for (const EmpiricalBetaCopula* b : {&small, &large}) {
    for (int i = 0; i <= g; ++i) {
      const double a = static_cast<double>(i) / g;
      margin = std::max({margin, std::fabs(beta_copula_cdf(*b, a, 1.0) - a), std::fabs(beta_copula_cdf(*b, 1.0, a) - a),
                         std::fabs(beta_copula_cdf(*b, a, 0.0)), std::fabs(beta_copula_cdf(*b, 0.0, a))});
    }
    for (int i = 0; i < g; ++i) {
      for (int j = 0; j < g; ++j) {
        const double a0 = static_cast<double>(i) / g, a1 = (i + 1.0) / g;
        const double c0 = static_cast<double>(j) / g, c1 = (j + 1.0) / g;
        const double vol = beta_copula_cdf(*b, a1, c1) - beta_copula_cdf(*b, a0, c1) - beta_copula_cdf(*b, a1, c0) +
                           beta_copula_cdf(*b, a0, c0);
        increment = std::min(increment, vol);
      }
    }
  }
  c.check(margin <= 1e-9, f("margins: max error %.2e (<= 1e-9)", margin));
  c.check(increment >= -1e-10, f("2-increasing: min rectangle volume %.2e (>= -1e-10)", increment));
  const double s200 = sup_to_empirical(small), s2000 = sup_to_empirical(large);
  c.check(s200 <= 0.2 && s2000 < s200, f("sup distance to empirical copula: n=200 %.4f (<= 0.2), n=2000 %.4f", s200, s2000));
}

double worst_panel(const std::vector<QQPanel>& panels) {
  double w = 0.0;
  for (const QQPanel& p : panels) w = std::max(w, p.discrepancy);
  return w;
}

// 7. Q-Q contrast.
void qq_contrast(Check& c) {
  for (const char* id : {"E3", "E4"}) {
    int large = 0;
    double lo = 1.0, hi = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const MixedPairSample s = simulate(id, 1000, seed);
      const PseudoObs p = pseudo_observations(s);
      const auto ranked = select_model(default_ladder_families(), p, mixcop::Criterion::AIC);
      const double w = worst_panel(qq_panels(ParametricEvaluator(ranked.front().spec), s, p));
      large += w > 0.1;
      lo = std::min(lo, w);
      hi = std::max(hi, w);
    }
    c.check(large >= 16, f("%s best parametric: worst panel > 0.1 in %d/20 seeds (>= 16); range %.3f-%.3f", id,
                           large, lo, hi));
  }
  for (const char* id : {"E1", "E2", "E3", "E4"}) {
    int close = 0;
    double hi = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const MixedPairSample s = simulate(id, 1000, seed);
      const PseudoObs p = pseudo_observations(s);
      const double w = worst_panel(qq_panels(fit_beta_copula(p, seed), s, p));
      close += w <= 0.06;
      hi = std::max(hi, w);
    }
    c.check(close >= 16, f("%s empirical beta: every panel <= 0.06 in %d/20 seeds (>= 16); worst %.3f", id, close, hi));
  }
}

// 8. Auto MPG.
void auto_mpg(Check& c) {
  const cli::AutoMpg data = cli::load_auto_mpg(cli::default_auto_mpg_path());
  const std::map<std::string, double> table3 = {{"cylinders", -0.781}, {"horsepower", -0.771}, {"weight", -0.832},
                                                {"acceleration", 0.420}, {"model_year", 0.579}, {"origin", 0.563}};
  for (const auto& r : cli::auto_correlations(data)) {
    const double want = table3.at(r.variable);
    c.check(std::fabs(r.pearson - want) <= 0.005,
            f("rho(%s, mpg) %.4f vs %.3f +- 0.005 (rank-based %.3f)", r.variable.c_str(), r.pearson, want, r.spearman));
  }
  struct Row {
    const char* label;
    std::size_t n;
    double min, q1, median, mean, q3, max, sd;
  };
  // "None" prints n = 198; the subsets sum to 398.
  const std::vector<Row> table4 = {{"none", 398, 1613, 2224, 2804, 2970, 3608, 5140, 847},
                                   {"cylinders = 4", 208, 1613, 2049, 2240, 2310, 2567, 3270, 345},
                                   {"cylinders = 6", 87, 2472, 2938, 3193, 3195, 3431, 3907, 332},
                                   {"cylinders = 8", 103, 3086, 3799, 4140, 4115, 4404, 5140, 449},
                                   {"origin = 1", 249, 1800, 2720, 3365, 3362, 4054, 5140, 795},
                                   {"origin = 2", 70, 1825, 2067, 2240, 2423, 2770, 3820, 490},
                                   {"origin = 3", 79, 1613, 1985, 2155, 2221, 2412, 2930, 320}};
  const auto summaries = cli::weight_summaries(data);
  for (const Row& want : table4) {
    const auto it = std::find_if(summaries.begin(), summaries.end(),
                                 [&](const cli::SubsetSummary& s) { return s.label == want.label; });
    if (it == summaries.end()) {
      c.check(false, std::string("missing subset ") + want.label);
      continue;
    }
    const auto same = [](double got, double printed) { return std::fabs(got - printed) <= 0.5; };
    const bool ok = it->n == want.n && same(it->min, want.min) && same(it->q1, want.q1) &&
                    same(it->median, want.median) && same(it->mean, want.mean) && same(it->q3, want.q3) &&
                    same(it->max, want.max) && same(it->sd, want.sd);
    c.check(ok, f("weight | %s: n %zu mean %.1f sd %.1f q1 %.1f median %.1f q3 %.1f", want.label, it->n, it->mean,
                  it->sd, it->q1, it->median, it->q3));
  }
  const auto cyl = cli::fit_sample(cli::weight_cylinders_sample(data), default_ladder_families(), mixcop::Criterion::AIC);
  const FitResult& top = cyl.ranked.front();
  c.check(top.spec.family() == kGaussian && std::fabs(top.spec.theta()[0] - 0.97) <= 0.01,
          f("weight/cylinders top %s, rho %.4f (Gaussian, 0.97 +- 0.01)", family_name(top.spec.family()).c_str(),
            top.spec.theta()[0]));
  const auto org = cli::fit_sample(cli::weight_origin_sample(data), default_ladder_families(), mixcop::Criterion::AIC);
  const FitResult* best = &org.ranked.front();
  for (const FitResult& r : org.ranked) {
    if (r.loglik > best->loglik) best = &r;
  }
  const Family tag = best->spec.family().tag;
  const bool lower_tail = best->spec.family().rotation == Rotation::None &&
                          (tag == Family::Clayton || tag == Family::BB1 || tag == Family::BB7);
  c.check(lower_tail, f("weight/origin top by loglik %s (%.4f), wants Clayton, BB1 or BB7",
                        family_name(best->spec.family()).c_str(), best->loglik));
}

// 9. Oracle equivalence.
void oracles(Check& c) {
  const PseudoObs fx = pseudo_observations(make_sample(fixtures::kLoglikX, fixtures::kLoglikY, 3));
  double worst = std::fabs(mixed_loglik(CopulaSpec(Family::Independence, {}), fx) - fixtures::kLoglikIndependence);
  for (const auto& [rho, ref] : fixtures::kLoglikGaussian) {
    worst = std::max(worst, std::fabs(mixed_loglik(CopulaSpec(Family::Gaussian, {rho}), fx) - ref));
  }
  c.check(worst <= 1e-8, f("mixed_loglik vs 50-digit oracle: max error %.2e (<= 1e-8)", worst));

  std::vector<int> x(200);
  std::vector<double> y(200);
  for (std::size_t i = 0; i < 200; ++i) {
    x[i] = i % 2 == 0 ? 1 : 2;
    y[i] = numerics::normal_quantile((i + 0.5) / 200.0);
  }
  const PseudoObs p = pseudo_observations(make_sample(x, y, 2));
  double err = 0.0;
  for (double rho : {0.6, -0.4, 0.9}) {
    const ParametricEvaluator g(CopulaSpec(Family::Gaussian, {rho}));
    for (double yy : {-1.5, -0.2, 0.0, 0.8, 2.0}) {
      const double v = p.margin.cdf(yy);
      const double lower = oracle::bivariate_normal_cdf(0.0, numerics::normal_quantile(v), rho);
      err = std::max({err, std::fabs(cond_cdf(g, p, 1, yy) - lower / 0.5), std::fabs(cond_cdf(g, p, 2, yy) - (v - lower) / 0.5)});
    }
  }
  c.check(err <= 1e-6, f("Gaussian cond_cdf vs bivariate-normal rectangle: max error %.2e (<= 1e-6)", err));

  for (const char* id : {"A1", "E1"}) {
    const KlIntegrator in(find_row(id).model);
    const KlResult r = kl_minimize(kGaussian, in);
    double best = numerics::kInf, arg = 0.0;
    for (int k = -199; k <= 199; ++k) {
      const double kl = in.kl(CopulaSpec(Family::Gaussian, {0.005 * k}));
      if (kl < best) {
        best = kl;
        arg = 0.005 * k;
      }
    }
    c.check(std::fabs(r.theta_hat[0] - arg) <= 0.005 && r.kl <= best + 1e-12,
            f("%s kl_minimize rho %.5f vs grid %.3f (step 0.005), kl %.6f vs %.6f", id, r.theta_hat[0], arg, r.kl, best));
  }
}

std::vector<double> interior_theta(const FamilyInfo& info, double frac) {
  std::vector<double> t;
  for (const auto& b : info.search) t.push_back(b.lo + frac * (b.hi - b.lo));
  return t;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// 10. Property suites.
void properties(Check& c) {
  std::vector<CopulaFamily> families = default_ladder_families();
  families.push_back({Family::Independence, Rotation::None});
  double margin = 0.0, frechet = 0.0, increment = 0.0, integral = 0.0;
  for (const CopulaFamily& fam : families) {
    const FamilyInfo& info = family_info(fam.tag);
    for (double frac : {0.05, 0.3, 0.7}) {
      const CopulaSpec spec(fam, interior_theta(info, frac));
      const int g = 20;
      for (int i = 0; i <= g; ++i) {
        const double a = static_cast<double>(i) / g;
        margin = std::max({margin, std::fabs(copula_cdf(spec, a, 1.0) - a), std::fabs(copula_cdf(spec, 1.0, a) - a),
                           std::fabs(copula_cdf(spec, a, 0.0)), std::fabs(copula_cdf(spec, 0.0, a))});
        for (int j = 0; j <= g; ++j) {
          const double b = static_cast<double>(j) / g;
          const double v = copula_cdf(spec, a, b);
          frechet = std::max({frechet, std::max(0.0, a + b - 1.0) - v, v - std::min(a, b)});
          if (i < g && j < g) {
            const double a1 = (i + 1.0) / g, b1 = (j + 1.0) / g;
            increment = std::min(increment, copula_cdf(spec, a1, b1) - copula_cdf(spec, a, b1) -
                                                copula_cdf(spec, a1, b) + v);
          }
        }
      }
      for (double u : {0.1, 0.5, 0.85}) {
        for (double v : {0.2, 0.6, 0.95}) {
          const double q = oracle::integrate([&](double t) { return copula_cond_1g2(spec, u, t); }, 0.0, v, 1e-10);
          integral = std::max(integral, std::fabs(q - copula_cdf(spec, u, v)));
        }
      }
    }
  }
  c.check(margin <= 1e-12, f("copula margins over %zu families: max error %.2e", families.size(), margin));
  c.check(frechet <= 1e-12, f("Frechet bounds: max violation %.2e", frechet));
  c.check(increment >= -1e-12, f("2-increasing: min rectangle volume %.2e", increment));
  c.check(integral <= 1e-6, f("integral of h-function vs CDF: max error %.2e (<= 1e-6)", integral));

  const MixedPairSample s = simulate("E2", 500, 4);
  const PseudoObs p = pseudo_observations(s);
  std::vector<std::unique_ptr<CopulaEvaluator>> evals;
  for (const CopulaFamily& fam : default_ladder_families()) {
    evals.push_back(std::make_unique<ParametricEvaluator>(fit_family(fam, p).spec));
  }
  evals.push_back(std::make_unique<EmpiricalBetaCopula>(fit_beta_copula(p, 4)));
  double trip = 0.0, mixture = 0.0;
  for (const auto& e : evals) {
    for (int j = 1; j <= s.k; ++j) {
      for (double q : {0.1, 0.5, 0.9}) {
        trip = std::max(trip, std::fabs(cond_cdf_uniform(*e, p, j, cond_quantile_uniform(*e, p, j, q)) - q));
      }
    }
    for (double yy : {-3.0, -1.0, 0.5, 2.0, 4.0, 7.0}) {
      double sum = 0.0;
      for (int j = 1; j <= s.k; ++j) sum += static_cast<double>(s.counts[j - 1]) / s.n() * cond_cdf(*e, p, j, yy);
      mixture = std::max(mixture, std::fabs(sum - p.margin.cdf(yy)));
    }
  }
  c.check(trip <= 1e-6, f("conditional quantile round trip over %zu evaluators: max error %.2e (<= 1e-6)", evals.size(), trip));
  c.check(mixture <= 1e-9, f("mixture identity: max error %.2e (<= 1e-9)", mixture));

  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("mixcop_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  bool same = true;
  std::ostringstream sink;
  const auto run_twice = [&](cli::RunConfig config, const std::vector<std::string>& outputs) {
    std::vector<std::string> first;
    const std::string base = config.output;
    for (int rep = 0; rep < 2; ++rep) {
      config.output = (dir / (base + std::to_string(rep))).string();
      std::ostringstream out;
      if (cli::run(config, out, sink) != 0) same = false;
      std::vector<std::string> got{out.str()};
      for (const std::string& suffix : outputs) got.push_back(slurp(config.output + suffix));
      if (rep == 0) first = got;
      else if (got != first) same = false;
    }
  };
  cli::RunConfig sim;
  sim.command = "simulate";
  sim.model = "E3";
  sim.seed = 42;
  sim.output = "sim";
  run_twice(sim, {"", ".json"});
  const std::string data = (dir / "sim0").string();
  for (const std::string cmd : {"nscore", "fit", "qq"}) {
    cli::RunConfig k;
    k.command = cmd;
    k.input = data;
    k.output = cmd;
    run_twice(k, cmd == "qq" ? std::vector<std::string>{"_cat1.csv", "_cat2.csv", "_cat3.csv"} : std::vector<std::string>{""});
  }
  fs::remove_all(dir);
  c.check(same, "simulate, nscore, fit and qq reruns are byte-identical");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"exact-match models", exact_match},
      {"table reproduction, tight rows", tight_rows},
      {"table reproduction, named-family rows", named_rows},
      {"poor-fit classification", poor_rows},
      {"latent-score invariants", latent_scores},
      {"empirical beta copula", beta_copula},
      {"Q-Q diagnostic contrast", qq_contrast},
      {"Auto MPG", auto_mpg},
      {"oracle equivalence", oracles},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.check(false, std::string("exception: ") + e.what());
    }
    std::printf("CRITERION %zu %s: %s (%.1f s)\n", i + 1, criteria[i].first.c_str(), c.pass() ? "PASS" : "FAIL",
                seconds_since(t0));
    for (const std::string& line : c.lines()) std::printf("    %s\n", line.c_str());
    std::fflush(stdout);
    failed += !c.pass();
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
