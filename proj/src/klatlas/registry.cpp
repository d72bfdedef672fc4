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
#include <atomic>
#include <cctype>
#include <chrono>
#include <thread>

#include "mixcop/error.hpp"
#include "mixcop/klatlas.hpp"

namespace mixcop {
namespace {

TableRow normal_row(std::string id, int table, std::vector<double> pi, std::vector<double> mu,
                    std::vector<double> sigma, std::string family, double kl) {
  MixtureModel m{std::move(pi), ComponentKind::Normal, std::move(mu), std::move(sigma), {}, {}};
  return TableRow{std::move(id), table, m, std::move(family), kl, false, "mixture of normals"};
}

TableRow t_row(std::string id, int table, std::vector<double> pi, std::vector<double> mu, std::vector<double> nu,
               std::string family, double kl) {
  MixtureModel m{std::move(pi), ComponentKind::StudentT, std::move(mu), {}, std::move(nu), {}};
  return TableRow{std::move(id), table, m, std::move(family), kl, false, "mixture of t"};
}

TableRow skew_row(std::string id, int table, std::vector<double> pi, std::vector<double> mu,
                  std::vector<double> sigma, std::vector<double> alpha, std::string family, double kl) {
  MixtureModel m{std::move(pi), ComponentKind::SkewNormal, std::move(mu), std::move(sigma), {}, std::move(alpha)};
  return TableRow{std::move(id), table, m, std::move(family), kl, false, "mixture of skew normals"};
}

TableRow regression_row(std::string id, int table, YMargin margin, Link link, double a, std::vector<double> b,
                        std::string family, double kl, bool typo, std::string description) {
  RegressionModel r{margin, 3.0, link, a, std::move(b)};
  return TableRow{std::move(id), table, r, std::move(family), kl, typo, std::move(description)};
}

std::vector<TableRow> build_rows() {
  using YM = YMargin;
  std::vector<TableRow> rows;
  // Two categories.
  rows.push_back(normal_row("A1", 1, {0.5, 0.5}, {1, 2}, {1, 1}, "Gaussian", 0.0001));
  rows.push_back(normal_row("A2", 1, {0.7, 0.3}, {1, 3}, {1, 1}, "BB8", 0.0010));
  rows.push_back(normal_row("A3", 1, {0.6, 0.4}, {1, 2}, {1, 1.5}, "Survival BB1", 0.0040));
  rows.push_back(normal_row("A4", 1, {0.2, 0.8}, {1, 3}, {1, 2}, "BB1", 0.0087));
  rows.push_back(t_row("B1", 1, {0.4, 0.6}, {1, 2}, {3, 3}, "Survival BB10", 0.0022));
  rows.push_back(t_row("B2", 1, {0.3, 0.7}, {1, 3}, {3, 3}, "Survival BB10", 0.0057));
  rows.push_back(t_row("B3", 1, {0.6, 0.4}, {1, 2}, {3, 6}, "Survival BB10", 0.0040));
  rows.push_back(t_row("B4", 1, {0.7, 0.3}, {1, 3}, {3, 6}, "Survival BB10", 0.0050));
  rows.push_back(skew_row("C1", 1, {0.3, 0.7}, {1, 2}, {1, 1}, {3, 3}, "Survival Joe", 0.0050));
  rows.push_back(skew_row("C2", 1, {0.6, 0.4}, {1, 3}, {1, 1}, {3, 3}, "Survival Joe", 0.0073));
  rows.push_back(skew_row("C3", 1, {0.5, 0.5}, {1, 2}, {1, 1.5}, {3, 6}, "Clayton", 0.0065));
  rows.push_back(skew_row("C4", 1, {0.4, 0.6}, {1, 3}, {1, 2}, {3, 6}, "Survival Joe", 0.0056));
  // P(X = 2 | y) = F(c y + d) is written as P(X <= 1 | y) = F(-c y - d).
  rows.push_back(regression_row("D1", 1, YM::Normal, Link::Probit, -1.0, {0.0}, "Gaussian", 0.0, false,
                                "Y ~ N(0,1), P(X=2|y) = Phi(y)"));
  rows.push_back(regression_row("D2", 1, YM::Normal, Link::Logit, -1.0, {-3.0}, "t(28)", 1.5e-5, false,
                                "Y ~ N(0,1), P(X=2|y) = 1/(1+exp(-y-3))"));
  rows.push_back(regression_row("D3", 1, YM::Normal, Link::Logit, -2.0, {2.0}, "t(11)", 4.5e-5, false,
                                "Y ~ N(0,1), P(X=2|y) = 1/(1+exp(-2y+2))"));
  rows.push_back(regression_row("D4", 1, YM::StudentT, Link::Probit, -1.0, {-2.0}, "t(8)", 0.0021, false,
                                "Y ~ t3, P(X=2|y) = Phi(y+2)"));
  rows.push_back(regression_row("D5", 1, YM::StudentT, Link::Logit, -1.0, {-1.0}, "Gaussian", 0.0021, true,
                                "Y ~ t3, P(X=2|y) = 1/(1+exp(-y-1)) (printed 1/exp(-y-1))"));
  rows.push_back(regression_row("D6", 1, YM::ExtremeValue, Link::Probit, -1.0, {-1.0}, "Gaussian", 0.0019, false,
                                "Y ~ EV, P(X=2|y) = Phi(y+1)"));
  rows.push_back(regression_row("D7", 1, YM::ExtremeValue, Link::Logit, -1.0, {-1.0}, "Gaussian", 0.0011, true,
                                "Y ~ EV, P(X=2|y) = 1/(1+exp(-y-1)) (printed 1+exp(-y-1))"));
  // Three categories.
  rows.push_back(normal_row("E1", 2, {0.3, 0.3, 0.4}, {1, 2, 3}, {1, 1, 1}, "Gaussian", 0.0016));
  rows.push_back(normal_row("E2", 2, {0.5, 0.2, 0.3}, {1, 3, 6}, {2, 2, 2}, "Survival BB1", 0.0031));
  rows.push_back(normal_row("E3", 2, {0.4, 0.4, 0.2}, {1, 2, 3}, {3, 2, 4}, "Asymmetric Gumbel", 0.0267));
  rows.push_back(normal_row("E4", 2, {0.3, 0.4, 0.3}, {1, 3, 6}, {4, 6, 3}, "Survival BB1", 0.0472));
  rows.push_back(t_row("F1", 2, {0.2, 0.5, 0.3}, {1, 2, 3}, {4, 4, 4}, "Plackett", 0.0028));
  rows.push_back(t_row("F2", 2, {0.4, 0.2, 0.4}, {1, 3, 7}, {4, 4, 4}, "Survival BB10", 0.0432));
  rows.push_back(t_row("F3", 2, {0.4, 0.3, 0.3}, {1, 2, 3}, {6, 3, 9}, "Survival BB10", 0.0075));
  rows.push_back(t_row("F4", 2, {0.3, 0.5, 0.2}, {1, 3, 7}, {6, 3, 9}, "BB8", 0.0039));
  rows.push_back(skew_row("G1", 2, {0.2, 0.4, 0.4}, {2, 3, 4}, {3, 3, 3}, {4, 4, 4}, "Survival Gumbel", 0.0102));
  rows.push_back(skew_row("G2", 2, {0.2, 0.3, 0.5}, {2, 4, 8}, {3, 3, 3}, {4, 4, 4}, "Survival BB10", 0.0424));
  rows.push_back(skew_row("G3", 2, {0.3, 0.2, 0.5}, {2, 3, 4}, {3, 1, 2}, {3, 2, 4}, "t(2)", 0.1421));
  rows.push_back(skew_row("G4", 2, {0.5, 0.3, 0.2}, {2, 4, 8}, {3, 1, 2}, {3, 2, 4}, "BB8", 0.2540));
  rows.push_back(regression_row("H1", 2, YM::Normal, Link::Probit, -1.0, {-0.5, 0.5}, "Gaussian", 0.0, false,
                                "Y ~ N(0,1), P(X<=j|y) = Phi(-y + b_j), b = (-0.5, 0.5)"));
  rows.push_back(regression_row("H2", 2, YM::Normal, Link::Logit, -1.0, {-1.0, 1.0}, "t(20)", 1.6e-5, true,
                                "Y ~ N(0,1), P(X<=j|y) = 1/(1+exp(y -+ 1)) (printed 1/exp(y -+ 1))"));
  rows.push_back(regression_row("H3", 2, YM::StudentT, Link::Probit, -1.0, {-1.0, 1.0}, "Gaussian", 0.0038, false,
                                "Y ~ t3, P(X<=j|y) = Phi(-y -+ 1)"));
  rows.push_back(regression_row("H4", 2, YM::ExtremeValue, Link::Probit, -1.0, {-1.0, 1.0}, "Gaussian", 0.0095,
                                false, "Y ~ EV, P(X<=j|y) = Phi(-y -+ 1)"));
  return rows;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows = build_rows();
  return rows;
}

const TableRow& find_row(std::string_view id) {
  const std::string want = lower(id);
  for (const TableRow& r : table_rows()) {
    if (lower(r.id) == want) return r;
  }
  throw ValidationError("unknown model '" + std::string(id) + "'");
}

CopulaFamily reference_family(std::string_view printed) {
  std::string name = lower(printed);
  CopulaFamily f;
  if (name.starts_with("survival ")) {
    f.rotation = Rotation::Survival;
    name = name.substr(9);
  }
  if (name.starts_with("t(") || name == "t") {
    f.tag = Family::StudentT;
    return f;
  }
  if (name == "asymmetric gumbel") {
    f.tag = Family::AsymmetricGumbel;
    return f;
  }
  f.tag = parse_family(name).tag;
  return f;
}

TableSelection parse_table_selection(std::string_view name) {
  if (name == "two") return TableSelection::Two;
  if (name == "three") return TableSelection::Three;
  if (name == "all") return TableSelection::All;
  throw ValidationError("table selection must be two, three or all");
}

RowReport reproduce_row(const TableRow& row, bool strict, const KlOptions& options) {
  RowReport rep;
  rep.row = row;
  if (strict && row.typo) {
    rep.refused = true;
    rep.error = "refused in strict mode: printed link is not a probability";
    return rep;
  }
  const auto t0 = std::chrono::steady_clock::now();
  try {
    rep.ladder = family_ladder_search(row.model, options);
    const CopulaFamily want = reference_family(row.reference_family);
    for (const KlResult& r : rep.ladder.results) {
      if (r.family == want) rep.reference = r;
    }
  } catch (const Error& e) {
    rep.error = e.what();
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<RowReport> reproduce_tables(TableSelection which, bool strict, const KlOptions& options) {
  std::vector<const TableRow*> rows;
  for (const TableRow& r : table_rows()) {
    if (which == TableSelection::All || (which == TableSelection::Two && r.table == 1) ||
        (which == TableSelection::Three && r.table == 2)) {
      rows.push_back(&r);
    }
  }
  std::vector<RowReport> out(rows.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) out[i] = reproduce_row(*rows[i], strict, options);
  };
  const unsigned threads = std::clamp(std::thread::hardware_concurrency(), 1u, static_cast<unsigned>(rows.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return out;
}

}  // namespace mixcop
