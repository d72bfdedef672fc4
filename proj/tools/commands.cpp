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


#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "mixcop/diagnose.hpp"
#include "mixcop/error.hpp"
#include "mixcop/latent.hpp"

namespace mixcop::cli {
namespace {

using nlohmann::json;

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// Opens config.output, or hands back `fallback` when no path was given.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary);
    if (!file_) throw ValidationError("cannot write '" + path + "'");
    os_ = &file_;
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot write '" + path + "'");
  f << text;
}

ProbabilityModel config_model(const RunConfig& config) {
  if (config.inline_model) return *config.inline_model;
  if (config.model.empty()) throw ValidationError("--model is required");
  return find_row(config.model).model;
}

std::string strip_extension(const std::string& path) {
  const std::filesystem::path p(path);
  return (p.parent_path() / p.stem()).string();
}

void emit_panels(const std::vector<QQPanel>& panels, const MixedPairSample& s, const std::string& prefix,
                 const std::string& emit, const std::string& what, std::uint64_t seed) {
  for (const auto& panel : panels) {
    const std::string label = s.labels.empty() ? std::to_string(panel.category) : s.labels[panel.category - 1];
    const std::string base = prefix + "_cat" + std::to_string(panel.category);
    if (emit == "svg") {
      std::ofstream f(base + ".svg", std::ios::binary);
      if (!f) throw ValidationError("cannot write '" + base + ".svg'");
      io::SvgOptions o;
      o.title = "conditional Q-Q, x = " + label + " (" + what + ")";
      o.x_label = "model quantile";
      o.y_label = "sample quantile";
      o.comments = {"seed " + std::to_string(seed), "copula " + what,
                    "max PIT discrepancy " + io::format_number(panel.discrepancy)};
      io::write_svg_scatter(f, panel.model_q, panel.empirical_q, o);
    } else {
      std::ofstream f(base + ".csv", std::ios::binary);
      if (!f) throw ValidationError("cannot write '" + base + ".csv'");
      io::write_csv(f, {"q", "model", "empirical"}, {panel.q, panel.model_q, panel.empirical_q});
    }
  }
}

std::string theta_text(const std::vector<double>& theta) {
  std::string s;
  for (std::size_t i = 0; i < theta.size(); ++i) s += (i ? " " : "") + fmt("%.4g", theta[i]);
  return s;
}

void print_ranking(std::ostream& out, const std::vector<FitResult>& ranked) {
  char line[160];
  std::snprintf(line, sizeof line, "%-22s %-20s %12s %12s %12s\n", "family", "theta", "loglik", "aic", "bic");
  out << line;
  for (const auto& r : ranked) {
    std::snprintf(line, sizeof line, "%-22s %-20s %12.4f %12.4f %12.4f\n", family_name(r.spec.family()).c_str(),
                  theta_text(r.spec.theta()).c_str(), r.loglik, r.aic, r.bic);
    out << line;
  }
}

double quantile7(const std::vector<double>& sorted, double p) {
  const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

RunConfig load_config(const std::string& path, RunConfig c) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open config '" + path + "'");
  json j;
  try {
    j = json::parse(f);
  } catch (const json::exception& e) {
    throw ValidationError("config '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw ValidationError("config '" + path + "' must hold a JSON object");
  try {
    for (const auto& [raw_key, v] : j.items()) {
      std::string key = raw_key;
      std::replace(key.begin(), key.end(), '_', '-');
      auto strings = [&v] {
        if (v.is_string()) return std::vector<std::string>{v.get<std::string>()};
        return v.get<std::vector<std::string>>();
      };
      if (key == "command") c.command = v.get<std::string>();
      else if (key == "model") {
        if (v.is_string()) c.model = v.get<std::string>();
        else c.inline_model = io::model_from_json(v.dump());
      } else if (key == "n") c.n = v.get<long long>();
      else if (key == "seed") c.seed = v.get<std::uint64_t>();
      else if (key == "input") c.input = v.get<std::string>();
      else if (key == "output") c.output = v.get<std::string>();
      else if (key == "x-col") c.x_col = v.get<std::string>();
      else if (key == "y-col") c.y_col = v.get<std::string>();
      else if (key == "merge") c.merges = strings();
      else if (key == "family") c.families = strings();
      else if (key == "criterion") c.criterion = v.get<std::string>();
      else if (key == "beta") c.beta = v.get<bool>();
      else if (key == "emit") c.emit = v.get<std::string>();
      else if (key == "which") c.which = v.get<std::string>();
      else if (key == "order") c.order = strings();
      else if (key == "strict") c.strict = v.get<bool>();
      else throw ValidationError("config '" + path + "': unknown key '" + raw_key + "'");
    }
  } catch (const json::exception& e) {
    throw ValidationError("config '" + path + "': " + e.what());
  }
  return c;
}

void validate_config(const RunConfig& c) {
  static const std::vector<std::string> commands = {"simulate", "nscore", "fit", "qq", "kl-table", "automobile-demo"};
  if (std::find(commands.begin(), commands.end(), c.command) == commands.end()) {
    throw ValidationError("unknown command '" + c.command + "'");
  }
  if (c.emit != "csv" && c.emit != "json" && c.emit != "svg") throw ValidationError("--emit must be csv, json or svg");
  parse_criterion(c.criterion);
  for (const auto& m : c.merges) {
    const auto eq = m.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == m.size()) {
      throw ValidationError("--merge expects from=to, got '" + m + "'");
    }
  }
  for (const auto& f : c.families) parse_family(f);
  if (c.command == "simulate") {
    if (c.n < 1) throw ValidationError("--n must be at least 1");
    config_model(c);
    if (c.emit == "svg") throw ValidationError("simulate writes csv or json");
  } else if (c.command == "nscore" || c.command == "fit" || c.command == "qq") {
    if (c.input.empty()) throw ValidationError("--input is required for " + c.command);
    if (c.command == "qq" && c.output.empty()) throw ValidationError("--output prefix is required for qq");
    if (c.command == "nscore" && c.emit == "json") throw ValidationError("nscore writes csv or svg");
  } else if (c.command == "kl-table") {
    parse_table_selection(c.which);
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate_config(config);
    if (config.command == "simulate") cmd_simulate(config, out);
    else if (config.command == "nscore") cmd_nscore(config, out);
    else if (config.command == "fit") cmd_fit(config, out);
    else if (config.command == "qq") cmd_qq(config, out);
    else if (config.command == "kl-table") return cmd_kl_table(config, out) ? 0 : 3;
    else cmd_automobile_demo(config, out);
    return 0;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 3;
  }
}

BuildOptions build_options(const RunConfig& c) {
  BuildOptions o;
  for (const auto& m : c.merges) {
    const auto eq = m.find('=');
    o.merges.emplace_back(m.substr(0, eq), m.substr(eq + 1));
  }
  o.order = c.order;
  return o;
}

MixedPairSample load_sample(const RunConfig& c) {
  const auto table = io::read_csv_file(c.input);
  const auto cols = io::mixed_columns(table, c.x_col, c.y_col);
  return build_sample(cols.x, cols.y, build_options(c));
}

std::vector<CopulaFamily> requested_families(const RunConfig& c) {
  if (c.families.empty()) return default_ladder_families();
  std::vector<CopulaFamily> f;
  for (const auto& name : c.families) f.push_back(parse_family(name));
  return f;
}

FitReport fit_sample(const MixedPairSample& s, const std::vector<CopulaFamily>& families, Criterion criterion) {
  FitReport r{orient_positive(s), {}, {}};
  r.pseudo = pseudo_observations(r.oriented.sample);
  r.ranked = select_model(families, r.pseudo, criterion);
  return r;
}

void cmd_simulate(const RunConfig& c, std::ostream& out) {
  const ProbabilityModel model = config_model(c);
  const auto s = sample_from_model(model, static_cast<std::size_t>(c.n), c.seed);
  Sink sink(c.output, out);
  if (c.emit == "json") {
    json j;
    j["x"] = s.x;
    j["y"] = s.y;
    sink.stream() << j.dump() << '\n';
  } else {
    std::vector<double> x(s.x.begin(), s.x.end());
    io::write_csv(sink.stream(), {"x", "y"}, {x, s.y});
  }
  if (!c.output.empty()) {
    json meta;
    if (!c.model.empty() && !c.inline_model) meta["model_name"] = c.model;
    meta["model"] = json::parse(io::model_to_json(model));
    meta["n"] = c.n;
    meta["seed"] = c.seed;
    meta["counts"] = s.counts;
    write_text(c.output + ".json", meta.dump(2) + "\n");
  }
}

void cmd_nscore(const RunConfig& c, std::ostream& out) {
  const auto s = load_sample(c);
  const auto o = orient_positive(s);
  const auto p = pseudo_observations(o.sample);
  const double rho = polyserial_mle(p);
  const auto ls = gen_latent_scores(p, rho, c.seed);
  const auto pairs = normal_score_pairs(ls, p);
  std::vector<double> z, ny;
  for (const auto& [a, b] : pairs) {
    z.push_back(a);
    ny.push_back(b);
  }
  Sink sink(c.output, out);
  if (c.emit == "svg") {
    io::SvgOptions opt;
    opt.title = "normal scores, rho_N = " + fmt("%.3f", rho);
    opt.x_label = "latent normal score of " + c.x_col;
    opt.y_label = "normal score of " + c.y_col;
    opt.comments = {"seed " + std::to_string(c.seed), "polyserial " + io::format_number(rho),
                    std::string("categories reversed ") + (o.flipped_x ? "yes" : "no")};
    io::write_svg_scatter(sink.stream(), z, ny, opt);
  } else {
    io::write_csv(sink.stream(), {"z", "ny"}, {z, ny});
  }
  if (!c.output.empty()) {
    out << "n " << s.n() << ", polyserial " << fmt("%.4f", rho) << ", seed " << c.seed << '\n';
  }
}

void cmd_fit(const RunConfig& c, std::ostream& out) {
  const auto s = load_sample(c);
  const Criterion crit = parse_criterion(c.criterion);
  const auto rep = fit_sample(s, requested_families(c), crit);
  Sink sink(c.output, out);
  std::ostream& os = sink.stream();
  if (c.emit == "json") {
    json j;
    j["n"] = s.n();
    j["criterion"] = c.criterion;
    j["categories_reversed"] = rep.oriented.flipped_x;
    j["fits"] = json::array();
    for (const auto& r : rep.ranked) {
      j["fits"].push_back({{"family", family_name(r.spec.family())},
                           {"theta", r.spec.theta()},
                           {"loglik", r.loglik},
                           {"aic", r.aic},
                           {"bic", r.bic},
                           {"nonparametric", false}});
    }
    j["fits"].push_back({{"family", "empirical-beta"}, {"loglik", nullptr}, {"nonparametric", true}});
    os << j.dump(2) << '\n';
  } else if (c.emit == "csv") {
    os << "rank,family,theta,loglik,aic,bic,nonparametric\n";
    int rank = 0;
    for (const auto& r : rep.ranked) {
      std::string th;
      for (std::size_t i = 0; i < r.spec.theta().size(); ++i) th += (i ? ";" : "") + io::format_number(r.spec.theta()[i]);
      os << ++rank << ',' << family_name(r.spec.family()) << ',' << th << ',' << io::format_number(r.loglik) << ','
         << io::format_number(r.aic) << ',' << io::format_number(r.bic) << ",false\n";
    }
    os << ",empirical-beta,,,,,true\n";
  } else {
    throw ValidationError("fit writes csv or json");
  }
  if (!c.output.empty()) {
    out << "n " << s.n() << (rep.oriented.flipped_x ? ", categories reversed" : "") << '\n';
    print_ranking(out, rep.ranked);
  }
}

void cmd_qq(const RunConfig& c, std::ostream& out) {
  const auto s = load_sample(c);
  const auto o = orient_positive(s);
  const auto p = pseudo_observations(o.sample);
  std::vector<QQPanel> panels;
  std::string what;
  if (c.beta) {
    const auto b = fit_beta_copula(p, c.seed);
    what = b.describe();
    panels = qq_panels(b, o.sample, p);
  } else {
    const auto ranked = select_model(requested_families(c), p, parse_criterion(c.criterion));
    const ParametricEvaluator ev(ranked.front().spec);
    what = family_name(ranked.front().spec.family()) + " " + theta_text(ranked.front().spec.theta());
    panels = qq_panels(ev, o.sample, p);
  }
  emit_panels(panels, o.sample, strip_extension(c.output), c.emit == "svg" ? "svg" : "csv", what, c.seed);
  out << "copula " << what << (o.flipped_x ? " (categories reversed)" : "") << '\n';
  for (const auto& panel : panels) {
    const std::string label = o.sample.labels[panel.category - 1];
    out << "category " << label << ": n " << panel.q.size() << ", max PIT discrepancy "
        << fmt("%.4f", panel.discrepancy) << '\n';
  }
}

KlRowCheck check_kl_row(const RowReport& r) {
  KlRowCheck k;
  k.named_kl = r.reference.kl;
  k.best_kl = numerics::kInf;
  for (const auto& x : r.ladder.results) {
    if (!x.failed) k.best_kl = std::min(k.best_kl, x.kl);
  }
  const double tol = std::max(0.3 * r.row.reference_kl, 0.003);
  k.in_tolerance = std::abs(k.named_kl - r.row.reference_kl) <= tol;
  k.near_minimum = k.named_kl - k.best_kl <= 0.003;
  return k;
}

bool cmd_kl_table(const RunConfig& c, std::ostream& out) {
  const auto reports = reproduce_tables(parse_table_selection(c.which), c.strict);
  bool ok = true;
  char line[256];
  std::snprintf(line, sizeof line, "%-4s %-20s %9s %9s %-20s %9s  %s\n", "row", "reported family", "reported",
                "ours", "ladder best", "best kl", "flag");
  out << line;
  std::ostringstream csv;
  csv << "row,table,reported_family,reported_kl,named_family,named_theta,named_kl,best_family,best_theta,best_kl,"
         "reversed,flag,seconds\n";
  for (const auto& r : reports) {
    if (r.refused) {
      std::snprintf(line, sizeof line, "%-4s %-20s %9.4g %9s %-20s %9s  refused (strict)\n", r.row.id.c_str(),
                    r.row.reference_family.c_str(), r.row.reference_kl, "-", "-", "-");
      out << line;
      csv << r.row.id << ',' << r.row.table << ',' << r.row.reference_family << ','
          << io::format_number(r.row.reference_kl) << ",,,,,,,,refused,0.00\n";
      continue;
    }
    if (!r.error.empty()) {
      ok = false;
      std::snprintf(line, sizeof line, "%-4s %-20s %9.4g %9s %-20s %9s  error: %s\n", r.row.id.c_str(),
                    r.row.reference_family.c_str(), r.row.reference_kl, "-", "-", "-", r.error.c_str());
      out << line;
      csv << r.row.id << ',' << r.row.table << ',' << r.row.reference_family << ','
          << io::format_number(r.row.reference_kl) << ",,,,,,,," << "error" << ','
          << io::format_number(r.seconds) << '\n';
      continue;
    }
    const auto k = check_kl_row(r);
    const KlResult& best = r.ladder.results.front();
    std::string flag;
    if (r.row.typo) flag = "typo row (logistic reading)";
    else if (!k.in_tolerance) flag = "OUTSIDE tolerance";
    else if (!k.near_minimum) flag = "named family not within 0.003 of ladder minimum";
    else flag = "ok";
    std::snprintf(line, sizeof line, "%-4s %-20s %9.4g %9.5f %-20s %9.5f  %s\n", r.row.id.c_str(),
                  r.row.reference_family.c_str(), r.row.reference_kl, k.named_kl,
                  family_name(best.family).c_str(), best.kl, flag.c_str());
    out << line;
    auto th = [](const std::vector<double>& t) {
      std::string s;
      for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ";" : "") + io::format_number(t[i]);
      return s;
    };
    csv << r.row.id << ',' << r.row.table << ',' << r.row.reference_family << ','
        << io::format_number(r.row.reference_kl) << ',' << family_name(r.reference.family) << ','
        << th(r.reference.theta_hat) << ',' << io::format_number(r.reference.kl) << ','
        << family_name(best.family) << ',' << th(best.theta_hat) << ',' << io::format_number(best.kl) << ','
        << (r.ladder.reversed ? "true" : "false") << ',' << flag << ',' << fmt("%.2f", r.seconds) << '\n';
  }
  if (!c.output.empty()) write_text(c.output, csv.str());
  return ok;
}

SubsetSummary summarize(std::string label, std::vector<double> v) {
  if (v.empty()) throw ValidationError("summary of an empty subset");
  std::sort(v.begin(), v.end());
  SubsetSummary s;
  s.label = std::move(label);
  s.n = v.size();
  s.min = v.front();
  s.max = v.back();
  s.q1 = quantile7(v, 0.25);
  s.median = quantile7(v, 0.5);
  s.q3 = quantile7(v, 0.75);
  const double n = static_cast<double>(v.size());
  s.mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
  double ss = 0.0;
  for (double x : v) ss += (x - s.mean) * (x - s.mean);
  s.sd = v.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  return s;
}

std::string default_auto_mpg_path() { return std::string(MIXCOP_DATA_DIR) + "/auto_mpg.csv"; }

AutoMpg load_auto_mpg(const std::string& path) {
  if (!std::filesystem::exists(path)) throw ValidationError("data file '" + path + "' not found");
  return AutoMpg{io::read_csv_file(path)};
}

std::vector<double> AutoMpg::column(const std::string& name, bool impute_mean) const {
  const std::size_t j = table.column(name);
  std::vector<double> v(table.rows.size(), std::nan(""));
  double sum = 0.0;
  std::size_t have = 0;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const std::string& cell = table.rows[i][j];
    if (cell.empty() || cell == "?" || cell == "NA") {
      if (!impute_mean) throw ValidationError("line " + std::to_string(table.lines[i]) + ": missing " + name);
      continue;
    }
    v[i] = std::stod(cell);
    sum += v[i];
    ++have;
  }
  if (impute_mean) {
    for (double& x : v) {
      if (std::isnan(x)) x = sum / static_cast<double>(have);
    }
  }
  return v;
}

namespace {

std::vector<double> merged_cylinders(const AutoMpg& d) {
  auto c = d.column("cylinders");
  for (double& x : c) {
    if (x == 3.0) x = 4.0;
    if (x == 5.0) x = 6.0;
  }
  return c;
}

std::vector<std::string> as_labels(const std::vector<double>& v) {
  std::vector<std::string> out;
  for (double x : v) out.push_back(io::format_number(x));
  return out;
}

}  // namespace

std::vector<CorrelationRow> auto_correlations(const AutoMpg& d) {
  const auto mpg = d.column("mpg");
  const std::vector<std::pair<std::string, std::vector<double>>> vars = {
      {"cylinders", merged_cylinders(d)},
      {"horsepower", d.column("horsepower", true)},
      {"weight", d.column("weight")},
      {"acceleration", d.column("acceleration")},
      {"model_year", d.column("model_year")},
      {"origin", d.column("origin")},
  };
  std::vector<CorrelationRow> rows;
  for (const auto& [name, v] : vars) rows.push_back({name, pearson_rho(v, mpg), spearman_rho(v, mpg)});
  return rows;
}

std::vector<SubsetSummary> weight_summaries(const AutoMpg& d) {
  const auto w = d.column("weight");
  const auto cyl = merged_cylinders(d);
  const auto origin = d.column("origin");
  std::vector<SubsetSummary> out{summarize("none", w)};
  auto by = [&](const std::string& name, const std::vector<double>& key, double level) {
    std::vector<double> sub;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (key[i] == level) sub.push_back(w[i]);
    }
    out.push_back(summarize(name + " = " + io::format_number(level), sub));
  };
  for (double c : {4.0, 6.0, 8.0}) by("cylinders", cyl, c);
  for (double o : {1.0, 2.0, 3.0}) by("origin", origin, o);
  return out;
}

MixedPairSample weight_cylinders_sample(const AutoMpg& d) {
  auto cyl = merged_cylinders(d);
  for (double& x : cyl) x = -x;
  auto w = d.column("weight");
  for (double& x : w) x = -x;
  return build_sample(as_labels(cyl), w);
}

MixedPairSample weight_origin_sample(const AutoMpg& d) {
  auto w = d.column("weight");
  for (double& x : w) x = -x;
  return build_sample(as_labels(d.column("origin")), w);
}

void cmd_automobile_demo(const RunConfig& c, std::ostream& out) {
  const AutoMpg data = load_auto_mpg(c.input.empty() ? default_auto_mpg_path() : c.input);
  const Criterion crit = parse_criterion(c.criterion);
  char line[200];
  out << "Auto MPG, " << data.table.rows.size() << " cars; cylinders 3 merged into 4, 5 into 6\n\n";
  out << "Correlation with mpg\n";
  std::snprintf(line, sizeof line, "%-14s %9s %9s\n", "variable", "pearson", "spearman");
  out << line;
  for (const auto& r : auto_correlations(data)) {
    std::snprintf(line, sizeof line, "%-14s %9.3f %9.3f\n", r.variable.c_str(), r.pearson, r.spearman);
    out << line;
  }
  out << "\nWeight by subset\n";
  std::snprintf(line, sizeof line, "%-14s %5s %6s %7s %7s %7s %7s %6s %5s\n", "subset", "n", "min", "q1", "median",
                "mean", "q3", "max", "sd");
  out << line;
  for (const auto& s : weight_summaries(data)) {
    std::snprintf(line, sizeof line, "%-14s %5zu %6.0f %7.0f %7.0f %7.0f %7.0f %6.0f %5.0f\n", s.label.c_str(), s.n,
                  s.min, s.q1, s.median, s.mean, s.q3, s.max, s.sd);
    out << line;
  }
  const std::vector<std::pair<std::string, MixedPairSample>> pairs = {
      {"negative weight | negative cylinders", weight_cylinders_sample(data)},
      {"negative weight | origin", weight_origin_sample(data)},
  };
  const std::vector<std::string> tags = {"cylinders", "origin"};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto rep = fit_sample(pairs[i].second, requested_families(c), crit);
    out << '\n' << pairs[i].first << " (ranked by " << c.criterion << ")\n";
    print_ranking(out, rep.ranked);
    if (!c.output.empty()) {
      std::filesystem::create_directories(c.output);
      const ParametricEvaluator ev(rep.ranked.front().spec);
      const auto panels = qq_panels(ev, rep.oriented.sample, rep.pseudo);
      emit_panels(panels, rep.oriented.sample, c.output + "/qq_" + tags[i], c.emit == "svg" ? "svg" : "csv",
                  family_name(rep.ranked.front().spec.family()), c.seed);
      for (const auto& panel : panels) {
        out << "  category " << rep.oriented.sample.labels[panel.category - 1] << ": max PIT discrepancy "
            << fmt("%.4f", panel.discrepancy) << '\n';
      }
    }
  }
}

}  // namespace mixcop::cli
