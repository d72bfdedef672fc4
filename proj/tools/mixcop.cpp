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


// mixcop: copula modelling of a continuous and an ordinal variable.

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "commands.hpp"
#include "mixcop/error.hpp"

namespace {

using mixcop::cli::RunConfig;

struct Flags {
  std::string config, model, input, output, x_col, y_col, criterion, emit, which;
  long long n = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> merges, families, order;
  bool beta = false;
  bool strict = false;
};

void add_options(CLI::App* sub, Flags& f, const std::string& name) {
  sub->add_option("--config", f.config, "JSON file with the same keys as the flags");
  sub->add_option("--seed", f.seed, "random seed");
  sub->add_option("--output", f.output, "output file, prefix or directory");
  sub->add_option("--emit", f.emit, "csv, json or svg");
  if (name == "simulate") {
    sub->add_option("--model", f.model, "table row id such as E1");
    sub->add_option("--n", f.n, "sample size");
  }
  if (name == "nscore" || name == "fit" || name == "qq" || name == "automobile-demo") {
    sub->add_option("--input", f.input, "CSV file with a header row");
  }
  if (name == "nscore" || name == "fit" || name == "qq") {
    sub->add_option("--x-col", f.x_col, "ordinal column (default x)");
    sub->add_option("--y-col", f.y_col, "continuous column (default y)");
    sub->add_option("--merge", f.merges, "merge category a into b, as a=b")->take_all();
    sub->add_option("--order", f.order, "category labels from lowest to highest")->delimiter(',');
  }
  if (name == "fit" || name == "qq" || name == "automobile-demo") {
    sub->add_option("--family", f.families, "candidate families (default: the full ladder)")->delimiter(',');
    sub->add_option("--criterion", f.criterion, "aic or bic");
  }
  if (name == "qq") sub->add_flag("--beta", f.beta, "use the empirical beta copula");
  if (name == "kl-table") {
    sub->add_option("--which", f.which, "two, three or all");
    sub->add_flag("--strict", f.strict, "refuse rows whose printed link is not a probability");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Copula models for a continuous and an ordinal variable"};
  app.require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"simulate", "draw a sample from a tabulated probability model"},
      {"nscore", "latent normal-score pairs"},
      {"fit", "fit and rank parametric copulas"},
      {"qq", "conditional Q-Q panels per category"},
      {"kl-table", "minimum KL divergence for the tabulated models"},
      {"automobile-demo", "worked example on the Auto MPG data"},
  };
  std::map<std::string, Flags> flags;
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, help] : commands) {
    subs[name] = app.add_subcommand(name, help);
    add_options(subs[name], flags[name], name);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (const auto& [name, sub] : subs) {
    if (!sub->parsed()) continue;
    const Flags& f = flags[name];
    RunConfig c;
    try {
      if (sub->count("--config")) c = mixcop::cli::load_config(f.config, c);
    } catch (const mixcop::Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 2;
    }
    c.command = name;
    auto given = [sub](const char* opt) {
      try {
        return sub->count(opt) > 0;
      } catch (const CLI::OptionNotFound&) {
        return false;
      }
    };
    if (given("--model")) {
      c.model = f.model;
      c.inline_model.reset();
    }
    if (given("--n")) c.n = f.n;
    if (given("--seed")) c.seed = f.seed;
    if (given("--input")) c.input = f.input;
    if (given("--output")) c.output = f.output;
    if (given("--x-col")) c.x_col = f.x_col;
    if (given("--y-col")) c.y_col = f.y_col;
    if (given("--merge")) c.merges = f.merges;
    if (given("--family")) c.families = f.families;
    if (given("--criterion")) c.criterion = f.criterion;
    if (given("--beta")) c.beta = f.beta;
    if (given("--emit")) c.emit = f.emit;
    if (given("--which")) c.which = f.which;
    if (given("--order")) c.order = f.order;
    if (given("--strict")) c.strict = f.strict;
    return mixcop::cli::run(c, std::cout, std::cerr);
  }
  return 2;
}
