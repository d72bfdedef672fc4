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


// Command implementations behind the mixcop executable. Each command reads
// a RunConfig, writes its artifacts, and reports to the given stream.

#ifndef MIXCOP_TOOLS_COMMANDS_HPP_
#define MIXCOP_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mixcop/fit.hpp"
#include "mixcop/io.hpp"
#include "mixcop/klatlas.hpp"
#include "mixcop/sample.hpp"

namespace mixcop::cli {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

struct RunConfig {
  std::string command;
  std::string model;                        // registry id
  std::optional<ProbabilityModel> inline_model;  // from a config file
  long long n = 1000;
  std::uint64_t seed = kDefaultSeed;
  std::string input;
  std::string output;
  std::string x_col = "x";
  std::string y_col = "y";
  std::vector<std::string> merges;  // "from=to"
  std::vector<std::string> families;
  std::string criterion = "aic";
  bool beta = false;
  std::string emit = "csv";
  std::string which = "all";
  std::vector<std::string> order;
  bool strict = false;
};

// Reads a JSON object whose keys match the long flag names (with
// underscores or dashes) into base.
RunConfig load_config(const std::string& path, RunConfig base = {});

// Checks the fields each command needs. Throws ValidationError.
void validate_config(const RunConfig& config);

// Dispatches and maps errors to exit codes: 0 success, 2 validation
// error, 3 numerical failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

void cmd_simulate(const RunConfig& config, std::ostream& out);
void cmd_nscore(const RunConfig& config, std::ostream& out);
void cmd_fit(const RunConfig& config, std::ostream& out);
void cmd_qq(const RunConfig& config, std::ostream& out);
// Returns false when some row failed outright.
bool cmd_kl_table(const RunConfig& config, std::ostream& out);
void cmd_automobile_demo(const RunConfig& config, std::ostream& out);

// Shared pieces, also used by the tests.

MixedPairSample load_sample(const RunConfig& config);
BuildOptions build_options(const RunConfig& config);
std::vector<CopulaFamily> requested_families(const RunConfig& config);

struct FitReport {
  Oriented oriented;
  PseudoObs pseudo;
  std::vector<FitResult> ranked;
};

FitReport fit_sample(const MixedPairSample& s, const std::vector<CopulaFamily>& families, Criterion criterion);

struct KlRowCheck {
  bool in_tolerance = false;  // named family vs reported value
  bool near_minimum = false;  // named family vs ladder minimum
  double named_kl = 0.0;
  double best_kl = 0.0;
};

// max(30% relative, 0.003 absolute) of the reported value, and within
// 0.003 of the ladder minimum.
KlRowCheck check_kl_row(const RowReport& report);

struct SubsetSummary {
  std::string label;
  std::size_t n = 0;
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double mean = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  double sd = 0.0;
};

// Quartiles use linear interpolation between order statistics.
SubsetSummary summarize(std::string label, std::vector<double> values);

struct AutoMpg {
  io::CsvTable table;
  std::vector<double> column(const std::string& name, bool impute_mean = false) const;
};

std::string default_auto_mpg_path();
AutoMpg load_auto_mpg(const std::string& path);

struct CorrelationRow {
  std::string variable;
  double pearson = 0.0;
  double spearman = 0.0;
};

// Correlations of each explanatory variable with mpg, cylinders merged
// 3 into 4 and 5 into 6, missing horsepower replaced by its mean.
std::vector<CorrelationRow> auto_correlations(const AutoMpg& data);

// Weight overall, by cylinders (merged) and by origin.
std::vector<SubsetSummary> weight_summaries(const AutoMpg& data);

// Negative weight against negative cylinders, or against origin.
MixedPairSample weight_cylinders_sample(const AutoMpg& data);
MixedPairSample weight_origin_sample(const AutoMpg& data);

}  // namespace mixcop::cli

#endif  // MIXCOP_TOOLS_COMMANDS_HPP_
