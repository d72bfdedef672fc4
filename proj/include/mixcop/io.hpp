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


// File formats: CSV ingestion and emission, hand-rolled SVG scatters, and
// JSON for probability models and copula specs.

#ifndef MIXCOP_IO_HPP_
#define MIXCOP_IO_HPP_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mixcop/copula.hpp"
#include "mixcop/klatlas.hpp"

namespace mixcop::io {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> lines;  // 1-based source line of each row

  // Index of a header column; ValidationError when absent.
  std::size_t column(std::string_view name) const;
};

// Comma separated, header row required, double quotes for fields that
// contain commas. Ragged rows are a ValidationError naming the line.
CsvTable read_csv(std::istream& in, std::string_view source = "<input>");
CsvTable read_csv_file(const std::string& path);

struct MixedColumns {
  std::vector<std::string> x;
  std::vector<double> y;
};

// Pulls an ordinal label column and a numeric column. Empty or
// non-numeric cells are errors carrying the line number.
MixedColumns mixed_columns(const CsvTable& table, std::string_view x_col, std::string_view y_col);

// Shortest decimal that round-trips.
std::string format_number(double v);

// Columns of equal length written as CSV rows.
void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns);

struct SvgOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<std::string> comments;  // emitted as <!-- ... --> lines
  bool diagonal = true;
};

// 600x600 scatter. Both axes share one range so the aspect is unit and
// the diagonal is the 45 degree line.
void write_svg_scatter(std::ostream& out, std::span<const double> x, std::span<const double> y,
                       const SvgOptions& options);

std::string model_to_json(const ProbabilityModel& model);
ProbabilityModel model_from_json(std::string_view text);

std::string spec_to_json(const CopulaSpec& spec);
CopulaSpec spec_from_json(std::string_view text);

}  // namespace mixcop::io

#endif  // MIXCOP_IO_HPP_
