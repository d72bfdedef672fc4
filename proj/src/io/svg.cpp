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
#include <cstdio>
#include <limits>
#include <ostream>

#include "mixcop/error.hpp"
#include "mixcop/io.hpp"

namespace mixcop::io {
namespace {

constexpr double kSize = 600.0;
constexpr double kMargin = 60.0;
constexpr double kInner = kSize - 2.0 * kMargin;

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

// Comments may not contain "--".
std::string comment_text(std::string_view s) {
  std::string out(s);
  for (std::size_t p; (p = out.find("--")) != std::string::npos;) out.replace(p, 2, "- -");
  return out;
}

std::string fixed(double v, int digits = 2) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

void write_svg_scatter(std::ostream& out, std::span<const double> x, std::span<const double> y,
                       const SvgOptions& options) {
  if (x.size() != y.size()) throw ValidationError("svg scatter: x and y differ in length");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) continue;
    lo = std::min({lo, x[i], y[i]});
    hi = std::max({hi, x[i], y[i]});
  }
  if (!(lo < hi)) {
    lo = std::isfinite(lo) ? lo - 1.0 : 0.0;
    hi = lo + 2.0;
  }
  const double pad = 0.05 * (hi - lo);
  lo -= pad;
  hi += pad;
  const double scale = kInner / (hi - lo);
  auto px = [&](double v) { return kMargin + (v - lo) * scale; };
  auto py = [&](double v) { return kSize - kMargin - (v - lo) * scale; };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  for (const auto& c : options.comments) out << "<!-- " << comment_text(c) << " -->\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"600\" height=\"600\" fill=\"white\"/>\n";
  out << "<rect x=\"" << fixed(kMargin) << "\" y=\"" << fixed(kMargin) << "\" width=\"" << fixed(kInner)
      << "\" height=\"" << fixed(kInner) << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double v = lo + (hi - lo) * t / 4.0;
    out << "<text x=\"" << fixed(px(v)) << "\" y=\"" << fixed(kSize - kMargin + 18)
        << "\" font-size=\"11\" text-anchor=\"middle\">" << fixed(v) << "</text>\n";
    out << "<text x=\"" << fixed(kMargin - 6) << "\" y=\"" << fixed(py(v) + 4)
        << "\" font-size=\"11\" text-anchor=\"end\">" << fixed(v) << "</text>\n";
  }
  if (options.diagonal) {
    out << "<line x1=\"" << fixed(px(lo)) << "\" y1=\"" << fixed(py(lo)) << "\" x2=\"" << fixed(px(hi))
        << "\" y2=\"" << fixed(py(hi)) << "\" stroke=\"red\" stroke-width=\"1\"/>\n";
  }
  out << "<g fill=\"none\" stroke=\"steelblue\">\n";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) continue;
    out << "<circle cx=\"" << fixed(px(x[i])) << "\" cy=\"" << fixed(py(y[i])) << "\" r=\"2\"/>\n";
  }
  out << "</g>\n";
  if (!options.title.empty()) {
    out << "<text x=\"300\" y=\"30\" font-size=\"15\" text-anchor=\"middle\">" << escape(options.title)
        << "</text>\n";
  }
  if (!options.x_label.empty()) {
    out << "<text x=\"300\" y=\"585\" font-size=\"13\" text-anchor=\"middle\">" << escape(options.x_label)
        << "</text>\n";
  }
  if (!options.y_label.empty()) {
    out << "<text x=\"15\" y=\"300\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 15 300)\">"
        << escape(options.y_label) << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace mixcop::io
