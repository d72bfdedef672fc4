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


#include "json.hpp"
#include "mixcop/error.hpp"
#include "mixcop/io.hpp"

namespace mixcop::io {
namespace {

using nlohmann::json;

const char* component_name(ComponentKind c) {
  switch (c) {
    case ComponentKind::Normal: return "normal";
    case ComponentKind::StudentT: return "t";
    case ComponentKind::SkewNormal: return "skew-normal";
  }
  return "normal";
}

ComponentKind parse_component(const std::string& s) {
  if (s == "normal") return ComponentKind::Normal;
  if (s == "t") return ComponentKind::StudentT;
  if (s == "skew-normal") return ComponentKind::SkewNormal;
  throw ValidationError("unknown mixture component '" + s + "'");
}

const char* margin_name(YMargin m) {
  switch (m) {
    case YMargin::Normal: return "normal";
    case YMargin::StudentT: return "t";
    case YMargin::ExtremeValue: return "ev";
  }
  return "normal";
}

YMargin parse_margin(const std::string& s) {
  if (s == "normal") return YMargin::Normal;
  if (s == "t") return YMargin::StudentT;
  if (s == "ev") return YMargin::ExtremeValue;
  throw ValidationError("unknown regression margin '" + s + "'");
}

std::vector<double> doubles(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  return j.at(key).get<std::vector<double>>();
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string model_to_json(const ProbabilityModel& model) {
  json j;
  if (const auto* m = std::get_if<MixtureModel>(&model)) {
    j["kind"] = "mixture";
    j["component"] = component_name(m->component);
    j["pi"] = m->pi;
    j["mu"] = m->mu;
    if (!m->sigma.empty()) j["sigma"] = m->sigma;
    if (!m->nu.empty()) j["nu"] = m->nu;
    if (!m->alpha.empty()) j["alpha"] = m->alpha;
  } else {
    const auto& r = std::get<RegressionModel>(model);
    j["kind"] = "regression";
    j["margin"] = margin_name(r.margin);
    if (r.margin == YMargin::StudentT) j["nu"] = r.nu;
    j["link"] = r.link == Link::Probit ? "probit" : "logit";
    j["a"] = r.a;
    j["b"] = r.b;
  }
  return j.dump(2);
}

ProbabilityModel model_from_json(std::string_view text) {
  const json j = parse(text);
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "mixture") {
      MixtureModel m;
      m.component = parse_component(j.value("component", std::string("normal")));
      m.pi = doubles(j, "pi");
      m.mu = doubles(j, "mu");
      m.sigma = doubles(j, "sigma");
      m.nu = doubles(j, "nu");
      m.alpha = doubles(j, "alpha");
      ProbabilityModel out = m;
      validate_model(out);
      return out;
    }
    if (kind == "regression") {
      RegressionModel r;
      r.margin = parse_margin(j.value("margin", std::string("normal")));
      r.nu = j.value("nu", 3.0);
      const std::string link = j.value("link", std::string("probit"));
      if (link != "probit" && link != "logit") throw ValidationError("unknown link '" + link + "'");
      r.link = link == "probit" ? Link::Probit : Link::Logit;
      r.a = j.at("a").get<double>();
      r.b = doubles(j, "b");
      ProbabilityModel out = r;
      validate_model(out);
      return out;
    }
    throw ValidationError("unknown model kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed model: ") + e.what());
  }
}

std::string spec_to_json(const CopulaSpec& spec) {
  json j;
  j["family"] = family_name(spec.family());
  j["theta"] = spec.theta();
  return j.dump(2);
}

CopulaSpec spec_from_json(std::string_view text) {
  const json j = parse(text);
  try {
    return CopulaSpec(parse_family(j.at("family").get<std::string>()), doubles(j, "theta"));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed copula spec: ") + e.what());
  }
}

}  // namespace mixcop::io
