// Copyright 2026 The Malice Game Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "malice/json_io.h"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "malice/error.h"

namespace malice {
namespace {

using nlohmann::json;

std::string FormatDouble(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  std::string out(buf);
  // Keep integral-valued doubles recognizable as floating point.
  if (out.find_first_of(".eE") == std::string::npos) out += ".0";
  return out;
}

void Emit(const json& node, int indent, int depth, std::string& out) {
  const bool pretty = indent >= 0;
  auto newline = [&](int d) {
    if (!pretty) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (node.type()) {
    case json::value_t::object: {
      if (node.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = node.begin(); it != node.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += json(it.key()).dump();
        out += pretty ? ": " : ":";
        Emit(it.value(), indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case json::value_t::array: {
      if (node.empty()) {
        out += "[]";
        return;
      }
      // Numeric arrays stay on one line.
      bool scalar = true;
      for (const auto& item : node) scalar = scalar && item.is_primitive();
      out += '[';
      bool first = true;
      for (const auto& item : node) {
        if (!first) out += scalar && pretty ? ", " : ",";
        first = false;
        if (!scalar) newline(depth + 1);
        Emit(item, indent, depth + 1, out);
      }
      if (!scalar) newline(depth);
      out += ']';
      return;
    }
    case json::value_t::number_float:
      out += FormatDouble(node.get<double>());
      return;
    default:
      out += node.dump();
      return;
  }
}

json Array(std::span<const double> values) {
  json out = json::array();
  for (double v : values) out.push_back(v);
  return out;
}

}  // namespace

std::string EmitJson(const json& doc, int indent) {
  std::string out;
  Emit(doc, indent, 0, out);
  return out;
}

Instance ParseInstance(std::string_view text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw Error(ErrorCode::kParseError, "instance is not valid JSON");
  }
  if (!doc.is_object() || !doc.contains("links") || !doc["links"].is_array()) {
    throw Error(ErrorCode::kParseError, "expected an object with a \"links\" array");
  }
  std::vector<Link> links;
  for (const json& entry : doc["links"]) {
    if (!entry.is_object() || !entry.contains("a") || !entry.contains("b") ||
        !entry["a"].is_number() || !entry["b"].is_number()) {
      throw Error(ErrorCode::kParseError,
                  "each link must be an object with numeric \"a\" and \"b\"");
    }
    links.push_back({entry["a"].get<double>(), entry["b"].get<double>()});
  }
  return Validate(links);
}

json InstanceToJson(const Instance& inst) {
  json links = json::array();
  for (const Link& link : inst.links()) {
    links.push_back({{"a", link.a}, {"b", link.b}});
  }
  return {{"links", links}};
}

std::string InstanceHash(const Instance& inst) {
  const std::string canonical = EmitJson(InstanceToJson(inst), -1);
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

json FlowToJson(const Flow& flow) { return Array(flow.values()); }

json ProfileToJson(const Profile& profile) {
  return {{"alpha", profile.alpha},
          {"mal", FlowToJson(profile.mal)},
          {"soc", FlowToJson(profile.soc)}};
}

json CertificateToJson(const EquilibriumCertificate& certificate) {
  return {{"mal_residual", certificate.mal_residual},
          {"soc_residual", certificate.soc_residual},
          {"value", certificate.value},
          {"valid", certificate.ValidAt(kCertificateTolerance)}};
}

json ComReportToJson(const ComReport& report) {
  json violations = json::array();
  for (const std::string& v : report.Violations()) violations.push_back(v);
  return {{"alpha", report.alpha},
          {"eq_value", report.eq_value},
          {"nash_cost_1", report.nash_cost_1},
          {"opt_cost_1", report.opt_cost_1},
          {"com", report.com},
          {"bound_43", report.bound_43},
          {"bound_scale", report.bound_scale},
          {"scale_value", report.scale_value},
          {"scale_com", report.scale_com},
          {"lemma2_bound", report.lemma2_bound},
          {"violations", violations}};
}

json BestResponseToJson(const BestResponseResult& result) {
  json out = {{"flow", FlowToJson(result.flow)},
              {"value", result.value},
              {"support_rule", result.support_rule}};
  out["argmax_link"] =
      result.argmax_link ? json(*result.argmax_link) : json(nullptr);
  return out;
}

json MinimaxToJson(const MinimaxReport& report) {
  return {{"gap", report.gap},
          {"bracket", {report.lower, report.upper}},
          {"eq_value", report.eq_value},
          {"bracket_contains_equilibrium", report.bracket_contains_equilibrium},
          {"grid_points", report.points}};
}

json NetworkDemoToJson(const NetworkDemoReport& report) {
  return {{"m", report.m},
          {"alpha", report.alpha},
          {"soc_cost", report.soc_cost},
          {"opt_cost", report.opt_cost},
          {"com_lower_bound", report.com_lower_bound},
          {"closed_form", report.closed_form},
          {"soc_flow", FlowToJson(report.soc_flow)},
          {"note", report.note}};
}

json TolerancesJson() {
  return {{"clamp", kClampTolerance},
          {"mass", kMassTolerance},
          {"certificate", kCertificateTolerance},
          {"certificate_failure", kCertificateFailureThreshold},
          {"bound", kBoundTolerance}};
}

}  // namespace malice
