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

#include "malice/model.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "malice/error.h"

namespace malice {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInstance: return "EmptyInstance";
    case ErrorCode::kNegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::kNonFiniteCoefficient: return "NonFiniteCoefficient";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInvalidFlow: return "InvalidFlow";
    case ErrorCode::kInvalidMass: return "InvalidMass";
    case ErrorCode::kInvalidAlpha: return "InvalidAlpha";
    case ErrorCode::kDegenerateInstance: return "DegenerateInstance";
    case ErrorCode::kCertificateFailure: return "CertificateFailure";
    case ErrorCode::kGridTooLarge: return "GridTooLarge";
    case ErrorCode::kNonPositiveM: return "NonPositiveM";
    case ErrorCode::kInvalidM: return "InvalidM";
    case ErrorCode::kInvalidRange: return "InvalidRange";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUsageError: return "UsageError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

Instance Validate(std::span<const Link> raw_links) {
  if (raw_links.empty()) {
    throw Error(ErrorCode::kEmptyInstance, "instance has no links");
  }
  for (std::size_t i = 0; i < raw_links.size(); ++i) {
    const Link& link = raw_links[i];
    if (!std::isfinite(link.a) || !std::isfinite(link.b)) {
      throw Error(ErrorCode::kNonFiniteCoefficient,
                  "link " + std::to_string(i) + " has a non-finite coefficient");
    }
    if (link.a < 0.0 || link.b < 0.0) {
      throw Error(ErrorCode::kNegativeCoefficient,
                  "link " + std::to_string(i) + " has a negative coefficient");
    }
  }
  return Instance(std::vector<Link>(raw_links.begin(), raw_links.end()));
}

Flow Flow::Make(std::vector<double> values, double mass) {
  if (!std::isfinite(mass) || mass < 0.0) {
    throw Error(ErrorCode::kInvalidMass, "mass must be finite and nonnegative");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    double& v = values[i];
    if (!std::isfinite(v) || v < -kClampTolerance) {
      throw Error(ErrorCode::kInvalidFlow,
                  "entry " + std::to_string(i) + " is negative or non-finite");
    }
    if (v < 0.0) v = 0.0;
    sum += v;
  }
  if (std::abs(sum - mass) > kMassTolerance * std::max(1.0, mass)) {
    throw Error(ErrorCode::kInvalidFlow,
                "entries sum to " + std::to_string(sum) +
                    " but declared mass is " + std::to_string(mass));
  }
  return Flow(std::move(values), mass);
}

Flow Flow::Zero(std::size_t m) { return Flow(std::vector<double>(m, 0.0), 0.0); }

Flow Flow::Scaled(double factor) const {
  if (!std::isfinite(factor) || factor < 0.0) {
    throw Error(ErrorCode::kInvalidMass, "scale factor must be nonnegative");
  }
  std::vector<double> scaled(values_);
  for (double& v : scaled) v *= factor;
  return Flow(std::move(scaled), mass_ * factor);
}

void CheckAlpha(double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0 || alpha > 1.0) {
    throw Error(ErrorCode::kInvalidAlpha, "alpha must lie in [0, 1]");
  }
}

Profile Profile::Make(Flow mal, Flow soc, double alpha) {
  CheckAlpha(alpha);
  if (mal.size() != soc.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "MAL and SOC flows have different lengths");
  }
  if (std::abs(mal.mass() - alpha) > kMassTolerance ||
      std::abs(soc.mass() - (1.0 - alpha)) > kMassTolerance) {
    throw Error(ErrorCode::kInvalidMass,
                "profile masses must be (alpha, 1 - alpha)");
  }
  return Profile{std::move(mal), std::move(soc), alpha};
}

double Cost(const Instance& inst, const Flow& mal, const Flow& soc) {
  if (mal.size() != inst.size() || soc.size() != inst.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "flow length does not match the number of links");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < inst.size(); ++k) {
    total += soc[k] * inst[k].Latency(mal[k] + soc[k]);
  }
  return total;
}

std::vector<std::string> ComReport::Violations() const {
  std::vector<std::string> out;
  auto check = [&out](double lhs, double rhs, const char* what) {
    if (lhs > rhs + kBoundTolerance * std::max(1.0, std::abs(rhs))) {
      out.push_back(std::string(what) + ": " + std::to_string(lhs) + " > " +
                    std::to_string(rhs));
    }
  };
  check(eq_value, lemma2_bound, "eq_value <= (1-alpha) C_N(1)");
  check(com, bound_43, "com <= 4/3");
  check(com, bound_scale, "com <= 1 + alpha/2");
  check(scale_com, bound_scale, "scale_com <= 1 + alpha/2");
  check(eq_value, scale_value, "eq_value <= scale_value");
  return out;
}

}  // namespace malice
