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

#include "malice/game.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "malice/error.h"
#include "malice/flows.h"

namespace malice {
namespace {

void CheckLength(const Instance& inst, const Flow& flow) {
  if (flow.size() != inst.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "flow length does not match the number of links");
  }
}

// Lowest index maximizing a_k * y_k.
std::size_t ArgmaxWeightedLoad(const Instance& inst, const Flow& soc) {
  std::size_t best = 0;
  double best_load = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < inst.size(); ++k) {
    const double load = inst[k].a * soc[k];
    if (load > best_load) {
      best_load = load;
      best = k;
    }
  }
  return best;
}

Flow Concentrated(std::size_t m, std::size_t link, double mass) {
  std::vector<double> values(m, 0.0);
  values[link] = mass;
  return Flow::Make(std::move(values), mass);
}

bool Close(double lhs, double rhs) {
  return std::abs(lhs - rhs) <=
         kBoundTolerance * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

}  // namespace

BestResponseResult MalBestResponse(const Instance& inst, const Flow& soc,
                                   double alpha) {
  CheckAlpha(alpha);
  CheckLength(inst, soc);
  if (std::abs(soc.mass() - (1.0 - alpha)) > kMassTolerance) {
    throw Error(ErrorCode::kInvalidMass, "SOC flow must carry 1 - alpha");
  }
  const std::size_t link = ArgmaxWeightedLoad(inst, soc);
  Flow mal = Concentrated(inst.size(), link, alpha);
  const double value = Cost(inst, mal, soc);
  return {std::move(mal), value, "argmax", link};
}

BestResponseResult SocBestResponse(const Instance& inst, const Flow& mal) {
  CheckLength(inst, mal);
  CheckAlpha(mal.mass());
  FlowSolution reply = InducedOptimum(inst, mal, 1.0 - mal.mass());
  const double value = Cost(inst, mal, reply.flow);
  return {std::move(reply.flow), value, "induced-optimum", std::nullopt};
}

double CheckMalBestResponse(const Instance& inst, const Flow& mal,
                            const Flow& soc, double support_tol) {
  CheckLength(inst, mal);
  CheckLength(inst, soc);
  double highest = -std::numeric_limits<double>::infinity();
  double lowest_supported = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < inst.size(); ++k) {
    const double load = inst[k].a * soc[k];
    highest = std::max(highest, load);
    if (mal[k] > support_tol) lowest_supported = std::min(lowest_supported, load);
  }
  if (std::isinf(lowest_supported)) return 0.0;
  return std::max(0.0, highest - lowest_supported);
}

double CheckSocBestResponse(const Instance& inst, const Flow& mal,
                            const Flow& soc, double support_tol) {
  CheckLength(inst, mal);
  CheckLength(inst, soc);
  const std::size_t m = inst.size();
  std::vector<double> marginal(m);
  for (std::size_t k = 0; k < m; ++k) {
    marginal[k] = 2.0 * inst[k].a * soc[k] + inst[k].Latency(mal[k]);
  }
  const double cheapest = *std::min_element(marginal.begin(), marginal.end());
  double residual = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (soc[i] > support_tol) residual = std::max(residual, marginal[i] - cheapest);
  }
  return residual;
}

EquilibriumResult PureEquilibrium(const Instance& inst, double alpha) {
  CheckAlpha(alpha);
  Flow mal = WardropFlow(inst, alpha).flow;
  Flow soc = SocBestResponse(inst, mal).flow;

  EquilibriumCertificate certificate;
  certificate.mal_residual =
      CheckMalBestResponse(inst, mal, soc, kClampTolerance);
  certificate.soc_residual =
      CheckSocBestResponse(inst, mal, soc, kClampTolerance);
  certificate.value = Cost(inst, mal, soc);
  if (!certificate.ValidAt(kCertificateFailureThreshold)) {
    throw Error(ErrorCode::kCertificateFailure,
                "equilibrium residuals " +
                    std::to_string(certificate.mal_residual) + ", " +
                    std::to_string(certificate.soc_residual));
  }
  return {Profile::Make(std::move(mal), std::move(soc), alpha), certificate};
}

BestResponseResult EvasiveResponse(const Instance& inst, const Flow& mal) {
  CheckLength(inst, mal);
  CheckAlpha(mal.mass());
  const Flow nash = WardropFlow(inst, 1.0).flow;
  const double target = 1.0 - mal.mass();

  std::vector<double> values(inst.size(), 0.0);
  double remaining = target;
  std::optional<std::size_t> last_filled;
  for (std::size_t i = 0; i < inst.size() && remaining > 0.0; ++i) {
    if (mal[i] >= nash[i]) continue;
    const double take = std::min(remaining, nash[i] - mal[i]);
    values[i] = take;
    remaining -= take;
    last_filled = i;
  }
  // Capacity off the saturated set covers the target up to rounding.
  if (remaining > 0.0 && last_filled) values[*last_filled] += remaining;

  Flow soc = Flow::Make(std::move(values), target);
  const double value = Cost(inst, mal, soc);
  return {std::move(soc), value, "evasive", std::nullopt};
}

double ScaleInnerTerm(const Instance& inst) {
  const Flow optimum = SystemOptimum(inst, 1.0).flow;
  const std::size_t top = ArgmaxWeightedLoad(inst, optimum);
  double term = inst[top].a * optimum[top];
  for (std::size_t k = 0; k < inst.size(); ++k) term += inst[k].b * optimum[k];
  return term;
}

BestResponseResult ScaleStrategy(const Instance& inst, double alpha) {
  CheckAlpha(alpha);
  const Flow optimum = SystemOptimum(inst, 1.0).flow;
  Flow soc = optimum.Scaled(1.0 - alpha);
  BestResponseResult mal = MalBestResponse(inst, soc, alpha);

  const double opt_cost = FlowCost(inst, optimum);
  const double closed_form = (1.0 - alpha) * (1.0 - alpha) * opt_cost +
                             alpha * (1.0 - alpha) * ScaleInnerTerm(inst);
  if (!Close(mal.value, closed_form)) {
    throw Error(ErrorCode::kCertificateFailure,
                "SCALE value " + std::to_string(mal.value) +
                    " disagrees with closed form " +
                    std::to_string(closed_form));
  }
  return {std::move(soc), mal.value, "scale", mal.argmax_link};
}

ComReport CostOfMalice(const Instance& inst, double alpha) {
  CheckAlpha(alpha);
  if (alpha == 1.0) {
    throw Error(ErrorCode::kInvalidAlpha,
                "cost of malice is undefined when SOC carries no mass");
  }
  ComReport report;
  report.alpha = alpha;
  report.opt_cost_1 = FlowCost(inst, SystemOptimum(inst, 1.0).flow);
  if (report.opt_cost_1 <= 0.0) {
    throw Error(ErrorCode::kDegenerateInstance, "C_S(1) is zero");
  }
  report.nash_cost_1 = FlowCost(inst, WardropFlow(inst, 1.0).flow);
  report.eq_value = PureEquilibrium(inst, alpha).certificate.value;
  report.scale_value = ScaleStrategy(inst, alpha).value;

  const double normalizer = (1.0 - alpha) * report.opt_cost_1;
  report.com = report.eq_value / normalizer;
  report.scale_com = report.scale_value / normalizer;
  report.bound_43 = 4.0 / 3.0;
  report.bound_scale = 1.0 + alpha / 2.0;
  report.lemma2_bound = (1.0 - alpha) * report.nash_cost_1;
  return report;
}

double BestComBound(double alpha) {
  CheckAlpha(alpha);
  return std::min(4.0 / 3.0, 1.0 + alpha / 2.0);
}

}  // namespace malice
