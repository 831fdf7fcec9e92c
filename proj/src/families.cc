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

#include "malice/families.h"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <utility>
#include <vector>

#include "malice/error.h"
#include "malice/flows.h"
#include "malice/game.h"

namespace malice {

Instance Pigou() {
  const Link links[] = {{0.0, 1.0}, {1.0, 0.0}};
  return Validate(links);
}

Instance Tight(double big_m) {
  if (!std::isfinite(big_m) || big_m <= 0.0) {
    throw Error(ErrorCode::kNonPositiveM, "M must be positive and finite");
  }
  const Link links[] = {{0.0, 1.0}, {big_m, 0.0}};
  return Validate(links);
}

Instance IdenticalLinks(std::size_t m) {
  if (m == 0) throw Error(ErrorCode::kInvalidM, "m must be at least 1");
  return Validate(std::vector<Link>(m, Link{1.0, 0.0}));
}

Instance RandomInstance(std::uint64_t seed, std::size_t m, CoefRange range) {
  if (m == 0) throw Error(ErrorCode::kInvalidM, "m must be at least 1");
  if (!std::isfinite(range.lo) || !std::isfinite(range.hi) || range.lo < 0.0 ||
      range.hi < range.lo) {
    throw Error(ErrorCode::kInvalidRange,
                "coefficient range must satisfy 0 <= lo <= hi < inf");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(range.lo, range.hi);
  std::bernoulli_distribution force_zero(0.1);
  std::vector<Link> links(m);
  for (Link& link : links) {
    link.a = force_zero(rng) ? 0.0 : coef(rng);
    link.b = force_zero(rng) ? 0.0 : coef(rng);
  }
  return Validate(links);
}

NetworkDemoReport NetworkDemo(std::size_t m, double alpha) {
  if (m == 0) throw Error(ErrorCode::kInvalidM, "m must be at least 1");
  CheckAlpha(alpha);
  if (alpha == 1.0) {
    throw Error(ErrorCode::kInvalidAlpha, "alpha must be below 1");
  }
  const Instance parallel = IdenticalLinks(m);
  // The spanning path puts MAL's whole mass on every link at once.
  const Flow mal_load = Flow::Make(std::vector<double>(m, alpha),
                                   alpha * static_cast<double>(m));
  FlowSolution reply = InducedOptimum(parallel, mal_load, 1.0 - alpha);

  NetworkDemoReport report;
  report.m = m;
  report.alpha = alpha;
  report.soc_cost = Cost(parallel, mal_load, reply.flow);
  report.opt_cost = FlowCost(parallel, SystemOptimum(parallel, 1.0).flow);
  report.com_lower_bound = report.soc_cost / ((1.0 - alpha) * report.opt_cost);
  report.closed_form = (1.0 - alpha) + alpha * static_cast<double>(m);
  report.soc_flow = std::move(reply.flow);
  report.note =
      "SOC restricted to the parallel links; MAL routes all of alpha on the "
      "spanning path. Reported value is a lower bound on the cost of malice.";
  return report;
}

std::vector<SweepRow> ComSweep(const Instance& inst,
                               std::span<const double> alphas) {
  for (double alpha : alphas) {
    CheckAlpha(alpha);
    if (alpha == 1.0) {
      throw Error(ErrorCode::kInvalidAlpha, "sweep alphas must be below 1");
    }
  }
  std::vector<std::future<SweepRow>> pending;
  pending.reserve(alphas.size());
  for (double alpha : alphas) {
    pending.push_back(std::async(std::launch::async, [&inst, alpha] {
      const ComReport report = CostOfMalice(inst, alpha);
      return SweepRow{alpha,           report.eq_value, report.com,
                      report.scale_com, report.bound_43, report.bound_scale};
    }));
  }
  std::vector<SweepRow> rows;
  rows.reserve(pending.size());
  for (auto& row : pending) rows.push_back(row.get());
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SweepRow& l, const SweepRow& r) {
                     return l.alpha < r.alpha;
                   });
  return rows;
}

}  // namespace malice
