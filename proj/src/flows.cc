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

#include "malice/flows.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "malice/error.h"

namespace malice {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void CheckMass(double beta) {
  if (!std::isfinite(beta) || beta < 0.0) {
    throw Error(ErrorCode::kInvalidMass, "mass must be finite and nonnegative");
  }
}

// Finds the level L with sum_i max(0, (L - b_i) / a_i) = mass over the
// positive-slope links, stopping at the lowest zero-slope intercept.
FlowSolution FillToLevel(std::span<const Link> links, double mass) {
  const std::size_t m = links.size();
  std::vector<double> values(m, 0.0);

  if (mass == 0.0) {
    double lowest = kInf;
    for (const Link& link : links) lowest = std::min(lowest, link.b);
    return {Flow::Make(std::move(values), 0.0), {lowest, {}}};
  }

  double zero_slope_level = kInf;
  std::vector<std::size_t> sloped;
  for (std::size_t i = 0; i < m; ++i) {
    if (links[i].a == 0.0) {
      zero_slope_level = std::min(zero_slope_level, links[i].b);
    } else {
      sloped.push_back(i);
    }
  }
  std::stable_sort(sloped.begin(), sloped.end(),
                   [&](std::size_t i, std::size_t j) {
                     return links[i].b < links[j].b;
                   });

  // On the active prefix, mass(L) = L * inverse_slopes - weighted_intercepts.
  double inverse_slopes = 0.0;
  double weighted_intercepts = 0.0;
  std::size_t active = 0;
  double level = 0.0;
  bool capped_by_zero_slope = false;
  while (true) {
    const double next_breakpoint =
        active < sloped.size() ? links[sloped[active]].b : kInf;
    if (inverse_slopes > 0.0) {
      const double candidate = (mass + weighted_intercepts) / inverse_slopes;
      if (candidate <= std::min(next_breakpoint, zero_slope_level)) {
        level = candidate;
        break;
      }
    }
    if (zero_slope_level <= next_breakpoint) {
      level = zero_slope_level;
      capped_by_zero_slope = true;
      break;
    }
    const Link& link = links[sloped[active]];
    inverse_slopes += 1.0 / link.a;
    weighted_intercepts += link.b / link.a;
    ++active;
  }

  double placed = 0.0;
  for (std::size_t k = 0; k < active; ++k) {
    const Link& link = links[sloped[k]];
    const double v = std::max(0.0, (level - link.b) / link.a);
    values[sloped[k]] = v;
    placed += v;
  }
  if (capped_by_zero_slope) {
    std::vector<std::size_t> ties;
    for (std::size_t i = 0; i < m; ++i) {
      if (links[i].a == 0.0 && links[i].b == zero_slope_level) ties.push_back(i);
    }
    const double share =
        std::max(0.0, mass - placed) / static_cast<double>(ties.size());
    for (std::size_t i : ties) values[i] = share;
  }

  // Push the rounding residue onto the largest entry so the mass is exact.
  const double total = std::accumulate(values.begin(), values.end(), 0.0);
  auto largest = std::max_element(values.begin(), values.end());
  *largest = std::max(0.0, *largest + (mass - total));

  WaterLevel water{level, {}};
  for (std::size_t i = 0; i < m; ++i) {
    if (values[i] > 0.0) water.support.push_back(i);
  }
  return {Flow::Make(std::move(values), mass), std::move(water)};
}

std::vector<Link> DoubledSlopes(std::span<const Link> links) {
  std::vector<Link> doubled(links.begin(), links.end());
  for (Link& link : doubled) link.a *= 2.0;
  return doubled;
}

}  // namespace

FlowSolution WardropFlow(const Instance& inst, double beta) {
  CheckMass(beta);
  return FillToLevel(inst.links(), beta);
}

FlowSolution SystemOptimum(const Instance& inst, double beta) {
  CheckMass(beta);
  return FillToLevel(DoubledSlopes(inst.links()), beta);
}

FlowSolution InducedOptimum(const Instance& inst, const Flow& mal,
                            double beta) {
  CheckMass(beta);
  if (mal.size() != inst.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "MAL flow length does not match the number of links");
  }
  std::vector<Link> induced = DoubledSlopes(inst.links());
  for (std::size_t i = 0; i < induced.size(); ++i) {
    induced[i].b = inst[i].Latency(mal[i]);
  }
  return FillToLevel(induced, beta);
}

double FlowCost(const Instance& inst, const Flow& flow) {
  if (flow.size() != inst.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "flow length does not match the number of links");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < inst.size(); ++k) {
    total += flow[k] * inst[k].Latency(flow[k]);
  }
  return total;
}

}  // namespace malice
