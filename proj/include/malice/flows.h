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

#ifndef MALICE_FLOWS_H_
#define MALICE_FLOWS_H_

#include <cstddef>
#include <vector>

#include "malice/model.h"

namespace malice {

// Common latency (Wardrop) or common marginal cost (optimum) on the used
// links, plus the set of links carrying positive flow.
struct WaterLevel {
  double level = 0.0;
  std::vector<std::size_t> support;
};

struct FlowSolution {
  Flow flow;
  WaterLevel water;
};

// Wardrop flow F_N(beta): every used link has the minimum latency.
//
// Solved by an exact breakpoint sweep over the intercepts. Zero-slope links
// cap the level at their intercept and absorb whatever mass remains, split
// equally among ties. beta == 0 yields the zero flow at level min_i b_i.
// Throws kInvalidMass for negative or non-finite beta.
FlowSolution WardropFlow(const Instance& inst, double beta);

// System optimum F_S(beta), i.e. the Wardrop flow of the instance with
// doubled slopes. The returned level is the common marginal cost.
FlowSolution SystemOptimum(const Instance& inst, double beta);

// Optimum of mass beta under the induced latencies l_i(mal_i + y). Throws
// kDimensionMismatch and kInvalidMass.
FlowSolution InducedOptimum(const Instance& inst, const Flow& mal, double beta);

// sum_k f_k * l_k(f_k). Throws kDimensionMismatch.
double FlowCost(const Instance& inst, const Flow& flow);

}  // namespace malice

#endif  // MALICE_FLOWS_H_
