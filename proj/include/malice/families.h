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

#ifndef MALICE_FAMILIES_H_
#define MALICE_FAMILIES_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "malice/model.h"

namespace malice {

// Links (0, 1) and (1, 0): constant latency 1 next to l(z) = z.
Instance Pigou();

// Links (0, 1) and (M, 0). Throws kNonPositiveM unless M > 0 and finite.
Instance Tight(double big_m);

// Parallel part of the network demonstrator: m links with l(z) = z.
// Throws kInvalidM for m == 0.
Instance IdenticalLinks(std::size_t m);

struct CoefRange {
  double lo = 0.0;
  double hi = 10.0;
};

// Coefficients uniform in `range`, each forced to exactly 0 with probability
// 0.1. Deterministic per seed. Throws kInvalidM, kInvalidRange.
Instance RandomInstance(std::uint64_t seed, std::size_t m, CoefRange range);

// m identical links l(z) = z plus one s-t path that traverses all of them.
// MAL sends all alpha along the spanning path, loading every link by alpha,
// and SOC answers on the parallel links alone.
struct NetworkDemoReport {
  std::size_t m = 0;
  double alpha = 0.0;
  double soc_cost = 0.0;         // SOC's best-response cost.
  double opt_cost = 0.0;         // C_S(1) on the parallel links.
  double com_lower_bound = 0.0;  // soc_cost / ((1 - alpha) * opt_cost).
  double closed_form = 0.0;      // (1 - alpha) + alpha * m.
  Flow soc_flow;
  std::string note;
};

// Throws kInvalidM for m == 0 and kInvalidAlpha outside [0, 1).
NetworkDemoReport NetworkDemo(std::size_t m, double alpha);

struct SweepRow {
  double alpha = 0.0;
  double eq_value = 0.0;
  double com = 0.0;
  double scale_com = 0.0;
  double bound_43 = 0.0;
  double bound_scale = 0.0;
};

// One CostOfMalice evaluation per alpha, returned sorted by alpha.
std::vector<SweepRow> ComSweep(const Instance& inst,
                               std::span<const double> alphas);

}  // namespace malice

#endif  // MALICE_FAMILIES_H_
