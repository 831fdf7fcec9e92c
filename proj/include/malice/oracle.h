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

#ifndef MALICE_ORACLE_H_
#define MALICE_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "malice/model.h"

namespace malice {

// Each player's simplex is discretized into multiples of mass / resolution.
struct GridSpec {
  int resolution = 100;
  std::uint64_t max_points = 2'000'000;
};

// Number of compositions of `resolution` into `parts` nonnegative parts,
// saturating at UINT64_MAX.
std::uint64_t GridPointCount(int resolution, std::size_t parts);

struct GridValue {
  double value = 0.0;
  // Lexicographically smallest grid point attaining `value`.
  Flow argbest;
  std::uint64_t points = 0;
};

// min over gridded SOC plays of MAL's exact best-response cost. Upper bound
// on the game value. Throws kGridTooLarge, kInvalidAlpha, kInvalidRange.
GridValue SocMalValue(const Instance& inst, double alpha, const GridSpec& grid);

// max over gridded MAL plays of SOC's exact best-response cost. Lower bound
// on the game value.
GridValue MalSocValue(const Instance& inst, double alpha, const GridSpec& grid);

struct MinimaxReport {
  double gap = 0.0;      // upper - lower; >= 0 up to rounding.
  double lower = 0.0;    // MalSocValue.
  double upper = 0.0;    // SocMalValue.
  double eq_value = 0.0; // pure-equilibrium value for comparison.
  bool bracket_contains_equilibrium = false;
  std::uint64_t points = 0;  // grid points per direction.
};

MinimaxReport MinimaxGap(const Instance& inst, double alpha,
                         const GridSpec& grid);

}  // namespace malice

#endif  // MALICE_ORACLE_H_
