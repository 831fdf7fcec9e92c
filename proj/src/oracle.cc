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

#include "malice/oracle.h"

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "malice/error.h"
#include "malice/game.h"

namespace malice {
namespace {

void CheckGrid(const GridSpec& grid, std::size_t parts) {
  if (grid.resolution < 1) {
    throw Error(ErrorCode::kInvalidRange, "grid resolution must be >= 1");
  }
  const std::uint64_t points = GridPointCount(grid.resolution, parts);
  if (points > grid.max_points) {
    throw Error(ErrorCode::kGridTooLarge,
                std::to_string(points) + " grid points exceed the cap of " +
                    std::to_string(grid.max_points));
  }
}

// Visits compositions of n into parts.size() parts in lexicographic order.
void ForEachComposition(int n, std::vector<int>& parts,
                        const std::function<void(const std::vector<int>&)>& fn,
                        std::size_t index = 0, int left = -1) {
  if (left < 0) left = n;
  if (index + 1 == parts.size()) {
    parts[index] = left;
    fn(parts);
    return;
  }
  for (int c = 0; c <= left; ++c) {
    parts[index] = c;
    ForEachComposition(n, parts, fn, index + 1, left - c);
  }
}

Flow GridFlow(const std::vector<int>& parts, int n, double mass) {
  std::vector<double> values(parts.size());
  for (std::size_t k = 0; k < parts.size(); ++k) {
    values[k] = mass * (static_cast<double>(parts[k]) / static_cast<double>(n));
  }
  return Flow::Make(std::move(values), mass);
}

// Scans the grid over a player's simplex of `mass`; `better` decides whether
// a candidate strictly improves on the incumbent, so ties keep the
// lexicographically first point.
template <typename Evaluate, typename Better>
GridValue ScanGrid(const Instance& inst, double mass, const GridSpec& grid,
                   Evaluate evaluate, Better better) {
  CheckGrid(grid, inst.size());
  std::vector<int> parts(inst.size(), 0);
  bool have = false;
  GridValue best{0.0, Flow::Zero(inst.size()), 0};
  ForEachComposition(grid.resolution, parts, [&](const std::vector<int>& c) {
    Flow candidate = GridFlow(c, grid.resolution, mass);
    const double value = evaluate(candidate);
    ++best.points;
    if (!have || better(value, best.value)) {
      have = true;
      best.value = value;
      best.argbest = std::move(candidate);
    }
  });
  return best;
}

}  // namespace

std::uint64_t GridPointCount(int resolution, std::size_t parts) {
  if (resolution < 0 || parts == 0) return 0;
  // C(n + m - 1, m - 1) computed incrementally; each prefix is itself a
  // binomial coefficient so the division is exact.
  const std::uint64_t n = static_cast<std::uint64_t>(resolution);
  std::uint64_t count = 1;
  for (std::uint64_t i = 1; i < parts; ++i) {
    const std::uint64_t factor = n + i;
    if (count > std::numeric_limits<std::uint64_t>::max() / factor) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    count = count * factor / i;
  }
  return count;
}

GridValue SocMalValue(const Instance& inst, double alpha,
                      const GridSpec& grid) {
  CheckAlpha(alpha);
  return ScanGrid(
      inst, 1.0 - alpha, grid,
      [&](const Flow& soc) { return MalBestResponse(inst, soc, alpha).value; },
      [](double candidate, double incumbent) { return candidate < incumbent; });
}

GridValue MalSocValue(const Instance& inst, double alpha,
                      const GridSpec& grid) {
  CheckAlpha(alpha);
  return ScanGrid(
      inst, alpha, grid,
      [&](const Flow& mal) { return SocBestResponse(inst, mal).value; },
      [](double candidate, double incumbent) { return candidate > incumbent; });
}

MinimaxReport MinimaxGap(const Instance& inst, double alpha,
                         const GridSpec& grid) {
  const GridValue upper = SocMalValue(inst, alpha, grid);
  const GridValue lower = MalSocValue(inst, alpha, grid);
  MinimaxReport report;
  report.upper = upper.value;
  report.lower = lower.value;
  report.gap = upper.value - lower.value;
  report.points = upper.points;
  report.eq_value = PureEquilibrium(inst, alpha).certificate.value;
  report.bracket_contains_equilibrium =
      report.eq_value >= report.lower - kBoundTolerance &&
      report.eq_value <= report.upper + kBoundTolerance;
  return report;
}

}  // namespace malice
