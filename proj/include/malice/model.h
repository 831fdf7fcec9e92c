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

#ifndef MALICE_MODEL_H_
#define MALICE_MODEL_H_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace malice {

// Flow entries in [-kClampTolerance, 0) are treated as zero.
inline constexpr double kClampTolerance = 1e-12;
// Relative tolerance on |sum(values) - mass|, scaled by max(1, mass).
inline constexpr double kMassTolerance = 1e-9;
// Target bound for equilibrium certificate residuals.
inline constexpr double kCertificateTolerance = 1e-7;
// Residuals above this indicate a solver bug and raise kCertificateFailure.
inline constexpr double kCertificateFailureThreshold = 1e-6;
// Slack used when checking the analytic bounds on equilibrium values.
inline constexpr double kBoundTolerance = 1e-9;

// Linear latency l(z) = a * z + b.
struct Link {
  double a = 0.0;
  double b = 0.0;

  double Latency(double load) const { return a * load + b; }
  bool operator==(const Link&) const = default;
};

// m >= 1 parallel links with finite, nonnegative latency coefficients.
// Only constructible through Validate().
class Instance {
 public:
  std::size_t size() const { return links_.size(); }
  std::span<const Link> links() const { return links_; }
  const Link& operator[](std::size_t i) const { return links_[i]; }

 private:
  explicit Instance(std::vector<Link> links) : links_(std::move(links)) {}
  friend Instance Validate(std::span<const Link> raw_links);

  std::vector<Link> links_;
};

// Throws kEmptyInstance, kNonFiniteCoefficient or kNegativeCoefficient.
Instance Validate(std::span<const Link> raw_links);

// A nonnegative allocation of absolute link loads with a declared total mass.
class Flow {
 public:
  // Clamps entries in [-kClampTolerance, 0) to zero. Throws kInvalidFlow on
  // non-finite or more negative entries, and when the entries do not sum to
  // `mass` within kMassTolerance * max(1, mass). Throws kInvalidMass for a
  // negative or non-finite mass.
  static Flow Make(std::vector<double> values, double mass);
  static Flow Zero(std::size_t m);

  // Empty flow over zero links.
  Flow() = default;

  std::size_t size() const { return values_.size(); }
  double mass() const { return mass_; }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

  // Returns a flow with every entry and the mass multiplied by `factor` >= 0.
  Flow Scaled(double factor) const;

 private:
  Flow(std::vector<double> values, double mass)
      : values_(std::move(values)), mass_(mass) {}

  std::vector<double> values_;
  double mass_ = 0.0;
};

// A strategy pair of the malice game: MAL carries alpha, SOC carries 1-alpha.
struct Profile {
  Flow mal;
  Flow soc;
  double alpha = 0.0;

  // Throws kInvalidAlpha, kDimensionMismatch, or kInvalidMass when the declared
  // masses are not (alpha, 1 - alpha).
  static Profile Make(Flow mal, Flow soc, double alpha);
};

struct EquilibriumCertificate {
  double mal_residual = 0.0;
  double soc_residual = 0.0;
  double value = 0.0;

  bool ValidAt(double tolerance) const {
    return mal_residual <= tolerance && soc_residual <= tolerance;
  }
};

// Cost-of-Malice summary for one (instance, alpha) pair.
struct ComReport {
  double alpha = 0.0;
  double eq_value = 0.0;      // SOC cost at the pure equilibrium.
  double nash_cost_1 = 0.0;   // C_N(1), cost of the unit Wardrop flow.
  double opt_cost_1 = 0.0;    // C_S(1), cost of the unit system optimum.
  double com = 0.0;           // eq_value / ((1 - alpha) * opt_cost_1).
  double bound_43 = 4.0 / 3.0;
  double bound_scale = 1.0;   // 1 + alpha / 2.
  double scale_value = 0.0;   // SOC cost under SCALE against MAL's best reply.
  double scale_com = 0.0;     // scale_value / ((1 - alpha) * opt_cost_1).
  double lemma2_bound = 0.0;  // (1 - alpha) * nash_cost_1.

  // Human-readable descriptions of every violated bound; empty when sound.
  std::vector<std::string> Violations() const;
};

// Cost of SOC's flow y while MAL plays x: sum_k y_k * l_k(x_k + y_k).
// Throws kDimensionMismatch.
double Cost(const Instance& inst, const Flow& mal, const Flow& soc);

// Throws kInvalidAlpha unless alpha is finite and in [0, 1].
void CheckAlpha(double alpha);

}  // namespace malice

#endif  // MALICE_MODEL_H_
