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

#ifndef MALICE_GAME_H_
#define MALICE_GAME_H_

#include <cstddef>
#include <optional>
#include <string>

#include "malice/model.h"

namespace malice {

struct BestResponseResult {
  Flow flow;
  // Cost to SOC under the profile formed by `flow` and the opponent's play.
  double value = 0.0;
  // "argmax", "induced-optimum", "evasive" or "scale".
  std::string support_rule;
  // For MAL responses (and SCALE): the link receiving all of MAL's mass.
  std::optional<std::size_t> argmax_link;
};

struct EquilibriumResult {
  Profile profile;
  EquilibriumCertificate certificate;
};

// MAL's reply to `soc`: all alpha mass on the lowest-index link maximizing
// a_k * y_k. Throws kInvalidAlpha, kDimensionMismatch, kInvalidMass.
BestResponseResult MalBestResponse(const Instance& inst, const Flow& soc,
                                   double alpha);

// SOC's reply to `mal`: the optimum of mass 1 - alpha under the induced
// latencies l_i(mal_i + y). alpha is the declared mass of `mal`.
BestResponseResult SocBestResponse(const Instance& inst, const Flow& mal);

// max_j a_j y_j - min_{i : x_i > support_tol} a_i y_i, or 0 without support.
double CheckMalBestResponse(const Instance& inst, const Flow& mal,
                            const Flow& soc, double support_tol);

// Largest violation of the induced marginal-cost ordering over links with
// y_i > support_tol, floored at zero.
double CheckSocBestResponse(const Instance& inst, const Flow& mal,
                            const Flow& soc, double support_tol);

// Pure equilibrium with MAL playing the Wardrop flow of mass alpha and SOC
// best-responding. Throws kInvalidAlpha, and kCertificateFailure if either
// residual exceeds kCertificateFailureThreshold.
EquilibriumResult PureEquilibrium(const Instance& inst, double alpha);

// SOC play with cost at most (1 - alpha) * C_N(1) against `mal`: nothing on
// links where mal_i >= s_i (s the unit Wardrop flow), elsewhere fill up to
// s_i - mal_i in increasing link order.
BestResponseResult EvasiveResponse(const Instance& inst, const Flow& mal);

// a_1 y*_1 + sum_k b_k y*_k for y* = F_S(1), where link 1 maximizes a_k y*_k.
double ScaleInnerTerm(const Instance& inst);

// SOC plays (1 - alpha) * F_S(1); value is the cost against MAL's best reply.
// The value is cross-checked against the closed form
// (1-alpha)^2 C_S(1) + alpha (1-alpha) ScaleInnerTerm and a mismatch raises
// kCertificateFailure. Throws kInvalidAlpha.
BestResponseResult ScaleStrategy(const Instance& inst, double alpha);

// Throws kInvalidAlpha for alpha outside [0, 1) and kDegenerateInstance when
// C_S(1) == 0.
ComReport CostOfMalice(const Instance& inst, double alpha);

// min(4/3, 1 + alpha/2): the tighter of the two Cost-of-Malice bounds.
double BestComBound(double alpha);

}  // namespace malice

#endif  // MALICE_GAME_H_
