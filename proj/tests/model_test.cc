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

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "malice/error.h"
#include "malice/families.h"
#include "malice/json_io.h"

namespace malice {
namespace {

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected malice::Error";
  return ErrorCode::kUsageError;
}

Flow F(std::vector<double> v) {
  double mass = 0.0;
  for (double x : v) mass += x;
  return Flow::Make(std::move(v), mass);
}

TEST(ValidateTest, AcceptsWellFormedLinks) {
  const std::vector<Link> raw = {{1, 0}, {0, 1}};
  const Instance inst = Validate(raw);
  EXPECT_EQ(inst.size(), 2u);
  EXPECT_EQ(inst[0], (Link{1, 0}));
}

TEST(ValidateTest, RejectsBadInput) {
  EXPECT_EQ(CodeOf([] { Validate(std::vector<Link>{}); }),
            ErrorCode::kEmptyInstance);
  EXPECT_EQ(CodeOf([] { Validate(std::vector<Link>{{-1, 0}}); }),
            ErrorCode::kNegativeCoefficient);
  EXPECT_EQ(CodeOf([] { Validate(std::vector<Link>{{0, -1e-300}}); }),
            ErrorCode::kNegativeCoefficient);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_EQ(CodeOf([&] { Validate(std::vector<Link>{{nan, 0}}); }),
            ErrorCode::kNonFiniteCoefficient);
  EXPECT_EQ(CodeOf([&] { Validate(std::vector<Link>{{1, inf}}); }),
            ErrorCode::kNonFiniteCoefficient);
}

TEST(FlowTest, ClampsTinyNegatives) {
  const Flow f = Flow::Make({-1e-13, 1.0}, 1.0);
  EXPECT_EQ(f[0], 0.0);
  EXPECT_FALSE(std::signbit(f[0]));
}

TEST(FlowTest, RejectsLargeNegativesAndMassMismatch) {
  EXPECT_EQ(CodeOf([] { Flow::Make({-1e-9, 1.0}, 1.0); }),
            ErrorCode::kInvalidFlow);
  EXPECT_EQ(CodeOf([] { Flow::Make({0.5, 0.4}, 1.0); }),
            ErrorCode::kInvalidFlow);
  EXPECT_EQ(CodeOf([] { Flow::Make({0.5}, -0.5); }), ErrorCode::kInvalidMass);
  // Within the relative mass tolerance.
  EXPECT_NO_THROW(Flow::Make({0.5, 0.5 + 5e-10}, 1.0));
}

TEST(ProfileTest, ChecksMasses) {
  EXPECT_NO_THROW(Profile::Make(F({0.25, 0.25}), F({0.5, 0.0}), 0.5));
  EXPECT_EQ(CodeOf([] { Profile::Make(F({0.25}), F({0.5, 0.25}), 0.25); }),
            ErrorCode::kDimensionMismatch);
  EXPECT_EQ(CodeOf([] { Profile::Make(F({0.3, 0.0}), F({0.5, 0.0}), 0.5); }),
            ErrorCode::kInvalidMass);
  EXPECT_EQ(CodeOf([] { Profile::Make(F({0.0}), F({1.0}), 1.5); }),
            ErrorCode::kInvalidAlpha);
}

TEST(CostTest, PigouExamples) {
  const Instance pigou = Pigou();
  EXPECT_DOUBLE_EQ(Cost(pigou, F({0, 0.5}), F({0.5, 0})), 0.5);
  EXPECT_DOUBLE_EQ(Cost(pigou, F({0, 0.5}), F({0, 0.5})), 0.5);
}

TEST(CostTest, TightFamilyScaleProfile) {
  // 0.475 * 1 + 0.025 * 10 * (0.5 + 0.025) = 0.475 + 0.13125.
  const double expected = 0.475 + 0.025 * (10.0 * 0.525);
  EXPECT_NEAR(expected, 0.60625, 1e-15);
  EXPECT_NEAR(Cost(Tight(10), F({0, 0.5}), F({0.475, 0.025})), 0.60625,
              1e-12);
}

TEST(CostTest, DimensionMismatch) {
  EXPECT_EQ(CodeOf([] { Cost(Pigou(), F({1.0}), F({0.0, 0.0})); }),
            ErrorCode::kDimensionMismatch);
}

TEST(CostTest, MonotoneInMalLoad) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const Instance inst = RandomInstance(trial, 1 + trial % 6, {0.0, 10.0});
    std::vector<double> x(inst.size()), y(inst.size());
    for (std::size_t k = 0; k < inst.size(); ++k) {
      x[k] = u(rng);
      y[k] = u(rng);
    }
    const Flow soc = F(y);
    const double base = Cost(inst, F(x), soc);
    x[trial % inst.size()] += u(rng);
    EXPECT_GE(Cost(inst, F(x), soc), base);
  }
}

TEST(CostTest, ZeroMalFlowIsOwnCost) {
  const Instance inst = RandomInstance(3, 5, {0.0, 10.0});
  const Flow soc = F({0.1, 0.2, 0.3, 0.15, 0.25});
  double own = 0.0;
  for (std::size_t k = 0; k < inst.size(); ++k) {
    own += soc[k] * (inst[k].a * soc[k] + inst[k].b);
  }
  EXPECT_EQ(Cost(inst, Flow::Zero(inst.size()), soc), own);
}

TEST(SerializationTest, RoundTripsDecimalCoefficientsBitExactly) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> mantissa(0, 999999999999999LL);
  std::uniform_int_distribution<int> exponent(-20, 5);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Link> raw(1 + trial % 7);
    for (Link& l : raw) {
      // Up to 15 significant decimal digits.
      l.a = std::stod(std::to_string(mantissa(rng)) + "e" +
                      std::to_string(exponent(rng)));
      l.b = std::stod(std::to_string(mantissa(rng)) + "e" +
                      std::to_string(exponent(rng)));
    }
    const Instance inst = Validate(raw);
    const Instance back = ParseInstance(EmitJson(InstanceToJson(inst)));
    ASSERT_EQ(back.size(), inst.size());
    for (std::size_t k = 0; k < inst.size(); ++k) {
      EXPECT_EQ(back[k], inst[k]);
    }
    EXPECT_EQ(InstanceHash(back), InstanceHash(inst));
  }
}

TEST(SerializationTest, ParseErrors) {
  EXPECT_EQ(CodeOf([] { ParseInstance("{"); }), ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { ParseInstance("{\"links\": 3}"); }),
            ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { ParseInstance("{\"links\": [{\"a\": 1}]}"); }),
            ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { ParseInstance("{\"links\": []}"); }),
            ErrorCode::kEmptyInstance);
  EXPECT_EQ(CodeOf([] { ParseInstance("{\"links\": [{\"a\": -2, \"b\": 0}]}"); }),
            ErrorCode::kNegativeCoefficient);
}

TEST(SerializationTest, SeventeenDigitNumbers) {
  EXPECT_EQ(EmitJson(nlohmann::json{{"x", 0.1}}, -1),
            "{\"x\":0.10000000000000001}");
  EXPECT_EQ(EmitJson(nlohmann::json{{"x", 1.0}}, -1), "{\"x\":1.0}");
  EXPECT_EQ(EmitJson(nlohmann::json{{"n", 3}}, -1), "{\"n\":3}");
}

}  // namespace
}  // namespace malice
