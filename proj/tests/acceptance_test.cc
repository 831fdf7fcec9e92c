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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "malice/cli.h"
#include "malice/error.h"
#include "malice/families.h"
#include "malice/flows.h"
#include "malice/game.h"
#include "malice/json_io.h"
#include "malice/oracle.h"
#include "test_oracles.h"

namespace malice {
namespace {

struct Case {
  Instance inst;
  double alpha;
};

// 1000 seeded instances, m in [1, 8], coefficients in [0, 10] with forced
// zeros, alpha in (0, 1).
std::vector<Case> Ensemble() {
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<std::size_t> links(1, 8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Case> cases;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::size_t m = links(rng);
    double alpha = 0.0;
    while (alpha == 0.0) alpha = unit(rng);
    cases.push_back({RandomInstance(seed, m, {0.0, 10.0}), alpha});
  }
  return cases;
}

class Reporter {
 public:
  void Report(const std::string& id, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << ": " << detail
              << std::endl;
    all_pass_ = all_pass_ && pass;
  }
  bool all_pass() const { return all_pass_; }

 private:
  bool all_pass_ = true;
};

std::string Num(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

void Criterion1(const std::vector<Case>& cases, Reporter& r) {
  int ok = 0;
  double worst = 0.0;
  for (const Case& c : cases) {
    try {
      const auto eq = PureEquilibrium(c.inst, c.alpha);
      worst = std::max({worst, eq.certificate.mal_residual,
                        eq.certificate.soc_residual});
      ok += eq.certificate.ValidAt(1e-7);
    } catch (const Error& e) {
      std::cerr << e.what() << "\n";
    }
  }
  r.Report("AC1 mutual best response certificates", ok == 1000,
           std::to_string(ok) + "/1000 valid at 1e-7, worst residual " +
               Num(worst));
}

void Criterion2(Reporter& r) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int ok = 0;
  double worst_ratio = 0.0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const Instance inst = RandomInstance(5000 + i, 2 + i % 2, {0.0, 10.0});
    double alpha = 0.0;
    while (alpha == 0.0) alpha = unit(rng);
    const MinimaxReport coarse = MinimaxGap(inst, alpha, GridSpec{100});
    const MinimaxReport fine = MinimaxGap(inst, alpha, GridSpec{200});
    const double allowed = 0.05 * std::max(1.0, fine.eq_value);
    worst_ratio = std::max(worst_ratio, fine.gap / allowed);
    const bool pass = fine.gap >= -1e-9 && fine.bracket_contains_equilibrium &&
                      fine.gap <= allowed && fine.gap <= coarse.gap + 1e-9;
    ok += pass;
  }
  r.Report("AC2 minimax equality by grid oracle", ok == 50,
           std::to_string(ok) + "/50 instances, worst gap/allowed " +
               Num(worst_ratio));
}

void Criterion3(const std::vector<Case>& cases, Reporter& r) {
  int violations = 0;
  for (const Case& c : cases) {
    const Instance& inst = c.inst;
    const double alpha = c.alpha;
    const double eq = PureEquilibrium(inst, alpha).certificate.value;
    const double nash1 = FlowCost(inst, WardropFlow(inst, 1.0).flow);
    const double opt1 = FlowCost(inst, SystemOptimum(inst, 1.0).flow);
    const double scale = ScaleStrategy(inst, alpha).value;
    const double inner = ScaleInnerTerm(inst);
    const double opt_soc = FlowCost(inst, SystemOptimum(inst, 1 - alpha).flow);
    violations += !(eq <= (1 - alpha) * nash1 + 1e-9);
    violations += !(eq <= 4.0 / 3.0 * (1 - alpha) * opt1 + 1e-9);
    violations += !(scale <= (1 + alpha / 2) * (1 - alpha) * opt1 + 1e-9);
    violations += !(inner <= 1.5 * opt1 + 1e-9);
    violations += !(eq <= scale + 1e-9);
    violations += !(eq >= opt_soc - 1e-9);
  }
  r.Report("AC3 analytic bounds", violations == 0,
           std::to_string(violations) + " violations over 6000 checks");
}

void Criterion4(Reporter& r) {
  const double big_m = 1000.0;
  bool pass = true;
  std::string detail;
  for (double alpha : {0.1, 0.5, 0.9}) {
    const ComReport rep = CostOfMalice(Tight(big_m), alpha);
    const double eq_err = std::abs(rep.com - 4 * big_m / (4 * big_m - 1));
    const double scale_err = std::abs(rep.scale_com - (1 + alpha / 2));
    pass = pass && eq_err <= 1e-9 && scale_err <= 3 / (4 * big_m);
    detail += "alpha=" + std::to_string(alpha).substr(0, 3) + " eq_err " +
              Num(eq_err) + " scale_err " + Num(scale_err) + "; ";
  }
  r.Report("AC4 tight family M=1000", pass, detail);
}

void Criterion5(Reporter& r) {
  const Instance p = Pigou();
  const double nash = FlowCost(p, WardropFlow(p, 1.0).flow);
  const double opt = FlowCost(p, SystemOptimum(p, 1.0).flow);
  const double com0 = CostOfMalice(p, 0.0).com;
  const bool pass =
      std::abs(nash - 1.0) <= 1e-12 && std::abs(opt - 0.75) <= 1e-12 && com0 == 1.0;
  r.Report("AC5 Pigou sanity", pass,
           "C_N(1)=" + std::to_string(nash) + " C_S(1)=" + std::to_string(opt) +
               " CoM(0)=" + std::to_string(com0));
}

void Criterion6(Reporter& r) {
  bool pass = true;
  std::vector<double> bounds;
  const std::vector<std::size_t> ms = {1, 2, 4, 8, 16};
  for (std::size_t m : ms) {
    const NetworkDemoReport demo = NetworkDemo(m, 0.5);
    pass = pass && std::abs(demo.com_lower_bound - (0.5 + 0.5 * m)) <= 1e-9;
    bounds.push_back(demo.com_lower_bound);
  }
  // Constant slope alpha between consecutive m.
  for (std::size_t i = 1; i < ms.size(); ++i) {
    const double slope = (bounds[i] - bounds[i - 1]) /
                         static_cast<double>(ms[i] - ms[i - 1]);
    pass = pass && std::abs(slope - 0.5) <= 1e-9;
  }
  r.Report("AC6 spanning-path demonstrator", pass,
           "bound at m=16: " + std::to_string(bounds.back()));
}

void Criterion7(Reporter& r) {
  std::mt19937_64 rng(31337);
  int failures = 0;
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const Instance inst = RandomInstance(9000 + i, 1 + i % 8, {0.0, 10.0});
    const double nash = FlowCost(inst, WardropFlow(inst, 1.0).flow);
    const double opt = FlowCost(inst, SystemOptimum(inst, 1.0).flow);
    const double nash_err =
        std::abs(nash - testing::WardropCostOracle(inst.links(), 1.0));
    const double opt_err =
        std::abs(opt - testing::OptimumCostOracle(inst.links(), 1.0));
    worst = std::max({worst, nash_err, opt_err});
    failures += nash_err > 1e-7 || opt_err > 1e-7;
    for (int trial = 0; trial < 1000; ++trial) {
      const Flow g =
          Flow::Make(testing::RandomSimplexPoint(rng, inst.size(), 1.0), 1.0);
      failures += opt > FlowCost(inst, g) + 1e-7;
    }
  }
  r.Report("AC7 solver vs bisection oracle", failures == 0,
           std::to_string(failures) + " failures, worst oracle error " +
               Num(worst));
}

std::string Capture(const std::string& command, int* status) {
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return output;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, n);
  *status = WEXITSTATUS(pclose(pipe));
  return output;
}

void Criterion8(Reporter& r) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "malice_acceptance";
  fs::create_directories(dir);
  const std::string inst = (dir / "inst.json").string();
  std::ofstream(inst) << EmitJson(
      InstanceToJson(RandomInstance(123, 3, {0.0, 10.0})));

  const std::string bin = MALICE_CLI_PATH;
  const std::vector<std::string> commands = {
      "solve --instance " + inst + " --wardrop --mass 1",
      "solve --instance " + inst + " --optimum --mass 0.7",
      "equilibrium --instance " + inst + " --alpha 0.3",
      "com --instance " + inst + " --alpha 0.3",
      "scale --instance " + inst + " --alpha 0.3",
      "verify --instance " + inst + " --alpha 0.3 --grid 60",
      "sweep --instance " + inst + " --alphas 0:0.95:0.05",
      "gen --family random --seed 9 --m 5",
  };
  int identical = 0;
  for (const std::string& args : commands) {
    int s1 = -1, s2 = -1;
    const std::string first = Capture(bin + " " + args, &s1);
    const std::string second = Capture(bin + " " + args, &s2);
    identical += s1 == 0 && s2 == 0 && !first.empty() && first == second;
  }
  fs::remove_all(dir);
  r.Report("AC8 byte-identical CLI reports",
           identical == static_cast<int>(commands.size()),
           std::to_string(identical) + "/" + std::to_string(commands.size()) +
               " subcommands identical across runs");
}

}  // namespace
}  // namespace malice

int main() {
  using malice::Reporter;
  const auto start = std::chrono::steady_clock::now();
  Reporter reporter;
  const auto cases = malice::Ensemble();
  malice::Criterion1(cases, reporter);
  malice::Criterion2(reporter);
  malice::Criterion3(cases, reporter);
  malice::Criterion4(reporter);
  malice::Criterion5(reporter);
  malice::Criterion6(reporter);
  malice::Criterion7(reporter);
  malice::Criterion8(reporter);
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  std::cout << (reporter.all_pass() ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED")
            << " in " << seconds << " s" << std::endl;
  return reporter.all_pass() ? 0 : 1;
}
