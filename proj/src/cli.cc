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

#include "malice/cli.h"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "malice/error.h"
#include "malice/families.h"
#include "malice/flows.h"
#include "malice/game.h"
#include "malice/json_io.h"
#include "malice/oracle.h"

namespace malice::cli {
namespace {

using nlohmann::json;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << contents;
  if (!out) throw Error(ErrorCode::kIoError, "failed writing " + path);
}

double ParseNumber(std::string_view text) {
  std::string owned(text);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(owned, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != owned.size()) {
    throw Error(ErrorCode::kUsageError, "not a number: '" + owned + "'");
  }
  return value;
}

std::string FormatCsvNumber(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json Envelope(const std::string& command, const Instance& inst) {
  return {{"command", command},
          {"instance_hash", InstanceHash(inst)},
          {"instance", InstanceToJson(inst)},
          {"tolerances", TolerancesJson()}};
}

struct Options {
  std::string instance_path;
  double alpha = 0.0;
  double mass = 1.0;
  bool wardrop = false;
  bool optimum = false;
  int grid = 200;
  std::uint64_t max_points = GridSpec{}.max_points;
  bool timing = false;
  std::string family;
  std::uint64_t seed = 0;
  std::size_t m = 4;
  double lo = 0.0;
  double hi = 10.0;
  std::string out_path;
  std::string alphas = "0:0.95:0.05";
  std::string csv_path;
};

int Solve(const Options& opt, std::ostream& out) {
  const Instance inst = ParseInstance(ReadFile(opt.instance_path));
  const FlowSolution solution = opt.wardrop ? WardropFlow(inst, opt.mass)
                                            : SystemOptimum(inst, opt.mass);
  json report = Envelope("solve", inst);
  report["mode"] = opt.wardrop ? "wardrop" : "optimum";
  report["mass"] = opt.mass;
  report["flow"] = FlowToJson(solution.flow);
  report["level"] = solution.water.level;
  report["support"] = solution.water.support;
  report["cost"] = FlowCost(inst, solution.flow);
  out << EmitJson(report) << "\n";
  return kExitOk;
}

int Equilibrium(const Options& opt, std::ostream& out) {
  const Instance inst = ParseInstance(ReadFile(opt.instance_path));
  const EquilibriumResult eq = PureEquilibrium(inst, opt.alpha);
  json report = Envelope("equilibrium", inst);
  report["profile"] = ProfileToJson(eq.profile);
  report["certificate"] = CertificateToJson(eq.certificate);
  report["value"] = eq.certificate.value;
  out << EmitJson(report) << "\n";
  return eq.certificate.ValidAt(kCertificateTolerance) ? kExitOk
                                                       : kExitCertificate;
}

int Com(const Options& opt, std::ostream& out) {
  const Instance inst = ParseInstance(ReadFile(opt.instance_path));
  const ComReport com = CostOfMalice(inst, opt.alpha);
  json report = Envelope("com", inst);
  report["report"] = ComReportToJson(com);
  out << EmitJson(report) << "\n";
  return com.Violations().empty() ? kExitOk : kExitCertificate;
}

int Scale(const Options& opt, std::ostream& out) {
  const Instance inst = ParseInstance(ReadFile(opt.instance_path));
  const BestResponseResult scale = ScaleStrategy(inst, opt.alpha);
  const BestResponseResult mal = MalBestResponse(inst, scale.flow, opt.alpha);
  const double opt_cost = FlowCost(inst, SystemOptimum(inst, 1.0).flow);
  const double bound = (1.0 + opt.alpha / 2.0) * (1.0 - opt.alpha) * opt_cost;

  json report = Envelope("scale", inst);
  report["alpha"] = opt.alpha;
  report["soc"] = BestResponseToJson(scale);
  report["mal"] = BestResponseToJson(mal);
  report["profile"] =
      ProfileToJson(Profile::Make(mal.flow, scale.flow, opt.alpha));
  report["value"] = scale.value;
  report["opt_cost_1"] = opt_cost;
  report["inner_term"] = ScaleInnerTerm(inst);
  report["bound"] = bound;
  const bool holds =
      scale.value <= bound + kBoundTolerance * std::max(1.0, bound);
  report["bound_holds"] = holds;
  out << EmitJson(report) << "\n";
  return holds ? kExitOk : kExitCertificate;
}

int Verify(const Options& opt, std::ostream& out) {
  const Instance inst = ParseInstance(ReadFile(opt.instance_path));
  const auto start = std::chrono::steady_clock::now();
  const MinimaxReport minimax =
      MinimaxGap(inst, opt.alpha, GridSpec{opt.grid, opt.max_points});
  const auto stop = std::chrono::steady_clock::now();

  json report = Envelope("verify", inst);
  report["alpha"] = opt.alpha;
  report["grid"] = opt.grid;
  report["minimax"] = MinimaxToJson(minimax);
  const bool ok = minimax.gap >= -kBoundTolerance &&
                  minimax.bracket_contains_equilibrium;
  report["verified"] = ok;
  // Wall time is opt-in so that default reports stay byte-identical.
  if (opt.timing) {
    report["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(stop - start).count();
  }
  out << EmitJson(report) << "\n";
  return ok ? kExitOk : kExitCertificate;
}

Instance GenerateFamily(const Options& opt) {
  const std::string& family = opt.family;
  if (family == "pigou") return Pigou();
  if (family == "random") {
    return RandomInstance(opt.seed, opt.m, CoefRange{opt.lo, opt.hi});
  }
  const auto colon = family.find(':');
  if (colon != std::string::npos) {
    const std::string name = family.substr(0, colon);
    const std::string arg = family.substr(colon + 1);
    if (name == "tight") return Tight(ParseNumber(arg));
    if (name == "network") {
      const double m = ParseNumber(arg);
      if (m < 1.0 || m != std::floor(m)) {
        throw Error(ErrorCode::kInvalidM, "network:m needs a positive integer");
      }
      return IdenticalLinks(static_cast<std::size_t>(m));
    }
  }
  throw Error(ErrorCode::kUsageError, "unknown family '" + family + "'");
}

int Gen(const Options& opt, std::ostream& out) {
  const std::string text = EmitJson(InstanceToJson(GenerateFamily(opt))) + "\n";
  if (opt.out_path.empty()) {
    out << text;
  } else {
    WriteFile(opt.out_path, text);
  }
  return kExitOk;
}

int Network(const Options& opt, std::ostream& out) {
  const NetworkDemoReport demo = NetworkDemo(opt.m, opt.alpha);
  json report = {{"command", "network"},
                 {"tolerances", TolerancesJson()},
                 {"demo", NetworkDemoToJson(demo)}};
  out << EmitJson(report) << "\n";
  return kExitOk;
}

int Sweep(const Options& opt, std::ostream& out) {
  const Instance inst = ParseInstance(ReadFile(opt.instance_path));
  const std::vector<double> alphas = ParseAlphaList(opt.alphas);
  const std::vector<SweepRow> rows = ComSweep(inst, alphas);
  if (!opt.csv_path.empty()) {
    std::string csv = "alpha,eq_value,com,scale_com,bound_43,bound_scale\n";
    for (const SweepRow& row : rows) {
      csv += FormatCsvNumber(row.alpha) + "," + FormatCsvNumber(row.eq_value) +
             "," + FormatCsvNumber(row.com) + "," +
             FormatCsvNumber(row.scale_com) + "," +
             FormatCsvNumber(row.bound_43) + "," +
             FormatCsvNumber(row.bound_scale) + "\n";
    }
    WriteFile(opt.csv_path, csv);
  }
  json table = json::array();
  for (const SweepRow& row : rows) {
    table.push_back({{"alpha", row.alpha},
                     {"eq_value", row.eq_value},
                     {"com", row.com},
                     {"scale_com", row.scale_com},
                     {"bound_43", row.bound_43},
                     {"bound_scale", row.bound_scale}});
  }
  json report = Envelope("sweep", inst);
  report["rows"] = table;
  out << EmitJson(report) << "\n";
  return kExitOk;
}

}  // namespace

std::vector<double> ParseAlphaList(std::string_view spec) {
  std::vector<std::string> fields;
  const char separator =
      spec.find(':') != std::string_view::npos ? ':' : ',';
  std::string current;
  for (char c : spec) {
    if (c == separator) {
      fields.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  fields.push_back(current);

  std::vector<double> alphas;
  if (separator == ',') {
    for (const std::string& f : fields) alphas.push_back(ParseNumber(f));
    return alphas;
  }
  if (fields.size() != 3) {
    throw Error(ErrorCode::kUsageError, "alpha range must be start:stop:step");
  }
  const double start = ParseNumber(fields[0]);
  const double stop = ParseNumber(fields[1]);
  const double step = ParseNumber(fields[2]);
  if (!(step > 0.0) || stop < start) {
    throw Error(ErrorCode::kUsageError, "alpha range needs step > 0, stop >= start");
  }
  const auto count = static_cast<std::int64_t>(std::floor((stop - start) / step + 1e-9));
  for (std::int64_t i = 0; i <= count; ++i) {
    // Snap to 12 decimals so 0.05 * 3 prints as 0.15.
    const double raw = start + static_cast<double>(i) * step;
    alphas.push_back(std::round(raw * 1e12) / 1e12);
  }
  return alphas;
}

int Run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Solver for the malice game on parallel links with linear latencies"};
  app.name("malice_cli");
  app.require_subcommand(1);
  Options opt;

  auto add_instance = [&opt](CLI::App* sub) {
    sub->add_option("--instance", opt.instance_path, "instance JSON file")
        ->required();
  };
  auto add_alpha = [&opt](CLI::App* sub) {
    sub->add_option("--alpha", opt.alpha, "MAL's share of the unit flow")
        ->required();
  };

  CLI::App* solve = app.add_subcommand("solve", "Wardrop or optimum flow");
  add_instance(solve);
  auto* wardrop = solve->add_flag("--wardrop", opt.wardrop, "Wardrop flow");
  auto* optimum = solve->add_flag("--optimum", opt.optimum, "system optimum");
  wardrop->excludes(optimum);
  solve->add_option("--mass", opt.mass, "total mass to route");

  CLI::App* equilibrium =
      app.add_subcommand("equilibrium", "pure equilibrium with certificate");
  add_instance(equilibrium);
  add_alpha(equilibrium);

  CLI::App* com = app.add_subcommand("com", "cost-of-malice report");
  add_instance(com);
  add_alpha(com);

  CLI::App* scale = app.add_subcommand("scale", "SCALE strategy value");
  add_instance(scale);
  add_alpha(scale);

  CLI::App* verify = app.add_subcommand("verify", "brute-force minimax check");
  add_instance(verify);
  add_alpha(verify);
  verify->add_option("--grid", opt.grid, "simplex resolution n");
  verify->add_option("--max-points", opt.max_points, "grid point cap");
  verify->add_flag("--timing", opt.timing, "include wall time in the report");

  CLI::App* gen = app.add_subcommand("gen", "write an instance file");
  gen->add_option("--family", opt.family, "pigou | tight:M | network:m | random")
      ->required();
  gen->add_option("--seed", opt.seed, "seed for the random family");
  gen->add_option("--m", opt.m, "number of links for the random family");
  gen->add_option("--lo", opt.lo, "lowest random coefficient");
  gen->add_option("--hi", opt.hi, "highest random coefficient");
  gen->add_option("--out", opt.out_path, "output file (stdout if omitted)");

  CLI::App* network =
      app.add_subcommand("network", "spanning-path cost-of-malice lower bound");
  network->add_option("--m", opt.m, "number of parallel links")->required();
  add_alpha(network);

  CLI::App* sweep = app.add_subcommand("sweep", "cost of malice over alpha");
  add_instance(sweep);
  sweep->add_option("--alphas", opt.alphas, "start:stop:step or a,b,c");
  sweep->add_option("--csv", opt.csv_path, "also write the table as CSV");

  std::vector<std::string> reversed;
  for (std::size_t i = args.size(); i > 1; --i) reversed.push_back(args[i - 1]);
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (solve->parsed()) {
      if (!opt.wardrop && !opt.optimum) {
        throw Error(ErrorCode::kUsageError, "solve needs --wardrop or --optimum");
      }
      return Solve(opt, out);
    }
    if (equilibrium->parsed()) return Equilibrium(opt, out);
    if (com->parsed()) return Com(opt, out);
    if (scale->parsed()) return Scale(opt, out);
    if (verify->parsed()) return Verify(opt, out);
    if (gen->parsed()) return Gen(opt, out);
    if (network->parsed()) return Network(opt, out);
    if (sweep->parsed()) return Sweep(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kCertificateFailure ? kExitCertificate
                                                      : kExitValidation;
  }
  err << "usage error: no subcommand\n";
  return kExitValidation;
}

}  // namespace malice::cli
