// Copyright 2026 The hcover Authors
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


#ifndef HCOVER_CLI_HPP_
#define HCOVER_CLI_HPP_

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hcover/error.hpp"
#include "hcover/general_cover.hpp"
#include "hcover/generators.hpp"
#include "hcover/instance.hpp"
#include "hcover/kernel.hpp"
#include "hcover/lower_cover.hpp"
#include "hcover/oracle.hpp"
#include "hcover/polyline_cover.hpp"
#include "hcover/solution.hpp"
#include "hcover/star_cover.hpp"
#include "hcover/svg.hpp"

namespace hcover {

// Exit codes of the command-line driver.
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // infeasible, or not a kernel
constexpr int kExitUsage = 2;

struct CliOptions {
  std::string input;
  std::string output;
  std::uint64_t seed = 0;
  std::optional<std::size_t> budget_n;  // oracle halfplane budget / kernel-opt cap
  std::string format = "json";
  std::string kind;
  std::size_t n = 16;
  bool timings = false;
};

namespace cli_detail {

using Json = nlohmann::ordered_json;

struct Result {
  std::string text;
  int code = kExitOk;
};

inline Instance load(const CliOptions& opt) {
  if (opt.input.empty()) throw Error(ErrorCode::kInvalidInput, "--input is required");
  std::ifstream f(opt.input, std::ios::binary);
  if (!f) throw Error(ErrorCode::kInvalidInput, "cannot read '" + opt.input + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_instance(ss.str());
}

inline void require_kind(const Instance& inst, InstanceKind k) {
  if (inst.kind != k) {
    throw Error(ErrorCode::kInvalidInput, "expected a '" + kind_name(k) + "' instance, got '" +
                                              kind_name(inst.kind) + "'");
  }
}

inline Json solution_json(const CoverSolution& sol) {
  Json j = Json::object();
  j["status"] = std::string(status_name(sol.status));
  j["size"] = sol.chosen.size();
  j["chosen"] = sol.chosen;
  if (sol.witness) j["witness"] = *sol.witness;
  return j;
}

inline Result emit(const CliOptions& opt, const Instance& inst, const CoverSolution& sol) {
  Result r;
  r.code = sol.optimal() ? kExitOk : kExitNegative;
  if (opt.format == "svg") {
    r.text = render_svg(inst, sol.chosen);
  } else {
    r.text = solution_json(sol).dump() + "\n";
  }
  return r;
}

inline StarPolygon star_of(const Instance& inst) {
  if (!inst.center) throw Error(ErrorCode::kInvalidInput, "star instance without a center");
  return StarPolygon(*inst.center, inst.vertices);
}

inline CoverSolution solve_lower(const Instance& inst) {
  require_kind(inst, InstanceKind::kPoints);
  return solve_lower_only(inst.points, inst.halfplanes);
}

inline CoverSolution solve_star(const Instance& inst) {
  require_kind(inst, InstanceKind::kStar);
  return solve_star_cover(star_of(inst), inst.halfplanes);
}

inline CoverSolution solve_polyline(const Instance& inst) {
  require_kind(inst, InstanceKind::kPolyline);
  return solve_polyline_cover(inst.vertices, inst.halfplanes);
}

inline CoverSolution solve_points(const Instance& inst, std::uint64_t seed) {
  require_kind(inst, InstanceKind::kPoints);
  return solve_general(inst.points, inst.halfplanes, seed);
}

inline CoverSolution run_oracle(const Instance& inst, std::optional<std::size_t> budget_n) {
  oracle::OracleBudget budget;
  if (budget_n) budget.max_halfplanes = *budget_n;
  switch (inst.kind) {
    case InstanceKind::kPoints: return oracle::brute_min_point_cover(inst.points, inst.halfplanes, budget);
    case InstanceKind::kStar: return oracle::brute_star_cover(inst.vertices, inst.halfplanes, budget);
    case InstanceKind::kPolyline: return oracle::brute_polyline_cover(inst.vertices, inst.halfplanes, budget);
  }
  throw Error(ErrorCode::kInvalidInput, "unknown instance kind");
}

inline Scalar epsilon_of(const Instance& inst) {
  if (!inst.epsilon) throw Error(ErrorCode::kInvalidInput, "kernel instance without epsilon");
  return *inst.epsilon;
}

inline Result kernel_check(const Instance& inst) {
  require_kind(inst, InstanceKind::kPoints);
  if (!inst.subset) throw Error(ErrorCode::kInvalidInput, "kernel-check needs a 'subset' field");
  std::vector<Point> sub;
  for (std::size_t i : *inst.subset) {
    if (i >= inst.points.size()) throw Error(ErrorCode::kSubsetViolation, "subset index out of range");
    sub.push_back(inst.points[i]);
  }
  const KernelCheck c = is_epsilon_kernel(sub, inst.points, epsilon_of(inst));
  Json j = Json::object();
  j["kernel"] = c.ok;
  if (c.violation) j["violation"] = Json::array({to_string(c.violation->x), to_string(c.violation->y)});
  return {j.dump() + "\n", c.ok ? kExitOk : kExitNegative};
}

inline Result kernel_opt(const Instance& inst, std::size_t cap) {
  require_kind(inst, InstanceKind::kPoints);
  const KernelResult k = optimal_kernel_bruteforce(inst.points, epsilon_of(inst), cap);
  Json j = Json::object();
  j["status"] = "optimal";
  j["size"] = k.size;
  j["chosen"] = k.indices;
  return {j.dump() + "\n", kExitOk};
}

// Solver used by `bench` for instances of each generator kind.
inline std::string bench_solver(const std::string& kind) {
  if (kind == "star-random") return "solve-star";
  if (kind == "polyline-lb") return "solve-polyline";
  if (kind == "planted-2cover" || kind == "planted-3cover") return "solve-general";
  return "solve-lower";
}

inline Result bench(const CliOptions& opt) {
  const std::string kind = opt.kind.empty() ? "uniform" : opt.kind;
  const Instance inst = generate(kind, opt.n, opt.seed);
  const std::string solver = bench_solver(kind);
  const auto t0 = std::chrono::steady_clock::now();
  CoverSolution sol;
  if (solver == "solve-star") {
    sol = solve_star(inst);
  } else if (solver == "solve-polyline") {
    sol = solve_polyline(inst);
  } else if (solver == "solve-general") {
    sol = solve_points(inst, opt.seed);
  } else {
    sol = solve_lower(inst);
  }
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  Json j = Json::object();
  j["kind"] = kind;
  j["n"] = opt.n;
  j["seed"] = opt.seed;
  j["solver"] = solver;
  j["status"] = std::string(status_name(sol.status));
  j["size"] = sol.chosen.size();
  if (opt.timings) j["seconds"] = dt.count();
  return {j.dump() + "\n", kExitOk};
}

inline Result dispatch(const std::string& cmd, const CliOptions& opt) {
  if (cmd == "gen") {
    if (opt.kind.empty()) throw Error(ErrorCode::kInvalidInput, "--kind is required");
    return {serialize_instance(generate(opt.kind, opt.n, opt.seed)), kExitOk};
  }
  if (cmd == "bench") return bench(opt);
  const Instance inst = load(opt);
  if (cmd == "solve-lower") return emit(opt, inst, solve_lower(inst));
  if (cmd == "solve-star") return emit(opt, inst, solve_star(inst));
  if (cmd == "solve-polyline") return emit(opt, inst, solve_polyline(inst));
  if (cmd == "solve-general") return emit(opt, inst, solve_points(inst, opt.seed));
  if (cmd == "oracle") return emit(opt, inst, run_oracle(inst, opt.budget_n));
  if (cmd == "kernel-check") return kernel_check(inst);
  if (cmd == "kernel-opt") return kernel_opt(inst, opt.budget_n.value_or(kDefaultKernelCap));
  if (cmd == "plot") return {render_svg(inst), kExitOk};
  throw Error(ErrorCode::kInvalidInput, "unknown subcommand '" + cmd + "'");
}

}  // namespace cli_detail

inline const std::vector<std::string>& cli_subcommands() {
  static const std::vector<std::string> names = {"solve-lower", "solve-star",   "solve-polyline", "solve-general",
                                                 "kernel-check", "kernel-opt", "oracle",         "gen",
                                                 "bench",        "plot"};
  return names;
}

// args excludes the program name. Output goes to --output when given,
// otherwise to `out`; diagnostics go to `err`.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum halfplane coverage solvers", "hcover"};
  app.require_subcommand(1);
  CliOptions opt;
  std::map<std::string, CLI::App*> subs;
  for (const std::string& name : cli_subcommands()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--input", opt.input, "instance JSON file");
    sub->add_option("--output", opt.output, "write here instead of stdout");
    sub->add_option("--seed", opt.seed, "seed for generators and solvers")->default_val(0);
    sub->add_option("--budget-n", opt.budget_n, "oracle halfplane budget, kernel-opt point cap");
    sub->add_option("--format", opt.format, "json or svg")->check(CLI::IsMember({"json", "svg"}));
    sub->add_option("--kind", opt.kind, "generator kind");
    sub->add_option("--n", opt.n, "generator size");
    sub->add_flag("--timings", opt.timings, "bench: report wall time");
    subs[name] = sub;
  }
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::string cmd;
  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) cmd = name;
  }
  if (!opt.kind.empty() && cmd != "gen" && cmd != "bench") {
    err << "usage error: --kind only applies to gen and bench\n";
    return kExitUsage;
  }
  if (cmd == "gen" || cmd == "bench") {
    const auto& kinds = generator_kinds();
    if (!opt.kind.empty() && std::find(kinds.begin(), kinds.end(), opt.kind) == kinds.end()) {
      err << "usage error: unknown generator kind '" << opt.kind << "'\n";
      return kExitUsage;
    }
  }
  cli_detail::Result res;
  try {
    res = cli_detail::dispatch(cmd, opt);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (opt.output.empty()) {
    out << res.text;
  } else {
    std::ofstream f(opt.output, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << opt.output << "'\n";
      return kExitUsage;
    }
    f << res.text;
  }
  return res.code;
}

}  // namespace hcover

#endif  // HCOVER_CLI_HPP_
