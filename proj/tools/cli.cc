// Copyright 2026 The qsep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qsep/discrimination.h"
#include "qsep/error.h"
#include "qsep/hermitian.h"
#include "qsep/minimax.h"
#include "qsep/state_io.h"
#include "qsep/states.h"
#include "run_record.h"

namespace qsep::cli {
namespace {

using nlohmann::json;

std::string Fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

std::string FmtWeights(std::span<const double> w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) s += ", ";
    s += Fmt(w[i]);
  }
  return s + ")";
}

struct CommonFlags {
  bool json = false;
  bool quiet = false;
  bool timing = false;
};

// Shared state for one invocation.
struct Context {
  CommonFlags flags;
  std::ostream& out;
  std::ostream& err;
  RunRecord record;
  // Human summary, suppressed by --quiet and replaced by JSON with --json.
  std::ostringstream text;
};

StateSet LoadSet(const std::string& path) {
  return ToStateSet(ReadStateSetFile(path));
}

DensityMatrix LoadSingleState(const std::string& path) {
  const StateSet set = LoadSet(path);
  if (set.size() != 1) {
    throw Error(ErrorCode::kMultiStateFile,
                path + " holds " + std::to_string(set.size()) +
                    " states, expected exactly one");
  }
  return set[0];
}

MixtureWeights WeightsOrUniform(const std::optional<std::string>& text, int n,
                                const char* name) {
  if (!text) return MixtureWeights::Uniform(n);
  std::vector<double> w = ParseWeightList(*text);
  if (static_cast<int>(w.size()) != n) {
    throw Error(ErrorCode::kBadWeights, std::string(name) + " has " +
                                            std::to_string(w.size()) +
                                            " weights for " +
                                            std::to_string(n) + " states");
  }
  return MixtureWeights::Create(std::move(w));
}

// ---- validate ----

struct ValidateArgs {
  std::string s0;
  std::string s1;
};

json ValidateFile(const std::string& path, const char* name, Context& ctx,
                  bool& all_ok, std::optional<int>& dim) {
  const RawStateSet raw = ReadStateSetFile(path);
  dim = raw.dim;
  json verdicts = json::array();
  if (raw.states.empty()) {
    all_ok = false;
    ctx.text << name << ": EmptySet: no states\n";
  }
  for (std::size_t k = 0; k < raw.states.size(); ++k) {
    json v = {{"index", k}};
    if (raw.states[k].label) v["label"] = *raw.states[k].label;
    ctx.text << name << "[" << k << "]";
    if (raw.states[k].label) ctx.text << " \"" << *raw.states[k].label << "\"";
    try {
      ValidateDensity(raw.states[k].matrix);
      v["ok"] = true;
      ctx.text << ": ok\n";
    } catch (const Error& e) {
      all_ok = false;
      v["ok"] = false;
      v["error"] = std::string(ErrorCodeName(e.code()));
      v["message"] = e.detail();
      ctx.text << ": " << e.what() << "\n";
    }
    verdicts.push_back(std::move(v));
  }
  return verdicts;
}

int CmdValidate(const ValidateArgs& args, Context& ctx) {
  bool all_ok = true;
  std::optional<int> dim0;
  std::optional<int> dim1;
  ctx.record.inputs = {{"s0", args.s0}};
  ctx.record.result["s0"] = ValidateFile(args.s0, "S0", ctx, all_ok, dim0);
  if (!args.s1.empty()) {
    ctx.record.inputs["s1"] = args.s1;
    ctx.record.result["s1"] = ValidateFile(args.s1, "S1", ctx, all_ok, dim1);
    const bool match = *dim0 == *dim1;
    ctx.record.result["dimension_match"] = match;
    if (!match) {
      all_ok = false;
      ctx.text << "DimensionMismatch: S0 has dim " << *dim0 << ", S1 has dim "
               << *dim1 << "\n";
    }
  }
  ctx.record.result["valid"] = all_ok;
  ctx.text << (all_ok ? "all states valid\n" : "INVALID\n");
  return all_ok ? kExitOk : kExitError;
}

// ---- solve ----

struct SolveArgs {
  std::string s0;
  std::string s1;
  SolverConfig cfg;
  std::optional<double> eta;
  std::string out;
};

int CmdSolve(const SolveArgs& args, Context& ctx) {
  SolverConfig cfg = args.cfg;
  cfg.learning_rate = args.eta;
  ctx.record.inputs = {
      {"s0", args.s0}, {"s1", args.s1}, {"config", ConfigToJson(cfg)}};
  if (!args.out.empty()) ctx.record.inputs["out"] = args.out;

  const StateSet s0 = LoadSet(args.s0);
  const StateSet s1 = LoadSet(args.s1);
  const SaddleResult r = SolveSaddle(s0, s1, cfg);
  if (!args.out.empty()) {
    WriteTextFile(args.out, SerializeMeasurement(r.measurement.matrix()));
  }
  ctx.record.result = SaddleResultToJson(r);

  ctx.text << "epsilon* in [" << Fmt(r.lower_bound) << ", "
           << Fmt(r.upper_bound) << "]\n"
           << "  lower bound (min pair gap of T): " << Fmt(r.lower_bound) << "\n"
           << "  upper bound (min mixture trace distance): "
           << Fmt(r.upper_bound) << "\n"
           << "  duality gap: " << Fmt(r.gap) << "\n"
           << "  converged: " << (r.converged ? "yes" : "no") << " after "
           << r.rounds_used << " rounds (target gap " << Fmt(cfg.target_gap)
           << ")\n"
           << "  mu0: " << FmtWeights(r.mu0.weights()) << "\n"
           << "  mu1: " << FmtWeights(r.mu1.weights()) << "\n";
  if (!args.out.empty()) ctx.text << "  measurement written to " << args.out << "\n";
  return r.converged ? kExitOk : kExitNotConverged;
}

// ---- distance ----

struct DistanceArgs {
  std::string s0;
  std::string s1;
  std::optional<std::string> mu0;
  std::optional<std::string> mu1;
};

int CmdDistance(const DistanceArgs& args, Context& ctx) {
  ctx.record.inputs = {{"s0", args.s0}, {"s1", args.s1}};
  if (args.mu0) ctx.record.inputs["mu0"] = *args.mu0;
  if (args.mu1) ctx.record.inputs["mu1"] = *args.mu1;
  const StateSet s0 = LoadSet(args.s0);
  const StateSet s1 = LoadSet(args.s1);
  if (s0.dim() != s1.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "S0 and S1 differ in dimension");
  }
  const MixtureWeights mu0 = WeightsOrUniform(args.mu0, s0.size(), "--mu0");
  const MixtureWeights mu1 = WeightsOrUniform(args.mu1, s1.size(), "--mu1");
  const double d = TraceDistance(MixtureState(mu0, s0), MixtureState(mu1, s1));
  ctx.record.result = {{"trace_distance", d},
                       {"convention", "half trace norm"},
                       {"mu0", WeightsToJson(mu0)},
                       {"mu1", WeightsToJson(mu1)}};
  ctx.text << "trace distance 1/2 ||rho_mu0 - sigma_mu1||_1 = " << Fmt(d) << "\n";
  return kExitOk;
}

// ---- helstrom ----

struct HelstromArgs {
  std::string rho;
  std::string sigma;
  std::string out;
};

int CmdHelstrom(const HelstromArgs& args, Context& ctx) {
  ctx.record.inputs = {{"rho", args.rho}, {"sigma", args.sigma}};
  if (!args.out.empty()) ctx.record.inputs["out"] = args.out;
  const DensityMatrix rho = LoadSingleState(args.rho);
  const DensityMatrix sigma = LoadSingleState(args.sigma);
  const PovmElement t = HelstromMeasurement(rho, sigma);
  const double gap = PairGap(t, rho, sigma);
  const double distance = TraceDistance(rho, sigma);
  if (!args.out.empty()) WriteTextFile(args.out, SerializeMeasurement(t.matrix()));
  ctx.record.result = {{"achieved_gap", gap},
                       {"trace_distance", distance},
                       {"measurement", MatrixToJson(t.matrix())}};
  ctx.text << "achieved gap Tr(T rho) - Tr(T sigma) = " << Fmt(gap) << "\n"
           << "trace distance = " << Fmt(distance) << "\n";
  if (!args.out.empty()) ctx.text << "measurement written to " << args.out << "\n";
  return kExitOk;
}

// ---- certify ----

struct CertifyArgs {
  std::string s0;
  std::string s1;
  std::string measurement;
  int trials = 1000;
  std::uint64_t seed = 0;
};

int CmdCertify(const CertifyArgs& args, Context& ctx) {
  ctx.record.inputs = {{"s0", args.s0},
                       {"s1", args.s1},
                       {"measurement", args.measurement},
                       {"trials", args.trials},
                       {"seed", args.seed}};
  const ComplexMatrix raw = ReadMeasurementFile(args.measurement);
  std::optional<PovmElement> t;
  try {
    t = ValidatePovmElement(raw);
  } catch (const Error& e) {
    throw Error(ErrorCode::kInvalidMeasurement, args.measurement + ": " + e.what());
  }
  const StateSet s0 = LoadSet(args.s0);
  const StateSet s1 = LoadSet(args.s1);
  const CertReport report = CertifyForward(*t, s0, s1, args.trials, args.seed);
  ctx.record.result = CertReportToJson(report);
  ctx.text << "epsilon_hat (min pair gap of T) = " << Fmt(report.epsilon_hat) << "\n"
           << "sampled " << report.trials << " mixture pairs, min trace distance "
           << Fmt(report.min_distance) << "\n"
           << "violations: " << report.violations << ", max violation "
           << Fmt(report.max_violation) << "\n"
           << (report.certified() ? "certified\n" : "NOT certified\n");
  return report.certified() ? kExitOk : kExitError;
}

// ---- random ----

struct RandomArgs {
  int dim = 2;
  int count = 1;
  std::optional<int> rank;
  std::uint64_t seed = 0;
  std::string out;
};

int CmdRandom(const RandomArgs& args, Context& ctx) {
  const int rank = args.rank.value_or(args.dim);
  ctx.record.inputs = {{"dim", args.dim},
                       {"count", args.count},
                       {"rank", rank},
                       {"seed", args.seed}};
  const StateSet set = RandomStateSet(args.dim, args.count, rank, args.seed);
  const std::string body = SerializeStateSet(set);
  if (args.out.empty()) {
    // The file itself is the payload.
    ctx.out << body;
    ctx.flags.quiet = true;
    ctx.flags.json = false;
    return kExitOk;
  }
  WriteTextFile(args.out, body);
  ctx.record.inputs["out"] = args.out;
  ctx.record.result = {{"path", args.out}, {"count", set.size()}, {"dim", set.dim()}};
  ctx.text << "wrote " << set.size() << " states of dimension " << set.dim()
           << " (rank " << rank << ") to " << args.out << "\n";
  return kExitOk;
}

}  // namespace

std::vector<double> ParseWeightList(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const char* begin = item.c_str();
    char* end = nullptr;
    const double x = std::strtod(begin, &end);
    while (end && *end == ' ') ++end;
    if (end == begin || *end != '\0') {
      throw Error(ErrorCode::kBadWeights, "cannot parse weight \"" + item + "\"");
    }
    out.push_back(x);
  }
  if (out.empty()) throw Error(ErrorCode::kBadWeights, "empty weight list");
  return out;
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Distinguishability of two finite sets of quantum states", "qsep"};
  app.require_subcommand(1);
  // Common flags may follow the subcommand.
  app.fallthrough();
  CommonFlags flags;
  app.add_flag("--json", flags.json, "Emit one JSON run record on stdout");
  app.add_flag("--quiet", flags.quiet, "Suppress the human-readable summary");
  app.add_flag("--timing", flags.timing, "Include wall_time_ms in --json output");
  app.set_version_flag("--version", "qsep 0.1.0");

  ValidateArgs validate;
  auto* validate_cmd = app.add_subcommand("validate", "Check state-set files");
  validate_cmd->add_option("s0", validate.s0, "State-set file")->required();
  validate_cmd->add_option("s1", validate.s1, "Second state-set file");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand(
      "solve", "Optimal separation margin, witness measurement and mixtures");
  solve_cmd->add_option("s0", solve.s0, "State-set file for S0")->required();
  solve_cmd->add_option("s1", solve.s1, "State-set file for S1")->required();
  solve_cmd->add_option("--rounds", solve.cfg.max_rounds, "Maximum rounds")
      ->capture_default_str();
  solve_cmd->add_option("--gap", solve.cfg.target_gap, "Target duality gap")
      ->capture_default_str();
  solve_cmd->add_option("--eta", solve.eta, "Learning rate (default: auto)");
  solve_cmd->add_option("--check-interval", solve.cfg.check_interval,
                        "Rounds between certificate checks")
      ->capture_default_str();
  solve_cmd->add_option("--out", solve.out, "Write the measurement file here");

  DistanceArgs distance;
  auto* distance_cmd = app.add_subcommand(
      "distance", "Trace distance (half trace norm) between two mixtures");
  distance_cmd->add_option("s0", distance.s0, "State-set file for S0")->required();
  distance_cmd->add_option("s1", distance.s1, "State-set file for S1")->required();
  distance_cmd->add_option("--mu0", distance.mu0, "Comma-separated weights on S0");
  distance_cmd->add_option("--mu1", distance.mu1, "Comma-separated weights on S1");

  HelstromArgs helstrom;
  auto* helstrom_cmd = app.add_subcommand(
      "helstrom", "Optimal measurement for two single states");
  helstrom_cmd->add_option("rho", helstrom.rho, "File with one state")->required();
  helstrom_cmd->add_option("sigma", helstrom.sigma, "File with one state")->required();
  helstrom_cmd->add_option("--out", helstrom.out, "Write the measurement file here");

  CertifyArgs certify;
  auto* certify_cmd = app.add_subcommand(
      "certify", "Check that no mixture pair beats a measurement's margin");
  certify_cmd->add_option("s0", certify.s0, "State-set file for S0")->required();
  certify_cmd->add_option("s1", certify.s1, "State-set file for S1")->required();
  certify_cmd->add_option("measurement", certify.measurement, "Measurement file")
      ->required();
  certify_cmd->add_option("--trials", certify.trials, "Sampled mixture pairs")
      ->capture_default_str();
  certify_cmd->add_option("--seed", certify.seed, "Sampling seed")
      ->capture_default_str();

  RandomArgs random;
  auto* random_cmd = app.add_subcommand("random", "Generate seeded random states");
  random_cmd->add_option("--dim", random.dim, "Hilbert space dimension")
      ->capture_default_str();
  random_cmd->add_option("--count", random.count, "Number of states")
      ->capture_default_str();
  random_cmd->add_option("--rank", random.rank, "Rank of each state (default: dim)");
  random_cmd->add_option("--seed", random.seed, "Seed")->capture_default_str();
  random_cmd->add_option("--out", random.out, "Output file (default: stdout)");

  std::vector<std::string> reversed;
  if (!args.empty()) reversed.assign(args.rbegin(), args.rend() - 1);
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  Context ctx{.flags = flags, .out = out, .err = err, .record = {}, .text = {}};
  const auto start = std::chrono::steady_clock::now();
  int status = kExitError;
  try {
    if (*validate_cmd) {
      ctx.record.command = "validate";
      status = CmdValidate(validate, ctx);
    } else if (*solve_cmd) {
      ctx.record.command = "solve";
      status = CmdSolve(solve, ctx);
    } else if (*distance_cmd) {
      ctx.record.command = "distance";
      status = CmdDistance(distance, ctx);
    } else if (*helstrom_cmd) {
      ctx.record.command = "helstrom";
      status = CmdHelstrom(helstrom, ctx);
    } else if (*certify_cmd) {
      ctx.record.command = "certify";
      status = CmdCertify(certify, ctx);
    } else if (*random_cmd) {
      ctx.record.command = "random";
      status = CmdRandom(random, ctx);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (ctx.flags.json) {
      ctx.record.result = {{"error", std::string(ErrorCodeName(e.code()))},
                           {"message", e.detail()}};
      out << ctx.record.ToJson().dump(2) << "\n";
    }
    return kExitError;
  }

  if (ctx.flags.timing) {
    ctx.record.wall_time_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count();
  }
  if (ctx.flags.json) {
    out << ctx.record.ToJson().dump(2) << "\n";
  } else if (!ctx.flags.quiet) {
    out << ctx.text.str();
  }
  return status;
}

}  // namespace qsep::cli
