// SPDX-License-Identifier: Apache-2.0
//
// Part of ci-swipt, a transmit-precoder design library for joint wireless
// information and power transfer in the MISO downlink.
//
// Command-line front end: channel generation, one-off solves, independent
// solution audits, Monte Carlo power sweeps, and symbol-level SER runs.
// Exit codes: 0 success, 2 infeasible (or failed audit), 1 error.

#include "ciswipt/bench.hpp"
#include "ciswipt/ci_precoder.hpp"
#include "ciswipt/conventional_precoder.hpp"
#include "ciswipt/json_io.hpp"
#include "ciswipt/model.hpp"
#include "ciswipt/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

namespace {

using namespace ciswipt;

constexpr int kExitInfeasible = 2;

struct SolveArgs {
  std::string scheme = "ci-dc";
  std::string channels;
  std::string out;
  double sinr_db = 20.0;
  double eh_db = 10.0;
  double n0 = 1.0;
  double nc = 1.0;
  int modulation = 4;
};

int cmd_gen(int users, int antennas, std::uint64_t seed, const std::string& out) {
  const ChannelInstance ch = bench::gen_channels(users, antennas, seed);
  io::save_text(io::channels_to_json(ch).dump(2) + "\n", out);
  std::printf("wrote %s (%d users x %d antennas, seed %llu)\n", out.c_str(), users, antennas,
              static_cast<unsigned long long>(seed));
  return 0;
}

int cmd_solve(const SolveArgs& args) {
  const ChannelInstance ch = io::channels_from_json(io::load_json(args.channels));
  const bench::Scheme scheme = io::scheme_from_token(args.scheme);
  const Constellation cons = Constellation::mpsk(args.modulation);
  const NoiseModel noise{args.n0, args.nc};
  const std::vector<UserRequirement> req(
      ch.users(), UserRequirement{db_to_linear(args.sinr_db), db_to_linear(args.eh_db)});
  const SymbolFrame frame = SymbolFrame::from_symbols(cons, std::vector<int>(ch.users(), 0));

  bench::SweepConfig defaults;
  const bench::SchemeOutcome outcome =
      bench::run_scheme(scheme, ch, frame, req, noise, cons, 1, defaults);

  io::SolutionEnvelope env;
  env.scheme = args.scheme;
  env.status = outcome.status;
  env.iterations = outcome.iterations;
  env.is_ci = outcome.is_ci;
  env.ci = outcome.ci;
  env.conv = outcome.conv;
  if (outcome.is_ci) env.frame_symbols.assign(ch.users(), 0);
  env.sinr_db = args.sinr_db;
  env.eh_db = args.eh_db;
  env.n0 = args.n0;
  env.nc = args.nc;
  env.modulation = args.modulation;
  io::save_text(io::solution_to_json(env).dump(2) + "\n", args.out);

  std::printf("%s: %s P_T=%.6g (%.2f dB), wrote %s\n", args.scheme.c_str(),
              to_string(outcome.status).c_str(), outcome.power, linear_to_db(outcome.power),
              args.out.c_str());
  return outcome.status == PrecoderStatus::Infeasible ? kExitInfeasible : 0;
}

int cmd_check(const std::string& channels_path, const std::string& solution_path) {
  const ChannelInstance ch = io::channels_from_json(io::load_json(channels_path));
  const io::SolutionEnvelope env = io::solution_from_json(io::load_json(solution_path));
  const NoiseModel noise{env.n0, env.nc};
  const bench::Scheme scheme = io::scheme_from_token(env.scheme);
  const bool sinr_only =
      scheme == bench::Scheme::CiSinrOnly || scheme == bench::Scheme::ConvSinrOnly;
  const std::vector<UserRequirement> req(
      ch.users(), UserRequirement{db_to_linear(env.sinr_db),
                                  sinr_only ? 0.0 : db_to_linear(env.eh_db)});
  verify::SlackReport report;
  if (env.is_ci) {
    const Constellation cons = Constellation::mpsk(env.modulation);
    const SymbolFrame frame = SymbolFrame::from_symbols(cons, env.frame_symbols);
    report = verify::check_solution(env.ci, ch, frame, req, noise, cons);
  } else {
    report = verify::check_solution(env.conv, ch, req, noise);
  }
  std::printf("%s\n", io::slack_report_to_json(report).dump(2).c_str());
  return report.pass ? 0 : kExitInfeasible;
}

int cmd_sweep(const std::string& config_path, const std::string& out) {
  const bench::SweepConfig cfg = io::sweep_config_from_json(io::load_json(config_path));
  const bench::SweepResult result = bench::run_sweep(cfg);
  io::save_text(bench::to_csv(result), out);
  std::printf("wrote %s (%zu rows)\n", out.c_str(), result.rows.size());
  return 0;
}

int cmd_ser(const std::string& channels_path, const std::string& solution_path,
            std::int64_t symbols, std::uint64_t seed) {
  const ChannelInstance ch = io::channels_from_json(io::load_json(channels_path));
  const io::SolutionEnvelope env = io::solution_from_json(io::load_json(solution_path));
  if (!env.is_ci) throw std::runtime_error("ser: only symbol-level (ci-*) solutions are supported");
  const bench::Scheme scheme = io::scheme_from_token(env.scheme);
  const Constellation cons = Constellation::mpsk(env.modulation);
  const NoiseModel noise{env.n0, env.nc};
  const std::vector<UserRequirement> req(
      ch.users(), UserRequirement{db_to_linear(env.sinr_db), db_to_linear(env.eh_db)});

  const verify::FrameSolver resolve = [&](const RotatedChannels& rot) -> CiSolution {
    ci::CiResult r;
    switch (scheme) {
      case bench::Scheme::CiSubopt: r = ci::solve_suboptimal(rot, req, noise); break;
      case bench::Scheme::CiSinrOnly:
        r = ci::solve_sinr_only(rot, req, noise, cons, env.ci.rho);
        break;
      default: {
        const ci::CiResult init = ci::find_feasible_start(rot, req, noise, cons);
        if (init.status == PrecoderStatus::Infeasible) {
          throw std::runtime_error("ser: re-precoding infeasible for a drawn frame");
        }
        const ci::DcResult dc = ci::solve_dc(rot, req, noise, cons, init.solution);
        r.status = dc.status;
        r.solution = dc.solution;
        break;
      }
    }
    if (r.status == PrecoderStatus::Infeasible) {
      throw std::runtime_error("ser: re-precoding infeasible for a drawn frame");
    }
    return r.solution;
  };

  // The Monte Carlo caches designs by relative symbol pattern and expects
  // the seed solution to belong to the all-equal pattern.
  const bool all_equal = std::all_of(env.frame_symbols.begin(), env.frame_symbols.end(),
                                     [&](int s) { return s == env.frame_symbols.front(); });
  CiSolution base = env.ci;
  if (!all_equal) {
    base = resolve(rotate_channels(ch, SymbolFrame::from_symbols(
                                           cons, std::vector<int>(ch.users(), 0))));
  }
  const verify::SerResult result =
      verify::symbol_mc_ser(base, ch, req, noise, cons, symbols, seed, resolve);
  std::printf("%s\n", io::ser_to_json(result).dump(2).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ci-swipt: constructive-interference SWIPT precoder designer and benchmark"};
  app.require_subcommand(1);

  int gen_k = 4, gen_n = 4;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "Draw a seeded Rayleigh channel instance");
  gen->add_option("--k", gen_k, "Number of users");
  gen->add_option("--n", gen_n, "Number of transmit antennas");
  gen->add_option("--seed", gen_seed, "Channel seed");
  gen->add_option("--out", gen_out, "Output channel JSON")->required();

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Design a precoder for one channel instance");
  solve->add_option("--scheme", solve_args.scheme, "ci-dc | ci-sub | conv-sca | conv-sinr")
      ->check(CLI::IsMember({"ci-dc", "ci-sub", "conv-sca", "conv-sinr"}));
  solve->add_option("--channels", solve_args.channels, "Channel JSON")->required();
  solve->add_option("--sinr-db", solve_args.sinr_db, "Per-user SINR target, dB");
  solve->add_option("--eh-db", solve_args.eh_db, "Per-user harvested-power target, dB");
  solve->add_option("--n0", solve_args.n0, "Antenna noise power, linear");
  solve->add_option("--nc", solve_args.nc, "Conversion noise power, linear");
  solve->add_option("--mod", solve_args.modulation, "PSK order");
  solve->add_option("--out", solve_args.out, "Output solution JSON")->required();

  std::string check_channels, check_solution;
  CLI::App* check = app.add_subcommand("check", "Audit a solution against its constraints");
  check->add_option("--channels", check_channels, "Channel JSON")->required();
  check->add_option("--solution", check_solution, "Solution JSON")->required();

  std::string sweep_config, sweep_out;
  CLI::App* sweep = app.add_subcommand("sweep", "Run a Monte Carlo power sweep");
  sweep->add_option("--config", sweep_config, "Sweep config JSON")->required();
  sweep->add_option("--out", sweep_out, "Output CSV")->required();

  std::string ser_channels, ser_solution;
  std::int64_t ser_symbols = 100000;
  std::uint64_t ser_seed = 1;
  CLI::App* ser = app.add_subcommand("ser", "Symbol-level Monte Carlo error rate");
  ser->add_option("--channels", ser_channels, "Channel JSON")->required();
  ser->add_option("--solution", ser_solution, "Solution JSON")->required();
  ser->add_option("--symbols", ser_symbols, "Number of symbol slots");
  ser->add_option("--seed", ser_seed, "Noise / data seed");

  try {
    app.parse(argc, argv);
    if (gen->parsed()) return cmd_gen(gen_k, gen_n, gen_seed, gen_out);
    if (solve->parsed()) return cmd_solve(solve_args);
    if (check->parsed()) return cmd_check(check_channels, check_solution);
    if (sweep->parsed()) return cmd_sweep(sweep_config, sweep_out);
    if (ser->parsed()) return cmd_ser(ser_channels, ser_solution, ser_symbols, ser_seed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
