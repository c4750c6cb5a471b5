// SPDX-License-Identifier: Apache-2.0
//
// Part of ci-swipt, a transmit-precoder design library for joint wireless
// information and power transfer in the MISO downlink.

#include "ciswipt/bench.hpp"

#include "ciswipt/rng.hpp"
#include "ciswipt/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ciswipt::bench {

namespace {

/// Substream tag for the per-instance symbol frame; keeps the frame draw off
/// the channel stream and off the multistart substreams.
constexpr std::uint64_t kFrameStream = 101;

struct Accumulator {
  std::vector<double> linear;
  std::vector<double> db;
  double iterations = 0.0;
  int feasible = 0;
  double seconds = 0.0;
};

std::string dump_audit_failure(Scheme scheme, double axis_value, int instance,
                               std::uint64_t seed, const SchemeOutcome& outcome,
                               const verify::SlackReport& report) {
  std::ostringstream out;
  out << "sweep audit failure: scheme=" << scheme_name(scheme) << " axis_value=" << axis_value
      << " instance=" << instance << " seed=" << seed << " status=" << to_string(outcome.status)
      << " power=" << outcome.power << " min_slack=" << report.min_slack;
  for (std::size_t i = 0; i < report.users.size(); ++i) {
    out << " user" << i << "=(decode " << report.users[i].decode << ", harvest "
        << report.users[i].harvest << ")";
  }
  return out.str();
}

double mean_of(const std::vector<double>& values) {
  double mean = 0.0;
  for (double v : values) mean += v;
  return mean / static_cast<double>(values.size());
}

double sample_std(const std::vector<double>& values) {
  const int n = static_cast<int>(values.size());
  if (n < 2) return 0.0;
  const double mean = mean_of(values);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / (n - 1));
}

}  // namespace

std::string scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::CiDc: return "CI_DC";
    case Scheme::CiSubopt: return "CI_SUBOPT";
    case Scheme::ConvSca: return "CONV_SCA";
    case Scheme::ConvSinrOnly: return "CONV_SINR_ONLY";
    case Scheme::CiSinrOnly: return "CI_SINR_ONLY";
  }
  throw std::invalid_argument("scheme_name: unknown scheme");
}

Scheme scheme_from_name(const std::string& name) {
  if (name == "CI_DC") return Scheme::CiDc;
  if (name == "CI_SUBOPT") return Scheme::CiSubopt;
  if (name == "CONV_SCA") return Scheme::ConvSca;
  if (name == "CONV_SINR_ONLY") return Scheme::ConvSinrOnly;
  if (name == "CI_SINR_ONLY") return Scheme::CiSinrOnly;
  throw std::invalid_argument("scheme_from_name: unknown scheme '" + name + "'");
}

std::string axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::SinrDb: return "SINR_DB";
    case SweepAxis::EhDb: return "EH_DB";
    case SweepAxis::Antennas: return "ANTENNAS";
  }
  throw std::invalid_argument("axis_name: unknown axis");
}

SweepAxis axis_from_name(const std::string& name) {
  if (name == "SINR_DB") return SweepAxis::SinrDb;
  if (name == "EH_DB") return SweepAxis::EhDb;
  if (name == "ANTENNAS") return SweepAxis::Antennas;
  throw std::invalid_argument("axis_from_name: unknown axis '" + name + "'");
}

void SweepConfig::validate() const {
  if (users < 1 || antennas < 1) throw std::invalid_argument("sweep: users/antennas must be >= 1");
  if (modulation < 2) throw std::invalid_argument("sweep: modulation order must be >= 2");
  if (instances < 1) throw std::invalid_argument("sweep: instances must be >= 1");
  if (axis_values.empty()) throw std::invalid_argument("sweep: axis value list is empty");
  if (schemes.empty()) throw std::invalid_argument("sweep: scheme list is empty");
  if (axis == SweepAxis::Antennas) {
    for (double v : axis_values) {
      if (v < 1.0 || v != std::floor(v)) {
        throw std::invalid_argument("sweep: antenna counts must be positive integers");
      }
    }
  }
  NoiseModel{n0, nc}.validate();
}

ChannelInstance gen_channels(int users, int antennas, std::uint64_t seed) {
  if (users < 1 || antennas < 1) throw std::invalid_argument("gen_channels: bad dimensions");
  Rng rng(seed);
  ChannelInstance ch;
  ch.rows.resize(users, antennas);
  for (int i = 0; i < users; ++i) {
    for (int j = 0; j < antennas; ++j) ch.rows(i, j) = rng.cgaussian(1.0);
  }
  return ch;
}

SymbolFrame draw_frame(int users, const Constellation& cons, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<int> symbols(users);
  for (int& s : symbols) s = rng.uniform_int(cons.order);
  return SymbolFrame::from_symbols(cons, symbols);
}

double aggregate_power_db(const std::vector<double>& linear_powers) {
  if (linear_powers.empty()) throw std::invalid_argument("aggregate_power_db: empty input");
  double mean = 0.0;
  for (double p : linear_powers) mean += p;
  return linear_to_db(mean / static_cast<double>(linear_powers.size()));
}

SchemeOutcome run_scheme(Scheme scheme, const ChannelInstance& channels, const SymbolFrame& frame,
                         const std::vector<UserRequirement>& req, const NoiseModel& noise,
                         const Constellation& cons, std::uint64_t seed, const SweepConfig& cfg) {
  SchemeOutcome out;
  const std::vector<double> rho_open(channels.users(), 1.0 - kRhoMin);
  switch (scheme) {
    case Scheme::CiDc: {
      const RotatedChannels rot = rotate_channels(channels, frame);
      const ci::CiResult init = cfg.dc_from_suboptimal
                                    ? ci::solve_suboptimal(rot, req, noise)
                                    : ci::find_feasible_start(rot, req, noise, cons);
      if (init.status != PrecoderStatus::Optimal) {
        out.status = init.status;
        out.ci = init.solution;
        out.power = init.solution.total_power();
        out.iterations = 1.0;
        return out;
      }
      ci::DcOptions options;
      options.tol = cfg.solver_tol;
      options.max_outer = cfg.max_outer;
      options.record_iterates = false;
      const ci::DcResult dc = ci::solve_dc(rot, req, noise, cons, init.solution, options);
      out.status = dc.status;
      out.ci = dc.solution;
      out.power = dc.solution.total_power();
      out.iterations = static_cast<double>(dc.state.objective_history.size()) - 1.0;
      return out;
    }
    case Scheme::CiSubopt: {
      const RotatedChannels rot = rotate_channels(channels, frame);
      const ci::CiResult r = ci::solve_suboptimal(rot, req, noise);
      out.status = r.status;
      out.ci = r.solution;
      out.power = r.solution.total_power();
      out.iterations = 1.0;
      return out;
    }
    case Scheme::CiSinrOnly: {
      const RotatedChannels rot = rotate_channels(channels, frame);
      const ci::CiResult r = ci::solve_sinr_only(rot, req, noise, cons, rho_open);
      out.status = r.status;
      out.ci = r.solution;
      out.power = r.solution.total_power();
      out.iterations = 1.0;
      return out;
    }
    case Scheme::ConvSca: {
      conv::MultistartOptions options;
      options.seed = seed;
      options.sca.tol = cfg.solver_tol;
      options.sca.max_outer = cfg.max_outer;
      const conv::ScaResult r = conv::solve_with_eh_multistart(channels, req, noise, options);
      out.status = r.status;
      out.is_ci = false;
      out.conv = r.solution;
      out.power = r.solution.total_power();
      out.iterations = static_cast<double>(r.state.objective_history.size()) - 1.0;
      if (out.iterations < 0.0) out.iterations = 0.0;
      return out;
    }
    case Scheme::ConvSinrOnly: {
      const conv::ConvResult r = conv::solve_sinr_only(channels, req, noise, rho_open);
      out.status = r.status;
      out.is_ci = false;
      out.conv = r.solution;
      out.power = r.solution.total_power();
      out.iterations = 1.0;
      return out;
    }
  }
  throw std::invalid_argument("run_scheme: unknown scheme");
}

SweepResult run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const Constellation cons = Constellation::mpsk(cfg.modulation);
  const NoiseModel noise{cfg.n0, cfg.nc};
  SweepResult result;
  result.config = cfg;

  for (double axis_value : cfg.axis_values) {
    int antennas = cfg.antennas;
    double sinr_db = cfg.sinr_db;
    double eh_db = cfg.eh_db;
    switch (cfg.axis) {
      case SweepAxis::SinrDb: sinr_db = axis_value; break;
      case SweepAxis::EhDb: eh_db = axis_value; break;
      case SweepAxis::Antennas: antennas = static_cast<int>(axis_value); break;
    }
    const UserRequirement want{db_to_linear(sinr_db), db_to_linear(eh_db)};
    const std::vector<UserRequirement> req(cfg.users, want);

    std::vector<Accumulator> acc(cfg.schemes.size());
    for (int instance = 0; instance < cfg.instances; ++instance) {
      const std::uint64_t seed = cfg.base_seed + static_cast<std::uint64_t>(instance);
      const ChannelInstance channels = gen_channels(cfg.users, antennas, seed);
      const SymbolFrame frame = draw_frame(cfg.users, cons, derive_seed(seed, kFrameStream));

      for (std::size_t s = 0; s < cfg.schemes.size(); ++s) {
        const Scheme scheme = cfg.schemes[s];
        const auto start = std::chrono::steady_clock::now();
        const SchemeOutcome outcome =
            run_scheme(scheme, channels, frame, req, noise, cons, seed, cfg);
        if (cfg.wall_clock) {
          acc[s].seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                                .count();
        }
        if (outcome.status == PrecoderStatus::Infeasible) continue;

        // SINR-only schemes make no harvesting promise; audit what they claim.
        std::vector<UserRequirement> claimed = req;
        if (scheme == Scheme::CiSinrOnly || scheme == Scheme::ConvSinrOnly) {
          for (UserRequirement& r : claimed) r.energy = 0.0;
        }
        const verify::SlackReport audit =
            outcome.is_ci ? verify::check_solution(outcome.ci, channels, frame, claimed, noise, cons)
                          : verify::check_solution(outcome.conv, channels, claimed, noise);
        if (!audit.pass) {
          if (outcome.status == PrecoderStatus::Optimal) {
            throw std::runtime_error(
                dump_audit_failure(scheme, axis_value, instance, seed, outcome, audit));
          }
          continue;  // non-converged and not feasible: excluded like an infeasible run
        }
        acc[s].feasible += 1;
        acc[s].linear.push_back(outcome.power);
        acc[s].db.push_back(linear_to_db(outcome.power));
        acc[s].iterations += outcome.iterations;
      }
    }

    for (std::size_t s = 0; s < cfg.schemes.size(); ++s) {
      SweepRow row;
      row.axis_value = axis_value;
      row.scheme = cfg.schemes[s];
      row.feasible = acc[s].feasible;
      if (acc[s].feasible > 0) {
        row.mean_power_db =
            cfg.mean_of_db ? mean_of(acc[s].db) : aggregate_power_db(acc[s].linear);
        row.std_db = sample_std(acc[s].db);
        row.mean_iterations = acc[s].iterations / acc[s].feasible;
      } else {
        row.mean_power_db = std::numeric_limits<double>::quiet_NaN();
        row.std_db = 0.0;
        row.mean_iterations = 0.0;
      }
      row.seconds = acc[s].seconds;
      result.rows.push_back(row);
    }
  }
  return result;
}

std::string to_csv(const SweepResult& result) {
  const SweepConfig& cfg = result.config;
  std::ostringstream out;
  char buf[256];
  out << "# ci-swipt sweep\n";
  std::snprintf(buf, sizeof buf,
                "# users=%d antennas=%d modulation=%d n0=%g nc=%g instances=%d base_seed=%llu\n",
                cfg.users, cfg.antennas, cfg.modulation, cfg.n0, cfg.nc, cfg.instances,
                static_cast<unsigned long long>(cfg.base_seed));
  out << buf;
  std::snprintf(buf, sizeof buf, "# axis=%s fixed_sinr_db=%g fixed_eh_db=%g\n",
                axis_name(cfg.axis).c_str(), cfg.sinr_db, cfg.eh_db);
  out << buf;
  out << "# schemes=";
  for (std::size_t s = 0; s < cfg.schemes.size(); ++s) {
    out << (s ? "," : "") << scheme_name(cfg.schemes[s]);
  }
  out << "\n";
  out << "# dc_init=" << (cfg.dc_from_suboptimal ? "suboptimal" : "bootstrap") << "\n";
  out << "# aggregation="
      << (cfg.mean_of_db ? "mean of per-instance dB (mean_of_db=true)"
                         : "10*log10 of mean linear power")
      << "\n";
  out << "# seconds=" << (cfg.wall_clock ? "wall clock" : "fixed 0 (deterministic mode)") << "\n";
  out << "axis,scheme,mean_power_db,std_db,feasible,iters,seconds\n";
  for (const SweepRow& row : result.rows) {
    std::snprintf(buf, sizeof buf, "%.6g,%s,%.6f,%.6f,%d,%.2f,%.6f\n", row.axis_value,
                  scheme_name(row.scheme).c_str(), row.mean_power_db, row.std_db, row.feasible,
                  row.mean_iterations, row.seconds);
    out << buf;
  }
  return out.str();
}

bool feasible_counts_monotone(const SweepResult& result) {
  if (result.config.axis == SweepAxis::Antennas) return true;
  const std::size_t schemes = result.config.schemes.size();
  const std::size_t values = result.config.axis_values.size();
  if (result.rows.size() != schemes * values) return false;
  for (std::size_t s = 0; s < schemes; ++s) {
    for (std::size_t v = 0; v + 1 < values; ++v) {
      const SweepRow& a = result.rows[v * schemes + s];
      const SweepRow& b = result.rows[(v + 1) * schemes + s];
      if (b.axis_value > a.axis_value && b.feasible > a.feasible) return false;
    }
  }
  return true;
}

}  // namespace ciswipt::bench
