// SPDX-License-Identifier: Apache-2.0
//
// Part of ci-swipt, a transmit-precoder design library for joint wireless
// information and power transfer in the MISO downlink.
//
// Benchmark harness: seeded Rayleigh channel generation, Monte Carlo power
// sweeps over SINR / harvesting / antenna-count axes with per-instance
// constraint audits, and CSV emission. Sweeps are deterministic functions of
// the config, byte for byte.

#pragma once

#include "ciswipt/ci_precoder.hpp"
#include "ciswipt/conventional_precoder.hpp"
#include "ciswipt/model.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ciswipt::bench {

enum class Scheme { CiDc, CiSubopt, ConvSca, ConvSinrOnly, CiSinrOnly };

/// Stable identifier used in configs and CSV rows ("CI_DC", ...).
std::string scheme_name(Scheme scheme);
Scheme scheme_from_name(const std::string& name);

enum class SweepAxis { SinrDb, EhDb, Antennas };

std::string axis_name(SweepAxis axis);
SweepAxis axis_from_name(const std::string& name);

struct SweepConfig {
  int users = 4;
  int antennas = 4;
  int modulation = 4;
  double n0 = 1.0;
  double nc = 1.0;
  SweepAxis axis = SweepAxis::SinrDb;
  std::vector<double> axis_values;
  double sinr_db = 20.0;  // fixed Gamma when the axis varies something else
  double eh_db = 10.0;    // fixed E likewise
  int instances = 100;
  std::uint64_t base_seed = 1;
  std::vector<Scheme> schemes = {Scheme::CiDc, Scheme::CiSubopt, Scheme::ConvSca};
  double solver_tol = 1e-5;
  int max_outer = 50;
  bool dc_from_suboptimal = false;  // start the DC descent at the suboptimal point
  bool mean_of_db = false;          // aggregate per-instance dB instead of linear watts
  bool wall_clock = false;          // real seconds column; breaks byte determinism

  void validate() const;
};

struct SweepRow {
  double axis_value = 0.0;
  Scheme scheme = Scheme::CiDc;
  double mean_power_db = 0.0;
  double std_db = 0.0;  // sample std of per-instance dB powers
  int feasible = 0;
  double mean_iterations = 0.0;  // outer iterations; 1 for one-shot schemes
  double seconds = 0.0;
};

struct SweepResult {
  SweepConfig config;
  std::vector<SweepRow> rows;
};

/// i.i.d. CN(0,1) entries, row i drawn before row i+1, reals before
/// imaginaries within an entry; bit-identical for equal seeds.
ChannelInstance gen_channels(int users, int antennas, std::uint64_t seed);

/// Uniform random M-PSK symbol per user.
SymbolFrame draw_frame(int users, const Constellation& cons, std::uint64_t seed);

/// 10 log10 of the arithmetic mean of linear powers.
double aggregate_power_db(const std::vector<double>& linear_powers);

/// One scheme on one prepared instance. `seed` feeds scheme-internal
/// randomness (the multistart bootstrap); everything else is deterministic.
struct SchemeOutcome {
  PrecoderStatus status = PrecoderStatus::Infeasible;
  bool is_ci = true;
  double power = 0.0;
  double iterations = 0.0;
  CiSolution ci;
  ConventionalSolution conv;
};

SchemeOutcome run_scheme(Scheme scheme, const ChannelInstance& channels, const SymbolFrame& frame,
                         const std::vector<UserRequirement>& req, const NoiseModel& noise,
                         const Constellation& cons, std::uint64_t seed, const SweepConfig& cfg);

/// Full Monte Carlo sweep. Per axis value and instance: channel from seed
/// base_seed + instance index, one uniform frame per instance (shared across
/// axis values), every configured scheme, and an independent constraint
/// audit of each solution. An audit failure on an OPTIMAL return aborts the
/// sweep with a diagnostic dump; infeasible instances are counted and
/// excluded from the mean.
SweepResult run_sweep(const SweepConfig& cfg);

/// CSV with metadata comments and the row header
/// axis,scheme,mean_power_db,std_db,feasible,iters,seconds.
std::string to_csv(const SweepResult& result);

/// True when no scheme's feasible count increases along an ascending
/// SINR or harvesting axis (constraints only tighten).
bool feasible_counts_monotone(const SweepResult& result);

}  // namespace ciswipt::bench
