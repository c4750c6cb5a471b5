// SPDX-License-Identifier: Apache-2.0
//
// Part of ci-swipt, a transmit-precoder design library for joint wireless
// information and power transfer in the MISO downlink.
//
// Independent auditing of precoder outputs. Every constraint is recomputed
// here from raw complex dot products, deliberately sharing nothing with the
// solver code paths beyond the value types, so a solver bug cannot certify
// itself. Also hosts the symbol-level Monte Carlo demodulator and a
// brute-force grid reference for small square systems.

#pragma once

#include "ciswipt/model.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace ciswipt::verify {

/// A report passes when every normalized slack clears -kSlackTol.
inline constexpr double kSlackTol = 1e-6;

/// Normalized constraint margins of one user; positive means satisfied.
struct UserSlacks {
  double decode = 0.0;   // wedge margin / max(1, threshold), or relative SINR margin
  double harvest = 0.0;  // (harvested - E) / max(1, E)
};

struct SlackReport {
  std::vector<UserSlacks> users;
  double min_slack = 0.0;
  bool pass = false;
};

/// Audit of a symbol-level solution against the wedge and harvesting
/// constraints implied by (channels, frame, req, noise, cons).
SlackReport check_ci(const CiSolution& sol, const ChannelInstance& channels,
                     const SymbolFrame& frame, const std::vector<UserRequirement>& req,
                     const NoiseModel& noise, const Constellation& cons);

/// Audit of a block-level solution against its SINR and harvesting
/// constraints. SINR margins are relative: (SINR - gamma) / max(1, gamma).
SlackReport check_conventional(const ConventionalSolution& sol, const ChannelInstance& channels,
                               const std::vector<UserRequirement>& req, const NoiseModel& noise);

SlackReport check_solution(const CiSolution& sol, const ChannelInstance& channels,
                           const SymbolFrame& frame, const std::vector<UserRequirement>& req,
                           const NoiseModel& noise, const Constellation& cons);
SlackReport check_solution(const ConventionalSolution& sol, const ChannelInstance& channels,
                           const std::vector<UserRequirement>& req, const NoiseModel& noise);

/// Produces the precoder for one rotated-channel realization during the
/// symbol-level Monte Carlo. Must return a solution feasible for `rot`.
using FrameSolver = std::function<CiSolution(const RotatedChannels& rot)>;

struct SerResult {
  std::vector<double> ser;  // per-user symbol error fraction
  std::int64_t symbols = 0;
};

/// Symbol-level Monte Carlo: draws uniform data frames, transmits the
/// precoded vector re-phased by user 1's symbol, applies the two-stage
/// receive model y~_i = sqrt(rho_i) (h_i^T x + n_A) + n_C, and demodulates
/// by nearest constellation phase.
///
/// The precoder depends on the frame only through the M^(K-1) relative
/// symbol patterns, so solutions are cached per pattern. `sol` seeds the
/// cache for the all-equal pattern; every other pattern comes from
/// `resolve`, which is therefore required when K > 1.
SerResult symbol_mc_ser(const CiSolution& sol, const ChannelInstance& channels,
                        const std::vector<UserRequirement>& req, const NoiseModel& noise,
                        const Constellation& cons, std::int64_t n_symbols, std::uint64_t seed,
                        const FrameSolver& resolve = {});

/// Brute-force reference for K = N: writes the received vector as
/// v_i = r_i e^{j psi_i}, grids psi_i over the wedge (nested under density
/// doubling, so refinement is monotone) and solves the remaining problem in
/// (r, rho) exactly per grid point, then sharpens the best vertex with a
/// deterministic compass descent in psi. Returns the best w = H~^{-1} v
/// power found, always a feasible-point upper bound on the optimum.
/// Throws std::invalid_argument unless K = N with invertible rows.
double oracle_phase_grid(const RotatedChannels& rot, const std::vector<UserRequirement>& req,
                         const NoiseModel& noise, const Constellation& cons, int grid_density);

}  // namespace ciswipt::verify
