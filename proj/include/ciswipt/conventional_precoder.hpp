// SPDX-License-Identifier: Apache-2.0
//
// Part of ci-swipt, a transmit-precoder design library for joint wireless
// information and power transfer in the MISO downlink.
//
// Conventional block-level downlink beamforming: one beam per user, other
// users' streams count as interference. These are the baselines the
// interference-exploiting designs are measured against.

#pragma once

#include "ciswipt/ci_precoder.hpp"
#include "ciswipt/conic.hpp"
#include "ciswipt/model.hpp"

#include <cstdint>
#include <vector>

namespace ciswipt::conv {

struct ConvResult {
  PrecoderStatus status = PrecoderStatus::Infeasible;
  ConventionalSolution solution;
  int iterations = 0;
};

/// Power-minimizing SINR beamforming at fixed splitting ratios, no
/// harvesting constraints. Exact second-order cone formulation.
ConvResult solve_sinr_only(const ChannelInstance& channels,
                           const std::vector<UserRequirement>& req, const NoiseModel& noise,
                           const std::vector<double>& rho,
                           const conic::SolverSettings& settings = {});

/// Smallest uniform amplification of the beams after which every
/// harvesting constraint holds; SINRs only improve under amplification.
ConventionalSolution make_eh_feasible_init(const ConventionalSolution& sol,
                                           const ChannelInstance& channels,
                                           const std::vector<UserRequirement>& req,
                                           const NoiseModel& noise);

struct ScaOptions {
  double tol = 1e-5;
  int max_outer = 50;
  conic::SolverSettings conic;
};

struct ScaState {
  std::vector<double> objective_history;  // ||T||_F^2 per outer iterate, entry 0 = init
  bool converged = false;
};

struct ScaResult {
  PrecoderStatus status = PrecoderStatus::Infeasible;
  ConventionalSolution solution;
  ScaState state;
};

/// Joint beam / splitting-ratio design with harvesting targets. The
/// received-power term in the harvesting constraint is linearized at the
/// previous beams (successive convex approximation); each subproblem also
/// carries the rho-dependent noise epigraph, so rho moves jointly with the
/// beams. `init` must satisfy SINR and harvesting constraints.
ScaResult solve_with_eh_sca(const ChannelInstance& channels,
                            const std::vector<UserRequirement>& req, const NoiseModel& noise,
                            const ConventionalSolution& init, const ScaOptions& options = {});

struct MultistartOptions {
  int starts = 5;  // start 0 seeds rho at the balanced closed form, the rest draw uniformly
  std::uint64_t seed = 0;
  ScaOptions sca;
};

/// Best of several SCA runs from different splitting-ratio seeds. The SCA
/// descends to a stationary point that depends on where the bootstrap
/// placed rho, so a handful of restarts markedly tightens the result.
ScaResult solve_with_eh_multistart(const ChannelInstance& channels,
                                   const std::vector<UserRequirement>& req,
                                   const NoiseModel& noise,
                                   const MultistartOptions& options = {});

}  // namespace ciswipt::conv
