// SPDX-License-Identifier: Apache-2.0
//
// Part of ci-swipt, a transmit-precoder design library for joint wireless
// information and power transfer in the MISO downlink.
//
// Symbol-level precoding under constructive interference. All solvers work
// on the virtual multicast form: one common precoded vector w over the
// data-rotated channels, per-user received point h~_i^T w constrained to a
// wedge around the reference symbol, harvested power (1 - rho_i)|h~_i^T w|^2.

#pragma once

#include "ciswipt/conic.hpp"
#include "ciswipt/model.hpp"

#include <vector>

namespace ciswipt {

enum class PrecoderStatus { Optimal, Infeasible, MaxIter };

std::string to_string(PrecoderStatus status);

}  // namespace ciswipt

namespace ciswipt::ci {

/// Quadratic whose root balances the decoding threshold against the
/// harvesting requirement; independent of the beamformer.
struct RhoStarBreakdown {
  double a = 0.0;  // -gamma * n0
  double b = 0.0;  // gamma * n0 - energy - gamma * nc
  double c = 0.0;  // gamma * nc
  double discriminant = 0.0;
  double rho_star = 0.0;
};

/// Splitting ratio with Gamma*(n0 + nc/rho) = energy/(1-rho) when
/// energy > 0; exactly 1 when energy == 0 (clamped by callers).
RhoStarBreakdown rho_star(const UserRequirement& req, const NoiseModel& noise);

struct CiResult {
  PrecoderStatus status = PrecoderStatus::Infeasible;
  CiSolution solution;
  int iterations = 0;  // conic iterations for one-shot solvers
};

/// Reduced problem: minimize ||w||^2 with Im(h~_i^T w) = 0 and
/// Re(h~_i^T w) >= max(decoding, harvesting) threshold at rho_i = rho_i*.
CiResult solve_suboptimal(const RotatedChannels& rot, const std::vector<UserRequirement>& req,
                          const NoiseModel& noise,
                          const conic::SolverSettings& settings = {});

/// Wedge-constrained power minimization at fixed splitting ratios, no
/// harvesting rows. This is the SINR-only reference scheme and the SOCP
/// stage of the feasibility bootstrap.
CiResult solve_sinr_only(const RotatedChannels& rot, const std::vector<UserRequirement>& req,
                         const NoiseModel& noise, const Constellation& cons,
                         const std::vector<double>& rho,
                         const conic::SolverSettings& settings = {});

/// SINR-only SOCP at fixed rho (default: clamped rho*), then the smallest
/// amplification beta >= 1 restoring every harvesting constraint. Wedge
/// feasibility survives amplification.
CiResult find_feasible_start(const RotatedChannels& rot, const std::vector<UserRequirement>& req,
                             const NoiseModel& noise, const Constellation& cons,
                             const std::vector<double>& rho_init = {},
                             const conic::SolverSettings& settings = {});

struct DcOptions {
  double tol = 1e-5;   // relative change of ||w||^2 between outer iterates
  int max_outer = 50;
  bool record_iterates = true;
  conic::SolverSettings conic;
};

/// Trace of the convexified descent.
struct DcState {
  std::vector<Eigen::Vector2d> expansion;    // [Re, Im](h~_i^T w) at the final w
  CVector w;
  std::vector<double> rho;
  std::vector<double> objective_history;     // ||w||^2 per outer iterate, entry 0 = init
  std::vector<double> u, g;                  // epigraph scalars: u^2 = nc/rho, g^2 = n0 + u^2
  std::vector<CiSolution> iterates;          // accepted iterates, when recorded
  bool converged = false;
};

struct DcResult {
  PrecoderStatus status = PrecoderStatus::Infeasible;
  CiSolution solution;
  DcState state;
};

/// Difference-of-convex descent on the full problem: at each outer step the
/// harvested power |h~_i^T w|^2 is replaced by its tangent at the previous
/// iterate (a global underestimator, so every iterate stays feasible for the
/// original constraints) and the resulting cone program is solved jointly in
/// (w, rho) with epigraph variables for the rho-dependent decoding threshold.
/// `init` must be feasible; objective history is nonincreasing.
DcResult solve_dc(const RotatedChannels& rot, const std::vector<UserRequirement>& req,
                  const NoiseModel& noise, const Constellation& cons, const CiSolution& init,
                  const DcOptions& options = {});

}  // namespace ciswipt::ci
