// SPDX-License-Identifier: Apache-2.0
//
// Part of ci-swipt, a transmit-precoder design library for joint wireless
// information and power transfer in the MISO downlink.
//
// Domain model. A base station with N antennas serves K single-antenna
// users; each user splits its received signal between an information
// decoder (fraction rho) and an energy harvester (fraction 1 - rho). Two
// precoding families are covered:
//
//   * symbol-level precoding that steers multiuser interference into the
//     constructive region of the data symbol (a wedge of half-angle pi/M
//     around each M-PSK point), and
//   * conventional block-level beamforming where interference is noise.
//
// This header holds the shared value types plus the exact constraint
// evaluators both designs are audited against.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace ciswipt {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Splitting ratios are kept inside [kRhoMin, 1 - kRhoMin]; the open
/// interval (0, 1) itself is not conic-representable.
inline constexpr double kRhoMin = 1e-6;

double db_to_linear(double db);
double linear_to_db(double linear);

/// Unit-amplitude M-PSK alphabet. Symbol m sits at phase
/// pi/M + 2*pi*m/M, so for QPSK the decision thresholds are the
/// coordinate axes.
struct Constellation {
  int order = 4;
  double amplitude = 1.0;
  double half_angle = 0.0;   // pi/order, wedge half-angle of the constructive region
  double phase_offset = 0.0;

  static Constellation mpsk(int order);

  double phase(int symbol) const;
  Complex point(int symbol) const;
  int nearest_symbol(Complex received) const;
};

struct NoiseModel {
  double n0 = 1.0;  // antenna noise power, linear
  double nc = 1.0;  // RF-to-baseband conversion noise power, linear
  void validate() const;
};

struct UserRequirement {
  double gamma = 1.0;   // SINR target, linear
  double energy = 0.0;  // harvested-power target, linear
  void validate() const;
};

/// Per-user decoding threshold sqrt(gamma * (n0 + nc / rho)): the magnitude
/// the useful signal component must reach for the split SINR to hit gamma.
double decode_threshold(const UserRequirement& req, const NoiseModel& noise, double rho);

struct ChannelInstance {
  CMatrix rows;  // K x N; row i is h_i^T, the channel of user i

  int users() const { return static_cast<int>(rows.rows()); }
  int antennas() const { return static_cast<int>(rows.cols()); }
  void validate() const;
};

/// One constellation phase per user, the data snapshot a symbol-level
/// precoder is designed for.
struct SymbolFrame {
  std::vector<double> phases;

  static SymbolFrame from_symbols(const Constellation& cons, const std::vector<int>& symbols);
  int users() const { return static_cast<int>(phases.size()); }
};

/// Channels after absorbing the data: row i is h_i * exp(j(phi_1 - phi_i)).
/// Relative to these rows every user wants the same symbol, which turns the
/// symbol-level design into a virtual multicast problem with one common
/// precoded vector.
struct RotatedChannels {
  CMatrix rows;

  int users() const { return static_cast<int>(rows.rows()); }
  int antennas() const { return static_cast<int>(rows.cols()); }
};

RotatedChannels rotate_channels(const ChannelInstance& channels, const SymbolFrame& frame);

/// Symbol-level design: one precoded vector shared by all users.
struct CiSolution {
  CVector w;
  std::vector<double> rho;

  double total_power() const { return w.squaredNorm(); }
};

/// Block-level design: one beamformer per user.
struct ConventionalSolution {
  CMatrix beams;  // N x K; column k is t_k
  std::vector<double> rho;

  double total_power() const { return beams.squaredNorm(); }
};

/// Constraint margins of one user under the symbol-level design, all relative
/// to the rotated channel. The constructive region is
/// |alpha_i| <= (alpha_r - gamma_thresh) * tan(half_angle).
struct CiMargins {
  double alpha_r = 0.0;       // Re(h~_i^T w)
  double alpha_i = 0.0;       // Im(h~_i^T w)
  double gamma_thresh = 0.0;  // decode_threshold at this user's rho
  double slack = 0.0;         // (alpha_r - gamma_thresh) tan(theta) - |alpha_i|
  double harvested = 0.0;     // (1 - rho) |h~_i^T w|^2
};

struct CiEvaluation {
  std::vector<CiMargins> users;
  double total_power = 0.0;
};

struct ConventionalEvaluation {
  std::vector<double> sinr;       // |h_i^T t_i|^2 / (sum_{k!=i} |h_i^T t_k|^2 + n0 + nc/rho_i)
  std::vector<double> harvested;  // (1 - rho_i) (sum_k |h_i^T t_k|^2 + n0)
  double total_power = 0.0;
};

CiEvaluation evaluate_ci(const CiSolution& sol, const RotatedChannels& rotated,
                         const std::vector<UserRequirement>& req, const NoiseModel& noise,
                         const Constellation& cons);

ConventionalEvaluation evaluate_conventional(const ConventionalSolution& sol,
                                             const ChannelInstance& channels,
                                             const NoiseModel& noise);

}  // namespace ciswipt
