// SPDX-License-Identifier: Apache-2.0
//
// Part of ci-swipt, a transmit-precoder design library for joint wireless
// information and power transfer in the MISO downlink.

#include "ciswipt/verify.hpp"

#include "ciswipt/rng.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace ciswipt::verify {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double harvest_slack(double harvested, double energy) {
  return (harvested - energy) / std::max(1.0, energy);
}

SlackReport finish(std::vector<UserSlacks> users) {
  SlackReport report;
  report.users = std::move(users);
  report.min_slack = kInf;
  for (const UserSlacks& u : report.users) {
    report.min_slack = std::min({report.min_slack, u.decode, u.harvest});
  }
  if (report.users.empty()) report.min_slack = 0.0;
  report.pass = report.min_slack >= -kSlackTol;
  return report;
}

}  // namespace

SlackReport check_ci(const CiSolution& sol, const ChannelInstance& channels,
                     const SymbolFrame& frame, const std::vector<UserRequirement>& req,
                     const NoiseModel& noise, const Constellation& cons) {
  const int k = channels.users();
  const double sin_t = std::sin(cons.half_angle);
  const double cos_t = std::cos(cons.half_angle);
  std::vector<UserSlacks> users(k);
  for (int i = 0; i < k; ++i) {
    const double rho = sol.rho[i];
    if (!(rho > 0.0 && rho <= 1.0)) {
      users[i].decode = users[i].harvest = -kInf;
      continue;
    }
    // Rotation and received point rebuilt from scratch.
    Complex p = 0.0;
    const Complex spin = std::polar(1.0, frame.phases[0] - frame.phases[i]);
    for (int j = 0; j < channels.antennas(); ++j) {
      p += channels.rows(i, j) * spin * sol.w(j);
    }
    const double thresh = std::sqrt(req[i].gamma * (noise.n0 + noise.nc / rho));
    const double wedge = (p.real() - thresh) * sin_t - std::abs(p.imag()) * cos_t;
    users[i].decode = wedge / std::max(1.0, thresh);
    users[i].harvest = harvest_slack((1.0 - rho) * std::norm(p), req[i].energy);
  }
  return finish(std::move(users));
}

SlackReport check_conventional(const ConventionalSolution& sol, const ChannelInstance& channels,
                               const std::vector<UserRequirement>& req, const NoiseModel& noise) {
  const int k = channels.users();
  std::vector<UserSlacks> users(k);
  for (int i = 0; i < k; ++i) {
    const double rho = sol.rho[i];
    if (!(rho > 0.0 && rho <= 1.0)) {
      users[i].decode = users[i].harvest = -kInf;
      continue;
    }
    double signal = 0.0;
    double interference = 0.0;
    double received = 0.0;
    for (int c = 0; c < static_cast<int>(sol.beams.cols()); ++c) {
      Complex g = 0.0;
      for (int j = 0; j < channels.antennas(); ++j) g += channels.rows(i, j) * sol.beams(j, c);
      const double power = std::norm(g);
      received += power;
      if (c == i) {
        signal = power;
      } else {
        interference += power;
      }
    }
    const double sinr = signal / (interference + noise.n0 + noise.nc / rho);
    users[i].decode = (sinr - req[i].gamma) / std::max(1.0, req[i].gamma);
    users[i].harvest = harvest_slack((1.0 - rho) * (received + noise.n0), req[i].energy);
  }
  return finish(std::move(users));
}

SlackReport check_solution(const CiSolution& sol, const ChannelInstance& channels,
                           const SymbolFrame& frame, const std::vector<UserRequirement>& req,
                           const NoiseModel& noise, const Constellation& cons) {
  return check_ci(sol, channels, frame, req, noise, cons);
}

SlackReport check_solution(const ConventionalSolution& sol, const ChannelInstance& channels,
                           const std::vector<UserRequirement>& req, const NoiseModel& noise) {
  return check_conventional(sol, channels, req, noise);
}

SerResult symbol_mc_ser(const CiSolution& sol, const ChannelInstance& channels,
                        const std::vector<UserRequirement>& req, const NoiseModel& noise,
                        const Constellation& cons, std::int64_t n_symbols, std::uint64_t seed,
                        const FrameSolver& resolve) {
  (void)req;
  const int k = channels.users();
  const int m = cons.order;
  if (n_symbols < 1) throw std::invalid_argument("symbol_mc_ser: n_symbols must be >= 1");
  if (k > 1 && !resolve) {
    throw std::invalid_argument("symbol_mc_ser: K > 1 needs a frame solver for re-precoding");
  }

  // Cache key: relative pattern (s_i - s_1 mod M), packed base M.
  std::unordered_map<std::uint64_t, CiSolution> cache;
  cache.emplace(0, sol);

  Rng rng(seed);
  std::vector<int> symbols(k);
  std::vector<std::int64_t> errors(k, 0);
  for (std::int64_t t = 0; t < n_symbols; ++t) {
    std::uint64_t key = 0;
    for (int i = 0; i < k; ++i) symbols[i] = rng.uniform_int(m);
    for (int i = k - 1; i >= 1; --i) key = key * m + ((symbols[i] - symbols[0]) % m + m) % m;
    auto it = cache.find(key);
    if (it == cache.end()) {
      const SymbolFrame frame = SymbolFrame::from_symbols(cons, symbols);
      it = cache.emplace(key, resolve(rotate_channels(channels, frame))).first;
    }
    const CiSolution& design = it->second;
    const Complex carrier = std::polar(1.0, cons.phase(symbols[0]));
    for (int i = 0; i < k; ++i) {
      Complex y = 0.0;
      for (int j = 0; j < channels.antennas(); ++j) {
        y += channels.rows(i, j) * design.w(j) * carrier;
      }
      y += rng.cgaussian(noise.n0);
      const Complex split = std::sqrt(design.rho[i]) * y + rng.cgaussian(noise.nc);
      if (cons.nearest_symbol(split) != symbols[i]) ++errors[i];
    }
  }

  SerResult result;
  result.symbols = n_symbols;
  result.ser.resize(k);
  for (int i = 0; i < k; ++i) {
    result.ser[i] = static_cast<double>(errors[i]) / static_cast<double>(n_symbols);
  }
  return result;
}

namespace {

/// Exact minimum of r^T Q r over r >= lo (Q PSD, lo > 0) by enumerating
/// which bounds are active; the optimal active set always yields a feasible
/// candidate, so the minimum over candidates is the optimum.
double box_qp_min(const Eigen::MatrixXd& q, const Eigen::VectorXd& lo) {
  const int k = static_cast<int>(lo.size());
  double best = kInf;
  Eigen::VectorXd r(k);
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    int nf = 0;
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) {
        r(i) = lo(i);
      } else {
        ++nf;
      }
    }
    if (nf > 0) {
      Eigen::MatrixXd qff(nf, nf);
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(nf);
      int a = 0;
      for (int i = 0; i < k; ++i) {
        if (mask & (1u << i)) continue;
        int b = 0;
        for (int j = 0; j < k; ++j) {
          if (mask & (1u << j)) {
            rhs(a) -= q(i, j) * lo(j);
          } else {
            qff(a, b++) = q(i, j);
          }
        }
        ++a;
      }
      const Eigen::VectorXd rf = qff.ldlt().solve(rhs);
      bool ok = true;
      a = 0;
      for (int i = 0; i < k && ok; ++i) {
        if (mask & (1u << i)) continue;
        if (!(rf(a) >= lo(i)) || !std::isfinite(rf(a))) ok = false;
        r(i) = rf(a++);
      }
      if (!ok) continue;
    }
    best = std::min(best, r.dot(q * r));
  }
  return best;
}

double min_over_box(const Eigen::MatrixXd& q, const Eigen::VectorXd& lo) {
  const int k = static_cast<int>(lo.size());
  if (k == 1) return q(0, 0) * lo(0) * lo(0);
  if (k == 2) {
    const double q00 = q(0, 0), q01 = q(0, 1), q11 = q(1, 1);
    double best = q00 * lo(0) * lo(0) + 2.0 * q01 * lo(0) * lo(1) + q11 * lo(1) * lo(1);
    if (q01 < 0.0) {
      const double r1 = std::max(lo(1), -q01 * lo(0) / q11);
      best = std::min(best, q00 * lo(0) * lo(0) + 2.0 * q01 * lo(0) * r1 + q11 * r1 * r1);
      const double r0 = std::max(lo(0), -q01 * lo(1) / q00);
      best = std::min(best, q00 * r0 * r0 + 2.0 * q01 * r0 * lo(1) + q11 * lo(1) * lo(1));
    }
    return best;
  }
  return box_qp_min(q, lo);
}

/// Smallest received magnitude that satisfies one user at received phase psi,
/// minimized exactly over the splitting ratio. The decoding bound falls with
/// rho while the harvesting bound rises, so the optimum sits at their
/// crossing (a quadratic in rho) or at rho = 1 when no energy is required.
double magnitude_bound(const UserRequirement& req, const NoiseModel& noise, double theta,
                       double psi) {
  const double margin = std::sin(theta - std::abs(psi));
  if (!(margin > 1e-12)) return kInf;
  const double wedge = std::sin(theta) / margin;
  const double geff = req.gamma * wedge * wedge;
  if (req.energy <= 0.0) return std::sqrt(geff * (noise.n0 + noise.nc));
  if (geff <= 0.0) return std::sqrt(req.energy);
  const double a2 = -geff * noise.n0;
  const double a1 = geff * (noise.n0 - noise.nc) - req.energy;
  const double a0 = geff * noise.nc;
  const double rho = (-a1 - std::sqrt(a1 * a1 - 4.0 * a2 * a0)) / (2.0 * a2);
  return std::sqrt(req.energy / (1.0 - rho));
}

}  // namespace

double oracle_phase_grid(const RotatedChannels& rot, const std::vector<UserRequirement>& req,
                         const NoiseModel& noise, const Constellation& cons, int grid_density) {
  const int k = rot.users();
  if (k != rot.antennas()) {
    throw std::invalid_argument("oracle_phase_grid: requires K = N");
  }
  if (grid_density < 2) throw std::invalid_argument("oracle_phase_grid: density must be >= 2");
  Eigen::FullPivLU<CMatrix> lu(rot.rows);
  if (!lu.isInvertible()) {
    throw std::invalid_argument("oracle_phase_grid: singular rotated channel matrix");
  }
  const CMatrix gram_inv =
      (rot.rows * rot.rows.adjoint()).ldlt().solve(CMatrix::Identity(k, k));

  const double theta = cons.half_angle;
  const int d = grid_density;

  Eigen::MatrixXd q(k, k);
  Eigen::VectorXd lo(k);
  auto point_power = [&](const std::vector<double>& point) {
    for (int i = 0; i < k; ++i) {
      lo(i) = magnitude_bound(req[i], noise, theta, point[i]);
      if (!std::isfinite(lo(i))) return kInf;
    }
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        q(i, j) = (gram_inv(i, j) * std::polar(1.0, point[j] - point[i])).real();
      }
    }
    return min_over_box(q, lo);
  };

  // psi_a = -theta + 2 theta a / d is nested under density doubling and the
  // per-phase magnitude bound is density-independent, so the scan minimum is
  // monotone under refinement. Wedge-boundary points blow up to infinite
  // bounds and drop out on their own.
  std::vector<double> psi(d + 1);
  for (int a = 0; a <= d; ++a) psi[a] = -theta + 2.0 * theta * a / d;

  double best_power = kInf;
  std::vector<int> idx(k, 0);
  std::vector<int> best_idx(k, d / 2);
  std::vector<double> point(k);
  while (true) {
    for (int i = 0; i < k; ++i) point[i] = psi[idx[i]];
    const double value = point_power(point);
    if (value < best_power) {
      best_power = value;
      best_idx = idx;
    }
    int axis = 0;
    while (axis < k && ++idx[axis] > d) idx[axis++] = 0;
    if (axis == k) break;
  }

  // Compass descent from the best vertex, halving the step on failure. The
  // landscape is smooth inside the wedge, so the stall gap shrinks with the
  // square of the step and the returned value stays a feasible-point upper
  // bound on the optimum.
  std::vector<double> center(k);
  for (int i = 0; i < k; ++i) center[i] = psi[best_idx[i]];
  double step = 2.0 * theta / d;
  for (int sweep = 0; sweep < 20000 && step > 1e-10 * theta; ++sweep) {
    bool improved = false;
    for (int i = 0; i < k; ++i) {
      for (double sign : {1.0, -1.0}) {
        point = center;
        point[i] += sign * step;
        if (std::abs(point[i]) >= theta) continue;
        const double value = point_power(point);
        if (value < best_power) {
          best_power = value;
          center = point;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best_power;
}

}  // namespace ciswipt::verify
