// SPDX-License-Identifier: Apache-2.0

#include "ciswipt/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ciswipt {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void check_rho(double rho) {
  if (!(rho > 0.0) || !(rho < 1.0))
    throw std::domain_error("splitting ratio must lie strictly between 0 and 1");
}

}  // namespace

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) {
  if (!(linear > 0.0)) throw std::domain_error("linear_to_db: value must be positive");
  return 10.0 * std::log10(linear);
}

Constellation Constellation::mpsk(int order) {
  require(order >= 2, "constellation order must be >= 2");
  Constellation c;
  c.order = order;
  c.amplitude = 1.0;
  c.half_angle = std::numbers::pi / order;
  c.phase_offset = std::numbers::pi / order;
  return c;
}

double Constellation::phase(int symbol) const {
  require(symbol >= 0 && symbol < order, "symbol index out of range");
  return phase_offset + 2.0 * std::numbers::pi * symbol / order;
}

Complex Constellation::point(int symbol) const {
  return std::polar(amplitude, phase(symbol));
}

int Constellation::nearest_symbol(Complex received) const {
  const double two_pi = 2.0 * std::numbers::pi;
  double rel = std::arg(received) - phase_offset;
  rel -= two_pi * std::floor(rel / two_pi);
  int idx = static_cast<int>(std::lround(rel * order / two_pi)) % order;
  return idx;
}

void NoiseModel::validate() const {
  require(n0 > 0.0 && std::isfinite(n0), "antenna noise power must be positive");
  require(nc > 0.0 && std::isfinite(nc), "conversion noise power must be positive");
}

void UserRequirement::validate() const {
  require(gamma > 0.0 && std::isfinite(gamma), "SINR target must be positive");
  require(energy >= 0.0 && std::isfinite(energy), "harvested-power target must be nonnegative");
}

double decode_threshold(const UserRequirement& req, const NoiseModel& noise, double rho) {
  check_rho(rho);
  return std::sqrt(req.gamma * (noise.n0 + noise.nc / rho));
}

void ChannelInstance::validate() const {
  require(rows.rows() >= 1, "channel needs at least one user");
  require(rows.cols() >= 1, "channel needs at least one antenna");
  require(rows.allFinite(), "channel entries must be finite");
}

SymbolFrame SymbolFrame::from_symbols(const Constellation& cons, const std::vector<int>& symbols) {
  SymbolFrame f;
  f.phases.reserve(symbols.size());
  for (int s : symbols) f.phases.push_back(cons.phase(s));
  return f;
}

RotatedChannels rotate_channels(const ChannelInstance& channels, const SymbolFrame& frame) {
  channels.validate();
  require(frame.users() == channels.users(), "frame and channel user counts differ");
  RotatedChannels out;
  out.rows = channels.rows;
  const double ref = frame.phases[0];
  for (int i = 0; i < channels.users(); ++i)
    out.rows.row(i) *= std::polar(1.0, ref - frame.phases[i]);
  return out;
}

CiEvaluation evaluate_ci(const CiSolution& sol, const RotatedChannels& rotated,
                         const std::vector<UserRequirement>& req, const NoiseModel& noise,
                         const Constellation& cons) {
  const int k = rotated.users();
  require(static_cast<int>(sol.rho.size()) == k, "solution has wrong number of splitting ratios");
  require(sol.w.size() == rotated.antennas(), "precoded vector has wrong length");
  require(static_cast<int>(req.size()) == k, "wrong number of user requirements");
  noise.validate();

  const double tan_theta = std::tan(cons.half_angle);
  CiEvaluation ev;
  ev.users.resize(k);
  ev.total_power = sol.total_power();
  for (int i = 0; i < k; ++i) {
    req[i].validate();
    check_rho(sol.rho[i]);
    const Complex gain = (rotated.rows.row(i) * sol.w).value();
    CiMargins& m = ev.users[i];
    m.alpha_r = gain.real();
    m.alpha_i = gain.imag();
    m.gamma_thresh = decode_threshold(req[i], noise, sol.rho[i]);
    m.slack = (m.alpha_r - m.gamma_thresh) * tan_theta - std::abs(m.alpha_i);
    m.harvested = (1.0 - sol.rho[i]) * std::norm(gain);
  }
  return ev;
}

ConventionalEvaluation evaluate_conventional(const ConventionalSolution& sol,
                                             const ChannelInstance& channels,
                                             const NoiseModel& noise) {
  channels.validate();
  noise.validate();
  const int k = channels.users();
  require(static_cast<int>(sol.rho.size()) == k, "solution has wrong number of splitting ratios");
  require(sol.beams.rows() == channels.antennas() && sol.beams.cols() == k,
          "beam matrix has wrong shape");

  ConventionalEvaluation ev;
  ev.sinr.resize(k);
  ev.harvested.resize(k);
  ev.total_power = sol.total_power();
  for (int i = 0; i < k; ++i) {
    check_rho(sol.rho[i]);
    double self = 0.0, others = 0.0;
    for (int j = 0; j < k; ++j) {
      const double p = std::norm((channels.rows.row(i) * sol.beams.col(j)).value());
      if (j == i)
        self = p;
      else
        others += p;
    }
    ev.sinr[i] = self / (others + noise.n0 + noise.nc / sol.rho[i]);
    ev.harvested[i] = (1.0 - sol.rho[i]) * (self + others + noise.n0);
  }
  return ev;
}

}  // namespace ciswipt
