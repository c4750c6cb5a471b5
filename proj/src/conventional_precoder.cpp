// SPDX-License-Identifier: Apache-2.0

#include "ciswipt/conventional_precoder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "ciswipt/rng.hpp"

namespace ciswipt::conv {

namespace {

using conic::LinExpr;
using conic::ProgramBuilder;

// Real/imaginary parts of h_i^T t_k where beam k occupies variables
// [base, base + 2n): first the real antenna weights, then the imaginary.
LinExpr re_product(const CMatrix& rows, int user, int n, int base) {
  LinExpr e;
  for (int j = 0; j < n; ++j) {
    const Complex h = rows(user, j);
    e.add(base + j, h.real());
    e.add(base + n + j, -h.imag());
  }
  return e;
}

LinExpr im_product(const CMatrix& rows, int user, int n, int base) {
  LinExpr e;
  for (int j = 0; j < n; ++j) {
    const Complex h = rows(user, j);
    e.add(base + j, h.imag());
    e.add(base + n + j, h.real());
  }
  return e;
}

CMatrix extract_beams(const Eigen::VectorXd& x, int n, int k, double sigma) {
  CMatrix beams(n, k);
  for (int col = 0; col < k; ++col)
    for (int j = 0; j < n; ++j)
      beams(j, col) = sigma * Complex(x(2 * n * col + j), x(2 * n * col + n + j));
  return beams;
}

PrecoderStatus map_status(conic::SolveStatus status) {
  switch (status) {
    case conic::SolveStatus::Optimal:
      return PrecoderStatus::Optimal;
    case conic::SolveStatus::Infeasible:
      return PrecoderStatus::Infeasible;
    default:
      return PrecoderStatus::MaxIter;
  }
}

double clamp_rho(double rho) { return std::clamp(rho, kRhoMin, 1.0 - kRhoMin); }

// Smallest amplification beta >= 1 after which every SINR target (and,
// when present, every harvesting target) is met exactly. SINR and
// harvested power are both increasing in beta, which makes this safe.
CMatrix polish(const CMatrix& beams, const std::vector<double>& rho, const ChannelInstance& ch,
               const std::vector<UserRequirement>& req, const NoiseModel& noise) {
  const int k = ch.users();
  double beta_sq = 1.0;
  for (int i = 0; i < k; ++i) {
    double signal = 0.0, interference = 0.0, received = 0.0;
    for (int col = 0; col < k; ++col) {
      const double p = std::norm((ch.rows.row(i) * beams.col(col)).value());
      received += p;
      if (col == i)
        signal = p;
      else
        interference += p;
    }
    const double sigma_sq = noise.n0 + noise.nc / rho[i];
    const double margin = signal - req[i].gamma * interference;
    if (margin > 0.0) beta_sq = std::max(beta_sq, req[i].gamma * sigma_sq / margin);
    if (req[i].energy > 0.0 && received > 0.0)
      beta_sq =
          std::max(beta_sq, (req[i].energy / (1.0 - rho[i]) - noise.n0) / received);
  }
  return std::sqrt(beta_sq) * beams;
}

}  // namespace

ConvResult solve_sinr_only(const ChannelInstance& channels,
                           const std::vector<UserRequirement>& req, const NoiseModel& noise,
                           const std::vector<double>& rho,
                           const conic::SolverSettings& settings) {
  const int k = channels.users();
  const int n = channels.antennas();
  if (static_cast<int>(req.size()) != k || static_cast<int>(rho.size()) != k)
    throw std::invalid_argument("solve_sinr_only: per-user data does not match channel count");

  double sigma = 1.0;
  for (int i = 0; i < k; ++i)
    sigma = std::max(sigma, std::sqrt(req[i].gamma * (noise.n0 + noise.nc / rho[i])));

  ProgramBuilder builder(2 * n * k + 1);
  const int t_norm = 2 * n * k;
  for (int i = 0; i < k; ++i) {
    // Each beam has a free phase, so h_i^T t_i can be pinned real. Keeping the
    // desired-signal term off the right-hand side keeps the cone well
    // separated even when gamma is large.
    builder.add_equality(im_product(channels.rows, i, n, 2 * n * i));
    LinExpr bound = re_product(channels.rows, i, n, 2 * n * i);
    for (auto& term : bound.terms) term.coef /= std::sqrt(req[i].gamma);
    std::vector<LinExpr> vec;
    for (int col = 0; col < k; ++col) {
      if (col == i) continue;
      vec.push_back(re_product(channels.rows, i, n, 2 * n * col));
      vec.push_back(im_product(channels.rows, i, n, 2 * n * col));
    }
    vec.push_back(LinExpr::constant(std::sqrt(noise.n0 + noise.nc / rho[i]) / sigma));
    builder.add_soc(bound, vec);
  }
  std::vector<LinExpr> stack;
  for (int j = 0; j < 2 * n * k; ++j) stack.emplace_back(j, 1.0);
  builder.add_soc(LinExpr(t_norm, 1.0), stack);

  Eigen::VectorXd cost = Eigen::VectorXd::Zero(2 * n * k + 1);
  cost(t_norm) = 1.0;
  const conic::ConeSolution sol = conic::solve(builder.build(cost), settings);

  ConvResult out;
  out.status = map_status(sol.status);
  out.iterations = sol.iterations;
  if (out.status != PrecoderStatus::Optimal) return out;
  out.solution.rho = rho;
  out.solution.beams = polish(extract_beams(sol.x, n, k, sigma), rho, channels, req, noise);
  return out;
}

ConventionalSolution make_eh_feasible_init(const ConventionalSolution& sol,
                                           const ChannelInstance& channels,
                                           const std::vector<UserRequirement>& req,
                                           const NoiseModel& noise) {
  const int k = channels.users();
  double beta_sq = 1.0;
  for (int i = 0; i < k; ++i) {
    if (req[i].energy <= 0.0) continue;
    double received = 0.0;
    for (int col = 0; col < k; ++col)
      received += std::norm((channels.rows.row(i) * sol.beams.col(col)).value());
    if (received <= 0.0) continue;
    beta_sq =
        std::max(beta_sq, (req[i].energy / (1.0 - sol.rho[i]) - noise.n0) / received);
  }
  ConventionalSolution out = sol;
  out.beams *= std::sqrt(beta_sq);
  return out;
}

namespace {

struct ScaLayout {
  int n = 0, k = 0;
  int t_norm = 0;
  std::vector<int> block;  // base of [rho,u,g,z1,z2,e] per user, -1 when energy == 0
  int num_vars = 0;
};

ScaLayout sca_layout(const ChannelInstance& ch, const std::vector<UserRequirement>& req) {
  ScaLayout lay;
  lay.n = ch.antennas();
  lay.k = ch.users();
  lay.t_norm = 2 * lay.n * lay.k;
  int next = lay.t_norm + 1;
  lay.block.assign(req.size(), -1);
  for (std::size_t i = 0; i < req.size(); ++i) {
    if (req[i].energy > 0.0) {
      lay.block[i] = next;
      next += 6;
    }
  }
  lay.num_vars = next;
  return lay;
}

conic::ConeProgram sca_subproblem(const ChannelInstance& ch,
                                  const std::vector<UserRequirement>& req,
                                  const NoiseModel& noise, const ScaLayout& lay, double sigma,
                                  const std::vector<std::vector<Complex>>& p) {
  const int k = lay.k;
  const int n = lay.n;
  const double n0h = noise.n0 / (sigma * sigma);
  const double nch = noise.nc / (sigma * sigma);
  const double tc = std::cbrt(nch);

  ProgramBuilder builder(lay.num_vars);
  for (int i = 0; i < k; ++i) {
    builder.add_equality(im_product(ch.rows, i, n, 2 * n * i));
    LinExpr bound = re_product(ch.rows, i, n, 2 * n * i);
    for (auto& term : bound.terms) term.coef /= std::sqrt(req[i].gamma);
    std::vector<LinExpr> vec;
    for (int col = 0; col < k; ++col) {
      if (col == i) continue;
      vec.push_back(re_product(ch.rows, i, n, 2 * n * col));
      vec.push_back(im_product(ch.rows, i, n, 2 * n * col));
    }
    if (lay.block[i] < 0) {
      vec.push_back(
          LinExpr::constant(std::sqrt(noise.n0 + noise.nc / (1.0 - kRhoMin)) / sigma));
      builder.add_soc(bound, vec);
      continue;
    }
    const int rho = lay.block[i];
    const int u = rho + 1;
    const int g = rho + 2;
    const int z1 = rho + 3;
    const int z2 = rho + 4;
    const int e = rho + 5;

    vec.push_back(LinExpr(g, 1.0));
    builder.add_soc(bound, vec);

    builder.add_soc(LinExpr(g, 1.0), {LinExpr::constant(std::sqrt(n0h)), LinExpr(u, 1.0)});
    builder.add_rotated_soc(LinExpr(rho, 1.0), LinExpr::constant(0.5 * tc), {LinExpr(z2, 1.0)});
    builder.add_rotated_soc(LinExpr(z1, 1.0), LinExpr(z2, 0.5), {LinExpr::constant(tc)});
    builder.add_nonneg(LinExpr(u, 1.0).add(z1, -1.0));

    // sum_k |h_i^T t_k|^2 >= e - n0, with the left side replaced by its
    // tangent at the previous beams
    LinExpr tangent;
    for (int col = 0; col < k; ++col) {
      const LinExpr re = re_product(ch.rows, i, n, 2 * n * col);
      const LinExpr im = im_product(ch.rows, i, n, 2 * n * col);
      for (const auto& term : re.terms) tangent.add(term.var, 2.0 * p[i][col].real() * term.coef);
      for (const auto& term : im.terms) tangent.add(term.var, 2.0 * p[i][col].imag() * term.coef);
      tangent.add_constant(-std::norm(p[i][col]));
    }
    tangent.add_constant(n0h);
    tangent.add(e, -1.0);
    builder.add_nonneg(tangent);

    LinExpr half_rest;
    half_rest.offset = 0.5;
    half_rest.add(rho, -0.5);
    builder.add_rotated_soc(LinExpr(e, 1.0), half_rest,
                            {LinExpr::constant(std::sqrt(req[i].energy) / sigma)});

    builder.add_nonneg(LinExpr(rho, 1.0).add_constant(-kRhoMin));
    builder.add_nonneg(LinExpr(rho, -1.0).add_constant(1.0 - kRhoMin));
  }

  std::vector<LinExpr> stack;
  for (int j = 0; j < 2 * n * k; ++j) stack.emplace_back(j, 1.0);
  builder.add_soc(LinExpr(lay.t_norm, 1.0), stack);

  Eigen::VectorXd cost = Eigen::VectorXd::Zero(lay.num_vars);
  cost(lay.t_norm) = 1.0;
  return builder.build(cost);
}

}  // namespace

ScaResult solve_with_eh_sca(const ChannelInstance& channels,
                            const std::vector<UserRequirement>& req, const NoiseModel& noise,
                            const ConventionalSolution& init, const ScaOptions& options) {
  const int k = channels.users();
  const int n = channels.antennas();
  if (static_cast<int>(req.size()) != k)
    throw std::invalid_argument("solve_with_eh_sca: per-user data does not match channel count");
  if (init.beams.rows() != n || init.beams.cols() != k ||
      static_cast<int>(init.rho.size()) != k)
    throw std::invalid_argument("solve_with_eh_sca: starting point has wrong dimensions");

  double sigma_sq = 1.0;
  for (int i = 0; i < k; ++i) {
    sigma_sq = std::max(sigma_sq, req[i].gamma * (noise.n0 + noise.nc));
    sigma_sq = std::max(sigma_sq, req[i].energy);
  }
  const double sigma = std::sqrt(sigma_sq);
  const ScaLayout lay = sca_layout(channels, req);

  CMatrix beams = init.beams;
  // The subproblem pins Im(h_i^T t_i) = 0, so align the starting beams with
  // that convention; phases are free and this changes no constraint value.
  for (int col = 0; col < k; ++col) {
    const Complex d = (channels.rows.row(col) * beams.col(col)).value();
    const double mag = std::abs(d);
    if (mag > 0.0) beams.col(col) *= std::conj(d) / mag;
  }
  std::vector<double> rho(k);
  for (int i = 0; i < k; ++i) rho[i] = lay.block[i] < 0 ? 1.0 - kRhoMin : clamp_rho(init.rho[i]);

  ScaResult out;
  out.state.objective_history.push_back(beams.squaredNorm());

  bool converged = false;
  for (int outer = 0; outer < options.max_outer; ++outer) {
    std::vector<std::vector<Complex>> p(k, std::vector<Complex>(k));
    for (int i = 0; i < k; ++i)
      for (int col = 0; col < k; ++col)
        p[i][col] = (channels.rows.row(i) * beams.col(col)).value() / sigma;

    const conic::ConeSolution sub =
        conic::solve(sca_subproblem(channels, req, noise, lay, sigma, p), options.conic);
    if (sub.status != conic::SolveStatus::Optimal) {
      if (outer == 0 && sub.status == conic::SolveStatus::Infeasible)
        throw std::runtime_error(
            "solve_with_eh_sca: subproblem infeasible from a feasible starting point");
      break;
    }

    CMatrix beams_next = extract_beams(sub.x, n, k, sigma);
    std::vector<double> rho_next = rho;
    for (int i = 0; i < k; ++i)
      if (lay.block[i] >= 0) rho_next[i] = clamp_rho(sub.x(lay.block[i]));

    const double p_prev = out.state.objective_history.back();
    const double p_new = beams_next.squaredNorm();
    if (std::abs(p_new - p_prev) <= options.tol * std::max(1.0, p_new)) {
      // Same fixed-point treatment as the constructive solver: accept only
      // descent so the recorded objectives stay monotone.
      if (p_new <= p_prev) {
        beams = std::move(beams_next);
        rho = std::move(rho_next);
        out.state.objective_history.push_back(p_new);
      }
      converged = true;
      break;
    }
    // The current iterate is feasible for its own convexification, so in
    // exact arithmetic the subproblem can never ascend; an observed ascent is
    // subproblem-solver noise at a fixed point, which is convergence.
    if (p_new > p_prev) {
      converged = true;
      break;
    }

    beams = std::move(beams_next);
    rho = std::move(rho_next);
    out.state.objective_history.push_back(p_new);
  }

  CMatrix polished = polish(beams, rho, channels, req, noise);
  if (polished.squaredNorm() > init.beams.squaredNorm()) {
    polished = init.beams;
    rho = init.rho;
    for (int i = 0; i < k; ++i) rho[i] = clamp_rho(rho[i]);
  }

  out.status = converged ? PrecoderStatus::Optimal : PrecoderStatus::MaxIter;
  out.solution.beams = polished;
  out.solution.rho = rho;
  out.state.converged = converged;
  return out;
}

ScaResult solve_with_eh_multistart(const ChannelInstance& channels,
                                   const std::vector<UserRequirement>& req,
                                   const NoiseModel& noise, const MultistartOptions& options) {
  const int k = channels.users();
  ScaResult best;
  best.status = PrecoderStatus::Infeasible;
  double best_power = std::numeric_limits<double>::infinity();

  for (int start = 0; start < options.starts; ++start) {
    std::vector<double> rho(k);
    if (start == 0) {
      for (int i = 0; i < k; ++i)
        rho[i] = clamp_rho(ci::rho_star(req[i], noise).rho_star);
    } else {
      Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(start)));
      for (int i = 0; i < k; ++i) rho[i] = 0.15 + 0.7 * rng.uniform();
    }

    const ConvResult boot = solve_sinr_only(channels, req, noise, rho, options.sca.conic);
    if (boot.status != PrecoderStatus::Optimal) {
      if (best.status == PrecoderStatus::Infeasible && !std::isfinite(best_power))
        best.status = boot.status;
      continue;
    }
    const ConventionalSolution init =
        make_eh_feasible_init(boot.solution, channels, req, noise);
    const ScaResult run = solve_with_eh_sca(channels, req, noise, init, options.sca);
    const double power = run.solution.total_power();
    if (power < best_power) {
      best_power = power;
      best = run;
    }
  }
  return best;
}

}  // namespace ciswipt::conv
