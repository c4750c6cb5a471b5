// SPDX-License-Identifier: Apache-2.0

#include "ciswipt/ci_precoder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace ciswipt {

std::string to_string(PrecoderStatus status) {
  switch (status) {
    case PrecoderStatus::Optimal:
      return "OPTIMAL";
    case PrecoderStatus::Infeasible:
      return "INFEASIBLE";
    case PrecoderStatus::MaxIter:
      return "MAX_ITER";
  }
  return "UNKNOWN";
}

}  // namespace ciswipt

namespace ciswipt::ci {

namespace {

using conic::LinExpr;
using conic::ProgramBuilder;

// Real/imaginary parts of h~_i^T w as functionals of x = [Re w; Im w].
LinExpr re_part(const CMatrix& rows, int user, int n) {
  LinExpr e;
  for (int j = 0; j < n; ++j) {
    const Complex h = rows(user, j);
    e.add(j, h.real());
    e.add(n + j, -h.imag());
  }
  return e;
}

LinExpr im_part(const CMatrix& rows, int user, int n) {
  LinExpr e;
  for (int j = 0; j < n; ++j) {
    const Complex h = rows(user, j);
    e.add(j, h.imag());
    e.add(n + j, h.real());
  }
  return e;
}

LinExpr combine(std::initializer_list<std::pair<const LinExpr*, double>> parts) {
  LinExpr out;
  for (const auto& [expr, scale] : parts) {
    for (const auto& term : expr->terms) out.add(term.var, scale * term.coef);
    out.offset += scale * expr->offset;
  }
  return out;
}

CVector extract_w(const Eigen::VectorXd& x, int n, double sigma) {
  CVector w(n);
  for (int j = 0; j < n; ++j) w(j) = sigma * Complex(x(j), x(n + j));
  return w;
}

double clamp_rho(double rho) { return std::clamp(rho, kRhoMin, 1.0 - kRhoMin); }

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

// Smallest amplification beta >= 1 after which every wedge row (and, when
// requested, every harvesting constraint) holds exactly. Scaling w by
// beta >= 1 never breaks a wedge row, so this repairs solver-level slack
// violations of order tol_feas without touching the combinatorial shape.
CVector polish(const CVector& w, const std::vector<double>& rho, const RotatedChannels& rot,
               const std::vector<UserRequirement>& req, const NoiseModel& noise,
               const Constellation& cons, bool with_harvest) {
  const double s = std::sin(cons.half_angle);
  const double c = std::cos(cons.half_angle);
  double beta = 1.0;
  for (int i = 0; i < rot.users(); ++i) {
    const Complex gain = (rot.rows.row(i) * w).value();
    const double thr = decode_threshold(req[i], noise, rho[i]);
    const double denom = gain.real() * s - std::abs(gain.imag()) * c;
    if (denom > 0.0) beta = std::max(beta, thr * s / denom);
    if (with_harvest && req[i].energy > 0.0) {
      const double power = std::norm(gain);
      if (power > 0.0)
        beta = std::max(beta, std::sqrt(req[i].energy / ((1.0 - rho[i]) * power)));
    }
  }
  return beta * w;
}

}  // namespace

RhoStarBreakdown rho_star(const UserRequirement& req, const NoiseModel& noise) {
  RhoStarBreakdown out;
  out.a = -req.gamma * noise.n0;
  out.b = req.gamma * noise.n0 - req.energy - req.gamma * noise.nc;
  out.c = req.gamma * noise.nc;
  out.discriminant = out.b * out.b - 4.0 * out.a * out.c;
  if (req.energy <= 0.0) {
    out.rho_star = 1.0;
    return out;
  }
  // a < 0, so the larger root takes the minus branch.
  out.rho_star = (-out.b - std::sqrt(out.discriminant)) / (2.0 * out.a);
  return out;
}

CiResult solve_sinr_only(const RotatedChannels& rot, const std::vector<UserRequirement>& req,
                         const NoiseModel& noise, const Constellation& cons,
                         const std::vector<double>& rho, const conic::SolverSettings& settings) {
  const int k = rot.users();
  const int n = rot.antennas();
  if (static_cast<int>(req.size()) != k || static_cast<int>(rho.size()) != k)
    throw std::invalid_argument("solve_sinr_only: per-user data does not match channel count");

  std::vector<double> thr(k);
  double sigma = 1.0;
  for (int i = 0; i < k; ++i) {
    thr[i] = decode_threshold(req[i], noise, rho[i]);
    sigma = std::max(sigma, thr[i]);
  }

  const double s = std::sin(cons.half_angle);
  const double c = std::cos(cons.half_angle);
  ProgramBuilder builder(2 * n + 1);
  const int t_norm = 2 * n;
  for (int i = 0; i < k; ++i) {
    const LinExpr re = re_part(rot.rows, i, n);
    const LinExpr im = im_part(rot.rows, i, n);
    const double offset = -thr[i] / sigma * s;
    builder.add_nonneg(combine({{&re, s}, {&im, -c}}).add_constant(offset));
    builder.add_nonneg(combine({{&re, s}, {&im, c}}).add_constant(offset));
  }
  std::vector<LinExpr> stack;
  for (int j = 0; j < 2 * n; ++j) stack.emplace_back(j, 1.0);
  builder.add_soc(LinExpr(t_norm, 1.0), stack);

  Eigen::VectorXd cost = Eigen::VectorXd::Zero(2 * n + 1);
  cost(t_norm) = 1.0;
  const conic::ConeSolution sol = conic::solve(builder.build(cost), settings);

  CiResult out;
  out.status = map_status(sol.status);
  out.iterations = sol.iterations;
  if (out.status != PrecoderStatus::Optimal) return out;
  out.solution.rho = rho;
  out.solution.w =
      polish(extract_w(sol.x, n, sigma), rho, rot, req, noise, cons, /*with_harvest=*/false);
  return out;
}

CiResult solve_suboptimal(const RotatedChannels& rot, const std::vector<UserRequirement>& req,
                          const NoiseModel& noise, const conic::SolverSettings& settings) {
  const int k = rot.users();
  const int n = rot.antennas();
  if (static_cast<int>(req.size()) != k)
    throw std::invalid_argument("solve_suboptimal: per-user data does not match channel count");

  std::vector<double> rho(k);
  std::vector<double> thr(k);
  double sigma = 1.0;
  for (int i = 0; i < k; ++i) {
    rho[i] = clamp_rho(rho_star(req[i], noise).rho_star);
    thr[i] = decode_threshold(req[i], noise, rho[i]);
    if (req[i].energy > 0.0)
      thr[i] = std::max(thr[i], std::sqrt(req[i].energy / (1.0 - rho[i])));
    sigma = std::max(sigma, thr[i]);
  }

  ProgramBuilder builder(2 * n + 1);
  const int t_norm = 2 * n;
  for (int i = 0; i < k; ++i) {
    builder.add_equality(im_part(rot.rows, i, n));
    builder.add_nonneg(re_part(rot.rows, i, n).add_constant(-thr[i] / sigma));
  }
  std::vector<LinExpr> stack;
  for (int j = 0; j < 2 * n; ++j) stack.emplace_back(j, 1.0);
  builder.add_soc(LinExpr(t_norm, 1.0), stack);

  Eigen::VectorXd cost = Eigen::VectorXd::Zero(2 * n + 1);
  cost(t_norm) = 1.0;
  const conic::ConeSolution sol = conic::solve(builder.build(cost), settings);

  CiResult out;
  out.status = map_status(sol.status);
  out.iterations = sol.iterations;
  if (out.status != PrecoderStatus::Optimal) return out;
  Constellation cons = Constellation::mpsk(4);  // polish only reads the wedge angle
  out.solution.rho = rho;
  out.solution.w =
      polish(extract_w(sol.x, n, sigma), rho, rot, req, noise, cons, /*with_harvest=*/true);
  return out;
}

CiResult find_feasible_start(const RotatedChannels& rot, const std::vector<UserRequirement>& req,
                             const NoiseModel& noise, const Constellation& cons,
                             const std::vector<double>& rho_init,
                             const conic::SolverSettings& settings) {
  const int k = rot.users();
  std::vector<double> rho = rho_init;
  if (rho.empty()) {
    rho.resize(k);
    for (int i = 0; i < k; ++i) rho[i] = clamp_rho(rho_star(req[i], noise).rho_star);
  }
  CiResult out = solve_sinr_only(rot, req, noise, cons, rho, settings);
  if (out.status != PrecoderStatus::Optimal) return out;
  double beta = 1.0;
  for (int i = 0; i < k; ++i) {
    if (req[i].energy <= 0.0) continue;
    const double power = std::norm((rot.rows.row(i) * out.solution.w).value());
    if (power > 0.0)
      beta = std::max(beta, std::sqrt(req[i].energy / ((1.0 - rho[i]) * power)));
  }
  out.solution.w *= beta;
  return out;
}

namespace {

struct DcLayout {
  int n = 0;
  int t_norm = 0;
  std::vector<int> block;  // per user: base index of [rho,u,g,z1,z2,e], or -1 when energy == 0
  int num_vars = 0;
};

DcLayout dc_layout(const RotatedChannels& rot, const std::vector<UserRequirement>& req) {
  DcLayout lay;
  lay.n = rot.antennas();
  lay.t_norm = 2 * lay.n;
  int next = 2 * lay.n + 1;
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

// One convexified subproblem in the hat scale w = sigma * w_hat. The
// harvesting term is linearized at the previous gains p_i = h~_i^T w_hat.
conic::ConeProgram dc_subproblem(const RotatedChannels& rot,
                                 const std::vector<UserRequirement>& req, const NoiseModel& noise,
                                 const Constellation& cons, const DcLayout& lay, double sigma,
                                 const std::vector<Complex>& p) {
  const int k = rot.users();
  const int n = lay.n;
  const double s = std::sin(cons.half_angle);
  const double c = std::cos(cons.half_angle);
  const double n0h = noise.n0 / (sigma * sigma);
  const double nch = noise.nc / (sigma * sigma);
  const double tc = std::cbrt(nch);

  ProgramBuilder builder(lay.num_vars);
  for (int i = 0; i < k; ++i) {
    const LinExpr re = re_part(rot.rows, i, n);
    const LinExpr im = im_part(rot.rows, i, n);
    if (lay.block[i] < 0) {
      const double thr = decode_threshold(req[i], noise, 1.0 - kRhoMin) / sigma;
      builder.add_nonneg(combine({{&re, s}, {&im, -c}}).add_constant(-thr * s));
      builder.add_nonneg(combine({{&re, s}, {&im, c}}).add_constant(-thr * s));
      continue;
    }
    const int rho = lay.block[i];
    const int u = rho + 1;
    const int g = rho + 2;
    const int z1 = rho + 3;
    const int z2 = rho + 4;
    const int e = rho + 5;
    const double root_gamma = std::sqrt(req[i].gamma);

    builder.add_nonneg(combine({{&re, s}, {&im, -c}}).add(g, -root_gamma * s));
    builder.add_nonneg(combine({{&re, s}, {&im, c}}).add(g, -root_gamma * s));

    // g >= sqrt(n0h + u^2) and u^2 rho >= nch via z2^2 <= rho tc,
    // tc^2 <= z1 z2, z1 <= u with tc = nch^(1/3).
    builder.add_soc(LinExpr(g, 1.0), {LinExpr::constant(std::sqrt(n0h)), LinExpr(u, 1.0)});
    builder.add_rotated_soc(LinExpr(rho, 1.0), LinExpr::constant(0.5 * tc), {LinExpr(z2, 1.0)});
    builder.add_rotated_soc(LinExpr(z1, 1.0), LinExpr(z2, 0.5), {LinExpr::constant(tc)});
    builder.add_nonneg(LinExpr(u, 1.0).add(z1, -1.0));

    // 2 Re(conj(p_i) h~_i^T w_hat) - |p_i|^2 >= e  (tangent underestimator)
    LinExpr tangent = combine({{&re, 2.0 * p[i].real()}, {&im, 2.0 * p[i].imag()}});
    tangent.add_constant(-std::norm(p[i]));
    tangent.add(e, -1.0);
    builder.add_nonneg(tangent);

    // e (1 - rho) >= energy / sigma^2
    LinExpr half_rest;
    half_rest.offset = 0.5;
    half_rest.add(rho, -0.5);
    builder.add_rotated_soc(LinExpr(e, 1.0), half_rest,
                            {LinExpr::constant(std::sqrt(req[i].energy) / sigma)});

    builder.add_nonneg(LinExpr(rho, 1.0).add_constant(-kRhoMin));
    builder.add_nonneg(LinExpr(rho, -1.0).add_constant(1.0 - kRhoMin));
  }

  std::vector<LinExpr> stack;
  for (int j = 0; j < 2 * n; ++j) stack.emplace_back(j, 1.0);
  builder.add_soc(LinExpr(lay.t_norm, 1.0), stack);

  Eigen::VectorXd cost = Eigen::VectorXd::Zero(lay.num_vars);
  cost(lay.t_norm) = 1.0;
  return builder.build(cost);
}

}  // namespace

DcResult solve_dc(const RotatedChannels& rot, const std::vector<UserRequirement>& req,
                  const NoiseModel& noise, const Constellation& cons, const CiSolution& init,
                  const DcOptions& options) {
  const int k = rot.users();
  const int n = rot.antennas();
  if (static_cast<int>(req.size()) != k)
    throw std::invalid_argument("solve_dc: per-user data does not match channel count");
  if (init.w.size() != n || static_cast<int>(init.rho.size()) != k)
    throw std::invalid_argument("solve_dc: starting point has wrong dimensions");

  double sigma_sq = 1.0;
  for (int i = 0; i < k; ++i) {
    sigma_sq = std::max(sigma_sq, req[i].gamma * (noise.n0 + noise.nc));
    sigma_sq = std::max(sigma_sq, req[i].energy);
  }
  const double sigma = std::sqrt(sigma_sq);
  const DcLayout lay = dc_layout(rot, req);

  CVector w = init.w;
  std::vector<double> rho(k);
  for (int i = 0; i < k; ++i) rho[i] = lay.block[i] < 0 ? 1.0 - kRhoMin : clamp_rho(init.rho[i]);

  DcResult out;
  out.state.objective_history.push_back(w.squaredNorm());
  if (options.record_iterates) out.state.iterates.push_back({w, rho});

  bool converged = false;
  for (int outer = 0; outer < options.max_outer; ++outer) {
    std::vector<Complex> p(k);
    for (int i = 0; i < k; ++i) p[i] = (rot.rows.row(i) * w).value() / sigma;

    const conic::ConeSolution sub =
        conic::solve(dc_subproblem(rot, req, noise, cons, lay, sigma, p), options.conic);
    if (sub.status != conic::SolveStatus::Optimal) {
      if (outer == 0 && sub.status == conic::SolveStatus::Infeasible)
        throw std::runtime_error(
            "solve_dc: subproblem infeasible from a feasible starting point");
      break;
    }

    CVector w_next = extract_w(sub.x, n, sigma);
    std::vector<double> rho_next = rho;
    for (int i = 0; i < k; ++i)
      if (lay.block[i] >= 0) rho_next[i] = clamp_rho(sub.x(lay.block[i]));

    const double p_prev = out.state.objective_history.back();
    const double p_new = w_next.squaredNorm();
    if (std::abs(p_new - p_prev) <= options.tol * std::max(1.0, p_new)) {
      // At the fixed point successive objectives fluctuate at solver
      // accuracy; keep the history monotone by accepting only descent.
      if (p_new <= p_prev) {
        w = std::move(w_next);
        rho = std::move(rho_next);
        out.state.objective_history.push_back(p_new);
        if (options.record_iterates) out.state.iterates.push_back({w, rho});
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

    w = std::move(w_next);
    rho = std::move(rho_next);
    out.state.objective_history.push_back(p_new);
    if (options.record_iterates) out.state.iterates.push_back({w, rho});
  }

  CVector polished = polish(w, rho, rot, req, noise, cons, /*with_harvest=*/true);
  if (polished.squaredNorm() > init.w.squaredNorm()) {
    // Descent plus polish should never end above the start; fall back if it does.
    polished = init.w;
    rho = init.rho;
    for (int i = 0; i < k; ++i) rho[i] = clamp_rho(rho[i]);
  }

  out.status = converged ? PrecoderStatus::Optimal : PrecoderStatus::MaxIter;
  out.solution.w = polished;
  out.solution.rho = rho;
  out.state.converged = converged;
  out.state.w = polished;
  out.state.rho = rho;
  out.state.expansion.resize(k);
  out.state.u.resize(k);
  out.state.g.resize(k);
  for (int i = 0; i < k; ++i) {
    const Complex gain = (rot.rows.row(i) * polished).value();
    out.state.expansion[i] = Eigen::Vector2d(gain.real(), gain.imag());
    out.state.u[i] = std::sqrt(noise.nc / rho[i]);
    out.state.g[i] = std::sqrt(noise.n0 + out.state.u[i] * out.state.u[i]);
  }
  return out;
}

}  // namespace ciswipt::ci
