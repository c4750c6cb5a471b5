// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance suite for ci-swipt. Eight criteria cover the
// headline power-saving experiments, closed-form and brute-force oracle
// agreement, algorithmic invariants, the conic solver, and symbol-level
// error rates. One PASS/FAIL line is printed per criterion with the
// measured values; the exit code is nonzero when any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ciswipt/bench.hpp"
#include "ciswipt/ci_precoder.hpp"
#include "ciswipt/conic.hpp"
#include "ciswipt/conventional_precoder.hpp"
#include "ciswipt/model.hpp"
#include "ciswipt/rng.hpp"
#include "ciswipt/verify.hpp"
#include "oracles.hpp"

using namespace ciswipt;

namespace {

// Criterion bands and tolerances, pinned.
constexpr double kHighSinrDcGapLo = 5.0;    // dB, conventional minus dc at 20 dB target
constexpr double kHighSinrDcGapHi = 9.0;    // dB
constexpr double kHighSinrSubGapLo = 3.0;   // dB, conventional minus suboptimal at 20 dB
constexpr double kHighSinrSubGapHi = 7.0;   // dB
constexpr double kLowSinrMargin = 1.0;      // dB, conventional may beat dc by any amount
constexpr double kSinrOnlyTol = 0.5;        // dB, dc vs interference-only curve at 40 dB
constexpr double kAntennaStepSlack = 0.5;   // dB, monotone-gap noise allowance
constexpr double kAntennaFinalGap = 1.5;    // dB, gap bound at the largest array
constexpr double kSingleUserRel = 1e-3;     // relative, solver vs closed form
constexpr double kPairOverRel = 0.02;       // dc may sit above the grid reference by 2%
constexpr double kPairUnderAbs = 1e-6;      // grid reference may not undercut dc further
constexpr double kBalanceRel = 1e-9;        // splitting-ratio balance identity
constexpr double kScaleRel = 1e-6;          // 1/c^2 channel-scaling law
constexpr double kPhaseRel = 1e-6;          // common-phase invariance
constexpr double kKktResid = 1e-8;          // conic battery residuals
constexpr double kLpRel = 1e-6;             // conic vs vertex enumeration
constexpr double kSocAbs = 1e-9;            // norm-bound example
constexpr double kSerSigmas = 3.0;          // Monte Carlo band in standard errors

int failures = 0;

void report(int idx, bool pass, const std::string& detail) {
  std::printf("criterion %d %s: %s\n", idx, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string format(const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  return buf;
}

const bench::SweepRow& find_row(const bench::SweepResult& result, double axis_value,
                                bench::Scheme scheme) {
  for (const auto& row : result.rows) {
    if (row.scheme == scheme && std::abs(row.axis_value - axis_value) < 1e-9) return row;
  }
  throw std::runtime_error("sweep row missing");
}

// Criteria 1-3 share one target sweep: K = N = 4, QPSK, N0 = NC = 1,
// harvesting target 10 dB, 100 channel draws per point.
void criteria_power_sweep() {
  bench::SweepConfig cfg;
  cfg.axis = bench::SweepAxis::SinrDb;
  cfg.axis_values = {0.0, 5.0, 20.0, 40.0};
  cfg.eh_db = 10.0;
  cfg.schemes = {bench::Scheme::CiDc, bench::Scheme::CiSubopt, bench::Scheme::ConvSca,
                 bench::Scheme::CiSinrOnly};
  const auto result = bench::run_sweep(cfg);

  const double dc20 = find_row(result, 20.0, bench::Scheme::CiDc).mean_power_db;
  const double sub20 = find_row(result, 20.0, bench::Scheme::CiSubopt).mean_power_db;
  const double conv20 = find_row(result, 20.0, bench::Scheme::ConvSca).mean_power_db;
  const double gap_dc = conv20 - dc20;
  const double gap_sub = conv20 - sub20;
  report(1,
         gap_dc >= kHighSinrDcGapLo && gap_dc <= kHighSinrDcGapHi &&
             gap_sub >= kHighSinrSubGapLo && gap_sub <= kHighSinrSubGapHi,
         format("at 20 dB target, conventional-minus-dc gap %.4f dB (want [%.0f, %.0f]), "
                "conventional-minus-suboptimal gap %.4f dB (want [%.0f, %.0f])",
                gap_dc, kHighSinrDcGapLo, kHighSinrDcGapHi, gap_sub, kHighSinrSubGapLo,
                kHighSinrSubGapHi));

  bool low_ok = true;
  std::string low_detail;
  for (double g : {0.0, 5.0}) {
    const double conv = find_row(result, g, bench::Scheme::ConvSca).mean_power_db;
    const double dc = find_row(result, g, bench::Scheme::CiDc).mean_power_db;
    low_ok = low_ok && conv <= dc + kLowSinrMargin;
    low_detail += format("%sat %.0f dB conventional %.4f vs dc %.4f", low_detail.empty() ? "" : "; ",
                         g, conv, dc);
  }
  report(2, low_ok, low_detail + format(" (want conventional <= dc + %.1f dB)", kLowSinrMargin));

  const double dc40 = find_row(result, 40.0, bench::Scheme::CiDc).mean_power_db;
  const double only40 = find_row(result, 40.0, bench::Scheme::CiSinrOnly).mean_power_db;
  report(3, std::abs(dc40 - only40) <= kSinrOnlyTol,
         format("at 40 dB target, |dc %.6f - decoding-only %.6f| = %.6f dB (want <= %.1f)", dc40,
                only40, std::abs(dc40 - only40), kSinrOnlyTol));
}

void criterion_antenna_trend() {
  bench::SweepConfig cfg;
  cfg.axis = bench::SweepAxis::Antennas;
  cfg.axis_values = {4.0, 6.0, 8.0, 10.0, 12.0};
  cfg.sinr_db = 20.0;
  cfg.eh_db = 20.0;
  cfg.schemes = {bench::Scheme::CiDc, bench::Scheme::ConvSca};
  const auto result = bench::run_sweep(cfg);

  std::vector<double> gaps;
  std::string detail = "conventional-minus-dc gaps";
  for (double n : cfg.axis_values) {
    const double dc = find_row(result, n, bench::Scheme::CiDc).mean_power_db;
    const double conv = find_row(result, n, bench::Scheme::ConvSca).mean_power_db;
    gaps.push_back(conv - dc);
    detail += format(" N=%.0f:%.3f", n, gaps.back());
  }
  bool ok = gaps.back() <= kAntennaFinalGap;
  for (std::size_t i = 1; i < gaps.size(); ++i) {
    ok = ok && gaps[i] <= gaps[i - 1] + kAntennaStepSlack;
  }
  report(4, ok,
         detail + format(" dB (want nonincreasing within %.1f, final <= %.1f)", kAntennaStepSlack,
                         kAntennaFinalGap));
}

void criterion_oracle_equivalence() {
  const Constellation qpsk = Constellation::mpsk(4);
  const NoiseModel noise{1.0, 1.0};
  ci::DcOptions opt;
  opt.tol = 1e-9;
  opt.max_outer = 200;
  opt.record_iterates = false;

  double max_dc = 0.0, max_sub = 0.0;
  int solved = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 4;
    Rng rng(derive_seed(9000, t));
    const double gamma_db = 40.0 * rng.uniform();
    const double eh_db = 20.0 * rng.uniform();
    const auto ch = bench::gen_channels(1, n, derive_seed(9001, t));
    const std::vector<UserRequirement> req{{db_to_linear(gamma_db), db_to_linear(eh_db)}};
    RotatedChannels rot;
    rot.rows = ch.rows;

    double rho = oracles::rho_balance_bisect(req[0].gamma, noise.n0, noise.nc, req[0].energy);
    rho = std::clamp(rho, kRhoMin, 1.0 - kRhoMin);
    const Eigen::VectorXcd h = ch.rows.row(0).transpose();
    const double closed =
        oracles::ci_single_user_power(h, req[0].gamma, req[0].energy, noise.n0, noise.nc, rho);

    const auto start = ci::find_feasible_start(rot, req, noise, qpsk);
    const auto dc = ci::solve_dc(rot, req, noise, qpsk, start.solution, opt);
    const auto sub = ci::solve_suboptimal(rot, req, noise);
    if (dc.status != PrecoderStatus::Optimal || sub.status != PrecoderStatus::Optimal) continue;
    ++solved;
    max_dc = std::max(max_dc, std::abs(dc.solution.total_power() - closed) / closed);
    max_sub = std::max(max_sub, std::abs(sub.solution.total_power() - closed) / closed);
  }

  double worst_over = 0.0, worst_under = -1e300;
  int paired = 0;
  for (std::uint64_t s = 1; s <= 50; ++s) {
    const auto ch = bench::gen_channels(2, 2, s);
    const auto frame = bench::draw_frame(2, qpsk, derive_seed(s, 101));
    const auto rot = rotate_channels(ch, frame);
    const std::vector<UserRequirement> req(2, {db_to_linear(20.0), db_to_linear(10.0)});
    const auto start = ci::find_feasible_start(rot, req, noise, qpsk);
    const auto dc = ci::solve_dc(rot, req, noise, qpsk, start.solution, opt);
    if (dc.status != PrecoderStatus::Optimal) continue;
    ++paired;
    const double power = dc.solution.total_power();
    const double grid = verify::oracle_phase_grid(rot, req, noise, qpsk, 64);
    worst_over = std::max(worst_over, (power - grid) / grid);
    worst_under = std::max(worst_under, grid - power);
  }

  report(5,
         solved == 200 && paired == 50 && max_dc <= kSingleUserRel && max_sub <= kSingleUserRel &&
             worst_over <= kPairOverRel && worst_under <= kPairUnderAbs,
         format("single-user closed form on %d/200: dc off by %.2e, suboptimal by %.2e rel "
                "(want <= %.0e); two-user grid on %d/50: dc above by %.2e rel (want <= %.0e), "
                "grid under dc by %.2e (want <= %.0e)",
                solved, max_dc, max_sub, kSingleUserRel, paired, worst_over, kPairOverRel,
                worst_under, kPairUnderAbs));
}

void criterion_invariants() {
  const Constellation qpsk = Constellation::mpsk(4);

  // Splitting-ratio balance identity against an independent bisection.
  Rng rng(606);
  int balance_ok = 0;
  for (int t = 0; t < 1000; ++t) {
    const double gamma = db_to_linear(40.0 * rng.uniform());
    const double energy = db_to_linear(20.0 * rng.uniform());
    const NoiseModel noise{0.5 + 1.5 * rng.uniform(), 0.5 + 1.5 * rng.uniform()};
    const UserRequirement req{gamma, energy};
    const double rho = ci::rho_star(req, noise).rho_star;
    const double lhs = gamma * (noise.n0 + noise.nc / rho);
    const double rhs = energy / (1.0 - rho);
    const double bisect = oracles::rho_balance_bisect(gamma, noise.n0, noise.nc, energy);
    if (std::abs(lhs - rhs) <= kBalanceRel * rhs && std::abs(rho - bisect) <= 1e-9) ++balance_ok;
  }

  // Monotone descent, per-iterate feasibility, and final audits over 500
  // mixed-size instances.
  const double gamma_grid[3] = {10.0, 20.0, 30.0};
  const double energy_grid[3] = {5.0, 10.0, 15.0};
  int descent_ok = 0, iterates_seen = 0;
  ci::DcOptions opt;
  opt.tol = 1e-7;
  opt.max_outer = 100;
  opt.record_iterates = true;
  for (int t = 0; t < 500; ++t) {
    const int k = (t % 2 == 0) ? 2 : 4;
    const NoiseModel noise{1.0, 1.0};
    const std::vector<UserRequirement> req(
        k, {db_to_linear(gamma_grid[t % 3]), db_to_linear(energy_grid[(t / 3) % 3])});
    const auto ch = bench::gen_channels(k, k, derive_seed(7000, t));
    const auto frame = bench::draw_frame(k, qpsk, derive_seed(7001, t));
    const auto rot = rotate_channels(ch, frame);
    const auto start = ci::find_feasible_start(rot, req, noise, qpsk);
    const auto dc = ci::solve_dc(rot, req, noise, qpsk, start.solution, opt);
    if (dc.status != PrecoderStatus::Optimal) continue;

    bool good = verify::check_ci(dc.solution, ch, frame, req, noise, qpsk).pass;
    const auto& hist = dc.state.objective_history;
    for (std::size_t i = 1; i < hist.size(); ++i) {
      good = good && hist[i] <= hist[i - 1] * (1.0 + 1e-12);
    }
    for (const auto& point : dc.state.iterates) {
      good = good && verify::check_ci(point, ch, frame, req, noise, qpsk).pass;
      ++iterates_seen;
    }
    if (good) ++descent_ok;
  }

  // Every OPTIMAL return of the block-level multistart must survive its
  // independent audit as well.
  int conv_ok = 0;
  for (std::uint64_t s = 1; s <= 50; ++s) {
    const NoiseModel noise{1.0, 1.0};
    const std::vector<UserRequirement> req(4, {db_to_linear(20.0), db_to_linear(10.0)});
    const auto ch = bench::gen_channels(4, 4, s);
    conv::MultistartOptions mopt;
    mopt.seed = s;
    const auto run = conv::solve_with_eh_multistart(ch, req, noise, mopt);
    if (run.status == PrecoderStatus::Optimal &&
        verify::check_conventional(run.solution, ch, req, noise).pass) {
      ++conv_ok;
    }
  }

  // Channel scaling: h -> c h must rescale the optimal power by exactly
  // 1/c^2, and a common phase on every row must not move it at all.
  const NoiseModel noise{1.0, 1.0};
  const std::vector<UserRequirement> req(4, {db_to_linear(20.0), db_to_linear(10.0)});
  const auto ch = bench::gen_channels(4, 4, 7);
  const auto frame = bench::draw_frame(4, qpsk, derive_seed(7, 101));
  const auto rot = rotate_channels(ch, frame);
  ci::DcOptions tight;
  tight.tol = 1e-9;
  tight.max_outer = 200;
  tight.record_iterates = false;
  auto solve_power = [&](const RotatedChannels& r) {
    const auto start = ci::find_feasible_start(r, req, noise, qpsk);
    const auto dc = ci::solve_dc(r, req, noise, qpsk, start.solution, tight);
    if (dc.status != PrecoderStatus::Optimal) return -1.0;
    return dc.solution.total_power();
  };
  const double base = solve_power(rot);
  bool scale_ok = base > 0.0;
  double scale_worst = 0.0;
  for (double c : {0.5, 2.0, 10.0}) {
    RotatedChannels scaled;
    scaled.rows = rot.rows * c;
    const double power = solve_power(scaled);
    const double rel = std::abs(power * c * c - base) / base;
    scale_worst = std::max(scale_worst, rel);
    scale_ok = scale_ok && power > 0.0 && rel <= kScaleRel;
  }
  RotatedChannels spun;
  spun.rows = rot.rows * std::polar(1.0, 0.7);
  const double spun_power = solve_power(spun);
  const double phase_rel = std::abs(spun_power - base) / base;
  const bool phase_ok = spun_power > 0.0 && phase_rel <= kPhaseRel;

  // Sweeps must be byte-identical functions of their config.
  bench::SweepConfig cfg;
  cfg.users = 2;
  cfg.antennas = 2;
  cfg.instances = 3;
  cfg.axis = bench::SweepAxis::SinrDb;
  cfg.axis_values = {10.0, 20.0};
  cfg.eh_db = 5.0;
  cfg.schemes = {bench::Scheme::CiDc, bench::Scheme::ConvSca};
  const bool deterministic = bench::to_csv(bench::run_sweep(cfg)) ==
                             bench::to_csv(bench::run_sweep(cfg));

  report(6,
         balance_ok == 1000 && descent_ok == 500 && conv_ok == 50 && scale_ok && phase_ok &&
             deterministic,
         format("balance identity %d/1000; monotone feasible descent %d/500 (%d audited "
                "iterates); block-level audits %d/50; scaling off by %.2e rel; common phase off "
                "by %.2e rel; sweep byte-determinism %s",
                balance_ok, descent_ok, iterates_seen, conv_ok, scale_worst, phase_rel,
                deterministic ? "yes" : "no"));
}

void criterion_conic_solver() {
  using conic::ConeProgram;
  using conic::ConeSolution;
  using conic::LinExpr;
  using conic::ProgramBuilder;
  using Eigen::MatrixXd;
  using Eigen::VectorXd;

  auto unit_cost = [](int n, int which) {
    VectorXd c = VectorXd::Zero(n);
    c(which) = 1.0;
    return c;
  };

  // Equality-constrained projection battery with pseudoinverse references.
  Rng rng(4242);
  int battery_ok = 0;
  double worst_resid = 0.0;
  for (int trial = 0; trial < 25; ++trial) {
    const int k = 3 + rng.uniform_int(3);
    const int p = 1 + rng.uniform_int(2);
    MatrixXd cmat(p, k);
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < k; ++j) cmat(i, j) = rng.gaussian();
    const VectorXd d = VectorXd::NullaryExpr(p, [&](int) { return rng.gaussian(); });
    const VectorXd a = VectorXd::NullaryExpr(k, [&](int) { return rng.gaussian(); });

    ProgramBuilder pb(k + 1);
    for (int i = 0; i < p; ++i) {
      LinExpr row = LinExpr::constant(-d(i));
      for (int j = 0; j < k; ++j) row.add(j, cmat(i, j));
      pb.add_equality(row);
    }
    std::vector<LinExpr> diff;
    for (int j = 0; j < k; ++j) diff.push_back(LinExpr(j, 1.0).add_constant(-a(j)));
    pb.add_soc(LinExpr(k, 1.0), diff);
    const ConeSolution sol = conic::solve(pb.build(unit_cost(k + 1, k)));

    const MatrixXd gram = cmat * cmat.transpose();
    const VectorXd zstar = a + cmat.transpose() * gram.ldlt().solve(d - cmat * a);
    const double tstar = (zstar - a).norm();
    const double resid =
        std::max({sol.primal_residual, sol.dual_residual, std::abs(sol.gap)});
    worst_resid = std::max(worst_resid, resid);
    if (sol.status == conic::SolveStatus::Optimal && resid <= kKktResid &&
        std::abs(sol.objective - tstar) <= 1e-7 * std::max(1.0, tstar)) {
      ++battery_ok;
    }
  }

  // Random bounded LPs against exhaustive vertex enumeration.
  Rng lp_rng(3030);
  int lp_ok = 0, lp_tried = 0;
  while (lp_tried < 50) {
    const int n = 2 + lp_rng.uniform_int(2);
    const int m = 2 * n + 2 + lp_rng.uniform_int(3);
    MatrixXd A = MatrixXd::Zero(m, n);
    VectorXd b(m);
    const VectorXd x0 = VectorXd::NullaryExpr(n, [&](int) { return 2.0 * lp_rng.uniform() - 1.0; });
    int r = 0;
    for (int i = 0; i < n; ++i) {
      A(r, i) = 1.0;
      b(r++) = 4.0;
      A(r, i) = -1.0;
      b(r++) = 4.0;
    }
    for (; r < m; ++r) {
      for (int j = 0; j < n; ++j) A(r, j) = 2.0 * lp_rng.uniform() - 1.0;
      b(r) = A.row(r) * x0 + lp_rng.uniform();
    }
    const VectorXd c = VectorXd::NullaryExpr(n, [&](int) { return 2.0 * lp_rng.uniform() - 1.0; });
    const auto ref = oracles::lp_vertex_minimum(c, A, b);
    if (!ref) continue;
    ++lp_tried;

    ConeProgram prog;
    prog.c = c;
    prog.A = A;
    prog.b = b;
    prog.cones = {{conic::ConeType::NonNeg, m}};
    const ConeSolution sol = conic::solve(prog);
    if (sol.status == conic::SolveStatus::Optimal &&
        std::abs(sol.objective - *ref) <= kLpRel * std::max(1.0, std::abs(*ref))) {
      ++lp_ok;
    }
  }

  // Norm bound: minimize t with (t, 3, 4) conic, optimum exactly 5.
  ProgramBuilder pb(1);
  pb.add_soc(LinExpr(0, 1.0), {LinExpr::constant(3.0), LinExpr::constant(4.0)});
  conic::SolverSettings strict;
  strict.tol_feas = 1e-10;
  strict.tol_gap = 1e-10;
  const conic::ConeSolution soc = conic::solve(pb.build(unit_cost(1, 0)), strict);
  const double soc_err = std::abs(soc.objective - 5.0);
  const bool soc_ok = soc.status == conic::SolveStatus::Optimal && soc_err <= kSocAbs;

  report(7, battery_ok == 25 && lp_ok == 50 && soc_ok,
         format("projection battery %d/25 within %.0e residuals (worst %.2e); vertex agreement "
                "%d/50 within %.0e; norm example off by %.2e (want <= %.0e)",
                battery_ok, kKktResid, worst_resid, lp_ok, kLpRel, soc_err, kSocAbs));
}

void criterion_symbol_errors() {
  const Constellation qpsk = Constellation::mpsk(4);

  // Feasible designs hold strict wedge margins, so with receiver noise off
  // every demodulation must land on the sent symbol.
  const NoiseModel design_noise{1.0, 1.0};
  const std::vector<UserRequirement> req2(2, {db_to_linear(10.0), db_to_linear(6.0)});
  const auto ch2 = bench::gen_channels(2, 2, 41);
  const auto frame2 = SymbolFrame::from_symbols(qpsk, {0, 0});
  verify::FrameSolver resolve = [&](const RotatedChannels& rot) {
    const auto start = ci::find_feasible_start(rot, req2, design_noise, qpsk);
    const auto dc = ci::solve_dc(rot, req2, design_noise, qpsk, start.solution);
    if (dc.status != PrecoderStatus::Optimal) throw std::runtime_error("resolver failed");
    return dc.solution;
  };
  const CiSolution seed_sol = resolve(rotate_channels(ch2, frame2));
  const auto silent =
      verify::symbol_mc_ser(seed_sol, ch2, req2, NoiseModel{0.0, 0.0}, qpsk, 2000, 99, resolve);
  const bool silent_ok = silent.ser[0] == 0.0 && silent.ser[1] == 0.0;

  // Single-user QPSK at post-split SNR 10 against the Gaussian formula.
  const NoiseModel noise{1.0, 1.0};
  const std::vector<UserRequirement> req1{{10.0, 15.0}};
  ChannelInstance ch1;
  ch1.rows = CMatrix::Constant(1, 1, Complex(1.0, 0.0));
  CiSolution sol;
  sol.w = CVector::Constant(1, Complex(std::sqrt(30.0), 0.0));
  sol.rho = {0.5};
  const std::int64_t n = 100000;
  const double expect = oracles::qpsk_ser(10.0);
  const auto mc = verify::symbol_mc_ser(sol, ch1, req1, noise, qpsk, n, 1234);
  const double se = std::sqrt(expect * (1.0 - expect) / static_cast<double>(n));
  const double err = std::abs(mc.ser[0] - expect);
  const bool formula_ok = err <= kSerSigmas * se;

  report(8, silent_ok && formula_ok,
         format("noiseless run errors (%.0f, %.0f) of 2000 symbols (want exactly 0); "
                "single-user rate %.6f vs %.6f formula, off by %.1f standard errors "
                "(want <= %.0f)",
                silent.ser[0] * 2000.0, silent.ser[1] * 2000.0, mc.ser[0], expect, err / se,
                kSerSigmas));
}

void guarded(std::initializer_list<int> ids, void (*run)()) {
  try {
    run();
  } catch (const std::exception& e) {
    for (int id : ids) report(id, false, std::string("exception: ") + e.what());
  }
}

}  // namespace

int main() {
  std::printf("ci-swipt acceptance: QPSK, N0 = NC = 1, 100 channel draws per sweep point, "
              "base seed 1\n");
  std::fflush(stdout);
  guarded({1, 2, 3}, criteria_power_sweep);
  guarded({4}, criterion_antenna_trend);
  guarded({5}, criterion_oracle_equivalence);
  guarded({6}, criterion_invariants);
  guarded({7}, criterion_conic_solver);
  guarded({8}, criterion_symbol_errors);
  if (failures == 0) {
    std::printf("all criteria passed\n");
  } else {
    std::printf("%d criterion(s) failed\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
