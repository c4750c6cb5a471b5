// SPDX-License-Identifier: Apache-2.0

#include "ciswipt/conventional_precoder.hpp"

#include <doctest.h>

#include <cmath>

#include "ciswipt/rng.hpp"
#include "oracles.hpp"

using namespace ciswipt;

namespace {

ChannelInstance random_channels(int k, int n, std::uint64_t seed) {
  Rng rng(seed);
  ChannelInstance ch;
  ch.rows.resize(k, n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) ch.rows(i, j) = rng.cgaussian(1.0);
  return ch;
}

void check_feasible(const ConventionalSolution& sol, const ChannelInstance& ch,
                    const std::vector<UserRequirement>& req, const NoiseModel& noise,
                    double tol = 1e-6) {
  const ConventionalEvaluation ev = evaluate_conventional(sol, ch, noise);
  for (std::size_t i = 0; i < req.size(); ++i) {
    CHECK((ev.sinr[i] - req[i].gamma) / std::max(1.0, req[i].gamma) >= -tol);
    if (req[i].energy > 0.0)
      CHECK(ev.harvested[i] >= req[i].energy - tol * std::max(1.0, req[i].energy));
  }
}

}  // namespace

TEST_CASE("sinr-only beamforming matches the single-user closed form") {
  const NoiseModel noise{1.0, 1.0};
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 4;
    const ChannelInstance ch = random_channels(1, n, 300 + trial);
    const double gamma = db_to_linear(3.0 * (trial % 10));
    const double rho = 0.2 + 0.07 * (trial % 10);
    auto res = conv::solve_sinr_only(ch, {{gamma, 0.0}}, noise, {rho});
    REQUIRE(res.status == PrecoderStatus::Optimal);
    const double expect =
        gamma * (noise.n0 + noise.nc / rho) / ch.rows.row(0).squaredNorm();
    CHECK(res.solution.total_power() == doctest::Approx(expect).epsilon(1e-6));
  }
}

TEST_CASE("orthogonal users decouple into single-user problems") {
  const NoiseModel noise{1.0, 1.0};
  ChannelInstance ch;
  ch.rows = CMatrix::Zero(2, 2);
  ch.rows(0, 0) = Complex(2.0, 0.0);
  ch.rows(1, 1) = Complex(0.0, 1.5);
  std::vector<UserRequirement> req{{db_to_linear(10.0), 0.0}, {db_to_linear(6.0), 0.0}};
  std::vector<double> rho{0.5, 0.8};
  auto res = conv::solve_sinr_only(ch, req, noise, rho);
  REQUIRE(res.status == PrecoderStatus::Optimal);
  const double expect = req[0].gamma * (1.0 + 1.0 / rho[0]) / 4.0 +
                        req[1].gamma * (1.0 + 1.0 / rho[1]) / 2.25;
  CHECK(res.solution.total_power() == doctest::Approx(expect).epsilon(1e-4));
  check_feasible(res.solution, ch, req, noise);
}

TEST_CASE("sinr-only power never exceeds the zero-forcing bound") {
  const NoiseModel noise{1.0, 1.0};
  for (int trial = 0; trial < 25; ++trial) {
    const int k = 2 + trial % 3;
    const int n = k + trial % 2;
    const ChannelInstance ch = random_channels(k, n, 1700 + trial);
    std::vector<UserRequirement> req(k, {db_to_linear(5.0 + trial % 12), 0.0});
    std::vector<double> rho(k, 0.3 + 0.05 * (trial % 10));
    auto res = conv::solve_sinr_only(ch, req, noise, rho);
    REQUIRE(res.status == PrecoderStatus::Optimal);
    const double zf = oracles::conv_zero_forcing_power(ch, req, noise, rho);
    CHECK(res.solution.total_power() <= zf * (1.0 + 1e-6));
    check_feasible(res.solution, ch, req, noise);
  }
}

TEST_CASE("joint design matches the single-user oracle over rho") {
  const NoiseModel noise{1.0, 1.0};
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 1 + trial % 3;
    const ChannelInstance ch = random_channels(1, n, 2500 + trial);
    const double gamma = db_to_linear(4.0 * (trial % 6));
    const double energy = db_to_linear(2.0 * (trial % 8));
    std::vector<UserRequirement> req{{gamma, energy}};
    auto res = conv::solve_with_eh_multistart(ch, req, noise);
    REQUIRE(res.status != PrecoderStatus::Infeasible);
    const double expect = oracles::conv_single_user_power(
        ch.rows.row(0).transpose(), gamma, energy, 1.0, 1.0, kRhoMin, 1.0 - kRhoMin);
    CHECK(res.solution.total_power() == doctest::Approx(expect).epsilon(1e-3));
    check_feasible(res.solution, ch, req, noise);
  }
}

TEST_CASE("joint design without harvesting reduces to sinr-only beamforming") {
  const NoiseModel noise{1.0, 1.0};
  const ChannelInstance ch = random_channels(3, 4, 3600);
  std::vector<UserRequirement> req(3, {db_to_linear(12.0), 0.0});
  auto joint = conv::solve_with_eh_multistart(ch, req, noise);
  REQUIRE(joint.status != PrecoderStatus::Infeasible);
  std::vector<double> rho(3, 1.0 - kRhoMin);
  auto plain = conv::solve_sinr_only(ch, req, noise, rho);
  REQUIRE(plain.status == PrecoderStatus::Optimal);
  CHECK(joint.solution.total_power() ==
        doctest::Approx(plain.solution.total_power()).epsilon(1e-4));
}

TEST_CASE("sca descends monotonically and lands on a feasible point") {
  const NoiseModel noise{1.0, 1.0};
  for (int trial = 0; trial < 8; ++trial) {
    const int k = 2 + trial % 2;
    const ChannelInstance ch = random_channels(k, 4, 4400 + trial);
    std::vector<UserRequirement> req(k, {db_to_linear(15.0), db_to_linear(8.0)});
    std::vector<double> rho(k);
    for (int i = 0; i < k; ++i)
      rho[i] = std::clamp(ci::rho_star(req[i], noise).rho_star, kRhoMin, 1.0 - kRhoMin);
    auto boot = conv::solve_sinr_only(ch, req, noise, rho);
    REQUIRE(boot.status == PrecoderStatus::Optimal);
    const ConventionalSolution init = conv::make_eh_feasible_init(boot.solution, ch, req, noise);
    check_feasible(init, ch, req, noise);
    auto run = conv::solve_with_eh_sca(ch, req, noise, init);
    REQUIRE(run.status != PrecoderStatus::Infeasible);
    REQUIRE(run.state.objective_history.size() >= 2);
    for (std::size_t t = 1; t < run.state.objective_history.size(); ++t)
      CHECK(run.state.objective_history[t] <=
            run.state.objective_history[t - 1] * (1.0 + 1e-9));
    CHECK(run.solution.total_power() <= init.total_power() * (1.0 + 1e-9));
    check_feasible(run.solution, ch, req, noise);
  }
}

TEST_CASE("multistart is deterministic in its seed") {
  const NoiseModel noise{1.0, 1.0};
  const ChannelInstance ch = random_channels(3, 4, 5200);
  std::vector<UserRequirement> req(3, {db_to_linear(18.0), db_to_linear(9.0)});
  conv::MultistartOptions opts;
  opts.seed = 42;
  auto a = conv::solve_with_eh_multistart(ch, req, noise, opts);
  auto b = conv::solve_with_eh_multistart(ch, req, noise, opts);
  REQUIRE(a.status != PrecoderStatus::Infeasible);
  CHECK(a.solution.total_power() == b.solution.total_power());
  CHECK((a.solution.beams - b.solution.beams).norm() == 0.0);
}

TEST_CASE("infeasible targets are reported, not fudged") {
  // two users on (nearly) the same channel direction cannot both reach a
  // high SINR no matter the power
  const NoiseModel noise{1.0, 1.0};
  ChannelInstance ch;
  ch.rows.resize(2, 2);
  ch.rows << Complex(1.0, 0.0), Complex(0.5, 0.0), Complex(1.0, 1e-9), Complex(0.5, 0.0);
  std::vector<UserRequirement> req(2, {db_to_linear(20.0), 0.0});
  std::vector<double> rho(2, 0.5);
  auto res = conv::solve_sinr_only(ch, req, noise, rho);
  CHECK(res.status == PrecoderStatus::Infeasible);
}
