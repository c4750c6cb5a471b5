// SPDX-License-Identifier: Apache-2.0
//
// Part of ci-swipt, a transmit-precoder design library for joint wireless
// information and power transfer in the MISO downlink.
//
// Dense second-order cone programming. Problems are stated as
//
//   minimize    c' x
//   subject to  b - A x in K
//
// where K is a Cartesian product of zero cones (equalities), nonnegative
// orthants and second-order cones, laid out block by block down the rows
// of A. The solver is a homogeneous self-dual embedding interior-point
// method with Nesterov-Todd scalings and a Mehrotra predictor-corrector,
// factorizing the (n + p + m) KKT system densely; problems here are small
// (tens of variables), so a sparse backend would buy nothing.

#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace ciswipt::conic {

enum class ConeType {
  Zero,    // b - A x == 0
  NonNeg,  // b - A x >= 0 componentwise
  Soc      // (b - A x) = (t, z) with ||z|| <= t
};

struct ConeBlock {
  ConeType type = ConeType::Zero;
  int size = 0;
};

struct ConeProgram {
  Eigen::VectorXd c;
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  std::vector<ConeBlock> cones;

  int num_vars() const { return static_cast<int>(c.size()); }
  int num_rows() const { return static_cast<int>(b.size()); }

  /// Throws std::invalid_argument on shape mismatches, empty cones or a
  /// cone layout that does not cover the rows exactly.
  void validate() const;
};

enum class SolveStatus { Optimal, Infeasible, Unbounded, MaxIter };

std::string to_string(SolveStatus status);

struct ConeSolution {
  SolveStatus status = SolveStatus::MaxIter;
  Eigen::VectorXd x;
  Eigen::VectorXd s;  // slack b - A x, cone-ordered like the rows
  Eigen::VectorXd y;  // dual multipliers per row; c' x >= b' y for any feasible pair
  double objective = 0.0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double gap = 0.0;           // s' z complementarity gap
  double relative_gap = 0.0;  // gap / max(1, |objective|)
  double certificate_residual = 0.0;  // quality of the infeasibility/unboundedness ray
  int iterations = 0;
};

struct SolverSettings {
  double tol_feas = 1e-8;
  double tol_gap = 1e-8;  // met when either the absolute or the relative gap drops below
  double tol_certificate = 1e-7;
  // When the iteration stops early (stall, scaling breakdown, iteration cap)
  // the best iterate is still reported Optimal if it fits these looser
  // bounds. Residual fields always carry the measured values.
  double tol_feas_stop = 1e-6;
  double tol_gap_stop = 1e-6;
  int max_iter = 200;
};

ConeSolution solve(const ConeProgram& prog, const SolverSettings& settings = {});

/// Affine expression sum_k coef_k * x[var_k] + offset over builder variables.
struct LinExpr {
  struct Term {
    int var = 0;
    double coef = 0.0;
  };
  std::vector<Term> terms;
  double offset = 0.0;

  LinExpr() = default;
  LinExpr(int var, double coef) { terms.push_back({var, coef}); }

  static LinExpr constant(double value) {
    LinExpr e;
    e.offset = value;
    return e;
  }

  LinExpr& add(int var, double coef) {
    terms.push_back({var, coef});
    return *this;
  }

  LinExpr& add_constant(double value) {
    offset += value;
    return *this;
  }
};

/// Incremental assembly of a ConeProgram in constraint-centric form. Rows are
/// emitted in insertion order; adjacent nonnegativity rows share one block.
class ProgramBuilder {
 public:
  explicit ProgramBuilder(int num_vars);

  int add_var();
  int num_vars() const { return num_vars_; }

  /// expr == 0
  void add_equality(const LinExpr& expr);

  /// expr >= 0
  void add_nonneg(const LinExpr& expr);

  /// ||(vec_1, ..., vec_d)|| <= bound
  void add_soc(const LinExpr& bound, const std::vector<LinExpr>& vec);

  /// 2 u v >= ||z||^2 with u, v >= 0, encoded as the standard cone
  /// ||(sqrt(2) z, u - v)|| <= u + v. The orthant rows for u and v are
  /// implied by the cone and not added.
  void add_rotated_soc(const LinExpr& u, const LinExpr& v, const std::vector<LinExpr>& z);

  ConeProgram build(const Eigen::VectorXd& cost) const;

 private:
  void push_row(ConeType type, const LinExpr& expr);

  int num_vars_ = 0;
  std::vector<ConeBlock> blocks_;
  std::vector<LinExpr> rows_;  // row semantics: expr in cone, i.e. b - A x = expr
};

}  // namespace ciswipt::conic
