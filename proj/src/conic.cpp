// SPDX-License-Identifier: Apache-2.0
//
// Homogeneous self-dual interior-point solver for dense cone programs.
// The iteration follows the conelp scheme: Nesterov-Todd scaling of the
// (s, z) pair, a Mehrotra predictor-corrector step, and embedding
// variables (tau, kappa) whose ratio certifies optimality, primal
// infeasibility or unboundedness.

#include "ciswipt/conic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ciswipt::conic {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kStaticReg = 1e-10;  // KKT diagonal regularization
constexpr double kStepDamp = 0.99;

// Cone layout of the inequality rows after internal reordering:
// l nonnegative rows first, then the second-order blocks.
struct Layout {
  int l = 0;
  std::vector<int> soc;
  std::vector<int> soc_start;
  int m = 0;

  void finalize() {
    soc_start.resize(soc.size());
    int at = l;
    for (std::size_t k = 0; k < soc.size(); ++k) {
      soc_start[k] = at;
      at += soc[k];
    }
    m = at;
  }
  int degree() const { return l + static_cast<int>(soc.size()); }
};

VectorXd cone_identity(const Layout& lay) {
  VectorXd e = VectorXd::Zero(lay.m);
  e.head(lay.l).setOnes();
  for (std::size_t k = 0; k < lay.soc.size(); ++k) e(lay.soc_start[k]) = 1.0;
  return e;
}

// Largest violation of cone membership: negative iff strictly interior.
double cone_violation(const Layout& lay, const VectorXd& v) {
  double t = -kInf;
  for (int i = 0; i < lay.l; ++i) t = std::max(t, -v(i));
  for (std::size_t k = 0; k < lay.soc.size(); ++k) {
    const int at = lay.soc_start[k], d = lay.soc[k];
    t = std::max(t, v.segment(at + 1, d - 1).norm() - v(at));
  }
  return t;
}

void shift_to_interior(const Layout& lay, VectorXd& v) {
  if (lay.m == 0) return;
  const double t = cone_violation(lay, v);
  const double margin = 1e-8 * std::max(1.0, v.norm());
  if (t >= -margin) v += (1.0 + t) * cone_identity(lay);
}

// w = u o v in the Jordan algebra of the cone product.
VectorXd jordan_prod(const Layout& lay, const VectorXd& u, const VectorXd& v) {
  VectorXd w(lay.m);
  w.head(lay.l) = u.head(lay.l).cwiseProduct(v.head(lay.l));
  for (std::size_t k = 0; k < lay.soc.size(); ++k) {
    const int at = lay.soc_start[k], d = lay.soc[k];
    w(at) = u.segment(at, d).dot(v.segment(at, d));
    w.segment(at + 1, d - 1) =
        u(at) * v.segment(at + 1, d - 1) + v(at) * u.segment(at + 1, d - 1);
  }
  return w;
}

// u with lambda o u = rhs; lambda must be interior.
VectorXd jordan_div(const Layout& lay, const VectorXd& lambda, const VectorXd& rhs) {
  VectorXd u(lay.m);
  u.head(lay.l) = rhs.head(lay.l).cwiseQuotient(lambda.head(lay.l));
  for (std::size_t k = 0; k < lay.soc.size(); ++k) {
    const int at = lay.soc_start[k], d = lay.soc[k];
    const auto l1 = lambda.segment(at + 1, d - 1);
    const double det = lambda(at) * lambda(at) - l1.squaredNorm();
    const double u0 = (lambda(at) * rhs(at) - l1.dot(rhs.segment(at + 1, d - 1))) / det;
    u(at) = u0;
    u.segment(at + 1, d - 1) = (rhs.segment(at + 1, d - 1) - u0 * l1) / lambda(at);
  }
  return u;
}

// Largest alpha with v + alpha*dv still in the cone (inf if unconstrained).
double max_step(const Layout& lay, const VectorXd& v, const VectorXd& dv) {
  double alpha = kInf;
  for (int i = 0; i < lay.l; ++i)
    if (dv(i) < 0.0) alpha = std::min(alpha, -v(i) / dv(i));
  for (std::size_t k = 0; k < lay.soc.size(); ++k) {
    const int at = lay.soc_start[k], d = lay.soc[k];
    const auto v1 = v.segment(at + 1, d - 1);
    const auto dv1 = dv.segment(at + 1, d - 1);
    // Smallest positive root of (v0+a*dv0)^2 - ||v1+a*dv1||^2 = 0.
    const double a = dv(at) * dv(at) - dv1.squaredNorm();
    const double bq = v(at) * dv(at) - v1.dot(dv1);
    const double c = v(at) * v(at) - v1.squaredNorm();
    double root = kInf;
    if (std::abs(a) < 1e-14) {
      if (bq < 0.0) root = -c / (2.0 * bq);
    } else {
      const double disc = bq * bq - a * c;
      if (disc >= 0.0) {
        const double sq = std::sqrt(disc);
        for (double r : {(-bq - sq) / a, (-bq + sq) / a})
          if (r > 0.0) root = std::min(root, r);
      }
    }
    alpha = std::min(alpha, root);
  }
  return alpha;
}

double scalar_step(double v, double dv) { return dv < 0.0 ? -v / dv : kInf; }

// Nesterov-Todd scaling W with lambda = W z = W^{-1} s.
struct Scaling {
  const Layout* lay = nullptr;
  VectorXd d;  // nonneg part, W = diag(d)
  struct Soc {
    double beta = 1.0;
    VectorXd v;  // unit hyperbolic vector, W = beta (2 v v' - J)
  };
  std::vector<Soc> socs;
  VectorXd lambda;

  static Scaling identity(const Layout& lay) {
    Scaling w;
    w.lay = &lay;
    w.d = VectorXd::Ones(lay.l);
    w.socs.resize(lay.soc.size());
    for (std::size_t k = 0; k < lay.soc.size(); ++k) {
      w.socs[k].beta = 1.0;
      w.socs[k].v = VectorXd::Zero(lay.soc[k]);
      w.socs[k].v(0) = 1.0;
    }
    w.lambda = cone_identity(lay);
    return w;
  }

  static Scaling compute(const Layout& lay, const VectorXd& s, const VectorXd& z) {
    Scaling w;
    w.lay = &lay;
    w.d = (s.head(lay.l).cwiseQuotient(z.head(lay.l))).cwiseSqrt();
    w.lambda.resize(lay.m);
    w.lambda.head(lay.l) = (s.head(lay.l).cwiseProduct(z.head(lay.l))).cwiseSqrt();
    w.socs.resize(lay.soc.size());
    for (std::size_t k = 0; k < lay.soc.size(); ++k) {
      const int at = lay.soc_start[k], dn = lay.soc[k];
      const auto sk = s.segment(at, dn);
      const auto zk = z.segment(at, dn);
      const double a = std::sqrt(sk(0) * sk(0) - sk.tail(dn - 1).squaredNorm());
      const double b = std::sqrt(zk(0) * zk(0) - zk.tail(dn - 1).squaredNorm());
      const double gamma = std::sqrt((1.0 + sk.dot(zk) / (a * b)) / 2.0);
      Soc& sc = w.socs[k];
      sc.beta = std::sqrt(a / b);
      VectorXd v = zk / b;
      v.tail(dn - 1) *= -1.0;  // J z / b
      v += sk / a;
      v /= 2.0 * gamma;
      v(0) += 1.0;
      v /= std::sqrt(2.0 * v(0));
      sc.v = v;
      // lambda block
      const double s0 = sk(0) / a, z0 = zk(0) / b;
      const double dd = s0 + z0 + 2.0 * gamma;
      VectorXd lk(dn);
      lk(0) = gamma;
      lk.tail(dn - 1) =
          ((gamma + z0) / dd) * (sk.tail(dn - 1) / a) + ((gamma + s0) / dd) * (zk.tail(dn - 1) / b);
      w.lambda.segment(at, dn) = std::sqrt(a * b) * lk;
    }
    return w;
  }

  VectorXd apply(const VectorXd& x) const {  // W x
    VectorXd y(lay->m);
    y.head(lay->l) = d.cwiseProduct(x.head(lay->l));
    for (std::size_t k = 0; k < socs.size(); ++k) {
      const int at = lay->soc_start[k], dn = lay->soc[k];
      const auto xk = x.segment(at, dn);
      const VectorXd& v = socs[k].v;
      VectorXd jx = xk;
      jx.tail(dn - 1) *= -1.0;
      y.segment(at, dn) = socs[k].beta * (2.0 * v * v.dot(xk) - jx);
    }
    return y;
  }

  VectorXd apply_inv(const VectorXd& x) const {  // W^{-1} x
    VectorXd y(lay->m);
    y.head(lay->l) = x.head(lay->l).cwiseQuotient(d);
    for (std::size_t k = 0; k < socs.size(); ++k) {
      const int at = lay->soc_start[k], dn = lay->soc[k];
      const auto xk = x.segment(at, dn);
      VectorXd jv = socs[k].v;
      jv.tail(dn - 1) *= -1.0;
      VectorXd jx = xk;
      jx.tail(dn - 1) *= -1.0;
      y.segment(at, dn) = (2.0 * jv * jv.dot(xk) - jx) / socs[k].beta;
    }
    return y;
  }

};

// Dense KKT system [0 A' G'; A 0 0; G 0 -W'W], factored in the scaled form
// [0 A' Gs'; A 0 0; Gs 0 -I] with Gs = W^{-1} G and v = W z. The scaled
// matrix conditions like 1/mu instead of 1/mu^2, so iterative refinement
// against it stays effective all the way to tight tolerances.
struct KktSolver {
  int n = 0, p = 0, m = 0, nn = 0;
  const MatrixXd* G = nullptr;
  const Scaling* w = nullptr;
  MatrixXd scaled;
  Eigen::PartialPivLU<MatrixXd> lu;

  void init(const MatrixXd& a, const MatrixXd& g) {
    G = &g;
    n = static_cast<int>(a.cols());
    p = static_cast<int>(a.rows());
    m = static_cast<int>(g.rows());
    nn = n + p + m;
    scaled = MatrixXd::Zero(nn, nn);
    scaled.block(0, n, n, p) = a.transpose();
    scaled.block(n, 0, p, n) = a;
    scaled.block(n + p, n + p, m, m) = -MatrixXd::Identity(m, m);
  }

  void factor(const Scaling& scaling) {
    w = &scaling;
    MatrixXd gs(m, n);
    for (int j = 0; j < n; ++j) gs.col(j) = scaling.apply_inv(G->col(j));
    scaled.block(0, n + p, n, m) = gs.transpose();
    scaled.block(n + p, 0, m, n) = gs;
    MatrixXd reg = scaled;
    for (int i = 0; i < nn; ++i) reg(i, i) += (i < n) ? kStaticReg : -kStaticReg;
    lu.compute(reg);
  }

  void solve(const VectorXd& bx, const VectorXd& by, const VectorXd& bz, VectorXd& x,
             VectorXd& y, VectorXd& z) const {
    VectorXd rhs(nn);
    rhs << bx, by, w->apply_inv(bz);
    VectorXd sol = lu.solve(rhs);
    for (int pass = 0; pass < 3; ++pass) {
      VectorXd res = rhs - scaled * sol;
      sol += lu.solve(res);
    }
    x = sol.head(n);
    y = sol.segment(n, p);
    z = w->apply_inv(sol.tail(m));
  }
};

struct SplitProgram {
  MatrixXd A, G;
  VectorXd b, h, c;
  Layout lay;
  std::vector<int> eq_orig;    // internal eq row -> original row
  std::vector<int> cone_orig;  // internal cone row -> original row
};

SplitProgram split_rows(const ConeProgram& prog) {
  SplitProgram sp;
  const int n = prog.num_vars();
  std::vector<int> eq_rows, nonneg_rows, soc_rows;
  int at = 0;
  for (const ConeBlock& blk : prog.cones) {
    for (int i = 0; i < blk.size; ++i) {
      if (blk.type == ConeType::Zero)
        eq_rows.push_back(at + i);
      else if (blk.type == ConeType::NonNeg)
        nonneg_rows.push_back(at + i);
    }
    if (blk.type == ConeType::Soc) {
      sp.lay.soc.push_back(blk.size);
      for (int i = 0; i < blk.size; ++i) soc_rows.push_back(at + i);
    }
    at += blk.size;
  }
  sp.lay.l = static_cast<int>(nonneg_rows.size());
  sp.lay.finalize();

  sp.eq_orig = eq_rows;
  sp.cone_orig = nonneg_rows;
  sp.cone_orig.insert(sp.cone_orig.end(), soc_rows.begin(), soc_rows.end());

  const int p = static_cast<int>(eq_rows.size());
  const int m = sp.lay.m;
  sp.A.resize(p, n);
  sp.b.resize(p);
  sp.G.resize(m, n);
  sp.h.resize(m);
  for (int i = 0; i < p; ++i) {
    sp.A.row(i) = prog.A.row(eq_rows[i]);
    sp.b(i) = prog.b(eq_rows[i]);
  }
  for (int i = 0; i < m; ++i) {
    sp.G.row(i) = prog.A.row(sp.cone_orig[i]);
    sp.h(i) = prog.b(sp.cone_orig[i]);
  }
  sp.c = prog.c;
  return sp;
}

}  // namespace

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unbounded: return "unbounded";
    case SolveStatus::MaxIter: return "max_iter";
  }
  return "unknown";
}

void ConeProgram::validate() const {
  if (num_vars() < 1) throw std::invalid_argument("cone program needs at least one variable");
  if (A.rows() != b.size() || A.cols() != c.size())
    throw std::invalid_argument("cone program shape mismatch");
  if (!A.allFinite() || !b.allFinite() || !c.allFinite())
    throw std::invalid_argument("cone program data must be finite");
  int covered = 0;
  int inequality_rows = 0;
  for (const ConeBlock& blk : cones) {
    const int min_size = blk.type == ConeType::Soc ? 2 : 1;
    if (blk.size < min_size) throw std::invalid_argument("cone block too small");
    if (blk.type != ConeType::Zero) inequality_rows += blk.size;
    covered += blk.size;
  }
  if (covered != num_rows())
    throw std::invalid_argument("cone blocks must cover the rows exactly");
  if (inequality_rows == 0)
    throw std::invalid_argument("cone program needs at least one inequality row");
}

ConeSolution solve(const ConeProgram& prog, const SolverSettings& settings) {
  prog.validate();
  SplitProgram sp = split_rows(prog);
  const int n = prog.num_vars();
  const int p = static_cast<int>(sp.b.size());
  const Layout& lay = sp.lay;
  const int m = lay.m;

  KktSolver kkt;
  kkt.init(sp.A, sp.G);

  const double norm_b = std::max(1.0, sp.b.norm());
  const double norm_h = std::max(1.0, sp.h.norm());
  const double norm_c = std::max(1.0, sp.c.norm());

  // Initial point: least-squares style solves at W = I, shifted into the cone.
  VectorXd x(n), y(p), z(m), s(m), tmp_x(n), tmp_y(p), tmp_z(m);
  {
    Scaling wid = Scaling::identity(lay);
    kkt.factor(wid);
    kkt.solve(VectorXd::Zero(n), sp.b, sp.h, x, tmp_y, tmp_z);
    s = sp.h - sp.G * x;
    shift_to_interior(lay, s);
    kkt.solve(-sp.c, VectorXd::Zero(p), VectorXd::Zero(m), tmp_x, y, z);
    shift_to_interior(lay, z);
  }
  double tau = 1.0, kappa = 1.0;

  const VectorXd e = cone_identity(lay);
  const double deg = lay.degree();

  ConeSolution out;
  auto fill_point = [&](SolveStatus status, int iters) {
    const double td = std::max(tau, 1e-12);
    out.status = status;
    out.iterations = iters;
    out.x = x / td;
    out.objective = sp.c.dot(out.x);
    out.s = prog.b - prog.A * out.x;
    out.y.resize(prog.num_rows());
    for (int i = 0; i < p; ++i) out.y(sp.eq_orig[i]) = -y(i) / td;
    for (int i = 0; i < m; ++i) out.y(sp.cone_orig[i]) = -z(i) / td;
  };

  // Best iterate seen so far, by worst tolerance-normalized criterion.
  // Near the numerical floor the step directions degrade, so the final
  // iterate is not necessarily the one worth returning.
  struct Snapshot {
    VectorXd x, y, z, s;
    double tau = 0.0, kappa = 0.0;
    double score = kInf;
    double pres = 0.0, dres = 0.0, gap = 0.0, relgap = 0.0;
  } best;

  int tiny_steps = 0;
  for (int iter = 0;; ++iter) {
    const VectorXd rx = sp.A.transpose() * y + sp.G.transpose() * z + sp.c * tau;
    const VectorXd ry = sp.A * x - sp.b * tau;
    const VectorXd rz = sp.G * x + s - sp.h * tau;
    const double cx = sp.c.dot(x), by = sp.b.dot(y), hz = sp.h.dot(z);
    const double rtau = kappa + cx + by + hz;

    const double pres = std::max(ry.norm() / norm_b, rz.norm() / norm_h) / tau;
    const double dres = rx.norm() / norm_c / tau;
    const double pcost = cx / tau;
    const double gap = s.dot(z) / (tau * tau);
    const double relgap = gap / std::max(1.0, std::abs(pcost));
    const double score = std::max({pres / settings.tol_feas, dres / settings.tol_feas,
                                   std::min(gap, relgap) / settings.tol_gap});

    out.primal_residual = pres;
    out.dual_residual = dres;
    out.gap = gap;
    out.relative_gap = relgap;
    out.certificate_residual = 0.0;

    if (score <= 1.0) {
      fill_point(SolveStatus::Optimal, iter);
      return out;
    }
    if (std::isfinite(score) && score < best.score) {
      best = {x, y, z, s, tau, kappa, score, pres, dres, gap, relgap};
    }
    auto restore_best = [&](int iters) {
      SolveStatus status = SolveStatus::MaxIter;
      if (best.score < kInf) {
        x = best.x;
        y = best.y;
        z = best.z;
        s = best.s;
        tau = best.tau;
        kappa = best.kappa;
        out.primal_residual = best.pres;
        out.dual_residual = best.dres;
        out.gap = best.gap;
        out.relative_gap = best.relgap;
        if (best.pres <= settings.tol_feas_stop && best.dres <= settings.tol_feas_stop &&
            std::min(best.gap, best.relgap) <= settings.tol_gap_stop)
          status = SolveStatus::Optimal;
      }
      fill_point(status, iters);
    };

    if (by + hz < -1e-10) {
      const double scale = -1.0 / (by + hz);
      const double res =
          (sp.A.transpose() * (y * scale) + sp.G.transpose() * (z * scale)).norm() / norm_c;
      if (res <= settings.tol_certificate) {
        // tau -> 0 on this path; report the ray in y, not a primal point.
        out.status = SolveStatus::Infeasible;
        out.iterations = iter;
        out.x = VectorXd::Zero(n);
        out.s = prog.b;
        out.y.resize(prog.num_rows());
        for (int i = 0; i < p; ++i) out.y(sp.eq_orig[i]) = -y(i) * scale;
        for (int i = 0; i < m; ++i) out.y(sp.cone_orig[i]) = -z(i) * scale;
        out.objective = kInf;
        out.certificate_residual = res;
        return out;
      }
    }
    if (cx < -1e-10) {
      const double scale = -1.0 / cx;
      const double res = std::max((sp.A * (x * scale)).norm() / norm_b,
                                  (sp.G * (x * scale) + s * scale).norm() / norm_h);
      if (res <= settings.tol_certificate) {
        out.status = SolveStatus::Unbounded;
        out.iterations = iter;
        out.x = x * scale;  // improving ray
        out.s = -prog.A * out.x;
        out.y = VectorXd::Zero(prog.num_rows());
        out.objective = -kInf;
        out.certificate_residual = res;
        return out;
      }
    }

    if (iter >= settings.max_iter || tau < 1e-12 || tiny_steps >= 3 || !std::isfinite(score)) {
      restore_best(iter);
      return out;
    }
    // Breakdown guard: the NT scaling needs strictly interior (s, z).
    if (cone_violation(lay, s) >= 0.0 || cone_violation(lay, z) >= 0.0 || kappa <= 0.0) {
      restore_best(iter);
      return out;
    }

    const double mu = (s.dot(z) + tau * kappa) / (deg + 1.0);

    const Scaling w = Scaling::compute(lay, s, z);
    kkt.factor(w);

    VectorXd x1(n), y1(p), z1(m);
    kkt.solve(-sp.c, sp.b, sp.h, x1, y1, z1);
    const double dt_denom = kappa / tau + w.apply(z1).squaredNorm();

    VectorXd x2(n), y2(p), z2(m);
    auto direction = [&](double sigma, const VectorXd& ds_rhs, double dkappa_rhs, VectorXd& dx,
                         VectorXd& dy, VectorXd& dz, VectorXd& ds, double& dtau,
                         double& dkappa) {
      const VectorXd wlam_ds = w.apply(jordan_div(lay, w.lambda, ds_rhs));
      kkt.solve(-(1.0 - sigma) * rx, -(1.0 - sigma) * ry,
                -(1.0 - sigma) * rz - wlam_ds, x2, y2, z2);
      dtau = ((1.0 - sigma) * rtau + sp.c.dot(x2) + sp.b.dot(y2) + sp.h.dot(z2) +
              dkappa_rhs / tau) /
             dt_denom;
      dx = x2 + dtau * x1;
      dy = y2 + dtau * y1;
      dz = z2 + dtau * z1;
      ds = wlam_ds - w.apply(w.apply(dz));  // W symmetric, so W'W dz = W(W dz)
      dkappa = (dkappa_rhs - kappa * dtau) / tau;
    };

    // Affine (predictor) direction.
    const VectorXd lam_sq = jordan_prod(lay, w.lambda, w.lambda);
    VectorXd dxa(n), dya(p), dza(m), dsa(m);
    double dtaua = 0.0, dkappaa = 0.0;
    direction(0.0, -lam_sq, -tau * kappa, dxa, dya, dza, dsa, dtaua, dkappaa);

    double alpha = std::min({1.0, max_step(lay, s, dsa), max_step(lay, z, dza),
                             scalar_step(tau, dtaua), scalar_step(kappa, dkappaa)});
    const double mu_aff = ((s + alpha * dsa).dot(z + alpha * dza) +
                           (tau + alpha * dtaua) * (kappa + alpha * dkappaa)) /
                          (deg + 1.0);
    const double sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 0.0, 1.0);

    // Combined (corrector) direction.
    const VectorXd cor =
        jordan_prod(lay, w.apply_inv(dsa), w.apply(dza));
    const VectorXd ds_rhs = sigma * mu * e - lam_sq - cor;
    const double dkappa_rhs = sigma * mu - tau * kappa - dtaua * dkappaa;
    VectorXd dx(n), dy(p), dz(m), ds(m);
    double dtau = 0.0, dkappa = 0.0;
    direction(sigma, ds_rhs, dkappa_rhs, dx, dy, dz, ds, dtau, dkappa);

    alpha = std::min({1.0 / kStepDamp, max_step(lay, s, ds), max_step(lay, z, dz),
                      scalar_step(tau, dtau), scalar_step(kappa, dkappa)});
    alpha = std::min(1.0, kStepDamp * alpha);
    if (alpha < 1e-8) ++tiny_steps;

    x += alpha * dx;
    y += alpha * dy;
    z += alpha * dz;
    s += alpha * ds;
    tau += alpha * dtau;
    kappa += alpha * dkappa;
  }
}

ProgramBuilder::ProgramBuilder(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0) throw std::invalid_argument("negative variable count");
}

int ProgramBuilder::add_var() { return num_vars_++; }

void ProgramBuilder::push_row(ConeType type, const LinExpr& expr) {
  rows_.push_back(expr);
  if (type != ConeType::Soc && !blocks_.empty() && blocks_.back().type == type) {
    blocks_.back().size += 1;
  } else if (type != ConeType::Soc) {
    blocks_.push_back({type, 1});
  }
}

void ProgramBuilder::add_equality(const LinExpr& expr) { push_row(ConeType::Zero, expr); }

void ProgramBuilder::add_nonneg(const LinExpr& expr) { push_row(ConeType::NonNeg, expr); }

void ProgramBuilder::add_soc(const LinExpr& bound, const std::vector<LinExpr>& vec) {
  if (vec.empty()) throw std::invalid_argument("second-order cone needs a vector part");
  blocks_.push_back({ConeType::Soc, 1 + static_cast<int>(vec.size())});
  rows_.push_back(bound);
  for (const LinExpr& c : vec) rows_.push_back(c);
}

namespace {

LinExpr expr_combine(const LinExpr& a, const LinExpr& b, double sb) {
  LinExpr out = a;
  out.offset += sb * b.offset;
  for (const LinExpr::Term& t : b.terms) out.terms.push_back({t.var, sb * t.coef});
  return out;
}

LinExpr expr_scale(const LinExpr& a, double s) {
  LinExpr out = a;
  out.offset *= s;
  for (LinExpr::Term& t : out.terms) t.coef *= s;
  return out;
}

}  // namespace

void ProgramBuilder::add_rotated_soc(const LinExpr& u, const LinExpr& v,
                                     const std::vector<LinExpr>& z) {
  if (z.empty()) throw std::invalid_argument("rotated cone needs a vector part");
  std::vector<LinExpr> vec;
  vec.reserve(z.size() + 1);
  const double sqrt2 = std::sqrt(2.0);
  for (const LinExpr& c : z) vec.push_back(expr_scale(c, sqrt2));
  vec.push_back(expr_combine(u, v, -1.0));
  add_soc(expr_combine(u, v, 1.0), vec);
}

ConeProgram ProgramBuilder::build(const Eigen::VectorXd& cost) const {
  if (cost.size() != num_vars_)
    throw std::invalid_argument("cost vector length does not match variable count");
  ConeProgram prog;
  prog.c = cost;
  const int m = static_cast<int>(rows_.size());
  prog.A = MatrixXd::Zero(m, num_vars_);
  prog.b = VectorXd::Zero(m);
  for (int r = 0; r < m; ++r) {
    prog.b(r) = rows_[r].offset;
    for (const LinExpr::Term& t : rows_[r].terms) {
      if (t.var < 0 || t.var >= num_vars_) throw std::invalid_argument("term variable out of range");
      prog.A(r, t.var) -= t.coef;
    }
  }
  prog.cones = blocks_;
  prog.validate();
  return prog;
}

}  // namespace ciswipt::conic
