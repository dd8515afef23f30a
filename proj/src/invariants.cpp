#include "homsurf/invariants.hpp"

#include <cmath>

namespace homsurf {

std::pair<Cov2Field, Cov2Field> ricci_split(const Cov2Field& rho) {
  Cov2Field s = rho, a = rho;
  s.M = 0.5 * (rho.M + rho.M.transpose());
  a.M = 0.5 * (rho.M - rho.M.transpose());
  return {s, a};
}

int ricci_rank(const Cov2Field& rho, double tol) {
  Eigen::JacobiSVD<Mat2> svd(rho.M);
  const auto& sv = svd.singularValues();
  if (sv(0) <= 0) return 0;
  int r = 0;
  for (int i = 0; i < 2; ++i)
    if (sv(i) > tol * sv(0)) ++r;
  return r;
}

AlphaEpsilon alpha_epsilon_typeA(const AffineSurface& s, double tol) {
  if (s.kind != SurfaceKind::TypeA) fail(Status::UnsupportedKind, "TypeA required");
  const Cov2Field rho = ricci_closed_form(s);
  if (ricci_rank(rho, tol) != 1) fail(Status::RankError, "Ricci rank must be 1");
  const Cov3Field n = nabla_ricci_closed_form(s);

  const Vec2 candidates[3] = {Vec2(1, 0), Vec2(0, 1), Vec2(1, 1)};
  Vec2 X = candidates[0];
  double best = -1;
  for (const Vec2& v : candidates) {
    const double q = std::abs(v.dot(rho.M * v));
    if (q > best) {
      best = q;
      X = v;
    }
  }
  const double rxx = X.dot(rho.M * X);
  double nxxx = 0;
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k)
      for (int i = 0; i < 2; ++i) nxxx += n.comp(j, k, i) * X(j) * X(k) * X(i);
  AlphaEpsilon ae;
  ae.alpha = nxxx * nxxx / (rxx * rxx * rxx);
  ae.epsilon = rxx >= 0 ? 1 : -1;
  ae.defined = true;
  return ae;
}

AlphaEpsilon alpha_typeB(const AffineSurface& s) {
  if (s.kind != SurfaceKind::TypeB) fail(Status::UnsupportedKind, "TypeB required");
  const Coeff6& c = s.coeffs;
  const double scale = std::max(1.0, c.max_abs());
  if (std::abs(c.g121) > 1e-12 * scale || std::abs(c.g221) > 1e-12 * scale ||
      std::abs(c.g222) > 1e-12 * scale)
    fail(Status::PreconditionError, "C12^1 = C22^1 = C22^2 = 0 required");
  const double r = (1 + c.g111 - c.g122) * c.g122;
  if (std::abs(r) <= 1e-15 * scale * scale)
    fail(Status::PreconditionError, "Ricci tensor vanishes");
  AlphaEpsilon ae;
  ae.alpha = 4 * (1 + c.g111) * (1 + c.g111) / r;
  ae.epsilon = r >= 0 ? 1 : -1;
  ae.defined = true;
  return ae;
}

RecurrenceForm recurrence_one_form(const AffineSurface& s, double tol) {
  const Cov2Field rho = ricci_closed_form(s);
  if (ricci_rank(rho, tol) != 1) fail(Status::RankError, "Ricci rank must be 1");
  const Cov3Field n = nabla_ricci_closed_form(s);

  const double m2 = rho.M.squaredNorm();
  RecurrenceForm rf;
  rf.omega.scale_power = (s.kind == SurfaceKind::TypeB) ? 1 : 0;
  double w[2];
  for (int i = 0; i < 2; ++i) {
    double num = 0;
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) num += n.comp(j, k, i) * rho.M(j, k);
    w[i] = num / (2 * m2);
  }
  rf.omega.w1 = w[0];
  rf.omega.w2 = w[1];
  double res = 0;
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k)
      for (int i = 0; i < 2; ++i)
        res = std::max(res, std::abs(n.comp(j, k, i) - 2 * w[i] * rho.M(j, k)));
  rf.residual = res;
  rf.defined = res <= 1e-10 * std::max(1.0, n.max_abs());
  return rf;
}

TypeBInvariants rho0123_typeB(const AffineSurface& s) {
  if (s.kind != SurfaceKind::TypeB) fail(Status::UnsupportedKind, "TypeB required");
  const Coeff6& c = s.coeffs;
  TypeBInvariants t;
  t.rho0.scale_power = 1;
  t.rho0.w1 = c(0, 0, 0) + c(0, 1, 1);
  t.rho0.w2 = c(1, 0, 0) + c(1, 1, 1);

  t.rho1.scale_power = 2;
  t.rho1.M << c.g122, c.g222, -c.g121, -c.g221;

  const double A[2] = {t.rho0.w1, t.rho0.w2};
  t.rho2.scale_power = 2;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) t.rho2.M(i, j) = c(i, j, 0) * A[0] + c(i, j, 1) * A[1];

  t.rho3.scale_power = 2;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      double v = 0;
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) v += c(i, k, l) * c(j, l, k);
      t.rho3.M(i, j) = v;
    }
  return t;
}

double gauss_curvature_metric(const std::function<Mat2(const Point2&)>& metric, const Point2& p,
                              double h) {
  auto gamma = [&](const Point2& q) {
    const Mat2 g = metric(q);
    Mat2 dg[2];
    for (int l = 0; l < 2; ++l) {
      Point2 qp = q, qm = q;
      (l == 0 ? qp.x1 : qp.x2) += h;
      (l == 0 ? qm.x1 : qm.x2) -= h;
      dg[l] = (metric(qp) - metric(qm)) / (2 * h);
    }
    const Mat2 ginv = g.inverse();
    // ch[c][a][b] = Gamma^c_{ab}
    std::array<Mat2, 2> ch;
    for (int cidx = 0; cidx < 2; ++cidx)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          double v = 0;
          for (int d = 0; d < 2; ++d)
            v += 0.5 * ginv(cidx, d) * (dg[a](d, b) + dg[b](a, d) - dg[d](a, b));
          ch[cidx](a, b) = v;
        }
    return ch;
  };

  const auto ch = gamma(p);
  std::array<Mat2, 2> dch[2];
  for (int l = 0; l < 2; ++l) {
    Point2 qp = p, qm = p;
    (l == 0 ? qp.x1 : qp.x2) += h;
    (l == 0 ? qm.x1 : qm.x2) -= h;
    const auto cp = gamma(qp), cm = gamma(qm);
    for (int cidx = 0; cidx < 2; ++cidx) dch[l][cidx] = (cp[cidx] - cm[cidx]) / (2 * h);
  }

  // R^l_{101} = d0 G^l_{11} - d1 G^l_{01} + G^l_{0m} G^m_{11} - G^l_{1m} G^m_{01}
  double R[2];
  for (int l = 0; l < 2; ++l) {
    double v = dch[0][l](1, 1) - dch[1][l](0, 1);
    for (int m = 0; m < 2; ++m) v += ch[l](0, m) * ch[m](1, 1) - ch[l](1, m) * ch[m](0, 1);
    R[l] = v;
  }
  const Mat2 g = metric(p);
  const double det = g.determinant();
  return (g(0, 0) * R[0] + g(0, 1) * R[1]) / det;
}

std::vector<double> gauss_curvature_of_rho_s(const AffineSurface& s, const std::vector<Point2>& pts,
                                             double h, double tol) {
  const Cov2Field rho_s = ricci_split(ricci_closed_form(s)).first;
  if (ricci_rank(rho_s, tol) != 2) fail(Status::RankError, "symmetric Ricci part is degenerate");
  auto metric = [&](const Point2& q) { return rho_s.eval(q); };
  std::vector<double> out;
  out.reserve(pts.size());
  for (const Point2& p : pts) out.push_back(gauss_curvature_metric(metric, p, h));
  return out;
}

}  // namespace homsurf
