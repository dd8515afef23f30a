#include "homsurf/extension.hpp"

#include <array>
#include <cmath>

#include <Eigen/Dense>

namespace homsurf {

namespace {

// Divergence bound for geodesic states.  Kept far below 1/kStepTol: per-step
// relative error control lets a trajectory shadow a pole shifted by O(tol),
// so a bound near the shifted pole's peak would be reachable without tripping.
constexpr double kBlowup = 1e8;
constexpr double kDomainEps = 1e-12;

using Gamma4 = std::array<std::array<std::array<double, 4>, 4>, 4>;

Point4 shifted(Point4 q, int dir, double h) {
  double* c[4] = {&q.x1, &q.x2, &q.y1, &q.y2};
  *c[dir] += h;
  return q;
}

// G4[k][i][j] of the extension metric at q; metric differentiated at step h.
Gamma4 christoffel4(const AffineSurface& s, const Mat2& phi, const Point4& q, double h) {
  Mat4 dg[4];
  for (int l = 0; l < 4; ++l)
    dg[l] = (extension_metric_eval(s, phi, shifted(q, l, h)) -
             extension_metric_eval(s, phi, shifted(q, l, -h))) /
            (2 * h);
  Mat4 g = extension_metric_eval(s, phi, q);
  double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
  if (std::abs(g.determinant()) < 1e-12 * scale * scale * scale * scale)
    fail(Status::DivisionError, "extension metric near-degenerate at a sample point");
  Mat4 gi = g.inverse();
  Gamma4 G{};
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double v = 0;
        for (int l = 0; l < 4; ++l) v += gi(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
        G[k][i][j] = 0.5 * v;
      }
  return G;
}

}  // namespace

Mat4 extension_metric_eval(const AffineSurface& s, const Mat2& phi, const Point4& q) {
  Point2 base{q.x1, q.x2};
  if (!s.in_domain(base)) fail(Status::DomainError, "base point outside the chart domain");
  Coeff6 G = s.christoffel(base);
  Mat4 g = Mat4::Zero();
  double y[2] = {q.y1, q.y2};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      double v = 0.5 * (phi(i, j) + phi(j, i));
      for (int k = 0; k < 2; ++k) v -= 2 * y[k] * G(i, j, k);
      g(i, j) = v;
    }
  g(0, 2) = g(2, 0) = 1;
  g(1, 3) = g(3, 1) = 1;
  return g;
}

Mat4 extension_ricci_fd(const AffineSurface& s, const Mat2& phi, const Point4& q, double h) {
  if (!(h > 0)) fail(Status::PreconditionError, "need h > 0");
  Gamma4 G0 = christoffel4(s, phi, q, h);
  std::array<Gamma4, 4> Gp, Gm;
  for (int d = 0; d < 4; ++d) {
    Gp[d] = christoffel4(s, phi, shifted(q, d, h), h);
    Gm[d] = christoffel4(s, phi, shifted(q, d, -h), h);
  }
  auto dG = [&](int d, int k, int i, int j) { return (Gp[d][k][i][j] - Gm[d][k][i][j]) / (2 * h); };
  Mat4 ric;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double v = 0;
      for (int i = 0; i < 4; ++i) {
        v += dG(i, i, a, b) - dG(a, i, i, b);
        for (int m = 0; m < 4; ++m)
          v += G0[i][i][m] * G0[m][a][b] - G0[i][a][m] * G0[m][i][b];
      }
      ric(a, b) = v;
    }
  return ric;
}

ExtensionCheck verify_extension_soliton(const AffineSurface& s, const Mat2& phi,
                                        const ScalarField& f_base, const std::vector<Point4>& pts,
                                        double h, double tol) {
  if (pts.empty()) fail(Status::PreconditionError, "need at least one sample point");
  // x-derivatives of F are exact dictionary derivatives; F is fiber-constant
  ScalarField F = f_base.scaled(kExtensionPotentialFactor);
  ScalarField dF[2] = {F.deriv(0), F.deriv(1)};
  ScalarField ddF[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) ddF[i][j] = dF[i].deriv(j);

  ExtensionCheck chk;
  for (const Point4& q : pts) {
    Point2 base{q.x1, q.x2};
    Gamma4 G = christoffel4(s, phi, q, h);
    double grad[4] = {dF[0].eval(base), dF[1].eval(base), 0, 0};
    Mat4 H;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double v = (i < 2 && j < 2) ? ddF[i][j].eval(base) : 0.0;
        for (int k = 0; k < 4; ++k) v -= G[k][i][j] * grad[k];
        H(i, j) = v;
      }
    Mat4 R = extension_ricci_fd(s, phi, q, h);
    chk.max_residual = std::max(chk.max_residual, (H + R).cwiseAbs().maxCoeff());
  }
  chk.ok = chk.max_residual < tol;
  return chk;
}

namespace {

using State = Eigen::Matrix<double, 4, 1>;

// 0 = usable, 1 = outside the domain wall, 2 = diverged
int state_problem(const AffineSurface& s, const State& Y) {
  for (int i = 0; i < 4; ++i)
    if (!std::isfinite(Y(i))) return 2;
  if (Y.cwiseAbs().maxCoeff() > kBlowup) return 2;
  if (s.kind == SurfaceKind::TypeB && Y(0) <= kDomainEps) return 1;
  return 0;
}

State geodesic_rhs(const AffineSurface& s, const State& Y) {
  Coeff6 G = s.christoffel(Point2{Y(0), Y(1)});
  State d;
  d(0) = Y(2);
  d(1) = Y(3);
  for (int k = 0; k < 2; ++k) {
    double a = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) a += G(i, j, k) * Y(2 + i) * Y(2 + j);
    d(2 + k) = -a;
  }
  return d;
}

// One RK4 step; returns 0 on success or the first substage problem code.
int rk4_step(const AffineSurface& s, const State& Y, double hstep, State& out) {
  State k1 = geodesic_rhs(s, Y);
  State Y2 = Y + 0.5 * hstep * k1;
  if (int w = state_problem(s, Y2)) return w;
  State k2 = geodesic_rhs(s, Y2);
  State Y3 = Y + 0.5 * hstep * k2;
  if (int w = state_problem(s, Y3)) return w;
  State k3 = geodesic_rhs(s, Y3);
  State Y4 = Y + hstep * k3;
  if (int w = state_problem(s, Y4)) return w;
  State k4 = geodesic_rhs(s, Y4);
  out = Y + (hstep / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4);
  return state_problem(s, out);
}

// Step-doubling control: accept a step only when one full step and two half
// steps agree to kStepTol (relative).  3 = locally unresolvable (treated as
// blow-up: the solution leaves every resolvable scale inside the window).
constexpr double kStepTol = 1e-9;

int controlled_step(const AffineSurface& s, const State& Y, double hstep, State& out) {
  State one, mid, two;
  int w = rk4_step(s, Y, hstep, one);
  if (w != 0) return w;
  w = rk4_step(s, Y, 0.5 * hstep, mid);
  if (w != 0) return w;
  w = rk4_step(s, mid, 0.5 * hstep, two);
  if (w != 0) return w;
  double scale = std::max(1.0, two.cwiseAbs().maxCoeff());
  if ((one - two).cwiseAbs().maxCoeff() > kStepTol * scale) return 3;
  out = two;
  return 0;
}

}  // namespace

GeodesicPath geodesic_integrate(const AffineSurface& s, const Point2& p0, const Vec2& v0,
                                double t_max, double dt) {
  if (!s.in_domain(p0)) fail(Status::DomainError, "initial point outside the chart domain");
  if (!(dt > 0) || !std::isfinite(t_max))
    fail(Status::PreconditionError, "need dt > 0 and finite t_max");

  GeodesicPath path;
  State Y;
  Y << p0.x1, p0.x2, v0(0), v0(1);
  path.samples.push_back({0, p0, v0});
  double dir = t_max >= 0 ? 1.0 : -1.0;
  double t = 0;
  const double min_step = dt * 1e-10;
  while (dir * (t_max - t) > 1e-15) {
    double hstep = dir * dt;
    if (dir * (t + hstep) > dir * t_max) hstep = t_max - t;
    State next;
    int why = controlled_step(s, Y, hstep, next);
    while (why != 0 && std::abs(hstep) > min_step) {
      hstep *= 0.5;
      why = controlled_step(s, Y, hstep, next);
    }
    if (why != 0) {
      path.blew_up = true;
      path.stop_reason = why == 1 ? "domain" : "blowup";
      break;
    }
    if (t + hstep == t) {  // step too small to advance time
      path.blew_up = true;
      path.stop_reason = "blowup";
      break;
    }
    Y = next;
    t += hstep;
    path.samples.push_back({t, Point2{Y(0), Y(1)}, Vec2(Y(2), Y(3))});
  }
  path.t_max_reached = t;
  return path;
}

}  // namespace homsurf
