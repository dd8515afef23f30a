#include "homsurf/surface.hpp"

#include <cmath>

namespace homsurf {

AffineSurface AffineSurface::typeA(const Coeff6& g) {
  if (!g.finite()) fail(Status::ParamError, "non-finite coefficients");
  AffineSurface s;
  s.kind = SurfaceKind::TypeA;
  s.coeffs = g;
  return s;
}

AffineSurface AffineSurface::typeB(const Coeff6& c) {
  if (!c.finite()) fail(Status::ParamError, "non-finite coefficients");
  AffineSurface s;
  s.kind = SurfaceKind::TypeB;
  s.coeffs = c;
  s.x1_positive_domain = true;
  return s;
}

AffineSurface AffineSurface::generic(std::function<Coeff6(const Point2&)> f, bool x1_positive) {
  AffineSurface s;
  s.kind = SurfaceKind::Generic;
  s.generic_eval = std::move(f);
  s.x1_positive_domain = x1_positive;
  return s;
}

bool AffineSurface::in_domain(const Point2& p) const {
  return !x1_positive_domain || p.x1 > 0;
}

Coeff6 AffineSurface::christoffel(const Point2& p) const {
  switch (kind) {
    case SurfaceKind::TypeA:
      return coeffs;
    case SurfaceKind::TypeB: {
      if (p.x1 <= 0) fail(Status::DomainError, "x1 must be positive");
      Coeff6 g;
      auto a = coeffs.to_array();
      for (double& v : a) v /= p.x1;
      g = Coeff6::from_array(a);
      return g;
    }
    case SurfaceKind::Generic:
      if (!in_domain(p)) fail(Status::DomainError, "point outside domain");
      return generic_eval(p);
  }
  fail(Status::InternalError, "bad kind");
}

std::array<Coeff6, 2> AffineSurface::christoffel_deriv(const Point2& p, double h) const {
  std::array<Coeff6, 2> d{};
  switch (kind) {
    case SurfaceKind::TypeA:
      return d;  // zero
    case SurfaceKind::TypeB: {
      if (p.x1 <= 0) fail(Status::DomainError, "x1 must be positive");
      auto a = coeffs.to_array();
      for (double& v : a) v = -v / (p.x1 * p.x1);
      d[0] = Coeff6::from_array(a);
      return d;  // d[1] zero
    }
    case SurfaceKind::Generic: {
      for (int l = 0; l < 2; ++l) {
        Point2 pp = p, pm = p;
        (l == 0 ? pp.x1 : pp.x2) += h;
        (l == 0 ? pm.x1 : pm.x2) -= h;
        auto ap = generic_eval(pp).to_array();
        auto am = generic_eval(pm).to_array();
        std::array<double, 6> da{};
        for (int i = 0; i < 6; ++i) da[i] = (ap[i] - am[i]) / (2 * h);
        d[l] = Coeff6::from_array(da);
      }
      return d;
    }
  }
  fail(Status::InternalError, "bad kind");
}

Cov2Field ricci_closed_form(const AffineSurface& s) {
  const Coeff6& c = s.coeffs;
  Cov2Field r;
  if (s.kind == SurfaceKind::TypeA) {
    r.scale_power = 0;
    r.M(0, 0) = (c.g111 - c.g122) * c.g122 + c.g112 * (c.g222 - c.g121);
    r.M(0, 1) = c.g121 * c.g122 - c.g112 * c.g221;
    r.M(1, 0) = r.M(0, 1);
    r.M(1, 1) = (c.g111 - c.g122) * c.g221 + c.g121 * (c.g222 - c.g121);
    return r;
  }
  if (s.kind == SurfaceKind::TypeB) {
    r.scale_power = 2;
    r.M(0, 0) = c.g122 * (c.g111 - c.g122 + 1) + c.g112 * (c.g222 - c.g121);
    r.M(0, 1) = -c.g112 * c.g221 + c.g121 * c.g122 + c.g222;
    r.M(1, 0) = -c.g112 * c.g221 + c.g121 * c.g122 - c.g121;
    r.M(1, 1) = c.g111 * c.g221 - c.g121 * c.g121 + c.g121 * c.g222 - c.g122 * c.g221 - c.g221;
    return r;
  }
  fail(Status::UnsupportedKind, "closed form needs TypeA or TypeB");
}

Cov3Field nabla_ricci_closed_form(const AffineSurface& s) {
  const Coeff6& c = s.coeffs;
  Cov3Field n;
  if (s.kind == SurfaceKind::TypeA) {
    n.scale_power = 0;
    const double f111 =
        2 * (-c.g111 * c.g111 * c.g122 + c.g111 * (c.g112 * (c.g121 - c.g222) + c.g122 * c.g122) +
             c.g112 * (c.g112 * c.g221 - c.g121 * c.g122));
    const double f112 =
        2 * (c.g112 * (c.g121 * c.g121 - c.g121 * c.g222 + c.g122 * c.g221) -
             c.g111 * c.g121 * c.g122);
    const double f122 =
        2 * (c.g122 * (-c.g111 * c.g221 - c.g121 * c.g222 + c.g122 * c.g221) +
             c.g112 * c.g121 * c.g221);
    const double f222 =
        2 * (c.g221 * (c.g222 * (c.g122 - c.g111) + c.g112 * c.g221) +
             c.g121 * c.g121 * c.g222 - c.g121 * (c.g122 * c.g221 + c.g222 * c.g222));
    // Totally symmetric: the value depends only on the index multiset.
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i) {
          const int ones = j + k + i;
          n.comp(j, k, i) = (ones == 0) ? f111 : (ones == 1) ? f112 : (ones == 2) ? f122 : f222;
        }
    return n;
  }
  if (s.kind == SurfaceKind::TypeB) {
    n.scale_power = 3;
    const Mat2 M = ricci_closed_form(s).M;
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i) {
          double v = (i == 0) ? -2 * M(j, k) : 0.0;
          for (int m = 0; m < 2; ++m) v -= c(i, j, m) * M(m, k) + c(i, k, m) * M(j, m);
          n.comp(j, k, i) = v;
        }
    return n;
  }
  fail(Status::UnsupportedKind, "closed form needs TypeA or TypeB");
}

Mat2 hessian(const AffineSurface& s, const ScalarField& f, const Point2& p) {
  if (!s.in_domain(p)) fail(Status::DomainError, "point outside domain");
  const Coeff6 g = s.christoffel(p);
  const ScalarField f1 = f.d1(), f2 = f.d2();
  const double df[2] = {f1.eval(p), f2.eval(p)};
  const double d11 = f1.d1().eval(p);
  const double d12 = f1.d2().eval(p);
  const double d22 = f2.d2().eval(p);
  Mat2 H;
  H(0, 0) = d11 - g(0, 0, 0) * df[0] - g(0, 0, 1) * df[1];
  H(0, 1) = d12 - g(0, 1, 0) * df[0] - g(0, 1, 1) * df[1];
  H(1, 0) = H(0, 1);
  H(1, 1) = d22 - g(1, 1, 0) * df[0] - g(1, 1, 1) * df[1];
  return H;
}

namespace {

// R^l_{kij} from coefficients and their first derivatives.
double curv(const Coeff6& g, const std::array<Coeff6, 2>& dg, int l, int k, int i, int j) {
  double v = dg[i](j, k, l) - dg[j](i, k, l);
  for (int m = 0; m < 2; ++m) v += g(i, m, l) * g(j, k, m) - g(j, m, l) * g(i, k, m);
  return v;
}

}  // namespace

Mat2 fd_ricci_oracle(const AffineSurface& s, const Point2& p, double h) {
  if (!s.in_domain(p)) fail(Status::DomainError, "point outside domain");
  const Coeff6 g = s.christoffel(p);
  const auto dg = s.christoffel_deriv(p, h);
  Mat2 r;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      double v = 0;
      for (int i = 0; i < 2; ++i) v += curv(g, dg, i, b, i, a);
      r(a, b) = v;
    }
  return r;
}

std::array<double, 8> fd_nabla_ricci_oracle(const AffineSurface& s, const Point2& p, double h) {
  const Coeff6 g = s.christoffel(p);
  const Mat2 rho = fd_ricci_oracle(s, p, h);
  Mat2 drho[2];
  for (int l = 0; l < 2; ++l) {
    Point2 pp = p, pm = p;
    (l == 0 ? pp.x1 : pp.x2) += h;
    (l == 0 ? pm.x1 : pm.x2) -= h;
    drho[l] = (fd_ricci_oracle(s, pp, h) - fd_ricci_oracle(s, pm, h)) / (2 * h);
  }
  std::array<double, 8> out{};
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k)
      for (int i = 0; i < 2; ++i) {
        double v = drho[i](j, k);
        for (int m = 0; m < 2; ++m) v -= g(i, j, m) * rho(m, k) + g(i, k, m) * rho(j, m);
        out[(j * 2 + k) * 2 + i] = v;
      }
  return out;
}

std::array<double, 16> fd_nabla2_ricci_oracle(const AffineSurface& s, const Point2& p, double h) {
  const Coeff6 g = s.christoffel(p);
  const auto dg = s.christoffel_deriv(p, h);
  const Mat2 rho = fd_ricci_oracle(s, p, h);

  auto shift = [&](int dir, double step) {
    Point2 q = p;
    (dir == 0 ? q.x1 : q.x2) += step;
    return q;
  };
  Mat2 drho[2];
  for (int l = 0; l < 2; ++l)
    drho[l] = (fd_ricci_oracle(s, shift(l, h), h) - fd_ricci_oracle(s, shift(l, -h), h)) / (2 * h);
  // Second partials of rho: diagonal and mixed central stencils.
  Mat2 d2rho[2][2];
  for (int l = 0; l < 2; ++l)
    d2rho[l][l] = (fd_ricci_oracle(s, shift(l, h), h) - 2 * rho + fd_ricci_oracle(s, shift(l, -h), h)) /
                  (h * h);
  {
    Point2 q1 = p, q2 = p, q3 = p, q4 = p;
    q1.x1 += h; q1.x2 += h;
    q2.x1 -= h; q2.x2 -= h;
    q3.x1 += h; q3.x2 -= h;
    q4.x1 -= h; q4.x2 += h;
    d2rho[0][1] = (fd_ricci_oracle(s, q1, h) + fd_ricci_oracle(s, q2, h) -
                   fd_ricci_oracle(s, q3, h) - fd_ricci_oracle(s, q4, h)) /
                  (4 * h * h);
    d2rho[1][0] = d2rho[0][1];
  }

  // First covariant derivative as a function of the index triple.
  auto nab = [&](int j, int k, int i) {
    double v = drho[i](j, k);
    for (int m = 0; m < 2; ++m) v -= g(i, j, m) * rho(m, k) + g(i, k, m) * rho(j, m);
    return v;
  };

  std::array<double, 16> out{};
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k)
      for (int i = 0; i < 2; ++i)
        for (int l = 0; l < 2; ++l) {
          double v = d2rho[l][i](j, k);
          for (int m = 0; m < 2; ++m) {
            v -= dg[l](i, j, m) * rho(m, k) + g(i, j, m) * drho[l](m, k);
            v -= dg[l](i, k, m) * rho(j, m) + g(i, k, m) * drho[l](j, m);
            v -= g(l, j, m) * nab(m, k, i) + g(l, k, m) * nab(j, m, i) + g(l, i, m) * nab(j, k, m);
          }
          out[((j * 2 + k) * 2 + i) * 2 + l] = v;
        }
  return out;
}

}  // namespace homsurf
