#include "homsurf/models.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace homsurf {

namespace {

AffineSurface type_a(double g111, double g112, double g121, double g122, double g221, double g222) {
  return AffineSurface::typeA(Coeff6{g111, g112, g121, g122, g221, g222});
}

AffineSurface type_b(double c111, double c112, double c121, double c122, double c221, double c222) {
  return AffineSurface::typeB(Coeff6{c111, c112, c121, c122, c221, c222});
}

AffineSurface p_model(double a, double c, double eps) {
  if (a == 0.0 && c == 0.0) fail(Status::ParamError, "P model requires (a, c) != (0, 0)");
  if (c < 0.0) fail(Status::ParamError, "P model requires c >= 0");
  return type_b(0.5 * (a * a + 4 * a - 2 * eps * c * c + 2), c, 0,
                0.5 * (a * a + 2 * a - 2 * eps * c * c), eps, 2 * eps * c);
}

Mat2 typeB_chart(double b, double c) {
  Mat2 A;
  A << 1, 0, b, c;
  return A;
}

// Sign-normalizes an eigenvector so the largest-magnitude entry is positive.
Vec2 fix_sign(Vec2 v) {
  int i = std::abs(v(0)) >= std::abs(v(1)) ? 0 : 1;
  return v(i) < 0 ? Vec2(-v) : v;
}

}  // namespace

const char* model_family_name(ModelFamily f) {
  switch (f) {
    case ModelFamily::M1: return "M1";
    case ModelFamily::M2: return "M2";
    case ModelFamily::M3: return "M3";
    case ModelFamily::M4: return "M4";
    case ModelFamily::M5: return "M5";
    case ModelFamily::N1plus: return "N1+";
    case ModelFamily::N1minus: return "N1-";
    case ModelFamily::N2: return "N2";
    case ModelFamily::N3: return "N3";
    case ModelFamily::N4: return "N4";
    case ModelFamily::Pplus: return "P+";
    case ModelFamily::Pminus: return "P-";
    case ModelFamily::Q: return "Q";
  }
  return "?";
}

AffineSurface model(const ModelId& id) {
  const double c = id.c;
  if (!std::isfinite(c) || !std::isfinite(id.a))
    fail(Status::ParamError, "model parameters must be finite");
  switch (id.family) {
    case ModelFamily::M1:
      return type_a(-1, 0, 1, 0, 0, 2);
    case ModelFamily::M2:
      if (c * c + c == 0.0) fail(Status::ParamError, "M2 requires c^2 + c != 0");
      return type_a(-1, 0, c, 0, 0, 1 + 2 * c);
    case ModelFamily::M3:
      if (c * c + c == 0.0) fail(Status::ParamError, "M3 requires c^2 + c != 0");
      return type_a(0, 0, c, 0, 0, 1 + 2 * c);
    case ModelFamily::M4:
      return type_a(0, 0, 1, 0, c, 2);
    case ModelFamily::M5:
      if (c < 0.0) fail(Status::ParamError, "M5 requires c >= 0");
      return type_a(-1, 0, c, 0, -1, 2 * c);
    case ModelFamily::N1plus:
      return type_b(-1.5, 0, 0, -0.5, -0.5, 0);
    case ModelFamily::N1minus:
      return type_b(-1.5, 0, 0, -0.5, 0.5, 0);
    case ModelFamily::N2:
      if (c < 0.0) fail(Status::ParamError, "N2 requires c >= 0");
      return type_b(-1.5, 0, 1, -0.5, c, 2);
    case ModelFamily::N3:
      return type_b(-1, 0, 0, -1, -1, 0);
    case ModelFamily::N4:
      return type_b(-1, 0, 0, -1, 1, 0);
    case ModelFamily::Pplus:
      return p_model(id.a, c, +1);
    case ModelFamily::Pminus:
      return p_model(id.a, c, -1);
    case ModelFamily::Q:
      return type_b(0, c, 1, 0, 0, 1);
  }
  fail(Status::ParamError, "unknown model family");
}

Coeff6 pullback_coeffs(const Coeff6& C, const Mat2& A) {
  if (std::abs(A.determinant()) < 1e-14)
    fail(Status::ParamError, "coordinate change must be invertible");
  Mat2 Ainv = A.inverse();
  Coeff6 out;
  for (int a = 0; a < 2; ++a)
    for (int b = a; b < 2; ++b)
      for (int m = 0; m < 2; ++m) {
        double v = 0;
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) v += Ainv(m, k) * A(i, a) * A(j, b) * C(i, j, k);
        out.slot(a, b, m) = v;
      }
  return out;
}

std::pair<Mat2, AffineSurface> normalize_typeA_rank1(const AffineSurface& s, double tol) {
  if (s.kind != SurfaceKind::TypeA)
    fail(Status::UnsupportedKind, "normalization requires constant coefficients");
  Cov2Field rho = ricci_closed_form(s);
  if (ricci_rank(rho, tol) != 1) fail(Status::RankError, "Ricci tensor must have rank 1");

  Eigen::SelfAdjointEigenSolver<Mat2> es(Mat2(0.5 * (rho.M + rho.M.transpose())));
  int k0 = std::abs(es.eigenvalues()(0)) <= std::abs(es.eigenvalues()(1)) ? 0 : 1;
  Mat2 A;  // x = A u: kernel direction becomes du^1, image direction du^2
  A.col(0) = fix_sign(es.eigenvectors().col(k0));
  A.col(1) = fix_sign(es.eigenvectors().col(1 - k0));
  if ((A - Mat2::Identity()).cwiseAbs().maxCoeff() < 1e-14) A = Mat2::Identity();

  AffineSurface out = AffineSurface::typeA(pullback_coeffs(s.coeffs, A));
  Cov2Field r2 = ricci_closed_form(out);
  double rs = std::max(1.0, r2.M.cwiseAbs().maxCoeff());
  double cs = std::max(1.0, out.coeffs.max_abs());
  if (std::abs(r2.M(0, 0)) > 1e-9 * rs || std::abs(r2.M(0, 1)) > 1e-9 * rs ||
      std::abs(out.coeffs(0, 0, 1)) > 1e-9 * cs || std::abs(out.coeffs(0, 1, 1)) > 1e-9 * cs)
    fail(Status::InternalError, "failed to reach the canonical rank-1 form");
  return {Mat2(A.inverse()), out};
}

AffineSurface linear_equiv_typeB(const AffineSurface& s, double b, double c) {
  if (s.kind != SurfaceKind::TypeB)
    fail(Status::UnsupportedKind, "chart change requires 1/x^1 coefficients");
  if (!std::isfinite(b) || !std::isfinite(c) || c == 0.0)
    fail(Status::ParamError, "chart change requires finite b and c != 0");
  return AffineSurface::typeB(pullback_coeffs(s.coeffs, typeB_chart(b, c)));
}

AffineSurface shear_typeB(const AffineSurface& s, double eps) {
  return linear_equiv_typeB(s, -eps, 1.0);
}

AffineSurface typeA_to_typeB_chart(const AffineSurface& s) {
  if (s.kind != SurfaceKind::TypeA)
    fail(Status::UnsupportedKind, "chart change requires constant coefficients");
  const Coeff6& g = s.coeffs;
  double cs = std::max(1.0, g.max_abs());
  if (std::abs(g.g111) > 1e-12 * cs || std::abs(g.g112) > 1e-12 * cs ||
      std::abs(g.g122) > 1e-12 * cs || std::abs(g.g221) > 1e-12 * cs)
    fail(Status::PreconditionError,
         "requires Gamma_11^1 = Gamma_11^2 = Gamma_12^2 = Gamma_22^1 = 0");
  return AffineSurface::typeB(Coeff6{g.g222 - 1.0, 0, 0, g.g121, 0, 0});
}

TypeBMatch match_typeB_P(const AffineSurface& s, double tol) {
  if (s.kind != SurfaceKind::TypeB)
    fail(Status::UnsupportedKind, "P matching requires 1/x^1 coefficients");
  TypeBMatch m;
  const Coeff6& C = s.coeffs;
  double cs = std::max(1.0, C.max_abs());
  if (std::abs(C.g221) <= tol * cs) return m;

  double eps = C.g221 > 0 ? 1.0 : -1.0;
  double b = -C.g121 / C.g221;
  double cmag = 1.0 / std::sqrt(std::abs(C.g221));
  for (double cT : {cmag, -cmag}) {
    Coeff6 N = pullback_coeffs(C, typeB_chart(b, cT));
    double cP = N.g112;
    if (cP < -tol * cs) continue;  // wrong orientation; the mirrored chart fixes the sign
    cP = std::max(cP, 0.0);
    double a = N.g111 - N.g122 - 1.0;
    if (std::abs(a) <= tol && cP <= tol) continue;  // would be the excluded flat corner
    Coeff6 target{0.5 * (a * a + 4 * a - 2 * eps * cP * cP + 2), cP, 0,
                  0.5 * (a * a + 2 * a - 2 * eps * cP * cP), eps, 2 * eps * cP};
    double diff = 0;
    for (int i = 0; i < 6; ++i)
      diff = std::max(diff, std::abs(N.to_array()[i] - target.to_array()[i]));
    if (diff <= 100 * tol * std::max(1.0, N.max_abs())) {
      m.found = true;
      m.id.family = eps > 0 ? ModelFamily::Pplus : ModelFamily::Pminus;
      m.id.a = a;
      m.id.c = cP;
      m.b = b;
      m.c = cT;
      m.normalized = N;
      return m;
    }
  }
  return m;
}

TypeBMatch match_typeB_Q(const AffineSurface& s, double tol) {
  if (s.kind != SurfaceKind::TypeB)
    fail(Status::UnsupportedKind, "Q matching requires 1/x^1 coefficients");
  TypeBMatch m;
  const Coeff6& C = s.coeffs;
  double cs = std::max(1.0, C.max_abs());
  // C_22^1 rescales by c^2 under admissible charts, so C_22^1 = 0 is chart
  // invariant and separates the Q sector from P.
  if (std::abs(C.g221) > tol * cs) return m;
  if (std::abs(C.g222) <= tol * cs) return m;
  double cT = 1.0 / C.g222;
  if (std::abs(cT * C.g121 - 1.0) > 100 * tol) return m;  // needs C_12^1 = C_22^2
  double b = -C.g111 / (2.0 * C.g121);
  Coeff6 N = pullback_coeffs(C, typeB_chart(b, cT));
  double cQ = N.g112;
  Coeff6 target{0, cQ, 1, 0, 0, 1};
  double diff = 0;
  for (int i = 0; i < 6; ++i)
    diff = std::max(diff, std::abs(N.to_array()[i] - target.to_array()[i]));
  if (diff > 100 * tol * std::max(1.0, N.max_abs())) return m;
  m.found = true;
  m.id.family = ModelFamily::Q;
  m.id.c = cQ;
  m.b = b;
  m.c = cT;
  m.normalized = N;
  return m;
}

TypeAMatch match_typeA_M(const Coeff6& g, double tol) {
  TypeAMatch m;
  double athr = tol * std::max(1.0, g.max_abs());
  auto near = [&](double x, double y) { return std::abs(x - y) <= athr; };
  // The patterns below are mutually exclusive on their shared support, so the
  // first hit is the only candidate; model(id) then confirms all six entries.
  ModelId id;
  if (near(g.g111, -1) && near(g.g121, 1) && near(g.g221, 0) && near(g.g222, 2)) {
    id.family = ModelFamily::M1;
  } else if (near(g.g111, -1) && near(g.g221, 0) && near(g.g222, 1 + 2 * g.g121) &&
             std::abs(g.g121 * g.g121 + g.g121) > athr) {
    id.family = ModelFamily::M2;
    id.c = g.g121;
  } else if (near(g.g111, 0) && near(g.g221, 0) && near(g.g222, 1 + 2 * g.g121) &&
             std::abs(g.g121 * g.g121 + g.g121) > athr) {
    id.family = ModelFamily::M3;
    id.c = g.g121;
  } else if (near(g.g111, 0) && near(g.g121, 1) && near(g.g222, 2)) {
    id.family = ModelFamily::M4;
    id.c = g.g221;
  } else if (near(g.g111, -1) && near(g.g221, -1) && near(g.g222, 2 * g.g121) &&
             g.g121 >= -athr) {
    id.family = ModelFamily::M5;
    id.c = std::max(g.g121, 0.0);
  } else {
    return m;
  }
  Coeff6 want = model(id).coeffs;
  for (int i = 0; i < 6; ++i)
    if (std::abs(g.to_array()[i] - want.to_array()[i]) > 10 * athr) return m;
  m.found = true;
  m.id = id;
  return m;
}

}  // namespace homsurf
