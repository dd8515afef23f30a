#include "homsurf/killing.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include <Eigen/Dense>

namespace homsurf {

namespace {

constexpr double kNullspaceCut = 1e-10;   // relative singular value cutoff
constexpr double kFieldVerifyTol = 1e-8;  // residual gate for emitted Killing fields
constexpr double kNMatchTol = 1e-7;       // coefficient-table match tolerance

// Derivative closure of one vector field, prepared once and evaluated often.
struct FieldDerivs {
  ScalarField c[2];
  ScalarField dc[2][2];      // dc[i][m] = d_i X^m
  ScalarField ddc[2][2][2];  // ddc[i][j][m] = d_j d_i X^m

  explicit FieldDerivs(const VectorField& X) {
    c[0] = X.c1;
    c[1] = X.c2;
    for (int m = 0; m < 2; ++m)
      for (int i = 0; i < 2; ++i) {
        dc[i][m] = c[m].deriv(i);
        for (int j = 0; j < 2; ++j) ddc[i][j][m] = dc[i][m].deriv(j);
      }
  }
};

// Components of (L_X nabla)_ij^m at p, flattened over (i<=j, m).
void residual_components(const AffineSurface& s, const FieldDerivs& F, const Point2& p,
                         double out[6]) {
  Coeff6 G = s.christoffel(p);
  std::array<Coeff6, 2> dG = s.christoffel_deriv(p, 1e-5);
  double X[2], dX[2][2], ddX[2][2][2];
  for (int m = 0; m < 2; ++m) {
    X[m] = F.c[m].eval(p);
    for (int i = 0; i < 2; ++i) {
      dX[i][m] = F.dc[i][m].eval(p);
      for (int j = 0; j < 2; ++j) ddX[i][j][m] = F.ddc[i][j][m].eval(p);
    }
  }
  int idx = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = i; j < 2; ++j)
      for (int m = 0; m < 2; ++m, ++idx) {
        double r = ddX[i][j][m];
        for (int l = 0; l < 2; ++l) {
          r += X[l] * dG[l](i, j, m);
          r -= G(i, j, l) * dX[l][m];
          r += G(l, j, m) * dX[i][l];
          r += G(i, l, m) * dX[j][l];
        }
        out[idx] = r;
      }
}

VectorField mono_field(int comp, double coeff, double p1, int p2) {
  VectorField X;
  X.comp(comp) = ScalarField::monomial(coeff, p1, p2);
  return X;
}

VectorField homothety_field() {
  VectorField X;
  X.c1 = ScalarField::monomial(1, 1, 0);
  X.c2 = ScalarField::monomial(1, 0, 1);
  return X;
}

// Coefficient of x1^p1 x2^p2 among the plain polynomial terms of f.
double poly_coeff(const ScalarField& f, double p1, int p2) {
  double v = 0;
  for (const Term& t : f.terms)
    if (t.lp == 0 && t.trig == TrigKind::None && t.ea == 0 && t.eb == 0 && t.p2 == p2 &&
        std::abs(t.p1 - p1) < 1e-12)
      v += t.coeff;
  return v;
}

bool coeffs_match(const Coeff6& a, const Coeff6& b) {
  double scale = std::max(1.0, a.max_abs() + b.max_abs());
  auto av = a.to_array(), bv = b.to_array();
  for (int i = 0; i < 6; ++i)
    if (std::abs(av[i] - bv[i]) > kNMatchTol * scale) return false;
  return true;
}

Mat2 typeB_chart(double b, double c) {
  Mat2 A;
  A << 1, 0, b, c;
  return A;
}

// The two extra Killing fields of a normalized rank-1 TypeA surface
// (rho = rho_22 dx2 (x) dx2, Gamma_11^2 = Gamma_12^2 = 0), in that chart.
std::vector<VectorField> rank1_extra_fields_typeA(const Coeff6& g, double tol) {
  double athr = tol * std::max(1.0, g.max_abs());
  std::vector<VectorField> out;
  auto push_x1 = [&out](ScalarField f) {
    VectorField X;
    X.c1 = std::move(f);
    out.push_back(X);
  };
  if (std::abs(g.g111) > athr) {
    // xi = e^{-g111 x1} phi(x2) with phi'' + (2 g121 - g222) phi' + g111 g221 phi = 0
    double B = 2 * g.g121 - g.g222, Cq = g.g111 * g.g221;
    double disc = B * B - 4 * Cq;
    double dthr = tol * std::max(1.0, B * B + std::abs(Cq));
    auto base = [&](double eb, int p2, TrigKind trig, double omega) {
      Term t;
      t.coeff = 1;
      t.ea = -g.g111;
      t.eb = eb;
      t.p2 = p2;
      t.trig = trig;
      t.omega = omega;
      ScalarField f;
      f.terms.push_back(t.canonical());
      return f;
    };
    if (disc > dthr) {
      double sq = std::sqrt(disc);
      push_x1(base((-B + sq) / 2, 0, TrigKind::None, 0));
      push_x1(base((-B - sq) / 2, 0, TrigKind::None, 0));
    } else if (disc >= -dthr) {
      push_x1(base(-B / 2, 0, TrigKind::None, 0));
      push_x1(base(-B / 2, 1, TrigKind::None, 0));
    } else {
      double om = std::sqrt(-disc) / 2;
      push_x1(base(-B / 2, 0, TrigKind::Cos, om));
      push_x1(base(-B / 2, 0, TrigKind::Sin, om));
    }
  } else {
    // xi = A x1 + C(x2) with C'' + beta C' = g221 A, beta = 2 g121 - g222
    double beta = 2 * g.g121 - g.g222;
    if (std::abs(beta) > athr) {
      Term t;
      t.coeff = 1;
      t.eb = -beta;
      ScalarField hom;
      hom.terms.push_back(t.canonical());
      push_x1(hom);
      push_x1(ScalarField::monomial(1, 1, 0) + ScalarField::monomial(g.g221 / beta, 0, 1));
    } else {
      push_x1(ScalarField::monomial(1, 0, 1));
      push_x1(ScalarField::monomial(1, 1, 0) + ScalarField::monomial(g.g221 / 2, 0, 2));
    }
  }
  return out;
}

ScalarField log_x1() {
  Term t;
  t.coeff = 1;
  t.lp = 1;
  ScalarField f;
  f.terms.push_back(t.canonical());
  return f;
}

ScalarField pow_x1(double a) { return ScalarField::monomial(1, a, 0); }

}  // namespace

std::vector<Point2> standard_sample_points(int n, unsigned seed) {
  static const double xs1[4] = {0.55, 0.9, 1.35, 1.8};
  static const double xs2[3] = {-0.8, 0.3, 1.1};
  std::vector<Point2> pts;
  for (double a : xs1)
    for (double b : xs2) {
      if ((int)pts.size() >= n) return pts;
      pts.push_back({a, b});
    }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u1(0.5, 2.0), u2(-1.0, 1.0);
  while ((int)pts.size() < n) pts.push_back({u1(rng), u2(rng)});
  return pts;
}

double killing_residual(const AffineSurface& s, const VectorField& X,
                        const std::vector<Point2>& pts) {
  if (pts.empty()) fail(Status::PreconditionError, "need at least one sample point");
  FieldDerivs F(X);
  double worst = 0, comps[6];
  for (const Point2& p : pts) {
    if (!s.in_domain(p)) fail(Status::DomainError, "sample point outside the chart domain");
    residual_components(s, F, p, comps);
    for (double v : comps) worst = std::max(worst, std::abs(v));
  }
  return worst;
}

std::vector<VectorField> polynomial_killing_nullspace(const AffineSurface& s, double tol) {
  static const std::array<std::pair<double, int>, 6> monos = {
      {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}};
  std::vector<VectorField> basis;
  for (int comp = 0; comp < 2; ++comp)
    for (auto [p1, p2] : monos) basis.push_back(mono_field(comp, 1.0, p1, p2));

  std::vector<Point2> pts = standard_sample_points(12);
  Eigen::MatrixXd M(6 * pts.size(), basis.size());
  double comps[6];
  for (size_t jb = 0; jb < basis.size(); ++jb) {
    FieldDerivs F(basis[jb]);
    for (size_t ip = 0; ip < pts.size(); ++ip) {
      residual_components(s, F, pts[ip], comps);
      for (int k = 0; k < 6; ++k) M(6 * ip + k, jb) = comps[k];
    }
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinU | Eigen::ComputeFullV);
  double sv0 = svd.singularValues()(0);
  double cut = std::max(1e-12, kNullspaceCut * sv0);

  std::vector<VectorField> out;
  for (int j = 0; j < svd.matrixV().cols(); ++j) {
    if (svd.singularValues()(j) > cut) continue;
    VectorField X;
    for (size_t jb = 0; jb < basis.size(); ++jb) {
      double w = svd.matrixV()(jb, j);
      int comp = jb < 6 ? 0 : 1;
      auto [p1, p2] = monos[jb % 6];
      X.comp(comp) = X.comp(comp) + ScalarField::monomial(w, p1, p2);
    }
    X.c1 = X.c1.pruned(1e-12).collected();
    X.c2 = X.c2.pruned(1e-12).collected();
    if (killing_residual(s, X, pts) > kFieldVerifyTol * std::max(1.0, s.coeffs.max_abs()))
      fail(Status::InternalError, "numerical null vector is not a Killing field");
    out.push_back(X);
  }
  (void)tol;
  return out;
}

Dim4Branch dim4_typeB_branch(const Coeff6& C, double tol) {
  double cs = std::max(1.0, C.max_abs());
  double athr = tol * cs;
  if (std::abs(C.g121) > athr || std::abs(C.g221) > athr || std::abs(C.g222) > athr)
    fail(Status::PreconditionError, "requires C_12^1 = C_22^1 = C_22^2 = 0");
  Dim4Branch br;
  double d = C.g111 - 2 * C.g122;
  if (std::abs(C.g112) > athr && std::abs(d) > athr) {
    br.A = typeB_chart(C.g112 / d, 1.0);  // shear removing C_11^2
  } else if (std::abs(C.g112) > athr) {
    br.branch = 'a';
    br.A = typeB_chart(0.0, C.g112);  // rescale x2 so C_11^2 = 1
    return br;
  }
  br.a = 1 + d;  // d is invariant under the shear above
  br.branch = std::abs(br.a) > athr ? 'b' : 'c';
  if (br.branch == 'c') br.a = 0;
  return br;
}

std::vector<VectorField> killing_basis(const AffineSurface& s, double tol) {
  if (s.kind == SurfaceKind::Generic)
    fail(Status::UnsupportedKind, "Killing basis requires TypeA or TypeB coefficients");
  const Coeff6& C = s.coeffs;
  double cs = C.max_abs();
  Cov2Field rho = ricci_closed_form(s);
  bool flat = rho.M.cwiseAbs().maxCoeff() <= tol * std::max(1.0, cs * cs);

  std::vector<VectorField> out;
  if (flat) {
    if (cs > 0)
      fail(Status::PreconditionError,
           "flat surface in a non-affine chart; supply the zero-coefficient chart");
    out.push_back(mono_field(0, 1, 0, 0));
    out.push_back(mono_field(1, 1, 0, 0));
    out.push_back(mono_field(0, 1, 1, 0));
    out.push_back(mono_field(0, 1, 0, 1));
    out.push_back(mono_field(1, 1, 1, 0));
    out.push_back(mono_field(1, 1, 0, 1));
  } else if (s.kind == SurfaceKind::TypeA) {
    out.push_back(mono_field(0, 1, 0, 0));
    out.push_back(mono_field(1, 1, 0, 0));
    if (ricci_rank(rho, tol) == 1) {
      auto [L, sn] = normalize_typeA_rank1(s, tol);
      Mat2 A = L.inverse();
      for (const VectorField& Xu : rank1_extra_fields_typeA(sn.coeffs, tol))
        out.push_back(pushforward(A, Xu));
    }
  } else {
    double athr = tol * std::max(1.0, cs);
    bool triple0 = std::abs(C.g121) <= athr && std::abs(C.g221) <= athr && std::abs(C.g222) <= athr;
    if (triple0) {
      Dim4Branch br = dim4_typeB_branch(C, tol);
      std::vector<VectorField> extra;
      if (br.branch == 'a') {
        VectorField X1;
        X1.c1 = ScalarField::monomial(1, 1, 0);
        X1.c2 = ScalarField::monomial(-1, 1, 0) * log_x1();
        extra.push_back(X1);
        VectorField X2;
        X2.c2 = ScalarField::monomial(1, 1, 0);
        extra.push_back(X2);
      } else {
        VectorField X1;
        X1.c1 = ScalarField::monomial(1, 1, 0);
        extra.push_back(X1);
        VectorField X2;
        X2.c2 = br.branch == 'b' ? pow_x1(br.a) : log_x1();
        extra.push_back(X2);
      }
      for (const VectorField& Xu : extra) out.push_back(pushforward(br.A, Xu));
      out.push_back(homothety_field());
      out.push_back(mono_field(1, 1, 0, 0));
    } else {
      std::vector<VectorField> poly = polynomial_killing_nullspace(s, tol);
      if (poly.size() == 2) {
        out.push_back(homothety_field());
        out.push_back(mono_field(1, 1, 0, 0));
      } else if (poly.size() == 3) {
        out.push_back(homothety_field());
        out.push_back(mono_field(1, 1, 0, 0));
        // keep the member with the largest quadratic part as the third field
        size_t best = 0;
        double bn = -1;
        for (size_t k = 0; k < poly.size(); ++k) {
          double q = 0;
          for (int comp = 0; comp < 2; ++comp)
            for (auto [p1, p2] : {std::pair<double, int>{2, 0}, {1, 1}, {0, 2}})
              q = std::max(q, std::abs(poly_coeff(poly[k].comp(comp), p1, p2)));
          if (q > bn) {
            bn = q;
            best = k;
          }
        }
        out.push_back(poly[best]);
      } else {
        fail(Status::InternalError, "polynomial Killing space has unexpected dimension");
      }
    }
  }

  std::vector<Point2> pts = standard_sample_points(12);
  for (const VectorField& X : out)
    if (killing_residual(s, X, pts) > kFieldVerifyTol * std::max(1.0, cs))
      fail(Status::InternalError, "constructed field fails the Killing equations");
  return out;
}

TypeBMatch match_typeB_N(const AffineSurface& s, const std::vector<VectorField>& poly_killing,
                         double tol) {
  if (s.kind != SurfaceKind::TypeB)
    fail(Status::UnsupportedKind, "N matching requires 1/x^1 coefficients");
  TypeBMatch m;
  double best = -1;
  double Q[6] = {0, 0, 0, 0, 0, 0};  // p, q, w, r, sxy, t
  for (const VectorField& X : poly_killing) {
    double cand[6] = {poly_coeff(X.c1, 2, 0), poly_coeff(X.c1, 1, 1), poly_coeff(X.c1, 0, 2),
                      poly_coeff(X.c2, 2, 0), poly_coeff(X.c2, 1, 1), poly_coeff(X.c2, 0, 2)};
    double norm = 0;
    for (double v : cand) norm = std::max(norm, std::abs(v));
    if (norm > best) {
      best = norm;
      std::copy(cand, cand + 6, Q);
    }
  }
  if (best <= 1e-10) return m;
  double p = Q[0], q = Q[1], w = Q[2], r = Q[3], sxy = Q[4], t = Q[5];
  double eta = kNMatchTol * best;
  if (std::abs(w) > eta || std::abs(sxy) > eta || std::abs(q - 2 * t) > eta ||
      std::abs(t) <= eta)
    return m;

  // normalized quadratic field: p/t = -2b, r/t = c^2 sigma - b^2
  double b = -(p / t) / 2;
  double Dh = r / t + b * b;
  double cs = std::max(1.0, s.coeffs.max_abs());

  auto try_match = [&](double cT, const Coeff6& table, ModelFamily fam, double cpar) {
    Coeff6 cand = pullback_coeffs(s.coeffs, typeB_chart(b, cT));
    if (!coeffs_match(cand, table)) return false;
    m.found = true;
    m.id.family = fam;
    m.id.c = cpar;
    m.b = b;
    m.c = cT;
    m.normalized = cand;
    return true;
  };

  if (std::abs(Dh) <= kNMatchTol * std::max(1.0, b * b)) {  // sigma = 0: N1 or N2
    Coeff6 C1 = pullback_coeffs(s.coeffs, typeB_chart(b, 1.0));
    if (std::abs(C1.g121) <= kNMatchTol * cs) {
      if (std::abs(C1.g221) <= kNMatchTol * cs) return m;
      double cc = 1.0 / std::sqrt(2 * std::abs(C1.g221));
      if (try_match(cc, Coeff6{-1.5, 0, 0, -0.5, -0.5, 0}, ModelFamily::N1plus, 0)) return m;
      try_match(cc, Coeff6{-1.5, 0, 0, -0.5, 0.5, 0}, ModelFamily::N1minus, 0);
      return m;
    }
    double cc = 1.0 / C1.g121;
    Coeff6 cand = pullback_coeffs(s.coeffs, typeB_chart(b, cc));
    try_match(cc, Coeff6{-1.5, 0, 1, -0.5, cand.g221, 2}, ModelFamily::N2, cand.g221);
    return m;
  }

  double c0 = std::sqrt(std::abs(Dh));
  ModelFamily fam = Dh > 0 ? ModelFamily::N3 : ModelFamily::N4;
  Coeff6 table =
      Dh > 0 ? Coeff6{-1, 0, 0, -1, -1, 0} : Coeff6{-1, 0, 0, -1, 1, 0};
  if (!try_match(c0, table, fam, 0)) try_match(-c0, table, fam, 0);
  (void)tol;
  return m;
}

StructureConstants structure_constants(const std::vector<VectorField>& basis,
                                       const std::vector<Point2>& pts, double tol) {
  int n = (int)basis.size();
  if (n < 2) fail(Status::PreconditionError, "need at least two fields");
  if ((int)pts.size() * 2 < n) fail(Status::PreconditionError, "need more sample points");

  Eigen::MatrixXd M(2 * pts.size(), n);
  for (int j = 0; j < n; ++j)
    for (size_t ip = 0; ip < pts.size(); ++ip) {
      Vec2 v = basis[j].eval(pts[ip]);
      M(2 * ip, j) = v(0);
      M(2 * ip + 1, j) = v(1);
    }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);

  StructureConstants sc;
  sc.dim = n;
  sc.c.assign((size_t)n * n * n, 0.0);
  Eigen::VectorXd rhs(2 * pts.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      VectorField B = lie_bracket(basis[i], basis[j]);
      for (size_t ip = 0; ip < pts.size(); ++ip) {
        Vec2 v = B.eval(pts[ip]);
        rhs(2 * ip) = v(0);
        rhs(2 * ip + 1) = v(1);
      }
      Eigen::VectorXd coef = svd.solve(rhs);
      double res = (M * coef - rhs).cwiseAbs().maxCoeff();
      double rel = res / std::max(1.0, rhs.cwiseAbs().maxCoeff());
      sc.fit_residual = std::max(sc.fit_residual, rel);
      for (int k = 0; k < n; ++k) {
        sc.at(k, i, j) = coef(k);
        sc.at(k, j, i) = -coef(k);
      }
    }
  if (sc.fit_residual > std::max(1e-8, tol))
    fail(Status::NotClosed, "brackets leave the span of the supplied fields");

  double cmax = 0;
  for (double v : sc.c) cmax = std::max(cmax, std::abs(v));
  double jthr = 1e-6 * (1 + cmax) * (1 + cmax);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int cidx = b + 1; cidx < n; ++cidx)
        for (int d = 0; d < n; ++d) {
          double v = 0;
          for (int e = 0; e < n; ++e)
            v += sc.at(e, a, b) * sc.at(d, e, cidx) + sc.at(e, b, cidx) * sc.at(d, e, a) +
                 sc.at(e, cidx, a) * sc.at(d, e, b);
          if (std::abs(v) > jthr)
            fail(Status::JacobiError, "recovered constants violate the Jacobi identity");
        }
  return sc;
}

std::string classify_lie_algebra(const StructureConstants& sc, double tol) {
  int n = sc.dim;
  Eigen::MatrixXd K(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double v = 0;
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) v += sc.at(c, a, d) * sc.at(d, b, c);
      K(a, b) = v;
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (K + K.transpose()));
  double emax = es.eigenvalues().cwiseAbs().maxCoeff();
  double thr = std::max(1e-8, tol) * std::max(1.0, emax);
  int pos = 0, neg = 0;
  for (int i = 0; i < n; ++i) {
    if (es.eigenvalues()(i) > thr) ++pos;
    if (es.eigenvalues()(i) < -thr) ++neg;
  }
  int rank = pos + neg;
  if (n == 2) return rank == 0 ? "Abelian2" : "A2";
  if (n == 3) return rank == 3 ? "su11" : "Lie3_unknown";
  if (n == 4) {
    if (rank == 1) return "A49_0";
    if (rank == 2 && neg == 0) return "A2xA2";
    if (rank == 2 && pos == 1) return "A412";
    return "Lie4_unknown";
  }
  if (n == 6) return "Affine6";
  return "Lie_unknown";
}

}  // namespace homsurf
