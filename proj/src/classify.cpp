#include "homsurf/classify.hpp"

#include <cmath>

#include "homsurf/killing.hpp"
#include "homsurf/models.hpp"
#include "homsurf/soliton.hpp"

namespace homsurf {

namespace {

// (alpha, eps) decides the algebra label and whether the surface also lives
// in the 1/x^1 coefficient class; boundaries carry a relative tolerance.
void apply_alpha_table(ClassificationReport& rep, double tol) {
  double a = rep.alpha.alpha;
  if (std::abs(a - 16) <= 16 * tol) {
    rep.algebra = "A49_0";
    rep.is_typeB = true;
  } else if (a > 16) {
    rep.algebra = "A2xA2";
    rep.is_typeB = true;
  } else if (std::abs(a) <= tol) {
    rep.is_typeB = rep.alpha.epsilon < 0;
    rep.algebra = rep.is_typeB ? "A2xA2" : "A412";
  } else if (a < 0) {
    rep.algebra = "A2xA2";
    rep.is_typeB = true;
  } else {
    rep.algebra = "A412";
    rep.is_typeB = false;
  }
}

}  // namespace

ClassificationReport classify(const AffineSurface& s, double tol, bool flat_report) {
  if (s.kind == SurfaceKind::Generic)
    fail(Status::UnsupportedKind, "classification requires TypeA or TypeB coefficients");

  ClassificationReport rep;
  rep.kind = s.kind;
  rep.ricci = ricci_closed_form(s);
  const Coeff6& C = s.coeffs;
  double cs = C.max_abs();

  if (rep.ricci.max_abs() <= tol * std::max(1.0, cs * cs)) {
    if (!flat_report) fail(Status::FlatSurface, "flat surface; enable the flat report to proceed");
    rep.flat = true;
    rep.killing_dim = 6;
    rep.algebra = "Affine6";
    rep.soliton_class = "flat";
    rep.is_typeA = rep.is_typeB = true;
    rep.note = "flat: no further classification";
    return rep;
  }

  rep.rank = ricci_rank(rep.ricci, tol);

  if (s.kind == SurfaceKind::TypeA) {
    rep.is_typeA = true;
    if (rep.rank == 2) {
      rep.killing_dim = 2;
      rep.algebra = "Abelian2";
      rep.note = "rank-2: moduli out of scope";
      return rep;
    }
    rep.alpha = alpha_epsilon_typeA(s, tol);
    auto [L, sn] = normalize_typeA_rank1(s, tol);
    rep.to_normalized = L;
    rep.killing_dim = 4;
    rep.soliton_class = "TypeA_rank1";
    apply_alpha_table(rep, tol);
    TypeAMatch ma = match_typeA_M(sn.coeffs, tol);
    if (ma.found) {
      rep.model_name = model_family_name(ma.id.family);
      rep.model_param_c = ma.id.c;
    }
    return rep;
  }

  rep.is_typeB = true;
  rep.has_typeb_invariants = true;
  rep.typeb = rho0123_typeB(s);

  // The coordinate-invariant test for the four-dimensional symmetry class
  // (Ricci symmetric, rank one, recurrent) must agree with the coefficient
  // condition C_12^1 = C_22^1 = C_22^2 = 0; anything else is a solver bug.
  auto [rho_s, rho_a] = ricci_split(rep.ricci);
  bool sym = rho_a.max_abs() <= tol * std::max(1.0, rep.ricci.max_abs());
  bool rank1 = rep.rank == 1;
  bool recurrent = sym && rank1 && recurrence_one_form(s, tol).defined;
  double athr = tol * std::max(1.0, cs);
  bool triple0 =
      std::abs(C.g121) <= athr && std::abs(C.g221) <= athr && std::abs(C.g222) <= athr;
  if ((sym && rank1 && recurrent) != triple0)
    fail(Status::InternalError, "invariant and coefficient symmetry criteria disagree");

  if (triple0) {
    Coeff6 P = C;
    P.g121 = P.g221 = P.g222 = 0;  // snap to the exact normal form
    AffineSurface sp = AffineSurface::typeB(P);
    rep.alpha = alpha_typeB(sp);
    rep.killing_dim = 4;
    rep.is_typeA = true;
    rep.soliton_class = "TypeB_intersectionA";
    apply_alpha_table(rep, tol);
    if (!rep.is_typeB)
      fail(Status::InternalError, "table row excludes the 1/x^1 class on one of its members");
    rep.to_normalized = dim4_typeB_branch(P, tol).A.inverse();
    return rep;
  }

  std::vector<VectorField> poly = polynomial_killing_nullspace(s, tol);
  if (poly.size() >= 3) {
    TypeBMatch m = match_typeB_N(s, poly, tol);
    if (!m.found)
      fail(Status::Unclassified,
           "killing dimension 3 but no match among the N-family normal forms");
    rep.killing_dim = 3;
    rep.algebra = "su11";
    rep.model_name = model_family_name(m.id.family);
    rep.model_param_c = m.id.c;
    rep.is_typeC = m.id.family == ModelFamily::N3 || m.id.family == ModelFamily::N4;
    Mat2 A;
    A << 1, 0, m.b, m.c;
    rep.to_normalized = A.inverse();
    rep.soliton_class = soliton_branch_typeB(s, tol);
    return rep;
  }
  if (poly.size() != 2)
    fail(Status::InternalError, "polynomial Killing space has unexpected dimension");

  rep.killing_dim = 2;
  rep.algebra = "A2";
  rep.soliton_class = soliton_branch_typeB(s, tol);
  TypeBMatch m = match_typeB_P(s, tol);
  if (!m.found) m = match_typeB_Q(s, tol);
  if (m.found) {
    rep.model_name = model_family_name(m.id.family);
    rep.model_param_a = m.id.a;
    rep.model_param_c = m.id.c;
    Mat2 A;
    A << 1, 0, m.b, m.c;
    rep.to_normalized = A.inverse();
  } else {
    rep.note = "no catalog match; generic two-dimensional symmetry";
  }
  return rep;
}

}  // namespace homsurf
