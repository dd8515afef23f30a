#pragma once

#include <utility>

#include "homsurf/invariants.hpp"
#include "homsurf/surface.hpp"

namespace homsurf {

// Catalog of locally homogeneous models. The M* families are constant
// coefficient surfaces on R^2; the N*/P*/Q families are 1/x^1-homogeneous
// surfaces on x^1 > 0.
enum class ModelFamily {
  M1,
  M2,
  M3,
  M4,
  M5,
  N1plus,
  N1minus,
  N2,
  N3,
  N4,
  Pplus,
  Pminus,
  Q,
};

struct ModelId {
  ModelFamily family = ModelFamily::M1;
  double c = 0.0;  // parameter c (used by M2-M5, N2, P, Q)
  double a = 0.0;  // parameter a (used by P)
};

const char* model_family_name(ModelFamily f);

// Coefficients of the named catalog model. ParamError when the parameters
// are outside the admissible range: M2/M3 need c^2 + c != 0, M5 and N2 need
// c >= 0, P needs (a, c) != (0, 0) and c >= 0.
AffineSurface model(const ModelId& id);

// Coefficient array of the same connection expressed in u-coordinates under
// the linear substitution x = A u.  Exact for constant (TypeA) coefficients
// with any invertible A; for TypeB coefficients A must fix the x^1 axis
// (first row (1, 0)) so that the 1/x^1 profile is preserved.
Coeff6 pullback_coeffs(const Coeff6& C, const Mat2& A);

// Linear normalization of a TypeA surface with rank-1 Ricci tensor.  Returns
// (L, surface in u = L x coordinates); afterwards rho_11 = rho_12 = 0 and,
// as a consequence of the rank-1 structure, Gamma_11^2 = Gamma_12^2 = 0.
// Returns the identity map when the input is already in this form.
std::pair<Mat2, AffineSurface> normalize_typeA_rank1(const AffineSurface& s, double tol = 1e-9);

// TypeB chart change x = (u^1, b u^1 + c u^2) with c != 0.
AffineSurface linear_equiv_typeB(const AffineSurface& s, double b, double c);

// Shear x = (u^1, -eps u^1 + u^2).  With eps = C_12^1 / C_22^1 the image has
// C_12^1 = 0; when C_12^1 = C_22^1 = C_22^2 = 0, eps = -C_11^2 / (C_11^1 - 2 C_12^2)
// removes C_11^2 without touching the remaining coefficients.
AffineSurface shear_typeB(const AffineSurface& s, double eps);

// Chart change (u^1, u^2) = (e^{x^2}, x^1) carrying a TypeA surface with
// Gamma_11^1 = Gamma_11^2 = Gamma_12^2 = Gamma_22^1 = 0 into TypeB form with
// C_11^1 = Gamma_22^2 - 1, C_12^2 = Gamma_12^1 and all other entries zero.
AffineSurface typeA_to_typeB_chart(const AffineSurface& s);

// Result of matching a TypeB surface against a catalog family through a
// chart change x = (u^1, b u^1 + c u^2).
struct TypeBMatch {
  bool found = false;
  ModelId id;
  double b = 0.0;
  double c = 1.0;
  Coeff6 normalized;  // coefficients seen in the model chart
};

// Match against the P family (either sign).  Requires kind TypeB; returns
// found = false when C_22^1 vanishes or no parameter choice reproduces the
// input coefficients.
TypeBMatch match_typeB_P(const AffineSurface& s, double tol = 1e-9);

// Match against the Q family.  Requires kind TypeB; returns found = false
// when C_22^1 != 0 (that sector belongs to P), when C_22^2 vanishes, or when
// no chart x = (u^1, b u^1 + c u^2) reproduces the input coefficients.
TypeBMatch match_typeB_Q(const AffineSurface& s, double tol = 1e-9);

// Result of matching constant coefficients against the M* catalog in the
// chart they are given in (no chart search beyond the rank-1 normalization
// the caller is expected to have applied).
struct TypeAMatch {
  bool found = false;
  ModelId id;
};

// Recognize the output of normalize_typeA_rank1 as one of M1-M5.  Pattern
// tests are chart-sensitive: catalog members written in other linear charts
// are reported as not found rather than searched for.
TypeAMatch match_typeA_M(const Coeff6& g, double tol = 1e-9);

}  // namespace homsurf
