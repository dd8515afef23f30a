#pragma once

#include <array>
#include <functional>

#include "homsurf/dictionary.hpp"
#include "homsurf/types.hpp"

namespace homsurf {

// TypeA: constant coefficients on R^2.
// TypeB: coefficients C/x1 on the half-plane x1 > 0.
// Generic: arbitrary evaluator (used by oracles and tests).
enum class SurfaceKind { TypeA, TypeB, Generic };

struct AffineSurface {
  SurfaceKind kind = SurfaceKind::TypeA;
  Coeff6 coeffs;
  std::function<Coeff6(const Point2&)> generic_eval;
  bool x1_positive_domain = false;

  static AffineSurface typeA(const Coeff6& g);
  static AffineSurface typeB(const Coeff6& c);
  static AffineSurface generic(std::function<Coeff6(const Point2&)> f, bool x1_positive);

  Coeff6 christoffel(const Point2& p) const;
  // Partial derivatives of the coefficients in both directions; analytic for
  // TypeA/TypeB, central differences of step h for Generic.
  std::array<Coeff6, 2> christoffel_deriv(const Point2& p, double h) const;
  bool in_domain(const Point2& p) const;
};

// Closed-form Ricci tensor: constant matrix for TypeA (k=0), (x1)^{-2}-scaled
// for TypeB (k=2, possibly non-symmetric). Throws UnsupportedKind for Generic.
Cov2Field ricci_closed_form(const AffineSurface& s);

// Closed-form covariant derivative of the Ricci tensor; comp(j,k,i) carries
// the derivative direction in the last slot (k=0 for TypeA, k=3 for TypeB).
Cov3Field nabla_ricci_closed_form(const AffineSurface& s);

// H_ij = d_i d_j f - G_ij^k d_k f with exact dictionary derivatives of f.
Mat2 hessian(const AffineSurface& s, const ScalarField& f, const Point2& p);

// Curvature-definition oracle: builds R^l_{kij} from coefficient derivatives
// and contracts rho(a,b) = sum_i R^i_{b i a}. Independent of the closed forms.
Mat2 fd_ricci_oracle(const AffineSurface& s, const Point2& p, double h);

// First and second covariant derivatives of the Ricci tensor computed from
// fd_ricci_oracle with central differences; index order matches Cov3Field
// plus a trailing second-derivative slot for the 16-entry version.
std::array<double, 8> fd_nabla_ricci_oracle(const AffineSurface& s, const Point2& p, double h);
std::array<double, 16> fd_nabla2_ricci_oracle(const AffineSurface& s, const Point2& p, double h);

}  // namespace homsurf
