#pragma once

#include <string>
#include <vector>

#include "homsurf/dictionary.hpp"
#include "homsurf/models.hpp"
#include "homsurf/surface.hpp"

namespace homsurf {

// Deterministic chart sample points (x^1 > 0, so valid for every kind).
// The first 12 form a fixed grid; extra points are seeded uniform draws
// with x^1 in [0.5, 2] and x^2 in [-1, 1].
std::vector<Point2> standard_sample_points(int n = 12, unsigned seed = 0);

// Max |(L_X nabla)_ij^m| over the sample points, evaluated with exact
// dictionary derivatives of X.
double killing_residual(const AffineSurface& s, const VectorField& X,
                        const std::vector<Point2>& pts);

// Basis of the Killing fields lying in the span of polynomial vector fields
// of degree <= 2 (12-dimensional ansatz).  Every returned field is verified
// against killing_residual.
std::vector<VectorField> polynomial_killing_nullspace(const AffineSurface& s, double tol = 1e-9);

// Dispatch data for the 4-dimensional TypeB normal forms (coefficients with
// C_12^1 = C_22^1 = C_22^2 = 0 after the recorded chart change x = A u):
//   'a': C_11^2 = 1, C_11^1 = 2 C_12^2   (log-shear pair of extra fields)
//   'b': C_11^2 = 0, a = 1 + C_11^1 - 2 C_12^2 != 0   (power pair)
//   'c': C_11^2 = 0, a = 0                             (log pair)
struct Dim4Branch {
  char branch = 'b';
  double a = 0.0;
  Mat2 A = Mat2::Identity();
};
Dim4Branch dim4_typeB_branch(const Coeff6& C, double tol = 1e-9);

// Full affine Killing basis.  TypeA: {d1, d2} plus two closed-form fields
// when the Ricci tensor has rank 1.  TypeB: the homothety/translation pair
// {x^1 d1 + x^2 d2, d2} plus the extra fields of the 3- and 4-dimensional
// normal forms.  Flat surfaces must be given in the zero-coefficient chart
// (PreconditionError otherwise) and yield the six affine fields.
std::vector<VectorField> killing_basis(const AffineSurface& s, double tol = 1e-9);

// Match a TypeB surface with a 3-dimensional polynomial Killing space
// against the N family, recovering the chart x = (u^1, b u^1 + c u^2).
TypeBMatch match_typeB_N(const AffineSurface& s, const std::vector<VectorField>& poly_killing,
                         double tol = 1e-9);

// Structure constants c^k_{ij} with [e_i, e_j] = sum_k c^k_{ij} e_k,
// recovered by sampled least squares.  NotClosed when a bracket leaves the
// span; JacobiError when the recovered constants violate the Jacobi identity.
struct StructureConstants {
  int dim = 0;
  std::vector<double> c;  // c[(k*dim + i)*dim + j]
  double fit_residual = 0.0;

  double at(int k, int i, int j) const { return c[(k * dim + i) * dim + j]; }
  double& at(int k, int i, int j) { return c[(k * dim + i) * dim + j]; }
};
StructureConstants structure_constants(const std::vector<VectorField>& basis,
                                       const std::vector<Point2>& pts, double tol = 1e-9);

// Isomorphism label from dimension plus rank/signature of the Killing form:
// "Abelian2", "A2", "su11", "A2xA2", "A412", "A49_0", "Affine6", or
// "Lie*_unknown" when outside the recognized list.
std::string classify_lie_algebra(const StructureConstants& sc, double tol = 1e-9);

}  // namespace homsurf
