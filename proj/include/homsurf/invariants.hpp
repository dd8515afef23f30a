#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "homsurf/surface.hpp"
#include "homsurf/types.hpp"

namespace homsurf {

struct AlphaEpsilon {
  double alpha = 0;
  int epsilon = 0;  // +1 / -1
  bool defined = false;
};

struct RecurrenceForm {
  OneForm omega;
  bool defined = false;
  double residual = 0;
};

struct TypeBInvariants {
  OneForm rho0;
  Cov2Field rho1, rho2, rho3;
};

// rho = rho_sym + rho_alt exactly.
std::pair<Cov2Field, Cov2Field> ricci_split(const Cov2Field& rho);

// Rank of the constant coefficient matrix via singular values with a
// tolerance relative to the largest singular value.
int ricci_rank(const Cov2Field& rho, double tol);

// alpha = (nabla rho(X,X;X))^2 / rho(X,X)^3 and eps = sign rho(X,X) for a
// rank-1 TypeA surface; X maximizes |rho(X,X)| over d1, d2, d1+d2.
AlphaEpsilon alpha_epsilon_typeA(const AffineSurface& s, double tol = 1e-9);

// Same invariant for a TypeB surface whose coefficients satisfy
// C12^1 = C22^1 = C22^2 = 0 (checked to 1e-12): alpha =
// 4(1+C11^1)^2 / ((1+C11^1-C12^2) C12^2), eps the sign of the denominator.
AlphaEpsilon alpha_typeB(const AffineSurface& s);

// Least-squares fit of nabla rho = 2 omega (x) rho (omega paired with the
// derivative slot); defined iff the fit residual is tiny. Rank-1 input only.
RecurrenceForm recurrence_one_form(const AffineSurface& s, double tol = 1e-9);

// The four structural tensors of a TypeB surface; rho = rho1 + rho2 - rho3.
TypeBInvariants rho0123_typeB(const AffineSurface& s);

// Gauss curvature of an arbitrary nondegenerate 2D (pseudo-)metric evaluator
// by central differences of step h.
double gauss_curvature_metric(const std::function<Mat2(const Point2&)>& metric, const Point2& p,
                              double h);

// Gauss curvature samples of the symmetric Ricci part treated as a metric.
std::vector<double> gauss_curvature_of_rho_s(const AffineSurface& s, const std::vector<Point2>& pts,
                                             double h, double tol = 1e-9);

}  // namespace homsurf
