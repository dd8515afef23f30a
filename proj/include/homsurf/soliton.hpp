#pragma once

#include <string>
#include <vector>

#include "homsurf/dictionary.hpp"
#include "homsurf/surface.hpp"
#include "homsurf/types.hpp"

namespace homsurf {

// Gradient steady-soliton data for Hess f + rho_sym = 0. `particular` is one
// solution (zero when exists is false); `kernel` spans the solutions of
// Hess h = 0 reachable in this chart, constants included.
struct SolitonFamily {
  bool exists = false;
  std::string branch = "none";
  ScalarField particular;
  std::vector<ScalarField> kernel;
};

SolitonFamily solve_soliton_typeA(const AffineSurface& s, double tol = 1e-9);
SolitonFamily solve_soliton_typeB(const AffineSurface& s, double tol = 1e-9);
SolitonFamily solve_soliton(const AffineSurface& s, double tol = 1e-9);

// Branch label only; same decision tree as solve_soliton_typeB.
std::string soliton_branch_typeB(const AffineSurface& s, double tol = 1e-9);

// Basis of Hess h = 0 solutions, verified pointwise before returning.
std::vector<ScalarField> yamabe_kernel(const AffineSurface& s, double tol = 1e-9);

struct SolitonCheck {
  double particular_residual = 0;
  double kernel_residual = 0;
  bool ok = false;
};

// Max pointwise residuals of Hess f + rho_sym and of Hess h over the kernel.
SolitonCheck verify_soliton(const AffineSurface& s, const SolitonFamily& fam,
                            const std::vector<Point2>& pts, double tol);

}  // namespace homsurf
