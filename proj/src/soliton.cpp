#include "homsurf/soliton.hpp"

#include <cmath>

#include "homsurf/invariants.hpp"
#include "homsurf/killing.hpp"
#include "homsurf/models.hpp"

namespace homsurf {

namespace {

constexpr double kBranchTol = 1e-7;  // branch decisions on coefficient data

ScalarField log_x1(double coeff = 1.0, int power = 1) {
  Term t;
  t.coeff = coeff;
  t.lp = power;
  ScalarField f;
  f.terms.push_back(t.canonical());
  return f;
}

ScalarField exp_x2(double eb) {
  Term t;
  t.coeff = 1;
  t.eb = eb;
  ScalarField f;
  f.terms.push_back(t.canonical());
  return f;
}

SolitonFamily flat_family(const AffineSurface& s) {
  SolitonFamily fam;
  fam.exists = true;
  fam.branch = "flat";
  fam.kernel.push_back(ScalarField::constant(1));
  if (s.coeffs.max_abs() == 0) {
    // affine chart: every affine function is Hessian-parallel
    fam.kernel.push_back(ScalarField::monomial(1, 1, 0));
    fam.kernel.push_back(ScalarField::monomial(1, 0, 1));
  }
  return fam;
}

}  // namespace

SolitonFamily solve_soliton_typeA(const AffineSurface& s, double tol) {
  if (s.kind != SurfaceKind::TypeA)
    fail(Status::UnsupportedKind, "solver branch expects constant coefficients");
  Cov2Field rho = ricci_closed_form(s);
  double cs = s.coeffs.max_abs();
  if (rho.max_abs() <= tol * std::max(1.0, cs * cs)) return flat_family(s);

  SolitonFamily fam;
  fam.kernel.push_back(ScalarField::constant(1));
  if (ricci_rank(rho, tol) == 2) return fam;  // no gradient soliton

  // rank 1: normalize so rho = r22 dx2 (x) dx2 and solve xi'' - G222 xi' + r22 = 0
  auto [L, sn] = normalize_typeA_rank1(s, tol);
  const Coeff6& g = sn.coeffs;
  double r22 = ricci_closed_form(sn).M(1, 1);
  ScalarField part_u, extra_u;
  if (std::abs(g.g222) > tol * std::max(1.0, g.max_abs())) {
    part_u = ScalarField::monomial(r22 / g.g222, 0, 1);
    extra_u = exp_x2(g.g222);
  } else {
    part_u = ScalarField::monomial(-r22 / 2, 0, 2);
    extra_u = ScalarField::monomial(1, 0, 1);
  }
  fam.exists = true;
  fam.branch = "TypeA_rank1";
  fam.particular = substitute_linear(part_u, L);
  fam.kernel.push_back(substitute_linear(extra_u, L));
  return fam;
}

SolitonFamily solve_soliton_typeB(const AffineSurface& s, double tol) {
  if (s.kind != SurfaceKind::TypeB)
    fail(Status::UnsupportedKind, "solver branch expects 1/x^1 coefficients");
  const Coeff6& C = s.coeffs;
  double cs = std::max(1.0, C.max_abs());
  Cov2Field rho = ricci_closed_form(s);
  if (rho.max_abs() <= tol * std::max(1.0, C.max_abs() * C.max_abs())) return flat_family(s);

  SolitonFamily fam;
  fam.kernel.push_back(ScalarField::constant(1));

  // (i) shared with the constant-coefficient class: rho = e (x1)^{-2} dx1 (x) dx1
  if (std::abs(C.g121) <= kBranchTol * cs && std::abs(C.g221) <= kBranchTol * cs &&
      std::abs(C.g222) <= kBranchTol * cs) {
    double e = (1 + C.g111 - C.g122) * C.g122;
    fam.exists = true;
    fam.branch = "TypeB_intersectionA";
    if (std::abs(1 + C.g111) > kBranchTol) {
      fam.particular = log_x1(e / (1 + C.g111));
      fam.kernel.push_back(ScalarField::monomial(1, 1 + C.g111, 0));
    } else {
      fam.particular = log_x1(-e / 2, 2);  // resonant Euler equation
      fam.kernel.push_back(log_x1());
    }
    return fam;
  }

  // (ii) purely alternating Ricci: constants already solve the equation
  auto [rho_s, rho_a] = ricci_split(rho);
  if (rho_s.max_abs() <= kBranchTol * std::max(1.0, rho.max_abs())) {
    fam.exists = true;
    fam.branch = "TypeB_alternating";
    return fam;
  }

  // (iii) P-family member in disguise: potential a log x1 plus occasional
  // extra Hessian-parallel fields at the two special parameter points
  if (std::abs(C.g221) > kBranchTol * cs) {
    TypeBMatch m = match_typeB_P(s, tol);
    if (m.found) {
      double a = m.id.a, cp = m.id.c;
      fam.exists = true;
      fam.particular = log_x1(a);
      double pthr = kBranchTol * std::max(1.0, std::abs(a) + cp);
      if (std::abs(a + 2) <= pthr && cp <= pthr) {
        fam.branch = "TypeB_P_extended_2b";
        fam.kernel.push_back(ScalarField::monomial(1 / m.c, 0, 1) +
                             ScalarField::monomial(-m.b / m.c, 1, 0));
      } else if (m.id.family == ModelFamily::Pminus && std::abs(a + 0.5) <= pthr &&
                 std::abs(cp * cp - 0.375) <= pthr) {
        fam.branch = "TypeB_P_extended_2c";
        fam.kernel.push_back(ScalarField::monomial(1 / m.c, 0, 1) +
                             ScalarField::monomial(-m.b / m.c - 2 * cp, 1, 0));
      } else {
        fam.branch = "TypeB_Plog";
      }
      return fam;
    }
  }

  return fam;  // exists=false, branch "none", kernel = constants
}

SolitonFamily solve_soliton(const AffineSurface& s, double tol) {
  if (s.kind == SurfaceKind::TypeA) return solve_soliton_typeA(s, tol);
  if (s.kind == SurfaceKind::TypeB) return solve_soliton_typeB(s, tol);
  fail(Status::UnsupportedKind, "soliton solver requires TypeA or TypeB coefficients");
}

std::string soliton_branch_typeB(const AffineSurface& s, double tol) {
  return solve_soliton_typeB(s, tol).branch;
}

std::vector<ScalarField> yamabe_kernel(const AffineSurface& s, double tol) {
  SolitonFamily fam = solve_soliton(s, tol);
  std::vector<Point2> pts = standard_sample_points(12);
  double thr = std::max(1e-8, tol) * std::max(1.0, s.coeffs.max_abs());
  for (const ScalarField& h : fam.kernel)
    for (const Point2& p : pts)
      if (hessian(s, h, p).cwiseAbs().maxCoeff() > thr)
        fail(Status::InternalError, "kernel element fails Hess h = 0");
  return fam.kernel;
}

SolitonCheck verify_soliton(const AffineSurface& s, const SolitonFamily& fam,
                            const std::vector<Point2>& pts, double tol) {
  if (pts.empty()) fail(Status::PreconditionError, "need at least one sample point");
  Cov2Field rho = ricci_closed_form(s);
  SolitonCheck chk;
  for (const Point2& p : pts) {
    if (!s.in_domain(p)) fail(Status::DomainError, "sample point outside the chart domain");
    if (fam.exists) {
      Mat2 r = rho.eval(p);
      Mat2 rs = 0.5 * (r + r.transpose());
      Mat2 H = hessian(s, fam.particular, p);
      chk.particular_residual = std::max(chk.particular_residual, (H + rs).cwiseAbs().maxCoeff());
    }
    for (const ScalarField& h : fam.kernel)
      chk.kernel_residual = std::max(chk.kernel_residual, hessian(s, h, p).cwiseAbs().maxCoeff());
  }
  chk.ok = chk.particular_residual <= tol && chk.kernel_residual <= tol;
  return chk;
}

}  // namespace homsurf
