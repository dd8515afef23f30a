#pragma once

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "homsurf/killing.hpp"
#include "homsurf/models.hpp"
#include "homsurf/surface.hpp"
#include "homsurf/types.hpp"

namespace testutil {

using homsurf::AffineSurface;
using homsurf::Coeff6;
using homsurf::Mat2;
using homsurf::Point2;

inline Coeff6 random_coeffs(std::mt19937_64& g, double lo = -2.0, double hi = 2.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::array<double, 6> a{};
  for (double& v : a) v = u(g);
  return Coeff6::from_array(a);
}

inline Point2 random_point_typeA(std::mt19937_64& g) {
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  double a = u(g), b = u(g);
  return {a, b};
}

inline Point2 random_point_typeB(std::mt19937_64& g) {
  std::uniform_real_distribution<double> u1(0.5, 2.0), u2(-1.0, 1.0);
  double a = u1(g), b = u2(g);
  return {a, b};
}

inline std::vector<Point2> random_points(std::mt19937_64& g, int n, bool typeB) {
  std::vector<Point2> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) pts.push_back(typeB ? random_point_typeB(g) : random_point_typeA(g));
  return pts;
}

inline Mat2 random_invertible(std::mt19937_64& g, double lo = -1.5, double hi = 1.5) {
  std::uniform_real_distribution<double> u(lo, hi);
  for (;;) {
    Mat2 A;
    A << u(g), u(g), u(g), u(g);
    if (std::abs(A.determinant()) > 0.3) return A;
  }
}

// Chart matrix (1,0; b,c) of the x = (u^1, b u^1 + c u^2) substitution.
inline Mat2 typeB_chart(double b, double c) {
  Mat2 A;
  A << 1, 0, b, c;
  return A;
}

inline Mat2 random_typeB_chart(std::mt19937_64& g) {
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  double b = u(g), c = u(g);
  while (std::abs(c) < 0.3) c = u(g);
  return typeB_chart(b, c);
}

// Constant-coefficient surface with rank-1 Ricci: a normalized form
// (G_11^2 = G_12^2 = 0, rho = diag(0, r), r != 0) pulled back through a
// random invertible linear map.
inline AffineSurface random_rank1_typeA(std::mt19937_64& g) {
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (;;) {
    Coeff6 c;
    c.g111 = u(g);
    c.g121 = u(g);
    c.g221 = u(g);
    c.g222 = u(g);
    double r22 = c.g111 * c.g221 + c.g121 * (c.g222 - c.g121);
    if (std::abs(r22) < 0.1) continue;
    Mat2 A = random_invertible(g);
    return AffineSurface::typeA(homsurf::pullback_coeffs(c, A));
  }
}

inline double max_abs_diff(const Mat2& A, const Mat2& B) {
  return (A - B).cwiseAbs().maxCoeff();
}

// Structure constants after the basis change e'_i = sum_a P(a,i) e_a.
inline homsurf::StructureConstants change_basis(const homsurf::StructureConstants& sc,
                                                const Eigen::MatrixXd& P) {
  int n = sc.dim;
  Eigen::MatrixXd Pinv = P.inverse();
  homsurf::StructureConstants out;
  out.dim = n;
  out.c.assign(static_cast<size_t>(n) * n * n, 0.0);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double v = 0;
        for (int l = 0; l < n; ++l)
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) v += Pinv(k, l) * P(a, i) * P(b, j) * sc.at(l, a, b);
        out.at(k, i, j) = v;
      }
  return out;
}

inline Eigen::MatrixXd random_basis_change(std::mt19937_64& g, int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    Eigen::MatrixXd P(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) P(i, j) = u(g);
    if (std::abs(P.determinant()) > 0.2) return P;
  }
}

}  // namespace testutil
