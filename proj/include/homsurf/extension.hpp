#pragma once

#include <string>
#include <vector>

#include "homsurf/dictionary.hpp"
#include "homsurf/surface.hpp"
#include "homsurf/types.hpp"

namespace homsurf {

// The lifted potential is F = kExtensionPotentialFactor * f(base). The bridge
// to the 4D steady soliton needs exactly 2; any other factor breaks it.
inline constexpr double kExtensionPotentialFactor = 2.0;

struct Point4 {
  double x1 = 1, x2 = 0, y1 = 0, y2 = 0;
};

// g(dx_i,dx_j) = phi_ij - 2 y_k G_ij^k, g(dx_i,dy_j) = delta_ij, g(dy,dy) = 0.
Mat4 extension_metric_eval(const AffineSurface& s, const Mat2& phi, const Point4& q);

// Ricci tensor of the extension metric's Levi-Civita connection by nested
// central differences of step h; verification-grade accuracy only.
Mat4 extension_ricci_fd(const AffineSurface& s, const Mat2& phi, const Point4& q, double h);

struct ExtensionCheck {
  double max_residual = 0;
  bool ok = false;
};

// Max |Hess F + Ric| over pts for F = kExtensionPotentialFactor * f_base(x).
ExtensionCheck verify_extension_soliton(const AffineSurface& s, const Mat2& phi,
                                        const ScalarField& f_base, const std::vector<Point4>& pts,
                                        double h, double tol);

struct GeodesicSample {
  double t = 0;
  Point2 x;
  Vec2 v = Vec2::Zero();
};

struct GeodesicPath {
  std::vector<GeodesicSample> samples;
  bool blew_up = false;
  double t_max_reached = 0;
  std::string stop_reason;  // "", "blowup", "domain"
};

// RK4 with step-doubling error control on xdd^k + G_ij^k xd^i xd^j = 0 from
// t = 0 toward t_max (either sign).  Near the domain wall or a solution
// singularity the step is halved until it collapses; blow-up is data, not an
// error.
GeodesicPath geodesic_integrate(const AffineSurface& s, const Point2& p0, const Vec2& v0,
                                double t_max, double dt);

}  // namespace homsurf
