#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace homsurf {

using Mat2 = Eigen::Matrix2d;
using Vec2 = Eigen::Vector2d;
using Mat4 = Eigen::Matrix4d;

struct Point2 {
  double x1 = 0.0;
  double x2 = 0.0;
};

enum class Status {
  Ok = 0,
  Unclassified = 2,
  ParseError = 3,
  VerifyError = 4,
  DomainError = 5,
  PreconditionError = 6,
  RankError = 7,
  ParamError = 8,
  DictionaryOverflow = 9,
  NotClosed = 10,
  FlatSurface = 11,
  UnsupportedKind = 12,
  DivisionError = 13,
  JacobiError = 14,
  InternalError = 15,
};

class Error : public std::runtime_error {
public:
  Error(Status code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Status code() const { return code_; }

private:
  Status code_;
};

[[noreturn]] inline void fail(Status code, const std::string& msg) { throw Error(code, msg); }

// Connection coefficients of a torsion-free connection in 2 variables,
// symmetric in the lower index pair: value(i,j,k) = G_{ij}^k with 0-based
// indices. Named members use 1-based display order 111,112,121,122,221,222.
struct Coeff6 {
  double g111 = 0, g112 = 0, g121 = 0, g122 = 0, g221 = 0, g222 = 0;

  double operator()(int i, int j, int k) const {
    if (i > j) std::swap(i, j);
    if (i == 0 && j == 0) return k == 0 ? g111 : g112;
    if (i == 0 && j == 1) return k == 0 ? g121 : g122;
    return k == 0 ? g221 : g222;
  }

  double& slot(int i, int j, int k) {
    if (i > j) std::swap(i, j);
    if (i == 0 && j == 0) return k == 0 ? g111 : g112;
    if (i == 0 && j == 1) return k == 0 ? g121 : g122;
    return k == 0 ? g221 : g222;
  }

  std::array<double, 6> to_array() const { return {g111, g112, g121, g122, g221, g222}; }

  static Coeff6 from_array(const std::array<double, 6>& a) {
    Coeff6 c;
    c.g111 = a[0];
    c.g112 = a[1];
    c.g121 = a[2];
    c.g122 = a[3];
    c.g221 = a[4];
    c.g222 = a[5];
    return c;
  }

  bool finite() const {
    for (double v : to_array())
      if (!std::isfinite(v)) return false;
    return true;
  }

  double max_abs() const {
    double m = 0;
    for (double v : to_array()) m = std::max(m, std::abs(v));
    return m;
  }
};

// Covariant 2-tensor of the rigid shape (x1)^{-k} * M.
struct Cov2Field {
  int scale_power = 0;  // k
  Mat2 M = Mat2::Zero();

  Mat2 eval(const Point2& p) const { return std::pow(p.x1, -scale_power) * M; }
  double max_abs() const { return M.cwiseAbs().maxCoeff(); }
};

// Covariant 3-tensor of the rigid shape (x1)^{-k} * T, with comp(j,k,i) the
// coefficient of dx^j (x) dx^k (x) dx^i; the last slot is the direction of
// covariant differentiation for derivative tensors.
struct Cov3Field {
  int scale_power = 0;
  std::array<double, 8> t{};  // index (j*2+k)*2+i

  double comp(int j, int k, int i) const { return t[(j * 2 + k) * 2 + i]; }
  double& comp(int j, int k, int i) { return t[(j * 2 + k) * 2 + i]; }
  double eval(int j, int k, int i, const Point2& p) const {
    return std::pow(p.x1, -scale_power) * comp(j, k, i);
  }
  double max_abs() const {
    double m = 0;
    for (double v : t) m = std::max(m, std::abs(v));
    return m;
  }
};

// 1-form of the rigid shape (x1)^{-k} * (w1 dx^1 + w2 dx^2).
struct OneForm {
  int scale_power = 0;
  double w1 = 0, w2 = 0;
};

struct RunConfig {
  double tol = 1e-9;
  double fd_step_2d = 1e-5;
  double fd_step_4d = 1e-4;
  std::uint64_t seed = 0;
  int samples = 20;
};

}  // namespace homsurf
