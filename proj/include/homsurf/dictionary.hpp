#pragma once

#include <vector>

#include "homsurf/types.hpp"

namespace homsurf {

enum class TrigKind { None, Cos, Sin };

// One analytic term in the fixed function dictionary:
//   coeff * (x1)^p1 * (x2)^p2 * exp(ea*x1 + eb*x2) * log(x1)^lp * trig(omega*x2)
// p1 real, p2 a nonnegative integer, lp in {0,1,2}, trig acting on x2 only.
// The dictionary is closed under d/dx1, d/dx2 and under products (trig
// products reduce via product-to-sum; log powers beyond 2 overflow).
struct Term {
  double coeff = 0;
  double p1 = 0;
  int p2 = 0;
  double ea = 0, eb = 0;
  int lp = 0;
  TrigKind trig = TrigKind::None;
  double omega = 0;

  double eval(const Point2& p) const;
  Term canonical() const;
};

bool same_shape(const Term& a, const Term& b);

struct ScalarField {
  std::vector<Term> terms;

  static ScalarField zero() { return {}; }
  static ScalarField constant(double c);
  // coeff * (x1)^p1 * (x2)^p2
  static ScalarField monomial(double coeff, double p1, int p2);

  double eval(const Point2& p) const;
  ScalarField d1() const;
  ScalarField d2() const;
  ScalarField deriv(int i) const { return i == 0 ? d1() : d2(); }

  ScalarField operator+(const ScalarField& o) const;
  ScalarField operator-(const ScalarField& o) const;
  ScalarField operator*(const ScalarField& o) const;
  ScalarField scaled(double s) const;

  // Merge like terms, drop exact-zero coefficients.
  ScalarField collected() const;
  // Drop terms with |coeff| <= eps (explicit opt-in, never automatic).
  ScalarField pruned(double eps) const;
  bool is_zero() const;
};

struct VectorField {
  ScalarField c1, c2;  // X = c1*d/dx1 + c2*d/dx2

  Vec2 eval(const Point2& p) const { return Vec2(c1.eval(p), c2.eval(p)); }
  const ScalarField& comp(int i) const { return i == 0 ? c1 : c2; }
  ScalarField& comp(int i) { return i == 0 ? c1 : c2; }
};

// [X,Y]^i = X^j dY^i/dx^j - Y^j dX^i/dx^j, exact in the dictionary.
VectorField lie_bracket(const VectorField& X, const VectorField& Y);

// Directional derivative X(f) = X^1 f_1 + X^2 f_2.
ScalarField apply_vf(const VectorField& X, const ScalarField& f);

// g with g(x) = f(B x) for a constant 2x2 matrix B. Throws
// Status::DictionaryOverflow when the image leaves the dictionary
// (trig argument acquiring an x1 part, log of a mixed linear form, or a
// non-integer power of a mixed linear form).
ScalarField substitute_linear(const ScalarField& f, const Mat2& B);

// Field in x-coordinates of the field X given in u-coordinates, where
// x = A u: X_x(x) = A X_u(A^{-1} x).
VectorField pushforward(const Mat2& A, const VectorField& Xu);

}  // namespace homsurf
