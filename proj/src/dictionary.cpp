#include "homsurf/dictionary.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace homsurf {

namespace {

bool is_int(double v) { return v == std::floor(v) && std::abs(v) < 1e15; }

double binom(int n, int k) {
  double r = 1;
  for (int i = 0; i < k; ++i) r = r * double(n - i) / double(i + 1);
  return r;
}

std::tuple<double, double, int, double, double, int, int, double> key(const Term& t) {
  return {t.p1, double(t.p2), t.lp, t.ea, t.eb, int(t.trig), 0, t.omega};
}

}  // namespace

double Term::eval(const Point2& p) const {
  if ((lp > 0 || !is_int(p1)) && p.x1 <= 0)
    fail(Status::DomainError, "term requires x1 > 0");
  double v = coeff;
  if (p1 != 0) v *= std::pow(p.x1, p1);
  if (p2 != 0) v *= std::pow(p.x2, p2);
  if (ea != 0 || eb != 0) v *= std::exp(ea * p.x1 + eb * p.x2);
  if (lp > 0) {
    double l = std::log(p.x1);
    v *= (lp == 1) ? l : l * l;
  }
  if (trig == TrigKind::Cos) v *= std::cos(omega * p.x2);
  if (trig == TrigKind::Sin) v *= std::sin(omega * p.x2);
  return v;
}

Term Term::canonical() const {
  Term t = *this;
  if (t.trig == TrigKind::None) {
    t.omega = 0;
    return t;
  }
  if (t.omega == 0) {
    if (t.trig == TrigKind::Sin) t.coeff = 0;
    t.trig = TrigKind::None;
    t.omega = 0;
    return t;
  }
  if (t.omega < 0) {
    t.omega = -t.omega;
    if (t.trig == TrigKind::Sin) t.coeff = -t.coeff;
  }
  return t;
}

bool same_shape(const Term& a, const Term& b) { return key(a) == key(b); }

ScalarField ScalarField::constant(double c) {
  ScalarField f;
  if (c != 0) f.terms.push_back(Term{c, 0, 0, 0, 0, 0, TrigKind::None, 0});
  return f;
}

ScalarField ScalarField::monomial(double coeff, double p1, int p2) {
  ScalarField f;
  if (coeff != 0) f.terms.push_back(Term{coeff, p1, p2, 0, 0, 0, TrigKind::None, 0});
  return f;
}

double ScalarField::eval(const Point2& p) const {
  double s = 0;
  for (const Term& t : terms) s += t.eval(p);
  return s;
}

ScalarField ScalarField::d1() const {
  ScalarField r;
  for (const Term& t : terms) {
    if (t.p1 != 0) {
      Term u = t;
      u.coeff *= t.p1;
      u.p1 -= 1;
      r.terms.push_back(u);
    }
    if (t.ea != 0) {
      Term u = t;
      u.coeff *= t.ea;
      r.terms.push_back(u);
    }
    if (t.lp > 0) {
      Term u = t;
      u.coeff *= t.lp;
      u.p1 -= 1;
      u.lp -= 1;
      r.terms.push_back(u);
    }
  }
  return r.collected();
}

ScalarField ScalarField::d2() const {
  ScalarField r;
  for (const Term& t : terms) {
    if (t.p2 != 0) {
      Term u = t;
      u.coeff *= t.p2;
      u.p2 -= 1;
      r.terms.push_back(u);
    }
    if (t.eb != 0) {
      Term u = t;
      u.coeff *= t.eb;
      r.terms.push_back(u);
    }
    if (t.trig == TrigKind::Cos && t.omega != 0) {
      Term u = t;
      u.coeff *= -t.omega;
      u.trig = TrigKind::Sin;
      r.terms.push_back(u.canonical());
    } else if (t.trig == TrigKind::Sin && t.omega != 0) {
      Term u = t;
      u.coeff *= t.omega;
      u.trig = TrigKind::Cos;
      r.terms.push_back(u.canonical());
    }
  }
  return r.collected();
}

ScalarField ScalarField::operator+(const ScalarField& o) const {
  ScalarField r = *this;
  r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
  return r.collected();
}

ScalarField ScalarField::operator-(const ScalarField& o) const { return *this + o.scaled(-1); }

ScalarField ScalarField::scaled(double s) const {
  ScalarField r = *this;
  for (Term& t : r.terms) t.coeff *= s;
  return r.collected();
}

namespace {

// Product of two terms; one or two result terms (trig product-to-sum).
void mul_terms(const Term& a, const Term& b, std::vector<Term>& out) {
  Term base;
  base.coeff = a.coeff * b.coeff;
  base.p1 = a.p1 + b.p1;
  base.p2 = a.p2 + b.p2;
  base.ea = a.ea + b.ea;
  base.eb = a.eb + b.eb;
  base.lp = a.lp + b.lp;
  if (base.lp > 2) fail(Status::DictionaryOverflow, "product exceeds log power 2");
  if (a.trig == TrigKind::None || b.trig == TrigKind::None) {
    const Term& w = (a.trig == TrigKind::None) ? b : a;
    base.trig = w.trig;
    base.omega = w.omega;
    out.push_back(base.canonical());
    return;
  }
  const double wa = a.omega, wb = b.omega;
  Term lo = base, hi = base;
  lo.coeff *= 0.5;
  hi.coeff *= 0.5;
  if (a.trig == TrigKind::Cos && b.trig == TrigKind::Cos) {
    lo.trig = TrigKind::Cos;
    lo.omega = wa - wb;
    hi.trig = TrigKind::Cos;
    hi.omega = wa + wb;
  } else if (a.trig == TrigKind::Sin && b.trig == TrigKind::Sin) {
    lo.trig = TrigKind::Cos;
    lo.omega = wa - wb;
    hi.trig = TrigKind::Cos;
    hi.omega = wa + wb;
    hi.coeff = -hi.coeff;
  } else if (a.trig == TrigKind::Sin && b.trig == TrigKind::Cos) {
    hi.trig = TrigKind::Sin;
    hi.omega = wa + wb;
    lo.trig = TrigKind::Sin;
    lo.omega = wa - wb;
  } else {  // Cos * Sin
    hi.trig = TrigKind::Sin;
    hi.omega = wa + wb;
    lo.trig = TrigKind::Sin;
    lo.omega = wb - wa;
  }
  out.push_back(lo.canonical());
  out.push_back(hi.canonical());
}

}  // namespace

ScalarField ScalarField::operator*(const ScalarField& o) const {
  ScalarField r;
  for (const Term& a : terms)
    for (const Term& b : o.terms) mul_terms(a, b, r.terms);
  return r.collected();
}

ScalarField ScalarField::collected() const {
  std::vector<Term> ts;
  ts.reserve(terms.size());
  for (const Term& t : terms) ts.push_back(t.canonical());
  std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return key(a) < key(b); });
  ScalarField r;
  for (const Term& t : ts) {
    if (!r.terms.empty() && same_shape(r.terms.back(), t))
      r.terms.back().coeff += t.coeff;
    else
      r.terms.push_back(t);
  }
  std::erase_if(r.terms, [](const Term& t) { return t.coeff == 0; });
  return r;
}

ScalarField ScalarField::pruned(double eps) const {
  ScalarField r = collected();
  std::erase_if(r.terms, [eps](const Term& t) { return std::abs(t.coeff) <= eps; });
  return r;
}

bool ScalarField::is_zero() const { return collected().terms.empty(); }

VectorField lie_bracket(const VectorField& X, const VectorField& Y) {
  VectorField r;
  for (int i = 0; i < 2; ++i)
    r.comp(i) = X.c1 * Y.comp(i).d1() + X.c2 * Y.comp(i).d2() - Y.c1 * X.comp(i).d1() -
                Y.c2 * X.comp(i).d2();
  return r;
}

ScalarField apply_vf(const VectorField& X, const ScalarField& f) {
  return X.c1 * f.d1() + X.c2 * f.d2();
}

namespace {

// (c0 + c1*x1 + c2*x2)^n expanded as a dictionary polynomial (n >= 0).
ScalarField linear_power(double c1, double c2, int n) {
  ScalarField r;
  for (int k = 0; k <= n; ++k) {
    double coeff = binom(n, k) * std::pow(c1, n - k) * std::pow(c2, k);
    if (coeff != 0) r.terms.push_back(Term{coeff, double(n - k), k, 0, 0, 0, TrigKind::None, 0});
  }
  return r.collected();
}

}  // namespace

ScalarField substitute_linear(const ScalarField& f, const Mat2& B) {
  if (B.isIdentity(0.0)) return f;
  const double b11 = B(0, 0), b12 = B(0, 1), b21 = B(1, 0), b22 = B(1, 1);
  ScalarField out;
  for (const Term& t : f.terms) {
    // exp factor always maps.
    Term base;
    base.coeff = t.coeff;
    base.ea = t.ea * b11 + t.eb * b21;
    base.eb = t.ea * b12 + t.eb * b22;
    if (t.trig != TrigKind::None) {
      if (b21 != 0)
        fail(Status::DictionaryOverflow, "trig argument would leave the x2 axis");
      base.trig = t.trig;
      base.omega = t.omega * b22;
    }
    ScalarField acc;
    acc.terms.push_back(base.canonical());
    // (x1)^p1 and log(x1)^lp.
    if (t.p1 != 0 || t.lp > 0) {
      if (b12 == 0) {
        if (b11 <= 0 && (!is_int(t.p1) || t.lp > 0))
          fail(Status::DictionaryOverflow, "substitution needs a positive x1 scale");
        ScalarField fac = ScalarField::monomial(std::pow(b11, t.p1), t.p1, 0);
        if (t.lp > 0) {
          // (log x1 + log b11)^lp
          const double k = std::log(b11);
          ScalarField lg;
          for (int j = 0; j <= t.lp; ++j) {
            Term u;
            u.coeff = binom(t.lp, j) * std::pow(k, t.lp - j);
            u.lp = j;
            if (u.coeff != 0) lg.terms.push_back(u);
          }
          fac = fac * lg;
        }
        acc = acc * fac;
      } else {
        if (!is_int(t.p1) || t.p1 < 0 || t.lp > 0)
          fail(Status::DictionaryOverflow, "x1 power cannot absorb a mixed linear form");
        acc = acc * linear_power(b11, b12, int(t.p1));
      }
    }
    if (t.p2 != 0) acc = acc * linear_power(b21, b22, t.p2);
    out.terms.insert(out.terms.end(), acc.terms.begin(), acc.terms.end());
  }
  return out.collected();
}

VectorField pushforward(const Mat2& A, const VectorField& Xu) {
  const Mat2 Ainv = A.inverse();
  ScalarField a = substitute_linear(Xu.c1, Ainv);
  ScalarField b = substitute_linear(Xu.c2, Ainv);
  VectorField r;
  r.c1 = a.scaled(A(0, 0)) + b.scaled(A(0, 1));
  r.c2 = a.scaled(A(1, 0)) + b.scaled(A(1, 1));
  return r;
}

}  // namespace homsurf
