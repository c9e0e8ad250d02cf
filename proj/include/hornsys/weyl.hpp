#pragma once

#include <optional>
#include <string>

#include "hornsys/cpoly.hpp"

namespace hornsys {

// Element of the Weyl algebra D_n with rational coefficients, kept in normal
// order (all x's left of all dx's).  A term key has length 2n: the first n
// entries are x-exponents, the last n are dx-exponents.
struct WeylOp {
  int n{0};
  std::map<Mono, Rational> t;

  WeylOp() = default;
  explicit WeylOp(int n_) : n(n_) {}

  static WeylOp constant(int n, const Rational& c);
  static WeylOp term(int n, const Mono& ab, const Rational& c);
  static WeylOp x(int n, int i);   // 1-based
  static WeylOp dx(int n, int i);  // 1-based
  static WeylOp theta(int n, int i);

  bool is_zero() const { return t.empty(); }
  void add_term(const Mono& ab, const Rational& c);
  int order() const;  // max total dx-degree, -1 for zero

  bool operator==(const WeylOp&) const = default;
};

WeylOp operator+(const WeylOp& a, const WeylOp& b);
WeylOp operator-(const WeylOp& a, const WeylOp& b);
WeylOp operator-(const WeylOp& a);
WeylOp operator*(const Rational& c, const WeylOp& a);

// Normal-ordered product; the relations are [dx_i, x_i] = 1, everything else
// commutes.  Throws DimensionMismatch on differing ambient n.
WeylOp mul(const WeylOp& p, const WeylOp& q);
inline WeylOp operator*(const WeylOp& p, const WeylOp& q) { return mul(p, q); }

// Left ideal in D_n given by a generator list.
struct DIdeal {
  int n{0};
  std::vector<WeylOp> generators;
};

// Laurent polynomial in x_1..x_n (exponents may be negative): the module the
// action oracle works in.
using XPoly = CPoly;

// Standard action of P on f; exact.  act(mul(P,Q), f) == act(P, act(Q, f)).
XPoly act(const WeylOp& p, const XPoly& f);

// --- theta calculus --------------------------------------------------------

// Commutative polynomial in theta_1..theta_n; theta_i = x_i*dx_i.
using ThetaPoly = CPoly;

WeylOp theta_to_weyl(const ThetaPoly& tp);

// Succeeds exactly when every term of p has equal x- and dx-exponent vectors.
std::optional<ThetaPoly> weyl_is_theta(const WeylOp& p);

// t(theta + v)
ThetaPoly theta_shift(const ThetaPoly& tp, const std::vector<Int>& v);

// theta_i*(theta_i-1)*...*(theta_i-k+1); equals x_i^k dx_i^k under theta_to_weyl.
ThetaPoly falling_factorial_theta(int n, int var, int k);

// Image of p under the algebra automorphism x_j -> x_j + c (dx_j fixed); j is 1-based.
WeylOp substitute_x_shift(const WeylOp& p, int j, const Rational& c);

// Sets x_j = 1 for every j in the (1-based) index set; requires that no term
// of p contains dx_j for those j.
WeylOp specialize_x_one(const WeylOp& p, const std::vector<int>& js);

// Keep variables 1..m only; every term must be supported on them.
WeylOp restrict_vars(const WeylOp& p, int m);

// Canonical text grammar, e.g. "x1^2*dx1^2 + 4*x1*dx1 + 2".
std::string to_string(const WeylOp& p);
WeylOp parse_weyl(const std::string& s, int n);

}  // namespace hornsys
