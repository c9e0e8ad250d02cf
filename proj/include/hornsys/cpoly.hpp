#pragma once

#include <map>
#include <string>
#include <vector>

#include "hornsys/rational.hpp"

namespace hornsys {

// Exponent vector; negative entries are allowed only in Laurent contexts
// (operator actions), never inside Groebner computations.
using Mono = std::vector<int>;

int total_degree(const Mono& m);
Mono mono_mul(const Mono& a, const Mono& b);
bool mono_divides(const Mono& a, const Mono& b);  // a | b
Mono mono_div(const Mono& b, const Mono& a);      // b / a
Mono mono_lcm(const Mono& a, const Mono& b);

// Commutative polynomial with rational coefficients in a fixed number of
// indeterminates.  Canonical: no zero coefficients stored.
struct CPoly {
  int nvars{0};
  std::map<Mono, Rational> t;

  CPoly() = default;
  explicit CPoly(int n) : nvars(n) {}

  static CPoly zero(int n) { return CPoly(n); }
  static CPoly constant(int n, const Rational& c);
  static CPoly monomial(int n, const Mono& m, const Rational& c);
  static CPoly var(int n, int i);  // 0-based

  bool is_zero() const { return t.empty(); }
  bool is_constant() const;
  int degree() const;            // total degree, -1 for zero
  int degree_in(int var) const;  // -1 for zero

  void add_term(const Mono& m, const Rational& c);

  bool operator==(const CPoly&) const = default;
};

CPoly operator+(const CPoly& a, const CPoly& b);
CPoly operator-(const CPoly& a, const CPoly& b);
CPoly operator-(const CPoly& a);
CPoly operator*(const CPoly& a, const CPoly& b);
CPoly operator*(const Rational& c, const CPoly& a);

Rational eval(const CPoly& f, const RatVec& point);
CPoly derivative(const CPoly& f, int var);

// f(x + v) for an integer shift vector v.
CPoly shift(const CPoly& f, const std::vector<Int>& v);

// Substitute each variable by the given polynomial (all in the target ring).
CPoly compose(const CPoly& f, const std::vector<CPoly>& images);

// Exact division; throws std::logic_error if g does not divide f.
CPoly exact_div(const CPoly& f, const CPoly& g);

// Scales f by a positive rational so its coefficients are coprime integers
// with positive leading (lex) coefficient.  Zero stays zero.
CPoly primitive_part(const CPoly& f);

CPoly gcd(const CPoly& f, const CPoly& g);
CPoly gcd_many(const std::vector<CPoly>& fs);

// --- monomial orders and Groebner bases -----------------------------------

struct CMonoOrder {
  enum class Tie { Grevlex, Lex };
  Tie tie = Tie::Grevlex;
  // weight vectors compared in sequence before the tiebreak
  std::vector<std::vector<int>> weights;

  static CMonoOrder grevlex() { return {}; }
  static CMonoOrder lex() { return {Tie::Lex, {}}; }
  static CMonoOrder weighted(std::vector<int> w, Tie tie = Tie::Grevlex);

  bool less(const Mono& a, const Mono& b) const;
};

Mono leading_mono(const CPoly& f, const CMonoOrder& ord);

struct CGB {
  std::vector<CPoly> basis;
  bool complete{true};  // false when the S-pair budget ran out
};

CPoly normal_form(CPoly f, const std::vector<CPoly>& basis, const CMonoOrder& ord);

CGB commutative_gb(std::vector<CPoly> gens, const CMonoOrder& ord,
                   long budget = 100000);

// Krull dimension of k[x]/<monomial ideal>; -1 when 1 is in the ideal.
int krull_dim_monomial(const std::vector<Mono>& lms, int nvars);

// Krull dimension of k[x]/J via the initial ideal of a grevlex basis.
int krull_dim(const std::vector<CPoly>& gens, int nvars, long budget,
              bool* complete = nullptr);

std::string to_string(const CPoly& f, const std::vector<std::string>& names);

}  // namespace hornsys
