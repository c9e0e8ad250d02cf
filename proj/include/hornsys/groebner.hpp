#pragma once

#include <optional>

#include "hornsys/weyl.hpp"

namespace hornsys {

inline constexpr long kDefaultBudget = 100000;

// Admissible orders on D_n monomials.  Weight-refined orders require
// u + v >= 0 componentwise; weights with negative components are handled by
// the homogenization path inside weyl_gb.
struct TermOrder {
  enum class Kind { Grevlex, Lex, Elimination, WeightRefined };
  enum class Tie { Grevlex, Lex };

  Kind kind{Kind::Grevlex};
  int n{0};
  std::vector<int> u, v;   // length n each (WeightRefined)
  std::vector<int> drop;   // 1-based dx indices (Elimination)
  Tie tie{Tie::Grevlex};

  static TermOrder grevlex(int n);
  static TermOrder lex(int n);
  static TermOrder elimination(int n, std::vector<int> drop_dx);
  // Throws InvalidOrder unless u+v >= 0 componentwise.
  static TermOrder weight_refined(int n, std::vector<int> u, std::vector<int> v,
                                  Tie tie = Tie::Grevlex);

  bool needs_homogenization() const;
  long weight(const Mono& ab) const;
  // Total order on 2n-monomials; only valid when !needs_homogenization().
  bool less(const Mono& a, const Mono& b) const;
};

struct GBasis {
  TermOrder order;
  std::vector<WeylOp> elements;
  bool reduced{false};
  bool complete{true};  // false when the S-pair budget was exhausted
};

// Reduced left Groebner basis.  Orders with negative weight components run
// through the homogenized Weyl algebra and are returned dehomogenized
// (reduced flag false).
GBasis weyl_gb(const DIdeal& ideal, const TermOrder& ord, long budget = kDefaultBudget);

// Full normal form of f against basis under ord (plain orders only).
WeylOp weyl_normal_form(WeylOp f, const std::vector<WeylOp>& basis, const TermOrder& ord);

bool ideal_member(const WeylOp& f, const GBasis& gb);

Mono leading_mono(const WeylOp& f, const TermOrder& ord);

// Sum of the terms of f with maximal u.a + v.b.
WeylOp initial_form(const WeylOp& f, const std::vector<int>& u, const std::vector<int>& v);

struct InitialIdeal {
  // True when some u_i + v_i > 0: generators live in the commutative graded
  // ring C[x, xi] (still carried in WeylOp term layout).
  bool commutative{false};
  std::vector<WeylOp> gens;
  bool complete{true};
};

InitialIdeal initial_ideal(const DIdeal& ideal, const std::vector<int>& u,
                           const std::vector<int>& v, long budget = kDefaultBudget);

struct EliminationResult {
  std::vector<WeylOp> gens;  // generators of ideal ∩ C[x]<dx_j : j not dropped>
  bool complete{true};
};

// Intersection with the subalgebra keeping all x's and the non-dropped dx's;
// drop must consist of dx indices (1-based).
EliminationResult eliminate(const DIdeal& ideal, const std::vector<int>& drop_dx,
                            long budget = kDefaultBudget);

// --- Groebner bases over the rational function field Q(x) ------------------

// Elements are stored with polynomial x-coefficients, primitive and with
// deterministic sign; the leading monomial is the grevlex-largest dx-monomial.
struct RatWeylGB {
  std::vector<WeylOp> elements;
  bool complete{true};
};

RatWeylGB rational_weyl_gb(const DIdeal& ideal, long budget = kDefaultBudget);

// Leading dx-monomials (length-n exponent vectors).
std::vector<Mono> rat_leading_dx(const RatWeylGB& gb, int n);

// Monomials under the staircase; nullopt when infinitely many.
std::optional<std::vector<Mono>> standard_monomials(const std::vector<Mono>& lms, int n);

}  // namespace hornsys
