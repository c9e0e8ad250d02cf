#pragma once

#include "hornsys/groebner.hpp"
#include "hornsys/systems.hpp"

namespace hornsys {

// Dimension of the characteristic variety: take initial forms under the order
// filtration (weight 0 on x, 1 on dx), pass to the commutative symbol ring
// C[x, xi], return its Krull dimension.  The quotient module is holonomic
// exactly when the result equals n.  Throws ImproperIdeal when the ideal is
// the whole algebra (zero module), Inconclusive on budget exhaustion.  Values
// below n violate the Bernstein inequality and abort.
int char_dimension(const DIdeal& ideal, long budget = kDefaultBudget);

struct RankVerdict {
  enum class Kind { Finite, Infinite } kind{Kind::Infinite};
  long value{0};                     // meaningful when finite
  std::vector<Mono> std_monomials;   // dx-exponents under the staircase
};

// Holonomic rank: number of standard monomials of the ideal over the rational
// function field Q(x).  Throws Inconclusive on budget exhaustion.
RankVerdict holonomic_rank(const DIdeal& ideal, long budget = kDefaultBudget);

// True exactly when every column of B sums to zero over the rows.
bool regularity_row_sum(const HornData& data);

// True when every generator is homogeneous for the grading deg(dx_i) = a_i,
// deg(x_i) = -a_i given by the columns of A.
bool check_a_homogeneous(const DIdeal& ideal, const IntMatrix& A);

struct ConsistencyReport {
  int h_char_dim{0};      // lattice basis system, n variables
  int nhorn_char_dim{0};  // normalized Horn system, m variables
  bool h_holonomic{false};
  bool nhorn_holonomic{false};
  bool agree{false};
};

// Holonomicity of the lattice basis quotient and of the normalized Horn
// quotient must match; computes both characteristic dimensions.
ConsistencyReport holonomicity_consistency(const HornData& data,
                                           long budget = kDefaultBudget);

}  // namespace hornsys
