#pragma once

#include "hornsys/groebner.hpp"
#include "hornsys/systems.hpp"

namespace hornsys {

// One witness that theta_j lies in the initial ideal of the shifted system.
struct SliceCertificate {
  int j{0};              // 1-based variable index, j > m
  RatVec nu;             // combination of Euler rows realizing theta_j
  WeylOp witness;        // verified member of the shifted ideal
  WeylOp initial_form;   // its weight-(-w,w) initial form, literally theta_j
};

// For each j in m+1..n, builds the explicit ideal member whose initial form
// under the weight (-w, w), w = (0_m, 1_d), is theta_j, after the change of
// variables x_j -> x_j + 1 for j > m.  Membership is checked by Groebner
// reduction.  Establishes that the restriction b-function divides s.
// Throws HypothesisViolated when the top m rows of B have rank < m,
// Inconclusive when the GB budget runs out.
std::vector<SliceCertificate> bfunction_divides_s_certificate(
    const HornData& data, long budget = kDefaultBudget);

// kappa_j + sum_{i<=m} B_{ji} theta_i as a polynomial in theta_1..theta_m;
// the rewrite of theta_j modulo the Euler operators.  j is 1-based, j > m.
// Throws NotNormalized / IndexOutOfRange.
ThetaPoly substitute_theta(const HornData& data, int j);

// Per column k: premultiply the lattice binomial by the monomial
// prod_{j>m} x_j^{|B_{jk}|}, rewrite every theta_j (j > m) through
// substitute_theta, set x_{m+1} = ... = x_n = 1.  The results must coincide
// with the build_nhorn generators term by term; MismatchWithNHorn otherwise.
std::vector<WeylOp> explicit_nhorn_from_lattice(const HornData& data);

// Generators of the restricted ideal: eliminate dx_{m+1}..dx_n from the
// lattice basis system, then substitute x_j = 1 for j > m.  Elements live in
// the Weyl algebra in the first m variables.  Throws Inconclusive on budget
// exhaustion.
std::vector<WeylOp> restriction_via_elimination(const HornData& data,
                                                long budget = kDefaultBudget);

enum class EqualityVerdict { Equal, LeftNotContained, RightNotContained, Inconclusive };

struct IdealEqualityReport {
  EqualityVerdict verdict{EqualityVerdict::Inconclusive};
  std::optional<WeylOp> witness;  // a generator outside the other ideal
};

// Mutual containment of two left ideals in D_n via Groebner reduction.
// Left = first argument; LeftNotContained means some left generator fails to
// reduce to zero against the right ideal's basis.
IdealEqualityReport verify_ideal_equality(const std::vector<WeylOp>& left,
                                          const std::vector<WeylOp>& right, int n,
                                          long budget = kDefaultBudget);

struct RestrictionReport {
  std::vector<SliceCertificate> certificate;
  std::vector<WeylOp> explicit_generators;
  std::vector<WeylOp> intersection_generators;
  IdealEqualityReport equality;   // restriction ideal vs normalized Horn ideal
  bool routes_agree{false};       // explicit route generates the same ideal
};

// Restriction ideal (computed by elimination and specialization) equals the
// normalized Horn ideal; both routes to the restriction agree.
RestrictionReport verify_restriction_theorem(const HornData& data,
                                             long budget = kDefaultBudget);

}  // namespace hornsys
