#pragma once

#include <optional>

#include "hornsys/intmatrix.hpp"

namespace hornsys {

// Decides feasibility of { y >= 0, D*y <= b } by exact two-phase primal
// simplex with Bland's rule; returns a feasible point if one exists.
std::optional<RatVec> lp_feasible_point(const std::vector<RatVec>& D, const RatVec& b);

struct NonnegKernelVerdict {
  bool exists{false};
  std::vector<Int> witness;  // nonzero, componentwise >= 0, equal to B*coeffs
  std::vector<Int> coeffs;
};

// Does the Z-column span of B contain a nonzero vector with all entries
// nonnegative?  Decided one coordinate at a time via exact rational LP
// feasibility; a rational certificate is scaled to an integer one.
NonnegKernelVerdict has_nonneg_kernel_vector(const IntMatrix& B);

}  // namespace hornsys
