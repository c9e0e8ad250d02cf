#pragma once

#include "hornsys/intmatrix.hpp"
#include "hornsys/simplex.hpp"
#include "hornsys/weyl.hpp"

namespace hornsys {

struct HornFlags {
  bool full_rank_m{false};
  bool no_nonneg_kernel_vector{false};
  bool has_identity_top_block{false};      // top m rows of the stored B
  bool has_identity_anywhere{false};       // identity submatrix in any rows
  bool kappa_zero_on_identity_rows{false};
  bool top_m_rows_rank_m{false};
};

// Validated input pair (B, kappa) with derived Gale dual.  When an m x m
// identity submatrix is detected anywhere among the rows, the rows (and kappa)
// are permuted so the block sits on top; row_permutation records the move.
struct HornData {
  IntMatrix B;  // n x m, canonically reordered
  RatVec kappa;
  IntMatrix A;  // d x n Gale dual of the stored B
  int n{0}, m{0}, d{0};
  HornFlags flags;
  std::vector<int> row_permutation;  // stored row i came from input row row_permutation[i]
  RatVec beta;                       // A * kappa
  NonnegKernelVerdict kernel;        // witness when the span condition fails
};

// Throws RankDeficient when rank(B) < m, ShapeMismatch on bad kappa length.
HornData validate(const IntMatrix& B, const RatVec& kappa);

// q_k and p_k of the Horn construction, as polynomials in theta_1..theta_m.
// k is 1-based; empty products are 1.  Throws IndexOutOfRange.
std::pair<ThetaPoly, ThetaPoly> build_qp(const HornData& data, int k);

// Horn system: m generators q_k - z_k p_k in D_m.  Requires full rank and the
// no-nonnegative-kernel-vector hypothesis (HypothesisViolated otherwise).
DIdeal build_horn(const HornData& data);

// Normalized Horn system: m generators r_k(theta+e_k) dx_k - p_k(theta) in
// D_m.  Requires identity top block with zero kappa entries (NotNormalized).
DIdeal build_nhorn(const HornData& data);

// Lattice basis ideal: binomials dx^{(b_k)+} - dx^{(b_k)-} over columns of B.
DIdeal build_lattice_basis_ideal(const HornData& data);

// Euler operators E_i - (A kappa)_i, i = 1..d, in D_n.
std::vector<WeylOp> build_euler(const HornData& data);

// H(B,kappa): lattice basis ideal together with the Euler operators.
DIdeal build_h_ideal(const HornData& data);

struct CorrespondenceReport {
  bool pass{false};
  bool skipped{false};  // non-integral kappa
  std::string detail;
};

// Checks that the truncated Horn series, pushed through x^kappa g(x^{b_1},...),
// is annihilated by every generator of H(B,kappa) up to the truncation order.
CorrespondenceReport verify_solution_correspondence(const HornData& data, int order);

// Same check against externally supplied series coefficients u -> c_u
// (used for negative controls).
CorrespondenceReport check_series_annihilation(const HornData& data,
                                               const std::map<Mono, Rational>& coeffs,
                                               int order);

// Truncated series solution of the Horn recurrences, c_0 = 1, supported on
// |u| < order.  Empty detail on success.
std::pair<std::map<Mono, Rational>, std::string> horn_series_coefficients(
    const HornData& data, int order);

}  // namespace hornsys
