#pragma once

#include <optional>
#include <vector>

#include "hornsys/rational.hpp"

namespace hornsys {

// Dense arbitrary-precision integer matrix, row-major.
struct IntMatrix {
  int rows{0};
  int cols{0};
  std::vector<Int> e;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c) {}
  IntMatrix(int r, int c, std::vector<long> entries);

  static IntMatrix identity(int n);

  Int& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }

  bool operator==(const IntMatrix&) const = default;
};

IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& m);
bool is_zero(const IntMatrix& m);

// Determinant of a square matrix (Bareiss fraction-free elimination).
Int det(const IntMatrix& m);

int rank(const IntMatrix& m);

// U*M*V = S, U and V unimodular, S diagonal with nonnegative entries and
// divisibility chain d1 | d2 | ...
struct SNFResult {
  IntMatrix U, S, V;
};
SNFResult smith_normal_form(const IntMatrix& m);

// Elementary divisors (nonzero diagonal of the Smith form).
std::vector<Int> elementary_divisors(const IntMatrix& m);

// Row-style Hermite normal form: unimodular row operations only; pivots
// positive, entries above each pivot reduced into [0, pivot); zero rows last.
IntMatrix hermite_rows(const IntMatrix& m);

// Gale dual of an n x m matrix B of full column rank m: the (n-m) x n matrix A
// with A*B = 0 whose rows are a basis of the saturated left kernel of B,
// canonicalized by Hermite row reduction. Throws RankDeficient.
IntMatrix gale_dual(const IntMatrix& B);

// k-th entry is the k-th column summed over all rows.
std::vector<Int> row_sums(const IntMatrix& B);

std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v);
std::vector<Rational> mat_vec(const IntMatrix& m, const std::vector<Rational>& v);

// Solves M * x = b over the rationals; empty optional if inconsistent.
// M need not be square; when the solution is non-unique an arbitrary one is
// returned (free variables set to zero).
std::optional<RatVec> solve_rational(const IntMatrix& m, const RatVec& b);

}  // namespace hornsys
