#include "hornsys/intmatrix.hpp"

#include <algorithm>
#include <cassert>

#include "hornsys/errors.hpp"

namespace hornsys {

IntMatrix::IntMatrix(int r, int c, std::vector<long> entries) : IntMatrix(r, c) {
  if (entries.size() != static_cast<size_t>(r) * c)
    throw ShapeMismatch("entry list length does not match dimensions");
  for (size_t i = 0; i < entries.size(); ++i) e[i] = entries[i];
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw DimensionMismatch("matrix product shape mismatch");
  IntMatrix r(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix r(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
  return r;
}

bool is_zero(const IntMatrix& m) {
  return std::all_of(m.e.begin(), m.e.end(), [](const Int& x) { return x == 0; });
}

Int det(const IntMatrix& m) {
  if (m.rows != m.cols) throw DimensionMismatch("determinant of non-square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

namespace {

void swap_rows(IntMatrix& m, int i, int j) {
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMatrix& m, int i, int j) {
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

// row i += f * row j
void add_row(IntMatrix& m, int i, int j, const Int& f) {
  for (int c = 0; c < m.cols; ++c) m.at(i, c) += f * m.at(j, c);
}

void add_col(IntMatrix& m, int i, int j, const Int& f) {
  for (int r = 0; r < m.rows; ++r) m.at(r, i) += f * m.at(r, j);
}

void negate_row(IntMatrix& m, int i) {
  for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& m) {
  int r = m.rows, c = m.cols;
  SNFResult res{IntMatrix::identity(r), m, IntMatrix::identity(c)};
  IntMatrix& U = res.U;
  IntMatrix& S = res.S;
  IntMatrix& V = res.V;
  int lim = std::min(r, c);
  for (int t = 0; t < lim; ++t) {
  restart:
    // bring the absolutely smallest nonzero entry of the trailing block to (t,t)
    int pi = -1, pj = -1;
    for (int i = t; i < r; ++i)
      for (int j = t; j < c; ++j)
        if (S.at(i, j) != 0 &&
            (pi < 0 || cmp(abs(S.at(i, j)), abs(S.at(pi, pj))) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;  // trailing block is zero
    if (pi != t) { swap_rows(S, pi, t); swap_rows(U, pi, t); }
    if (pj != t) { swap_cols(S, pj, t); swap_cols(V, pj, t); }

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < r; ++i) {
        if (S.at(i, t) == 0) continue;
        Int q = S.at(i, t) / S.at(t, t);  // truncated division
        if (q != 0) { add_row(S, i, t, -q); add_row(U, i, t, -q); }
        if (S.at(i, t) != 0) {
          swap_rows(S, i, t);
          swap_rows(U, i, t);
          clean = false;
        }
      }
      for (int j = t + 1; j < c; ++j) {
        if (S.at(t, j) == 0) continue;
        Int q = S.at(t, j) / S.at(t, t);
        if (q != 0) { add_col(S, j, t, -q); add_col(V, j, t, -q); }
        if (S.at(t, j) != 0) {
          swap_cols(S, j, t);
          swap_cols(V, j, t);
          clean = false;
        }
      }
    }
    // divisibility fix-up: every later entry must be divisible by the pivot
    for (int i = t + 1; i < r; ++i)
      for (int j = t + 1; j < c; ++j)
        if (S.at(i, j) % S.at(t, t) != 0) {
          add_row(S, t, i, 1);
          add_row(U, t, i, 1);
          goto restart;
        }
    if (S.at(t, t) < 0) { negate_row(S, t); negate_row(U, t); }
  }
  return res;
}

std::vector<Int> elementary_divisors(const IntMatrix& m) {
  SNFResult f = smith_normal_form(m);
  std::vector<Int> d;
  for (int t = 0; t < std::min(m.rows, m.cols); ++t)
    if (f.S.at(t, t) != 0) d.push_back(f.S.at(t, t));
  return d;
}

int rank(const IntMatrix& m) {
  return static_cast<int>(elementary_divisors(m).size());
}

IntMatrix hermite_rows(const IntMatrix& m) {
  IntMatrix h = m;
  int pivot_row = 0;
  for (int col = 0; col < h.cols && pivot_row < h.rows; ++col) {
    // euclidean elimination below pivot_row in this column
    while (true) {
      int best = -1;
      for (int i = pivot_row; i < h.rows; ++i)
        if (h.at(i, col) != 0 &&
            (best < 0 || cmp(abs(h.at(i, col)), abs(h.at(best, col))) < 0))
          best = i;
      if (best < 0) break;
      if (best != pivot_row) swap_rows(h, best, pivot_row);
      bool others = false;
      for (int i = pivot_row + 1; i < h.rows; ++i) {
        if (h.at(i, col) == 0) continue;
        Int q = h.at(i, col) / h.at(pivot_row, col);
        add_row(h, i, pivot_row, -q);
        if (h.at(i, col) != 0) others = true;
      }
      if (!others) break;
    }
    if (h.at(pivot_row, col) == 0) continue;
    if (h.at(pivot_row, col) < 0) negate_row(h, pivot_row);
    // reduce entries above the pivot into [0, pivot)
    for (int i = 0; i < pivot_row; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(),
                 h.at(pivot_row, col).get_mpz_t());
      if (q != 0) add_row(h, i, pivot_row, -q);
    }
    ++pivot_row;
  }
  return h;
}

IntMatrix gale_dual(const IntMatrix& B) {
  int n = B.rows, m = B.cols;
  SNFResult f = smith_normal_form(B);
  int rk = 0;
  for (int t = 0; t < std::min(n, m); ++t)
    if (f.S.at(t, t) != 0) ++rk;
  if (rk < m) throw RankDeficient("gale_dual: matrix has column rank < m");
  int d = n - m;
  // U*B has zero rows from m on; those rows of U are a basis of the
  // saturated left kernel (they extend to a basis of Z^n).
  IntMatrix A(d, n);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < n; ++j) A.at(i, j) = f.U.at(m + i, j);
  A = hermite_rows(A);
  assert(is_zero(mul(A, B)));
  return A;
}

std::vector<Int> row_sums(const IntMatrix& B) {
  std::vector<Int> s(B.cols);
  for (int i = 0; i < B.rows; ++i)
    for (int j = 0; j < B.cols; ++j) s[j] += B.at(i, j);
  return s;
}

std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v) {
  if (static_cast<int>(v.size()) != m.cols)
    throw DimensionMismatch("mat_vec shape mismatch");
  std::vector<Int> r(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r[i] += m.at(i, j) * v[j];
  return r;
}

std::vector<Rational> mat_vec(const IntMatrix& m, const std::vector<Rational>& v) {
  if (static_cast<int>(v.size()) != m.cols)
    throw DimensionMismatch("mat_vec shape mismatch");
  std::vector<Rational> r(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r[i] += Rational(m.at(i, j)) * v[j];
  return r;
}

std::optional<RatVec> solve_rational(const IntMatrix& m, const RatVec& b) {
  if (static_cast<int>(b.size()) != m.rows)
    throw DimensionMismatch("solve_rational shape mismatch");
  int r = m.rows, c = m.cols;
  std::vector<RatVec> a(r, RatVec(c + 1));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) a[i][j] = Rational(m.at(i, j));
    a[i][c] = b[i];
  }
  std::vector<int> pivot_col(r, -1);
  int row = 0;
  for (int col = 0; col < c && row < r; ++col) {
    int p = -1;
    for (int i = row; i < r; ++i)
      if (a[i][col] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(a[p], a[row]);
    Rational inv = 1 / a[row][col];
    for (int j = col; j <= c; ++j) a[row][j] *= inv;
    for (int i = 0; i < r; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (int j = col; j <= c; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_col[row] = col;
    ++row;
  }
  for (int i = row; i < r; ++i)
    if (a[i][c] != 0) return std::nullopt;
  RatVec x(c, Rational(0));
  for (int i = 0; i < row; ++i) x[pivot_col[i]] = a[i][c];
  return x;
}

}  // namespace hornsys
