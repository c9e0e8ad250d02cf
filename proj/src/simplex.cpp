#include "hornsys/simplex.hpp"

#include <cassert>

#include "hornsys/errors.hpp"

namespace hornsys {

namespace {

// Dictionary-based simplex state.  Variable ids: 0 is the phase-one auxiliary
// x0, 1..nv are the structural variables, nv+1..nv+nc the slacks.
struct Dictionary {
  std::vector<int> basic;              // variable id per row
  std::vector<int> nonbasic;           // variable id per column
  std::vector<RatVec> row;             // row[i][0] = const, row[i][1+j] = coeff of nonbasic[j]
  RatVec obj;                          // same layout

  void pivot(int r, int c) {
    int cols = static_cast<int>(nonbasic.size());
    Rational a = row[r][1 + c];
    assert(a != 0);
    // solve row r for the entering variable
    RatVec nr(cols + 1);
    nr[0] = -row[r][0] / a;
    for (int j = 0; j < cols; ++j)
      if (j != c) nr[1 + j] = -row[r][1 + j] / a;
    nr[1 + c] = Rational(1) / a;  // coefficient of the leaving variable
    std::swap(basic[r], nonbasic[c]);
    row[r] = nr;
    for (size_t i = 0; i < row.size(); ++i) {
      if (static_cast<int>(i) == r) continue;
      substitute(row[i], nr, c);
    }
    substitute(obj, nr, c);
  }

  static void substitute(RatVec& target, const RatVec& nr, int c) {
    Rational f = target[1 + c];
    if (f == 0) return;
    target[1 + c] = 0;
    for (size_t j = 0; j < target.size(); ++j) target[j] += f * nr[j];
  }

  // Bland's rule: entering = smallest-id nonbasic with positive objective
  // coefficient; leaving = tightest ratio, ties by smallest basic id.
  bool bland_step() {
    int cols = static_cast<int>(nonbasic.size());
    int c = -1;
    for (int j = 0; j < cols; ++j)
      if (obj[1 + j] > 0 && (c < 0 || nonbasic[j] < nonbasic[c])) c = j;
    if (c < 0) return false;  // optimal
    int r = -1;
    Rational best;
    for (size_t i = 0; i < row.size(); ++i) {
      if (row[i][1 + c] >= 0) continue;
      Rational bound = -row[i][0] / row[i][1 + c];
      if (r < 0 || bound < best ||
          (bound == best && basic[i] < basic[r])) {
        r = static_cast<int>(i);
        best = bound;
      }
    }
    if (r < 0) throw std::logic_error("phase-one objective unbounded");
    pivot(r, c);
    return true;
  }
};

}  // namespace

std::optional<RatVec> lp_feasible_point(const std::vector<RatVec>& D, const RatVec& b) {
  int nc = static_cast<int>(D.size());
  int nv = nc ? static_cast<int>(D[0].size()) : 0;
  if (static_cast<int>(b.size()) != nc)
    throw DimensionMismatch("lp_feasible_point shape mismatch");

  bool trivially_feasible = true;
  int worst = -1;
  for (int i = 0; i < nc; ++i) {
    if (b[i] < 0) trivially_feasible = false;
    if (worst < 0 || b[i] < b[worst]) worst = i;
  }
  if (trivially_feasible) return RatVec(nv, Rational(0));

  Dictionary d;
  d.nonbasic.resize(nv + 1);
  d.nonbasic[0] = 0;  // auxiliary x0
  for (int j = 0; j < nv; ++j) d.nonbasic[1 + j] = 1 + j;
  d.basic.resize(nc);
  d.row.assign(nc, RatVec(nv + 2));
  for (int i = 0; i < nc; ++i) {
    d.basic[i] = 1 + nv + i;  // slack
    d.row[i][0] = b[i];
    d.row[i][1] = 1;  // + x0
    for (int j = 0; j < nv; ++j) d.row[i][2 + j] = -D[i][j];
  }
  d.obj.assign(nv + 2, Rational(0));
  d.obj[1] = -1;  // maximize -x0

  d.pivot(worst, 0);  // make the dictionary feasible
  while (d.bland_step()) {}

  if (d.obj[0] != 0) return std::nullopt;  // optimum of -x0 is negative

  RatVec y(nv, Rational(0));
  for (size_t i = 0; i < d.row.size(); ++i) {
    int id = d.basic[i];
    if (id >= 1 && id <= nv) y[id - 1] = d.row[i][0];
  }
  // if x0 is basic at value zero it simply stays zero in the solution
  return y;
}

NonnegKernelVerdict has_nonneg_kernel_vector(const IntMatrix& B) {
  int n = B.rows, m = B.cols;
  for (int i = 0; i < n; ++i) {
    // find c with B*c >= e_i (componentwise >= 0, entry i >= 1); c = u - v
    std::vector<RatVec> D(n, RatVec(2 * m));
    RatVec rhs(n);
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < m; ++k) {
        D[j][k] = Rational(-B.at(j, k));
        D[j][m + k] = Rational(B.at(j, k));
      }
      rhs[j] = (j == i) ? Rational(-1) : Rational(0);
    }
    auto y = lp_feasible_point(D, rhs);
    if (!y) continue;
    RatVec c(m);
    for (int k = 0; k < m; ++k) c[k] = (*y)[k] - (*y)[m + k];
    Int scale = 1;
    for (int k = 0; k < m; ++k) scale = lcm(scale, c[k].get_den());
    NonnegKernelVerdict v;
    v.exists = true;
    v.coeffs.resize(m);
    for (int k = 0; k < m; ++k) {
      Rational s = c[k] * Rational(scale);
      assert(s.get_den() == 1);
      v.coeffs[k] = s.get_num();
    }
    v.witness = mat_vec(B, v.coeffs);
    for (const Int& w : v.witness) assert(w >= 0);
    assert(v.witness[i] >= 1);
    return v;
  }
  return {};
}

}  // namespace hornsys
