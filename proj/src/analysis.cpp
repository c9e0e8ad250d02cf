#include "hornsys/analysis.hpp"

#include "hornsys/errors.hpp"

namespace hornsys {

int char_dimension(const DIdeal& ideal, long budget) {
  int n = ideal.n;
  std::vector<int> u(n, 0), v(n, 1);
  InitialIdeal init = initial_ideal(ideal, u, v, budget);
  if (!init.complete)
    throw Inconclusive("Groebner budget exhausted while computing initial forms");

  // initial forms are commutative symbols in x_1..x_n, xi_1..xi_n
  std::vector<CPoly> sym;
  for (const WeylOp& g : init.gens) {
    CPoly f(2 * n);
    f.t = g.t;
    sym.push_back(f);
  }
  bool complete = true;
  int dim = krull_dim(sym, 2 * n, budget, &complete);
  if (!complete)
    throw Inconclusive("Groebner budget exhausted in the symbol ring");
  if (dim < 0) throw ImproperIdeal("ideal contains 1; the module is zero");
  if (dim < n)
    throw std::logic_error("computed characteristic dimension below n");
  return dim;
}

RankVerdict holonomic_rank(const DIdeal& ideal, long budget) {
  RatWeylGB gb = rational_weyl_gb(ideal, budget);
  if (!gb.complete)
    throw Inconclusive("Groebner budget exhausted over the rational function field");
  auto lms = rat_leading_dx(gb, ideal.n);
  auto std_mons = standard_monomials(lms, ideal.n);
  if (!std_mons) return {RankVerdict::Kind::Infinite, 0, {}};
  return {RankVerdict::Kind::Finite, static_cast<long>(std_mons->size()), *std_mons};
}

bool regularity_row_sum(const HornData& data) {
  for (const Int& s : row_sums(data.B))
    if (s != 0) return false;
  return true;
}

bool check_a_homogeneous(const DIdeal& ideal, const IntMatrix& A) {
  int n = ideal.n;
  if (A.cols != n) throw DimensionMismatch("grading matrix width must be n");
  for (const WeylOp& g : ideal.generators) {
    bool have = false;
    std::vector<Int> deg(A.rows);
    for (const auto& [ab, c] : g.t) {
      std::vector<Int> d(A.rows, 0);
      for (int r = 0; r < A.rows; ++r)
        for (int i = 0; i < n; ++i)
          d[r] += Int(ab[n + i] - ab[i]) * A.at(r, i);
      if (!have) {
        deg = d;
        have = true;
      } else if (d != deg) {
        return false;
      }
    }
  }
  return true;
}

ConsistencyReport holonomicity_consistency(const HornData& data, long budget) {
  ConsistencyReport rep;
  rep.h_char_dim = char_dimension(build_h_ideal(data), budget);
  rep.nhorn_char_dim = char_dimension(build_nhorn(data), budget);
  rep.h_holonomic = rep.h_char_dim == data.n;
  rep.nhorn_holonomic = rep.nhorn_char_dim == data.m;
  rep.agree = rep.h_holonomic == rep.nhorn_holonomic;
  return rep;
}

}  // namespace hornsys
