#include "hornsys/restriction.hpp"

#include <cassert>

#include "hornsys/errors.hpp"

namespace hornsys {

namespace {

// weight vectors u = (0_m, -1_d), v = (0_m, 1_d)
std::pair<std::vector<int>, std::vector<int>> slice_weight(int n, int m) {
  std::vector<int> u(n, 0), v(n, 0);
  for (int i = m; i < n; ++i) {
    u[i] = -1;
    v[i] = 1;
  }
  return {u, v};
}

}  // namespace

std::vector<SliceCertificate> bfunction_divides_s_certificate(const HornData& data,
                                                              long budget) {
  if (!data.flags.top_m_rows_rank_m)
    throw HypothesisViolated("certificate requires the top m rows of B to have rank m");
  int n = data.n, m = data.m, d = data.d;

  // shift x_j -> x_j + 1 for all j > m
  DIdeal shifted;
  shifted.n = n;
  for (const WeylOp& g : build_h_ideal(data).generators) {
    WeylOp s = g;
    for (int j = m + 1; j <= n; ++j) s = substitute_x_shift(s, j, 1);
    shifted.generators.push_back(s);
  }
  TermOrder ord = TermOrder::grevlex(n);
  GBasis gb = weyl_gb(shifted, ord, budget);
  if (!gb.complete)
    throw Inconclusive("Groebner budget exhausted on the shifted system");

  // square system over the last d columns of the Gale dual
  IntMatrix C(d, d);
  for (int r = 0; r < d; ++r)
    for (int i = 0; i < d; ++i) C.at(r, i) = data.A.at(i, m + r);

  auto [u, v] = slice_weight(n, m);
  std::vector<SliceCertificate> out;
  for (int j = m + 1; j <= n; ++j) {
    RatVec e(d, Rational(0));
    e[j - m - 1] = 1;
    auto nu = solve_rational(C, e);
    if (!nu) throw std::logic_error("Gale dual column block unexpectedly singular");

    RatVec nuA(m + d);  // only the first m entries are used below
    for (int k = 0; k < n; ++k) {
      Rational s = 0;
      for (int i = 0; i < d; ++i) s += (*nu)[i] * Rational(data.A.at(i, k));
      if (k < m) nuA[k] = s;
    }
    Rational nub = 0;
    for (int i = 0; i < d; ++i) nub += (*nu)[i] * data.beta[i];

    WeylOp w = WeylOp::theta(n, j);
    for (int k = 1; k <= m; ++k)
      if (nuA[k - 1] != 0)
        w = w + nuA[k - 1] * mul(WeylOp::x(n, j), WeylOp::theta(n, k));
    w = w + mul(WeylOp::x(n, j), mul(WeylOp::x(n, j), WeylOp::dx(n, j)));
    w = w - nub * WeylOp::x(n, j);

    if (!weyl_normal_form(w, gb.elements, ord).is_zero())
      throw std::logic_error("certificate element is not a member of the shifted ideal");
    WeylOp init = initial_form(w, u, v);
    if (!(init == WeylOp::theta(n, j)))
      throw std::logic_error("certificate initial form is not theta_j");
    out.push_back({j, *nu, w, init});
  }
  return out;
}

ThetaPoly substitute_theta(const HornData& data, int j) {
  if (!data.flags.has_identity_top_block || !data.flags.kappa_zero_on_identity_rows)
    throw NotNormalized("substitute_theta requires normalized data");
  if (j <= data.m || j > data.n)
    throw IndexOutOfRange("substitute_theta: index must lie in m+1..n");
  ThetaPoly f = CPoly::constant(data.m, data.kappa[j - 1]);
  for (int i = 0; i < data.m; ++i)
    if (data.B.at(j - 1, i) != 0)
      f = f + Rational(data.B.at(j - 1, i)) * CPoly::var(data.m, i);
  return f;
}

std::vector<WeylOp> explicit_nhorn_from_lattice(const HornData& data) {
  if (!data.flags.has_identity_top_block || !data.flags.kappa_zero_on_identity_rows)
    throw NotNormalized("explicit construction requires normalized data");
  int n = data.n, m = data.m;
  DIdeal lattice = build_lattice_basis_ideal(data);
  DIdeal nhorn = build_nhorn(data);

  std::vector<ThetaPoly> tj;  // rewrites for j = m+1..n
  for (int j = m + 1; j <= n; ++j) tj.push_back(substitute_theta(data, j));

  std::vector<WeylOp> out;
  for (int k = 0; k < m; ++k) {
    Mono mu(2 * n, 0);
    for (int j = m; j < n; ++j) {
      Int b = data.B.at(j, k);
      mu[j] = static_cast<int>(Int(abs(b)).get_si());
    }
    WeylOp w = mul(WeylOp::term(n, mu, 1), lattice.generators[k]);

    WeylOp result(m);
    for (const auto& [ab, c] : w.t) {
      Mono front(2 * m, 0);
      for (int i = 0; i < m; ++i) {
        front[i] = ab[i];
        front[m + i] = ab[n + i];
      }
      ThetaPoly g = CPoly::constant(m, 1);
      for (int j = m; j < n; ++j) {
        int a = ab[j], b = ab[n + j];
        assert(a >= b);
        for (int l = 0; l < b; ++l)
          g = g * (tj[j - m] - CPoly::constant(m, l));
        // leftover x_j^{a-b} becomes 1 on the slice
      }
      result = result + mul(WeylOp::term(m, front, c), theta_to_weyl(g));
    }
    if (!(result == nhorn.generators[k]))
      throw MismatchWithNHorn("explicit generator " + std::to_string(k + 1) +
                              " differs: " + to_string(result - nhorn.generators[k]));
    out.push_back(result);
  }
  return out;
}

std::vector<WeylOp> restriction_via_elimination(const HornData& data, long budget) {
  int n = data.n, m = data.m;
  std::vector<int> drop;
  for (int j = m + 1; j <= n; ++j) drop.push_back(j);
  EliminationResult er = eliminate(build_h_ideal(data), drop, budget);
  if (!er.complete)
    throw Inconclusive("Groebner budget exhausted during elimination");
  std::vector<WeylOp> out;
  for (const WeylOp& g : er.gens) {
    WeylOp h = restrict_vars(specialize_x_one(g, drop), m);
    if (!h.is_zero()) out.push_back(h);
  }
  return out;
}

IdealEqualityReport verify_ideal_equality(const std::vector<WeylOp>& left,
                                          const std::vector<WeylOp>& right, int n,
                                          long budget) {
  TermOrder ord = TermOrder::grevlex(n);
  GBasis gl = weyl_gb({n, left}, ord, budget);
  GBasis gr = weyl_gb({n, right}, ord, budget);
  if (!gl.complete || !gr.complete) return {EqualityVerdict::Inconclusive, {}};
  for (const WeylOp& g : right)
    if (!weyl_normal_form(g, gl.elements, ord).is_zero())
      return {EqualityVerdict::RightNotContained, g};
  for (const WeylOp& g : left)
    if (!weyl_normal_form(g, gr.elements, ord).is_zero())
      return {EqualityVerdict::LeftNotContained, g};
  return {EqualityVerdict::Equal, {}};
}

RestrictionReport verify_restriction_theorem(const HornData& data, long budget) {
  RestrictionReport rep;
  rep.certificate = bfunction_divides_s_certificate(data, budget);
  rep.intersection_generators = restriction_via_elimination(data, budget);
  rep.explicit_generators = explicit_nhorn_from_lattice(data);
  DIdeal nhorn = build_nhorn(data);
  rep.equality = verify_ideal_equality(rep.intersection_generators, nhorn.generators,
                                       data.m, budget);
  rep.routes_agree =
      verify_ideal_equality(rep.explicit_generators, rep.intersection_generators,
                            data.m, budget)
          .verdict == EqualityVerdict::Equal;
  return rep;
}

}  // namespace hornsys
