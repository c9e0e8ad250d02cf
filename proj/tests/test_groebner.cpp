#include "doctest.h"
#include "hornsys/errors.hpp"
#include "hornsys/groebner.hpp"

using namespace hornsys;

namespace {

WeylOp theta(int n, int i) { return WeylOp::theta(n, i); }

// every S-pair of a plain-order basis must reduce to zero
void check_spairs(const GBasis& gb) {
  REQUIRE(gb.complete);
  if (gb.order.needs_homogenization()) return;
  int n = gb.order.n;
  for (size_t i = 0; i < gb.elements.size(); ++i)
    for (size_t j = i + 1; j < gb.elements.size(); ++j) {
      const WeylOp &f = gb.elements[i], &g = gb.elements[j];
      Mono mf = leading_mono(f, gb.order), mg = leading_mono(g, gb.order);
      Mono l = mono_lcm(mf, mg);
      Rational cf = f.t.at(mf), cg = g.t.at(mg);
      WeylOp s = (Rational(1) / cf) * mul(WeylOp::term(n, mono_div(l, mf), 1), f) -
                 (Rational(1) / cg) * mul(WeylOp::term(n, mono_div(l, mg), 1), g);
      CHECK(weyl_normal_form(s, gb.elements, gb.order).is_zero());
    }
}

}  // namespace

TEST_CASE("term order admissibility") {
  CHECK_THROWS_AS(TermOrder::weight_refined(1, {-1}, {0}), InvalidOrder);
  TermOrder ok = TermOrder::weight_refined(1, {-1}, {1});
  CHECK(ok.needs_homogenization());
  TermOrder plain = TermOrder::weight_refined(1, {0}, {1});
  CHECK_FALSE(plain.needs_homogenization());
}

TEST_CASE("weyl groebner basis basics") {
  TermOrder ord = TermOrder::grevlex(1);

  // <dx1, x1 dx1 + 1> is the whole algebra
  DIdeal unit{1, {WeylOp::dx(1, 1), theta(1, 1) + WeylOp::constant(1, 1)}};
  GBasis g1 = weyl_gb(unit, ord);
  REQUIRE(g1.elements.size() == 1);
  CHECK(g1.elements[0] == WeylOp::constant(1, 1));

  DIdeal single{1, {WeylOp::dx(1, 1)}};
  GBasis g2 = weyl_gb(single, ord);
  REQUIRE(g2.elements.size() == 1);
  CHECK(g2.elements[0] == WeylOp::dx(1, 1));
  check_spairs(g2);

  // lattice system for the two-row column (1,-1), parameter c = 3:
  // membership of x2 dx1 + theta1 - 3
  DIdeal h{2,
           {WeylOp::dx(2, 1) - WeylOp::dx(2, 2),
            theta(2, 1) + theta(2, 2) - WeylOp::constant(2, 3)}};
  GBasis g3 = weyl_gb(h, TermOrder::grevlex(2));
  check_spairs(g3);
  WeylOp member = mul(WeylOp::x(2, 2), WeylOp::dx(2, 1)) + theta(2, 1) -
                  WeylOp::constant(2, 3);
  CHECK(ideal_member(member, g3));
  CHECK_FALSE(ideal_member(WeylOp::dx(2, 1), g3));
}

TEST_CASE("groebner runs are deterministic") {
  DIdeal h{2,
           {WeylOp::dx(2, 1) - WeylOp::dx(2, 2),
            theta(2, 1) + theta(2, 2) - WeylOp::constant(2, 3)}};
  GBasis a = weyl_gb(h, TermOrder::grevlex(2));
  GBasis b = weyl_gb(h, TermOrder::grevlex(2));
  REQUIRE(a.elements.size() == b.elements.size());
  for (size_t i = 0; i < a.elements.size(); ++i)
    CHECK(a.elements[i] == b.elements[i]);
}

TEST_CASE("generators reduce to zero against their basis") {
  DIdeal h{2,
           {WeylOp::dx(2, 1) - WeylOp::dx(2, 2),
            theta(2, 1) + theta(2, 2) - WeylOp::constant(2, 5)}};
  for (auto kind : {TermOrder::grevlex(2), TermOrder::lex(2),
                    TermOrder::elimination(2, {2})}) {
    GBasis g = weyl_gb(h, kind);
    check_spairs(g);
    for (const WeylOp& gen : h.generators)
      CHECK(weyl_normal_form(gen, g.elements, g.order).is_zero());
  }
}

TEST_CASE("initial forms and initial ideals") {
  // weight e_2 on dx: theta2 survives against lower-order terms
  WeylOp f = theta(2, 2) + WeylOp::x(2, 2);
  WeylOp init = initial_form(f, {0, -1}, {0, 1});
  CHECK(init == theta(2, 2));

  InitialIdeal triv = initial_ideal({1, {WeylOp::dx(1, 1)}}, {0}, {1});
  REQUIRE(triv.gens.size() == 1);
  CHECK(triv.gens[0] == WeylOp::dx(1, 1));
  CHECK(triv.commutative);

  // order filtration of theta1 - c: top symbol x1 xi1
  InitialIdeal sym =
      initial_ideal({1, {theta(1, 1) - WeylOp::constant(1, 4)}}, {0}, {1});
  REQUIRE(sym.gens.size() == 1);
  CHECK(sym.gens[0] == theta(1, 1));  // as a commutative symbol: x1*xi1
  CHECK(sym.commutative);
}

TEST_CASE("initial ideal under a mixed-sign weight via homogenization") {
  // shifted two-variable system: theta2 must appear in the initial ideal
  // under weight -e_2 on x, +e_2 on dx
  WeylOp g1 = WeylOp::dx(2, 1) - WeylOp::dx(2, 2);
  WeylOp e = theta(2, 1) + theta(2, 2) - WeylOp::constant(2, 2);
  // change of variables x2 -> x2 + 1 applied to the Euler operator
  WeylOp es = substitute_x_shift(e, 2, 1);
  DIdeal j{2, {substitute_x_shift(g1, 2, 1), es}};
  InitialIdeal init = initial_ideal(j, {0, -1}, {0, 1});
  CHECK_FALSE(init.commutative);
  GBasis check = weyl_gb({2, init.gens}, TermOrder::grevlex(2));
  CHECK(ideal_member(theta(2, 2), check));
}

TEST_CASE("elimination of dx variables") {
  DIdeal h{2,
           {WeylOp::dx(2, 1) - WeylOp::dx(2, 2),
            theta(2, 1) + theta(2, 2) - WeylOp::constant(2, 3)}};
  EliminationResult er = eliminate(h, {2});
  REQUIRE(er.complete);
  WeylOp want = mul(WeylOp::x(2, 2), WeylOp::dx(2, 1)) + theta(2, 1) -
                WeylOp::constant(2, 3);
  GBasis span = weyl_gb({2, er.gens}, TermOrder::grevlex(2));
  CHECK(ideal_member(want, span));
  for (const WeylOp& g : er.gens)
    for (const auto& [ab, c] : g.t) CHECK(ab[3] == 0);

  // ideal already free of the dropped variable is unchanged up to reduction
  DIdeal easy{2, {WeylOp::dx(2, 1)}};
  EliminationResult er2 = eliminate(easy, {2});
  REQUIRE(er2.gens.size() == 1);
  CHECK(er2.gens[0] == WeylOp::dx(2, 1));

  // a principal ideal generated by dx2 meets the subalgebra trivially:
  // every term of any multiple keeps a dx2 factor
  EliminationResult er3 = eliminate({2, {WeylOp::dx(2, 2)}}, {2});
  CHECK(er3.gens.empty());
}

TEST_CASE("rational function coefficient groebner and standard monomials") {
  // Gauss operator: second order, rank two
  WeylOp th = theta(1, 1);
  WeylOp gauss = mul(th, th + WeylOp::constant(1, 4)) -
                 mul(WeylOp::x(1, 1),
                     mul(th + WeylOp::constant(1, 2), th + WeylOp::constant(1, 3)));
  RatWeylGB gb = rational_weyl_gb({1, {gauss}});
  REQUIRE(gb.complete);
  auto lms = rat_leading_dx(gb, 1);
  auto mons = standard_monomials(lms, 1);
  REQUIRE(mons.has_value());
  CHECK(mons->size() == 2);

  RatWeylGB both = rational_weyl_gb({2, {WeylOp::dx(2, 1), WeylOp::dx(2, 2)}});
  auto m2 = standard_monomials(rat_leading_dx(both, 2), 2);
  REQUIRE(m2.has_value());
  CHECK(m2->size() == 1);

  // x1 dx1: x1 is a unit in the coefficient field
  RatWeylGB tgb = rational_weyl_gb({1, {theta(1, 1)}});
  auto m3 = standard_monomials(rat_leading_dx(tgb, 1), 1);
  REQUIRE(m3.has_value());
  CHECK(m3->size() == 1);

  // single Euler operator in two variables: infinite staircase
  RatWeylGB inf = rational_weyl_gb({2, {theta(2, 1) + theta(2, 2)}});
  CHECK_FALSE(standard_monomials(rat_leading_dx(inf, 2), 2).has_value());
}

TEST_CASE("commutative groebner and krull dimension") {
  // hypersurface x1*xi1 in 2 vars
  CPoly xy = CPoly::var(2, 0) * CPoly::var(2, 1);
  CHECK(krull_dim({xy}, 2, 100000) == 1);

  // zero section: dim n
  std::vector<CPoly> xis;
  for (int i = 2; i < 4; ++i) xis.push_back(CPoly::var(4, i));
  CHECK(krull_dim(xis, 4, 100000) == 2);

  CHECK(krull_dim({CPoly::constant(2, 1)}, 2, 100000) == -1);
  CHECK(krull_dim(std::vector<CPoly>{}, 2, 100000) == 2);
}
