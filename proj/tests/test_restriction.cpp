#include <random>

#include "doctest.h"
#include "hornsys/errors.hpp"
#include "hornsys/restriction.hpp"

using namespace hornsys;

namespace {

HornData toy(const Rational& c) {
  return validate(IntMatrix(2, 1, {1, -1}), {Rational(0), c});
}

HornData gauss(const Rational& a, const Rational& b, const Rational& c) {
  return validate(IntMatrix(4, 1, {1, 1, -1, -1}), {Rational(0), c - 1, -a, -b});
}

HornData appell() {
  IntMatrix B(6, 2, {1, 0, 0, 1, -1, 0, 0, -1, -1, -1, 1, 1});
  return validate(B, {Rational(0), Rational(0), parse_rational("-1/2"),
                      parse_rational("-1/3"), Rational(2), parse_rational("-5/2")});
}

WeylOp th(int n, int i) { return WeylOp::theta(n, i); }

}  // namespace

TEST_CASE("theta rewrite below the identity block") {
  HornData t = toy(3);
  // row 2 is (-1) with kappa = 3
  CHECK(substitute_theta(t, 2) == -CPoly::var(1, 0) + CPoly::constant(1, 3));

  HornData g = gauss(2, 3, 5);
  CHECK(substitute_theta(g, 3) == -CPoly::var(1, 0) - CPoly::constant(1, 2));
  CHECK(substitute_theta(g, 2) == CPoly::var(1, 0) + CPoly::constant(1, 4));

  CHECK_THROWS_AS(substitute_theta(g, 1), IndexOutOfRange);
  CHECK_THROWS_AS(substitute_theta(g, 5), IndexOutOfRange);
  HornData bad = validate(IntMatrix(2, 1, {1, -1}), {Rational(1), Rational(0)});
  CHECK_THROWS_AS(substitute_theta(bad, 2), NotNormalized);
}

TEST_CASE("initial form certificates for the slice b-function") {
  HornData t = toy(2);
  auto certs = bfunction_divides_s_certificate(t);
  REQUIRE(certs.size() == 1);
  CHECK(certs[0].j == 2);
  CHECK(certs[0].initial_form == th(2, 2));
  // nu = 1, element x2 theta1 + x2^2 dx2 + theta2 - 2 x2
  WeylOp want = mul(WeylOp::x(2, 2), th(2, 1)) +
                mul(WeylOp::x(2, 2), mul(WeylOp::x(2, 2), WeylOp::dx(2, 2))) +
                th(2, 2) - Rational(2) * WeylOp::x(2, 2);
  CHECK(certs[0].witness == want);

  auto gcerts = bfunction_divides_s_certificate(gauss(2, 3, 5));
  REQUIRE(gcerts.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(gcerts[i].j == i + 2);
    CHECK(gcerts[i].initial_form == th(4, i + 2));
  }

  // hypothesis failure: top row block rank deficient
  IntMatrix B(7, 3, {1, 1, 2, -1, -1, 0, 0, 0, -1, 1, 0, 0, 0, 1, 0, -1, 0, 0, 0, -1, 0});
  RatVec k(7, Rational(0));
  k[0] = 2;
  HornData e = validate(B, k);
  CHECK_FALSE(e.flags.top_m_rows_rank_m);
  CHECK_THROWS_AS(bfunction_divides_s_certificate(e), HypothesisViolated);
}

TEST_CASE("explicit generators agree with the direct construction") {
  for (HornData d : {toy(parse_rational("1/2")), toy(2), toy(-3), gauss(2, 3, 5),
                     gauss(parse_rational("1/3"), parse_rational("2/5"),
                           parse_rational("3/2")),
                     appell()}) {
    auto gens = explicit_nhorn_from_lattice(d);
    DIdeal nh = build_nhorn(d);
    REQUIRE(gens.size() == nh.generators.size());
    for (size_t i = 0; i < gens.size(); ++i) CHECK(gens[i] == nh.generators[i]);
  }
  // no extra variables at all: generators dx_k - 1
  HornData sq = validate(IntMatrix(2, 2, {1, 0, 0, 1}), RatVec(2, Rational(0)));
  auto gens = explicit_nhorn_from_lattice(sq);
  CHECK(gens[0] == WeylOp::dx(2, 1) - WeylOp::constant(2, 1));
  CHECK(gens[1] == WeylOp::dx(2, 2) - WeylOp::constant(2, 1));
}

TEST_CASE("restriction by elimination") {
  HornData t = toy(4);
  auto gens = restriction_via_elimination(t);
  GBasis span = weyl_gb({1, gens}, TermOrder::grevlex(1));
  CHECK(ideal_member(WeylOp::dx(1, 1) + th(1, 1) - WeylOp::constant(1, 4), span));

  HornData g = gauss(2, 3, 5);
  auto ggens = restriction_via_elimination(g);
  auto rep = verify_ideal_equality(ggens, build_nhorn(g).generators, 1);
  CHECK(rep.verdict == EqualityVerdict::Equal);
}

TEST_CASE("specialization commutes with monomial premultiplication") {
  std::mt19937 rng(97);
  std::uniform_int_distribution<int> exp(0, 3), coef(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    // random operator free of dx2, random power of x2 in front
    WeylOp p(2);
    for (int t = 0; t < 3; ++t) {
      Mono ab{exp(rng), exp(rng), exp(rng), 0};
      int c = coef(rng);
      if (c != 0) p.add_term(ab, c);
    }
    int e = exp(rng);
    Mono mu{0, e, 0, 0};
    WeylOp pre = mul(WeylOp::term(2, mu, 1), p);
    CHECK(specialize_x_one(pre, {2}) == specialize_x_one(p, {2}));
  }
}

TEST_CASE("restriction ideal equals the normalized horn ideal") {
  for (HornData d : {toy(parse_rational("1/2")), toy(2), toy(-3), gauss(2, 3, 5),
                     appell()}) {
    RestrictionReport rep = verify_restriction_theorem(d);
    CHECK(rep.equality.verdict == EqualityVerdict::Equal);
    CHECK(rep.routes_agree);
    CHECK(rep.certificate.size() == static_cast<size_t>(d.d));
  }
}

TEST_CASE("a corrupted generator is flagged with a witness") {
  HornData g = gauss(2, 3, 5);
  auto rest = restriction_via_elimination(g);
  std::vector<WeylOp> corrupted = build_nhorn(g).generators;
  corrupted[0] = corrupted[0] + WeylOp::constant(1, 1);
  auto rep = verify_ideal_equality(rest, corrupted, 1);
  CHECK(rep.verdict != EqualityVerdict::Equal);
  CHECK(rep.witness.has_value());

  // and the corrupted side is the one reported when only it is off
  auto rep2 = verify_ideal_equality(build_nhorn(g).generators, corrupted, 1);
  CHECK(rep2.verdict == EqualityVerdict::RightNotContained);
}
