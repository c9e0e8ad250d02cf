#include <random>

#include "doctest.h"
#include "hornsys/errors.hpp"
#include "hornsys/weyl.hpp"

using namespace hornsys;

namespace {

WeylOp random_op(std::mt19937& rng, int n, int max_terms, int max_deg) {
  std::uniform_int_distribution<int> nterms(1, max_terms), exp(0, max_deg),
      coef(-5, 5);
  WeylOp p(n);
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Mono ab(2 * n);
    for (int i = 0; i < 2 * n; ++i) ab[i] = exp(rng);
    int c = coef(rng);
    if (c != 0) p.add_term(ab, c);
  }
  return p;
}

}  // namespace

TEST_CASE("commutation relations") {
  WeylOp d1 = WeylOp::dx(1, 1), x1 = WeylOp::x(1, 1);
  CHECK(mul(d1, x1) == mul(x1, d1) + WeylOp::constant(1, 1));

  // dx^2 * x^2 = x^2 dx^2 + 4 x dx + 2
  WeylOp lhs = mul(mul(d1, d1), mul(x1, x1));
  CHECK(to_string(lhs) == "x1^2*dx1^2 + 4*x1*dx1 + 2");

  WeylOp th = WeylOp::theta(1, 1);
  CHECK(to_string(mul(th, th)) == "x1^2*dx1^2 + x1*dx1");

  // distinct variables commute
  WeylOp d2 = WeylOp::dx(2, 2), y1 = WeylOp::x(2, 1);
  CHECK(mul(d2, y1) == mul(y1, d2));

  CHECK_THROWS_AS(mul(WeylOp::x(1, 1), WeylOp::x(2, 1)), DimensionMismatch);
}

TEST_CASE("associativity on randomized operators") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<int> nvars(1, 4);
  for (int trial = 0; trial < 400; ++trial) {
    int n = nvars(rng);
    WeylOp p = random_op(rng, n, 3, 2), q = random_op(rng, n, 3, 2),
           r = random_op(rng, n, 3, 2);
    CHECK(mul(mul(p, q), r) == mul(p, mul(q, r)));
  }
}

TEST_CASE("action oracle") {
  // dx1 (x1^3) = 3 x1^2
  XPoly x3(1);
  x3.add_term({3}, 1);
  XPoly r = act(WeylOp::dx(1, 1), x3);
  REQUIRE(r.t.size() == 1);
  CHECK(r.t.at({2}) == 3);

  // theta eigenvalue on monomials, including negative exponents
  for (int k : {-3, 0, 1, 5}) {
    XPoly xk(1);
    xk.add_term({k}, 1);
    XPoly tr = act(WeylOp::theta(1, 1), xk);
    if (k == 0)
      CHECK(tr.is_zero());
    else
      CHECK(tr.t.at({k}) == k);
  }
}

TEST_CASE("product agrees with composed action on randomized data") {
  std::mt19937 rng(211);
  std::uniform_int_distribution<int> nvars(1, 3), exp(0, 8);
  for (int trial = 0; trial < 700; ++trial) {
    int n = nvars(rng);
    WeylOp p = random_op(rng, n, 3, 2), q = random_op(rng, n, 3, 2);
    Mono e(n);
    for (int i = 0; i < n; ++i) e[i] = exp(rng);
    XPoly f(n);
    f.add_term(e, 1);
    CHECK(act(mul(p, q), f) == act(p, act(q, f)));
  }
}

TEST_CASE("theta calculus round trip") {
  CHECK(theta_to_weyl(CPoly::var(1, 0)) == WeylOp::theta(1, 1));

  CPoly th2 = CPoly::var(1, 0) * CPoly::var(1, 0);
  CHECK(to_string(theta_to_weyl(th2)) == "x1^2*dx1^2 + x1*dx1");

  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> nvars(1, 3), exp(0, 3), coef(-4, 4);
    int n = nvars(rng);
    CPoly t(n);
    for (int k = 0; k < 3; ++k) {
      Mono e(n);
      for (int i = 0; i < n; ++i) e[i] = exp(rng);
      t.add_term(e, coef(rng));
    }
    auto back = weyl_is_theta(theta_to_weyl(t));
    REQUIRE(back.has_value());
    CHECK(*back == t);
    // homomorphism: images commute
    CPoly t2 = t + CPoly::constant(n, 1);
    CHECK(mul(theta_to_weyl(t), theta_to_weyl(t2)) ==
          mul(theta_to_weyl(t2), theta_to_weyl(t)));
  }

  CHECK_FALSE(weyl_is_theta(WeylOp::term(2, {1, 0, 0, 1}, 1)).has_value());
}

TEST_CASE("theta shift") {
  CPoly th = CPoly::var(1, 0);
  CHECK(theta_shift(th, {Int(1)}) == th + CPoly::constant(1, 1));

  // theta(theta + c - 1) shifted by e_1 -> (theta+1)(theta+c), c = 5
  CPoly t = th * (th + CPoly::constant(1, 4));
  CPoly want = (th + CPoly::constant(1, 1)) * (th + CPoly::constant(1, 5));
  CHECK(theta_shift(t, {Int(1)}) == want);

  CPoly c = CPoly::constant(1, Rational(7, 3));
  CHECK(theta_shift(c, {Int(2)}) == c);

  // x_k * t(theta + e_k) = t(theta) * x_k
  std::mt19937 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> nvars(1, 3), exp(0, 3), coef(-4, 4),
        pick(1, 3);
    int n = nvars(rng);
    CPoly t(n);
    for (int k = 0; k < 3; ++k) {
      Mono e(n);
      for (int i = 0; i < n; ++i) e[i] = exp(rng);
      t.add_term(e, coef(rng));
    }
    int k = pick(rng) % n + 1;
    std::vector<Int> ek(n, 0);
    ek[k - 1] = 1;
    CHECK(mul(WeylOp::x(n, k), theta_to_weyl(theta_shift(t, ek))) ==
          mul(theta_to_weyl(t), WeylOp::x(n, k)));
  }
}

TEST_CASE("shift of a variable by a constant") {
  CHECK(substitute_x_shift(WeylOp::x(2, 2), 2, 1) ==
        WeylOp::x(2, 2) + WeylOp::constant(2, 1));
  CHECK(substitute_x_shift(WeylOp::theta(2, 2), 2, 1) ==
        WeylOp::theta(2, 2) + WeylOp::dx(2, 2));
  CHECK(substitute_x_shift(WeylOp::dx(2, 2), 2, 1) == WeylOp::dx(2, 2));

  // automorphism property on random products
  std::mt19937 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    WeylOp p = random_op(rng, 2, 3, 2), q = random_op(rng, 2, 3, 2);
    CHECK(substitute_x_shift(mul(p, q), 1, 1) ==
          mul(substitute_x_shift(p, 1, 1), substitute_x_shift(q, 1, 1)));
  }
}

TEST_CASE("canonical grammar and round trip") {
  WeylOp p = parse_weyl("x1^2*dx1^2 + 4*x1*dx1 + 2", 1);
  CHECK(to_string(p) == "x1^2*dx1^2 + 4*x1*dx1 + 2");

  WeylOp q = parse_weyl("- 1/2*x2*dx1 + dx2 - 3", 2);
  CHECK(to_string(q) == "- 1/2*x2*dx1 + dx2 - 3");

  std::mt19937 rng(67);
  std::uniform_int_distribution<int> nvars(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    int n = nvars(rng);
    WeylOp r = random_op(rng, n, 4, 3);
    if (r.is_zero()) continue;
    CHECK(parse_weyl(to_string(r), n) == r);
  }

  CHECK_THROWS_AS(parse_weyl("", 1), ParseError);
  CHECK_THROWS_AS(parse_weyl("x1 + + x1", 1), ParseError);
  CHECK_THROWS_AS(parse_weyl("x5", 2), ParseError);
  CHECK_THROWS_AS(parse_weyl("y1", 1), ParseError);
}

TEST_CASE("specialize and restrict") {
  // x2^3 dx1 at x2 = 1 -> dx1
  WeylOp p = mul(mul(WeylOp::x(2, 2), mul(WeylOp::x(2, 2), WeylOp::x(2, 2))),
                 WeylOp::dx(2, 1));
  WeylOp s = specialize_x_one(p, {2});
  CHECK(restrict_vars(s, 1) == WeylOp::dx(1, 1));
  CHECK_THROWS(specialize_x_one(WeylOp::theta(2, 2), {2}));
  CHECK_THROWS(restrict_vars(WeylOp::x(2, 2), 1));
}
