#include "doctest.h"
#include "oracle.hpp"
#include "ybs/linalg.hpp"
#include "ybs/random.hpp"

using namespace ybs;

namespace {

VarSetPtr vs3() { return VarSet::standard(3); }

}  // namespace

TEST_CASE("ring operations commute with evaluation") {
  Rng rng(11);
  const auto vs = vs3();
  for (int trial = 0; trial < 40; ++trial) {
    const MultiPoly p = random_poly(vs, 3, 3, 5, rng), q = random_poly(vs, 3, 3, 5, rng);
    const auto pt = oracle::random_point(3, rng);
    const Rational a = oracle::eval(p, pt), b = oracle::eval(q, pt);
    CHECK(oracle::eval(p + q, pt) == a + b);
    CHECK(oracle::eval(p - q, pt) == a - b);
    CHECK(oracle::eval(p * q, pt) == a * b);
    CHECK(oracle::eval(p.pow(3), pt) == a * a * a);
    CHECK(oracle::eval(-p, pt) == -a);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  Rng rng(12);
  const auto vs = vs3();
  for (int trial = 0; trial < 20; ++trial) {
    const MultiPoly p = random_poly(vs, 3, 2, 4, rng), q = random_poly(vs, 3, 2, 4, rng),
                    r = random_poly(vs, 3, 2, 4, rng);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * q == q * p);
    CHECK((p - p).is_zero());
  }
}

TEST_CASE("parse and print round trip") {
  const auto vs = vs3();
  for (const char* s : {"0", "1", "t1 - t2", "x^2*t3 + 3/2*t1*t2 - 7", "-x1 + x2", "q*t1^3"}) {
    const MultiPoly p = MultiPoly::parse(vs, s);
    CHECK(MultiPoly::parse(vs, p.str()) == p);
  }
  CHECK(MultiPoly::parse(vs, "x+t2").str() == "t2 + x");
  CHECK_THROWS_AS(MultiPoly::parse(vs, "t1 +* 2"), ParseError);
  CHECK_THROWS(MultiPoly::parse(vs, "z"));
}

TEST_CASE("exact division") {
  Rng rng(13);
  const auto vs = vs3();
  for (int trial = 0; trial < 20; ++trial) {
    const MultiPoly p = random_poly(vs, 3, 2, 4, rng), q = random_poly(vs, 3, 2, 3, rng);
    if (q.is_zero()) continue;
    CHECK(divide_exact(p * q, q) == p);
    const MultiPoly d = MultiPoly::t(vs, 1) - MultiPoly::t(vs, 3);
    CHECK(divide_by_linear(p * d, 1, 3) == p);
    CHECK(divide_by_linear(p * d, 3, 1) == -p);
  }
  CHECK_THROWS_AS(divide_by_linear(MultiPoly::t(vs, 1), 1, 2), DivisibilityError);
  CHECK_THROWS_AS(divide_exact(MultiPoly::t(vs, 1) + MultiPoly(vs, 1L), MultiPoly::t(vs, 2)), DivisibilityError);
}

TEST_CASE("localized fractions agree with evaluation") {
  Rng rng(14);
  const auto vs = vs3();
  for (int trial = 0; trial < 30; ++trial) {
    const RatFunc f(random_poly(vs, 3, 2, 3, rng), {{1, 2}, {2, 3}});
    const RatFunc g(random_poly(vs, 3, 2, 3, rng), {{1, 3}});
    const auto pt = oracle::random_point(3, rng);
    const Rational a = oracle::eval(f, pt), b = oracle::eval(g, pt);
    CHECK(oracle::eval(f + g, pt) == a + b);
    CHECK(oracle::eval(f * g, pt) == a * b);
    if (!g.is_zero() && factor_linear_differences(g.num())) CHECK(oracle::eval(f / g, pt) == a / b);
  }
}

TEST_CASE("fractions reduce") {
  const auto vs = vs3();
  const MultiPoly d = MultiPoly::t(vs, 1) - MultiPoly::t(vs, 2);
  CHECK(RatFunc(d, {{1, 2}}) == RatFunc(MultiPoly(vs, 1L)));
  CHECK(RatFunc(d, {{2, 1}}) == RatFunc(MultiPoly(vs, -1L)));
  CHECK(RatFunc(d * d, {{1, 2}}).is_polynomial());
  CHECK(RatFunc::inverse_linear(vs, 1, 2) * RatFunc(d) == RatFunc(MultiPoly(vs, 1L)));
  CHECK_THROWS(RatFunc(MultiPoly(vs, 1L)) / RatFunc(MultiPoly::var(vs, "x")));
  CHECK_THROWS(RatFunc(MultiPoly(vs, 1L)) / RatFunc(MultiPoly(vs)));
}

TEST_CASE("linear algebra over Q") {
  Rng rng(15);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 10; ++trial) {
    QMatrix a(4, std::vector<Rational>(6));
    for (auto& row : a)
      for (auto& e : row) e = d(rng);
    a[3] = a[0];
    for (std::size_t j = 0; j < 6; ++j) a[3][j] += a[1][j];
    const auto ns = nullspace(a, 6);
    CHECK(rank(a) + ns.size() == 6);
    CHECK(rank(a) <= 3);
    for (const auto& v : ns)
      for (const auto& row : a) {
        Rational s = 0;
        for (std::size_t j = 0; j < 6; ++j) s += row[j] * v[j];
        CHECK(s == 0);
      }
  }
}

TEST_CASE("inverse over the localization") {
  const auto vs = vs3();
  auto t = [&](int i) { return MultiPoly::t(vs, i); };
  FracMatrix a = {{RatFunc(t(1) - t(2)), RatFunc(MultiPoly(vs, 1L))},
                  {RatFunc(MultiPoly(vs)), RatFunc(t(2) - t(3))}};
  const FracMatrix inv = inverse(a);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      RatFunc s{MultiPoly(vs)};
      for (int k = 0; k < 2; ++k) s += a[i][k] * inv[k][j];
      CHECK(s == RatFunc(MultiPoly(vs, long(i == j))));
    }
  CHECK(invertible_over_loc(a));
  FracMatrix b = {{RatFunc(t(1) + t(2)), RatFunc(MultiPoly(vs))}, {RatFunc(MultiPoly(vs)), RatFunc(MultiPoly(vs, 1L))}};
  CHECK_FALSE(invertible_over_loc(b));
}
