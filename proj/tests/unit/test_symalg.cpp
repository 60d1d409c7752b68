#include <doctest.h>

#include "core/exppoly.hpp"
#include "core/rng.hpp"

using namespace jbv;

namespace {

Chart chart2() { return Chart::make({"x1", "x2"}); }

ExpPoly X(const Chart& c, int i) { return ExpPoly::coordinate(c, i); }

} // namespace

TEST_CASE("ring identities on small inputs") {
  Chart c = chart2();
  ExpPoly one = ExpPoly::constant(c, 1);

  // (x1 + 1)(x1 - 1) = x1^2 - 1
  ExpPoly lhs = (X(c, 0) + one) * (X(c, 0) - one);
  ExpPoly rhs = X(c, 0) * X(c, 0) - one;
  CHECK(lhs == rhs);

  // exp(x1) * exp(-x1) = 1
  ExpPoly e = ExpPoly::exponential(c, {Rational(1), Rational(0)});
  ExpPoly em = ExpPoly::exponential(c, {Rational(-1), Rational(0)});
  CHECK(e * em == one);

  // like-term merge
  ExpPoly t = X(c, 0) * ExpPoly::exponential(c, {Rational(0), Rational(1)});
  CHECK(t + t == t.scaled(Rational(2)));
}

TEST_CASE("exact partial derivatives") {
  Chart c = chart2();
  // d/dx1 (x1^2 x2) = 2 x1 x2
  ExpPoly f = X(c, 0) * X(c, 0) * X(c, 1);
  CHECK(f.partial(0) == (X(c, 0) * X(c, 1)).scaled(Rational(2)));

  // d/dx1 exp(2 x1) = 2 exp(2 x1)
  ExpPoly g = ExpPoly::exponential(c, {Rational(2), Rational(0)});
  CHECK(g.partial(0) == g.scaled(Rational(2)));

  // d/dx2 (x1 exp(x2)) = x1 exp(x2)
  ExpPoly h = X(c, 0) * ExpPoly::exponential(c, {Rational(0), Rational(1)});
  CHECK(h.partial(1) == h);

  CHECK_THROWS_AS(f.partial(5), StructuralError);
}

TEST_CASE("chart mismatch is a structural error") {
  Chart a = chart2();
  Chart b = Chart::make({"y1", "y2"});
  CHECK_THROWS_AS(X(a, 0) + X(b, 0), StructuralError);
  CHECK_THROWS_AS(X(a, 0) * X(b, 1), StructuralError);
}

TEST_CASE("ring axioms on random triples") {
  Chart c = Chart::make({"x1", "x2", "x3"});
  Rng rng(101);
  for (int t = 0; t < 60; ++t) {
    ExpPoly a = rng.exppoly(c, 4, 3, true);
    ExpPoly b = rng.exppoly(c, 4, 3, true);
    ExpPoly d = rng.exppoly(c, 4, 3, true);
    CHECK(a * b == b * a);
    CHECK((a * b) * d == a * (b * d));
    CHECK(a * (b + d) == a * b + a * d);
    CHECK(a + b == b + a);
  }
}

TEST_CASE("derivatives commute and satisfy the Leibniz rule") {
  Chart c = Chart::make({"x1", "x2", "x3"});
  Rng rng(202);
  for (int t = 0; t < 60; ++t) {
    ExpPoly a = rng.exppoly(c, 4, 3, true);
    ExpPoly b = rng.exppoly(c, 4, 3, true);
    int i = rng.range(0, 2), j = rng.range(0, 2);
    CHECK(a.partial(i).partial(j) == a.partial(j).partial(i));
    CHECK((a * b).partial(i) == a.partial(i) * b + a * b.partial(i));
  }
}

TEST_CASE("unit inversion") {
  Chart c = chart2();
  ExpPoly u = ExpPoly::exponential(c, {Rational(2), Rational(-1)}).scaled(Rational(3, 4));
  CHECK(u.is_unit());
  CHECK(u * u.unit_inverse() == ExpPoly::constant(c, 1));
  ExpPoly nonunit = X(c, 0) + ExpPoly::constant(c, 1);
  CHECK(!nonunit.is_unit());
  CHECK_THROWS_AS(nonunit.unit_inverse(), StructuralError);
}

TEST_CASE("canonical printing is stable") {
  Chart c = chart2();
  // canonical term order: lexicographic on (frequencies, exponents)
  ExpPoly p = X(c, 0).scaled(Rational(2)) - X(c, 1) * X(c, 1) +
              ExpPoly::exponential(c, {Rational(1, 2), Rational(0)});
  CHECK(p.to_string() == "-x2^2 + 2*x1 + exp(1/2*x1)");
}
