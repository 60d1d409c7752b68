#include <doctest.h>

#include "core/rng.hpp"
#include "core/tensor.hpp"

using namespace jbv;

namespace {

Chart chart3() { return Chart::make({"x1", "x2", "x3"}); }

Tensor dx(const Chart& c, int i) { return Tensor::basis(c, Kind::Form, {static_cast<uint8_t>(i)}); }
Tensor ddx(const Chart& c, int i) {
  return Tensor::basis(c, Kind::Multivector, {static_cast<uint8_t>(i)});
}
Tensor fn_form(const Chart& c, const ExpPoly& f) { return Tensor::scalar(c, Kind::Form, f); }

} // namespace

TEST_CASE("wedge is graded commutative and kills repeats") {
  Chart c = chart3();
  CHECK(wedge(dx(c, 0), dx(c, 1)) == -wedge(dx(c, 1), dx(c, 0)));
  CHECK(wedge(dx(c, 0).scaled(ExpPoly::coordinate(c, 0)), dx(c, 0)).is_zero());
  Tensor b12 = wedge(ddx(c, 0), ddx(c, 1));
  CHECK(wedge(b12, ddx(c, 2)) == Tensor::basis(c, Kind::Multivector, {0, 1, 2}));
  CHECK_THROWS_AS(wedge(dx(c, 0), ddx(c, 1)), StructuralError);
}

TEST_CASE("exterior differential basics") {
  Chart c = chart3();
  ExpPoly x1 = ExpPoly::coordinate(c, 0), x2 = ExpPoly::coordinate(c, 1);
  // d(x1 x2) = x2 dx1 + x1 dx2
  CHECK(ext_d(fn_form(c, x1 * x2)) == dx(c, 0).scaled(x2) + dx(c, 1).scaled(x1));
  // d(x1 dx2) = dx1 ^ dx2
  CHECK(ext_d(dx(c, 1).scaled(x1)) == wedge(dx(c, 0), dx(c, 1)));
  // d(exp(x1) dx2) = exp(x1) dx1 ^ dx2
  ExpPoly e1 = ExpPoly::exponential(c, {Rational(1), Rational(0), Rational(0)});
  CHECK(ext_d(dx(c, 1).scaled(e1)) == wedge(dx(c, 0), dx(c, 1)).scaled(e1));
}

TEST_CASE("interior product conventions") {
  Chart c = chart3();
  Tensor dx12 = wedge(dx(c, 0), dx(c, 1));
  CHECK(interior(ddx(c, 0), dx12) == dx(c, 1));
  // leading-slot convention: i(@1^@2)(dx1^dx2) = +1
  Tensor b12 = wedge(ddx(c, 0), ddx(c, 1));
  CHECK(interior(b12, dx12) == fn_form(c, ExpPoly::constant(c, 1)));
  CHECK(interior(b12, dx(c, 0)).is_zero());
  // i(X)(a^b) = (i(X)a)^b + (-1)^{|a|} a^(i(X)b)
  Rng rng(33);
  for (int t = 0; t < 40; ++t) {
    Tensor X = rng.tensor(c, Kind::Multivector, 1, 2, 2, true);
    Tensor a = rng.tensor(c, Kind::Form, rng.range(1, 2), 2, 2, true);
    Tensor b = rng.tensor(c, Kind::Form, 1, 2, 2, true);
    Tensor lhs = interior(X, wedge(a, b));
    Tensor rhs = wedge(interior(X, a), b) +
                 (a.degree() % 2 ? -wedge(a, interior(X, b)) : wedge(a, interior(X, b)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("pairing of equal degrees") {
  Chart c = chart3();
  Tensor b12 = wedge(ddx(c, 0), ddx(c, 1));
  CHECK(pairing(b12, wedge(dx(c, 0), dx(c, 1))) == ExpPoly::constant(c, 1));
  CHECK(pairing(ddx(c, 0), dx(c, 1)).is_zero());
  // <x1 @1^@2, dx2^dx1> = -x1
  ExpPoly x1 = ExpPoly::coordinate(c, 0);
  CHECK(pairing(b12.scaled(x1), wedge(dx(c, 1), dx(c, 0))) == -x1);
}

TEST_CASE("lie derivative basics") {
  Chart c = chart3();
  ExpPoly x1 = ExpPoly::coordinate(c, 0);
  // L_{@1}(x1 dx2) = dx2
  CHECK(lie_derivative(ddx(c, 0), dx(c, 1).scaled(x1)) == dx(c, 1));
  // L_{x1 @1}(@1^@2) = -@1^@2
  Tensor x1d1 = ddx(c, 0).scaled(x1);
  Tensor b12 = wedge(ddx(c, 0), ddx(c, 1));
  CHECK(lie_derivative(x1d1, b12) == -b12);
  // L_{@3}(dx1^dx2) = 0
  CHECK(lie_derivative(ddx(c, 2), wedge(dx(c, 0), dx(c, 1))).is_zero());
}

TEST_CASE("schouten bracket base cases and convention") {
  Chart c = chart3();
  ExpPoly x1 = ExpPoly::coordinate(c, 0);
  // [@1, x1 @2] = @2
  CHECK(schouten(ddx(c, 0), ddx(c, 1).scaled(x1)) == ddx(c, 1));
  // constant-coefficient brackets vanish
  Tensor b12 = wedge(ddx(c, 0), ddx(c, 1));
  CHECK(schouten(b12, b12).is_zero());
  // in this convention [L, f] = sharp(L, df)
  ExpPoly f = x1 * ExpPoly::coordinate(c, 1);
  Tensor df = ext_d(fn_form(c, f));
  CHECK(schouten(b12, Tensor::scalar(c, Kind::Multivector, f)) == sharp(b12, df));
}

TEST_CASE("contact pair satisfies the defining bracket identities") {
  // q,p,z with L = @q^@p + @z^(p @p), E = @z: [L,L] = 2 E^L, [L,E] = 0.
  Chart c = Chart::make({"q", "p", "z"});
  ExpPoly p = ExpPoly::coordinate(c, 1);
  Tensor L(c, Kind::Multivector, 2);
  L.add_term({0, 1}, ExpPoly::constant(c, 1));
  L.add_term({2, 1}, p);
  Tensor E = ddx(c, 2);
  CHECK(schouten(L, L) == wedge(E, L).scaled(Rational(2)));
  CHECK(schouten(L, E).is_zero());
}

TEST_CASE("schouten matches the decomposable recursion") {
  Chart c = chart3();
  Rng rng(404);
  for (int t = 0; t < 50; ++t) {
    int ku = rng.range(0, 3), kv = rng.range(0, 3);
    Tensor u = rng.tensor(c, Kind::Multivector, ku, 2, 2, true);
    Tensor v = rng.tensor(c, Kind::Multivector, kv, 2, 2, true);
    CHECK(schouten(u, v) == schouten_recursive(u, v));
  }
}

TEST_CASE("schouten graded laws") {
  Chart c = chart3();
  Rng rng(505);
  for (int t = 0; t < 40; ++t) {
    int ku = rng.range(0, 2), kv = rng.range(0, 2), kw = rng.range(0, 2);
    Tensor u = rng.tensor(c, Kind::Multivector, ku, 2, 2, false);
    Tensor v = rng.tensor(c, Kind::Multivector, kv, 2, 2, false);
    Tensor w = rng.tensor(c, Kind::Multivector, kw, 2, 2, false);

    // [U,V] = (-1)^{|U||V|} [V,U]
    Tensor sym = schouten(u, v) - ((ku * kv) % 2 ? -schouten(v, u) : schouten(v, u));
    CHECK(sym.is_zero());

    // [U, V^W] = [U,V]^W + (-1)^{(|U|+1)|V|} V^[U,W]
    Tensor lhs = schouten(u, wedge(v, w));
    int s = ((ku + 1) * kv) % 2 ? -1 : 1;
    Tensor rhs = as_deg(wedge(schouten(u, v), w), lhs.degree()) +
                 as_deg(wedge(v, schouten(u, w)).scaled(Rational(s)), lhs.degree());
    CHECK(lhs == rhs);

    // graded Jacobi for this convention: sum_cyc (-1)^{|U|(|W|-1)} [U,[V,W]] = 0
    auto sgn = [](int a, int b) { return (a * (b - 1)) % 2 ? -1 : 1; };
    int out = ku + kv + kw - 2;
    if (out >= 0) {
      Tensor j1 = as_deg(schouten(u, schouten(v, w)), out).scaled(Rational(sgn(ku, kw)));
      Tensor j2 = as_deg(schouten(v, schouten(w, u)), out).scaled(Rational(sgn(kv, ku)));
      Tensor j3 = as_deg(schouten(w, schouten(u, v)), out).scaled(Rational(sgn(kw, kv)));
      CHECK((j1 + j2 + j3).is_zero());
    }
  }
}

TEST_CASE("d squares to zero and Cartan agrees with the bracket transport") {
  Chart c = chart3();
  Rng rng(606);
  for (int t = 0; t < 40; ++t) {
    Tensor w = rng.tensor(c, Kind::Form, rng.range(0, 3), 3, 3, true);
    CHECK(ext_d(ext_d(w)).is_zero());

    // duality transport: X<U,mu> = <[X,U],mu> + <U, L_X mu>
    Tensor X = rng.tensor(c, Kind::Multivector, 1, 2, 2, true);
    int k = rng.range(1, 2);
    Tensor U = rng.tensor(c, Kind::Multivector, k, 2, 2, true);
    Tensor mu = rng.tensor(c, Kind::Form, k, 2, 2, true);
    ExpPoly lhs = apply_vf(X, pairing(U, mu));
    ExpPoly rhs = pairing(lie_derivative(X, U), mu) + pairing(U, lie_derivative(X, mu));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("sharp and flat") {
  Chart c = chart3();
  Tensor b12 = wedge(ddx(c, 0), ddx(c, 1));
  CHECK(sharp(b12, dx(c, 0)) == ddx(c, 1));
  CHECK(sharp(b12, dx(c, 2)).is_zero());
  CHECK(sharp(Tensor::zero(c, Kind::Multivector, 2), dx(c, 0)).is_zero());
  // <sharp a, b> = L(a, b) for all basis b
  Rng rng(707);
  for (int t = 0; t < 30; ++t) {
    Tensor L = rng.tensor(c, Kind::Multivector, 2, 2, 2, true);
    Tensor a = rng.tensor(c, Kind::Form, 1, 2, 2, true);
    for (int j = 0; j < 3; ++j)
      CHECK(pairing(sharp(L, a), dx(c, j)) == eval2(L, a, dx(c, j)));
  }

  Tensor om12 = wedge(dx(c, 0), dx(c, 1));
  CHECK(flat(om12, ddx(c, 0)) == dx(c, 1));
  CHECK(flat(om12, ddx(c, 2)).is_zero());
  // flat(x3 dx1^dx2, @2) = -x3 dx1
  ExpPoly x3 = ExpPoly::coordinate(c, 2);
  CHECK(flat(om12.scaled(x3), ddx(c, 1)) == -dx(c, 0).scaled(x3));
}

TEST_CASE("koszul bracket of 1-forms") {
  Chart c = chart3();
  Tensor b12 = wedge(ddx(c, 0), ddx(c, 1));
  CHECK(koszul_bracket(b12, dx(c, 0), dx(c, 1)).is_zero());
  CHECK(koszul_bracket(Tensor::zero(c, Kind::Multivector, 2), dx(c, 0), dx(c, 1)).is_zero());
  // closedness of Hamiltonian differentials: {df, dg} = d{f,g}
  Rng rng(808);
  for (int t = 0; t < 25; ++t) {
    Tensor L = rng.tensor(c, Kind::Multivector, 2, 2, 2, false);
    ExpPoly f = rng.exppoly(c, 2, 2, false), g = rng.exppoly(c, 2, 2, false);
    Tensor df = ext_d(fn_form(c, f)), dg = ext_d(fn_form(c, g));
    if (!schouten(L, L).is_zero()) continue;   // Poisson case only
    Tensor lhs = koszul_bracket(L, df, dg);
    Tensor rhs = ext_d(fn_form(c, eval2(L, df, dg)));
    CHECK(lhs == rhs);
  }
}
