#include <doctest.h>

#include "core/presets.hpp"
#include "core/rng.hpp"
#include "core/verify.hpp"

using namespace jbv;

namespace {

Tensor dxb(const Chart& c, int i) { return Tensor::basis(c, Kind::Form, {static_cast<uint8_t>(i)}); }
Tensor ddx(const Chart& c, int i) {
  return Tensor::basis(c, Kind::Multivector, {static_cast<uint8_t>(i)});
}

// contact chart coordinates: q1, p1, z
struct ContactFixture {
  StructureBundle b = contact_canonical(1);
  const Chart& c = b.chart;
  const JacobiStructure& J = *b.jacobi;
  ExpPoly q = ExpPoly::coordinate(b.chart, 0);
  ExpPoly p = ExpPoly::coordinate(b.chart, 1);
  ExpPoly z = ExpPoly::coordinate(b.chart, 2);
};

} // namespace

TEST_CASE("validity checks and residuals") {
  ContactFixture f;
  CHECK(f.J.is_valid());
  CHECK(contact_canonical(2).jacobi->is_valid());

  // zero structure is valid
  Chart c3 = Chart::make({"x1", "x2", "x3"});
  JacobiStructure zero(Tensor::zero(c3, Kind::Multivector, 2), Tensor::zero(c3, Kind::Multivector, 1));
  CHECK(zero.is_valid());

  // constant pair with E != 0 fails with residual 2 @3^@1^@2
  JacobiStructure bad(wedge(ddx(c3, 0), ddx(c3, 1)), ddx(c3, 2));
  CHECK(!bad.is_valid());
  Tensor expect = wedge(ddx(c3, 2), wedge(ddx(c3, 0), ddx(c3, 1))).scaled(Rational(-2));
  CHECK(bad.validity().residual_pp == expect);
  CHECK(bad.validity().residual_le.is_zero());
}

TEST_CASE("function bracket on the contact chart") {
  ContactFixture f;
  CHECK(fn_bracket(f.J, f.q, f.p) == ExpPoly::constant(f.c, 1));
  CHECK(fn_bracket(f.J, ExpPoly::constant(f.c, 1), f.z) == ExpPoly::constant(f.c, 1));
  ExpPoly g = f.q * f.p + f.z;
  CHECK(fn_bracket(f.J, g, g).is_zero());
}

TEST_CASE("jet bracket reproduces the displayed components") {
  ContactFixture f;
  // {jet q, jet p} = jet({q,p}) = jet(1) = (0, 1)
  JetSection jq = JetSection::jet(f.c, f.q), jp = JetSection::jet(f.c, f.p);
  JetSection br = jet_bracket(f.J, jq, jp);
  CHECK(br.alpha.is_zero());
  CHECK(br.f == ExpPoly::constant(f.c, 1));

  // antisymmetry
  JetSection s(dxb(f.c, 0).scaled(f.p), f.q * f.z);
  JetSection r = jet_bracket(f.J, s, s);
  CHECK(r.alpha.is_zero());
  CHECK(r.f.is_zero());
}

TEST_CASE("Poisson-case jet bracket has the extra pairing term") {
  // E = 0: {(a,f),(b,g)} = ({a,b}_L, (sharp a)g - (sharp b)f - L(a,b))
  StructureBundle b = constant_poisson({{Rational(0), Rational(1)}, {Rational(-1), Rational(0)}});
  const Chart& c = b.chart;
  const JacobiStructure& J = *b.jacobi;
  JetSection s1(dxb(c, 0), ExpPoly::zero(c));
  JetSection s2(dxb(c, 1), ExpPoly::zero(c));
  JetSection r = jet_bracket(J, s1, s2);
  CHECK(r.alpha.is_zero());
  CHECK(r.f == ExpPoly::constant(c, -1));

  Rng rng(12);
  for (int t = 0; t < 40; ++t) {
    JetSection a(rng.tensor(c, Kind::Form, 1, 2, 2, true), rng.exppoly(c, 2, 2, true));
    JetSection d(rng.tensor(c, Kind::Form, 1, 2, 2, true), rng.exppoly(c, 2, 2, true));
    JetSection lhs = jet_bracket(J, a, d);
    Tensor one = koszul_bracket(J.Lambda(), a.alpha, d.alpha);
    ExpPoly fn = apply_vf(sharp(J.Lambda(), a.alpha), d.f) -
                 apply_vf(sharp(J.Lambda(), d.alpha), a.f) - eval2(J.Lambda(), a.alpha, d.alpha);
    CHECK(lhs.alpha == one);
    CHECK(lhs.f == fn);
  }
}

TEST_CASE("jet anchor") {
  ContactFixture f;
  // s = (dq, 0) on the constant block: sharp dq = @p + ... on contact: L(dq,.) = @p
  JetSection s1(dxb(f.c, 0), ExpPoly::zero(f.c));
  CHECK(jet_anchor(f.J, s1) == ddx(f.c, 1));
  JetSection s2(Tensor::zero(f.c, Kind::Form, 1), ExpPoly::constant(f.c, 1));
  CHECK(jet_anchor(f.J, s2) == f.J.E());
  CHECK(jet_anchor(f.J, JetSection::zero(f.c)).is_zero());
}

TEST_CASE("generator on weight-1 pairs: displayed instance") {
  ContactFixture f;
  // lam = e^t(p dq + 0 dt): slot1 = i(L)d(p dq) + (p dq)(E) - E*0 = -1, slot2 = 0
  WForm lam(1, dxb(f.c, 0).scaled(f.p), Tensor::zero(f.c, Kind::Form, 0));
  WForm d = bv_delta(f.J, lam);
  CHECK(d.weight == 0);
  CHECK(d.a == Tensor::scalar(f.c, Kind::Form, ExpPoly::constant(f.c, -1)));
  CHECK(d.b.is_zero());

  // weight 0 maps to the canonical zero
  WForm w0(0, Tensor::scalar(f.c, Kind::Form, f.q), Tensor::zero(f.c, Kind::Form, 0));
  CHECK(bv_delta(f.J, w0).is_zero());
}

TEST_CASE("generator equals the contraction-with-the-pair oracle") {
  ContactFixture f;
  Rng rng(77);
  for (int k = 1; k <= 4; ++k) {
    for (int t = 0; t < 25; ++t) {
      Tensor a = rng.tensor(f.c, Kind::Form, k, 2, 2, true);
      Tensor b2 = rng.tensor(f.c, Kind::Form, k - 1, 2, 2, true);
      WForm lam(k, a, b2);
      CHECK(bv_delta(f.J, lam) == bv_delta_oracle(f.J, lam));
      CHECK(bv_delta(f.J, bv_delta(f.J, lam)).is_zero());
    }
  }
  // top-weight volume slot
  WForm top(4, Tensor::zero(f.c, Kind::Form, 4), f.b.require_vol().phi());
  CHECK(bv_delta(f.J, top) == bv_delta_oracle(f.J, top));
}

TEST_CASE("weighted wedge moves dt with the right sign") {
  ContactFixture f;
  Rng rng(31);
  for (int t = 0; t < 30; ++t) {
    int k = rng.range(0, 2), h = rng.range(0, 2);
    WForm x(k, rng.tensor(f.c, Kind::Form, k, 2, 2, true),
            k ? rng.tensor(f.c, Kind::Form, k - 1, 2, 2, true) : Tensor::zero(f.c, Kind::Form, 0));
    WForm y(h, rng.tensor(f.c, Kind::Form, h, 2, 2, true),
            h ? rng.tensor(f.c, Kind::Form, h - 1, 2, 2, true) : Tensor::zero(f.c, Kind::Form, 0));
    // graded commutativity in the total (weight = degree) grading
    WForm xy = wedge(x, y);
    WForm yx = wedge(y, x);
    CHECK(xy == ((k * h) % 2 ? -yx : yx));
  }
}

TEST_CASE("differential of the weighted algebra") {
  ContactFixture f;
  // weight-0 function goes to its jet differential part
  WForm w0(0, Tensor::scalar(f.c, Kind::Form, f.q * f.p), Tensor::zero(f.c, Kind::Form, 0));
  WForm d0w = bar_d(w0);
  CHECK(d0w.weight == 1);
  CHECK(d0w.a == ext_d(Tensor::scalar(f.c, Kind::Form, f.q * f.p)));
  CHECK(d0w.b.is_zero());

  // slotwise: (x1 dx2, x3) -> (dx1^dx2, dx3) on a plain chart
  Chart c3 = Chart::make({"x1", "x2", "x3"});
  WForm lam(1, dxb(c3, 1).scaled(ExpPoly::coordinate(c3, 0)),
            Tensor::scalar(c3, Kind::Form, ExpPoly::coordinate(c3, 2)));
  WForm d = bar_d(lam);
  CHECK(d.a == wedge(dxb(c3, 0), dxb(c3, 1)));
  CHECK(d.b == dxb(c3, 2));

  Rng rng(41);
  for (int t = 0; t < 30; ++t) {
    int k = rng.range(0, 3);
    WForm x(k, rng.tensor(f.c, Kind::Form, k, 2, 2, true),
            k ? rng.tensor(f.c, Kind::Form, k - 1, 2, 2, true) : Tensor::zero(f.c, Kind::Form, 0));
    CHECK(bar_d(bar_d(x)).is_zero());
  }
}

TEST_CASE("anticommutator: composed route equals the corrected closed form") {
  ContactFixture f;
  Rng rng(59);
  for (int k = 0; k <= 4; ++k) {
    for (int t = 0; t < 25; ++t) {
      WForm lam(k, rng.tensor(f.c, Kind::Form, k, 2, 2, true),
                k ? rng.tensor(f.c, Kind::Form, k - 1, 2, 2, true)
                  : Tensor::zero(f.c, Kind::Form, 0));
      CHECK(anticommutator_composed(f.J, lam) == anticommutator_closed(f.J, lam));
    }
  }
}

TEST_CASE("anticommutator: the circulated display drops two terms") {
  // The widely quoted closed form
  //   slot1 = (k+1) i(E) d a,  slot2 = L_E b + (k+1) i(E) d b - (-1)^k delta_L a
  // differs from the composition; e^{t}(z dz) is a witness.
  ContactFixture f;
  WForm lam(1, dxb(f.c, 2).scaled(f.z), Tensor::zero(f.c, Kind::Form, 0));
  WForm composed = anticommutator_composed(f.J, lam);
  // composed = (dz, 0)
  CHECK(composed.a == dxb(f.c, 2));
  CHECK(composed.b.is_zero());
  // the circulated slot1 gives (k+1) i(E) d(z dz) = 0 != dz
  Tensor circulated = interior(f.J.E(), ext_d(lam.a)).scaled(Rational(2));
  CHECK(circulated.is_zero());
  CHECK(composed.a != circulated);
}

TEST_CASE("gerstenhaber bracket restricted to weight one is the jet bracket") {
  ContactFixture f;
  Rng rng(67);
  for (int t = 0; t < 40; ++t) {
    JetSection s1(rng.tensor(f.c, Kind::Form, 1, 2, 2, true), rng.exppoly(f.c, 2, 2, true));
    JetSection s2(rng.tensor(f.c, Kind::Form, 1, 2, 2, true), rng.exppoly(f.c, 2, 2, true));
    WForm lhs = gerstenhaber_bracket(f.J, s1.as_wform(), s2.as_wform());
    WForm rhs = jet_bracket(f.J, s1, s2).as_wform();
    CHECK(lhs == rhs);
  }
  // odd bracket of an odd element with itself
  JetSection s(dxb(f.c, 0), f.p);
  CHECK(gerstenhaber_bracket(f.J, s.as_wform(), s.as_wform()).is_zero());
}

TEST_CASE("sigma on functions matches the anchored differential") {
  ContactFixture f;
  // sigma f = sharp(df) - (Ef) @t
  Rng rng(71);
  for (int t = 0; t < 30; ++t) {
    ExpPoly g = rng.exppoly(f.c, 2, 2, true);
    WMv C(0, Tensor::scalar(f.c, Kind::Multivector, g), Tensor::zero(f.c, Kind::Multivector, 0));
    WMv s = sigma(f.J, C);
    CHECK(s.a == sharp(f.J.Lambda(), ext_d(Tensor::scalar(f.c, Kind::Form, g))));
    CHECK(s.b == Tensor::scalar(f.c, Kind::Multivector, -apply_vf(f.J.E(), g)));
  }
}

TEST_CASE("sigma squares to zero and the structure pair is a cocycle") {
  ContactFixture f;
  Rng rng(73);
  for (int k = 0; k <= 3; ++k) {
    for (int t = 0; t < 20; ++t) {
      WMv C(k, rng.tensor(f.c, Kind::Multivector, k, 2, 2, true),
            k ? rng.tensor(f.c, Kind::Multivector, k - 1, 2, 2, true)
              : Tensor::zero(f.c, Kind::Multivector, 0));
      CHECK(sigma(f.J, sigma(f.J, C)).is_zero());
    }
  }
  // C = (Lambda, -E) is closed for a valid pair
  WMv pairC(2, f.J.Lambda(), -f.J.E());
  CHECK(sigma(f.J, pairC).is_zero());
}

TEST_CASE("sigma agrees with both independent routes") {
  ContactFixture f;
  Rng rng(79);
  for (int k = 0; k <= 3; ++k) {
    for (int t = 0; t < 12; ++t) {
      WMv C(k, rng.tensor(f.c, Kind::Multivector, k, 2, 2, true),
            k ? rng.tensor(f.c, Kind::Multivector, k - 1, 2, 2, true)
              : Tensor::zero(f.c, Kind::Multivector, 0));
      CHECK(sigma(f.J, C) == sigma_oracle(f.J, C));
      CHECK(sigma(f.J, C) == sigma_ce_oracle(f.J, C));
    }
  }
}

TEST_CASE("anchor pullback is a chain map") {
  ContactFixture f;
  // closed form: the image is sigma-closed
  Tensor dq = dxb(f.c, 0);
  CHECK(sigma(f.J, rho_sharp(f.J, dq)).is_zero());
  // degree 0: (f, 0) with positive sign
  WMv r0 = rho_sharp(f.J, Tensor::scalar(f.c, Kind::Form, f.q));
  CHECK(r0.a == Tensor::scalar(f.c, Kind::Multivector, f.q));

  Rng rng(83);
  for (int k = 0; k <= 2; ++k) {
    for (int t = 0; t < 15; ++t) {
      Tensor lam = rng.tensor(f.c, Kind::Form, k, 2, 2, true);
      CHECK(sigma(f.J, rho_sharp(f.J, lam)) == rho_sharp(f.J, ext_d(lam)));
    }
  }
}

TEST_CASE("anchor pullback evaluates against anchored arguments") {
  StructureBundle b = constant_poisson({{Rational(0), Rational(1)}, {Rational(-1), Rational(0)}});
  const Chart& c = b.chart;
  const JacobiStructure& J = *b.jacobi;
  // lam = dx1, E = 0: the evaluation on (dx2,0) is -dx1(sharp dx2) = +1
  WMv r = rho_sharp(J, dxb(c, 0));
  CHECK(eval_wmv(r, {JetSection(dxb(c, 1), ExpPoly::zero(c))}) == ExpPoly::constant(c, 1));
  CHECK(eval_wmv(r, {JetSection(dxb(c, 0), ExpPoly::zero(c))}).is_zero());
  // defining property on random sections
  Rng rng(89);
  for (int t = 0; t < 25; ++t) {
    Tensor lam = rng.tensor(c, Kind::Form, 1, 2, 2, true);
    JetSection s(rng.tensor(c, Kind::Form, 1, 2, 2, true), rng.exppoly(c, 2, 2, true));
    WMv rs = rho_sharp(J, lam);
    ExpPoly lhs = eval_wmv(rs, {s});
    ExpPoly rhs = -pairing(jet_anchor(J, s), lam);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("hamiltonian pair of a function") {
  ContactFixture f;
  auto [x, tpart] = hamiltonian_pair(f.J, f.z, ExpPoly::zero(f.c));
  CHECK(x == ddx(f.c, 1).scaled(f.p));   // sharp(dz) = p @p
  CHECK(tpart == ExpPoly::constant(f.c, -1));

  auto [x2, t2] = hamiltonian_pair(f.J, ExpPoly::constant(f.c, 5), ExpPoly::constant(f.c, 1));
  CHECK(x2 == f.J.E());
  CHECK(t2.is_zero());
}

TEST_CASE("the differential is not a derivation of the bracket") {
  ContactFixture f;
  Report rep = nonstrong_witness(f.b);
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].pass);
  // e^t z dt against e^t dp1 is a concrete witness
  WForm a(1, Tensor::zero(f.c, Kind::Form, 1), Tensor::scalar(f.c, Kind::Form, f.z));
  WForm x(1, dxb(f.c, 1), Tensor::zero(f.c, Kind::Form, 0));
  WForm resid = bar_d(gerstenhaber_bracket(f.J, a, x)) -
                gerstenhaber_bracket(f.J, bar_d(a), x) + gerstenhaber_bracket(f.J, a, bar_d(x));
  CHECK(!resid.is_zero());
}
