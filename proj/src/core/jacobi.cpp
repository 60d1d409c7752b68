#include "core/jacobi.hpp"

#include <functional>

namespace jbv {

namespace {

WForm wf_as_weight(const WForm& x, int w) {
  if (x.weight == w) return x;
  if (x.is_zero()) return WForm::zero(x.a.chart(), w);
  throw StructuralError("weighted form has unexpected weight");
}

} // namespace

JacobiStructure::JacobiStructure(Tensor Lambda, Tensor E)
    : Lambda_(std::move(Lambda)), E_(std::move(E)) {
  if (Lambda_.kind() != Kind::Multivector || Lambda_.degree() != 2)
    throw StructuralError("JacobiStructure: Lambda must be a bivector");
  if (E_.kind() != Kind::Multivector || E_.degree() != 1)
    throw StructuralError("JacobiStructure: E must be a vector field");
  require_same_chart(Lambda_.chart(), E_.chart(), "JacobiStructure");
}

const ValidityReport& JacobiStructure::validity() const {
  if (!validity_) {
    ValidityReport r;
    r.residual_pp = schouten(Lambda_, Lambda_) - wedge(E_, Lambda_).scaled(Rational(2));
    r.residual_le = schouten(Lambda_, E_);
    r.pass = r.residual_pp.is_zero() && r.residual_le.is_zero();
    validity_ = std::move(r);
  }
  return *validity_;
}

ExpPoly fn_bracket(const JacobiStructure& J, const ExpPoly& f, const ExpPoly& g) {
  const Chart& c = J.chart();
  Tensor df = ext_d(Tensor::scalar(c, Kind::Form, f));
  Tensor dg = ext_d(Tensor::scalar(c, Kind::Form, g));
  return eval2(J.Lambda(), df, dg) + f * apply_vf(J.E(), g) - g * apply_vf(J.E(), f);
}

JetSection jet_bracket(const JacobiStructure& J, const JetSection& s1, const JetSection& s2) {
  const Chart& c = J.chart();
  const Tensor& alpha = s1.alpha;
  const Tensor& beta = s2.alpha;
  const ExpPoly& f = s1.f;
  const ExpPoly& g = s2.f;
  Tensor sa = sharp(J.Lambda(), alpha);
  Tensor sb = sharp(J.Lambda(), beta);

  Tensor one_form = lie_derivative(sa, beta) - lie_derivative(sb, alpha) -
                    ext_d(Tensor::scalar(c, Kind::Form, eval2(J.Lambda(), alpha, beta))) +
                    lie_derivative(J.E(), beta).scaled(f) -
                    lie_derivative(J.E(), alpha).scaled(g) -
                    beta.scaled(pairing(J.E(), alpha)) + alpha.scaled(pairing(J.E(), beta));

  Tensor df = ext_d(Tensor::scalar(c, Kind::Form, f));
  Tensor dg = ext_d(Tensor::scalar(c, Kind::Form, g));
  ExpPoly fn = fn_bracket(J, f, g) - eval2(J.Lambda(), df - alpha, dg - beta);
  return JetSection(std::move(one_form), std::move(fn));
}

Tensor jet_anchor(const JacobiStructure& J, const JetSection& s) {
  return sharp(J.Lambda(), s.alpha) + J.E().scaled(s.f);
}

WForm bv_delta(const JacobiStructure& J, const WForm& lam) {
  const Chart& c = J.chart();
  const int k = lam.weight;
  if (k == 0) return WForm::zero(c, 0);
  int sk = (k % 2 == 0) ? 1 : -1;

  Tensor slot_a = as_deg(delta_operator(J.Lambda(), lam.a), k - 1) +
                  as_deg(lie_derivative(J.E(), lam.b), k - 1).scaled(Rational(sk)) +
                  as_deg(interior(J.E(), lam.a), k - 1).scaled(Rational(k));
  Tensor slot_b = as_deg(delta_operator(J.Lambda(), lam.b), k - 2) +
                  as_deg(interior(J.Lambda(), lam.a), k - 2).scaled(Rational(sk)) +
                  as_deg(interior(J.E(), lam.b), k - 2).scaled(Rational(k - 1));
  return WForm(k - 1, std::move(slot_a), std::move(slot_b));
}

namespace {

// e^{wexp t}(a + b ^ dt) with independent slot degrees: the intermediate
// values of the i(P) d - d i(P) composition.
struct LaxForm {
  int wexp = 0;
  Tensor a, b;
};

LaxForm lax_full_d(const LaxForm& x) {
  // d(e^{wt}(a + b^dt)) = e^{wt}[da + (db + w (-1)^{|a|} a)^dt]
  Tensor da = ext_d(x.a);
  Tensor db = ext_d(x.b);
  Tensor extra = x.a.scaled(Rational(x.wexp));
  if (x.a.degree() % 2 != 0) extra = -extra;
  return LaxForm{x.wexp, std::move(da), as_deg(db, x.a.degree()) + extra};
}

LaxForm lax_ip(const JacobiStructure& J, const LaxForm& x) {
  // i(P) over the pair: slot_a = i(L)a + (-1)^{|b|} i(E)b, slot_b = i(L)b.
  Tensor t1 = as_deg(interior(J.Lambda(), x.a), x.a.degree() - 2);
  Tensor t2 = as_deg(interior(J.E(), x.b), x.a.degree() - 2);
  if (x.b.degree() % 2 != 0) t2 = -t2;
  Tensor sb = as_deg(interior(J.Lambda(), x.b), x.a.degree() - 3);
  return LaxForm{x.wexp - 1, t1 + t2, std::move(sb)};
}

} // namespace

WForm bv_delta_oracle(const JacobiStructure& J, const WForm& lam) {
  const Chart& c = J.chart();
  const int k = lam.weight;
  if (k == 0) return WForm::zero(c, 0);
  LaxForm x{k, lam.a, lam.b};
  LaxForm ipd = lax_ip(J, lax_full_d(x));
  LaxForm dip = lax_full_d(lax_ip(J, x));
  Tensor slot_a = as_deg(ipd.a, k - 1) - as_deg(dip.a, k - 1);
  Tensor slot_b = as_deg(ipd.b, k - 2) - as_deg(dip.b, k - 2);
  return WForm(k - 1, std::move(slot_a), std::move(slot_b));
}

WForm gerstenhaber_bracket(const JacobiStructure& J, const WForm& x, const WForm& y) {
  const Chart& c = J.chart();
  const int k = x.weight;
  int out = x.weight + y.weight - 1;
  if (out < 0) return WForm::zero(c, 0);
  WForm t1 = wf_as_weight(bv_delta(J, wedge(x, y)), out);
  WForm t2 = wf_as_weight(wedge(bv_delta(J, x), y), out);
  WForm t3 = wf_as_weight(wedge(x, bv_delta(J, y)), out);
  int sk = (k % 2 == 0) ? 1 : -1;
  WForm r = t1 - t2 - t3.scaled(Rational(sk));
  return r.scaled(Rational(sk));
}

WForm bar_d(const WForm& lam) {
  const int k = lam.weight;
  return WForm(k + 1, ext_d(lam.a), as_deg(ext_d(lam.b), k));
}

WForm anticommutator_closed(const JacobiStructure& J, const WForm& lam) {
  // delta(d-bar) + (d-bar)delta on weight k:
  //   slot_a = (k+1) i(E) d a + k d i(E) a
  //   slot_b = (k-1) L_E b + i(E) d b - (-1)^k delta_L a
  const int k = lam.weight;
  int sk = (k % 2 == 0) ? 1 : -1;
  Tensor slot_a = interior(J.E(), ext_d(lam.a)).scaled(Rational(k + 1)) +
                  ext_d(as_deg(interior(J.E(), lam.a), k - 1)).scaled(Rational(k));
  Tensor slot_b = as_deg(lie_derivative(J.E(), lam.b), k - 1).scaled(Rational(k - 1)) +
                  as_deg(interior(J.E(), ext_d(lam.b)), k - 1) -
                  as_deg(delta_operator(J.Lambda(), lam.a), k - 1).scaled(Rational(sk));
  return WForm(k, as_deg(slot_a, k), std::move(slot_b));
}

WForm anticommutator_composed(const JacobiStructure& J, const WForm& lam) {
  WForm t1 = wf_as_weight(bv_delta(J, bar_d(lam)), lam.weight);
  WForm t2 = wf_as_weight(bar_d(bv_delta(J, lam)), lam.weight);
  return t1 + t2;
}

WMv sigma(const JacobiStructure& J, const WMv& C) {
  const int k = C.weight;
  Tensor a = as_deg(schouten(J.Lambda(), C.a), k + 1) -
             as_deg(wedge(J.E(), C.a), k + 1).scaled(Rational(k)) -
             as_deg(wedge(J.Lambda(), C.b), k + 1);
  Tensor b = as_deg(schouten(J.Lambda(), C.b), k) -
             as_deg(wedge(J.E(), C.b), k).scaled(Rational(k - 1)) +
             as_deg(schouten(J.E(), C.a), k);
  return WMv(k + 1, std::move(a), -b);
}

namespace {

std::vector<JetSection> basis_sections(const Chart& c) {
  std::vector<JetSection> out;
  out.push_back(JetSection(Tensor::zero(c, Kind::Form, 1), ExpPoly::constant(c, 1)));
  for (int i = 0; i < c.dim(); ++i)
    out.push_back(JetSection(Tensor::basis(c, Kind::Form, {static_cast<uint8_t>(i)}),
                             ExpPoly::zero(c)));
  return out;
}

// All increasing tuples of {0..n-1} of the given size.
void enum_tuples(int n, int size, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

} // namespace

WMv sigma_ce_oracle(const JacobiStructure& J, const WMv& C) {
  const Chart& c = J.chart();
  const int k = C.weight;
  const int m = c.dim();
  auto basis = basis_sections(c);   // basis[0] is the dt-direction

  auto value_on = [&](const std::vector<int>& sel) {
    // Chevalley-Eilenberg coboundary on the chosen basis sections.
    ExpPoly acc = ExpPoly::zero(c);
    const int n = static_cast<int>(sel.size());
    for (int i = 0; i < n; ++i) {
      std::vector<JetSection> rest;
      for (int r = 0; r < n; ++r)
        if (r != i) rest.push_back(basis[sel[r]]);
      ExpPoly v = apply_vf(jet_anchor(J, basis[sel[i]]), eval_wmv(C, rest));
      acc = acc + ((i % 2 == 0) ? v : -v);
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        std::vector<JetSection> args;
        args.push_back(jet_bracket(J, basis[sel[i]], basis[sel[j]]));
        for (int r = 0; r < n; ++r)
          if (r != i && r != j) args.push_back(basis[sel[r]]);
        ExpPoly v = eval_wmv(C, args);
        acc = acc + (((i + j) % 2 == 0) ? v : -v);
      }
    }
    return acc;
  };

  WMv out = WMv::zero(c, k + 1);
  std::vector<std::vector<int>> tuples;
  enum_tuples(m, k + 1, tuples);
  for (const auto& I : tuples) {
    std::vector<int> sel;
    for (int i : I) sel.push_back(i + 1);
    IdxTuple idx(I.begin(), I.end());
    Tensor term(c, Kind::Multivector, k + 1);
    term.add_term(idx, value_on(sel));
    out.a = out.a + term;
  }
  tuples.clear();
  enum_tuples(m, k, tuples);
  for (const auto& Jt : tuples) {
    std::vector<int> sel{0};
    for (int i : Jt) sel.push_back(i + 1);
    IdxTuple idx(Jt.begin(), Jt.end());
    Tensor term(c, Kind::Multivector, k);
    term.add_term(idx, value_on(sel));
    out.b = out.b + term;
  }
  return out;
}

namespace {

// e^{wexp t}(a + @t^b) with independent slot degrees (deg a = deg, deg b =
// deg-1): the superspace representation used by the weighted Schouten
// calculus.  t-dependence lives entirely in the integer exponent.
struct LaxMv {
  int wexp = 0;
  int deg = 0;
  Tensor a, b;
};

LaxMv lax_mv(int wexp, int deg, const Tensor& a, const Tensor& b) {
  return LaxMv{wexp, deg, as_deg(a, deg), as_deg(b, deg - 1)};
}

// Left odd derivative by the spatial generator i.
LaxMv lax_xi(const LaxMv& x, int i) {
  Tensor xa = interior_form(Tensor::basis(x.a.chart(), Kind::Form, {static_cast<uint8_t>(i)}), x.a);
  Tensor xb = interior_form(Tensor::basis(x.a.chart(), Kind::Form, {static_cast<uint8_t>(i)}), x.b);
  return lax_mv(x.wexp, x.deg - 1, as_deg(xa, x.deg - 1), -as_deg(xb, x.deg - 2));
}

// Left odd derivative by the t generator.
LaxMv lax_xi_t(const LaxMv& x) {
  return lax_mv(x.wexp, x.deg - 1, x.b, Tensor::zero(x.a.chart(), Kind::Multivector, 0));
}

LaxMv lax_coeff_partial(const LaxMv& x, int i) {
  Tensor da(x.a.chart(), Kind::Multivector, x.a.degree());
  for (const auto& [idx, v] : x.a.comps()) da.add_term(idx, v.partial(i));
  Tensor db(x.b.chart(), Kind::Multivector, x.b.degree());
  for (const auto& [idx, v] : x.b.comps()) db.add_term(idx, v.partial(i));
  return lax_mv(x.wexp, x.deg, da, db);
}

LaxMv lax_t_partial(const LaxMv& x) {
  return lax_mv(x.wexp, x.deg, x.a.scaled(Rational(x.wexp)), x.b.scaled(Rational(x.wexp)));
}

// (a + @t^b) ^ (a' + @t^b') = a^a' + @t^(b^a' + (-1)^{|a|} a^b').
LaxMv lax_wedge(const LaxMv& x, const LaxMv& y) {
  Tensor sa = wedge(x.a, y.a);
  Tensor cross = wedge(x.a, y.b);
  if (x.deg % 2 != 0) cross = -cross;
  Tensor sb = as_deg(wedge(x.b, y.a), x.deg + y.deg - 1) + as_deg(cross, x.deg + y.deg - 1);
  return lax_mv(x.wexp + y.wexp, x.deg + y.deg, as_deg(sa, x.deg + y.deg), sb);
}

LaxMv lax_add(const LaxMv& x, const LaxMv& y) {
  return lax_mv(x.wexp, x.deg, x.a + y.a, x.b + y.b);
}

// Bidirectional-contraction Schouten bracket over the m+1 odd generators.
LaxMv lax_schouten(const LaxMv& u, const LaxMv& v) {
  const Chart& c = u.a.chart();
  const int m = c.dim();
  const int deg = u.deg + v.deg - 1;
  bool u_odd = (u.deg % 2) != 0;
  LaxMv acc = lax_mv(u.wexp + v.wexp, deg, Tensor::zero(c, Kind::Multivector, deg),
                     Tensor::zero(c, Kind::Multivector, deg > 0 ? deg - 1 : 0));
  for (int i = 0; i < m; ++i) {
    LaxMv t1 = lax_wedge(lax_xi(u, i), lax_coeff_partial(v, i));
    LaxMv t2 = lax_wedge(lax_coeff_partial(u, i), lax_xi(v, i));
    if (u_odd) t2 = lax_mv(t2.wexp, t2.deg, -t2.a, -t2.b);
    acc = lax_add(acc, lax_add(t1, t2));
  }
  LaxMv t3 = lax_wedge(lax_xi_t(u), lax_t_partial(v));
  LaxMv t4 = lax_wedge(lax_t_partial(u), lax_xi_t(v));
  if (u_odd) t4 = lax_mv(t4.wexp, t4.deg, -t4.a, -t4.b);
  return lax_add(acc, lax_add(t3, t4));
}

} // namespace

WMv sigma_oracle(const JacobiStructure& J, const WMv& C) {
  LaxMv P = lax_mv(-1, 2, J.Lambda(), J.E());
  LaxMv Ct = lax_mv(-C.weight, C.weight, C.a, C.b);
  LaxMv r = lax_schouten(P, Ct);
  if (r.wexp != -(C.weight + 1))
    throw StructuralError("sigma_oracle: unexpected weight");
  return WMv(C.weight + 1, r.a, r.b);
}

WMv rho_sharp(const JacobiStructure& J, const Tensor& form) {
  if (form.kind() != Kind::Form) throw StructuralError("rho_sharp: expects a form");
  const Chart& c = J.chart();
  const int k = form.degree();
  const int m = c.dim();
  auto basis = basis_sections(c);
  int sk = (k % 2 == 0) ? 1 : -1;

  auto value_on = [&](const std::vector<int>& sel) {
    std::vector<Tensor> vecs;
    for (int s : sel) vecs.push_back(jet_anchor(J, basis[s]));
    ExpPoly v = eval_on(form, vecs);
    return (sk > 0) ? v : -v;
  };

  WMv out = WMv::zero(c, k);
  std::vector<std::vector<int>> tuples;
  enum_tuples(m, k, tuples);
  for (const auto& I : tuples) {
    std::vector<int> sel;
    for (int i : I) sel.push_back(i + 1);
    Tensor term(c, Kind::Multivector, k);
    term.add_term(IdxTuple(I.begin(), I.end()), value_on(sel));
    out.a = out.a + term;
  }
  if (k >= 1) {
    tuples.clear();
    enum_tuples(m, k - 1, tuples);
    for (const auto& Jt : tuples) {
      std::vector<int> sel{0};
      for (int i : Jt) sel.push_back(i + 1);
      Tensor term(c, Kind::Multivector, k - 1);
      term.add_term(IdxTuple(Jt.begin(), Jt.end()), value_on(sel));
      out.b = out.b + term;
    }
  }
  return out;
}

std::pair<Tensor, ExpPoly> hamiltonian_pair(const JacobiStructure& J, const ExpPoly& phi,
                                            const ExpPoly& slope) {
  const Chart& c = J.chart();
  Tensor dphi = ext_d(Tensor::scalar(c, Kind::Form, phi));
  Tensor x = sharp(J.Lambda(), dphi) + J.E().scaled(slope);
  return {std::move(x), -apply_vf(J.E(), phi)};
}

WForm interior_wmv1(const WMv& W, const WForm& lam) {
  if (W.weight != 1) throw StructuralError("interior_wmv1: weight-1 pair expected");
  const int k = lam.weight;
  if (k == 0) return WForm::zero(lam.a.chart(), 0);
  ExpPoly w = W.b.coeff({});
  Tensor slot_a = as_deg(interior(W.a, lam.a), k - 1) +
                  ((k - 1) % 2 == 0 ? lam.b.scaled(w) : -lam.b.scaled(w));
  Tensor slot_b = as_deg(interior(W.a, lam.b), k - 2);
  return WForm(k - 1, std::move(slot_a), std::move(slot_b));
}

} // namespace jbv
