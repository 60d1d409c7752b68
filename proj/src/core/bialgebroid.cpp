#include "core/bialgebroid.hpp"

#include <functional>

namespace jbv {

namespace {

Tensor d_scalar(const Chart& c, const ExpPoly& f) {
  return ext_d(Tensor::scalar(c, Kind::Form, f));
}

OForm oform_as_deg(const OForm& x, int d) {
  if (x.degree == d) return x;
  if (x.is_zero()) return OForm::zero(x.a.chart(), d);
  throw StructuralError("OForm has unexpected degree");
}

OMv omv_as_deg(const OMv& x, int d) {
  if (x.degree == d) return x;
  if (x.is_zero()) return OMv::zero(x.a.chart(), d);
  throw StructuralError("OMv has unexpected degree");
}

} // namespace

ExtSection ext_bracket(const ExtSection& s1, const ExtSection& s2, const Tensor& Omega) {
  if (!ext_d(Omega).is_zero())
    throw StructuralError("ext_bracket: the twisting 2-form must be closed");
  Tensor xy = schouten(s1.X, s2.X);
  ExpPoly fn = apply_vf(s1.X, s2.f) - apply_vf(s2.X, s1.f) + eval_on(Omega, {s1.X, s2.X});
  return ExtSection(std::move(xy), std::move(fn));
}

Tensor sharp_q_omega(const Tensor& Q, const Tensor& Omega) {
  const Chart& c = Q.chart();
  Tensor out(c, Kind::Multivector, 2);
  for (int i = 0; i < c.dim(); ++i) {
    Tensor si = sharp(Q, Tensor::basis(c, Kind::Form, {static_cast<uint8_t>(i)}));
    for (int j = i + 1; j < c.dim(); ++j) {
      Tensor sj = sharp(Q, Tensor::basis(c, Kind::Form, {static_cast<uint8_t>(j)}));
      out.add_term({static_cast<uint8_t>(i), static_cast<uint8_t>(j)}, eval_on(Omega, {si, sj}));
    }
  }
  return out;
}

OmegaPoissonStructure::OmegaPoissonStructure(Tensor Q, Tensor E, Tensor Omega)
    : Q_(std::move(Q)), E_(std::move(E)), Omega_(std::move(Omega)) {
  if (Q_.kind() != Kind::Multivector || Q_.degree() != 2)
    throw StructuralError("OmegaPoissonStructure: Q must be a bivector");
  if (E_.kind() != Kind::Multivector || E_.degree() != 1)
    throw StructuralError("OmegaPoissonStructure: E must be a vector field");
  if (Omega_.kind() != Kind::Form || Omega_.degree() != 2)
    throw StructuralError("OmegaPoissonStructure: Omega must be a 2-form");
  require_same_chart(Q_.chart(), E_.chart(), "OmegaPoissonStructure");
  require_same_chart(Q_.chart(), Omega_.chart(), "OmegaPoissonStructure");
  if (!ext_d(Omega_).is_zero())
    throw StructuralError("OmegaPoissonStructure: Omega must be closed");
}

OMv OmegaPoissonStructure::pi() const { return OMv(2, Q_, E_); }

const OmegaValidity& OmegaPoissonStructure::validity() const {
  if (!validity_) {
    OmegaValidity v;
    v.residual_qq = schouten(Q_, Q_);
    v.residual_le = lie_derivative(E_, Q_) - sharp_q_omega(Q_, Omega_);
    v.residual_pi = omv_schouten(Omega_, pi(), pi());
    v.pass = v.residual_qq.is_zero() && v.residual_le.is_zero();
    validity_ = std::move(v);
  }
  return *validity_;
}

OmegaValidity check_omega_poisson(const OmegaPoissonStructure& S) { return S.validity(); }

ExtSection pi_sharp(const OmegaPoissonStructure& S, const JetSection& s) {
  Tensor x = sharp(S.Q(), s.alpha) + S.E().scaled(s.f);
  return ExtSection(std::move(x), -pairing(S.E(), s.alpha));
}

ExpPoly pi_eval(const OmegaPoissonStructure& S, const JetSection& s1, const JetSection& s2) {
  return eval2(S.Q(), s1.alpha, s2.alpha) + s1.f * pairing(S.E(), s2.alpha) -
         s2.f * pairing(S.E(), s1.alpha);
}

JetSection jet_bracket_omega(const OmegaPoissonStructure& S, const JetSection& s1,
                             const JetSection& s2) {
  const Tensor& alpha = s1.alpha;
  const Tensor& beta = s2.alpha;
  Tensor one = koszul_bracket(S.Q(), alpha, beta) +
               (lie_derivative(S.E(), beta) + flat(S.Omega(), sharp(S.Q(), beta))).scaled(s1.f) -
               (lie_derivative(S.E(), alpha) + flat(S.Omega(), sharp(S.Q(), alpha))).scaled(s2.f);
  ExpPoly fn = apply_vf(sharp(S.Q(), alpha), s2.f) - apply_vf(sharp(S.Q(), beta), s1.f) +
               s1.f * apply_vf(S.E(), s2.f) - s2.f * apply_vf(S.E(), s1.f);
  return JetSection(std::move(one), std::move(fn));
}

OForm d_omega(const Tensor& Omega, const OForm& lam) {
  if (!ext_d(Omega).is_zero())
    throw StructuralError("d_omega: the twisting 2-form must be closed");
  const int k = lam.degree;
  Tensor slot_a = ext_d(lam.a);
  Tensor corr = as_deg(wedge(Omega, lam.b), k + 1);
  slot_a = (k % 2 == 0) ? slot_a - corr : slot_a + corr;
  return OForm(k + 1, std::move(slot_a), as_deg(ext_d(lam.b), k));
}

namespace {

std::vector<ExtSection> ext_basis(const Chart& c) {
  std::vector<ExtSection> out;
  out.push_back(ExtSection(Tensor::zero(c, Kind::Multivector, 1), ExpPoly::constant(c, 1)));
  for (int i = 0; i < c.dim(); ++i)
    out.push_back(ExtSection(Tensor::basis(c, Kind::Multivector, {static_cast<uint8_t>(i)}),
                             ExpPoly::zero(c)));
  return out;
}

void enum_idx_tuples(int n, int size, std::vector<std::vector<int>>& out) {
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

OForm d_omega_ce(const OmegaPoissonStructure& S, const OForm& lam) {
  const Chart& c = S.chart();
  const int k = lam.degree;
  const int m = c.dim();
  auto basis = ext_basis(c);   // basis[0] = @t direction

  auto value_on = [&](const std::vector<int>& sel) {
    ExpPoly acc = ExpPoly::zero(c);
    const int n = static_cast<int>(sel.size());
    for (int i = 0; i < n; ++i) {
      std::vector<ExtSection> rest;
      for (int r = 0; r < n; ++r)
        if (r != i) rest.push_back(basis[sel[r]]);
      ExpPoly v = apply_vf(basis[sel[i]].X, eval_oform(lam, rest));
      if (basis[sel[i]].X.is_zero()) v = ExpPoly::zero(c);
      acc = acc + ((i % 2 == 0) ? v : -v);
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        std::vector<ExtSection> args;
        args.push_back(ext_bracket(basis[sel[i]], basis[sel[j]], S.Omega()));
        for (int r = 0; r < n; ++r)
          if (r != i && r != j) args.push_back(basis[sel[r]]);
        ExpPoly v = eval_oform(lam, args);
        acc = acc + (((i + j) % 2 == 0) ? v : -v);
      }
    }
    return acc;
  };

  OForm out = OForm::zero(c, k + 1);
  std::vector<std::vector<int>> tuples;
  enum_idx_tuples(m, k + 1, tuples);
  for (const auto& I : tuples) {
    std::vector<int> sel;
    for (int i : I) sel.push_back(i + 1);
    Tensor term(c, Kind::Form, k + 1);
    term.add_term(IdxTuple(I.begin(), I.end()), value_on(sel));
    out.a = out.a + term;
  }
  tuples.clear();
  enum_idx_tuples(m, k, tuples);
  int sk = (k % 2 == 0) ? 1 : -1;
  for (const auto& Jt : tuples) {
    std::vector<int> sel{0};
    for (int i : Jt) sel.push_back(i + 1);
    Tensor term(c, Kind::Form, k);
    // value on [t, e_J] = (-1)^{deg-1} * (slot-b component); invert the sign.
    term.add_term(IdxTuple(Jt.begin(), Jt.end()), value_on(sel).scaled(Rational(sk)));
    out.b = out.b + term;
  }
  return out;
}

OForm interior_ext(const ExtSection& u, const OForm& lam) {
  const int k = lam.degree;
  if (k == 0) return OForm::zero(lam.a.chart(), 0);
  Tensor slot_a = as_deg(interior(u.X, lam.a), k - 1);
  Tensor ft = lam.b.scaled(u.f);
  if ((k - 1) % 2 != 0) ft = -ft;
  slot_a = slot_a + as_deg(ft, k - 1);
  Tensor slot_b = as_deg(interior(u.X, lam.b), k - 2);
  return OForm(k - 1, std::move(slot_a), std::move(slot_b));
}

OForm lie_ext(const OmegaPoissonStructure& S, const ExtSection& u, const OForm& lam) {
  return oform_as_deg(interior_ext(u, d_omega(S.Omega(), lam)), lam.degree) +
         oform_as_deg(d_omega(S.Omega(), interior_ext(u, lam)), lam.degree);
}

Tensor wedge_omega(const Tensor& Omega, const Tensor& U, const Tensor& V) {
  if (U.degree() < 1 || V.degree() < 1)
    throw StructuralError("wedge_omega: degrees must be at least 1");
  const Chart& c = U.chart();
  const int m = c.dim();
  int deg = U.degree() + V.degree() - 2;
  Tensor out(c, Kind::Multivector, deg);
  for (int i = 0; i < m; ++i) {
    Tensor ui = interior_form(Tensor::basis(c, Kind::Form, {static_cast<uint8_t>(i)}), U);
    if (ui.is_zero()) continue;
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      ExpPoly oij = eval_on(Omega, {Tensor::basis(c, Kind::Multivector, {static_cast<uint8_t>(i)}),
                                    Tensor::basis(c, Kind::Multivector, {static_cast<uint8_t>(j)})});
      if (oij.is_zero()) continue;
      Tensor vj = interior_form(Tensor::basis(c, Kind::Form, {static_cast<uint8_t>(j)}), V);
      if (vj.is_zero()) continue;
      out = out + as_deg(wedge(ui, vj).scaled(oij), deg);
    }
  }
  return out;
}

Tensor wedge_omega_symmetrized(const Tensor& Omega, const Tensor& U, const Tensor& V) {
  if (U.degree() < 1 || V.degree() < 1)
    throw StructuralError("wedge_omega: degrees must be at least 1");
  const Chart& c = U.chart();
  const int m = c.dim();
  const int ku = U.degree(), kv = V.degree();
  const int deg = ku + kv - 2;
  Tensor out(c, Kind::Multivector, deg);

  auto fact = [](int n) {
    Rational r(1);
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
  };
  Rational norm = Rational(1) / (fact(ku - 1) * fact(kv - 1));

  std::vector<std::vector<int>> tuples;
  enum_idx_tuples(m, deg, tuples);
  std::vector<Tensor> covs, flats;
  for (int i = 0; i < m; ++i) {
    covs.push_back(Tensor::basis(c, Kind::Form, {static_cast<uint8_t>(i)}));
    flats.push_back(flat(Omega, Tensor::basis(c, Kind::Multivector, {static_cast<uint8_t>(i)})));
  }

  for (const auto& J : tuples) {
    // permutations of the argument list
    std::vector<int> perm(J.begin(), J.end());
    std::sort(perm.begin(), perm.end());
    ExpPoly acc = ExpPoly::zero(c);
    std::vector<int> p(perm);
    // generate all permutations with their parities
    std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& cur, int sign) {
      if (cur.size() == p.size()) {
        for (int i = 0; i < m; ++i) {
          std::vector<Tensor> uargs{covs[static_cast<size_t>(i)]};
          for (int r = 0; r < ku - 1; ++r) uargs.push_back(covs[static_cast<size_t>(cur[static_cast<size_t>(r)])]);
          ExpPoly uval = eval_on(U, uargs);
          if (uval.is_zero()) continue;
          std::vector<Tensor> vargs{flats[static_cast<size_t>(i)]};
          for (int r = ku - 1; r < deg; ++r) vargs.push_back(covs[static_cast<size_t>(cur[static_cast<size_t>(r)])]);
          ExpPoly vval = eval_on(V, vargs);
          acc = acc + (sign > 0 ? uval * vval : -(uval * vval));
        }
        return;
      }
      std::vector<int> remaining;
      for (int x : p) {
        bool used = false;
        for (int y : cur) used = used || (x == y);
        if (!used) remaining.push_back(x);
      }
      for (size_t r = 0; r < remaining.size(); ++r) {
        cur.push_back(remaining[r]);
        rec(cur, (r % 2 == 0) ? sign : -sign);
        cur.pop_back();
      }
    };
    // parity bookkeeping: choosing the r-th remaining element contributes the
    // parity of r transpositions relative to the sorted order
    std::vector<int> cur;
    rec(cur, 1);
    out.add_term(IdxTuple(J.begin(), J.end()), acc.scaled(norm));
  }
  return out;
}

// ---------------------------------------------------------- ext Schouten

namespace {

struct DecompTerm {
  std::vector<ExtSection> secs;   // empty => scalar term
  ExpPoly scalar;
};

std::vector<DecompTerm> decompose(const OMv& A) {
  const Chart& c = A.a.chart();
  std::vector<DecompTerm> out;
  for (const auto& [idx, coeff] : A.a.comps()) {
    if (idx.empty()) {
      out.push_back({{}, coeff});
      continue;
    }
    DecompTerm t;
    t.scalar = ExpPoly::zero(c);
    for (size_t r = 0; r < idx.size(); ++r) {
      Tensor v = Tensor::basis(c, Kind::Multivector, {idx[r]});
      if (r == 0) v = v.scaled(coeff);
      t.secs.push_back(ExtSection(std::move(v), ExpPoly::zero(c)));
    }
    out.push_back(std::move(t));
  }
  for (const auto& [idx, coeff] : A.b.comps()) {
    DecompTerm t;
    t.scalar = ExpPoly::zero(c);
    t.secs.push_back(ExtSection(Tensor::zero(c, Kind::Multivector, 1), coeff));
    for (size_t r = 0; r < idx.size(); ++r)
      t.secs.push_back(
          ExtSection(Tensor::basis(c, Kind::Multivector, {idx[r]}), ExpPoly::zero(c)));
    out.push_back(std::move(t));
  }
  return out;
}

OMv sections_to_omv(const Chart& c, const std::vector<ExtSection>& secs) {
  OMv acc(0, Tensor::scalar(c, Kind::Multivector, ExpPoly::constant(c, 1)),
          Tensor::zero(c, Kind::Multivector, 0));
  for (const auto& s : secs)
    acc = wedge(acc, OMv(1, s.X, Tensor::scalar(c, Kind::Multivector, s.f)));
  return acc;
}

OMv scalar_omv(const Chart& c, const ExpPoly& f) {
  return OMv(0, Tensor::scalar(c, Kind::Multivector, f), Tensor::zero(c, Kind::Multivector, 0));
}

// Recursive bracket of decomposable terms, Leibniz from ext_bracket.
OMv bracket_terms(const Chart& c, const Tensor& Omega, const std::vector<ExtSection>& ts,
                  const ExpPoly& tscalar, const std::vector<ExtSection>& us,
                  const ExpPoly& uscalar) {
  const int p = static_cast<int>(ts.size());
  const int q = static_cast<int>(us.size());
  int deg = p + q - 1;
  if (deg < 0) return OMv::zero(c, 0);

  if (p == 0) {
    if (q == 0) return OMv::zero(c, 0);
    // [f, B] = [B, f] in this convention
    OMv r = bracket_terms(c, Omega, us, uscalar, ts, tscalar);
    return omv_as_deg(r, deg);
  }
  if (q == 0) {
    // [A, f] = sum_r (-1)^{r-1} (anchor(a_r) f) a_1^..^a_r-hat^..
    OMv acc = OMv::zero(c, deg);
    for (int r = 0; r < p; ++r) {
      ExpPoly v = apply_vf(ts[static_cast<size_t>(r)].X, uscalar);
      if (ts[static_cast<size_t>(r)].X.is_zero()) v = ExpPoly::zero(c);
      if (v.is_zero()) continue;
      std::vector<ExtSection> rest;
      for (int i = 0; i < p; ++i)
        if (i != r) rest.push_back(ts[static_cast<size_t>(i)]);
      OMv w = wedge(scalar_omv(c, (r % 2 == 0) ? v : -v), sections_to_omv(c, rest));
      acc = acc + omv_as_deg(w, deg);
    }
    return acc;
  }
  if (p == 1) {
    // derivation across the factors of the second argument
    OMv acc = OMv::zero(c, deg);
    for (int r = 0; r < q; ++r) {
      std::vector<ExtSection> factors = us;
      factors[static_cast<size_t>(r)] = ext_bracket(ts[0], us[static_cast<size_t>(r)], Omega);
      acc = acc + omv_as_deg(sections_to_omv(c, factors), deg);
    }
    return acc;
  }
  // p >= 2: [x ^ rest, B] = (-1)^{q(p-1)} [x,B] ^ rest - x ^ [rest, B]
  std::vector<ExtSection> x{ts[0]};
  std::vector<ExtSection> rest(ts.begin() + 1, ts.end());
  OMv t1 = wedge(bracket_terms(c, Omega, x, tscalar, us, uscalar), sections_to_omv(c, rest));
  if ((q * (p - 1)) % 2 != 0) t1 = -t1;
  OMv t2 = wedge(sections_to_omv(c, x), bracket_terms(c, Omega, rest, tscalar, us, uscalar));
  return omv_as_deg(t1, deg) - omv_as_deg(t2, deg);
}

} // namespace

OMv omv_schouten(const Tensor& Omega, const OMv& A, const OMv& B) {
  const Chart& c = A.a.chart();
  int deg = A.degree + B.degree - 1;
  if (deg < 0) deg = 0;
  OMv acc = OMv::zero(c, deg);
  for (const auto& ta : decompose(A))
    for (const auto& tb : decompose(B))
      acc = acc + omv_as_deg(bracket_terms(c, Omega, ta.secs, ta.scalar, tb.secs, tb.scalar), deg);
  return acc;
}

OMv partial_omega(const OmegaPoissonStructure& S, const OMv& C) {
  const int k = C.degree;
  const Chart& c = S.chart();
  Tensor slot_a = as_deg(schouten(S.Q(), C.a), k + 1);
  Tensor qc2 = as_deg(schouten(S.Q(), C.b), k);
  Tensor lec1 = as_deg(lie_derivative(S.E(), C.a), k);
  Tensor womega = Tensor::zero(c, Kind::Multivector, k);
  if (k >= 1 && !S.Omega().is_zero())
    womega = as_deg(wedge_omega(S.Omega(), S.Q(), C.a), k);
  Tensor slot_b = -qc2 - lec1 - womega;
  return OMv(k + 1, std::move(slot_a), std::move(slot_b));
}

OForm delta_omega(const OmegaPoissonStructure& S, const OForm& lam) {
  const int k = lam.degree;
  const Chart& c = S.chart();
  if (k == 0) return OForm::zero(c, 0);
  int sk1 = ((k - 1) % 2 == 0) ? 1 : -1;
  Tensor comm = as_deg(interior(S.Q(), wedge(S.Omega(), lam.b)), k - 1) -
                as_deg(wedge(S.Omega(), as_deg(interior(S.Q(), lam.b), k - 3)), k - 1);
  Tensor slot_a = as_deg(delta_operator(S.Q(), lam.a), k - 1) +
                  (comm - as_deg(lie_derivative(S.E(), lam.b), k - 1)).scaled(Rational(sk1));
  Tensor slot_b = as_deg(delta_operator(S.Q(), lam.b), k - 2);
  return OForm(k - 1, std::move(slot_a), std::move(slot_b));
}

namespace {

OForm interior_pi(const OmegaPoissonStructure& S, const OForm& lam) {
  // i(Q + @t^E) on pairs: (i(Q)a + (-1)^{k-1} i(E)b) + (i(Q)b)^dt.
  const int k = lam.degree;
  Tensor t2 = as_deg(interior(S.E(), lam.b), k - 2);
  if ((k - 1) % 2 != 0) t2 = -t2;
  Tensor slot_a = as_deg(interior(S.Q(), lam.a), k - 2) + t2;
  Tensor slot_b = as_deg(interior(S.Q(), lam.b), k - 3);
  return OForm(k >= 2 ? k - 2 : 0, std::move(slot_a), std::move(slot_b));
}

} // namespace

OForm delta_omega_commutator(const OmegaPoissonStructure& S, const OForm& lam) {
  const int k = lam.degree;
  if (k == 0) return OForm::zero(S.chart(), 0);
  OForm t1 = interior_pi(S, d_omega(S.Omega(), lam));
  OForm t2 = d_omega(S.Omega(), interior_pi(S, lam));
  return oform_as_deg(t1, k - 1) - oform_as_deg(t2, k - 1);
}

OForm wedge(const OForm& x, const OForm& y) {
  int d = x.degree + y.degree;
  Tensor slot_a = as_deg(wedge(x.a, y.a), d);
  Tensor cross = wedge(x.b, y.a);
  if (y.degree % 2 != 0) cross = -cross;
  Tensor slot_b = as_deg(cross, d - 1) + as_deg(wedge(x.a, y.b), d - 1);
  return OForm(d, std::move(slot_a), std::move(slot_b));
}

OForm gerstenhaber_omega(const OmegaPoissonStructure& S, const OForm& x, const OForm& y) {
  const Chart& c = S.chart();
  const int k = x.degree;
  int out = x.degree + y.degree - 1;
  if (out < 0) return OForm::zero(c, 0);
  OForm t1 = oform_as_deg(delta_omega(S, wedge(x, y)), out);
  OForm t2 = oform_as_deg(wedge(delta_omega(S, x), y), out);
  OForm t3 = oform_as_deg(wedge(x, delta_omega(S, y)), out);
  int sk = (k % 2 == 0) ? 1 : -1;
  OForm r = t1 - t2 - (sk > 0 ? t3 : -t3);
  return (sk > 0) ? r : -r;
}

ExtSection modular_pi(const OmegaPoissonStructure& S, const VolumeForm& vol) {
  const Chart& c = S.chart();
  Tensor wq = Tensor::zero(c, Kind::Multivector, 1);
  for (int i = 0; i < c.dim(); ++i) {
    Tensor xi = sharp(S.Q(), Tensor::basis(c, Kind::Form, {static_cast<uint8_t>(i)}));
    Tensor comp(c, Kind::Multivector, 1);
    comp.add_term({static_cast<uint8_t>(i)}, vol.divide(lie_derivative(xi, vol.phi())));
    wq = wq + comp;
  }
  ExpPoly div_e = vol.divide(lie_derivative(S.E(), vol.phi()));
  return ExtSection(wq + S.E(), div_e);
}

ExpPoly trace_flat_sharp(const OmegaPoissonStructure& S) {
  const Chart& c = S.chart();
  ExpPoly acc = ExpPoly::zero(c);
  for (int i = 0; i < c.dim(); ++i) {
    Tensor img = flat(S.Omega(), sharp(S.Q(), Tensor::basis(c, Kind::Form, {static_cast<uint8_t>(i)})));
    acc = acc + pairing(Tensor::basis(c, Kind::Multivector, {static_cast<uint8_t>(i)}), img);
  }
  return acc;
}

ExpPoly modular_elw_omega_scalar(const OmegaPoissonStructure& S, const VolumeForm& vol,
                                 const ExpPoly& f) {
  const Chart& c = S.chart();
  JetSection jf(ext_d(Tensor::scalar(c, Kind::Form, f)), f);

  // Leibniz expansion of the 1-jet Lie derivative of (Phi ^ dt) over a
  // decomposition into 1-form sections plus the dt direction.
  const auto& [idx, coeff] = *vol.phi().comps().begin();
  std::vector<JetSection> factors;
  for (size_t r = 0; r < idx.size(); ++r) {
    Tensor one = Tensor::basis(c, Kind::Form, {idx[r]});
    if (r == 0) one = one.scaled(coeff);
    factors.emplace_back(one, ExpPoly::zero(c));
  }
  factors.push_back(JetSection(Tensor::zero(c, Kind::Form, 1), ExpPoly::constant(c, 1)));

  auto as_oform = [&](const JetSection& s) {
    return OForm(1, s.alpha, Tensor::scalar(c, Kind::Form, s.f));
  };
  OForm unit(0, Tensor::scalar(c, Kind::Form, ExpPoly::constant(c, 1)),
             Tensor::zero(c, Kind::Form, 0));
  OForm total = OForm::zero(c, static_cast<int>(factors.size()));
  for (size_t r = 0; r < factors.size(); ++r) {
    OForm w = unit;
    for (size_t s = 0; s < factors.size(); ++s) {
      OForm fac = (s == r) ? as_oform(jet_bracket_omega(S, jf, factors[s]))
                           : as_oform(factors[s]);
      w = wedge(w, fac);
    }
    total = total + w;
  }
  if (!total.a.is_zero())
    throw StructuralError("modular_elw_omega: unexpected top slot");
  ExpPoly c1 = vol.divide(total.b);

  Tensor rho = sharp(S.Q(), jf.alpha) + S.E().scaled(f);
  ExpPoly c2 = vol.divide(lie_derivative(rho, vol.phi()));
  return c1 + c2;
}

ExtSection modular_elw_omega(const OmegaPoissonStructure& S, const VolumeForm& vol) {
  const Chart& c = S.chart();
  ExpPoly e0 = modular_elw_omega_scalar(S, vol, ExpPoly::constant(c, 1));
  Tensor vec = Tensor::zero(c, Kind::Multivector, 1);
  for (int i = 0; i < c.dim(); ++i) {
    ExpPoly xi = ExpPoly::coordinate(c, i);
    ExpPoly vi = modular_elw_omega_scalar(S, vol, xi) - xi * e0;
    Tensor comp(c, Kind::Multivector, 1);
    comp.add_term({static_cast<uint8_t>(i)}, vi);
    vec = vec + comp;
  }
  return ExtSection(std::move(vec), std::move(e0));
}

StudiFunction studi_bracket(const OmegaPoissonStructure& S, const StudiFunction& F,
                            const StudiFunction& G) {
  if (!S.omega_is_zero())
    throw StructuralError("studi_bracket: supported for enriched Poisson pairs (Omega = 0)");
  const Chart& c = S.chart();
  auto qb = [&](const ExpPoly& a, const ExpPoly& b) {
    return eval2(S.Q(), d_scalar(c, a), d_scalar(c, b));
  };
  auto ed = [&](const ExpPoly& a) { return apply_vf(S.E(), a); };
  StudiFunction out;
  out.f0 = qb(F.f0, G.f0) + F.f1 * ed(G.f0) - G.f1 * ed(F.f0);
  out.f1 = qb(F.f0, G.f1) + qb(F.f1, G.f0) + F.f1 * ed(G.f1) - G.f1 * ed(F.f1);
  return out;
}

OmegaPoissonStructure time_function_structure(const JacobiStructure& J, const ExpPoly& tau) {
  const Chart& c = J.chart();
  Tensor dtau = d_scalar(c, tau);
  if (apply_vf(J.E(), tau) != ExpPoly::constant(c, 1))
    throw StructuralError("time_function_structure: E tau = 1 fails");
  bool nowhere_zero = false;
  for (const auto& [idx, coeff] : dtau.comps()) {
    (void)idx;
    if (coeff.is_unit()) nowhere_zero = true;
  }
  if (!nowhere_zero)
    throw StructuralError(
        "time_function_structure: cannot certify d tau nowhere zero (needs a unit component)");

  Tensor corr = wedge(sharp(J.Lambda(), dtau), J.E());
  Tensor zero2 = Tensor::zero(c, Kind::Form, 2);
  // The displayed correction sign does not produce a Poisson bivector; the
  // opposite one does.  Both are tried, the verified one is returned.
  for (int sign : {+1, -1}) {
    Tensor cand = (sign > 0) ? J.Lambda() + corr : J.Lambda() - corr;
    if (schouten(cand, cand).is_zero() && lie_derivative(J.E(), cand).is_zero())
      return OmegaPoissonStructure(cand, J.E(), zero2);
  }
  throw StructuralError("time_function_structure: no sign choice yields an enriched pair");
}

Tensor hamiltonian_trajectory_field(const OmegaPoissonStructure& S0, const ExpPoly& H) {
  return sharp(S0.Q(), d_scalar(S0.chart(), H)) + S0.E();
}

ExpPoly s_bracket(const JacobiStructure& J, const ExpPoly& f, const ExpPoly& g) {
  const Chart& c = J.chart();
  // d_* g on the 1-jet algebroid, evaluated on basis sections.
  Tensor x = Tensor::zero(c, Kind::Multivector, 1);
  for (int i = 0; i < c.dim(); ++i) {
    JetSection s(Tensor::basis(c, Kind::Form, {static_cast<uint8_t>(i)}), ExpPoly::zero(c));
    Tensor comp(c, Kind::Multivector, 1);
    comp.add_term({static_cast<uint8_t>(i)}, apply_vf(jet_anchor(J, s), g));
    x = x + comp;
  }
  // <d-bar f, d_* g>: only the TM-part of d_* g pairs with df.
  WForm dbar_f = bar_d(WForm(0, Tensor::scalar(c, Kind::Form, f), Tensor::zero(c, Kind::Form, 0)));
  return pairing(x, dbar_f.a);
}

} // namespace jbv
