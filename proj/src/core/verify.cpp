#include "core/verify.hpp"

#include <algorithm>
#include <sstream>

namespace jbv {

namespace {

WForm rand_wform(Rng& rng, const Chart& c, int k) {
  Tensor a = rng.tensor(c, Kind::Form, k, 2, 2, true);
  Tensor b = (k >= 1) ? rng.tensor(c, Kind::Form, k - 1, 2, 2, true)
                      : Tensor::zero(c, Kind::Form, 0);
  return WForm(k, std::move(a), std::move(b));
}

WMv rand_wmv(Rng& rng, const Chart& c, int k) {
  Tensor a = rng.tensor(c, Kind::Multivector, k, 2, 2, true);
  Tensor b = (k >= 1) ? rng.tensor(c, Kind::Multivector, k - 1, 2, 2, true)
                      : Tensor::zero(c, Kind::Multivector, 0);
  return WMv(k, std::move(a), std::move(b));
}

OForm rand_oform(Rng& rng, const Chart& c, int k) {
  Tensor a = rng.tensor(c, Kind::Form, k, 2, 2, false);
  Tensor b = (k >= 1) ? rng.tensor(c, Kind::Form, k - 1, 2, 2, false)
                      : Tensor::zero(c, Kind::Form, 0);
  return OForm(k, std::move(a), std::move(b));
}

OMv rand_omv(Rng& rng, const Chart& c, int k) {
  Tensor a = rng.tensor(c, Kind::Multivector, k, 2, 2, false);
  Tensor b = (k >= 1) ? rng.tensor(c, Kind::Multivector, k - 1, 2, 2, false)
                      : Tensor::zero(c, Kind::Multivector, 0);
  return OMv(k, std::move(a), std::move(b));
}

JetSection rand_jet(Rng& rng, const Chart& c) {
  return JetSection(rng.tensor(c, Kind::Form, 1, 2, 2, true), rng.exppoly(c, 2, 2, true));
}

ExtSection rand_ext(Rng& rng, const Chart& c) {
  return ExtSection(rng.tensor(c, Kind::Multivector, 1, 2, 2, false), rng.exppoly(c, 2, 2, false));
}

/// Runs `trials` deterministic trials; `body` returns an empty string on
/// success or a residual description.
void sweep(Report& rep, const std::string& name, const RunOptions& opts, int trials,
           const std::function<std::string(Rng&, int)>& body) {
  CheckResult c;
  c.name = name;
  c.pass = true;
  c.seed = opts.seed;
  for (int t = 0; t < trials; ++t) {
    Rng rng(opts.seed + static_cast<uint64_t>(t) * 7919u);
    std::string residual = body(rng, t);
    if (!residual.empty()) {
      c.pass = false;
      c.trial = t;
      c.residual = residual;
      break;
    }
  }
  rep.add(std::move(c));
}

std::string wf_residual(const WForm& w) { return w.to_string(); }
std::string wm_residual(const WMv& w) { return w.to_string(); }

WForm wcoerce(const WForm& w, int weight) {
  if (w.weight == weight) return w;
  if (w.is_zero()) return WForm::zero(w.a.chart(), weight);
  throw StructuralError("weighted form has unexpected weight");
}

// ------------------------------------------------------------ jacobi side

Report suite_bv_square(const StructureBundle& b, const RunOptions& opts) {
  Report rep;
  const auto& J = b.require_jacobi();
  const Chart& c = b.chart;
  for (int k = 1; k <= c.dim() + 1; ++k) {
    sweep(rep, "bv-square-w" + std::to_string(k), opts, opts.trials,
          [&](Rng& rng, int) -> std::string {
            WForm lam = rand_wform(rng, c, k);
            WForm dd = bv_delta(J, bv_delta(J, lam));
            return dd.is_zero() ? "" : wf_residual(dd);
          });
  }
  return rep;
}

Report suite_bv_oracle(const StructureBundle& b, const RunOptions& opts) {
  Report rep;
  const auto& J = b.require_jacobi();
  const Chart& c = b.chart;
  for (int k = 1; k <= c.dim() + 1; ++k) {
    sweep(rep, "bv-oracle-w" + std::to_string(k), opts, opts.trials,
          [&](Rng& rng, int) -> std::string {
            WForm lam = rand_wform(rng, c, k);
            WForm d1 = bv_delta(J, lam);
            WForm d2 = bv_delta_oracle(J, lam);
            return (d1 == d2) ? "" : wf_residual(d1 - d2);
          });
  }
  return rep;
}

Report suite_gerstenhaber_degree1(const StructureBundle& b, const RunOptions& opts) {
  Report rep;
  const auto& J = b.require_jacobi();
  const Chart& c = b.chart;
  sweep(rep, "bracket-degree1-agreement", opts, opts.trials, [&](Rng& rng, int) -> std::string {
    JetSection s1 = rand_jet(rng, c), s2 = rand_jet(rng, c);
    WForm lhs = gerstenhaber_bracket(J, s1.as_wform(), s2.as_wform());
    WForm rhs = jet_bracket(J, s1, s2).as_wform();
    return (lhs == rhs) ? "" : wf_residual(lhs - rhs);
  });
  sweep(rep, "jet-homomorphism", opts, opts.trials, [&](Rng& rng, int) -> std::string {
    ExpPoly f = rng.exppoly(c, 2, 2, true), g = rng.exppoly(c, 2, 2, true);
    JetSection lhs = jet_bracket(J, JetSection::jet(c, f), JetSection::jet(c, g));
    JetSection rhs = JetSection::jet(c, fn_bracket(J, f, g));
    return (lhs == rhs) ? "" : (lhs - rhs).to_string();
  });
  sweep(rep, "anchor-homomorphism", opts, opts.trials, [&](Rng& rng, int) -> std::string {
    JetSection s1 = rand_jet(rng, c), s2 = rand_jet(rng, c);
    Tensor lhs = jet_anchor(J, jet_bracket(J, s1, s2));
    Tensor rhs = schouten(jet_anchor(J, s1), jet_anchor(J, s2));
    return (lhs == rhs) ? "" : (lhs - rhs).to_string();
  });
  sweep(rep, "bracket-leibniz", opts, opts.trials, [&](Rng& rng, int) -> std::string {
    JetSection s1 = rand_jet(rng, c), s2 = rand_jet(rng, c);
    ExpPoly f = rng.exppoly(c, 2, 2, true);
    JetSection lhs = jet_bracket(J, s1, s2.scaled_fn(f));
    JetSection rhs = jet_bracket(J, s1, s2).scaled_fn(f) +
                     s2.scaled_fn(apply_vf(jet_anchor(J, s1), f));
    return (lhs == rhs) ? "" : (lhs - rhs).to_string();
  });
  sweep(rep, "fn-bracket-jacobi-identity", opts, opts.trials, [&](Rng& rng, int) -> std::string {
    ExpPoly f = rng.exppoly(c, 2, 2, true), g = rng.exppoly(c, 2, 2, true),
            h = rng.exppoly(c, 2, 2, true);
    ExpPoly r = fn_bracket(J, f, fn_bracket(J, g, h)) + fn_bracket(J, g, fn_bracket(J, h, f)) +
                fn_bracket(J, h, fn_bracket(J, f, g));
    return r.is_zero() ? "" : r.to_string();
  });
  return rep;
}

Report suite_gerstenhaber_laws(const StructureBundle& b, const RunOptions& opts) {
  Report rep;
  const auto& J = b.require_jacobi();
  const Chart& c = b.chart;
  int trials = std::min(opts.trials, 16);
  sweep(rep, "bracket-graded-antisymmetry", opts, trials, [&](Rng& rng, int) -> std::string {
    int ka = rng.range(0, 2), kb = rng.range(0, 2);
    WForm a = rand_wform(rng, c, ka), x = rand_wform(rng, c, kb);
    WForm lhs = gerstenhaber_bracket(J, a, x);
    WForm rhs = gerstenhaber_bracket(J, x, a);
    int s = ((ka - 1) * (kb - 1)) % 2 ? 1 : -1;   // -(-1)^{(ka-1)(kb-1)}
    WForm r = lhs + rhs.scaled(Rational(-s));
    return r.is_zero() ? "" : wf_residual(r);
  });
  sweep(rep, "bracket-leibniz-law", opts, trials, [&](Rng& rng, int) -> std::string {
    int ka = rng.range(0, 2), kb = rng.range(0, 1), kc = rng.range(0, 1);
    WForm a = rand_wform(rng, c, ka), x = rand_wform(rng, c, kb), y = rand_wform(rng, c, kc);
    WForm lhs = gerstenhaber_bracket(J, a, wedge(x, y));
    WForm t1 = wedge(gerstenhaber_bracket(J, a, x), y);
    WForm t2 = wedge(x, gerstenhaber_bracket(J, a, y));
    int s = ((ka - 1) * kb) % 2 ? -1 : 1;
    WForm r = lhs - wcoerce(t1, lhs.weight) - wcoerce(t2, lhs.weight).scaled(Rational(s));
    return r.is_zero() ? "" : wf_residual(r);
  });
  sweep(rep, "bracket-graded-jacobi", opts, std::min(trials, 8), [&](Rng& rng, int) -> std::string {
    int ka = rng.range(1, 2), kb = rng.range(0, 1), kc = rng.range(0, 1);
    WForm a = rand_wform(rng, c, ka), x = rand_wform(rng, c, kb), y = rand_wform(rng, c, kc);
    auto br = [&](const WForm& u, const WForm& v) { return gerstenhaber_bracket(J, u, v); };
    auto sgn = [](int u, int w) { return ((u - 1) * (w - 1)) % 2 ? -1 : 1; };
    int out = ka + kb + kc - 2;
    if (out < 0) return "";
    WForm t1 = wcoerce(br(a, br(x, y)), out).scaled(Rational(sgn(ka, kc)));
    WForm t2 = wcoerce(br(x, br(y, a)), out).scaled(Rational(sgn(kb, ka)));
    WForm t3 = wcoerce(br(y, br(a, x)), out).scaled(Rational(sgn(kc, kb)));
    WForm r = t1 + t2 + t3;
    return r.is_zero() ? "" : wf_residual(r);
  });
  return rep;
}

Report suite_anticommutator(const StructureBundle& b, const RunOptions& opts) {
  Report rep;
  const auto& J = b.require_jacobi();
  const Chart& c = b.chart;
  for (int k = 0; k <= c.dim() + 1; ++k) {
    sweep(rep, "anticommutator-w" + std::to_string(k), opts, opts.trials,
          [&](Rng& rng, int) -> std::string {
            WForm lam = rand_wform(rng, c, k);
            WForm composed = anticommutator_composed(J, lam);
            WForm closed = anticommutator_closed(J, lam);
            return (composed == closed) ? "" : wf_residual(composed - closed);
          });
  }
  return rep;
}

Report suite_sigma_square(const StructureBundle& b, const RunOptions& opts) {
  Report rep;
  const auto& J = b.require_jacobi();
  const Chart& c = b.chart;
  for (int k = 0; k <= c.dim(); ++k) {
    sweep(rep, "sigma-square-w" + std::to_string(k), opts, opts.trials,
          [&](Rng& rng, int) -> std::string {
            WMv C = rand_wmv(rng, c, k);
            WMv r = sigma(J, sigma(J, C));
            return r.is_zero() ? "" : wm_residual(r);
          });
  }
  return rep;
}

Report suite_sigma_oracle(const StructureBundle& b, const RunOptions& opts) {
  Report rep;
  const auto& J = b.require_jacobi();
  const Chart& c = b.chart;
  for (int k = 0; k <= c.dim(); ++k) {
    sweep(rep, "sigma-superspace-oracle-w" + std::to_string(k), opts, opts.trials,
          [&](Rng& rng, int) -> std::string {
            WMv C = rand_wmv(rng, c, k);
            WMv s1 = sigma(J, C);
            WMv s2 = sigma_oracle(J, C);
            return (s1 == s2) ? "" : wm_residual(s1 - s2);
          });
    sweep(rep, "sigma-sections-oracle-w" + std::to_string(k), opts, std::min(opts.trials, 10),
          [&](Rng& rng, int) -> std::string {
            WMv C = rand_wmv(rng, c, k);
            WMv s1 = sigma(J, C);
            WMv s2 = sigma_ce_oracle(J, C);
            return (s1 == s2) ? "" : wm_residual(s1 - s2);
          });
  }
  return rep;
}

Report suite_chain_map(const StructureBundle& b, const RunOptions& opts) {
  Report rep;
  const auto& J = b.require_jacobi();
  const Chart& c = b.chart;
  for (int k = 0; k <= c.dim(); ++k) {
    sweep(rep, "anchor-pullback-chain-map-deg" + std::to_string(k), opts, opts.trials,
          [&](Rng& rng, int) -> std::string {
            Tensor lam = rng.tensor(c, Kind::Form, k, 2, 2, true);
            WMv lhs = sigma(J, rho_sharp(J, lam));
            WMv rhs = rho_sharp(J, ext_d(lam));
            return (lhs == rhs) ? "" : wm_residual(lhs - rhs);
          });
  }
  return rep;
}

Report suite_modular(const StructureBundle& b, const RunOptions& opts) {
  Report rep;
  const auto& J = b.require_jacobi();
  const VolumeForm& vol = b.require_vol();
  const Chart& c = b.chart;
  ModularData md = modular_data(J, vol);

  sweep(rep, "modular-defining-identities", opts, opts.trials, [&](Rng& rng, int) -> std::string {
    ExpPoly f = rng.exppoly(c, 2, 2, false);
    Tensor xf = sharp(J.Lambda(), ext_d(Tensor::scalar(c, Kind::Form, f)));
    ExpPoly lhs = vol.divide(lie_derivative(xf, vol.phi()));
    ExpPoly rhs = apply_vf(md.V, f);
    if (lhs != rhs) return (lhs - rhs).to_string();
    ExpPoly de = vol.divide(lie_derivative(J.E(), vol.phi()));
    return (de == md.divE) ? "" : (de - md.divE).to_string();
  });

  {
    CheckResult c1;
    c1.name = "modular-derivation-property";
    c1.pass = md.derivation_ok;
    rep.add(c1);
  }

  sweep(rep, "modular-rescaling-covariance", opts, 1, [&](Rng&, int) -> std::string {
    // Phi -> exp(x_1) Phi shifts the class section by -sigma(x_1).
    std::vector<Rational> freq(static_cast<size_t>(c.dim()), Rational(0));
    freq[0] = 1;
    VolumeForm vol2(vol.phi().scaled(ExpPoly::exponential(c, freq)));
    ModularData md2 = modular_data(J, vol2);
    ExpPoly g = ExpPoly::coordinate(c, 0);
    Tensor shift_vec = md2.V_class.X - md.V_class.X;
    ExpPoly shift_fn = md2.V_class.f - md.V_class.f;
    Tensor sg = sharp(J.Lambda(), ext_d(Tensor::scalar(c, Kind::Form, g)));
    if (shift_vec != -sg) return "vector shift differs from -sharp(dg): " + (shift_vec + sg).to_string();
    ExpPoly eg = apply_vf(J.E(), g);
    return (shift_fn == eg) ? "" : "scalar shift differs from Eg: " + (shift_fn - eg).to_string();
  });

  sweep(rep, "elw-two-routes", opts, std::min(opts.trials, 10), [&](Rng& rng, int) -> std::string {
    ExpPoly f = rng.exppoly(c, 2, 2, false);
    ExpPoly a = elw_expression(J, vol, f);
    ExpPoly b2 = elw_expression_leibniz(J, vol, f);
    return (a == b2) ? "" : (a - b2).to_string();
  });

  sweep(rep, "elw-closed-form", opts, opts.trials, [&](Rng& rng, int) -> std::string {
    // definition route equals 2(Vf) + 2 f divE - (m-1) Ef
    const int m = c.dim();
    ExpPoly f = rng.exppoly(c, 2, 2, false);
    ExpPoly lhs = elw_expression(J, vol, f);
    ExpPoly rhs = apply_vf(md.V, f).scaled(Rational(2)) + (f * md.divE).scaled(Rational(2)) -
                  apply_vf(J.E(), f).scaled(Rational(m - 1));
    return (lhs == rhs) ? "" : (lhs - rhs).to_string();
  });
  return rep;
}

Report suite_connection(const StructureBundle& b, const RunOptions& opts) {
  Report rep;
  const auto& J = b.require_jacobi();
  const VolumeForm& vol = b.require_vol();
  const Chart& c = b.chart;
  sweep(rep, "jet-connection-flatness", opts, opts.trials, [&](Rng& rng, int) -> std::string {
    JetSection t1 = rand_jet(rng, c), t2 = rand_jet(rng, c);
    ExpPoly r = connection_curvature(J, vol, t1, t2);
    return r.is_zero() ? "" : r.to_string();
  });
  sweep(rep, "connection-form-linearity", opts, opts.trials, [&](Rng& rng, int) -> std::string {
    WMv nu = connection_form(J, vol);
    JetSection t = rand_jet(rng, c);
    ExpPoly lhs = pair_wmv1_section(nu, t);
    ExpPoly rhs = jet_connection(J, vol, t).scalar;
    return (lhs == rhs) ? "" : (lhs - rhs).to_string();
  });
  return rep;
}

Report suite_d0(const StructureBundle& b, const RunOptions& opts) {
  Report rep;
  const auto& J = b.require_jacobi();
  const VolumeForm& vol = b.require_vol();
  const Chart& c = b.chart;
  for (int k = 1; k <= c.dim() + 1; ++k) {
    sweep(rep, "volume-boundary-square-w" + std::to_string(k), opts, opts.trials,
          [&](Rng& rng, int) -> std::string {
            WForm lam = rand_wform(rng, c, k);
            WForm r = d0(J, vol, d0(J, vol, lam));
            return r.is_zero() ? "" : wf_residual(r);
          });
  }
  return rep;
}

Report suite_twisted(const StructureBundle& b, const RunOptions& opts) {
  Report rep;
  const auto& J = b.require_jacobi();
  const VolumeForm& vol = b.require_vol();
  const Chart& c = b.chart;
  for (int k = 0; k <= c.dim(); ++k) {
    sweep(rep, "twisted-square-w" + std::to_string(k), opts, opts.trials,
          [&](Rng& rng, int) -> std::string {
            WMv C = rand_wmv(rng, c, k);
            WMv r = twisted_coboundary(J, vol, twisted_coboundary(J, vol, C));
            return r.is_zero() ? "" : wm_residual(r);
          });
  }
  return rep;
}

/// Pins the per-degree sign on deterministic rank-one probes, then checks it
/// across random inputs.  Returns 0 when no probe separates the signs.
int pin_sign(const Chart& c, int k, const std::function<WForm(const WMv&)>& lhs,
             const std::function<WForm(const WMv&)>& rhs) {
  std::vector<WMv> probes;
  std::vector<IdxTuple> ia, ib;
  std::function<void(int, int, IdxTuple, std::vector<IdxTuple>&)> gen =
      [&](int start, int size, IdxTuple cur, std::vector<IdxTuple>& out) {
        if (static_cast<int>(cur.size()) == size) {
          out.push_back(cur);
          return;
        }
        for (int i = start; i < c.dim(); ++i) {
          IdxTuple next = cur;
          next.push_back(static_cast<uint8_t>(i));
          gen(i + 1, size, next, out);
        }
      };
  gen(0, k, {}, ia);
  if (k >= 1) gen(0, k - 1, {}, ib);
  std::vector<ExpPoly> coeffs{ExpPoly::constant(c, 1)};
  for (int i = 0; i < c.dim(); ++i) coeffs.push_back(ExpPoly::coordinate(c, i));
  for (const auto& co : coeffs) {
    for (const auto& idx : ia) {
      Tensor a(c, Kind::Multivector, k);
      a.add_term(idx, co);
      probes.push_back(WMv(k, a, Tensor::zero(c, Kind::Multivector, k >= 1 ? k - 1 : 0)));
    }
    for (const auto& idx : ib) {
      Tensor bb(c, Kind::Multivector, k - 1);
      bb.add_term(idx, co);
      probes.push_back(WMv(k, Tensor::zero(c, Kind::Multivector, k), bb));
    }
  }
  for (const auto& C : probes) {
    WForm l = lhs(C), r = rhs(C);
    if (l.is_zero() || r.is_zero()) continue;
    if (l == r) return 1;
    if (l == -r) return -1;
    return 0;   // no single sign works
  }
  return 1;   // everything vanished; sign immaterial
}

Report suite_star_duality(const StructureBundle& b, const RunOptions& opts) {
  Report rep;
  const auto& J = b.require_jacobi();
  const VolumeForm& vol = b.require_vol();
  const Chart& c = b.chart;
  std::ostringstream pinned;
  for (int k = 0; k <= c.dim(); ++k) {
    int eps = pin_sign(
        c, k, [&](const WMv& C) { return star_map(sigma(J, C), vol); },
        [&](const WMv& C) { return d0(J, vol, star_map(C, vol)); });
    pinned << (k ? "," : "") << "eps(" << k << ")=" << eps;
    sweep(rep, "star-intertwines-sigma-d0-w" + std::to_string(k), opts, opts.trials,
          [&, eps](Rng& rng, int) -> std::string {
            if (eps == 0) return "no consistent sign on rank-one probes";
            WMv C = rand_wmv(rng, c, k);
            WForm lhs = star_map(sigma(J, C), vol);
            WForm rhs = d0(J, vol, star_map(C, vol)).scaled(Rational(eps));
            return (lhs == rhs) ? "" : wf_residual(lhs - rhs);
          });
    int eps2 = pin_sign(
        c, k, [&](const WMv& C) { return star_map(twisted_coboundary(J, vol, C), vol); },
        [&](const WMv& C) { return bv_delta(J, star_map(C, vol)); });
    sweep(rep, "star-intertwines-twisted-bv-w" + std::to_string(k), opts, opts.trials,
          [&, eps2](Rng& rng, int) -> std::string {
            if (eps2 == 0) return "no consistent sign on rank-one probes";
            WMv C = rand_wmv(rng, c, k);
            WForm lhs = star_map(twisted_coboundary(J, vol, C), vol);
            WForm rhs = bv_delta(J, star_map(C, vol)).scaled(Rational(eps2));
            return (lhs == rhs) ? "" : wf_residual(lhs - rhs);
          });
  }
  CheckResult info;
  info.name = "star-pinned-signs";
  info.pass = true;
  info.residual = pinned.str();
  rep.add(info);
  return rep;
}

Report suite_betti_duality(const StructureBundle& b, const RunOptions& opts) {
  Report rep;
  const auto& J = b.require_jacobi();
  const VolumeForm& vol = b.require_vol();
  const int m = b.chart.dim();
  CheckResult c1;
  c1.name = "betti-duality-N" + std::to_string(opts.max_degree);
  try {
    TruncatedComplex td = truncated_complex(ComplexOp::D0, J, &vol, opts.max_degree);
    TruncatedComplex ts = truncated_complex(ComplexOp::Sigma, J, &vol, opts.max_degree);
    auto bd = betti(td);
    auto bs = betti(ts);
    bool ok = true;
    std::ostringstream os;
    for (int k = 0; k <= m + 1; ++k) {
      int dual = m - k + 1;
      int lhs = bd[static_cast<size_t>(k)];
      int rhs = (dual >= 0 && dual <= m + 1) ? bs[static_cast<size_t>(dual)] : 0;
      os << (k ? " " : "") << "h" << k << "=" << lhs << "|" << rhs;
      ok = ok && (lhs == rhs);
    }
    // consecutive matrices must compose to zero
    for (int k = 0; k <= m; ++k) {
      ok = ok && composes_to_zero(td.mats[static_cast<size_t>(k)], td.mats[static_cast<size_t>(k) + 1]);
      ok = ok && composes_to_zero(ts.mats[static_cast<size_t>(k) + 1], ts.mats[static_cast<size_t>(k)]);
    }
    c1.pass = ok;
    c1.residual = os.str();
  } catch (const StructuralError& e) {
    c1.pass = false;
    c1.residual = e.what();
  }
  rep.add(c1);
  return rep;
}

Report suite_non_unimodular(const StructureBundle& b, const RunOptions& opts) {
  Report rep;
  const auto& J = b.require_jacobi();
  const VolumeForm& vol = b.require_vol();
  ModularData md = modular_data(J, vol);
  WMv target(1, md.V_class.X, Tensor::scalar(b.chart, Kind::Multivector, md.V_class.f));
  CheckResult c1;
  c1.name = "modular-class-nontrivial-deg" + std::to_string(opts.max_degree);
  auto f = solve_sigma_f(J, target, opts.max_degree);
  c1.pass = !f.has_value();
  c1.residual = f ? ("solvable: f = " + f->to_string())
                  : ("infeasible up to degree " + std::to_string(opts.max_degree));
  rep.add(c1);
  return rep;
}

Report suite_sbracket(const StructureBundle& b, const RunOptions& opts) {
  Report rep;
  const auto& J = b.require_jacobi();
  const Chart& c = b.chart;
  sweep(rep, "mixed-differential-bracket", opts, opts.trials, [&](Rng& rng, int) -> std::string {
    ExpPoly f = rng.exppoly(c, 2, 2, true), g = rng.exppoly(c, 2, 2, true);
    ExpPoly lhs = s_bracket(J, f, g);
    Tensor df = ext_d(Tensor::scalar(c, Kind::Form, f));
    Tensor dg = ext_d(Tensor::scalar(c, Kind::Form, g));
    ExpPoly rhs = eval2(J.Lambda(), df, dg);
    return (lhs == rhs) ? "" : (lhs - rhs).to_string();
  });
  return rep;
}

Report suite_time_function(const StructureBundle& b, const RunOptions& opts) {
  Report rep;
  const auto& J = b.require_jacobi();
  const Chart& c = b.chart;
  auto it = b.functions.find("tau");
  CheckResult have;
  have.name = "time-function-present";
  have.pass = (it != b.functions.end());
  if (!have.pass) have.residual = "no function named tau on this structure";
  rep.add(have);
  if (!have.pass) return rep;

  OmegaPoissonStructure S0 = time_function_structure(J, it->second);
  CheckResult ok;
  ok.name = "time-function-enriched-pair";
  ok.pass = S0.is_valid();
  if (!ok.pass) ok.residual = S0.validity().residual_qq.to_string();
  rep.add(ok);

  sweep(rep, "trajectory-field-normalization", opts, opts.trials, [&](Rng& rng, int) -> std::string {
    ExpPoly h = rng.exppoly(c, 2, 2, false);
    Tensor x = hamiltonian_trajectory_field(S0, h);
    ExpPoly r = apply_vf(x, it->second) - ExpPoly::constant(c, 1);
    return r.is_zero() ? "" : r.to_string();
  });
  return rep;
}

// ------------------------------------------------------------ omega side

Report suite_ext_jacobi(const StructureBundle& b, const RunOptions& opts) {
  Report rep;
  const Chart& c = b.chart;
  Tensor omega = b.omega ? b.omega->Omega() : Tensor::zero(c, Kind::Form, 2);
  sweep(rep, "extended-bracket-jacobi", opts, opts.trials, [&](Rng& rng, int) -> std::string {
    ExtSection s1 = rand_ext(rng, c), s2 = rand_ext(rng, c), s3 = rand_ext(rng, c);
    ExtSection r = ext_bracket(ext_bracket(s1, s2, omega), s3, omega) +
                   ext_bracket(ext_bracket(s2, s3, omega), s1, omega) +
                   ext_bracket(ext_bracket(s3, s1, omega), s2, omega);
    return r.is_zero() ? "" : r.to_string();
  });

  // Constructive converse: a non-closed 2-form breaks the identity.
  CheckResult w;
  w.name = "extended-bracket-nonclosed-witness";
  {
    Chart c3 = Chart::make({"x1", "x2", "x3"});
    Tensor om(c3, Kind::Form, 2);
    om.add_term({0, 1}, ExpPoly::coordinate(c3, 2));   // x3 dx1^dx2, not closed
    auto raw = [&](const ExtSection& a, const ExtSection& bb) {
      return ExtSection(schouten(a.X, bb.X), apply_vf(a.X, bb.f) - apply_vf(bb.X, a.f) +
                                                 eval_on(om, {a.X, bb.X}));
    };
    ExtSection s1(Tensor::basis(c3, Kind::Multivector, {2}), ExpPoly::zero(c3));
    ExtSection s2(Tensor::basis(c3, Kind::Multivector, {0}), ExpPoly::zero(c3));
    ExtSection s3(Tensor::basis(c3, Kind::Multivector, {1}), ExpPoly::zero(c3));
    ExtSection r = raw(raw(s1, s2), s3) + raw(raw(s2, s3), s1) + raw(raw(s3, s1), s2);
    w.pass = !r.is_zero();
    w.residual = "jacobiator on (@x3, @x1, @x2) with x3*dx1^dx2: " + r.to_string();
  }
  rep.add(w);
  return rep;
}

Report suite_omega_check(const StructureBundle& b, const RunOptions&) {
  Report rep;
  const auto& S = b.require_omega();
  const OmegaValidity& v = S.validity();
  CheckResult c1;
  c1.name = "omega-poisson-conditions";
  c1.pass = v.pass;
  if (!v.pass)
    c1.residual = "[Q,Q]=" + v.residual_qq.to_string() + "; L_E Q - sharp_Q Omega=" +
                  v.residual_le.to_string();
  rep.add(c1);
  CheckResult c2;
  c2.name = "omega-poisson-pair-route-equivalence";
  c2.pass = (v.residual_pi.is_zero() == v.pass);
  c2.residual = "[Pi,Pi]: " + v.residual_pi.to_string();
  rep.add(c2);
  return rep;
}

Report suite_d_omega(const StructureBundle& b, const RunOptions& opts) {
  Report rep;
  const auto& S = b.require_omega();
  const Chart& c = b.chart;
  for (int k = 0; k <= c.dim(); ++k) {
    sweep(rep, "twisted-differential-square-deg" + std::to_string(k), opts, opts.trials,
          [&](Rng& rng, int) -> std::string {
            OForm lam = rand_oform(rng, c, k);
            OForm r = d_omega(S.Omega(), d_omega(S.Omega(), lam));
            return r.is_zero() ? "" : r.to_string();
          });
    sweep(rep, "twisted-differential-sections-oracle-deg" + std::to_string(k), opts,
          std::min(opts.trials, 10), [&](Rng& rng, int) -> std::string {
            OForm lam = rand_oform(rng, c, k);
            OForm lhs = d_omega(S.Omega(), lam);
            OForm rhs = d_omega_ce(S, lam);
            return (lhs == rhs) ? "" : (lhs - rhs).to_string();
          });
  }
  sweep(rep, "differential-matches-pair-dbar", opts, opts.trials, [&](Rng& rng, int) -> std::string {
    // with Omega = 0 the algebroid differential is the slotwise exterior one
    int k = rng.range(0, c.dim() - 1);
    OForm lam = rand_oform(rng, c, k);
    OForm lhs = d_omega(Tensor::zero(c, Kind::Form, 2), lam);
    WForm w(k, lam.a, lam.b);
    WForm dw = bar_d(w);
    return (lhs.a == dw.a && lhs.b == dw.b) ? "" : (lhs.a - dw.a).to_string();
  });
  return rep;
}

Report suite_partial_omega(const StructureBundle& b, const RunOptions& opts) {
  Report rep;
  const auto& S = b.require_omega();
  const Chart& c = b.chart;
  for (int k = 0; k <= c.dim(); ++k) {
    sweep(rep, "coboundary-oracle-deg" + std::to_string(k), opts, std::min(opts.trials, 12),
          [&](Rng& rng, int) -> std::string {
            OMv C = rand_omv(rng, c, k);
            OMv lhs = partial_omega(S, C);
            OMv rhs = omv_schouten(S.Omega(), S.pi(), C);
            return (lhs == rhs) ? "" : (lhs - rhs).to_string();
          });
    sweep(rep, "coboundary-square-deg" + std::to_string(k), opts, opts.trials,
          [&](Rng& rng, int) -> std::string {
            OMv C = rand_omv(rng, c, k);
            OMv r = partial_omega(S, partial_omega(S, C));
            return r.is_zero() ? "" : r.to_string();
          });
  }
  return rep;
}

Report suite_delta_omega(const StructureBundle& b, const RunOptions& opts) {
  Report rep;
  const auto& S = b.require_omega();
  const Chart& c = b.chart;
  for (int k = 0; k <= c.dim() + 1; ++k) {
    sweep(rep, "generator-commutator-oracle-deg" + std::to_string(k), opts, opts.trials,
          [&](Rng& rng, int) -> std::string {
            OForm lam = rand_oform(rng, c, k);
            OForm lhs = delta_omega(S, lam);
            OForm rhs = delta_omega_commutator(S, lam);
            return (lhs == rhs) ? "" : (lhs - rhs).to_string();
          });
    if (k >= 1)
      sweep(rep, "generator-square-deg" + std::to_string(k), opts, opts.trials,
            [&](Rng& rng, int) -> std::string {
              OForm lam = rand_oform(rng, c, k);
              OForm r = delta_omega(S, delta_omega(S, lam));
              return r.is_zero() ? "" : r.to_string();
            });
  }
  sweep(rep, "generator-degree1-agreement", opts, opts.trials, [&](Rng& rng, int) -> std::string {
    JetSection s1 = rand_jet(rng, c), s2 = rand_jet(rng, c);
    OForm x(1, s1.alpha, Tensor::scalar(c, Kind::Form, s1.f));
    OForm y(1, s2.alpha, Tensor::scalar(c, Kind::Form, s2.f));
    OForm lhs = gerstenhaber_omega(S, x, y);
    JetSection br = jet_bracket_omega(S, s1, s2);
    OForm rhs(1, br.alpha, Tensor::scalar(c, Kind::Form, br.f));
    return (lhs == rhs) ? "" : (lhs - rhs).to_string();
  });
  return rep;
}

Report suite_wedge_omega(const StructureBundle& b, const RunOptions& opts) {
  Report rep;
  const auto& S = b.require_omega();
  const Chart& c = b.chart;
  sweep(rep, "omega-pairing-vector-case", opts, opts.trials, [&](Rng& rng, int) -> std::string {
    Tensor u = rng.tensor(c, Kind::Multivector, 1, 2, 2, false);
    Tensor v = rng.tensor(c, Kind::Multivector, 1, 2, 2, false);
    Tensor lhs = wedge_omega(S.Omega(), u, v);
    ExpPoly rhs = eval_on(S.Omega(), {u, v});
    return (lhs.coeff({}) == rhs) ? "" : (lhs.coeff({}) - rhs).to_string();
  });
  sweep(rep, "omega-pairing-two-routes", opts, std::min(opts.trials, 12),
        [&](Rng& rng, int) -> std::string {
          int ku = rng.range(1, std::min(3, c.dim()));
          int kv = rng.range(1, std::min(3, c.dim()));
          Tensor u = rng.tensor(c, Kind::Multivector, ku, 1, 2, false);
          Tensor v = rng.tensor(c, Kind::Multivector, kv, 1, 2, false);
          Tensor lhs = wedge_omega(S.Omega(), u, v);
          Tensor rhs = wedge_omega_symmetrized(S.Omega(), u, v);
          return (lhs == rhs) ? "" : (lhs - rhs).to_string();
        });
  return rep;
}

Report suite_modular_omega(const StructureBundle& b, const RunOptions& opts) {
  Report rep;
  const auto& S = b.require_omega();
  const VolumeForm& vol = b.require_vol();
  const Chart& c = b.chart;
  ExtSection wpi = modular_pi(S, vol);
  ExpPoly div_e = wpi.f;
  Tensor wq = wpi.X - S.E();

  sweep(rep, "modular-pi-direct-route", opts, opts.trials, [&](Rng& rng, int) -> std::string {
    ExpPoly f = rng.exppoly(c, 2, 2, false);
    JetSection jf(ext_d(Tensor::scalar(c, Kind::Form, f)), f);
    OForm phidt(c.dim() + 1, Tensor::zero(c, Kind::Form, c.dim() + 1), vol.phi());
    OForm lhs = lie_ext(S, pi_sharp(S, jf), phidt);
    ExpPoly scal = apply_vf(wq, f) + f * div_e + apply_vf(S.E(), f);
    if (!lhs.a.is_zero()) return "top slot nonzero";
    return (vol.divide(lhs.b) == scal) ? "" : (vol.divide(lhs.b) - scal).to_string();
  });

  ExtSection a_omega = modular_elw_omega(S, vol);
  ExpPoly tr = trace_flat_sharp(S);
  {
    CheckResult c1;
    c1.name = "elw-omega-first-form";
    ExtSection want(wq.scaled(Rational(2)) + S.E(), div_e.scaled(Rational(2)) + tr);
    c1.pass = (a_omega == want);
    if (!c1.pass)
      c1.residual = (a_omega - want).to_string();
    rep.add(c1);
    CheckResult c2;
    c2.name = "elw-omega-second-form";
    ExtSection want2(wpi.X.scaled(Rational(2)) - S.E(), wpi.f.scaled(Rational(2)) + tr);
    c2.pass = (a_omega == want2);
    if (!c2.pass) c2.residual = (a_omega - want2).to_string();
    rep.add(c2);
  }

  sweep(rep, "modular-pi-rescaling-coboundary", opts, 1, [&](Rng&, int) -> std::string {
    std::vector<Rational> freq(static_cast<size_t>(c.dim()), Rational(0));
    freq[0] = 1;
    VolumeForm vol2(vol.phi().scaled(ExpPoly::exponential(c, freq)));
    ExtSection wpi2 = modular_pi(S, vol2);
    ExtSection diff = wpi2 - wpi;
    // solve partial(h) = diff over polynomials of degree <= 2
    std::vector<ExpKey> monos;
    {
      std::function<void(int, int, ExpKey&)> rec = [&](int i, int left, ExpKey& cur) {
        if (i == c.dim()) {
          monos.push_back(cur);
          return;
        }
        for (int d = 0; d <= left; ++d) {
          cur.exps[static_cast<size_t>(i)] = static_cast<uint32_t>(d);
          rec(i + 1, left - d, cur);
        }
        cur.exps[static_cast<size_t>(i)] = 0;
      };
      ExpKey cur{std::vector<uint32_t>(static_cast<size_t>(c.dim()), 0),
                 std::vector<Rational>(static_cast<size_t>(c.dim()), Rational(0))};
      rec(0, 2, cur);
    }
    struct RowKey {
      int slot;
      IdxTuple idx;
      ExpKey key;
      bool operator<(const RowKey& o) const {
        if (slot != o.slot) return slot < o.slot;
        if (idx != o.idx) return idx < o.idx;
        return key < o.key;
      }
    };
    std::map<RowKey, int> rows;
    auto row_of = [&](const RowKey& k) {
      auto it = rows.find(k);
      if (it == rows.end()) it = rows.emplace(k, static_cast<int>(rows.size())).first;
      return it->second;
    };
    auto collect = [&](const ExtSection& s, std::map<int, Rational>& into) {
      for (const auto& [idx, coeff] : s.X.comps())
        for (const auto& [key, v] : coeff.terms()) into[row_of({0, idx, key})] += v;
      for (const auto& [key, v] : s.f.terms()) into[row_of({1, {}, key})] += v;
    };
    std::vector<std::map<int, Rational>> cols;
    for (const auto& mo : monos) {
      ExpPoly h = ExpPoly::monomial(c, mo, 1);
      ExtSection img(sharp(S.Q(), ext_d(Tensor::scalar(c, Kind::Form, h))),
                     -apply_vf(S.E(), h));
      std::map<int, Rational> col;
      collect(img, col);
      cols.push_back(std::move(col));
    }
    std::map<int, Rational> rhs;
    collect(diff, rhs);
    Matrix a(rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
    std::vector<Rational> bb(rows.size(), Rational(0));
    for (size_t j = 0; j < cols.size(); ++j)
      for (const auto& [i, v] : cols[j]) a[static_cast<size_t>(i)][j] = v;
    for (const auto& [i, v] : rhs) bb[static_cast<size_t>(i)] = v;
    return solve(a, bb) ? "" : "rescaling shift is not a coboundary of a degree-0 element";
  });
  return rep;
}

Report suite_studi(const StructureBundle& b, const RunOptions& opts) {
  Report rep;
  const auto& S = b.require_omega();
  const Chart& c = b.chart;
  if (!S.omega_is_zero()) {
    CheckResult c1;
    c1.name = "studi-requires-enriched";
    c1.pass = false;
    c1.residual = "Omega must vanish for the parabolic-dual-number bracket";
    rep.add(c1);
    return rep;
  }
  auto rand_studi = [&](Rng& rng) {
    return StudiFunction{rng.exppoly(c, 2, 2, false), rng.exppoly(c, 2, 2, false)};
  };
  sweep(rep, "studi-skew", opts, opts.trials, [&](Rng& rng, int) -> std::string {
    StudiFunction F = rand_studi(rng), G = rand_studi(rng);
    StudiFunction fg = studi_bracket(S, F, G), gf = studi_bracket(S, G, F);
    ExpPoly r0 = fg.f0 + gf.f0, r1 = fg.f1 + gf.f1;
    return (r0.is_zero() && r1.is_zero()) ? "" : (r0 + r1).to_string();
  });
  sweep(rep, "studi-jacobi", opts, opts.trials, [&](Rng& rng, int) -> std::string {
    StudiFunction F = rand_studi(rng), G = rand_studi(rng), H = rand_studi(rng);
    auto br = [&](const StudiFunction& x, const StudiFunction& y) {
      return studi_bracket(S, x, y);
    };
    StudiFunction r1 = br(F, br(G, H)), r2 = br(G, br(H, F)), r3 = br(H, br(F, G));
    ExpPoly a0 = r1.f0 + r2.f0 + r3.f0, a1 = r1.f1 + r2.f1 + r3.f1;
    return (a0.is_zero() && a1.is_zero()) ? "" : (a0 + a1).to_string();
  });
  sweep(rep, "studi-hamiltonian-of-s", opts, opts.trials, [&](Rng& rng, int) -> std::string {
    ExpPoly g = rng.exppoly(c, 2, 2, false);
    StudiFunction s{ExpPoly::zero(c), ExpPoly::constant(c, 1)};
    StudiFunction r = studi_bracket(S, s, StudiFunction{g, ExpPoly::zero(c)});
    ExpPoly want = apply_vf(S.E(), g);
    return (r.f0 == want && r.f1.is_zero()) ? "" : (r.f0 - want + r.f1).to_string();
  });
  return rep;
}

using SuiteTable = std::map<std::string, SuiteFn>;

const SuiteTable& table() {
  static const SuiteTable t = {
      {"bv-square", suite_bv_square},
      {"bv-oracle", suite_bv_oracle},
      {"gerstenhaber-degree1", suite_gerstenhaber_degree1},
      {"gerstenhaber-laws", suite_gerstenhaber_laws},
      {"anticommutator", suite_anticommutator},
      {"sigma-square", suite_sigma_square},
      {"sigma-oracle", suite_sigma_oracle},
      {"chain-map", suite_chain_map},
      {"modular", suite_modular},
      {"connection", suite_connection},
      {"d0-square", suite_d0},
      {"twisted-square", suite_twisted},
      {"star-duality", suite_star_duality},
      {"betti-duality", suite_betti_duality},
      {"non-unimodular", suite_non_unimodular},
      {"sbracket", suite_sbracket},
      {"time-function", suite_time_function},
      {"nonstrong", [](const StructureBundle& b, const RunOptions&) { return nonstrong_witness(b); }},
      {"ext-jacobi", suite_ext_jacobi},
      {"omega-check", suite_omega_check},
      {"d-omega", suite_d_omega},
      {"partial-omega", suite_partial_omega},
      {"delta-omega", suite_delta_omega},
      {"wedge-omega", suite_wedge_omega},
      {"modular-omega", suite_modular_omega},
      {"studi", suite_studi},
  };
  return t;
}

bool applies(const std::string& name, const StructureBundle& b) {
  static const std::vector<std::string> jacobi_suites = {
      "bv-square", "bv-oracle", "gerstenhaber-degree1", "gerstenhaber-laws", "anticommutator",
      "sigma-square", "sigma-oracle", "chain-map", "nonstrong", "sbracket", "time-function"};
  static const std::vector<std::string> jacobi_vol_suites = {
      "modular", "connection", "d0-square", "twisted-square", "star-duality", "non-unimodular"};
  static const std::vector<std::string> omega_suites = {
      "ext-jacobi", "omega-check", "d-omega", "partial-omega", "delta-omega", "wedge-omega"};
  static const std::vector<std::string> omega_vol_suites = {"modular-omega"};
  auto in = [&](const std::vector<std::string>& v) {
    return std::find(v.begin(), v.end(), name) != v.end();
  };
  if (in(jacobi_suites)) return b.jacobi.has_value();
  if (in(jacobi_vol_suites)) return b.jacobi.has_value() && b.vol.has_value();
  if (name == "betti-duality") {
    if (!b.jacobi || !b.vol) return false;
    auto trunc_ok = [](const Tensor& t) {
      for (const auto& [idx, coeff] : t.comps()) {
        (void)idx;
        if (coeff.has_exponentials() || coeff.poly_degree() > 1) return false;
      }
      return true;
    };
    return trunc_ok(b.jacobi->Lambda()) && trunc_ok(b.jacobi->E()) &&
           !b.vol->phi().comps().begin()->second.has_exponentials();
  }
  if (in(omega_suites)) return b.omega.has_value();
  if (in(omega_vol_suites)) return b.omega.has_value() && b.vol.has_value();
  if (name == "studi") return b.omega.has_value() && b.omega->omega_is_zero();
  return false;
}

} // namespace

const std::map<std::string, SuiteFn>& suite_registry() { return table(); }

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : table()) {
    (void)v;
    out.push_back(k);
  }
  return out;
}

Report run_suite(const std::string& name, const StructureBundle& b, const RunOptions& opts) {
  if (name == "all") {
    Report rep;
    for (const auto& [k, fn] : table())
      if (applies(k, b)) rep.merge(fn(b, opts));
    return rep;
  }
  auto it = table().find(name);
  if (it == table().end()) throw StructuralError("unknown verification suite '" + name + "'");
  return it->second(b, opts);
}

StructureBundle random_omega_structure(Rng& rng) {
  Chart c = Chart::make({"x1", "x2"});
  Rational cc = rng.rational_or_zero();
  Tensor q(c, Kind::Multivector, 2);
  q.add_term({0, 1}, ExpPoly::constant(c, 1));
  Tensor omega(c, Kind::Form, 2);
  omega.add_term({0, 1}, ExpPoly::constant(c, cc));

  // E = (-c x1 + a + d x1 + e x2) @x1 + (b + f x1 - d x2) @x2 keeps
  // L_E Q = c Q for any a,b,d,e,f.
  Rational a = rng.rational_or_zero(), b2 = rng.rational_or_zero(), d = rng.rational_or_zero(),
           e = rng.rational_or_zero(), f = rng.rational_or_zero();
  ExpPoly u = ExpPoly::constant(c, a) + ExpPoly::coordinate(c, 0).scaled(d - cc) +
              ExpPoly::coordinate(c, 1).scaled(e);
  ExpPoly v = ExpPoly::constant(c, b2) + ExpPoly::coordinate(c, 0).scaled(f) +
              ExpPoly::coordinate(c, 1).scaled(-d);
  Tensor ee(c, Kind::Multivector, 1);
  ee.add_term({0}, u);
  ee.add_term({1}, v);

  Tensor phi(c, Kind::Form, 2);
  phi.add_term({0, 1}, ExpPoly::constant(c, 1));

  StructureBundle out;
  out.kind = cc == 0 ? "enriched" : "omega-poisson";
  out.name = "random-omega";
  out.chart = c;
  out.omega = OmegaPoissonStructure(q, ee, omega);
  out.vol = VolumeForm(phi);
  return out;
}

Report nonstrong_witness(const StructureBundle& b) {
  Report rep;
  const auto& J = b.require_jacobi();
  const Chart& c = b.chart;
  std::vector<WForm> cands;
  auto wf1 = [&](Tensor al, ExpPoly f) {
    return WForm(1, std::move(al), Tensor::scalar(c, Kind::Form, std::move(f)));
  };
  cands.push_back(wf1(Tensor::zero(c, Kind::Form, 1), ExpPoly::constant(c, 1)));
  for (int i = 0; i < c.dim(); ++i) {
    cands.push_back(wf1(Tensor::zero(c, Kind::Form, 1), ExpPoly::coordinate(c, i)));
    cands.push_back(wf1(Tensor::basis(c, Kind::Form, {static_cast<uint8_t>(i)}), ExpPoly::zero(c)));
    for (int j = 0; j < c.dim(); ++j) {
      Tensor t(c, Kind::Form, 1);
      t.add_term({static_cast<uint8_t>(i)}, ExpPoly::coordinate(c, j));
      cands.push_back(wf1(std::move(t), ExpPoly::zero(c)));
    }
  }
  CheckResult r;
  r.name = "differential-not-a-bracket-derivation";
  r.pass = false;
  r.residual = "no violation found among candidate weight-1 pairs";
  for (size_t i = 0; i < cands.size() && !r.pass; ++i) {
    for (size_t j = 0; j < cands.size() && !r.pass; ++j) {
      const WForm& a = cands[i];
      const WForm& x = cands[j];
      WForm lhs = bar_d(gerstenhaber_bracket(J, a, x));
      WForm t1 = gerstenhaber_bracket(J, bar_d(a), x);
      WForm t2 = gerstenhaber_bracket(J, a, bar_d(x));
      WForm resid = lhs - t1 + t2;   // (-1)^k with k = 1
      if (!resid.is_zero()) {
        r.pass = true;
        r.residual = "a = " + a.to_string() + "; b = " + x.to_string() +
                     "; residual = " + resid.to_string();
      }
    }
  }
  rep.add(r);
  return rep;
}

} // namespace jbv
