#include "core/modular.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace jbv {

VolumeForm::VolumeForm(Tensor phi) : phi_(std::move(phi)) {
  if (phi_.kind() != Kind::Form || phi_.degree() != phi_.chart().dim())
    throw StructuralError("VolumeForm: expects a top-degree form");
  if (phi_.comps().size() != 1)
    throw StructuralError("VolumeForm: coefficient must be a single term");
  const ExpPoly& c = phi_.comps().begin()->second;
  if (!c.is_unit())
    throw StructuralError("VolumeForm: coefficient must be rational * exponential");
  inv_coeff_ = c.unit_inverse();
}

ExpPoly VolumeForm::divide(const Tensor& top_form) const {
  if (top_form.kind() != Kind::Form)
    throw StructuralError("VolumeForm::divide: expects a form");
  if (top_form.is_zero()) return ExpPoly::zero(chart());
  if (top_form.degree() != phi_.degree())
    throw StructuralError("VolumeForm::divide: expects a top-degree form");
  return top_form.comps().begin()->second * inv_coeff_;
}

namespace {

Tensor coordinate_differential(const Chart& c, int i) {
  return Tensor::basis(c, Kind::Form, {static_cast<uint8_t>(i)});
}

/// Scalar g with L_X Phi = g Phi.
ExpPoly divergence(const Tensor& X, const VolumeForm& vol) {
  return vol.divide(lie_derivative(X, vol.phi()));
}

} // namespace

ModularData modular_data(const JacobiStructure& J, const VolumeForm& vol) {
  const Chart& c = J.chart();
  const int m = c.dim();
  ModularData out;

  out.V = Tensor::zero(c, Kind::Multivector, 1);
  for (int i = 0; i < m; ++i) {
    Tensor xi = sharp(J.Lambda(), coordinate_differential(c, i));
    Tensor comp(c, Kind::Multivector, 1);
    comp.add_term({static_cast<uint8_t>(i)}, divergence(xi, vol));
    out.V = out.V + comp;
  }
  out.divE = divergence(J.E(), vol);
  out.V_class = ExtSection(out.V - J.E().scaled(Rational(m)), out.divE);

  // The defining identity only fixes V on coordinate functions; being a
  // derivation is a property, checked here on all quadratic products.
  out.derivation_ok = true;
  for (int i = 0; i < m && out.derivation_ok; ++i) {
    for (int j = i; j < m && out.derivation_ok; ++j) {
      ExpPoly f = ExpPoly::coordinate(c, i) * ExpPoly::coordinate(c, j);
      Tensor xf = sharp(J.Lambda(), ext_d(Tensor::scalar(c, Kind::Form, f)));
      out.derivation_ok = (divergence(xf, vol) == apply_vf(out.V, f));
    }
  }

  // Modular section in the ELW normalization, from its defining expression.
  ExpPoly e0 = elw_expression(J, vol, ExpPoly::constant(c, 1));
  Tensor avec = Tensor::zero(c, Kind::Multivector, 1);
  for (int i = 0; i < m; ++i) {
    ExpPoly xi = ExpPoly::coordinate(c, i);
    ExpPoly vi = elw_expression(J, vol, xi) - xi * e0;
    Tensor comp(c, Kind::Multivector, 1);
    comp.add_term({static_cast<uint8_t>(i)}, vi);
    avec = avec + comp;
  }
  out.elw_section = ExtSection(avec, e0);

  out.elw_candidate_display =
      ExtSection(out.V.scaled(Rational(2)) - J.E(), out.divE.scaled(Rational(2)));
  out.elw_candidate_relation =
      ExtSection(out.V_class.X.scaled(Rational(2)) - J.E().scaled(Rational(2 * m + 1)),
                 out.V_class.f.scaled(Rational(2)));
  out.elw_matches_display = (out.elw_section == out.elw_candidate_display);
  out.elw_matches_relation = (out.elw_section == out.elw_candidate_relation);
  return out;
}

ExpPoly elw_expression(const JacobiStructure& J, const VolumeForm& vol, const ExpPoly& f) {
  const Chart& c = J.chart();
  const int m = c.dim();
  JetSection jf = JetSection::jet(c, f);

  WForm psi(m + 1, Tensor::zero(c, Kind::Form, m + 1), vol.phi());
  WForm br = gerstenhaber_bracket(J, jf.as_wform(), psi);
  if (!br.a.is_zero())
    throw StructuralError("elw_expression: bracket left the line spanned by the volume");
  ExpPoly c1 = vol.divide(br.b);

  ExpPoly c2 = divergence(jet_anchor(J, jf), vol);
  return c1 + c2;
}

ExpPoly elw_expression_leibniz(const JacobiStructure& J, const VolumeForm& vol,
                               const ExpPoly& f) {
  const Chart& c = J.chart();
  const int m = c.dim();
  JetSection jf = JetSection::jet(c, f);

  // Volume decomposed into 1-form jet sections, the coefficient folded into
  // the first factor; the final factor is the dt-direction section.
  const auto& [idx, coeff] = *vol.phi().comps().begin();
  std::vector<JetSection> factors;
  for (size_t r = 0; r < idx.size(); ++r) {
    Tensor one = Tensor::basis(c, Kind::Form, {idx[r]});
    if (r == 0) one = one.scaled(coeff);
    factors.emplace_back(one, ExpPoly::zero(c));
  }
  factors.push_back(JetSection(Tensor::zero(c, Kind::Form, 1), ExpPoly::constant(c, 1)));

  WForm unit(0, Tensor::scalar(c, Kind::Form, ExpPoly::constant(c, 1)),
             Tensor::zero(c, Kind::Form, 0));
  WForm total = WForm::zero(c, m + 1);
  for (size_t r = 0; r < factors.size(); ++r) {
    WForm w = unit;
    for (size_t s = 0; s < factors.size(); ++s) {
      WForm fac = (s == r) ? jet_bracket(J, jf, factors[s]).as_wform() : factors[s].as_wform();
      w = wedge(w, fac);
    }
    total = total + w;
  }
  if (!total.a.is_zero())
    throw StructuralError("elw_expression_leibniz: unexpected top slot");
  ExpPoly c1 = vol.divide(total.b);
  ExpPoly c2 = divergence(jet_anchor(J, jf), vol);
  return c1 + c2;
}

JetConnectionValue jet_connection(const JacobiStructure& J, const VolumeForm& vol,
                                  const JetSection& theta) {
  const int m = J.chart().dim();
  Tensor ie_phi = interior(J.E(), vol.phi());
  Tensor il_phi = interior(J.Lambda(), vol.phi());
  Tensor mform = ext_d(ie_phi).scaled(theta.f) -
                 wedge(theta.alpha, ext_d(il_phi) + ie_phi.scaled(Rational(m)));
  JetConnectionValue v;
  v.scalar = vol.divide(mform);
  v.mform = std::move(mform);
  return v;
}

WMv connection_form(const JacobiStructure& J, const VolumeForm& vol) {
  const Chart& c = J.chart();
  const int m = c.dim();
  Tensor vec = Tensor::zero(c, Kind::Multivector, 1);
  for (int i = 0; i < m; ++i) {
    JetSection theta(coordinate_differential(c, i), ExpPoly::zero(c));
    Tensor comp(c, Kind::Multivector, 1);
    comp.add_term({static_cast<uint8_t>(i)}, jet_connection(J, vol, theta).scalar);
    vec = vec + comp;
  }
  JetSection tdir(Tensor::zero(c, Kind::Form, 1), ExpPoly::constant(c, 1));
  Tensor fn = Tensor::scalar(c, Kind::Multivector, jet_connection(J, vol, tdir).scalar);
  return WMv(1, std::move(vec), std::move(fn));
}

ExpPoly connection_curvature(const JacobiStructure& J, const VolumeForm& vol,
                             const JetSection& t1, const JetSection& t2) {
  ExpPoly c1 = jet_connection(J, vol, t1).scalar;
  ExpPoly c2 = jet_connection(J, vol, t2).scalar;
  ExpPoly mixed = jet_connection(J, vol, jet_bracket(J, t1, t2)).scalar;
  return apply_vf(jet_anchor(J, t1), c2) - apply_vf(jet_anchor(J, t2), c1) - mixed;
}

WForm star_map(const WMv& C, const VolumeForm& vol) {
  const Chart& c = vol.chart();
  const int m = c.dim();
  const int k = C.weight;
  Tensor slot_a = as_deg(interior(C.b, vol.phi()), m - k + 1);
  if (m % 2 != 0) slot_a = -slot_a;
  Tensor slot_b = as_deg(interior(C.a, vol.phi()), m - k);
  return WForm(m - k + 1, std::move(slot_a), std::move(slot_b));
}

WMv modular_pair(const JacobiStructure& J, const VolumeForm& vol) {
  const Chart& c = J.chart();
  const int m = c.dim();
  ModularData md = modular_data(J, vol);
  return WMv(1, md.V - J.E().scaled(Rational(m)),
             Tensor::scalar(c, Kind::Multivector, md.divE));
}

WForm d0(const JacobiStructure& J, const VolumeForm& vol, const WForm& lam) {
  WMv w = modular_pair(J, vol);
  WForm iw = interior_wmv1(w, lam);
  WForm delta = bv_delta(J, lam);
  if (lam.weight == 0) return delta;
  return delta - iw;
}

WMv twisted_coboundary(const JacobiStructure& J, const VolumeForm& vol, const WMv& C) {
  WMv nu = connection_form(J, vol);
  WMv corr = wedge(nu, C);
  if (C.weight % 2 != 0) corr = -corr;
  return sigma(J, C) + corr;
}

// ------------------------------------------------------------ truncation

const char* complex_op_name(ComplexOp op) {
  switch (op) {
    case ComplexOp::BvDelta: return "bv";
    case ComplexOp::Sigma: return "sigma";
    case ComplexOp::D0: return "d0";
    case ComplexOp::BarD: return "bar-d";
    case ComplexOp::Twisted: return "twisted";
  }
  return "?";
}

std::optional<ComplexOp> complex_op_from_name(const std::string& name) {
  if (name == "bv" || name == "bv_delta") return ComplexOp::BvDelta;
  if (name == "sigma") return ComplexOp::Sigma;
  if (name == "d0") return ComplexOp::D0;
  if (name == "bar-d" || name == "bar_d") return ComplexOp::BarD;
  if (name == "twisted") return ComplexOp::Twisted;
  return std::nullopt;
}

namespace {

struct BasisElem {
  int slot;       // 0: first slot, 1: dt/@t slot
  IdxTuple idx;
  ExpKey mono;
  bool operator<(const BasisElem& o) const {
    if (slot != o.slot) return slot < o.slot;
    if (idx != o.idx) return idx < o.idx;
    return mono < o.mono;
  }
};

void enum_monomials(const Chart& c, int max_degree, std::vector<ExpKey>& out) {
  ExpKey cur{std::vector<uint32_t>(static_cast<size_t>(c.dim()), 0),
             std::vector<Rational>(static_cast<size_t>(c.dim()), Rational(0))};
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == c.dim()) {
      out.push_back(cur);
      return;
    }
    for (int d = 0; d <= left; ++d) {
      cur.exps[static_cast<size_t>(i)] = static_cast<uint32_t>(d);
      rec(i + 1, left - d);
    }
    cur.exps[static_cast<size_t>(i)] = 0;
  };
  rec(0, max_degree);
}

void enum_idx(int m, int size, std::vector<IdxTuple>& out) {
  IdxTuple cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < m; ++i) {
      cur.push_back(static_cast<uint8_t>(i));
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

std::string describe(const Chart& c, const BasisElem& e, bool forms) {
  std::ostringstream os;
  os << (e.slot == 0 ? "a:" : "b:");
  ExpPoly mono = ExpPoly::monomial(c, e.mono, 1);
  os << mono.to_string();
  for (auto i : e.idx) os << (forms ? "*d" : "*@") << c.name(i);
  return os.str();
}

// Decomposes the slots of a weighted pair over the monomial basis, checking
// that the truncation is genuinely preserved.
template <typename Pair>
std::vector<Rational> expand(const Pair& w, const std::map<BasisElem, int>& index, int max_degree) {
  std::vector<Rational> col(index.size(), Rational(0));
  auto put = [&](int slot, const Tensor& t) {
    for (const auto& [idx, coeff] : t.comps()) {
      if (coeff.has_exponentials())
        throw StructuralError("truncated complex: operator produced exponential coefficients");
      if (coeff.poly_degree() > max_degree)
        throw StructuralError("truncated complex: operator raises the coefficient degree");
      for (const auto& [key, v] : coeff.terms()) {
        auto it = index.find(BasisElem{slot, idx, key});
        if (it == index.end())
          throw StructuralError("truncated complex: image outside the truncated basis");
        col[static_cast<size_t>(it->second)] = v;
      }
    }
  };
  put(0, w.a);
  put(1, w.b);
  return col;
}

} // namespace

TruncatedComplex truncated_complex(ComplexOp op, const JacobiStructure& J,
                                   const VolumeForm* vol, int max_degree) {
  const Chart& c = J.chart();
  const int m = c.dim();
  auto degree_ok = [&](const Tensor& t) {
    for (const auto& [idx, coeff] : t.comps()) {
      (void)idx;
      if (coeff.has_exponentials() || coeff.poly_degree() > 1) return false;
    }
    return true;
  };
  if (!degree_ok(J.Lambda()) || !degree_ok(J.E()))
    throw StructuralError(
        "truncated complex: structure coefficients must be polynomial of degree <= 1 "
        "without exponentials");
  if ((op == ComplexOp::D0 || op == ComplexOp::Twisted) && vol == nullptr)
    throw StructuralError("truncated complex: this operator needs a volume form");

  const bool forms = (op == ComplexOp::BvDelta || op == ComplexOp::D0 || op == ComplexOp::BarD);
  TruncatedComplex out;
  out.op = op;
  out.max_degree = max_degree;
  out.raising = (op == ComplexOp::Sigma || op == ComplexOp::BarD || op == ComplexOp::Twisted);

  std::vector<ExpKey> monos;
  enum_monomials(c, max_degree, monos);

  // Bases per weight 0..m+1.
  std::vector<std::vector<BasisElem>> bases(static_cast<size_t>(m) + 2);
  std::vector<std::map<BasisElem, int>> index(static_cast<size_t>(m) + 2);
  for (int k = 0; k <= m + 1; ++k) {
    std::vector<IdxTuple> ia, ib;
    if (k <= m) enum_idx(m, k, ia);
    if (k >= 1 && k - 1 <= m) enum_idx(m, k - 1, ib);
    for (const auto& idx : ia)
      for (const auto& mo : monos) bases[static_cast<size_t>(k)].push_back({0, idx, mo});
    if (k >= 1)
      for (const auto& idx : ib)
        for (const auto& mo : monos) bases[static_cast<size_t>(k)].push_back({1, idx, mo});
    int pos = 0;
    for (const auto& e : bases[static_cast<size_t>(k)]) index[static_cast<size_t>(k)][e] = pos++;
    out.dims.push_back(static_cast<int>(bases[static_cast<size_t>(k)].size()));
    std::vector<std::string> desc;
    for (const auto& e : bases[static_cast<size_t>(k)]) desc.push_back(describe(c, e, forms));
    out.basis_desc.push_back(std::move(desc));
  }

  Kind kind = forms ? Kind::Form : Kind::Multivector;
  auto make_elem = [&](int k, const BasisElem& e) {
    Tensor a = Tensor::zero(c, kind, k);
    Tensor b = Tensor::zero(c, kind, k >= 1 ? k - 1 : 0);
    ExpPoly coeff = ExpPoly::monomial(c, e.mono, 1);
    if (e.slot == 0) {
      Tensor t(c, kind, k);
      t.add_term(e.idx, coeff);
      a = a + t;
    } else {
      Tensor t(c, kind, k - 1);
      t.add_term(e.idx, coeff);
      b = b + t;
    }
    return std::pair<Tensor, Tensor>{std::move(a), std::move(b)};
  };

  for (int k = 0; k <= m + 1; ++k) {
    int target = out.raising ? k + 1 : k - 1;
    Matrix mat;
    size_t rows = (target >= 0 && target <= m + 1) ? index[static_cast<size_t>(target)].size() : 0;
    std::vector<std::vector<Rational>> cols;
    for (const auto& e : bases[static_cast<size_t>(k)]) {
      auto [a, b] = make_elem(k, e);
      std::vector<Rational> col(rows, Rational(0));
      if (rows > 0) {
        if (forms) {
          WForm w(k, a, b);
          WForm img = WForm::zero(c, target);
          switch (op) {
            case ComplexOp::BvDelta: img = bv_delta(J, w); break;
            case ComplexOp::D0: img = d0(J, *vol, w); break;
            case ComplexOp::BarD: img = bar_d(w); break;
            default: break;
          }
          if (img.weight != target && img.is_zero()) img = WForm::zero(c, target);
          col = expand(img, index[static_cast<size_t>(target)], max_degree);
        } else {
          WMv w(k, a, b);
          WMv img = WMv::zero(c, target);
          switch (op) {
            case ComplexOp::Sigma: img = sigma(J, w); break;
            case ComplexOp::Twisted: img = twisted_coboundary(J, *vol, w); break;
            default: break;
          }
          col = expand(img, index[static_cast<size_t>(target)], max_degree);
        }
      }
      cols.push_back(std::move(col));
    }
    // column-major -> row-major
    mat.assign(rows, std::vector<Rational>(cols.size(), Rational(0)));
    for (size_t j = 0; j < cols.size(); ++j)
      for (size_t i = 0; i < rows; ++i) mat[i][j] = cols[j][i];
    out.mats.push_back(std::move(mat));
  }
  return out;
}

std::vector<int> betti(const TruncatedComplex& t) {
  const int top = static_cast<int>(t.dims.size()) - 1;
  std::vector<int> out;
  for (int k = 0; k <= top; ++k) {
    int rk = t.mats[static_cast<size_t>(k)].empty() ? 0 : rank(t.mats[static_cast<size_t>(k)]);
    int incoming = t.raising ? k - 1 : k + 1;
    int rin = 0;
    if (incoming >= 0 && incoming <= top)
      rin = t.mats[static_cast<size_t>(incoming)].empty()
                ? 0
                : rank(t.mats[static_cast<size_t>(incoming)]);
    out.push_back(t.dims[static_cast<size_t>(k)] - rk - rin);
  }
  return out;
}

std::optional<ExpPoly> solve_sigma_f(const JacobiStructure& J, const WMv& target,
                                     int max_degree) {
  if (target.weight != 1) throw StructuralError("solve_sigma_f: target must have weight 1");
  const Chart& c = J.chart();
  std::vector<ExpKey> monos;
  enum_monomials(c, max_degree, monos);

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

  std::vector<std::map<int, Rational>> cols;
  auto collect = [&](const WMv& w, std::map<int, Rational>& into) {
    auto put = [&](int slot, const Tensor& t) {
      for (const auto& [idx, coeff] : t.comps())
        for (const auto& [key, v] : coeff.terms()) into[row_of({slot, idx, key})] += v;
    };
    put(0, w.a);
    put(1, w.b);
  };

  for (const auto& mo : monos) {
    WMv img = sigma(J, WMv(0, Tensor::scalar(c, Kind::Multivector, ExpPoly::monomial(c, mo, 1)),
                           Tensor::zero(c, Kind::Multivector, 0)));
    std::map<int, Rational> col;
    collect(img, col);
    cols.push_back(std::move(col));
  }
  std::map<int, Rational> rhs;
  collect(target, rhs);

  const size_t nrows = rows.size();
  Matrix a(nrows, std::vector<Rational>(cols.size(), Rational(0)));
  std::vector<Rational> b(nrows, Rational(0));
  for (size_t j = 0; j < cols.size(); ++j)
    for (const auto& [i, v] : cols[j]) a[static_cast<size_t>(i)][j] = v;
  for (const auto& [i, v] : rhs) b[static_cast<size_t>(i)] = v;

  auto x = solve(a, b);
  if (!x) return std::nullopt;
  ExpPoly f(c);
  for (size_t j = 0; j < monos.size(); ++j) f.add_term(monos[j], (*x)[j]);
  return f;
}

} // namespace jbv
