#include "core/tensor.hpp"

#include <algorithm>
#include <sstream>

namespace jbv {

namespace {

const ExpPoly& zero_poly(const Chart& c) {
  thread_local std::map<std::string, ExpPoly> cache;
  std::string key;
  for (const auto& n : c.names()) { key += n; key += ','; }
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, ExpPoly::zero(c)).first;
  return it->second;
}

// Sorts idx in place; returns the permutation sign, or 0 on a repeat.
int normalize_tuple(IdxTuple& idx) {
  int sign = 1;
  for (size_t i = 1; i < idx.size(); ++i) {
    size_t j = i;
    while (j > 0 && idx[j - 1] > idx[j]) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
      --j;
    }
    if (j > 0 && idx[j - 1] == idx[j]) return 0;
  }
  return sign;
}

void require_kind(const Tensor& a, Kind k, const char* where) {
  if (a.kind() != k) throw StructuralError(std::string(where) + ": wrong tensor kind");
}

} // namespace

Tensor::Tensor(Chart chart, Kind kind, int degree)
    : chart_(std::move(chart)), kind_(kind), degree_(degree) {
  if (degree_ < 0) throw StructuralError("tensor: negative degree");
}

Tensor Tensor::scalar(const Chart& c, Kind k, const ExpPoly& f) {
  Tensor t(c, k, 0);
  t.add_term({}, f);
  return t;
}

Tensor Tensor::basis(const Chart& c, Kind k, const IdxTuple& idx) {
  Tensor t(c, k, static_cast<int>(idx.size()));
  t.add_term(idx, ExpPoly::constant(c, 1));
  return t;
}

void Tensor::add_term(IdxTuple idx, const ExpPoly& coeff) {
  if (static_cast<int>(idx.size()) != degree_)
    throw StructuralError("tensor add_term: tuple length does not match degree");
  if (coeff.is_zero()) return;
  for (auto i : idx)
    if (i >= chart_.dim()) throw StructuralError("tensor add_term: index out of range");
  int sign = normalize_tuple(idx);
  if (sign == 0) return;
  ExpPoly c = (sign > 0) ? coeff : -coeff;
  auto it = comps_.find(idx);
  if (it == comps_.end()) {
    comps_.emplace(std::move(idx), std::move(c));
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

const ExpPoly& Tensor::coeff(const IdxTuple& idx) const {
  auto it = comps_.find(idx);
  if (it == comps_.end()) return zero_poly(chart_);
  return it->second;
}

Tensor Tensor::operator+(const Tensor& o) const {
  require_same_chart(chart_, o.chart_, "tensor +");
  if (kind_ != o.kind_ || degree_ != o.degree_)
    throw StructuralError("tensor +: kind/degree mismatch");
  Tensor r = *this;
  for (const auto& [k, v] : o.comps_) r.add_term(k, v);
  return r;
}

Tensor Tensor::operator-(const Tensor& o) const { return *this + (-o); }

Tensor Tensor::operator-() const {
  Tensor r(chart_, kind_, degree_);
  for (const auto& [k, v] : comps_) r.comps_.emplace(k, -v);
  return r;
}

Tensor Tensor::scaled(const ExpPoly& f) const {
  Tensor r(chart_, kind_, degree_);
  for (const auto& [k, v] : comps_) {
    ExpPoly c = v * f;
    if (!c.is_zero()) r.comps_.emplace(k, std::move(c));
  }
  return r;
}

Tensor Tensor::scaled(const Rational& c) const {
  Tensor r(chart_, kind_, degree_);
  if (c == 0) return r;
  for (const auto& [k, v] : comps_) r.comps_.emplace(k, v.scaled(c));
  return r;
}

bool Tensor::operator==(const Tensor& o) const {
  return chart_.same_as(o.chart_) && kind_ == o.kind_ && degree_ == o.degree_ &&
         comps_ == o.comps_;
}

std::string Tensor::to_string() const {
  if (comps_.empty()) return "0";
  const char* prefix = (kind_ == Kind::Form) ? "d" : "@";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : comps_) {
    std::string cs = c.to_string();
    if (!first) os << " + ";
    first = false;
    if (degree_ == 0) { os << cs; continue; }
    bool needs_paren = c.term_count() > 1;
    if (cs == "1") {
      // unit coefficient: basis alone
    } else if (cs == "-1") {
      os << "-";
    } else {
      os << (needs_paren ? "(" + cs + ")" : cs) << "*";
    }
    for (size_t i = 0; i < idx.size(); ++i) {
      if (i) os << "^";
      os << prefix << chart_.name(idx[i]);
    }
  }
  return os.str();
}

Tensor wedge(const Tensor& a, const Tensor& b) {
  require_same_chart(a.chart(), b.chart(), "wedge");
  if (a.kind() != b.kind()) throw StructuralError("wedge: kind mismatch");
  Tensor r(a.chart(), a.kind(), a.degree() + b.degree());
  if (r.degree() > a.chart().dim()) return Tensor::zero(a.chart(), a.kind(), r.degree());
  for (const auto& [ia, ca] : a.comps()) {
    for (const auto& [ib, cb] : b.comps()) {
      IdxTuple merged = ia;
      merged.insert(merged.end(), ib.begin(), ib.end());
      r.add_term(std::move(merged), ca * cb);
    }
  }
  return r;
}

Tensor ext_d(const Tensor& form) {
  require_kind(form, Kind::Form, "ext_d");
  Tensor r(form.chart(), Kind::Form, form.degree() + 1);
  const int m = form.chart().dim();
  for (const auto& [idx, c] : form.comps()) {
    for (int i = 0; i < m; ++i) {
      ExpPoly dc = c.partial(i);
      if (dc.is_zero()) continue;
      IdxTuple t;
      t.reserve(idx.size() + 1);
      t.push_back(static_cast<uint8_t>(i));
      t.insert(t.end(), idx.begin(), idx.end());
      r.add_term(std::move(t), dc);
    }
  }
  return r;
}

namespace {

// Sequentially contracts the indices J (in tuple order, leading slot first)
// out of the tuple I; returns false unless J is a subset of I.
bool contract_tuple(const IdxTuple& J, IdxTuple I, int& sign, IdxTuple& out) {
  sign = 1;
  for (auto j : J) {
    auto it = std::find(I.begin(), I.end(), j);
    if (it == I.end()) return false;
    auto pos = static_cast<int>(it - I.begin());
    if (pos % 2 != 0) sign = -sign;
    I.erase(it);
  }
  out = std::move(I);
  return true;
}

Tensor contract(const Tensor& small, const Tensor& big, Kind result_kind) {
  require_same_chart(small.chart(), big.chart(), "interior");
  int deg = big.degree() - small.degree();
  if (deg < 0) return Tensor::zero(big.chart(), result_kind, 0);
  Tensor r(big.chart(), result_kind, deg);
  for (const auto& [J, p] : small.comps()) {
    for (const auto& [I, c] : big.comps()) {
      int sign;
      IdxTuple rest;
      if (!contract_tuple(J, I, sign, rest)) continue;
      ExpPoly v = p * c;
      r.add_term(std::move(rest), sign > 0 ? v : -v);
    }
  }
  return r;
}

} // namespace

Tensor interior(const Tensor& P, const Tensor& mu) {
  require_kind(P, Kind::Multivector, "interior");
  require_kind(mu, Kind::Form, "interior");
  return contract(P, mu, Kind::Form);
}

Tensor interior_form(const Tensor& omega, const Tensor& U) {
  require_kind(omega, Kind::Form, "interior_form");
  require_kind(U, Kind::Multivector, "interior_form");
  return contract(omega, U, Kind::Multivector);
}

ExpPoly pairing(const Tensor& U, const Tensor& omega) {
  require_kind(U, Kind::Multivector, "pairing");
  require_kind(omega, Kind::Form, "pairing");
  require_same_chart(U.chart(), omega.chart(), "pairing");
  if (U.degree() != omega.degree()) throw StructuralError("pairing: degree mismatch");
  ExpPoly acc = ExpPoly::zero(U.chart());
  for (const auto& [I, u] : U.comps()) {
    auto it = omega.comps().find(I);
    if (it != omega.comps().end()) acc = acc + u * it->second;
  }
  return acc;
}

ExpPoly apply_vf(const Tensor& X, const ExpPoly& f) {
  require_kind(X, Kind::Multivector, "apply_vf");
  if (X.degree() != 1) throw StructuralError("apply_vf: not a vector field");
  ExpPoly acc = ExpPoly::zero(X.chart());
  for (const auto& [I, c] : X.comps()) acc = acc + c * f.partial(I[0]);
  return acc;
}

namespace {

// Left odd derivative: first-slot contraction by dx_i resp. @x_i.
Tensor xi_partial(const Tensor& T, int i) {
  Tensor r(T.chart(), T.kind(), T.degree() == 0 ? 0 : T.degree() - 1);
  if (T.degree() == 0) return r;
  for (const auto& [I, c] : T.comps()) {
    auto it = std::find(I.begin(), I.end(), static_cast<uint8_t>(i));
    if (it == I.end()) continue;
    auto pos = static_cast<int>(it - I.begin());
    IdxTuple rest;
    rest.reserve(I.size() - 1);
    rest.insert(rest.end(), I.begin(), it);
    rest.insert(rest.end(), it + 1, I.end());
    r.add_term(std::move(rest), (pos % 2 == 0) ? c : -c);
  }
  return r;
}

Tensor coeff_partial(const Tensor& T, int i) {
  Tensor r(T.chart(), T.kind(), T.degree());
  for (const auto& [I, c] : T.comps()) {
    ExpPoly dc = c.partial(i);
    if (!dc.is_zero()) r.add_term(I, dc);
  }
  return r;
}

} // namespace

Tensor schouten(const Tensor& U, const Tensor& V) {
  require_kind(U, Kind::Multivector, "schouten");
  require_kind(V, Kind::Multivector, "schouten");
  require_same_chart(U.chart(), V.chart(), "schouten");
  const int m = U.chart().dim();
  int deg = U.degree() + V.degree() - 1;
  if (deg < 0) return Tensor::zero(U.chart(), Kind::Multivector, 0);
  Tensor r(U.chart(), Kind::Multivector, deg);
  bool u_odd = (U.degree() % 2) != 0;
  for (int i = 0; i < m; ++i) {
    Tensor t1 = as_deg(wedge(xi_partial(U, i), coeff_partial(V, i)), deg);
    Tensor t2 = as_deg(wedge(coeff_partial(U, i), xi_partial(V, i)), deg);
    r = r + t1 + (u_odd ? -t2 : t2);
  }
  return r;
}

Tensor schouten_recursive(const Tensor& U, const Tensor& V) {
  require_same_chart(U.chart(), V.chart(), "schouten_recursive");
  const Chart& ch = U.chart();
  int deg = U.degree() + V.degree() - 1;
  Tensor acc = Tensor::zero(ch, Kind::Multivector, deg < 0 ? 0 : deg);
  if (U.is_zero() || V.is_zero()) return acc;

  if (U.degree() == 0) {
    // [f, V] = i(df)V in this convention.
    ExpPoly f = U.coeff({});
    Tensor df = ext_d(Tensor::scalar(ch, Kind::Form, f));
    return interior_form(df, V);
  }
  if (U.degree() == 1) {
    if (V.degree() == 0) {
      return Tensor::scalar(ch, Kind::Multivector, apply_vf(U, V.coeff({})));
    }
    // [X, V] = L_X V, expanded over decomposable terms of V.
    for (const auto& [I, c] : V.comps()) {
      // c * e_{I0} ^ e_{I1} ^ ... : Leibniz over the factors and the coefficient.
      Tensor term = Tensor::zero(ch, Kind::Multivector, V.degree());
      term.add_term(I, apply_vf(U, c));
      acc = acc + term;
      for (size_t r = 0; r < I.size(); ++r) {
        // X acting on the r-th basis factor: [X, e_j] = -(d_j X^a) e_a.
        for (const auto& [J, xc] : U.comps()) {
          ExpPoly d = xc.partial(I[r]);
          if (d.is_zero()) continue;
          IdxTuple t = I;
          t[r] = J[0];
          Tensor piece(ch, Kind::Multivector, V.degree());
          piece.add_term(std::move(t), c * d);
          acc = acc - piece;
        }
      }
    }
    return acc;
  }
  // |U| >= 2: split off the leading factor of each decomposable term,
  // [X ^ U', V] = (-1)^{|V||U'|} [X,V] ^ U' - X ^ [U', V].
  for (const auto& [I, c] : U.comps()) {
    Tensor X = Tensor::zero(ch, Kind::Multivector, 1);
    X.add_term({I[0]}, c);
    Tensor rest = Tensor::basis(ch, Kind::Multivector, IdxTuple(I.begin() + 1, I.end()));
    int s = (V.degree() * (U.degree() - 1)) % 2 ? -1 : 1;
    Tensor a = wedge(schouten_recursive(X, V), rest).scaled(Rational(s));
    Tensor b = wedge(X, schouten_recursive(rest, V));
    acc = acc + a - b;
  }
  return acc;
}

Tensor sharp(const Tensor& Lambda, const Tensor& alpha) {
  if (Lambda.degree() != 2 || alpha.degree() != 1)
    throw StructuralError("sharp: expects a bivector and a 1-form");
  return interior_form(alpha, Lambda);
}

Tensor flat(const Tensor& Omega, const Tensor& X) {
  if (Omega.degree() != 2 || X.degree() != 1)
    throw StructuralError("flat: expects a 2-form and a vector field");
  return interior(X, Omega);
}

ExpPoly eval2(const Tensor& Lambda, const Tensor& alpha, const Tensor& beta) {
  return pairing(Lambda, wedge(alpha, beta));
}

Tensor lie_derivative(const Tensor& X, const Tensor& T) {
  require_kind(X, Kind::Multivector, "lie_derivative");
  if (X.degree() != 1) throw StructuralError("lie_derivative: direction must be a vector field");
  if (T.kind() == Kind::Form) return interior(X, ext_d(T)) + ext_d(interior(X, T));
  return schouten(X, T);
}

Tensor koszul_bracket(const Tensor& Lambda, const Tensor& alpha, const Tensor& beta) {
  if (alpha.degree() != 1 || beta.degree() != 1)
    throw StructuralError("koszul_bracket: expects 1-forms");
  Tensor sa = sharp(Lambda, alpha);
  Tensor sb = sharp(Lambda, beta);
  Tensor d_pair = ext_d(Tensor::scalar(Lambda.chart(), Kind::Form, eval2(Lambda, alpha, beta)));
  return lie_derivative(sa, beta) - lie_derivative(sb, alpha) - d_pair;
}

Tensor delta_operator(const Tensor& Lambda, const Tensor& form) {
  int out = form.degree() - 1;
  Tensor t1 = as_deg(interior(Lambda, ext_d(form)), out);
  Tensor t2 = as_deg(ext_d(interior(Lambda, form)), out);
  return t1 - t2;
}

Tensor as_deg(const Tensor& t, int degree) {
  if (degree < 0) degree = 0;
  if (t.degree() == degree) return t;
  if (t.is_zero()) return Tensor::zero(t.chart(), t.kind(), degree);
  throw StructuralError("as_deg: nonzero tensor with unexpected degree");
}

ExpPoly eval_on(const Tensor& T, const std::vector<Tensor>& args) {
  if (static_cast<int>(args.size()) != T.degree())
    throw StructuralError("eval_on: wrong number of arguments");
  if (T.degree() == 0) return T.coeff({});
  Tensor w = args[0];
  for (size_t i = 1; i < args.size(); ++i) w = wedge(w, args[i]);
  if (T.kind() == Kind::Multivector) return pairing(T, w);
  return pairing(w, T);
}

} // namespace jbv
