#include "core/weighted.hpp"

#include <sstream>

namespace jbv {

namespace detail {

void check_pair(const Tensor& a, const Tensor& b, int weight, Kind kind, const char* what) {
  if (a.kind() != kind || b.kind() != kind)
    throw StructuralError(std::string(what) + ": wrong slot kind");
  require_same_chart(a.chart(), b.chart(), what);
  if (a.degree() != weight)
    throw StructuralError(std::string(what) + ": first slot degree must equal the weight");
  int want_b = weight == 0 ? 0 : weight - 1;
  if (b.degree() != want_b)
    throw StructuralError(std::string(what) + ": second slot degree must be weight-1");
  if (weight == 0 && !b.is_zero())
    throw StructuralError(std::string(what) + ": weight 0 forces an empty second slot");
}

} // namespace detail

// ---------------------------------------------------------------- WForm

WForm::WForm(int k, Tensor a_, Tensor b_) : weight(k), a(std::move(a_)), b(std::move(b_)) {
  detail::check_pair(a, b, k, Kind::Form, "WForm");
}

WForm WForm::zero(const Chart& c, int k) {
  return WForm(k, Tensor::zero(c, Kind::Form, k), Tensor::zero(c, Kind::Form, k == 0 ? 0 : k - 1));
}

WForm WForm::operator+(const WForm& o) const {
  if (weight != o.weight) throw StructuralError("WForm +: weight mismatch");
  return WForm(weight, a + o.a, b + o.b);
}
WForm WForm::operator-(const WForm& o) const { return *this + (-o); }
WForm WForm::operator-() const { return WForm(weight, -a, -b); }
WForm WForm::scaled(const Rational& c) const { return WForm(weight, a.scaled(c), b.scaled(c)); }
bool WForm::operator==(const WForm& o) const { return weight == o.weight && a == o.a && b == o.b; }

std::string WForm::to_string() const {
  std::ostringstream os;
  os << "e(" << weight << "t)*[" << a.to_string() << "  +  (" << b.to_string() << ")^dt]";
  return os.str();
}

WForm wedge(const WForm& x, const WForm& y) {
  // e^{kt}(a1+b1^dt) ^ e^{ht}(a2+b2^dt)
  //   = e^{(k+h)t}[a1^a2 + ((-1)^{h} b1^a2 + a1^b2)^dt]
  int w = x.weight + y.weight;
  Tensor slot_a = as_deg(wedge(x.a, y.a), w);
  Tensor cross = wedge(x.b, y.a);
  if (y.weight % 2 != 0) cross = -cross;
  Tensor slot_b = as_deg(cross, w - 1) + as_deg(wedge(x.a, y.b), w - 1);
  return WForm(w, std::move(slot_a), std::move(slot_b));
}

// ---------------------------------------------------------------- WMv

WMv::WMv(int k, Tensor a_, Tensor b_) : weight(k), a(std::move(a_)), b(std::move(b_)) {
  detail::check_pair(a, b, k, Kind::Multivector, "WMv");
}

WMv WMv::zero(const Chart& c, int k) {
  return WMv(k, Tensor::zero(c, Kind::Multivector, k),
             Tensor::zero(c, Kind::Multivector, k == 0 ? 0 : k - 1));
}

WMv WMv::operator+(const WMv& o) const {
  if (weight != o.weight) throw StructuralError("WMv +: weight mismatch");
  return WMv(weight, a + o.a, b + o.b);
}
WMv WMv::operator-(const WMv& o) const { return *this + (-o); }
WMv WMv::operator-() const { return WMv(weight, -a, -b); }
WMv WMv::scaled(const Rational& c) const { return WMv(weight, a.scaled(c), b.scaled(c)); }
bool WMv::operator==(const WMv& o) const { return weight == o.weight && a == o.a && b == o.b; }

std::string WMv::to_string() const {
  std::ostringstream os;
  os << "e(-" << weight << "t)*[" << a.to_string() << "  +  @t^(" << b.to_string() << ")]";
  return os.str();
}

WMv wedge(const WMv& x, const WMv& y) {
  // (a1 + @t^b1) ^ (a2 + @t^b2) = a1^a2 + @t^(b1^a2 + (-1)^{|a1|} a1^b2)
  int w = x.weight + y.weight;
  Tensor slot_a = as_deg(wedge(x.a, y.a), w);
  Tensor second = wedge(x.a, y.b);
  if (x.weight % 2 != 0) second = -second;
  Tensor slot_b = as_deg(wedge(x.b, y.a), w - 1) + as_deg(second, w - 1);
  return WMv(w, std::move(slot_a), std::move(slot_b));
}

// ---------------------------------------------------------------- sections

JetSection::JetSection(Tensor alpha_, ExpPoly f_) : alpha(std::move(alpha_)), f(std::move(f_)) {
  if (alpha.kind() != Kind::Form || alpha.degree() != 1)
    throw StructuralError("JetSection: first component must be a 1-form");
}

JetSection JetSection::zero(const Chart& c) {
  return JetSection(Tensor::zero(c, Kind::Form, 1), ExpPoly::zero(c));
}

JetSection JetSection::jet(const Chart& c, const ExpPoly& g) {
  return JetSection(ext_d(Tensor::scalar(c, Kind::Form, g)), g);
}

WForm JetSection::as_wform() const {
  return WForm(1, alpha, Tensor::scalar(alpha.chart(), Kind::Form, f));
}

JetSection JetSection::operator+(const JetSection& o) const {
  return JetSection(alpha + o.alpha, f + o.f);
}
JetSection JetSection::operator-(const JetSection& o) const {
  return JetSection(alpha - o.alpha, f - o.f);
}
JetSection JetSection::scaled_fn(const ExpPoly& g) const {
  return JetSection(alpha.scaled(g), f * g);
}
bool JetSection::operator==(const JetSection& o) const { return alpha == o.alpha && f == o.f; }

std::string JetSection::to_string() const {
  return "e(t)*[(" + alpha.to_string() + ") + (" + f.to_string() + ")*dt]";
}

ExtSection::ExtSection(Tensor X_, ExpPoly f_) : X(std::move(X_)), f(std::move(f_)) {
  if (X.kind() != Kind::Multivector || X.degree() != 1)
    throw StructuralError("ExtSection: first component must be a vector field");
}

ExtSection ExtSection::zero(const Chart& c) {
  return ExtSection(Tensor::zero(c, Kind::Multivector, 1), ExpPoly::zero(c));
}

ExtSection ExtSection::operator+(const ExtSection& o) const {
  return ExtSection(X + o.X, f + o.f);
}
ExtSection ExtSection::operator-(const ExtSection& o) const {
  return ExtSection(X - o.X, f - o.f);
}
bool ExtSection::operator==(const ExtSection& o) const { return X == o.X && f == o.f; }

std::string ExtSection::to_string() const {
  return "(" + X.to_string() + ") + (" + f.to_string() + ")*@t";
}

// ---------------------------------------------------------------- O-pairs

OForm::OForm(int k, Tensor a_, Tensor b_) : degree(k), a(std::move(a_)), b(std::move(b_)) {
  detail::check_pair(a, b, k, Kind::Form, "OForm");
}
OForm OForm::zero(const Chart& c, int k) {
  return OForm(k, Tensor::zero(c, Kind::Form, k), Tensor::zero(c, Kind::Form, k == 0 ? 0 : k - 1));
}
OForm OForm::operator+(const OForm& o) const {
  if (degree != o.degree) throw StructuralError("OForm +: degree mismatch");
  return OForm(degree, a + o.a, b + o.b);
}
OForm OForm::operator-(const OForm& o) const { return *this + (-o); }
OForm OForm::operator-() const { return OForm(degree, -a, -b); }
bool OForm::operator==(const OForm& o) const { return degree == o.degree && a == o.a && b == o.b; }
std::string OForm::to_string() const {
  return "[" + a.to_string() + "  +  (" + b.to_string() + ")^dt]";
}

OMv::OMv(int k, Tensor a_, Tensor b_) : degree(k), a(std::move(a_)), b(std::move(b_)) {
  detail::check_pair(a, b, k, Kind::Multivector, "OMv");
}
OMv OMv::zero(const Chart& c, int k) {
  return OMv(k, Tensor::zero(c, Kind::Multivector, k),
             Tensor::zero(c, Kind::Multivector, k == 0 ? 0 : k - 1));
}
OMv OMv::operator+(const OMv& o) const {
  if (degree != o.degree) throw StructuralError("OMv +: degree mismatch");
  return OMv(degree, a + o.a, b + o.b);
}
OMv OMv::operator-(const OMv& o) const { return *this + (-o); }
OMv OMv::operator-() const { return OMv(degree, -a, -b); }
OMv OMv::scaled(const Rational& c) const { return OMv(degree, a.scaled(c), b.scaled(c)); }
bool OMv::operator==(const OMv& o) const { return degree == o.degree && a == o.a && b == o.b; }
std::string OMv::to_string() const {
  return "[" + a.to_string() + "  +  @t^(" + b.to_string() + ")]";
}

OMv wedge(const OMv& x, const OMv& y) {
  int w = x.degree + y.degree;
  Tensor slot_a = as_deg(wedge(x.a, y.a), w);
  Tensor second = wedge(x.a, y.b);
  if (x.degree % 2 != 0) second = -second;
  Tensor slot_b = as_deg(wedge(x.b, y.a), w - 1) + as_deg(second, w - 1);
  return OMv(w, std::move(slot_a), std::move(slot_b));
}

// ------------------------------------------------------------ evaluation

ExpPoly eval_wmv(const WMv& C, const std::vector<JetSection>& args) {
  if (static_cast<int>(args.size()) != C.weight)
    throw StructuralError("eval_wmv: wrong number of arguments");
  const Chart& ch = C.a.chart();
  // Expand the argument wedge as P + Q^dt:
  //   (P + Q^dt) ^ (alpha + f dt) = P^alpha + (f P - Q^alpha)^dt.
  Tensor P = Tensor::scalar(ch, Kind::Form, ExpPoly::constant(ch, 1));
  Tensor Q = Tensor::zero(ch, Kind::Form, 0);
  bool q_live = false;
  for (const auto& s : args) {
    Tensor newP = wedge(P, s.alpha);
    Tensor newQ = P.scaled(s.f);
    if (q_live) newQ = newQ - wedge(Q, s.alpha);
    P = std::move(newP);
    Q = std::move(newQ);
    q_live = true;
  }
  // <C1 + @t^C2, P + Q^dt> = <C1,P> + (-1)^{|C2|} <C2,Q>.
  ExpPoly acc = pairing(C.a, P);
  if (C.weight >= 1) {
    ExpPoly second = pairing(C.b, Q);
    if ((C.weight - 1) % 2 != 0) second = -second;
    acc = acc + second;
  }
  return acc;
}

ExpPoly eval_oform(const OForm& lam, const std::vector<ExtSection>& args) {
  if (static_cast<int>(args.size()) != lam.degree)
    throw StructuralError("eval_oform: wrong number of arguments");
  const Chart& ch = lam.a.chart();
  // (U + @t^W) ^ (X + f @t) = U^X + @t^(W^X + (-1)^{|U|} f U).
  Tensor U = Tensor::scalar(ch, Kind::Multivector, ExpPoly::constant(ch, 1));
  Tensor W = Tensor::zero(ch, Kind::Multivector, 0);
  bool w_live = false;
  int udeg = 0;
  for (const auto& s : args) {
    Tensor newU = wedge(U, s.X);
    Tensor fU = U.scaled(s.f);
    if (udeg % 2 != 0) fU = -fU;
    Tensor newW = fU;
    if (w_live) newW = wedge(W, s.X) + fU;
    U = std::move(newU);
    W = std::move(newW);
    w_live = true;
    ++udeg;
  }
  ExpPoly acc = pairing(U, lam.a);
  if (lam.degree >= 1) {
    ExpPoly second = pairing(W, lam.b);
    if ((lam.degree - 1) % 2 != 0) second = -second;
    acc = acc + second;
  }
  return acc;
}

ExpPoly pair_wmv1_section(const WMv& C, const JetSection& s) {
  if (C.weight != 1) throw StructuralError("pair_wmv1_section: weight must be 1");
  return pairing(C.a, s.alpha) + C.b.coeff({}) * s.f;
}

} // namespace jbv
