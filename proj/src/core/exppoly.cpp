#include "core/exppoly.hpp"

#include <numeric>
#include <sstream>

namespace jbv {

static void require_chart(const ExpPoly& a, const ExpPoly& b, const char* where) {
  require_same_chart(a.chart(), b.chart(), where);
}

void ExpPoly::add_term(const ExpKey& key, const Rational& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

ExpPoly ExpPoly::constant(const Chart& c, const Rational& v) {
  ExpPoly p(c);
  ExpKey k{std::vector<uint32_t>(c.dim(), 0), std::vector<Rational>(c.dim(), Rational(0))};
  p.add_term(k, v);
  return p;
}

ExpPoly ExpPoly::coordinate(const Chart& c, int i) {
  if (i < 0 || i >= c.dim()) throw StructuralError("coordinate index out of range");
  ExpPoly p(c);
  ExpKey k{std::vector<uint32_t>(c.dim(), 0), std::vector<Rational>(c.dim(), Rational(0))};
  k.exps[i] = 1;
  p.add_term(k, 1);
  return p;
}

ExpPoly ExpPoly::exponential(const Chart& c, std::vector<Rational> freqs) {
  if (static_cast<int>(freqs.size()) != c.dim())
    throw StructuralError("exponential: frequency tuple has wrong length");
  ExpPoly p(c);
  ExpKey k{std::vector<uint32_t>(c.dim(), 0), std::move(freqs)};
  p.add_term(k, 1);
  return p;
}

ExpPoly ExpPoly::monomial(const Chart& c, ExpKey key, const Rational& coeff) {
  if (static_cast<int>(key.exps.size()) != c.dim() || static_cast<int>(key.freqs.size()) != c.dim())
    throw StructuralError("monomial: key has wrong length");
  ExpPoly p(c);
  p.add_term(key, coeff);
  return p;
}

ExpPoly ExpPoly::operator+(const ExpPoly& o) const {
  require_chart(*this, o, "ExpPoly +");
  ExpPoly r = *this;
  for (const auto& [k, v] : o.terms_) r.add_term(k, v);
  return r;
}

ExpPoly ExpPoly::operator-(const ExpPoly& o) const {
  require_chart(*this, o, "ExpPoly -");
  ExpPoly r = *this;
  for (const auto& [k, v] : o.terms_) r.add_term(k, -v);
  return r;
}

ExpPoly ExpPoly::operator-() const {
  ExpPoly r(chart_);
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, -v);
  return r;
}

ExpPoly ExpPoly::operator*(const ExpPoly& o) const {
  require_chart(*this, o, "ExpPoly *");
  ExpPoly r(chart_);
  const int m = chart_.dim();
  for (const auto& [ka, va] : terms_) {
    for (const auto& [kb, vb] : o.terms_) {
      ExpKey k;
      k.exps.resize(m);
      k.freqs.resize(m);
      for (int i = 0; i < m; ++i) {
        k.exps[i] = ka.exps[i] + kb.exps[i];
        k.freqs[i] = ka.freqs[i] + kb.freqs[i];
      }
      r.add_term(k, va * vb);
    }
  }
  return r;
}

ExpPoly ExpPoly::scaled(const Rational& c) const {
  ExpPoly r(chart_);
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

ExpPoly operator*(const Rational& c, const ExpPoly& p) { return p.scaled(c); }

bool ExpPoly::operator==(const ExpPoly& o) const {
  if (!chart_.same_as(o.chart_)) return false;
  return terms_ == o.terms_;
}

ExpPoly ExpPoly::partial(int i) const {
  if (i < 0 || i >= chart_.dim()) throw StructuralError("partial: coordinate index out of range");
  ExpPoly r(chart_);
  for (const auto& [k, v] : terms_) {
    if (k.exps[i] > 0) {
      ExpKey kd = k;
      kd.exps[i] -= 1;
      r.add_term(kd, v * Rational(k.exps[i]));
    }
    if (k.freqs[i] != 0) r.add_term(k, v * k.freqs[i]);
  }
  return r;
}

int ExpPoly::poly_degree() const {
  int deg = -1;
  for (const auto& [k, v] : terms_) {
    (void)v;
    int d = std::accumulate(k.exps.begin(), k.exps.end(), 0);
    if (d > deg) deg = d;
  }
  return deg;
}

bool ExpPoly::has_exponentials() const {
  for (const auto& [k, v] : terms_) {
    (void)v;
    for (const auto& f : k.freqs)
      if (f != 0) return true;
  }
  return false;
}

bool ExpPoly::is_unit() const {
  if (terms_.size() != 1) return false;
  const auto& k = terms_.begin()->first;
  for (auto e : k.exps)
    if (e != 0) return false;
  return true;
}

ExpPoly ExpPoly::unit_inverse() const {
  if (!is_unit()) throw StructuralError("unit_inverse: value is not a single rational*exp term");
  const auto& [k, v] = *terms_.begin();
  ExpKey ki = k;
  for (auto& f : ki.freqs) f = -f;
  ExpPoly r(chart_);
  r.add_term(ki, Rational(1) / v);
  return r;
}

std::optional<Rational> ExpPoly::as_rational_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() != 1) return std::nullopt;
  const auto& k = terms_.begin()->first;
  for (auto e : k.exps)
    if (e != 0) return std::nullopt;
  for (const auto& f : k.freqs)
    if (f != 0) return std::nullopt;
  return terms_.begin()->second;
}

std::optional<Rational> ExpPoly::eval_polynomial(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != chart_.dim()) return std::nullopt;
  Rational acc(0);
  for (const auto& [k, v] : terms_) {
    for (const auto& f : k.freqs)
      if (f != 0) return std::nullopt;
    Rational t = v;
    for (size_t i = 0; i < k.exps.size(); ++i)
      for (uint32_t e = 0; e < k.exps[i]; ++e) t *= point[i];
    acc += t;
  }
  return acc;
}

std::string ExpPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    Rational c = v;
    if (first) {
      if (c < 0) { os << "-"; c = -c; }
    } else {
      if (c < 0) { os << " - "; c = -c; } else { os << " + "; }
    }
    std::vector<std::string> factors;
    bool any_basis = false;
    for (size_t i = 0; i < k.exps.size(); ++i) {
      if (k.exps[i] == 0) continue;
      any_basis = true;
      std::string f = chart_.name(static_cast<int>(i));
      if (k.exps[i] > 1) f += "^" + std::to_string(k.exps[i]);
      factors.push_back(f);
    }
    bool any_freq = false;
    for (const auto& f : k.freqs)
      if (f != 0) { any_freq = true; break; }
    if (any_freq) {
      std::string arg;
      bool afirst = true;
      for (size_t i = 0; i < k.freqs.size(); ++i) {
        if (k.freqs[i] == 0) continue;
        Rational f = k.freqs[i];
        if (afirst) {
          if (f < 0) { arg += "-"; f = -f; }
          afirst = false;
        } else {
          arg += (f < 0) ? " - " : " + ";
          if (f < 0) f = -f;
        }
        if (f != 1) arg += jbv::to_string(f) + "*";
        arg += chart_.name(static_cast<int>(i));
      }
      factors.push_back("exp(" + arg + ")");
      any_basis = true;
    }
    if (c != 1 || !any_basis) os << jbv::to_string(c) << (any_basis ? "*" : "");
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) os << "*";
      os << factors[i];
    }
    first = false;
  }
  return os.str();
}

} // namespace jbv
