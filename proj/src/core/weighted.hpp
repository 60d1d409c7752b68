// Weight-graded pairs: the computational stand-ins for differential forms
// and multivector fields on M x R that the 1-jet calculus produces.
//
//   WForm k:(a,b)   <->  e^{kt} (a + b ^ dt)          deg a = k, deg b = k-1
//   WMv   k:(a,b)   <->  e^{-kt}(a + @t ^ b)          deg a = k, deg b = k-1
//   JetSection      <->  e^{t}  (alpha + f dt)
//
// and their weightless cousins used by the TM+R / 1-jet bialgebroid calculus:
//
//   OForm k:(a,b)   <->  a + b ^ dt
//   OMv   k:(a,b)   <->  a + @t ^ b
//   ExtSection      <->  X + f @t
//
// The slot bookkeeping (weights, degrees, dt-moving signs) lives here so the
// operator modules can be written against the displayed slot formulas.
#ifndef JBV_WEIGHTED_HPP
#define JBV_WEIGHTED_HPP

#include <string>
#include <vector>

#include "core/tensor.hpp"

namespace jbv {

namespace detail {
void check_pair(const Tensor& a, const Tensor& b, int weight, Kind kind, const char* what);
}

struct WForm {
  int weight = 0;
  Tensor a, b;

  WForm() = default;
  WForm(int k, Tensor a_, Tensor b_);
  static WForm zero(const Chart& c, int k);

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  WForm operator+(const WForm& o) const;
  WForm operator-(const WForm& o) const;
  WForm operator-() const;
  WForm scaled(const Rational& c) const;
  bool operator==(const WForm& o) const;
  bool operator!=(const WForm& o) const { return !(*this == o); }
  std::string to_string() const;
};

/// Wedge of weighted forms: weights add, dt moves past the second first slot.
WForm wedge(const WForm& x, const WForm& y);

struct WMv {
  int weight = 0;
  Tensor a, b;

  WMv() = default;
  WMv(int k, Tensor a_, Tensor b_);
  static WMv zero(const Chart& c, int k);

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  WMv operator+(const WMv& o) const;
  WMv operator-(const WMv& o) const;
  WMv operator-() const;
  WMv scaled(const Rational& c) const;
  bool operator==(const WMv& o) const;
  bool operator!=(const WMv& o) const { return !(*this == o); }
  std::string to_string() const;
};

WMv wedge(const WMv& x, const WMv& y);

/// e^t(alpha + f dt), the 1-jet sections.
struct JetSection {
  Tensor alpha;   // 1-form
  ExpPoly f;

  JetSection() = default;
  JetSection(Tensor alpha_, ExpPoly f_);
  static JetSection zero(const Chart& c);
  static JetSection jet(const Chart& c, const ExpPoly& g);   // (dg, g)

  WForm as_wform() const;
  JetSection operator+(const JetSection& o) const;
  JetSection operator-(const JetSection& o) const;
  JetSection scaled_fn(const ExpPoly& g) const;   // module structure g.s
  bool operator==(const JetSection& o) const;
  std::string to_string() const;
};

/// X + f @t, sections of TM + R.
struct ExtSection {
  Tensor X;   // vector field
  ExpPoly f;

  ExtSection() = default;
  ExtSection(Tensor X_, ExpPoly f_);
  static ExtSection zero(const Chart& c);
  bool is_zero() const { return X.is_zero() && f.is_zero(); }
  ExtSection operator+(const ExtSection& o) const;
  ExtSection operator-(const ExtSection& o) const;
  bool operator==(const ExtSection& o) const;
  std::string to_string() const;
};

/// Weightless pairs for the TM+R calculus.
struct OForm {
  int degree = 0;
  Tensor a, b;
  OForm() = default;
  OForm(int k, Tensor a_, Tensor b_);
  static OForm zero(const Chart& c, int k);
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  OForm operator+(const OForm& o) const;
  OForm operator-(const OForm& o) const;
  OForm operator-() const;
  bool operator==(const OForm& o) const;
  std::string to_string() const;
};

struct OMv {
  int degree = 0;
  Tensor a, b;
  OMv() = default;
  OMv(int k, Tensor a_, Tensor b_);
  static OMv zero(const Chart& c, int k);
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  OMv operator+(const OMv& o) const;
  OMv operator-(const OMv& o) const;
  OMv operator-() const;
  OMv scaled(const Rational& c) const;
  bool operator==(const OMv& o) const;
  std::string to_string() const;
};

OMv wedge(const OMv& x, const OMv& y);

/// Full contraction <a + @t^b, wedge of jet sections>.
ExpPoly eval_wmv(const WMv& C, const std::vector<JetSection>& args);

/// Full contraction <a + b^dt, wedge of TM+R sections>.
ExpPoly eval_oform(const OForm& lam, const std::vector<ExtSection>& args);

/// <C1 + @t^C2, alpha + f dt> for a weight-1 multivector pair.
ExpPoly pair_wmv1_section(const WMv& C, const JetSection& s);

} // namespace jbv

#endif
