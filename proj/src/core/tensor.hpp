// Graded skew tensors over a chart: differential forms and multivector
// fields with ExpPoly coefficients, plus the exterior/interior calculus and
// the Schouten-Nijenhuis bracket.
//
// Conventions (pinned once, used everywhere):
//  * components are stored on strictly increasing index tuples;
//  * the interior product contracts the first factor into the leading slot,
//    i(X1^...^Xp)mu = i(Xp) o ... o i(X1) mu, so that
//    <dx_I, @x_I> = +1 for every increasing tuple I;
//  * the Schouten bracket satisfies [X,Y] = Lie bracket, [X,f] = Xf,
//    [U,V] = (-1)^{|U||V|}[V,U], and the Leibniz rule
//    [U, V^W] = [U,V]^W + (-1)^{(|U|+1)|V|} V^[U,W].
//    In this convention [L,f] = sharp(L, df) for a bivector L.
#ifndef JBV_TENSOR_HPP
#define JBV_TENSOR_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/exppoly.hpp"

namespace jbv {

enum class Kind : uint8_t { Form, Multivector };

using IdxTuple = std::vector<uint8_t>;   // strictly increasing, 0-based

class Tensor {
public:
  Tensor() = default;
  Tensor(Chart chart, Kind kind, int degree);

  static Tensor zero(const Chart& c, Kind k, int degree) { return Tensor(c, k, degree); }
  static Tensor scalar(const Chart& c, Kind k, const ExpPoly& f);
  /// Unit basis element dx_I or @x_I for an increasing tuple I.
  static Tensor basis(const Chart& c, Kind k, const IdxTuple& idx);

  const Chart& chart() const { return chart_; }
  Kind kind() const { return kind_; }
  int degree() const { return degree_; }
  bool is_zero() const { return comps_.empty(); }
  const std::map<IdxTuple, ExpPoly>& comps() const { return comps_; }

  /// Adds coeff on the (possibly unsorted) tuple idx, with the sorting sign;
  /// repeated indices contribute nothing.
  void add_term(IdxTuple idx, const ExpPoly& coeff);
  const ExpPoly& coeff(const IdxTuple& idx) const;   // zero ExpPoly if absent

  Tensor operator+(const Tensor& o) const;
  Tensor operator-(const Tensor& o) const;
  Tensor operator-() const;
  Tensor scaled(const ExpPoly& f) const;
  Tensor scaled(const Rational& c) const;
  bool operator==(const Tensor& o) const;
  bool operator!=(const Tensor& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  Chart chart_;
  Kind kind_ = Kind::Form;
  int degree_ = 0;
  std::map<IdxTuple, ExpPoly> comps_;
};

/// a ^ b (same chart and kind); graded commutative.
Tensor wedge(const Tensor& a, const Tensor& b);

/// Exterior differential of a form.
Tensor ext_d(const Tensor& form);

/// i(P)mu: multivector contracted into a form (zero if deg P > deg mu).
Tensor interior(const Tensor& P, const Tensor& mu);

/// Transpose contraction i(omega)U of a form into a multivector.
Tensor interior_form(const Tensor& omega, const Tensor& U);

/// Full contraction of equal-degree multivector and form.
ExpPoly pairing(const Tensor& U, const Tensor& omega);

/// X(f) for a vector field X.
ExpPoly apply_vf(const Tensor& X, const ExpPoly& f);

/// Lie derivative along a vector field: Cartan formula on forms,
/// Schouten bracket on multivectors.
Tensor lie_derivative(const Tensor& X, const Tensor& T);

/// Schouten-Nijenhuis bracket (coordinate formula, bidirectional
/// contraction of derivatives).
Tensor schouten(const Tensor& U, const Tensor& V);

/// Independent route: recursion over decomposable terms.  Test oracle for
/// schouten(); not used by the operators themselves.
Tensor schouten_recursive(const Tensor& U, const Tensor& V);

/// sharp(L, alpha): <sharp alpha, beta> = L(alpha, beta).
Tensor sharp(const Tensor& Lambda, const Tensor& alpha);

/// flat(Omega, X) = i(X)Omega.
Tensor flat(const Tensor& Omega, const Tensor& X);

/// L(alpha, beta) for a bivector.
ExpPoly eval2(const Tensor& Lambda, const Tensor& alpha, const Tensor& beta);

/// Koszul bracket of 1-forms over a bivector:
/// {a,b} = L_{sharp a} b - L_{sharp b} a - d(L(a,b)).
Tensor koszul_bracket(const Tensor& Lambda, const Tensor& alpha, const Tensor& beta);

/// delta_L = i(L) d - d i(L) for a bivector L (grade -1 on forms).
Tensor delta_operator(const Tensor& Lambda, const Tensor& form);

/// Multivector evaluated on 1-forms / form evaluated on vector fields.
ExpPoly eval_on(const Tensor& T, const std::vector<Tensor>& args);

/// Coerce a zero tensor to the wanted degree (zeros carry an explicit degree
/// so the grading stays total); throws if a nonzero tensor disagrees.
Tensor as_deg(const Tensor& t, int degree);

} // namespace jbv

#endif
