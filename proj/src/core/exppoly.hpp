// Exponential polynomials: finite sums  c * x^a * exp(<r,x>)  with exact
// rational c and r, natural exponent tuples a, on a fixed chart.  This ring is
// closed under +, *, and coordinate derivatives, and equality is decidable,
// which is what makes every identity check in the library exact.
#ifndef JBV_EXPPOLY_HPP
#define JBV_EXPPOLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/chart.hpp"
#include "core/rational.hpp"

namespace jbv {

struct ExpKey {
  std::vector<uint32_t> exps;    // monomial exponents, one per coordinate
  std::vector<Rational> freqs;   // exponential frequencies, one per coordinate

  // Canonical term order: lexicographic on (freqs, exps).
  bool operator<(const ExpKey& o) const {
    if (freqs != o.freqs) return freqs < o.freqs;
    return exps < o.exps;
  }
  bool operator==(const ExpKey& o) const { return exps == o.exps && freqs == o.freqs; }
};

class ExpPoly {
public:
  ExpPoly() = default;
  explicit ExpPoly(Chart chart) : chart_(std::move(chart)) {}

  static ExpPoly zero(const Chart& c) { return ExpPoly(c); }
  static ExpPoly constant(const Chart& c, const Rational& v);
  static ExpPoly coordinate(const Chart& c, int i);
  /// exp(sum_i freqs[i] * x_i)
  static ExpPoly exponential(const Chart& c, std::vector<Rational> freqs);
  static ExpPoly monomial(const Chart& c, ExpKey key, const Rational& coeff);

  const Chart& chart() const { return chart_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<ExpKey, Rational>& terms() const { return terms_; }

  ExpPoly operator+(const ExpPoly& o) const;
  ExpPoly operator-(const ExpPoly& o) const;
  ExpPoly operator-() const;
  ExpPoly operator*(const ExpPoly& o) const;
  ExpPoly scaled(const Rational& c) const;
  bool operator==(const ExpPoly& o) const;
  bool operator!=(const ExpPoly& o) const { return !(*this == o); }

  /// Exact partial derivative along coordinate i (0-based):
  /// d/dx_i of p*exp(<r,x>) = (dp/dx_i + r_i p)*exp(<r,x>).
  ExpPoly partial(int i) const;

  /// Largest total monomial degree over all terms (-1 for the zero value).
  int poly_degree() const;
  bool has_exponentials() const;

  /// True when the value is a single term  c * x^a * exp(<r,x>).
  bool is_single_term() const { return terms_.size() == 1; }
  /// True when the value is a single term with a = 0 (invertible in the ring).
  bool is_unit() const;
  /// Inverse of a unit term; throws StructuralError otherwise.
  ExpPoly unit_inverse() const;

  std::optional<Rational> as_rational_constant() const;

  /// Exact evaluation with zero frequencies; terms with exponentials refuse.
  std::optional<Rational> eval_polynomial(const std::vector<Rational>& point) const;

  std::string to_string() const;

  void add_term(const ExpKey& key, const Rational& coeff);

private:
  Chart chart_;
  std::map<ExpKey, Rational> terms_;   // no zero coefficients stored
};

ExpPoly operator*(const Rational& c, const ExpPoly& p);

} // namespace jbv

#endif
