// Jacobi structures, the 1-jet Lie algebroid bracket and anchor, the exact
// generator of the associated Gerstenhaber algebra on weighted forms, and the
// Lichnerowicz-type coboundary on weighted multivectors.
#ifndef JBV_JACOBI_HPP
#define JBV_JACOBI_HPP

#include <optional>
#include <utility>

#include "core/weighted.hpp"

namespace jbv {

struct ValidityReport {
  bool pass = false;
  Tensor residual_pp;   // [L,L] - 2 E^L
  Tensor residual_le;   // [L,E]
};

/// A bivector L and vector field E; valid when [L,L] = 2E^L and [L,E] = 0.
/// Invalid structures stay usable (operators attach a warning instead of
/// refusing), so broken identities can be inspected.
class JacobiStructure {
public:
  JacobiStructure() = default;
  JacobiStructure(Tensor Lambda, Tensor E);

  const Chart& chart() const { return Lambda_.chart(); }
  const Tensor& Lambda() const { return Lambda_; }
  const Tensor& E() const { return E_; }

  const ValidityReport& validity() const;
  bool is_valid() const { return validity().pass; }

private:
  Tensor Lambda_, E_;
  mutable std::optional<ValidityReport> validity_;
};

/// {f,g} = L(df,dg) + f(Eg) - g(Ef).
ExpPoly fn_bracket(const JacobiStructure& J, const ExpPoly& f, const ExpPoly& g);

/// The 1-jet algebroid bracket on sections e^t(alpha + f dt).
JetSection jet_bracket(const JacobiStructure& J, const JetSection& s1, const JetSection& s2);

/// Anchor: sharp(L, alpha) + f E.
Tensor jet_anchor(const JacobiStructure& J, const JetSection& s);

/// Exact generator (grade -1) on weighted forms, slotwise closed form.
WForm bv_delta(const JacobiStructure& J, const WForm& lam);

/// Independent route for the generator: i(P) d - d i(P) evaluated through the
/// weighted-pair calculus, with i(P)(dt^mu) = e^{-t}(i(E)mu + dt^(i(L)mu)).
WForm bv_delta_oracle(const JacobiStructure& J, const WForm& lam);

/// Gerstenhaber bracket defined by the generator:
/// [a,b] = (-1)^k (delta(a^b) - delta a ^ b - (-1)^k a ^ delta b).
WForm gerstenhaber_bracket(const JacobiStructure& J, const WForm& x, const WForm& y);

/// Differential d-bar: slotwise exterior derivative, weight k -> k+1.
WForm bar_d(const WForm& lam);

/// Closed form of delta d-bar + d-bar delta (anticommutator of the generator
/// with the differential).
WForm anticommutator_closed(const JacobiStructure& J, const WForm& lam);

/// The same anticommutator by direct composition.
WForm anticommutator_composed(const JacobiStructure& J, const WForm& lam);

/// Coboundary on weighted multivectors (cohomology side), weight k -> k+1:
///   sigma C = [L,C1] - k E^C1 - L^C2 - @t^([L,C2] - (k-1) E^C2 + [E,C1]).
WMv sigma(const JacobiStructure& J, const WMv& C);

/// Independent route: the Chevalley-Eilenberg coboundary of the 1-jet
/// algebroid, evaluated on basis sections and reassembled.
WMv sigma_ce_oracle(const JacobiStructure& J, const WMv& C);

/// Independent route: the Schouten bracket with the Poissonization pair
/// e^{-t}(L + @t^E), computed through the weight-graded superspace calculus.
WMv sigma_oracle(const JacobiStructure& J, const WMv& C);

/// Pullback of a k-form along the anchor, as a weighted-multivector cochain:
/// (rho# lam)(s_1,...,s_k) = (-1)^k lam(rho s_1, ..., rho s_k).
WMv rho_sharp(const JacobiStructure& J, const Tensor& form);

/// Hamiltonian data of phi (with an explicit t-slope slot):
/// (sharp(L,d phi) + slope*E,  -(E phi)).
std::pair<Tensor, ExpPoly> hamiltonian_pair(const JacobiStructure& J, const ExpPoly& phi,
                                            const ExpPoly& slope);

/// i(W)(lam) for a weight-1 multivector pair W = e^{-t}(W_v + w @t).
WForm interior_wmv1(const WMv& W, const WForm& lam);

} // namespace jbv

#endif
