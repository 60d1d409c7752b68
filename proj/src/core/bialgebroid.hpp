// The TM+R side: Omega-twisted bracket on extended vector fields, Omega-
// Poisson structures (Q,E,Omega), the triangular bracket on 1-jet sections,
// the twisted differential and its exact generator, the two modular fields,
// Studi-Poisson brackets and time functions.
#ifndef JBV_BIALGEBROID_HPP
#define JBV_BIALGEBROID_HPP

#include <optional>

#include "core/jacobi.hpp"
#include "core/modular.hpp"

namespace jbv {

/// [X+f@t, Y+g@t] = [X,Y] + (Xg - Yf + Omega(X,Y)) @t; requires d Omega = 0.
ExtSection ext_bracket(const ExtSection& s1, const ExtSection& s2, const Tensor& Omega);

/// Bivector with both slots of Omega raised: B(a,b) = Omega(sharp a, sharp b).
Tensor sharp_q_omega(const Tensor& Q, const Tensor& Omega);

struct OmegaValidity {
  bool pass = false;
  Tensor residual_qq;    // [Q,Q]
  Tensor residual_le;    // L_E Q - sharp_Q Omega
  OMv residual_pi;       // [Pi,Pi]_Omega via the extended Schouten calculus
};

class OmegaPoissonStructure {
public:
  OmegaPoissonStructure() = default;
  /// Requires d Omega = 0 (throws otherwise); validity is a separate report.
  OmegaPoissonStructure(Tensor Q, Tensor E, Tensor Omega);

  const Chart& chart() const { return Q_.chart(); }
  const Tensor& Q() const { return Q_; }
  const Tensor& E() const { return E_; }
  const Tensor& Omega() const { return Omega_; }
  bool omega_is_zero() const { return Omega_.is_zero(); }

  OMv pi() const;   // Q + @t^E

  const OmegaValidity& validity() const;
  bool is_valid() const { return validity().pass; }

private:
  Tensor Q_, E_, Omega_;
  mutable std::optional<OmegaValidity> validity_;
};

OmegaValidity check_omega_poisson(const OmegaPoissonStructure& S);

/// sharp_Pi(alpha + f dt) = sharp_Q alpha + f E - alpha(E) @t.
ExtSection pi_sharp(const OmegaPoissonStructure& S, const JetSection& s);

/// Pi(alpha+f dt, beta+g dt) = Q(alpha,beta) + f beta(E) - g alpha(E).
ExpPoly pi_eval(const OmegaPoissonStructure& S, const JetSection& s1, const JetSection& s2);

/// Triangular bracket on 1-jet sections over (Q,E,Omega).
JetSection jet_bracket_omega(const OmegaPoissonStructure& S, const JetSection& s1,
                             const JetSection& s2);

/// Twisted differential d_Omega(l1 + l2^dt) = (d l1 - (-1)^k Omega^l2) + (d l2)^dt.
OForm d_omega(const Tensor& Omega, const OForm& lam);

/// Chevalley-Eilenberg route for the same differential (evaluation on basis
/// sections of TM+R); cross-check oracle.
OForm d_omega_ce(const OmegaPoissonStructure& S, const OForm& lam);

/// i(X + f@t) on pairs.
OForm interior_ext(const ExtSection& u, const OForm& lam);

/// Algebroid Lie derivative i(u) d_Omega + d_Omega i(u).
OForm lie_ext(const OmegaPoissonStructure& S, const ExtSection& u, const OForm& lam);

/// Double contraction U ^_Omega V = sum_{i,j} Omega_ij (i(dx_i)U)^(i(dx_j)V).
Tensor wedge_omega(const Tensor& Omega, const Tensor& U, const Tensor& V);

/// The same pairing through the explicit symmetrization formula.
Tensor wedge_omega_symmetrized(const Tensor& Omega, const Tensor& U, const Tensor& V);

/// Extended Schouten bracket on pairs C1 + @t^C2, by bilinear recursion over
/// decomposables with ext_bracket at degree one.
OMv omv_schouten(const Tensor& Omega, const OMv& A, const OMv& B);

/// Coboundary [Pi, .]_Omega in closed form, degree k -> k+1.
OMv partial_omega(const OmegaPoissonStructure& S, const OMv& C);

/// Exact generator on pairs, closed form; degree k -> k-1.
OForm delta_omega(const OmegaPoissonStructure& S, const OForm& lam);

/// The commutator route i(Pi) d_Omega - d_Omega i(Pi).
OForm delta_omega_commutator(const OmegaPoissonStructure& S, const OForm& lam);

/// Gerstenhaber bracket generated by delta_omega.
OForm gerstenhaber_omega(const OmegaPoissonStructure& S, const OForm& x, const OForm& y);

OForm wedge(const OForm& x, const OForm& y);

/// Modular field W^Pi = (W^Q + E) + divE @t.
ExtSection modular_pi(const OmegaPoissonStructure& S, const VolumeForm& vol);

/// tr(flat_Omega o sharp_Q), an exact scalar.
ExpPoly trace_flat_sharp(const OmegaPoissonStructure& S);

/// Modular section in the ELW normalization, from its defining expression.
ExtSection modular_elw_omega(const OmegaPoissonStructure& S, const VolumeForm& vol);

/// The underlying scalar of the definition for a single f (test hook).
ExpPoly modular_elw_omega_scalar(const OmegaPoissonStructure& S, const VolumeForm& vol,
                                 const ExpPoly& f);

struct StudiFunction {
  ExpPoly f0, f1;   // f0 + f1 s, s^2 = 0
};

/// Studi-Poisson bracket of an enriched Poisson pair (Omega = 0).
StudiFunction studi_bracket(const OmegaPoissonStructure& S, const StudiFunction& F,
                            const StudiFunction& G);

/// Enriched Poisson structure of a Jacobi pair with a time function:
/// (Lambda_0, E) with Lambda_0 = Lambda + sharp(L,d tau)^E; requires
/// E tau = 1 and d tau nowhere zero (single-term component test).
OmegaPoissonStructure time_function_structure(const JacobiStructure& J, const ExpPoly& tau);

/// Trajectory field sharp(Lambda_0, dH) + E.
Tensor hamiltonian_trajectory_field(const OmegaPoissonStructure& S0, const ExpPoly& H);

/// {f,g}_s = <d-bar f, d_* g> from the two algebroid differentials.
ExpPoly s_bracket(const JacobiStructure& J, const ExpPoly& f, const ExpPoly& g);

} // namespace jbv

#endif
