// Modular data of a Jacobi pair with respect to a volume form, the flat
// 1-jet connection on the top exterior power, the star duality map, the
// volume-twisted boundary operators, and exact truncated (co)homology.
#ifndef JBV_MODULAR_HPP
#define JBV_MODULAR_HPP

#include <optional>
#include <string>
#include <vector>

#include "core/jacobi.hpp"
#include "core/linalg.hpp"

namespace jbv {

/// A top-degree form whose single coefficient is rational * exponential, so
/// that dividing by it stays inside the ring.
class VolumeForm {
public:
  explicit VolumeForm(Tensor phi);
  const Tensor& phi() const { return phi_; }
  const Chart& chart() const { return phi_.chart(); }

  /// Exact quotient (top form) / Phi.
  ExpPoly divide(const Tensor& top_form) const;

private:
  Tensor phi_;
  ExpPoly inv_coeff_;
};

struct ModularData {
  Tensor V;                 // L_{sharp df} Phi = (Vf) Phi, assembled on coordinates
  ExpPoly divE;             // L_E Phi = divE * Phi
  ExtSection V_class;       // (V - mE) + divE @t
  bool derivation_ok = false;

  // The modular section in the Evens-Lu-Weinstein normalization, computed
  // from its defining expression, plus the two closed-form candidates that
  // circulate in the literature (they disagree; both are reported).
  ExtSection elw_section;
  ExtSection elw_candidate_display;    // (2V - E)  + 2 divE @t
  ExtSection elw_candidate_relation;   // 2 V_class - (2m+1) E
  bool elw_matches_display = false;
  bool elw_matches_relation = false;
};

ModularData modular_data(const JacobiStructure& J, const VolumeForm& vol);

/// The scalar of the Evens-Lu-Weinstein expression for the section of the
/// modular class, computed from its definition (generator-bracket route).
ExpPoly elw_expression(const JacobiStructure& J, const VolumeForm& vol, const ExpPoly& f);

/// Same scalar through the Leibniz expansion over a decomposition of the
/// volume into 1-form factors.  Independent cross-check route.
ExpPoly elw_expression_leibniz(const JacobiStructure& J, const VolumeForm& vol, const ExpPoly& f);

struct JetConnectionValue {
  Tensor mform;     // f d i(E)Phi - alpha ^ (d i(L)Phi + m i(E)Phi)
  ExpPoly scalar;   // mform / Phi
};

/// Flat 1-jet connection on the top exterior power, in the frame fixed by
/// the volume.
JetConnectionValue jet_connection(const JacobiStructure& J, const VolumeForm& vol,
                                  const JetSection& theta);

/// The connection form nu: <nu, theta> = jet_connection(theta).scalar.
WMv connection_form(const JacobiStructure& J, const VolumeForm& vol);

/// Line-bundle curvature of the connection on a pair of sections.
ExpPoly connection_curvature(const JacobiStructure& J, const VolumeForm& vol,
                             const JetSection& t1, const JetSection& t2);

/// Duality map: weight k pair -> weight m-k+1 form pair,
/// ((-1)^m i(C2)Phi, i(C1)Phi).
WForm star_map(const WMv& C, const VolumeForm& vol);

/// Volume boundary: generator minus contraction with the modular pair.
WForm d0(const JacobiStructure& J, const VolumeForm& vol, const WForm& lam);

/// The modular pair e^{-t}(V - mE + divE @t) as a weight-1 multivector.
WMv modular_pair(const JacobiStructure& J, const VolumeForm& vol);

/// Volume-twisted coboundary on weighted multivectors.
WMv twisted_coboundary(const JacobiStructure& J, const VolumeForm& vol, const WMv& C);

enum class ComplexOp { BvDelta, Sigma, D0, BarD, Twisted };

const char* complex_op_name(ComplexOp op);
std::optional<ComplexOp> complex_op_from_name(const std::string& name);

/// Exact matrices of an operator on the monomial-coefficient basis of
/// weighted pairs with coefficient degree <= max_degree.
struct TruncatedComplex {
  ComplexOp op = ComplexOp::BvDelta;
  int max_degree = 0;
  bool raising = false;                 // sigma/bar_d/twisted raise the weight
  std::vector<int> dims;                // one per weight 0..m+1
  std::vector<Matrix> mats;             // mats[k]: weight k -> k -/+ 1
  std::vector<std::vector<std::string>> basis_desc;
};

TruncatedComplex truncated_complex(ComplexOp op, const JacobiStructure& J,
                                   const VolumeForm* vol, int max_degree);

/// dim ker - rank per weight, exact.
std::vector<int> betti(const TruncatedComplex& t);

/// Least-squares-free exact feasibility of sigma f = target over polynomial
/// f with zero frequencies and degree <= max_degree.
std::optional<ExpPoly> solve_sigma_f(const JacobiStructure& J, const WMv& target, int max_degree);

} // namespace jbv

#endif
