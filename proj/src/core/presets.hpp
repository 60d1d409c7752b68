// Canonical structure constructors: contact charts, globally conformal
// symplectic charts, constant Poisson bivectors.  Every constructor verifies
// its defining identities before returning.
#ifndef JBV_PRESETS_HPP
#define JBV_PRESETS_HPP

#include <map>
#include <optional>
#include <string>

#include "core/bialgebroid.hpp"

namespace jbv {

/// A named structure with everything the CLI and the suites need.
struct StructureBundle {
  std::string kind;   // "jacobi" | "omega-poisson" | "enriched"
  std::string name;
  Chart chart;
  std::optional<JacobiStructure> jacobi;
  std::optional<OmegaPoissonStructure> omega;
  std::optional<VolumeForm> vol;
  std::map<std::string, Tensor> named;      // extra tensors (theta, Omega, ...)
  std::map<std::string, ExpPoly> functions;

  const JacobiStructure& require_jacobi() const;
  const OmegaPoissonStructure& require_omega() const;
  const VolumeForm& require_vol() const;
};

/// Contact chart (q1..qn, p1..pn, z) with the canonical pair, the contact
/// form theta = dz - sum p_i dq_i and the volume theta ^ (d theta)^n.
StructureBundle contact_canonical(int n);

/// Globally conformal symplectic chart (x1..x_{2n}) with Omega = e^sigma
/// Omega_0, sigma = <slopes, x> linear, sharp = flat^{-1}, E = sharp(d sigma),
/// volume Omega^n.
StructureBundle gcs_structure(int n, const std::vector<Rational>& slopes);

/// Constant Poisson bivector from a skew rational matrix; E = 0.
StructureBundle constant_poisson(const std::vector<std::vector<Rational>>& a);

/// "contact:n", "gcs:n:r" or "gcs:n:r1,r2,...", "const:a11,a12;a21,a22;...".
StructureBundle parse_preset(const std::string& spec);

} // namespace jbv

#endif
