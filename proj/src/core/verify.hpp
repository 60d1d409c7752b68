// Named property suites: seeded random sweeps of the algebraic identities the
// operators must satisfy.  Shared by the CLI `verify` command and the
// acceptance suite.
#ifndef JBV_VERIFY_HPP
#define JBV_VERIFY_HPP

#include <functional>
#include <map>

#include "core/parser.hpp"
#include "core/report.hpp"
#include "core/rng.hpp"

namespace jbv {

struct RunOptions {
  uint64_t seed = 7;
  int trials = 40;
  int max_degree = 3;
};

using SuiteFn = std::function<Report(const StructureBundle&, const RunOptions&)>;

const std::map<std::string, SuiteFn>& suite_registry();
std::vector<std::string> suite_names();

/// Runs one suite ("all" aggregates every suite that applies to the bundle).
Report run_suite(const std::string& name, const StructureBundle& b, const RunOptions& opts);

/// A deterministic valid (Q,E,Omega) structure family for sweeps.
StructureBundle random_omega_structure(Rng& rng);

/// Deterministic search for a Leibniz-rule violation of the differential
/// against the weighted bracket; returns a report with the witness.
Report nonstrong_witness(const StructureBundle& b);

} // namespace jbv

#endif
