// Dense exact rational linear algebra: rank, kernel dimension, and linear
// feasibility.  Sizes here are desk scale (a few hundred rows), so plain
// fraction arithmetic with full pivoting is plenty.
#ifndef JBV_LINALG_HPP
#define JBV_LINALG_HPP

#include <optional>
#include <vector>

#include "core/rational.hpp"

namespace jbv {

using Matrix = std::vector<std::vector<Rational>>;   // row-major

int rank(Matrix m);

/// Solves A x = b exactly; nullopt when the system is infeasible.
std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b);

/// True when consecutive matrices compose to zero (next * cur == 0).
bool composes_to_zero(const Matrix& next, const Matrix& cur);

} // namespace jbv

#endif
