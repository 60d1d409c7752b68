// Text input: coefficient expressions (rationals, coordinates, + - * ^,
// exp(linear form)), tensor expressions (dx/@x basis factors joined by ^),
// and line-oriented structure files.
#ifndef JBV_PARSER_HPP
#define JBV_PARSER_HPP

#include <string>

#include "core/presets.hpp"

namespace jbv {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                           std::to_string(col_) + ": " + msg),
        line(line_), col(col_) {}
};

struct Value {
  enum class Type { Scalar, Form, Mv } type = Type::Scalar;
  ExpPoly scalar;
  Tensor tensor;
};

/// Parses one expression on a fixed chart.
Value parse_expression(const std::string& text, const Chart& chart);

/// Structure file:
///   # comment
///   chart dim=2 coords=x,y
///   kind jacobi            (or omega-poisson, enriched)
///   bivector Lambda = @x^@y
///   vector   E      = 0
///   volume   Phi    = dx^dy
///   2form    Omega  = dx^dy
///   function f      = x^2 + exp(1/2*x)
/// Jacobi files bind Lambda and E; omega-poisson files bind Q, E, Omega.
StructureBundle parse_structure(const std::string& text);

/// Canonical printing; print(parse(x)) is a fixed point.
std::string print_structure(const StructureBundle& b);

} // namespace jbv

#endif
