// Algebra-definition files: a line-based text format with one record per line.
//
//   field Q
//   rank <r>
//   basis <name_0> ... <name_{d-1}>
//   degree <i> <g_1> ... <g_r>          one line per basis element
//   unit <i>
//   const <i> <j> <k> <value>           e_i e_j has coefficient value on e_k
//   gram <i> <v_0> ... <v_{d-1}>        optional; all rows or none
//   bichar_dims <rows> <cols>           optional bicharacter block
//   bichar <i> <v_0> ... <v_{cols-1}>
//
// '#' starts a comment. Rationals are written "p" or "p/q".
#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "twistbv/algebra.hpp"

namespace twistbv::io {

// Malformed file; carries the offending line (0 when not tied to a line) and record keyword.
struct ParseError : InputError {
  ParseError(std::size_t line, std::string field, const std::string& message);
  std::size_t line;
  std::string field;
};

struct AlgebraFile {
  algebra::GradedAlgebra algebra;
  std::optional<linalg::Matrix> gram;
  std::optional<algebra::Bicharacter> bichar;
};

AlgebraFile parse_algebra(const std::string& text);
AlgebraFile load_algebra(const std::string& path);
// Canonical form: records in the order above, constants sorted by (i, j, k).
std::string serialize_algebra(const AlgebraFile& file);

}  // namespace twistbv::io
