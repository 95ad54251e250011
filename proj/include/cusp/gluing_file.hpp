#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cusp/triangulation.hpp"

namespace cusp {

// Plain-text gluing tables:
//
//   tets <n>
//   t:p0p1p2p3 t:p0p1p2p3 t:p0p1p2p3 t:p0p1p2p3    (one line per tetrahedron)
//
// Token j on line i says face j of tetrahedron i is glued to tetrahedron t
// (0-based) by the permutation sending label k to p_k. A lone '-' marks an
// unglued face. '#' starts a comment; blank lines are ignored.

enum class ParseErrorKind {
  BadHeader,
  MalformedToken,
  TetOutOfRange,
  NotPermutation,
  WrongFaceCount,
  WrongTetCount,
};

std::string to_string(ParseErrorKind k);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& detail);

  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
};

/// Reads a gluing table exactly as written; involution is not checked here.
Triangulation parse_gluing_table(std::string_view text);

std::string serialize_gluing_table(const Triangulation& tri);

/// Reads `sig:<signature>`, '-' for standard input, or a file path.
Triangulation load_triangulation(const std::string& source);

}  // namespace cusp
