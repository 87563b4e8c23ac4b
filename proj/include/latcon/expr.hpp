#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "latcon/lattice.hpp"

namespace latcon {

/// A lattice-valued expression:
///
///   chain(k) | B2 | M3 | N5 | K | div(n) | file("path")
///   osum(e, e) | hsum(e, e, ...) | ihsum(e, "a", "b", e) | D(e)
///
/// Whitespace between tokens is ignored.
struct LatticeExpr {
  enum class Kind { chain, b2, m3, n5, k, div, file, osum, hsum, ihsum, dilate };

  Kind kind = Kind::b2;
  /// chain length or div argument.
  long long number = 0;
  /// file path.
  std::string path;
  /// ihsum interval endpoints, as labels of the first argument.
  std::string low;
  std::string high;
  std::vector<LatticeExpr> args;

  friend bool operator==(const LatticeExpr&, const LatticeExpr&) = default;
};

/// Throws SyntaxError (with a 1-based offset) or ArityError.
LatticeExpr parse_expr(std::string_view text);

/// Canonical text; parse_expr(render(e)) == e.
std::string render(const LatticeExpr& expr);

/// Builds the lattice. Errors of the underlying constructions propagate;
/// file() failures raise IoError.
Lattice eval(const LatticeExpr& expr);

}  // namespace latcon
