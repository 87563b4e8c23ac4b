#pragma once

#include <optional>
#include <vector>

#include "latcon/lattice.hpp"

namespace latcon {

/// An order isomorphism L → M as a map f with f[x] the image of x, or
/// nullopt when none exists.
///
/// Elements are matched on (height, depth, upper-cover count, lower-cover
/// count) and extended by backtracking; candidates are tried in ascending
/// index order, so the witness returned is deterministic.
std::optional<std::vector<Element>> isomorphic(const Lattice& lattice, const Lattice& other);

/// Labels of an isomorphism as "x->f(x)" pairs separated by spaces.
std::string render_bijection(const Lattice& lattice, const Lattice& other,
                             const std::vector<Element>& map);

}  // namespace latcon
