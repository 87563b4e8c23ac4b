#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latcon/lattice.hpp"

namespace latcon {

struct CorpusEntry {
  /// How the lattice was built, in construction-expression syntax where one
  /// exists (e.g. "hsum(chain(3),B2)").
  std::string name;
  Lattice lattice;
};

/// The named lattices with at most `max_size` elements, followed by `count`
/// pseudo-random lattices of at most `max_size` elements drawn from three
/// families: osum/hsum expression trees over small named lattices, ∪/∩-closed
/// families of subsets of a small set, and products of two small lattices
/// with a new top adjoined. Identical arguments give identical output.
///
/// Throws BadConfig when max_size < 2.
std::vector<CorpusEntry> corpus(std::uint64_t seed, std::size_t count, std::size_t max_size);

/// Every lattice with exactly n elements, one per isomorphism class, for
/// 1 ≤ n ≤ 7. Interior elements are labelled a, b, c, ... Throws BadConfig
/// outside that range.
std::vector<CorpusEntry> all_lattices(std::size_t n);

}  // namespace latcon
