#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <json.hpp>

#include "latcon/lattice.hpp"
#include "latcon/partition.hpp"

namespace latcon {

struct Origin {
  std::size_t summand;
  Element element;

  friend bool operator==(const Origin&, const Origin&) = default;
};

/// Where each element of a composite lattice came from.
struct SumProvenance {
  /// origins[r]: every (summand, element) glued into result element r. Glue
  /// points list one origin per summand sharing them.
  std::vector<std::vector<Origin>> origins;
  /// embeddings[i][x]: the result element standing for element x of summand i.
  std::vector<std::vector<Element>> embeddings;
};

/// Serialized as {"<result label>": [[summand, "<summand label>"], ...]}.
nlohmann::json provenance_to_json(const Lattice& result, const SumProvenance& provenance,
                                  std::span<const Lattice> summands);

struct Construction {
  Lattice lattice;
  SumProvenance provenance;
};

/// L ⊕ M: the top of L glued to the bottom of M.
///
/// Labels: "0" for the bottom, "1" for the top, "0.x" for the other elements
/// of L (the glue point keeps L's label) and "1.y" for those of M.
Construction ordinal_sum(const Lattice& lower, const Lattice& upper);

/// ⊞ Aᵢ: all bottoms glued, all tops glued, interiors pairwise incomparable.
///
/// Two-element summands are absorbed. Labels: "0", "1" for the glue points and
/// "i.x" for element x of summand i (i = position in `family`). Throws
/// EmptyFamily, TrivialSummand.
Construction horizontal_sum(std::span<const Lattice> family);

/// ⊞ αᵢ on ⊞ Aᵢ: the interior classes of each αᵢ, plus the union of the
/// bottom classes, plus the union of the top classes. Throws BadParam,
/// CarrierMismatch, NablaSummandCongruence.
Partition hsum_congruences(std::span<const Lattice> family,
                           std::span<const Partition> congruences);

/// An interval [low, high] with at least three elements.
struct FatInterval {
  Element low;
  Element high;

  friend bool operator==(const FatInterval&, const FatInterval&) = default;
  friend auto operator<=>(const FatInterval&, const FatInterval&) = default;
};

/// All pairs a < b with a not covered by b, sorted by (a, b).
std::vector<FatInterval> fat_intervals(const Lattice& lattice);

/// L with [a, b] replaced by [a, b] ⊞ M. L keeps its labels; the interior
/// element y of M becomes "[a,b].y". Throws IntervalTooSmall, SummandTooSmall.
Construction interval_hsum(const Lattice& lattice, Element a, Element b,
                           const Lattice& inserted);

/// D(L): every fat interval [a, b] replaced by [a, b] ⊞ B2, adding the
/// incomparable pair "l[a,b]", "r[a,b]". Throws TrivialInput.
Construction dilate(const Lattice& lattice);

/// A × B with the componentwise order; labels "(x,y)".
Lattice product(const Lattice& a, const Lattice& b);

/// L with a new greatest element "T" (primed until unique) above everything.
Lattice adjoin_top(const Lattice& lattice);

}  // namespace latcon
