#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "latcon/lattice.hpp"

namespace latcon {

/// An equivalence relation on {0..n-1}, stored as a block assignment.
///
/// Canonical form: each element maps to the least member of its block, so two
/// partitions are equal exactly when their assignments are identical. A
/// partition knows only its carrier size, not the lattice it lives on.
class Partition {
 public:
  Partition() = default;
  /// The identity partition Δ on n points.
  explicit Partition(std::size_t n);

  /// Canonicalizes an arbitrary labelling: x and y share a block iff
  /// labels[x] == labels[y].
  template <typename Label>
  static Partition from_labelling(std::span<const Label> labels);

  std::size_t size() const noexcept { return block_of_.size(); }
  Element block_of(Element x) const noexcept { return block_of_[x]; }
  const std::vector<Element>& assignment() const noexcept { return block_of_; }
  bool same_block(Element x, Element y) const noexcept {
    return block_of_[x] == block_of_[y];
  }

  std::size_t block_count() const noexcept;
  /// Members of x's block.
  ElementSet block(Element x) const;
  /// All blocks, ordered by least member.
  std::vector<ElementSet> blocks() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<Element> block_of_;
};

template <typename Label>
Partition Partition::from_labelling(std::span<const Label> labels) {
  Partition p(labels.size());
  std::map<Label, Element> first_seen;
  for (std::size_t x = 0; x < labels.size(); ++x) {
    auto [it, inserted] = first_seen.try_emplace(labels[x], static_cast<Element>(x));
    p.block_of_[x] = it->second;
  }
  return p;
}

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

Partition delta(const Lattice& lattice);
Partition nabla(const Lattice& lattice);
Partition nabla(std::size_t n);

/// Partition with exactly the given blocks (by element index); unlisted
/// elements become singletons. Throws OverlappingBlocks, BadParam.
Partition eq_from_blocks(std::size_t n, std::span<const ElementSet> blocks);

/// Same, with blocks given by label. Throws OverlappingBlocks, UnknownLabel.
Partition eq_from_blocks(const Lattice& lattice,
                         std::span<const std::vector<std::string>> blocks);

/// p ⊆ q (p refines q). Throws CarrierMismatch.
bool eq_leq(const Partition& p, const Partition& q);
/// Transitive closure of p ∪ q. Throws CarrierMismatch.
Partition eq_join(const Partition& p, const Partition& q);
/// p ∩ q. Throws CarrierMismatch.
Partition eq_meet(const Partition& p, const Partition& q);

bool is_congruence(const Lattice& lattice, const Partition& p);

/// Partition induced on `subset` (sorted); the result's element i stands for
/// subset[i]. Throws EmptySubset.
Partition restrict(const Partition& p, const ElementSet& subset);

/// Every block is order-convex and closed under meet and join.
bool are_blocks_convex(const Lattice& lattice, const Partition& p);

/// Sorted blocks of labels, e.g. "{0,a}{b,1}". Blocks and members follow
/// element order.
std::string render(const Lattice& lattice, const Partition& p);

/// Union-find over n points; the workhorse behind eq_join and congruence
/// closure.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  Element find(Element x);
  /// Returns true when x and y were in different classes.
  bool unite(Element x, Element y);
  Partition to_partition();

 private:
  std::vector<Element> parent_;
};

}  // namespace latcon
