#include "latcon/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "latcon/error.hpp"

namespace latcon {

Partition::Partition(std::size_t n) : block_of_(n) {
  std::iota(block_of_.begin(), block_of_.end(), Element{0});
}

std::size_t Partition::block_count() const noexcept {
  std::size_t count = 0;
  for (std::size_t x = 0; x < block_of_.size(); ++x) {
    if (block_of_[x] == x) ++count;
  }
  return count;
}

ElementSet Partition::block(Element x) const {
  ElementSet out;
  for (Element y = 0; y < size(); ++y) {
    if (block_of_[y] == block_of_[x]) out.push_back(y);
  }
  return out;
}

std::vector<ElementSet> Partition::blocks() const {
  std::vector<ElementSet> out;
  std::vector<std::size_t> slot(size());
  for (Element x = 0; x < size(); ++x) {
    if (block_of_[x] == x) {
      slot[x] = out.size();
      out.push_back({x});
    } else {
      out[slot[block_of_[x]]].push_back(x);
    }
  }
  return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = p.size();
  for (Element b : p.assignment()) {
    h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

UnionFind::UnionFind(std::size_t n) : parent_(n) {
  std::iota(parent_.begin(), parent_.end(), Element{0});
}

Element UnionFind::find(Element x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(Element x, Element y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  // The smaller root wins so that roots are already canonical block ids.
  if (y < x) std::swap(x, y);
  parent_[y] = x;
  return true;
}

Partition UnionFind::to_partition() {
  std::vector<Element> roots(parent_.size());
  for (Element x = 0; x < parent_.size(); ++x) roots[x] = find(x);
  return Partition::from_labelling(std::span<const Element>(roots));
}

Partition delta(const Lattice& lattice) { return Partition(lattice.size()); }

Partition nabla(std::size_t n) {
  std::vector<Element> zeros(n, 0);
  return Partition::from_labelling(std::span<const Element>(zeros));
}

Partition nabla(const Lattice& lattice) { return nabla(lattice.size()); }

Partition eq_from_blocks(std::size_t n, std::span<const ElementSet> blocks) {
  std::vector<bool> seen(n, false);
  UnionFind uf(n);
  for (const auto& block : blocks) {
    for (Element x : block) {
      if (x >= n) throw Error(ErrorKind::BadParam, "element index out of range");
      if (seen[x]) {
        throw Error(ErrorKind::OverlappingBlocks,
                    "element " + std::to_string(x) + " listed twice");
      }
      seen[x] = true;
      uf.unite(block.front(), x);
    }
  }
  return uf.to_partition();
}

Partition eq_from_blocks(const Lattice& lattice,
                         std::span<const std::vector<std::string>> blocks) {
  std::vector<ElementSet> indexed;
  for (const auto& block : blocks) {
    ElementSet members;
    for (const auto& label : block) members.push_back(lattice.at(label));
    indexed.push_back(std::move(members));
  }
  try {
    return eq_from_blocks(lattice.size(), indexed);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::OverlappingBlocks) throw;
    throw Error(ErrorKind::OverlappingBlocks, "a label appears in two blocks");
  }
}

namespace {

void require_same_carrier(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorKind::CarrierMismatch,
                std::to_string(p.size()) + " vs " + std::to_string(q.size()));
  }
}

}  // namespace

bool eq_leq(const Partition& p, const Partition& q) {
  require_same_carrier(p, q);
  for (Element x = 0; x < p.size(); ++x) {
    if (!q.same_block(x, p.block_of(x))) return false;
  }
  return true;
}

Partition eq_join(const Partition& p, const Partition& q) {
  require_same_carrier(p, q);
  UnionFind uf(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    uf.unite(x, p.block_of(x));
    uf.unite(x, q.block_of(x));
  }
  return uf.to_partition();
}

Partition eq_meet(const Partition& p, const Partition& q) {
  require_same_carrier(p, q);
  std::vector<std::pair<Element, Element>> key(p.size());
  for (Element x = 0; x < p.size(); ++x) key[x] = {p.block_of(x), q.block_of(x)};
  return Partition::from_labelling(std::span<const std::pair<Element, Element>>(key));
}

bool is_congruence(const Lattice& lattice, const Partition& p) {
  if (p.size() != lattice.size()) {
    throw Error(ErrorKind::CarrierMismatch, "partition does not match lattice");
  }
  // Checking each element against its block representative suffices: the
  // relation is the transitive closure of those pairs.
  const auto n = static_cast<Element>(lattice.size());
  for (Element x = 0; x < n; ++x) {
    const Element rep = p.block_of(x);
    if (rep == x) continue;
    for (Element z = 0; z < n; ++z) {
      if (!p.same_block(lattice.meet(x, z), lattice.meet(rep, z))) return false;
      if (!p.same_block(lattice.join(x, z), lattice.join(rep, z))) return false;
    }
  }
  return true;
}

Partition restrict(const Partition& p, const ElementSet& subset) {
  if (subset.empty()) throw Error(ErrorKind::EmptySubset, "cannot restrict to {}");
  std::vector<Element> labels;
  labels.reserve(subset.size());
  for (Element x : subset) labels.push_back(p.block_of(x));
  return Partition::from_labelling(std::span<const Element>(labels));
}

bool are_blocks_convex(const Lattice& lattice, const Partition& p) {
  const auto n = static_cast<Element>(lattice.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (x == y || !p.same_block(x, y)) continue;
      if (!p.same_block(x, lattice.meet(x, y)) || !p.same_block(x, lattice.join(x, y))) {
        return false;
      }
      if (!lattice.leq(x, y)) continue;
      for (Element z = 0; z < n; ++z) {
        if (lattice.leq(x, z) && lattice.leq(z, y) && !p.same_block(x, z)) return false;
      }
    }
  }
  return true;
}

std::string render(const Lattice& lattice, const Partition& p) {
  std::string out;
  for (const auto& block : p.blocks()) out += render_set(lattice, block);
  return out;
}

}  // namespace latcon
