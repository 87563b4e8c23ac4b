#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace latcon {

/// Dense index of a lattice element, 0..size()-1.
using Element = std::uint32_t;

/// A set of elements, kept sorted ascending and free of duplicates.
using ElementSet = std::vector<Element>;

using LabelPair = std::pair<std::string, std::string>;

/// Square boolean matrix, row-major.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  explicit BoolMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * n_ + j] != 0;
  }
  void set(std::size_t i, std::size_t j, bool value = true) noexcept {
    data_[i * n_ + j] = value ? 1 : 0;
  }

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> data_;
};

inline constexpr std::size_t kDefaultMaxElements = 500;

class Lattice;

namespace detail {
// Returns a copy of `lattice` whose meet table claims x ∧ y = value (and
// y ∧ x = value). Bypasses validation; only the fault-injection mode of the
// verification harness uses it.
Lattice with_corrupted_meet(const Lattice& lattice, Element x, Element y,
                            Element value);
}  // namespace detail

/// A finite bounded lattice, validated eagerly at construction.
///
/// Elements are dense indices; labels are carried for I/O and provenance.
/// The order is stored as a full matrix and meet/join as n×n tables, so all
/// queries are O(1) lookups. Values are immutable once built.
class Lattice {
 public:
  /// Builds the lattice whose order is the reflexive-transitive closure of
  /// `covers` (pairs (lower, upper) of labels).
  ///
  /// Throws DuplicateLabel, UnknownLabel, CycleDetected, NoBounds,
  /// NotALattice or SizeCapExceeded.
  static Lattice from_covers(std::vector<std::string> labels,
                             std::span<const LabelPair> covers,
                             std::size_t max_elements = kDefaultMaxElements);

  /// Builds a lattice from a complete order relation. `leq` must already be
  /// reflexive and transitive; antisymmetry and the lattice property are
  /// checked here.
  static Lattice from_order(std::vector<std::string> labels, BoolMatrix leq,
                            std::size_t max_elements = kDefaultMaxElements);

  std::size_t size() const noexcept { return labels_.size(); }
  bool is_trivial() const noexcept { return size() == 1; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Element x) const { return labels_.at(x); }
  std::optional<Element> find(std::string_view label) const;
  /// Like find(), but throws UnknownLabel.
  Element at(std::string_view label) const;

  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }

  bool leq(Element x, Element y) const noexcept { return leq_(x, y); }
  bool less(Element x, Element y) const noexcept { return x != y && leq_(x, y); }
  bool comparable(Element x, Element y) const noexcept {
    return leq_(x, y) || leq_(y, x);
  }
  Element meet(Element x, Element y) const noexcept { return meet_[x * size() + y]; }
  Element join(Element x, Element y) const noexcept { return join_[x * size() + y]; }

  const BoolMatrix& order() const noexcept { return leq_; }

  /// x ≺ y.
  bool covered_by(Element x, Element y) const noexcept;
  /// All cover pairs (lower, upper), sorted by (lower, upper).
  const std::vector<std::pair<Element, Element>>& covers() const noexcept {
    return covers_;
  }

  /// [a, b]; throws NotComparable unless a ≤ b.
  ElementSet interval(Element a, Element b) const;
  /// [x)
  ElementSet up_set(Element x) const;
  /// (x]
  ElementSet down_set(Element x) const;

  bool is_meet_irreducible(Element x) const noexcept;
  bool is_join_irreducible(Element x) const noexcept;
  bool is_distributive() const noexcept;

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  Lattice() = default;
  friend Lattice detail::with_corrupted_meet(const Lattice&, Element, Element,
                                             Element);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Element> index_;
  BoolMatrix leq_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  Element bottom_ = 0;
  Element top_ = 0;
  std::vector<std::pair<Element, Element>> covers_;
};

/// The order dual: same labels, reversed order, meet and join swapped.
Lattice dual(const Lattice& lattice);

/// Canonical lattices: "chain" (k ≥ 1), "B2", "M3", "N5", "K" and "div" (n ≥ 1).
///
/// Labels follow the usual figures: chain(3) = {0,m,1}, chain(4) = {0,a,b,1},
/// B2 = {0,a,b,1}, M3 = {0,u,v,w,1}, N5 = {0,x,y,z,1} with 0≺x≺1 and
/// 0≺y≺z≺1, K = {0,m,n,p,q,1} with 0≺m≺1, 0≺n≺p≺1, 0≺q≺p. div(n) is the set
/// of divisors of n under divisibility, labelled in decimal.
///
/// Throws UnknownName or BadParam.
Lattice named(std::string_view name, std::span<const long long> params = {});

/// Every element index of `lattice`, ascending.
ElementSet carrier(const Lattice& lattice);

/// L ∖ S for a sorted set S.
ElementSet complement(const Lattice& lattice, const ElementSet& subset);

/// Labels of `set` joined as "{a,b,c}" in element order.
std::string render_set(const Lattice& lattice, const ElementSet& set);

}  // namespace latcon
