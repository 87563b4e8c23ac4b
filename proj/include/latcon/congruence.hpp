#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "latcon/lattice.hpp"
#include "latcon/partition.hpp"

namespace latcon {

/// Limits for congruence-lattice enumeration. Exceeding either is a
/// SizeCapExceeded error, never a silent truncation.
struct ConOptions {
  std::size_t max_elements = 60;
  std::size_t max_members = 1u << 16;
};

/// Cg(a, b): the least congruence identifying a and b.
Partition principal_congruence(const Lattice& lattice, Element a, Element b);

/// The least congruence containing every pair.
Partition congruence_generated(const Lattice& lattice,
                               std::span<const std::pair<Element, Element>> pairs);

/// Con(L) as an explicit finite lattice of partitions.
///
/// Members are sorted by (number of blocks descending, block assignment
/// ascending), so Δ comes first and ∇ last.
class ConLattice {
 public:
  ConLattice(Lattice base, std::vector<Partition> members);

  const Lattice& base() const noexcept { return base_; }
  const std::vector<Partition>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  const Partition& operator[](std::size_t i) const { return members_.at(i); }

  /// Refinement between members i and j.
  bool leq(std::size_t i, std::size_t j) const noexcept { return order_(i, j); }
  const BoolMatrix& order() const noexcept { return order_; }
  std::size_t delta_index() const noexcept { return delta_ix_; }
  std::size_t nabla_index() const noexcept { return nabla_ix_; }

  std::optional<std::size_t> index_of(const Partition& p) const;
  bool contains(const Partition& p) const { return index_of(p).has_value(); }

  /// Members covering Δ.
  std::vector<std::size_t> atoms() const;
  /// Members covered by ∇.
  std::vector<std::size_t> coatoms() const;

  /// Con₀₁(L): members whose bottom and top classes are singletons.
  std::vector<Partition> con01() const;
  /// The largest member of Con₀₁(L).
  Partition mu_con01() const;
  std::vector<Partition> maximal() const;
  /// θ ≠ ∇ such that φ ∧ ψ ≤ θ forces φ ≤ θ or ψ ≤ θ, over all members.
  std::vector<Partition> prime() const;
  std::vector<Partition> two_class() const;
  bool is_simple() const noexcept;
  /// Least congruence strictly above Δ, when one exists.
  std::optional<Partition> monolith() const;

  /// Con(L) itself as a Lattice, labelled by block notation.
  Lattice as_lattice() const;
  /// The sub-order on the given member indices as a Lattice. Throws
  /// NotALattice when that order is not a lattice.
  Lattice suborder_lattice(std::span<const std::size_t> indices) const;

 private:
  Lattice base_;
  std::vector<Partition> members_;
  BoolMatrix order_;
  std::size_t delta_ix_ = 0;
  std::size_t nabla_ix_ = 0;
};

/// Join-closure of the principal congruences. Throws SizeCapExceeded.
ConLattice all_congruences(const Lattice& lattice, const ConOptions& options = {});

std::vector<Partition> con01(const Lattice& lattice, const ConOptions& options = {});
Partition mu_con01(const Lattice& lattice, const ConOptions& options = {});
std::vector<Partition> maximal_congruences(const Lattice& lattice,
                                           const ConOptions& options = {});
std::vector<Partition> prime_congruences(const Lattice& lattice,
                                         const ConOptions& options = {});
std::vector<Partition> two_class_congruences(const Lattice& lattice,
                                             const ConOptions& options = {});
bool is_simple(const Lattice& lattice, const ConOptions& options = {});
bool is_subdirectly_irreducible(const Lattice& lattice, const ConOptions& options = {});
std::optional<Partition> monolith(const Lattice& lattice, const ConOptions& options = {});

struct Quotient {
  Lattice lattice;
  /// projection[x] = the quotient element holding x.
  std::vector<Element> projection;
};

/// L/θ. Blocks are labelled by their members ("y" for a singleton, "{y,z}"
/// otherwise). Throws NotACongruence.
Quotient quotient(const Lattice& lattice, const Partition& theta);

}  // namespace latcon
