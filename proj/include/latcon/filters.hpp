#pragma once

#include <optional>
#include <span>
#include <vector>

#include "latcon/lattice.hpp"
#include "latcon/partition.hpp"

namespace latcon {

enum class SubsetKind { filter, ideal };

struct SubsetMember {
  ElementSet elements;
  std::optional<Element> generator;
  bool prime = false;
};

/// A family of filters or ideals of one lattice, with generator and primality
/// recorded per member.
struct SubsetFamily {
  SubsetKind kind = SubsetKind::filter;
  std::vector<SubsetMember> members;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(const ElementSet& set) const;
};

/// [U): for finite lattices this is [⋀U). Throws EmptyGeneratorSet.
ElementSet generated_filter(const Lattice& lattice, std::span<const Element> generators);
/// (U] = (⋁U]. Throws EmptyGeneratorSet.
ElementSet generated_ideal(const Lattice& lattice, std::span<const Element> generators);

bool is_filter(const Lattice& lattice, const ElementSet& set);
bool is_ideal(const Lattice& lattice, const ElementSet& set);

/// {[x) : x ∈ L}, one member per element in element order.
SubsetFamily all_filters(const Lattice& lattice);
/// {(x] : x ∈ L}, one member per element in element order.
SubsetFamily all_ideals(const Lattice& lattice);

/// Proper, and x ∨ y ∈ F forces x ∈ F or y ∈ F. Throws NotAFilter.
bool is_prime_filter(const Lattice& lattice, const ElementSet& filter);
/// Proper, and x ∧ y ∈ I forces x ∈ I or y ∈ I. Throws NotAnIdeal.
bool is_prime_ideal(const Lattice& lattice, const ElementSet& ideal);

/// Primality of a filter decided through its complement: F is prime iff it is
/// proper and L ∖ F is an ideal. Throws NotAFilter.
bool is_prime_filter_by_complement(const Lattice& lattice, const ElementSet& filter);
bool is_prime_ideal_by_complement(const Lattice& lattice, const ElementSet& ideal);

SubsetFamily spec_filt(const Lattice& lattice);
SubsetFamily spec_id(const Lattice& lattice);

/// eq(P, L ∖ P). Throws NotAFilter, NotPrime.
Partition prime_filter_congruence(const Lattice& lattice, const ElementSet& prime_filter);

/// ⋂ eq(Pᵢ, L ∖ Pᵢ). Throws EmptyFamily, NotAFilter, NotPrime.
Partition prime_family_congruence(const Lattice& lattice,
                                  std::span<const ElementSet> prime_filters);

/// {L ∖ P : P ∈ Spec_Filt(L)} = Spec_Id(L).
bool complement_bijection_check(const Lattice& lattice);

/// One member per line, sorted by generator label, "P" marking primes:
///   "P  x  {x,1}".
std::string render_family(const Lattice& lattice, const SubsetFamily& family);

}  // namespace latcon
