#include "latcon/filters.hpp"

#include <algorithm>

#include "latcon/error.hpp"

namespace latcon {

namespace {

std::vector<bool> membership(const Lattice& lattice, const ElementSet& set) {
  std::vector<bool> in(lattice.size(), false);
  for (Element x : set) in.at(x) = true;
  return in;
}

bool is_proper(const Lattice& lattice, const ElementSet& set) {
  return set.size() < lattice.size();
}

// Closed upward (or downward) and under meet (or join), non-empty.
template <bool Up>
bool is_closed_cone(const Lattice& lattice, const ElementSet& set) {
  if (set.empty()) return false;
  const auto in = membership(lattice, set);
  for (Element x : set) {
    for (Element y = 0; y < lattice.size(); ++y) {
      const bool beyond = Up ? lattice.leq(x, y) : lattice.leq(y, x);
      if (beyond && !in[y]) return false;
    }
    for (Element y : set) {
      if (!in[Up ? lattice.meet(x, y) : lattice.join(x, y)]) return false;
    }
  }
  return true;
}

// x op y ∈ S forces x ∈ S or y ∈ S, where op is join for filters.
template <bool Filter>
bool splits(const Lattice& lattice, const ElementSet& set) {
  const auto in = membership(lattice, set);
  const auto n = static_cast<Element>(lattice.size());
  for (Element x = 0; x < n; ++x) {
    if (in[x]) continue;
    for (Element y = x + 1; y < n; ++y) {
      if (!in[y] && in[Filter ? lattice.join(x, y) : lattice.meet(x, y)]) return false;
    }
  }
  return true;
}

SubsetFamily principal_family(const Lattice& lattice, SubsetKind kind) {
  SubsetFamily family{.kind = kind, .members = {}};
  for (Element x = 0; x < lattice.size(); ++x) {
    SubsetMember member;
    member.generator = x;
    if (kind == SubsetKind::filter) {
      member.elements = lattice.up_set(x);
      member.prime = is_prime_filter(lattice, member.elements);
    } else {
      member.elements = lattice.down_set(x);
      member.prime = is_prime_ideal(lattice, member.elements);
    }
    family.members.push_back(std::move(member));
  }
  return family;
}

SubsetFamily prime_members(SubsetFamily family) {
  std::erase_if(family.members, [](const SubsetMember& m) { return !m.prime; });
  return family;
}

}  // namespace

bool SubsetFamily::contains(const ElementSet& set) const {
  return std::any_of(members.begin(), members.end(),
                     [&](const SubsetMember& m) { return m.elements == set; });
}

ElementSet generated_filter(const Lattice& lattice, std::span<const Element> generators) {
  if (generators.empty()) {
    throw Error(ErrorKind::EmptyGeneratorSet, "a filter needs at least one generator");
  }
  Element m = generators.front();
  for (Element g : generators) m = lattice.meet(m, g);
  return lattice.up_set(m);
}

ElementSet generated_ideal(const Lattice& lattice, std::span<const Element> generators) {
  if (generators.empty()) {
    throw Error(ErrorKind::EmptyGeneratorSet, "an ideal needs at least one generator");
  }
  Element j = generators.front();
  for (Element g : generators) j = lattice.join(j, g);
  return lattice.down_set(j);
}

bool is_filter(const Lattice& lattice, const ElementSet& set) {
  return is_closed_cone<true>(lattice, set);
}

bool is_ideal(const Lattice& lattice, const ElementSet& set) {
  return is_closed_cone<false>(lattice, set);
}

SubsetFamily all_filters(const Lattice& lattice) {
  return principal_family(lattice, SubsetKind::filter);
}

SubsetFamily all_ideals(const Lattice& lattice) {
  return principal_family(lattice, SubsetKind::ideal);
}

bool is_prime_filter(const Lattice& lattice, const ElementSet& filter) {
  if (!is_filter(lattice, filter)) {
    throw Error(ErrorKind::NotAFilter, render_set(lattice, filter));
  }
  return is_proper(lattice, filter) && splits<true>(lattice, filter);
}

bool is_prime_ideal(const Lattice& lattice, const ElementSet& ideal) {
  if (!is_ideal(lattice, ideal)) {
    throw Error(ErrorKind::NotAnIdeal, render_set(lattice, ideal));
  }
  return is_proper(lattice, ideal) && splits<false>(lattice, ideal);
}

bool is_prime_filter_by_complement(const Lattice& lattice, const ElementSet& filter) {
  if (!is_filter(lattice, filter)) {
    throw Error(ErrorKind::NotAFilter, render_set(lattice, filter));
  }
  return is_proper(lattice, filter) && is_ideal(lattice, complement(lattice, filter));
}

bool is_prime_ideal_by_complement(const Lattice& lattice, const ElementSet& ideal) {
  if (!is_ideal(lattice, ideal)) {
    throw Error(ErrorKind::NotAnIdeal, render_set(lattice, ideal));
  }
  return is_proper(lattice, ideal) && is_filter(lattice, complement(lattice, ideal));
}

SubsetFamily spec_filt(const Lattice& lattice) {
  return prime_members(all_filters(lattice));
}

SubsetFamily spec_id(const Lattice& lattice) {
  return prime_members(all_ideals(lattice));
}

Partition prime_filter_congruence(const Lattice& lattice, const ElementSet& prime_filter) {
  if (!is_prime_filter(lattice, prime_filter)) {
    throw Error(ErrorKind::NotPrime, render_set(lattice, prime_filter));
  }
  const ElementSet blocks[] = {prime_filter, complement(lattice, prime_filter)};
  return eq_from_blocks(lattice.size(), blocks);
}

Partition prime_family_congruence(const Lattice& lattice,
                                  std::span<const ElementSet> prime_filters) {
  if (prime_filters.empty()) {
    throw Error(ErrorKind::EmptyFamily, "need at least one prime filter");
  }
  Partition theta = nabla(lattice);
  for (const auto& p : prime_filters) {
    theta = eq_meet(theta, prime_filter_congruence(lattice, p));
  }
  return theta;
}

bool complement_bijection_check(const Lattice& lattice) {
  std::vector<ElementSet> complements;
  for (const auto& p : spec_filt(lattice).members) {
    complements.push_back(complement(lattice, p.elements));
  }
  std::vector<ElementSet> ideals;
  for (const auto& q : spec_id(lattice).members) ideals.push_back(q.elements);
  std::sort(complements.begin(), complements.end());
  std::sort(ideals.begin(), ideals.end());
  return complements == ideals;
}

std::string render_family(const Lattice& lattice, const SubsetFamily& family) {
  std::vector<const SubsetMember*> sorted;
  for (const auto& m : family.members) sorted.push_back(&m);
  auto key = [&](const SubsetMember* m) {
    return m->generator ? lattice.label(*m->generator) : std::string();
  };
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](auto* a, auto* b) { return key(a) < key(b); });
  std::string out;
  for (const auto* m : sorted) {
    out += m->prime ? "P  " : "   ";
    out += key(m);
    out += "  ";
    out += render_set(lattice, m->elements);
    out += '\n';
  }
  return out;
}

}  // namespace latcon
