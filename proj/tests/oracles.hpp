#pragma once

// Brute-force reference implementations. They share nothing with the library
// beyond the Lattice tables and plain containers.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "latcon/lattice.hpp"

namespace oracle {

using latcon::Element;
using latcon::Lattice;

/// A partition as a restricted growth string: block ids in order of first
/// appearance.
using Rgs = std::vector<std::uint8_t>;

template <typename Labels>
Rgs normalize(const Labels& labels) {
  Rgs out;
  int next = 0;
  std::vector<std::pair<std::size_t, int>> map;
  for (std::size_t label : labels) {
    auto it = std::find_if(map.begin(), map.end(), [&](auto& p) { return p.first == label; });
    if (it == map.end()) {
      map.emplace_back(label, next);
      out.push_back(static_cast<std::uint8_t>(next++));
    } else {
      out.push_back(static_cast<std::uint8_t>(it->second));
    }
  }
  return out;
}

inline bool compatible(const Lattice& l, const Rgs& p) {
  const auto n = static_cast<Element>(l.size());
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (p[a] != p[b]) continue;
      for (Element z = 0; z < n; ++z) {
        if (p[l.meet(a, z)] != p[l.meet(b, z)] || p[l.join(a, z)] != p[l.join(b, z)]) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Every partition of the carrier that is compatible with meet and join.
/// Enumerates all Bell(n) partitions, so only sensible for n ≤ 8.
inline std::set<Rgs> congruences(const Lattice& l) {
  const std::size_t n = l.size();
  std::set<Rgs> out;
  Rgs p(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint8_t max_block) -> void {
    if (i == n) {
      if (compatible(l, p)) out.insert(p);
      return;
    }
    for (std::uint8_t b = 0; b <= max_block + 1 && b <= i; ++b) {
      p[i] = b;
      self(self, i + 1, std::max<std::uint8_t>(max_block, b));
    }
  };
  if (n == 0) return out;
  p[0] = 0;
  rec(rec, 1, 0);
  return out;
}

/// Every nonempty subset closed upward and under meet, as sorted element
/// lists. Scans all 2^n subsets, n ≤ 15.
inline std::set<std::vector<Element>> filters(const Lattice& l) {
  const auto n = static_cast<Element>(l.size());
  std::set<std::vector<Element>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    auto in = [&](Element x) { return ((mask >> x) & 1u) != 0; };
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) {
      if (!in(x)) continue;
      for (Element y = 0; y < n && ok; ++y) {
        if (l.leq(x, y) && !in(y)) ok = false;
        if (in(y) && !in(l.meet(x, y))) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<Element> set;
    for (Element x = 0; x < n; ++x) {
      if (in(x)) set.push_back(x);
    }
    out.insert(set);
  }
  return out;
}

/// Order isomorphism by trying every permutation; n ≤ 8.
inline bool isomorphic(const Lattice& a, const Lattice& b) {
  if (a.size() != b.size()) return false;
  std::vector<Element> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Element x = 0; x < a.size() && ok; ++x) {
      for (Element y = 0; y < a.size() && ok; ++y) {
        ok = a.leq(x, y) == b.leq(perm[x], perm[y]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracle
