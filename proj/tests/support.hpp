#pragma once

#include <algorithm>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "latcon/constructions.hpp"
#include "latcon/lattice.hpp"
#include "latcon/partition.hpp"

namespace support {

using namespace latcon;

inline Lattice chain(long long k) {
  const long long p[] = {k};
  return named("chain", p);
}

inline Lattice div(long long n) {
  const long long p[] = {n};
  return named("div", p);
}

inline Lattice hsum(std::initializer_list<Lattice> family) {
  const std::vector<Lattice> v(family);
  return horizontal_sum(v).lattice;
}

inline Lattice osum(const Lattice& a, const Lattice& b) { return ordinal_sum(a, b).lattice; }

inline Partition eq(const Lattice& l, std::vector<std::vector<std::string>> blocks) {
  return eq_from_blocks(l, blocks);
}

inline ElementSet set(const Lattice& l, std::initializer_list<const char*> labels) {
  ElementSet out;
  for (const char* s : labels) out.push_back(l.at(s));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::set<Partition> as_set(const std::vector<Partition>& v) { return {v.begin(), v.end()}; }

}  // namespace support
