#include "latcon/lattice.hpp"

#include <algorithm>
#include <numeric>

#include <boost/dynamic_bitset.hpp>

#include "latcon/error.hpp"

namespace latcon {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NoBounds: return "NoBounds";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::BadParam: return "BadParam";
    case ErrorKind::OverlappingBlocks: return "OverlappingBlocks";
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::NotACongruence: return "NotACongruence";
    case ErrorKind::EmptyGeneratorSet: return "EmptyGeneratorSet";
    case ErrorKind::NotAFilter: return "NotAFilter";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::TrivialSummand: return "TrivialSummand";
    case ErrorKind::NablaSummandCongruence: return "NablaSummandCongruence";
    case ErrorKind::IntervalTooSmall: return "IntervalTooSmall";
    case ErrorKind::SummandTooSmall: return "SummandTooSmall";
    case ErrorKind::TrivialInput: return "TrivialInput";
    case ErrorKind::BadConfig: return "BadConfig";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ArityError: return "ArityError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

std::unordered_map<std::string, Element> index_labels(
    const std::vector<std::string>& labels) {
  std::unordered_map<std::string, Element> index;
  index.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], static_cast<Element>(i)).second) {
      throw Error(ErrorKind::DuplicateLabel, "label '" + labels[i] + "'");
    }
  }
  return index;
}

// Finds the element of `bounds` whose own down-set (resp. up-set) has the
// same size as `bounds`: that element dominates every other bound.
std::optional<Element> extremal(const Bits& bounds,
                                const std::vector<std::size_t>& cone_size) {
  const std::size_t count = bounds.count();
  for (auto i = bounds.find_first(); i != Bits::npos; i = bounds.find_next(i)) {
    if (cone_size[i] == count) return static_cast<Element>(i);
  }
  return std::nullopt;
}

}  // namespace

Lattice Lattice::from_covers(std::vector<std::string> labels,
                             std::span<const LabelPair> covers,
                             std::size_t max_elements) {
  const auto index = index_labels(labels);
  BoolMatrix leq(labels.size());
  for (const auto& [lower, upper] : covers) {
    auto lo = index.find(lower);
    auto hi = index.find(upper);
    if (lo == index.end()) throw Error(ErrorKind::UnknownLabel, "'" + lower + "'");
    if (hi == index.end()) throw Error(ErrorKind::UnknownLabel, "'" + upper + "'");
    if (lo->second == hi->second) {
      throw Error(ErrorKind::CycleDetected, "self-cover on '" + lower + "'");
    }
    leq.set(lo->second, hi->second);
  }
  return from_order(std::move(labels), std::move(leq), max_elements);
}

Lattice Lattice::from_order(std::vector<std::string> labels, BoolMatrix leq,
                            std::size_t max_elements) {
  const std::size_t n = labels.size();
  if (n > max_elements) {
    throw Error(ErrorKind::SizeCapExceeded,
                std::to_string(n) + " elements exceeds the cap of " +
                    std::to_string(max_elements));
  }
  if (n == 0) throw Error(ErrorKind::NoBounds, "empty carrier");
  if (leq.size() != n) {
    throw Error(ErrorKind::BadParam, "order matrix does not match label count");
  }

  Lattice lattice;
  lattice.index_ = index_labels(labels);
  lattice.labels_ = std::move(labels);

  // Reflexive-transitive closure (Warshall over bit rows).
  std::vector<Bits> up(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (leq(i, j)) up[i].set(j);
    }
    up[i].set(i);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (up[i].test(k)) up[i] |= up[k];
    }
  }
  std::vector<Bits> down(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j = up[i].find_first(); j != Bits::npos; j = up[i].find_next(j)) {
      down[j].set(i);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j = up[i].find_next(i); j != Bits::npos; j = up[i].find_next(j)) {
      if (up[j].test(i)) {
        throw Error(ErrorKind::CycleDetected,
                    "'" + lattice.labels_[i] + "' and '" + lattice.labels_[j] +
                        "' lie on a cycle");
      }
    }
  }

  std::optional<Element> bottom;
  std::optional<Element> top;
  for (std::size_t i = 0; i < n; ++i) {
    if (up[i].count() == n) bottom = static_cast<Element>(i);
    if (down[i].count() == n) top = static_cast<Element>(i);
  }
  if (!bottom || !top) {
    throw Error(ErrorKind::NoBounds, !bottom ? "no least element" : "no greatest element");
  }
  lattice.bottom_ = *bottom;
  lattice.top_ = *top;

  std::vector<std::size_t> up_size(n);
  std::vector<std::size_t> down_size(n);
  for (std::size_t i = 0; i < n; ++i) {
    up_size[i] = up[i].count();
    down_size[i] = down[i].count();
  }

  lattice.leq_ = BoolMatrix(n);
  lattice.meet_.assign(n * n, 0);
  lattice.join_.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (up[x].test(y)) lattice.leq_.set(x, y);
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      auto glb = extremal(down[x] & down[y], down_size);
      auto lub = extremal(up[x] & up[y], up_size);
      if (!glb || !lub) {
        throw Error(ErrorKind::NotALattice,
                    "'" + lattice.labels_[x] + "' and '" + lattice.labels_[y] +
                        "' have no " + (!glb ? "greatest lower" : "least upper") +
                        " bound");
      }
      lattice.meet_[x * n + y] = lattice.meet_[y * n + x] = *glb;
      lattice.join_[x * n + y] = lattice.join_[y * n + x] = *lub;
    }
  }

  for (std::size_t x = 0; x < n; ++x) {
    for (auto y = up[x].find_first(); y != Bits::npos; y = up[x].find_next(y)) {
      if (y != x && (up[x] & down[y]).count() == 2) {
        lattice.covers_.emplace_back(static_cast<Element>(x), static_cast<Element>(y));
      }
    }
  }
  return lattice;
}

std::optional<Element> Lattice::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Element Lattice::at(std::string_view label) const {
  auto found = find(label);
  if (!found) throw Error(ErrorKind::UnknownLabel, "'" + std::string(label) + "'");
  return *found;
}

bool Lattice::covered_by(Element x, Element y) const noexcept {
  return std::binary_search(covers_.begin(), covers_.end(), std::pair{x, y});
}

ElementSet Lattice::interval(Element a, Element b) const {
  if (!leq(a, b)) {
    throw Error(ErrorKind::NotComparable,
                "'" + label(a) + "' is not below '" + label(b) + "'");
  }
  ElementSet out;
  for (Element x = 0; x < size(); ++x) {
    if (leq(a, x) && leq(x, b)) out.push_back(x);
  }
  return out;
}

ElementSet Lattice::up_set(Element x) const { return interval(x, top_); }

ElementSet Lattice::down_set(Element x) const { return interval(bottom_, x); }

bool Lattice::is_meet_irreducible(Element x) const noexcept {
  for (Element u = 0; u < size(); ++u) {
    if (u == x) continue;
    for (Element v = u + 1; v < size(); ++v) {
      if (v != x && meet(u, v) == x) return false;
    }
  }
  return true;
}

bool Lattice::is_join_irreducible(Element x) const noexcept {
  for (Element u = 0; u < size(); ++u) {
    if (u == x) continue;
    for (Element v = u + 1; v < size(); ++v) {
      if (v != x && join(u, v) == x) return false;
    }
  }
  return true;
}

bool Lattice::is_distributive() const noexcept {
  const auto n = static_cast<Element>(size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = y + 1; z < n; ++z) {
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) return false;
      }
    }
  }
  return true;
}

Lattice dual(const Lattice& lattice) {
  const std::size_t n = lattice.size();
  BoolMatrix leq(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (lattice.order()(j, i)) leq.set(i, j);
    }
  }
  return Lattice::from_order(lattice.labels(), std::move(leq), n);
}

namespace detail {

Lattice with_corrupted_meet(const Lattice& lattice, Element x, Element y,
                            Element value) {
  Lattice copy = lattice;
  const std::size_t n = copy.size();
  copy.meet_[x * n + y] = value;
  copy.meet_[y * n + x] = value;
  return copy;
}

}  // namespace detail

namespace {

std::string chain_label(std::size_t k, std::size_t i) {
  if (i == 0) return "0";
  if (i + 1 == k) return "1";
  if (k == 3) return "m";
  if (k <= 28) return std::string(1, static_cast<char>('a' + i - 1));
  return "c" + std::to_string(i);
}

Lattice chain(std::size_t k) {
  std::vector<std::string> labels;
  std::vector<LabelPair> covers;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(chain_label(k, i));
    if (i > 0) covers.emplace_back(labels[i - 1], labels[i]);
  }
  return Lattice::from_covers(std::move(labels), covers);
}

Lattice from_cover_list(std::vector<std::string> labels,
                        std::vector<LabelPair> covers) {
  return Lattice::from_covers(std::move(labels), covers);
}

Lattice divisor_lattice(long long n) {
  std::vector<long long> divisors;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divisors.push_back(d);
      if (d * d != n) divisors.push_back(n / d);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  if (divisors.size() > kDefaultMaxElements) {
    throw Error(ErrorKind::SizeCapExceeded,
                "div(" + std::to_string(n) + ") has " +
                    std::to_string(divisors.size()) + " elements");
  }
  std::vector<std::string> labels;
  BoolMatrix leq(divisors.size());
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    labels.push_back(std::to_string(divisors[i]));
    for (std::size_t j = i; j < divisors.size(); ++j) {
      if (divisors[j] % divisors[i] == 0) leq.set(i, j);
    }
  }
  return Lattice::from_order(std::move(labels), std::move(leq));
}

void expect_params(std::string_view name, std::span<const long long> params,
                   std::size_t count) {
  if (params.size() != count) {
    throw Error(ErrorKind::BadParam,
                std::string(name) + " takes " + std::to_string(count) +
                    " parameter(s), got " + std::to_string(params.size()));
  }
}

}  // namespace

Lattice named(std::string_view name, std::span<const long long> params) {
  if (name == "chain") {
    expect_params(name, params, 1);
    if (params[0] < 1 || params[0] > static_cast<long long>(kDefaultMaxElements)) {
      throw Error(ErrorKind::BadParam, "chain length must lie in [1, 500]");
    }
    return chain(static_cast<std::size_t>(params[0]));
  }
  if (name == "div") {
    expect_params(name, params, 1);
    if (params[0] < 1 || params[0] > 1'000'000'000'000LL) {
      throw Error(ErrorKind::BadParam, "div argument must lie in [1, 10^12]");
    }
    return divisor_lattice(params[0]);
  }
  expect_params(name, params, 0);
  if (name == "B2") {
    return from_cover_list({"0", "a", "b", "1"},
                           {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
  }
  if (name == "M3") {
    return from_cover_list({"0", "u", "v", "w", "1"},
                           {{"0", "u"}, {"0", "v"}, {"0", "w"},
                            {"u", "1"}, {"v", "1"}, {"w", "1"}});
  }
  if (name == "N5") {
    return from_cover_list({"0", "x", "y", "z", "1"},
                           {{"0", "x"}, {"x", "1"}, {"0", "y"}, {"y", "z"}, {"z", "1"}});
  }
  if (name == "K") {
    return from_cover_list({"0", "m", "n", "p", "q", "1"},
                           {{"0", "m"}, {"m", "1"}, {"0", "n"}, {"n", "p"},
                            {"0", "q"}, {"q", "p"}, {"p", "1"}});
  }
  throw Error(ErrorKind::UnknownName, "no lattice named '" + std::string(name) + "'");
}

ElementSet carrier(const Lattice& lattice) {
  ElementSet all(lattice.size());
  std::iota(all.begin(), all.end(), Element{0});
  return all;
}

ElementSet complement(const Lattice& lattice, const ElementSet& subset) {
  ElementSet out;
  std::size_t k = 0;
  for (Element x = 0; x < lattice.size(); ++x) {
    if (k < subset.size() && subset[k] == x) {
      ++k;
    } else {
      out.push_back(x);
    }
  }
  return out;
}

std::string render_set(const Lattice& lattice, const ElementSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += ',';
    out += lattice.label(set[i]);
  }
  out += '}';
  return out;
}

}  // namespace latcon
