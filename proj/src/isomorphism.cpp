#include "latcon/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace latcon {

namespace {

using Fingerprint = std::array<std::size_t, 4>;

// Elements ordered so that everything below x comes before x.
std::vector<Element> linear_extension(const Lattice& lattice) {
  std::vector<Element> order(lattice.size());
  std::iota(order.begin(), order.end(), Element{0});
  std::vector<std::size_t> below(lattice.size(), 0);
  for (Element x = 0; x < lattice.size(); ++x) {
    for (Element y = 0; y < lattice.size(); ++y) below[x] += lattice.leq(y, x) ? 1 : 0;
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return below[a] < below[b]; });
  return order;
}

std::vector<Fingerprint> fingerprints(const Lattice& lattice) {
  const std::size_t n = lattice.size();
  std::vector<Fingerprint> out(n, Fingerprint{0, 0, 0, 0});
  for (const auto& [lo, hi] : lattice.covers()) {
    ++out[lo][2];
    ++out[hi][3];
  }
  const auto order = linear_extension(lattice);
  // Longest chain from the bottom (height) and to the top (depth).
  for (Element x : order) {
    for (const auto& [lo, hi] : lattice.covers()) {
      if (hi == x) out[x][0] = std::max(out[x][0], out[lo][0] + 1);
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (const auto& [lo, hi] : lattice.covers()) {
      if (lo == *it) out[*it][1] = std::max(out[*it][1], out[hi][1] + 1);
    }
  }
  return out;
}

class Matcher {
 public:
  Matcher(const Lattice& from, const Lattice& to)
      : from_(from), to_(to), order_(linear_extension(from)),
        from_prints_(fingerprints(from)), to_prints_(fingerprints(to)),
        image_(from.size(), kUnset), used_(to.size(), false) {}

  bool fingerprints_agree() const {
    auto a = from_prints_;
    auto b = to_prints_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Element x = order_[depth];
    for (Element y = 0; y < to_.size(); ++y) {
      if (used_[y] || to_prints_[y] != from_prints_[x] || !consistent(depth, x, y)) continue;
      image_[x] = y;
      used_[y] = true;
      if (extend(depth + 1)) return true;
      used_[y] = false;
      image_[x] = kUnset;
    }
    return false;
  }

  std::vector<Element> image() const { return image_; }

 private:
  static constexpr Element kUnset = static_cast<Element>(-1);

  bool consistent(std::size_t depth, Element x, Element y) const {
    for (std::size_t k = 0; k < depth; ++k) {
      const Element u = order_[k];
      const Element v = image_[u];
      if (from_.leq(u, x) != to_.leq(v, y) || from_.leq(x, u) != to_.leq(y, v)) return false;
    }
    return true;
  }

  const Lattice& from_;
  const Lattice& to_;
  std::vector<Element> order_;
  std::vector<Fingerprint> from_prints_;
  std::vector<Fingerprint> to_prints_;
  std::vector<Element> image_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Element>> isomorphic(const Lattice& lattice, const Lattice& other) {
  if (lattice.size() != other.size() || lattice.covers().size() != other.covers().size()) {
    return std::nullopt;
  }
  Matcher matcher(lattice, other);
  if (!matcher.fingerprints_agree() || !matcher.extend(0)) return std::nullopt;
  return matcher.image();
}

std::string render_bijection(const Lattice& lattice, const Lattice& other,
                             const std::vector<Element>& map) {
  std::string out;
  for (Element x = 0; x < map.size(); ++x) {
    if (x > 0) out += ' ';
    out += lattice.label(x) + "->" + other.label(map[x]);
  }
  return out;
}

}  // namespace latcon
