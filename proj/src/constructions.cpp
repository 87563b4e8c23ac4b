#include "latcon/constructions.hpp"

#include <algorithm>

#include "latcon/error.hpp"

namespace latcon {

nlohmann::json provenance_to_json(const Lattice& result, const SumProvenance& provenance,
                                  std::span<const Lattice> summands) {
  nlohmann::json out = nlohmann::json::object();
  for (Element r = 0; r < result.size(); ++r) {
    auto& entry = out[result.label(r)] = nlohmann::json::array();
    for (const auto& origin : provenance.origins.at(r)) {
      entry.push_back({origin.summand, summands[origin.summand].label(origin.element)});
    }
  }
  return out;
}

namespace {

// Accumulates the carrier and order of a composite lattice whose elements
// are glued from the elements of several summands.
class GlueBuilder {
 public:
  explicit GlueBuilder(std::size_t summands) { provenance_.embeddings.resize(summands); }

  Element add(std::string label) {
    labels_.push_back(std::move(label));
    provenance_.origins.emplace_back();
    return static_cast<Element>(labels_.size() - 1);
  }

  void map(std::size_t summand, Element x, Element result) {
    auto& embedding = provenance_.embeddings[summand];
    if (embedding.size() <= x) embedding.resize(x + 1, 0);
    embedding[x] = result;
    provenance_.origins[result].push_back({summand, x});
  }

  Construction finish(const std::vector<std::pair<Element, Element>>& relation) {
    BoolMatrix leq(labels_.size());
    for (const auto& [x, y] : relation) leq.set(x, y);
    return {Lattice::from_order(std::move(labels_), std::move(leq)),
            std::move(provenance_)};
  }

  const SumProvenance& provenance() const { return provenance_; }

 private:
  std::vector<std::string> labels_;
  SumProvenance provenance_;
};

void add_order(const Lattice& summand, const std::vector<Element>& embedding,
               std::vector<std::pair<Element, Element>>& relation) {
  for (Element x = 0; x < summand.size(); ++x) {
    for (Element y = 0; y < summand.size(); ++y) {
      if (summand.leq(x, y)) relation.emplace_back(embedding[x], embedding[y]);
    }
  }
}

}  // namespace

Construction ordinal_sum(const Lattice& lower, const Lattice& upper) {
  GlueBuilder builder(2);
  for (Element x = 0; x < lower.size(); ++x) {
    const Element r = builder.add(x == lower.bottom() ? "0" : "0." + lower.label(x));
    builder.map(0, x, r);
  }
  for (Element y = 0; y < upper.size(); ++y) {
    if (y == upper.bottom()) {
      builder.map(1, y, builder.provenance().embeddings[0][lower.top()]);
      continue;
    }
    builder.map(1, y, builder.add(y == upper.top() ? "1" : "1." + upper.label(y)));
  }
  std::vector<std::pair<Element, Element>> relation;
  add_order(lower, builder.provenance().embeddings[0], relation);
  add_order(upper, builder.provenance().embeddings[1], relation);
  return builder.finish(relation);
}

Construction horizontal_sum(std::span<const Lattice> family) {
  if (family.empty()) throw Error(ErrorKind::EmptyFamily, "horizontal sum of no lattices");
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].is_trivial()) {
      throw Error(ErrorKind::TrivialSummand, "summand " + std::to_string(i) + " is trivial");
    }
  }
  GlueBuilder builder(family.size());
  const Element bottom = builder.add("0");
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& summand = family[i];
    for (Element x = 0; x < summand.size(); ++x) {
      if (x == summand.bottom()) {
        builder.map(i, x, bottom);
      } else if (x != summand.top()) {
        builder.map(i, x, builder.add(std::to_string(i) + "." + summand.label(x)));
      }
    }
  }
  const Element top = builder.add("1");
  for (std::size_t i = 0; i < family.size(); ++i) builder.map(i, family[i].top(), top);
  std::vector<std::pair<Element, Element>> relation{{bottom, top}};
  for (std::size_t i = 0; i < family.size(); ++i) {
    add_order(family[i], builder.provenance().embeddings[i], relation);
  }
  return builder.finish(relation);
}

Partition hsum_congruences(std::span<const Lattice> family,
                           std::span<const Partition> congruences) {
  if (family.size() != congruences.size()) {
    throw Error(ErrorKind::BadParam, "one congruence per summand is required");
  }
  const Construction sum = horizontal_sum(family);
  UnionFind uf(sum.lattice.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& alpha = congruences[i];
    const auto& summand = family[i];
    if (alpha.size() != summand.size()) {
      throw Error(ErrorKind::CarrierMismatch, "congruence " + std::to_string(i));
    }
    if (alpha.same_block(summand.bottom(), summand.top())) {
      throw Error(ErrorKind::NablaSummandCongruence,
                  "congruence " + std::to_string(i) + " is ∇");
    }
    const auto& embedding = sum.provenance.embeddings[i];
    for (Element x = 0; x < summand.size(); ++x) {
      uf.unite(embedding[x], embedding[alpha.block_of(x)]);
    }
  }
  return uf.to_partition();
}

std::vector<FatInterval> fat_intervals(const Lattice& lattice) {
  std::vector<FatInterval> out;
  for (Element a = 0; a < lattice.size(); ++a) {
    for (Element b = 0; b < lattice.size(); ++b) {
      if (lattice.less(a, b) && !lattice.covered_by(a, b)) out.push_back({a, b});
    }
  }
  return out;
}

Construction interval_hsum(const Lattice& lattice, Element a, Element b,
                           const Lattice& inserted) {
  if (!lattice.less(a, b) || lattice.interval(a, b).size() <= 2) {
    throw Error(ErrorKind::IntervalTooSmall,
                "[" + lattice.label(a) + "," + lattice.label(b) + "] has fewer than 3 elements");
  }
  if (inserted.size() <= 2) {
    throw Error(ErrorKind::SummandTooSmall, "inserted lattice needs more than 2 elements");
  }
  GlueBuilder builder(2);
  for (Element x = 0; x < lattice.size(); ++x) builder.map(0, x, builder.add(lattice.label(x)));
  const std::string prefix = "[" + lattice.label(a) + "," + lattice.label(b) + "].";
  std::vector<Element> interior;
  for (Element y = 0; y < inserted.size(); ++y) {
    if (y == inserted.bottom()) {
      builder.map(1, y, a);
    } else if (y == inserted.top()) {
      builder.map(1, y, b);
    } else {
      const Element r = builder.add(prefix + inserted.label(y));
      builder.map(1, y, r);
      interior.push_back(r);
    }
  }
  std::vector<std::pair<Element, Element>> relation;
  add_order(lattice, builder.provenance().embeddings[0], relation);
  add_order(inserted, builder.provenance().embeddings[1], relation);
  for (Element u : interior) {
    for (Element x = 0; x < lattice.size(); ++x) {
      if (lattice.leq(x, a)) relation.emplace_back(x, u);
      if (lattice.leq(b, x)) relation.emplace_back(u, x);
    }
  }
  return builder.finish(relation);
}

Construction dilate(const Lattice& lattice) {
  if (lattice.is_trivial()) throw Error(ErrorKind::TrivialInput, "D(L) needs |L| > 1");
  const auto fat = fat_intervals(lattice);
  const auto n = static_cast<Element>(lattice.size());

  GlueBuilder builder(1);
  for (Element x = 0; x < n; ++x) builder.map(0, x, builder.add(lattice.label(x)));
  for (const auto& [a, b] : fat) {
    const std::string span = "[" + lattice.label(a) + "," + lattice.label(b) + "]";
    builder.add("l" + span);
    builder.add("r" + span);
  }

  std::vector<std::pair<Element, Element>> relation;
  add_order(lattice, builder.provenance().embeddings[0], relation);
  for (std::size_t k = 0; k < fat.size(); ++k) {
    const auto [a, b] = fat[k];
    for (Element side = 0; side < 2; ++side) {
      const Element m = n + static_cast<Element>(2 * k) + side;
      relation.emplace_back(m, m);
      for (Element x = 0; x < n; ++x) {
        if (lattice.leq(x, a)) relation.emplace_back(x, m);
        if (lattice.leq(b, x)) relation.emplace_back(m, x);
      }
      // New elements of [u, v] lie below those of [a, b] exactly when v ≤ a.
      for (std::size_t j = 0; j < fat.size(); ++j) {
        if (lattice.leq(fat[j].high, a)) {
          relation.emplace_back(n + 2 * j, m);
          relation.emplace_back(n + 2 * j + 1, m);
        }
      }
    }
  }
  return builder.finish(relation);
}

Lattice product(const Lattice& a, const Lattice& b) {
  const std::size_t n = a.size() * b.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < b.size(); ++y) {
      labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
    }
  }
  BoolMatrix leq(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto xi = static_cast<Element>(i / b.size());
      const auto yi = static_cast<Element>(i % b.size());
      const auto xj = static_cast<Element>(j / b.size());
      const auto yj = static_cast<Element>(j % b.size());
      if (a.leq(xi, xj) && b.leq(yi, yj)) leq.set(i, j);
    }
  }
  return Lattice::from_order(std::move(labels), std::move(leq));
}

Lattice adjoin_top(const Lattice& lattice) {
  std::string label = "T";
  while (lattice.find(label)) label += '\'';
  std::vector<std::string> labels = lattice.labels();
  labels.push_back(label);
  const std::size_t n = labels.size();
  BoolMatrix leq(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (lattice.leq(static_cast<Element>(i), static_cast<Element>(j))) leq.set(i, j);
    }
    leq.set(i, n - 1);
  }
  return Lattice::from_order(std::move(labels), std::move(leq));
}

}  // namespace latcon
