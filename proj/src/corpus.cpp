#include "latcon/corpus.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "latcon/constructions.hpp"
#include "latcon/error.hpp"
#include "latcon/isomorphism.hpp"

namespace latcon {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Plain modulo keeps the sequence identical across standard libraries.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool coin() { return below(2) == 0; }

 private:
  std::mt19937_64 engine_;
};

CorpusEntry make_named(const std::string& name, std::initializer_list<long long> params = {}) {
  std::vector<long long> args(params);
  std::string text = name;
  if (!args.empty()) text += "(" + std::to_string(args.front()) + ")";
  return {text, named(name, args)};
}

CorpusEntry random_atom(Rng& rng) {
  switch (rng.below(6)) {
    case 0: return make_named("chain", {static_cast<long long>(2 + rng.below(4))});
    case 1: return make_named("B2");
    case 2: return make_named("M3");
    case 3: return make_named("N5");
    case 4: return make_named("K");
    default: {
      static constexpr long long kDivisors[] = {4, 6, 8, 9, 10, 12};
      return make_named("div", {kDivisors[rng.below(std::size(kDivisors))]});
    }
  }
}

CorpusEntry random_expression(Rng& rng, int depth) {
  if (depth == 0 || rng.below(3) == 0) return random_atom(rng);
  if (rng.coin()) {
    auto lower = random_expression(rng, depth - 1);
    auto upper = random_expression(rng, depth - 1);
    return {"osum(" + lower.name + "," + upper.name + ")",
            ordinal_sum(lower.lattice, upper.lattice).lattice};
  }
  std::vector<CorpusEntry> parts;
  const std::size_t arity = 2 + rng.below(2);
  for (std::size_t i = 0; i < arity; ++i) parts.push_back(random_expression(rng, depth - 1));
  std::string text = "hsum(";
  std::vector<Lattice> summands;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    text += (i ? "," : "") + parts[i].name;
    summands.push_back(parts[i].lattice);
  }
  return {text + ")", horizontal_sum(summands).lattice};
}

// A ∪/∩-closed family of subsets of {0..k-1} containing ∅ and the full set:
// a distributive lattice under inclusion.
CorpusEntry random_set_lattice(Rng& rng) {
  const std::size_t k = 2 + rng.below(3);
  const unsigned full = (1u << k) - 1;
  std::set<unsigned> family{0u, full};
  const std::size_t seeds = 1 + rng.below(3);
  for (std::size_t i = 0; i < seeds; ++i) family.insert(static_cast<unsigned>(rng.below(full + 1)));
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<unsigned> current(family.begin(), family.end());
    for (unsigned a : current) {
      for (unsigned b : current) {
        grew |= family.insert(a | b).second;
        grew |= family.insert(a & b).second;
      }
    }
  }
  const std::vector<unsigned> sets(family.begin(), family.end());
  std::vector<std::string> labels;
  std::string name = "sets" + std::to_string(k) + "{";
  for (unsigned s : sets) {
    std::string label = "s";
    for (std::size_t b = 0; b < k; ++b) {
      if (s & (1u << b)) label += std::to_string(b);
    }
    labels.push_back(label);
    name += (labels.size() > 1 ? "," : "") + label;
  }
  BoolMatrix leq(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if ((sets[i] & ~sets[j]) == 0) leq.set(i, j);
    }
  }
  return {name + "}", Lattice::from_order(std::move(labels), std::move(leq))};
}

CorpusEntry random_product_with_top(Rng& rng) {
  auto factor = [&rng]() {
    switch (rng.below(4)) {
      case 0: return make_named("chain", {static_cast<long long>(2 + rng.below(3))});
      case 1: return make_named("B2");
      case 2: return make_named("M3");
      default: return make_named("chain", {2});
    }
  };
  auto a = factor();
  auto b = factor();
  return {"top(" + a.name + "*" + b.name + ")", adjoin_top(product(a.lattice, b.lattice))};
}

// Dedekind-MacNeille completion of a random poset on k points: the sets
// L(U(S)) ordered by inclusion. Points keep their names "p<i>"; the remaining
// cuts are "c<members>", with "0"/"1" for an empty bottom and a full top.
CorpusEntry random_completion(Rng& rng) {
  const std::size_t k = 3 + rng.below(4);
  std::vector<unsigned> below(k);  // below[i]: points ≤ i, as a bit mask
  for (std::size_t i = 0; i < k; ++i) below[i] = 1u << i;
  std::string name = "dm" + std::to_string(k) + "{";
  bool first = true;
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (rng.below(100) < 35 && !(below[j] & (1u << i))) {
        // i < j; closing transitively keeps the relation a partial order.
        name += (first ? "" : ",") + std::to_string(i) + "<" + std::to_string(j);
        first = false;
        for (std::size_t t = 0; t < k; ++t) {
          if (below[t] & (1u << j)) below[t] |= below[i];
        }
      }
    }
  }
  const unsigned all = (1u << k) - 1;
  auto upper = [&](unsigned set) {
    unsigned out = 0;
    for (std::size_t t = 0; t < k; ++t) {
      if ((set & ~below[t]) == 0) out |= 1u << t;
    }
    return out;
  };
  auto lower = [&](unsigned set) {
    unsigned out = all;
    for (std::size_t t = 0; t < k; ++t) {
      if (set & (1u << t)) out &= below[t];
    }
    return out;
  };
  std::set<unsigned> cuts;
  for (unsigned s = 0; s <= all; ++s) cuts.insert(lower(upper(s)));
  const std::vector<unsigned> sets(cuts.begin(), cuts.end());
  std::vector<std::string> labels;
  for (unsigned c : sets) {
    auto principal = std::find(below.begin(), below.end(), c);
    if (principal != below.end()) {
      labels.push_back("p" + std::to_string(principal - below.begin()));
    } else if (c == 0) {
      labels.push_back("0");
    } else if (c == all) {
      labels.push_back("1");
    } else {
      std::string label = "c";
      for (std::size_t t = 0; t < k; ++t) {
        if (c & (1u << t)) label += std::to_string(t);
      }
      labels.push_back(label);
    }
  }
  BoolMatrix leq(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if ((sets[i] & ~sets[j]) == 0) leq.set(i, j);
    }
  }
  return {name + "}", Lattice::from_order(std::move(labels), std::move(leq))};
}

}  // namespace

std::vector<CorpusEntry> corpus(std::uint64_t seed, std::size_t count, std::size_t max_size) {
  if (max_size < 2) throw Error(ErrorKind::BadConfig, "max_size must be at least 2");
  std::vector<CorpusEntry> out;
  auto keep = [&](CorpusEntry entry) {
    if (entry.lattice.size() <= max_size) out.push_back(std::move(entry));
  };
  for (long long k = 2; k <= 5; ++k) keep(make_named("chain", {k}));
  keep(make_named("B2"));
  keep(make_named("M3"));
  keep(make_named("N5"));
  keep(make_named("K"));
  for (long long n : {6LL, 8LL, 12LL, 30LL}) keep(make_named("div", {n}));

  Rng rng(seed);
  for (std::size_t produced = 0; produced < count; ++produced) {
    // The family is drawn first so that rejections by size do not skew the
    // mix towards the families that produce small lattices.
    const std::size_t family = rng.below(10);
    std::optional<CorpusEntry> entry;
    for (int attempt = 0; attempt < 200 && !entry; ++attempt) {
      CorpusEntry candidate = family < 3   ? random_expression(rng, 2)
                              : family < 5 ? random_set_lattice(rng)
                              : family < 7 ? random_product_with_top(rng)
                                           : random_completion(rng);
      if (candidate.lattice.size() <= max_size && !candidate.lattice.is_trivial()) {
        entry = std::move(candidate);
      }
    }
    if (!entry) {
      const auto k = static_cast<long long>(std::min<std::size_t>(max_size, 5));
      entry = make_named("chain", {k});
    }
    out.push_back(std::move(*entry));
  }
  return out;
}

std::vector<CorpusEntry> all_lattices(std::size_t n) {
  if (n < 1 || n > 7) throw Error(ErrorKind::BadConfig, "exhaustive enumeration covers 1..7");
  if (n <= 2) return {make_named("chain", {static_cast<long long>(n)})};
  // Strict orders on the m interior points with i < j only for i < j as
  // integers; every finite poset has such a labelling.
  const std::size_t m = n - 2;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  std::vector<std::string> labels{"0"};
  for (std::size_t i = 0; i < m; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  labels.push_back("1");

  std::vector<CorpusEntry> out;
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    BoolMatrix leq(n);
    for (std::size_t x = 0; x < n; ++x) {
      leq.set(0, x);
      leq.set(x, n - 1);
      leq.set(x, x);
    }
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (mask & (1u << p)) leq.set(pairs[p].first + 1, pairs[p].second + 1);
    }
    bool transitive = true;
    for (std::size_t x = 1; x + 1 < n && transitive; ++x) {
      for (std::size_t y = 1; y + 1 < n && transitive; ++y) {
        for (std::size_t z = 1; z + 1 < n && transitive; ++z) {
          if (x != y && y != z && leq(x, y) && leq(y, z) && !leq(x, z)) transitive = false;
        }
      }
    }
    if (!transitive) continue;
    std::optional<Lattice> candidate;
    try {
      candidate = Lattice::from_order(labels, leq);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotALattice) throw;
      continue;
    }
    const bool seen = std::any_of(out.begin(), out.end(), [&](const CorpusEntry& e) {
      return isomorphic(e.lattice, *candidate).has_value();
    });
    if (!seen) {
      out.push_back({"lattice" + std::to_string(n) + "#" + std::to_string(out.size() + 1),
                     std::move(*candidate)});
    }
  }
  return out;
}

}  // namespace latcon
