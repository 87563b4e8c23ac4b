#include "latcon/checks.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <sstream>

#include <boost/dynamic_bitset.hpp>

#include "latcon/constructions.hpp"
#include "latcon/corpus.hpp"
#include "latcon/error.hpp"
#include "latcon/filters.hpp"
#include "latcon/io.hpp"
#include "latcon/isomorphism.hpp"
#include "latcon/partition.hpp"

namespace latcon {

std::string_view to_string(CheckStatus status) noexcept {
  switch (status) {
    case CheckStatus::passed: return "passed";
    case CheckStatus::failed: return "failed";
    case CheckStatus::skipped: return "skipped";
  }
  return "unknown";
}

nlohmann::json to_json(const CheckReport& report) {
  return {{"check", report.check_name},
          {"instance", report.instance_descr},
          {"status", to_string(report.status)},
          {"details", report.details}};
}

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

nlohmann::json labels_of(const Lattice& lattice, const ElementSet& set) {
  nlohmann::json out = nlohmann::json::array();
  for (Element x : set) out.push_back(lattice.label(x));
  return out;
}

// Collects mismatches for one report; the report fails on the first one.
class Verdict {
 public:
  Verdict(std::string check, std::string instance) {
    report_.check_name = std::move(check);
    report_.instance_descr = std::move(instance);
  }

  void witness(const std::string& key, nlohmann::json value) {
    witness_[key] = std::move(value);
  }
  void note(const std::string& key, nlohmann::json value) {
    report_.details[key] = std::move(value);
  }

  bool expect(bool ok, const std::string& what, nlohmann::json expected = nullptr,
              nlohmann::json computed = nullptr, nlohmann::json object = nullptr) {
    if (ok) return true;
    report_.status = CheckStatus::failed;
    if (mismatches_.size() < kMaxMismatches) {
      nlohmann::json entry{{"what", what}};
      if (!expected.is_null()) entry["expected"] = std::move(expected);
      if (!computed.is_null()) entry["computed"] = std::move(computed);
      if (!object.is_null()) entry["object"] = std::move(object);
      mismatches_.push_back(std::move(entry));
    }
    return false;
  }

  CheckReport finish() {
    if (report_.failed()) {
      report_.details["mismatches"] = mismatches_;
      report_.details["witness"] = witness_;
    }
    return std::move(report_);
  }

 private:
  static constexpr std::size_t kMaxMismatches = 8;
  CheckReport report_;
  nlohmann::json witness_ = nlohmann::json::object();
  nlohmann::json mismatches_ = nlohmann::json::array();
};

// Runs a check body; a cap overflow becomes a skip and any other exception a
// failure that carries the witness.
template <typename Body>
CheckReport guarded(const std::string& check, const std::string& instance,
                    const nlohmann::json& witness, Body&& body) {
  CheckReport report;
  report.check_name = check;
  report.instance_descr = instance;
  try {
    return body();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SizeCapExceeded) {
      report.status = CheckStatus::skipped;
      report.details["reason"] = e.what();
      return report;
    }
    report.status = CheckStatus::failed;
    report.details["error"] = e.what();
  } catch (const std::exception& e) {
    report.status = CheckStatus::failed;
    report.details["error"] = e.what();
  }
  report.details["witness"] = witness;
  return report;
}

bool contains(const std::vector<Partition>& list, const Partition& p) {
  return std::find(list.begin(), list.end(), p) != list.end();
}

std::set<Partition> as_set(const std::vector<Partition>& list) {
  return {list.begin(), list.end()};
}

nlohmann::json render_all(const Lattice& lattice, const std::set<Partition>& set) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : set) out.push_back(render(lattice, p));
  return out;
}

bool is_convex_sublattice(const Lattice& lattice, const ElementSet& set) {
  std::vector<bool> in(lattice.size(), false);
  for (Element x : set) in[x] = true;
  for (Element x : set) {
    for (Element y : set) {
      if (!in[lattice.meet(x, y)] || !in[lattice.join(x, y)]) return false;
      for (Element z = 0; z < lattice.size(); ++z) {
        if (lattice.leq(x, z) && lattice.leq(z, y) && !in[z]) return false;
      }
    }
  }
  return true;
}

Partition two_blocks(const Lattice& lattice, const ElementSet& first) {
  const ElementSet blocks[] = {first, complement(lattice, first)};
  return eq_from_blocks(lattice.size(), blocks);
}

ElementSet image(const std::vector<Element>& embedding, const ElementSet& set) {
  ElementSet out;
  for (Element x : set) out.push_back(embedding[x]);
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet without(const Lattice& lattice, std::initializer_list<Element> removed) {
  ElementSet out;
  for (Element x = 0; x < lattice.size(); ++x) {
    if (std::find(removed.begin(), removed.end(), x) == removed.end()) out.push_back(x);
  }
  return out;
}

// θ restricted to a summand, reindexed by the summand's own elements.
Partition pull_back(const Partition& theta, const std::vector<Element>& embedding) {
  std::vector<Element> labels;
  for (Element r : embedding) labels.push_back(theta.block_of(r));
  return Partition::from_labelling(std::span<const Element>(labels));
}

// Con₀₁(X) as a Lattice, via the sub-order of Con(X).
Lattice con01_lattice(const ConLattice& con) {
  std::vector<std::size_t> indices;
  for (const auto& theta : con.con01()) indices.push_back(*con.index_of(theta));
  return con.suborder_lattice(indices);
}

std::size_t atom_count(const Lattice& lattice) {
  std::size_t count = 0;
  for (const auto& [lo, hi] : lattice.covers()) count += lo == lattice.bottom() ? 1 : 0;
  return count;
}

void require_nontrivial_summands(std::span<const Lattice> family) {
  for (const auto& summand : family) {
    if (summand.size() <= 2) {
      throw Error(ErrorKind::SummandTooSmall, "summands need more than 2 elements");
    }
  }
}

}  // namespace

std::size_t count_filters_by_search(const Lattice& lattice) {
  const std::size_t n = lattice.size();
  // Elements with smaller up-sets first: everything above x precedes x.
  std::vector<Element> order = carrier(lattice);
  std::vector<Bits> up(n, Bits(n));
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (lattice.leq(x, y)) up[x].set(y);
    }
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return up[a].count() < up[b].count(); });

  std::size_t found = 0;
  // included/excluded: decisions so far; required: up-closure of every meet
  // of included elements, which must end up included.
  auto search = [&](auto&& self, std::size_t depth, Bits& included, Bits& excluded,
                    const Bits& required) -> void {
    if (depth == n) {
      found += included.any() ? 1 : 0;
      return;
    }
    const Element x = order[depth];
    if (!required.test(x)) {
      excluded.set(x);
      self(self, depth + 1, included, excluded, required);
      excluded.reset(x);
    }
    if (up[x].intersects(excluded)) return;
    Bits next = required | up[x];
    for (auto y = included.find_first(); y != Bits::npos; y = included.find_next(y)) {
      next |= up[lattice.meet(x, static_cast<Element>(y))];
    }
    if (next.intersects(excluded)) return;
    included.set(x);
    self(self, depth + 1, included, excluded, next);
    included.reset(x);
  };
  Bits included(n);
  Bits excluded(n);
  search(search, 0, included, excluded, Bits(n));
  return found;
}

std::size_t count_ideals_by_search(const Lattice& lattice) {
  return count_filters_by_search(dual(lattice));
}

CheckReport check_lattice_axioms(const Lattice& lattice, const std::string& instance) {
  Verdict v("axioms", instance);
  v.witness("lattice", to_json(lattice));
  const auto n = static_cast<Element>(lattice.size());
  auto pair = [&](Element x, Element y) {
    return nlohmann::json{lattice.label(x), lattice.label(y)};
  };
  for (Element x = 0; x < n; ++x) {
    v.expect(lattice.leq(x, x), "reflexivity", nullptr, nullptr, lattice.label(x));
    for (Element y = 0; y < n; ++y) {
      if (x != y && lattice.leq(x, y) && lattice.leq(y, x)) {
        v.expect(false, "antisymmetry", nullptr, nullptr, pair(x, y));
      }
      const Element m = lattice.meet(x, y);
      const Element j = lattice.join(x, y);
      bool glb = lattice.leq(m, x) && lattice.leq(m, y);
      bool lub = lattice.leq(x, j) && lattice.leq(y, j);
      for (Element z = 0; z < n; ++z) {
        if (lattice.leq(x, y) && lattice.leq(y, z) && !lattice.leq(x, z)) {
          v.expect(false, "transitivity", nullptr, nullptr, pair(x, z));
        }
        if (lattice.leq(z, x) && lattice.leq(z, y) && !lattice.leq(z, m)) glb = false;
        if (lattice.leq(x, z) && lattice.leq(y, z) && !lattice.leq(j, z)) lub = false;
        v.expect(lattice.meet(x, lattice.meet(y, z)) == lattice.meet(lattice.meet(x, y), z),
                 "meet associativity", nullptr, nullptr, pair(x, y));
        v.expect(lattice.join(x, lattice.join(y, z)) == lattice.join(lattice.join(x, y), z),
                 "join associativity", nullptr, nullptr, pair(x, y));
      }
      v.expect(glb, "meet table holds the greatest lower bound", nullptr, lattice.label(m),
               pair(x, y));
      v.expect(lub, "join table holds the least upper bound", nullptr, lattice.label(j),
               pair(x, y));
      v.expect(m == lattice.meet(y, x) && j == lattice.join(y, x), "commutativity", nullptr,
               nullptr, pair(x, y));
      v.expect(lattice.meet(x, lattice.join(x, y)) == x && lattice.join(x, lattice.meet(x, y)) == x,
               "absorption", nullptr, nullptr, pair(x, y));
    }
    v.expect(lattice.meet(x, x) == x && lattice.join(x, x) == x, "idempotence", nullptr,
             nullptr, lattice.label(x));
  }
  return v.finish();
}

CheckReport check_prime_remark(const Lattice& lattice, const std::string& instance,
                               const CheckCaps& caps) {
  const auto witness = nlohmann::json{{"lattice", to_json(lattice)}};
  return guarded("prime", instance, witness, [&] {
    Verdict v("prime", instance);
    v.witness("lattice", to_json(lattice));
    const ConLattice con = all_congruences(lattice, caps.con);
    const auto maximal = con.maximal();
    std::size_t primes = 0;
    for (const auto& member : all_filters(lattice).members) {
      const ElementSet& filter = member.elements;
      if (filter.size() == lattice.size()) continue;
      const ElementSet rest = complement(lattice, filter);
      const Partition theta = two_blocks(lattice, filter);
      const std::array<bool, 6> verdicts{
          is_prime_filter(lattice, filter),
          is_prime_filter_by_complement(lattice, filter),
          is_ideal(lattice, rest),
          is_ideal(lattice, rest) && is_prime_ideal(lattice, rest),
          is_congruence(lattice, theta),
          contains(maximal, theta),
      };
      primes += verdicts[0] ? 1 : 0;
      const bool agree = std::all_of(verdicts.begin(), verdicts.end(),
                                     [&](bool b) { return b == verdicts[0]; });
      v.expect(agree,
               "prime filter / complement ideal / prime ideal / congruence / maximal disagree",
               nullptr, verdicts, labels_of(lattice, filter));
    }
    const auto spec_filters = spec_filt(lattice);
    const auto spec_ideals = spec_id(lattice);
    for (const auto& theta : con.members()) {
      const ElementSet zero = theta.block(lattice.bottom());
      const ElementSet one = theta.block(lattice.top());
      const bool is_nabla = theta.block_count() == 1;
      const bool two_classes = theta.block_count() == 2;
      // eq(A, B) names an equivalence on L only when A ∪ B = L.
      bool equals_eq = false;
      if (!is_nabla && zero.size() + one.size() == lattice.size()) {
        const ElementSet blocks[] = {zero, one};
        equals_eq = theta == eq_from_blocks(lattice.size(), blocks);
      }
      const bool covers_all = !is_nabla && zero.size() + one.size() == lattice.size();
      v.expect(two_classes == equals_eq && equals_eq == covers_all,
               "|L/θ| = 2 characterization", nullptr,
               nlohmann::json{two_classes, equals_eq, covers_all}, render(lattice, theta));
      if (two_classes) {
        v.expect(spec_filters.contains(one) && spec_ideals.contains(zero),
                 "classes of a two-class congruence are a prime filter and a prime ideal",
                 nullptr, nullptr, render(lattice, theta));
      }
    }
    v.note("prime_filters", primes);
    return v.finish();
  });
}

CheckReport check_irreducibility_lemma(const Lattice& lattice, const std::string& instance,
                                       const CheckCaps& caps) {
  const auto witness = nlohmann::json{{"lattice", to_json(lattice)}};
  if (lattice.is_trivial()) {
    CheckReport skipped{"lemma", instance, CheckStatus::skipped, {{"reason", "trivial lattice"}}};
    return skipped;
  }
  return guarded("lemma", instance, witness, [&] {
    Verdict v("lemma", instance);
    v.witness("lattice", to_json(lattice));
    const ConLattice con = all_congruences(lattice, caps.con);
    const auto maximal = con.maximal();
    const Element zero = lattice.bottom();
    const Element one = lattice.top();

    const ElementSet above_zero = without(lattice, {zero});
    const Partition split_zero = two_blocks(lattice, above_zero);
    const std::array<bool, 6> zero_side{
        lattice.is_meet_irreducible(zero),
        is_filter(lattice, above_zero),
        is_filter(lattice, above_zero) && is_prime_filter(lattice, above_zero),
        is_prime_ideal(lattice, {zero}),
        is_congruence(lattice, split_zero),
        contains(maximal, split_zero),
    };
    v.expect(std::all_of(zero_side.begin(), zero_side.end(),
                         [&](bool b) { return b == zero_side[0]; }),
             "0 meet-irreducible equivalences", nullptr, zero_side);

    const ElementSet below_one = without(lattice, {one});
    const Partition split_one = two_blocks(lattice, below_one);
    const std::array<bool, 6> one_side{
        lattice.is_join_irreducible(one),
        is_ideal(lattice, below_one),
        is_ideal(lattice, below_one) && is_prime_ideal(lattice, below_one),
        is_prime_filter(lattice, {one}),
        is_congruence(lattice, split_one),
        contains(maximal, split_one),
    };
    v.expect(std::all_of(one_side.begin(), one_side.end(),
                         [&](bool b) { return b == one_side[0]; }),
             "1 join-irreducible equivalences", nullptr, one_side);

    if (lattice.size() > 2) {
      const ElementSet middle = without(lattice, {zero, one});
      const ElementSet blocks[] = {{zero}, middle, {one}};
      const Partition theta = eq_from_blocks(lattice.size(), blocks);
      const std::array<bool, 3> middle_side{
          lattice.is_meet_irreducible(zero) && lattice.is_join_irreducible(one),
          is_convex_sublattice(lattice, middle),
          is_congruence(lattice, theta),
      };
      v.expect(middle_side[0] == middle_side[1] && middle_side[1] == middle_side[2],
               "L∖{0,1} convex sublattice equivalences", nullptr, middle_side);
      if (middle_side[2]) {
        v.expect(!contains(con.prime(), theta), "eq({0}, L∖{0,1}, {1}) is not prime",
                 nullptr, nullptr, render(lattice, theta));
      }
    }
    return v.finish();
  });
}

CheckReport check_spechsum(const Lattice& a, const Lattice& b, const std::string& instance,
                           const CheckCaps& caps) {
  const Lattice family[] = {a, b};
  require_nontrivial_summands(family);
  const auto witness = nlohmann::json{{"A", to_json(a)}, {"B", to_json(b)}};
  return guarded("spechsum", instance, witness, [&] {
    Verdict v("spechsum", instance);
    v.witness("A", to_json(a));
    v.witness("B", to_json(b));
    const Construction sum = horizontal_sum(family);
    const Lattice& h = sum.lattice;
    const auto& emb = sum.provenance.embeddings;
    const ElementSet a_no0 = image(emb[0], without(a, {a.bottom()}));
    const ElementSet a_no1 = image(emb[0], without(a, {a.top()}));
    const ElementSet b_no0 = image(emb[1], without(b, {b.bottom()}));
    const ElementSet b_no1 = image(emb[1], without(b, {b.top()}));

    const auto filters = spec_filt(h);
    const auto ideals = spec_id(h);
    for (const auto& p : filters.members) {
      v.expect(p.elements == a_no0 || p.elements == b_no0, "Spec_Filt ⊆ {A∖{0}, B∖{0}}",
               nullptr, nullptr, labels_of(h, p.elements));
    }
    for (const auto& q : ideals.members) {
      v.expect(q.elements == a_no1 || q.elements == b_no1, "Spec_Id ⊆ {A∖{1}, B∖{1}}",
               nullptr, nullptr, labels_of(h, q.elements));
    }
    const auto maximal = all_congruences(h, caps.con).maximal();
    auto equivalences = [&](const Lattice& low_side, const Lattice& high_side,
                            const ElementSet& filter, const ElementSet& ideal,
                            const std::string& what) {
      const Partition theta = two_blocks(h, filter);
      const std::array<bool, 5> verdicts{
          low_side.is_meet_irreducible(low_side.bottom()) &&
              high_side.is_join_irreducible(high_side.top()),
          filters.contains(filter),
          ideals.contains(ideal),
          is_congruence(h, theta),
          contains(maximal, theta),
      };
      v.expect(std::all_of(verdicts.begin(), verdicts.end(),
                           [&](bool x) { return x == verdicts[0]; }),
               what, nullptr, verdicts);
      return verdicts[0];
    };
    const bool ab = equivalences(a, b, a_no0, b_no1, "equivalences for A∖{0}, B∖{1}");
    const bool ba = equivalences(b, a, b_no0, a_no1, "equivalences for B∖{0}, A∖{1}");
    v.note("prime_filters", filters.size());
    v.note("predicted", (ab ? 1 : 0) + (ba ? 1 : 0));
    return v.finish();
  });
}

CheckReport check_cghsum(const Lattice& a, const Lattice& b, const std::string& instance,
                         const CheckCaps& caps) {
  const Lattice family[] = {a, b};
  require_nontrivial_summands(family);
  const auto witness = nlohmann::json{{"A", to_json(a)}, {"B", to_json(b)}};
  if (a.size() > caps.max_summand || b.size() > caps.max_summand) {
    return {"cghsum", instance, CheckStatus::skipped, {{"reason", "summand above cap"}}};
  }
  return guarded("cghsum", instance, witness, [&] {
    Verdict v("cghsum", instance);
    v.witness("A", to_json(a));
    v.witness("B", to_json(b));
    const Construction sum = horizontal_sum(family);
    const Lattice& h = sum.lattice;
    const auto& emb = sum.provenance.embeddings;
    const ConLattice con_a = all_congruences(a, caps.con);
    const ConLattice con_b = all_congruences(b, caps.con);
    const ConLattice con = all_congruences(h, caps.con);
    const auto a01 = con_a.con01();
    const auto b01 = con_b.con01();

    // Con₀₁(A ⊞ B) predicted as {α ⊞ β}; the map must be an order embedding.
    std::vector<Partition> predicted01;
    for (const auto& alpha : a01) {
      for (const auto& beta : b01) {
        const Partition parts[] = {alpha, beta};
        predicted01.push_back(hsum_congruences(family, parts));
      }
    }
    for (std::size_t i = 0; i < predicted01.size(); ++i) {
      for (std::size_t j = 0; j < predicted01.size(); ++j) {
        const bool product_leq = eq_leq(a01[i / b01.size()], a01[j / b01.size()]) &&
                                 eq_leq(b01[i % b01.size()], b01[j % b01.size()]);
        v.expect(product_leq == eq_leq(predicted01[i], predicted01[j]),
                 "(α, β) ↦ α ⊞ β is an order embedding", nullptr, nullptr,
                 nlohmann::json{render(h, predicted01[i]), render(h, predicted01[j])});
      }
    }
    const auto predicted01_set = as_set(predicted01);
    v.expect(predicted01_set.size() == predicted01.size(), "(α, β) ↦ α ⊞ β is injective");
    const auto computed01_set = as_set(con.con01());
    v.expect(computed01_set == predicted01_set, "Con₀₁(A ⊞ B) = {α ⊞ β}",
             render_all(h, predicted01_set), render_all(h, computed01_set));

    const ElementSet a_no0 = image(emb[0], without(a, {a.bottom()}));
    const ElementSet b_no0 = image(emb[1], without(b, {b.bottom()}));
    const bool case_ab = a.is_meet_irreducible(a.bottom()) && b.is_join_irreducible(b.top());
    const bool case_ba = b.is_meet_irreducible(b.bottom()) && a.is_join_irreducible(a.top());
    const std::size_t case_index = (case_ab ? 1 : 0) + (case_ba ? 1 : 0);
    auto predicted = predicted01_set;
    if (case_ab) predicted.insert(two_blocks(h, a_no0));
    if (case_ba) predicted.insert(two_blocks(h, b_no0));
    predicted.insert(nabla(h));
    const auto computed = as_set(con.members());
    v.expect(computed == predicted, "Con(A ⊞ B) = Con₀₁ ∪ two-class ∪ {∇}",
             render_all(h, predicted), render_all(h, computed));
    v.expect(con.two_class().size() == case_index, "number of two-class congruences",
             case_index, con.two_class().size());
    v.expect(spec_filt(h).size() == case_index && spec_id(h).size() == case_index,
             "|Spec_Filt| = |Spec_Id| = number of two-class congruences", case_index,
             nlohmann::json{spec_filt(h).size(), spec_id(h).size()});

    // θ ≠ ∇ is the horizontal sum of its restrictions, each a congruence.
    for (const auto& theta : con.members()) {
      if (theta.block_count() == 1) continue;
      const Partition parts[] = {pull_back(theta, emb[0]), pull_back(theta, emb[1])};
      v.expect(is_congruence(a, parts[0]) && is_congruence(b, parts[1]),
               "restrictions are congruences", nullptr, nullptr, render(h, theta));
      v.expect(hsum_congruences(family, parts) == theta, "θ = (θ∩A²) ⊞ (θ∩B²)", nullptr,
               nullptr, render(h, theta));
    }

    const Lattice con01_a = con01_lattice(con_a);
    const Lattice con01_b = con01_lattice(con_b);
    static const char* kTails[] = {"chain", "chain", "B2"};
    const long long tail_length[] = {2, 3};
    const Lattice tail = case_index == 2 ? named(kTails[2])
                                         : named(kTails[case_index],
                                                 std::span(&tail_length[case_index], 1));
    const Lattice shape = ordinal_sum(product(con01_a, con01_b), tail).lattice;
    v.expect(isomorphic(con.as_lattice(), shape).has_value(),
             "Con(A ⊞ B) ≅ (Con₀₁(A) × Con₀₁(B)) ⊕ tail", to_json(shape),
             to_json(con.as_lattice()));

    const bool a_trivial = a01.size() == 1;
    const bool b_trivial = b01.size() == 1;
    const bool si_predicted = (a_trivial && b_trivial && case_index <= 1) ||
                              (a_trivial && atom_count(con01_b) == 1) ||
                              (b_trivial && atom_count(con01_a) == 1);
    v.expect(con.monolith().has_value() == si_predicted, "subdirect irreducibility",
             si_predicted, con.monolith().has_value());
    v.note("case", case_index);
    v.note("con_size", con.size());
    return v.finish();
  });
}

CheckReport check_hsum_counts(const Lattice& a, const Lattice& b, const std::string& instance) {
  const Lattice family[] = {a, b};
  const auto witness = nlohmann::json{{"A", to_json(a)}, {"B", to_json(b)}};
  return guarded("counts", instance, witness, [&] {
    Verdict v("counts", instance);
    v.witness("A", to_json(a));
    v.witness("B", to_json(b));
    const Lattice h = horizontal_sum(family).lattice;
    v.expect(h.size() == a.size() + b.size() - 2, "|A ⊞ B| = |A| + |B| - 2",
             a.size() + b.size() - 2, h.size());
    const std::size_t filters = count_filters_by_search(h);
    const std::size_t ideals = count_ideals_by_search(h);
    const std::size_t predicted_filters =
        count_filters_by_search(a) + count_filters_by_search(b) - 2;
    const std::size_t predicted_ideals = count_ideals_by_search(a) + count_ideals_by_search(b) - 2;
    v.expect(filters == predicted_filters, "|Filt(A ⊞ B)| = |Filt(A)| + |Filt(B)| - 2",
             predicted_filters, filters);
    v.expect(ideals == predicted_ideals, "|Id(A ⊞ B)| = |Id(A)| + |Id(B)| - 2",
             predicted_ideals, ideals);
    v.expect(all_filters(h).size() == filters && all_ideals(h).size() == ideals,
             "generator enumeration agrees with search", filters, all_filters(h).size());
    v.note("filters", filters);
    return v.finish();
  });
}

CheckReport check_multi_hsum(std::span<const Lattice> family, const std::string& instance,
                             const CheckCaps& caps) {
  if (family.size() < 3) throw Error(ErrorKind::BadParam, "need at least three summands");
  require_nontrivial_summands(family);
  nlohmann::json witness = nlohmann::json::array();
  for (const auto& summand : family) witness.push_back(to_json(summand));
  return guarded("multi", instance, nlohmann::json{{"family", witness}}, [&] {
    Verdict v("multi", instance);
    v.witness("family", witness);
    const Construction sum = horizontal_sum(family);
    const Lattice& h = sum.lattice;
    const ConLattice con = all_congruences(h, caps.con);
    v.expect(spec_filt(h).size() == 0 && spec_id(h).size() == 0, "Spec_Filt = Spec_Id = ∅",
             0, nlohmann::json{spec_filt(h).size(), spec_id(h).size()});
    v.expect(con.two_class().empty(), "no two-class congruences", 0, con.two_class().size());

    std::vector<std::vector<Partition>> factors;
    std::vector<Lattice> factor_lattices;
    for (const auto& summand : family) {
      const ConLattice c = all_congruences(summand, caps.con);
      factors.push_back(c.con01());
      factor_lattices.push_back(con01_lattice(c));
    }
    std::size_t product_size = 1;
    for (const auto& f : factors) product_size *= f.size();

    std::set<Partition> predicted01;
    std::vector<std::size_t> digits(family.size(), 0);
    for (std::size_t t = 0; t < product_size; ++t) {
      std::vector<Partition> parts;
      for (std::size_t i = 0; i < family.size(); ++i) parts.push_back(factors[i][digits[i]]);
      predicted01.insert(hsum_congruences(family, parts));
      for (std::size_t i = 0; i < digits.size() && ++digits[i] == factors[i].size(); ++i) {
        digits[i] = 0;
      }
    }
    v.expect(predicted01.size() == product_size, "⊞ is injective on ∏ Con₀₁(Aᵢ)", product_size,
             predicted01.size());
    const auto computed01 = as_set(con.con01());
    v.expect(computed01 == predicted01, "Con₀₁(H) = {⊞ αᵢ}", render_all(h, predicted01),
             render_all(h, computed01));
    auto expected_con = computed01;
    expected_con.insert(nabla(h));
    v.expect(as_set(con.members()) == expected_con, "Con(H) = Con₀₁(H) ∪ {∇}");
    v.expect(con.size() == product_size + 1, "|Con(H)| = ∏|Con₀₁(Aᵢ)| + 1", product_size + 1,
             con.size());

    // Subdirectly irreducible iff all but one Con₀₁(Aᵢ) are trivial and the
    // remaining one has at most one atom.
    bool si_predicted = false;
    for (std::size_t u = 0; u < family.size(); ++u) {
      bool others_trivial = true;
      for (std::size_t t = 0; t < family.size(); ++t) {
        if (t != u && factors[t].size() != 1) others_trivial = false;
      }
      if (others_trivial && atom_count(factor_lattices[u]) <= 1) si_predicted = true;
    }
    v.expect(con.monolith().has_value() == si_predicted, "subdirect irreducibility",
             si_predicted, con.monolith().has_value());
    v.note("con_size", con.size());
    return v.finish();
  });
}

CheckReport check_dilate(const Lattice& lattice, const std::string& instance,
                         const CheckCaps& caps) {
  if (lattice.is_trivial()) throw Error(ErrorKind::TrivialInput, "D(L) needs |L| > 1");
  if (lattice.size() > caps.max_dilate_input) {
    return {"dilate", instance, CheckStatus::skipped, {{"reason", "input above cap"}}};
  }
  const auto witness = nlohmann::json{{"lattice", to_json(lattice)}};
  return guarded("dilate", instance, witness, [&] {
    Verdict v("dilate", instance);
    v.witness("lattice", to_json(lattice));
    const Lattice d = dilate(lattice).lattice;
    const std::size_t fat = fat_intervals(lattice).size();
    v.expect(d.size() == lattice.size() + 2 * fat, "|D(L)| = |L| + 2·|fat intervals|",
             lattice.size() + 2 * fat, d.size());
    v.expect(is_simple(d, caps.con), "D(L) is simple");
    const std::size_t filters = count_filters_by_search(d);
    const std::size_t ideals = count_ideals_by_search(d);
    v.expect(filters == count_filters_by_search(lattice) + 2 * fat,
             "|Filt(D(L))| = |Filt(L)| + 2·|fat intervals|",
             count_filters_by_search(lattice) + 2 * fat, filters);
    v.expect(ideals == count_ideals_by_search(lattice) + 2 * fat,
             "|Id(D(L))| = |Id(L)| + 2·|fat intervals|", count_ideals_by_search(lattice) + 2 * fat,
             ideals);
    v.expect(all_filters(d).size() == filters, "generator enumeration agrees with search",
             filters, all_filters(d).size());
    v.note("size", d.size());
    v.note("fat_intervals", fat);
    return v.finish();
  });
}

CheckReport check_gcs_finite(const Lattice& s, const std::string& instance,
                             const CheckCaps& caps) {
  if (s.size() <= 2) throw Error(ErrorKind::SummandTooSmall, "S needs more than 2 elements");
  const auto witness = nlohmann::json{{"lattice", to_json(s)}};
  return guarded("gcs", instance, witness, [&] {
    Verdict v("gcs", instance);
    v.witness("lattice", to_json(s));
    const Lattice family[] = {s, named("B2")};
    const Lattice h = horizontal_sum(family).lattice;
    const std::size_t con01_size = con01(s, caps.con).size();
    const ConLattice con = all_congruences(h, caps.con);
    v.expect(con.size() == con01_size + 1, "|Con(S ⊞ B2)| = |Con₀₁(S)| + 1", con01_size + 1,
             con.size());
    if (con01_size == 1) v.expect(con.is_simple(), "S ⊞ B2 is simple when Con₀₁(S) = {Δ}");
    v.note("con01_trivial", con01_size == 1);
    return v.finish();
  });
}

CheckReport check_distributive(const Lattice& lattice, const std::string& instance,
                               const CheckCaps& caps) {
  if (!lattice.is_distributive()) {
    return {"distributive", instance, CheckStatus::skipped, {{"reason", "not distributive"}}};
  }
  const auto witness = nlohmann::json{{"lattice", to_json(lattice)}};
  return guarded("distributive", instance, witness, [&] {
    Verdict v("distributive", instance);
    v.witness("lattice", to_json(lattice));
    const std::size_t con_size = all_congruences(lattice, caps.con).size();
    const std::size_t filters = count_filters_by_search(lattice);
    v.expect(con_size >= filters, "|Con(L)| ≥ |Filt(L)|", filters, con_size);
    v.note("con_size", con_size);
    v.note("filters", filters);
    return v.finish();
  });
}

namespace {

constexpr std::string_view kSuiteNames[] = {"axioms", "prime", "lemma",  "counts",
                                            "spechsum", "cghsum", "multi", "dilate",
                                            "gcs",    "distributive"};

}  // namespace

std::span<const std::string_view> suite_names() noexcept { return kSuiteNames; }

std::vector<CheckReport> run_suite(const SuiteConfig& config) {
  std::set<std::string_view> selected;
  for (const auto& name : config.suites) {
    if (name == "all") {
      selected.insert(std::begin(kSuiteNames), std::end(kSuiteNames));
      continue;
    }
    auto it = std::find(std::begin(kSuiteNames), std::end(kSuiteNames), name);
    if (it == std::end(kSuiteNames)) throw Error(ErrorKind::BadConfig, "unknown suite '" + name + "'");
    selected.insert(*it);
  }
  if (selected.empty()) throw Error(ErrorKind::BadConfig, "no suites selected");

  auto entries = corpus(config.seed, config.count, config.max_size);
  for (std::size_t n = 1; n <= config.exhaustive; ++n) {
    for (auto& entry : all_lattices(n)) entries.push_back(std::move(entry));
  }
  std::mt19937_64 rng(config.seed ^ 0x5DEECE66DULL);
  auto draw = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  std::vector<std::size_t> pair_pool;
  std::vector<std::size_t> multi_pool;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::size_t n = entries[i].lattice.size();
    if (n > 2 && n <= config.caps.max_summand) pair_pool.push_back(i);
    if (n > 2 && n <= 6) multi_pool.push_back(i);
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (!pair_pool.empty()) {
    for (std::size_t k = 0; k < config.pairs; ++k) {
      pairs.emplace_back(pair_pool[draw(pair_pool.size())], pair_pool[draw(pair_pool.size())]);
    }
  }
  std::vector<std::vector<std::size_t>> families;
  if (!multi_pool.empty()) {
    for (std::size_t k = 0; k < config.pairs; ++k) {
      std::vector<std::size_t> members(3 + draw(2));
      for (auto& m : members) m = multi_pool[draw(multi_pool.size())];
      families.push_back(std::move(members));
    }
  }
  auto pair_name = [&](const std::pair<std::size_t, std::size_t>& p) {
    return entries[p.first].name + " ⊞ " + entries[p.second].name;
  };

  std::vector<CheckReport> reports;
  const auto& caps = config.caps;
  auto run_single = [&](std::string_view suite, const Lattice& lattice, const std::string& name) {
    if (suite == "axioms") {
      reports.push_back(check_lattice_axioms(lattice, name));
    } else if (suite == "prime") {
      reports.push_back(check_prime_remark(lattice, name, caps));
    } else if (suite == "lemma") {
      reports.push_back(check_irreducibility_lemma(lattice, name, caps));
    } else if (suite == "dilate" && !lattice.is_trivial()) {
      reports.push_back(check_dilate(lattice, name, caps));
    } else if (suite == "gcs" && lattice.size() > 2) {
      reports.push_back(check_gcs_finite(lattice, name, caps));
    } else if (suite == "distributive") {
      reports.push_back(check_distributive(lattice, name, caps));
    }
  };

  for (std::string_view suite : kSuiteNames) {
    if (!selected.contains(suite)) continue;
    if (suite == "counts" || suite == "spechsum" || suite == "cghsum") {
      for (const auto& p : pairs) {
        const Lattice& a = entries[p.first].lattice;
        const Lattice& b = entries[p.second].lattice;
        if (suite == "counts") reports.push_back(check_hsum_counts(a, b, pair_name(p)));
        if (suite == "spechsum") reports.push_back(check_spechsum(a, b, pair_name(p), caps));
        if (suite == "cghsum") reports.push_back(check_cghsum(a, b, pair_name(p), caps));
      }
    } else if (suite == "multi") {
      for (const auto& members : families) {
        std::vector<Lattice> family;
        std::string name;
        for (std::size_t m : members) {
          family.push_back(entries[m].lattice);
          name += (name.empty() ? "" : " ⊞ ") + entries[m].name;
        }
        reports.push_back(check_multi_hsum(family, name, caps));
      }
    } else {
      for (const auto& entry : entries) run_single(suite, entry.lattice, entry.name);
    }
  }

  if (config.inject_fault) {
    auto target = std::find_if(entries.begin(), entries.end(),
                               [](const CorpusEntry& e) { return e.lattice.size() >= 3; });
    if (target != entries.end()) {
      const Lattice& l = target->lattice;
      const Lattice broken = detail::with_corrupted_meet(l, l.top(), l.top(), l.bottom());
      const std::string name = "fault:" + target->name;
      reports.push_back(check_lattice_axioms(broken, name));
      for (std::string_view suite : kSuiteNames) {
        if (suite != "axioms" && selected.contains(suite)) run_single(suite, broken, name);
      }
    }
  }
  return reports;
}

std::string render_reports(std::span<const CheckReport> reports, bool failures_only) {
  std::ostringstream out;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  for (const auto& r : reports) {
    passed += r.status == CheckStatus::passed;
    failed += r.status == CheckStatus::failed;
    skipped += r.status == CheckStatus::skipped;
    if (failures_only && !r.failed()) continue;
    const char* tag = r.passed() ? "PASS" : r.failed() ? "FAIL" : "SKIP";
    out << tag << "  " << r.check_name << "  " << r.instance_descr << '\n';
    if (r.failed()) {
      auto details = r.details;
      details.erase("witness");
      out << "      " << details.dump() << '\n';
      out << "      witness: " << r.details.value("witness", nlohmann::json()).dump() << '\n';
    } else if (r.status == CheckStatus::skipped) {
      out << "      " << r.details.value("reason", std::string()) << '\n';
    }
  }
  out << reports.size() << " checks: " << passed << " passed, " << failed << " failed, "
      << skipped << " skipped\n";
  return out.str();
}

}  // namespace latcon
