#include <doctest.h>

#include <random>

#include "latcon/checks.hpp"
#include "latcon/congruence.hpp"
#include "latcon/corpus.hpp"
#include "latcon/filters.hpp"
#include "latcon/io.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace support;

namespace {

const std::vector<CorpusEntry>& entries() {
  static const auto c = corpus(2024, 60, 9);
  return c;
}

Partition random_partition(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> labels(n);
  const std::size_t blocks = 1 + rng() % n;
  for (auto& l : labels) l = rng() % blocks;
  return Partition::from_labelling(std::span<const std::size_t>(labels));
}

}  // namespace

TEST_CASE("Eq(n) is a lattice under eq_meet and eq_join") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const Partition p = random_partition(rng, n);
    const Partition q = random_partition(rng, n);
    const Partition r = random_partition(rng, n);
    CHECK(eq_join(p, q) == eq_join(q, p));
    CHECK(eq_meet(p, q) == eq_meet(q, p));
    CHECK(eq_join(p, eq_join(q, r)) == eq_join(eq_join(p, q), r));
    CHECK(eq_meet(p, eq_meet(q, r)) == eq_meet(eq_meet(p, q), r));
    CHECK(eq_join(p, eq_meet(p, q)) == p);
    CHECK(eq_meet(p, eq_join(p, q)) == p);
    CHECK(eq_leq(p, q) == (eq_meet(p, q) == p));
    CHECK(eq_leq(p, eq_join(p, q)));
    CHECK(eq_leq(eq_meet(p, q), q));
    CHECK(eq_leq(Partition(n), p));
    CHECK(eq_leq(p, nabla(n)));
  }
}

TEST_CASE("Con(L) is a sublattice of Eq(L) made of convex classes") {
  for (const auto& [name, l] : entries()) {
    const ConLattice con = all_congruences(l);
    const auto members = as_set(con.members());
    CHECK(members.contains(delta(l)));
    CHECK(members.contains(nabla(l)));
    for (const auto& theta : con.members()) {
      CHECK_MESSAGE(are_blocks_convex(l, theta), name);
      for (const auto& phi : con.members()) {
        CHECK(members.contains(eq_meet(theta, phi)));
        CHECK(members.contains(eq_join(theta, phi)));
      }
    }
  }
}

TEST_CASE("principal congruences are least") {
  for (const auto& [name, l] : entries()) {
    if (l.size() > 7) continue;
    const ConLattice con = all_congruences(l);
    for (Element a = 0; a < l.size(); ++a) {
      for (Element b = a + 1; b < l.size(); ++b) {
        const Partition cg = principal_congruence(l, a, b);
        CHECK(is_congruence(l, cg));
        CHECK(cg.same_block(a, b));
        for (const auto& theta : con.members()) {
          if (theta.same_block(a, b)) CHECK_MESSAGE(eq_leq(cg, theta), name);
        }
      }
    }
  }
}

TEST_CASE("derived structure on the corpus") {
  for (const auto& [name, l] : entries()) {
    const ConLattice con = all_congruences(l);
    const auto primes = as_set(con.prime());
    for (const auto& m : con.maximal()) CHECK_MESSAGE(primes.contains(m), name);
    CHECK_MESSAGE(complement_bijection_check(l), name);
    CHECK(all_congruences(dual(l)).size() == con.size());
    CHECK(all_filters(l).size() == all_ideals(dual(l)).size());
    CHECK(spec_filt(l).size() == spec_id(l).size());
    CHECK(lattice_from_json(to_json(l)) == l);
    for (const auto& theta : con.members()) {
      const Quotient q = quotient(l, theta);
      CHECK(q.lattice.size() == theta.block_count());
      for (Element x = 0; x < l.size(); ++x) {
        for (Element y = 0; y < l.size(); ++y) {
          CHECK(q.projection[l.meet(x, y)] == q.lattice.meet(q.projection[x], q.projection[y]));
          CHECK(q.projection[l.join(x, y)] == q.lattice.join(q.projection[x], q.projection[y]));
        }
      }
    }
  }
}

TEST_CASE("filters by generators, by search and by subset scan coincide") {
  for (const auto& [name, l] : entries()) {
    const std::size_t expected = oracle::filters(l).size();
    CHECK_MESSAGE(all_filters(l).size() == expected, name);
    CHECK_MESSAGE(count_filters_by_search(l) == expected, name);
  }
}
