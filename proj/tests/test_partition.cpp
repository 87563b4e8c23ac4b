#include <doctest.h>

#include "latcon/error.hpp"
#include "support.hpp"

using namespace support;

TEST_CASE("eq_from_blocks") {
  const Lattice b2 = named("B2");
  const Partition alpha = eq(b2, {{"0", "a"}, {"b", "1"}});
  CHECK(alpha.block_count() == 2);
  CHECK(alpha.same_block(b2.at("0"), b2.at("a")));
  CHECK(eq(b2, {}) == delta(b2));
  const Lattice n5 = named("N5");
  const Partition zeta = eq(n5, {{"0"}, {"x"}, {"y", "z"}, {"1"}});
  CHECK(zeta.block_count() == 4);
  CHECK(render(n5, zeta) == "{0}{x}{y,z}{1}");
  CHECK_THROWS_AS(eq(b2, {{"0", "a"}, {"a", "1"}}), Error);
  try {
    eq(b2, {{"0", "a"}, {"a", "1"}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OverlappingBlocks);
  }
}

TEST_CASE("delta and nabla") {
  const Lattice l3 = chain(3);
  CHECK(delta(l3).block_count() == 3);
  CHECK(nabla(l3).block_count() == 1);
  const Partition p = eq(l3, {{"m", "1"}});
  CHECK(eq_leq(delta(l3), p));
  CHECK(eq_leq(p, nabla(l3)));
  CHECK_FALSE(eq_leq(nabla(l3), p));
}

TEST_CASE("meet and join of equivalences") {
  const Lattice b2 = named("B2");
  const Partition alpha = eq(b2, {{"0", "a"}, {"b", "1"}});
  const Partition beta = eq(b2, {{"0", "b"}, {"a", "1"}});
  CHECK(eq_meet(alpha, beta) == delta(b2));
  CHECK(eq_join(alpha, beta) == nabla(b2));
  CHECK(eq_join(alpha, delta(b2)) == alpha);

  const Lattice n5 = named("N5");
  const Partition xi = eq(n5, {{"0", "x"}, {"y", "z", "1"}});
  const Partition chi = eq(n5, {{"0", "y", "z"}, {"x", "1"}});
  CHECK(eq_meet(xi, chi) == eq(n5, {{"y", "z"}}));

  CHECK_THROWS_AS(eq_leq(delta(b2), delta(n5)), Error);
  CHECK_THROWS_AS(eq_join(delta(b2), delta(n5)), Error);
}

TEST_CASE("is_congruence") {
  const Lattice n5 = named("N5");
  CHECK(is_congruence(n5, eq(n5, {{"y", "z"}})));
  CHECK_FALSE(is_congruence(n5, eq(n5, {{"x", "y"}})));
  CHECK_FALSE(is_congruence(n5, eq(n5, {{"0", "z"}})));
  CHECK(is_congruence(n5, delta(n5)));
  CHECK(is_congruence(n5, nabla(n5)));
  const Lattice l4 = chain(4);
  CHECK_FALSE(is_congruence(l4, eq(l4, {{"0", "b"}})));
  CHECK_FALSE(are_blocks_convex(l4, eq(l4, {{"0", "b"}})));
  CHECK(are_blocks_convex(l4, eq(l4, {{"0", "a", "b"}})));
}

TEST_CASE("restrict") {
  const Lattice l3 = chain(3);
  const Lattice n5 = hsum({l3, chain(4)});
  const ElementSet first{n5.at("0"), n5.at("0.m"), n5.at("1")};
  CHECK(restrict(nabla(n5), first) == nabla(l3));
  CHECK(restrict(delta(n5), first) == delta(l3));

  const Lattice m3 = hsum({l3, l3, l3});
  const ElementSet middle{m3.at("0"), m3.at("1.m"), m3.at("1")};
  CHECK(restrict(nabla(m3), middle) == nabla(l3));
  CHECK_THROWS_AS(restrict(delta(l3), {}), Error);
}

TEST_CASE("union-find keeps the smaller root") {
  UnionFind uf(5);
  CHECK(uf.unite(3, 1));
  CHECK(uf.unite(4, 3));
  CHECK_FALSE(uf.unite(1, 4));
  CHECK(uf.find(4) == 1);
  const Partition p = uf.to_partition();
  CHECK(p.assignment() == std::vector<Element>{0, 1, 2, 1, 1});
}
