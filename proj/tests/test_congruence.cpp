#include <doctest.h>

#include "latcon/congruence.hpp"
#include "latcon/error.hpp"
#include "latcon/isomorphism.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace support;

TEST_CASE("principal congruences") {
  const Lattice n5 = named("N5");
  CHECK(principal_congruence(n5, n5.at("y"), n5.at("z")) == eq(n5, {{"y", "z"}}));
  CHECK(principal_congruence(n5, n5.bottom(), n5.top()) == nabla(n5));
  const Lattice m3 = named("M3");
  CHECK(principal_congruence(m3, m3.at("u"), m3.at("v")) == nabla(m3));
  CHECK(principal_congruence(n5, n5.at("x"), n5.at("x")) == delta(n5));

  CHECK(congruence_generated(n5, {}) == delta(n5));
  const std::pair<Element, Element> zero_x[] = {{n5.at("0"), n5.at("x")}};
  CHECK(congruence_generated(n5, zero_x) == eq(n5, {{"0", "x"}, {"y", "z", "1"}}));
  const Lattice b2 = named("B2");
  const std::pair<Element, Element> zero_a[] = {{b2.at("0"), b2.at("a")}};
  CHECK(congruence_generated(b2, zero_a) == eq(b2, {{"0", "a"}, {"b", "1"}}));
}

TEST_CASE("Con of the example lattices") {
  const Lattice b2 = named("B2");
  const ConLattice con_b2 = all_congruences(b2);
  const Partition alpha = eq(b2, {{"0", "a"}, {"b", "1"}});
  const Partition beta = eq(b2, {{"0", "b"}, {"a", "1"}});
  CHECK(as_set(con_b2.members()) == std::set<Partition>{delta(b2), alpha, beta, nabla(b2)});
  CHECK(isomorphic(con_b2.as_lattice(), b2).has_value());

  const Lattice m3 = named("M3");
  CHECK(as_set(all_congruences(m3).members()) == std::set<Partition>{delta(m3), nabla(m3)});

  const Lattice n5 = named("N5");
  const Partition xi = eq(n5, {{"0", "x"}, {"y", "z", "1"}});
  const Partition chi = eq(n5, {{"0", "y", "z"}, {"x", "1"}});
  const Partition zeta = eq(n5, {{"0"}, {"x"}, {"y", "z"}, {"1"}});
  const ConLattice con_n5 = all_congruences(n5);
  CHECK(as_set(con_n5.members()) == std::set<Partition>{delta(n5), zeta, xi, chi, nabla(n5)});
  CHECK(con_n5.leq(*con_n5.index_of(zeta), *con_n5.index_of(xi)));
  CHECK(con_n5.leq(*con_n5.index_of(zeta), *con_n5.index_of(chi)));

  const Lattice k = named("K");
  const Partition mu = eq(k, {{"m", "1"}, {"0", "n", "p", "q"}});
  const ConLattice con_k = all_congruences(k);
  CHECK(con_k.members() == std::vector<Partition>{delta(k), mu, nabla(k)});
  CHECK(isomorphic(con_k.as_lattice(), chain(3)).has_value());
}

TEST_CASE("members are ordered with Δ first and ∇ last") {
  const ConLattice con = all_congruences(named("N5"));
  CHECK(con.delta_index() == 0);
  CHECK(con.nabla_index() == con.size() - 1);
  for (std::size_t i = 0; i + 1 < con.size(); ++i) {
    CHECK(con[i].block_count() >= con[i + 1].block_count());
  }
}

TEST_CASE("Con01 and its greatest element") {
  const Lattice b2 = named("B2");
  CHECK(con01(b2) == std::vector<Partition>{delta(b2)});
  const Lattice n5 = named("N5");
  CHECK(as_set(con01(n5)) == std::set<Partition>{delta(n5), eq(n5, {{"y", "z"}})});
  CHECK(mu_con01(n5) == eq(n5, {{"y", "z"}}));
  const Lattice k = named("K");
  CHECK(mu_con01(k) == delta(k));
}

TEST_CASE("maximal, prime and two-class congruences") {
  const Lattice b2 = named("B2");
  const Partition alpha = eq(b2, {{"0", "a"}, {"b", "1"}});
  const Partition beta = eq(b2, {{"0", "b"}, {"a", "1"}});
  CHECK(as_set(maximal_congruences(b2)) == std::set<Partition>{alpha, beta});
  CHECK(as_set(two_class_congruences(b2)) == std::set<Partition>{alpha, beta});
  CHECK(two_class_congruences(named("M3")).empty());
  const Lattice k = named("K");
  CHECK(two_class_congruences(k) == std::vector<Partition>{eq(k, {{"m", "1"}, {"0", "n", "p", "q"}})});

  // Δ on the 3-chain is the meet of its two coatoms, neither below Δ.
  const Lattice l3 = chain(3);
  const auto prime = prime_congruences(l3);
  CHECK(std::find(prime.begin(), prime.end(), delta(l3)) == prime.end());
  CHECK(prime.size() == 2);

  for (const Lattice& l : {named("N5"), named("K"), div(12), chain(4), named("M3")}) {
    const auto primes = as_set(prime_congruences(l));
    for (const auto& m : maximal_congruences(l)) CHECK(primes.contains(m));
  }
}

TEST_CASE("simplicity and subdirect irreducibility") {
  CHECK(is_simple(named("M3")));
  CHECK_FALSE(is_simple(chain(3)));
  CHECK(is_simple(chain(2)));
  CHECK_FALSE(is_simple(chain(1)));
  for (const char* name : {"M3", "N5", "K"}) {
    CHECK_MESSAGE(is_subdirectly_irreducible(named(name)), name);
  }
  CHECK_FALSE(is_subdirectly_irreducible(named("B2")));
  CHECK(monolith(named("M3")) == nabla(named("M3")));
  const Lattice n5 = named("N5");
  CHECK(monolith(n5) == eq(n5, {{"y", "z"}}));
}

TEST_CASE("quotients") {
  const Lattice n5 = named("N5");
  const Quotient by_xi = quotient(n5, eq(n5, {{"0", "x"}, {"y", "z", "1"}}));
  CHECK(by_xi.lattice.size() == 2);
  const Quotient by_delta = quotient(n5, delta(n5));
  CHECK(isomorphic(by_delta.lattice, n5).has_value());
  const Quotient by_zeta = quotient(n5, eq(n5, {{"y", "z"}}));
  CHECK(isomorphic(by_zeta.lattice, named("B2")).has_value());
  CHECK(by_zeta.lattice.find("{y,z}"));
  CHECK(by_zeta.projection[n5.at("y")] == by_zeta.projection[n5.at("z")]);
  CHECK_THROWS_AS(quotient(n5, eq(n5, {{"x", "y"}})), Error);
}

TEST_CASE("caps") {
  ConOptions tight;
  tight.max_elements = 4;
  CHECK_THROWS_AS(all_congruences(named("N5"), tight), Error);
  ConOptions few;
  few.max_members = 3;
  try {
    all_congruences(named("N5"), few);
    FAIL("expected a cap error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeCapExceeded);
  }
}

TEST_CASE("|Con(div(12))| = 8") {
  const Lattice d12 = div(12);
  CHECK(all_congruences(d12).size() == 8);
  CHECK(oracle::congruences(d12).size() == 8);
}

TEST_CASE("join closure agrees with exhaustive partition filtering") {
  for (const Lattice& l :
       {named("B2"), named("M3"), named("N5"), named("K"), div(12), div(30), chain(6),
        hsum({named("N5"), chain(3)}), osum(named("B2"), named("B2")), dual(named("K"))}) {
    const ConLattice con = all_congruences(l);
    std::set<oracle::Rgs> ours;
    for (const auto& p : con.members()) ours.insert(oracle::normalize(p.assignment()));
    CHECK(ours == oracle::congruences(l));
  }
}
