#include <doctest.h>

#include "latcon/checks.hpp"
#include "latcon/error.hpp"
#include "latcon/filters.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace support;

namespace {

std::set<ElementSet> members(const SubsetFamily& f) {
  std::set<ElementSet> out;
  for (const auto& m : f.members) out.insert(m.elements);
  return out;
}

}  // namespace

TEST_CASE("generated filters and ideals") {
  const Lattice n5 = named("N5");
  const Element x[] = {n5.at("x")};
  CHECK(generated_filter(n5, x) == set(n5, {"x", "1"}));
  const Element zero[] = {n5.bottom()};
  CHECK(generated_filter(n5, zero) == carrier(n5));
  CHECK(generated_ideal(n5, x) == set(n5, {"0", "x"}));

  const Lattice h = hsum({chain(3), chain(4)});
  const Element pair[] = {h.at("0.m"), h.at("1.a")};
  CHECK(generated_filter(h, pair) == carrier(h));
  CHECK(generated_ideal(h, pair) == carrier(h));
  CHECK_THROWS_AS(generated_filter(n5, std::span<const Element>{}), Error);
}

TEST_CASE("is_filter") {
  for (const Lattice& l : {named("N5"), chain(3), div(30)}) CHECK(is_filter(l, {l.top()}));
  const Lattice l3 = chain(3);
  CHECK(is_filter(l3, set(l3, {"m", "1"})));
  const Lattice b2 = named("B2");
  CHECK_FALSE(is_filter(b2, set(b2, {"0", "a"})));
  CHECK_FALSE(is_filter(b2, set(b2, {"a", "b", "1"})));
  CHECK_FALSE(is_filter(b2, {}));
  CHECK(is_ideal(b2, set(b2, {"0", "a"})));
}

TEST_CASE("filter and ideal counts") {
  CHECK(all_filters(named("N5")).size() == 5);
  CHECK(all_filters(hsum({named("N5"), named("N5")})).size() == 8);
  CHECK(all_ideals(div(12)).size() == 6);
}

TEST_CASE("prime filters") {
  const Lattice b2 = named("B2");
  CHECK(is_prime_filter(b2, set(b2, {"a", "1"})));
  CHECK_FALSE(is_prime_filter(b2, set(b2, {"1"})));
  CHECK_FALSE(is_prime_filter(b2, carrier(b2)));
  const Lattice m3 = named("M3");
  for (const auto& f : all_filters(m3).members) CHECK_FALSE(is_prime_filter(m3, f.elements));
  try {
    is_prime_filter(b2, set(b2, {"0", "a"}));
    FAIL("expected NotAFilter");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAFilter);
  }
}

TEST_CASE("spectra of the example lattices") {
  const Lattice n5 = named("N5");
  CHECK(members(spec_filt(n5)) ==
        std::set<ElementSet>{set(n5, {"x", "1"}), set(n5, {"y", "z", "1"})});
  CHECK(members(spec_id(n5)) == std::set<ElementSet>{set(n5, {"0", "x"}), set(n5, {"0", "y", "z"})});
  const Lattice k = named("K");
  CHECK(members(spec_filt(k)) == std::set<ElementSet>{set(k, {"m", "1"})});
  CHECK(members(spec_id(k)) == std::set<ElementSet>{set(k, {"0", "n", "p", "q"})});
  CHECK(spec_filt(named("M3")).size() == 0);
  CHECK(spec_id(named("M3")).size() == 0);
  const Lattice b2 = named("B2");
  CHECK(members(spec_filt(b2)) == std::set<ElementSet>{set(b2, {"a", "1"}), set(b2, {"b", "1"})});
  CHECK(members(spec_id(b2)) == std::set<ElementSet>{set(b2, {"0", "a"}), set(b2, {"0", "b"})});
}

TEST_CASE("congruences from prime filters") {
  const Lattice b2 = named("B2");
  CHECK(prime_filter_congruence(b2, set(b2, {"b", "1"})) == eq(b2, {{"0", "a"}, {"b", "1"}}));
  const Lattice n5 = named("N5");
  CHECK(prime_filter_congruence(n5, set(n5, {"x", "1"})) == eq(n5, {{"0", "y", "z"}, {"x", "1"}}));
  const Lattice k = named("K");
  CHECK(prime_filter_congruence(k, set(k, {"m", "1"})) == eq(k, {{"m", "1"}, {"0", "n", "p", "q"}}));
  CHECK_THROWS_AS(prime_filter_congruence(b2, set(b2, {"1"})), Error);

  const ElementSet n5_primes[] = {set(n5, {"x", "1"}), set(n5, {"y", "z", "1"})};
  CHECK(prime_family_congruence(n5, n5_primes) == eq(n5, {{"y", "z"}}));
  const ElementSet one[] = {set(n5, {"x", "1"})};
  CHECK(prime_family_congruence(n5, one) == eq(n5, {{"x", "1"}, {"0", "y", "z"}}));
  const ElementSet b2_primes[] = {set(b2, {"a", "1"}), set(b2, {"b", "1"})};
  CHECK(prime_family_congruence(b2, b2_primes) == delta(b2));
  CHECK_THROWS_AS(prime_family_congruence(b2, std::span<const ElementSet>{}), Error);
}

TEST_CASE("prime filters and prime ideals are complements") {
  for (const Lattice& l : {named("N5"), named("M3"), named("K"), div(30), chain(5)}) {
    CHECK(complement_bijection_check(l));
  }
}

TEST_CASE("generator enumeration agrees with exhaustive subset filtering") {
  for (const Lattice& l : {named("N5"), named("K"), div(30), div(36), chain(7),
                           hsum({named("N5"), named("K")}), osum(named("M3"), named("B2"))}) {
    const auto expected = oracle::filters(l);
    CHECK(members(all_filters(l)) == expected);
    CHECK(count_filters_by_search(l) == expected.size());
    CHECK(count_ideals_by_search(l) == oracle::filters(dual(l)).size());
  }
}

TEST_CASE("render_family") {
  const Lattice n5 = named("N5");
  const std::string text = render_family(n5, spec_filt(n5));
  CHECK(text == "P  x  {x,1}\nP  y  {y,z,1}\n");
}
