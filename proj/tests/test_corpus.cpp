#include <doctest.h>

#include "latcon/checks.hpp"
#include "latcon/corpus.hpp"
#include "latcon/error.hpp"
#include "latcon/isomorphism.hpp"
#include "support.hpp"

using namespace support;

TEST_CASE("corpus with no random entries holds the named lattices") {
  const auto entries = corpus(1, 0, 12);
  std::vector<std::string> names;
  for (const auto& e : entries) names.push_back(e.name);
  CHECK(names == std::vector<std::string>{"chain(2)", "chain(3)", "chain(4)", "chain(5)", "B2",
                                          "M3", "N5", "K", "div(6)", "div(8)", "div(12)",
                                          "div(30)"});
  CHECK(corpus(1, 0, 4).size() == 6);
}

TEST_CASE("corpus is deterministic and respects the size cap") {
  const auto a = corpus(42, 40, 9);
  const auto b = corpus(42, 40, 9);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].lattice == b[i].lattice);
    CHECK(a[i].lattice.size() <= 9);
    CHECK(check_lattice_axioms(a[i].lattice, a[i].name).passed());
  }
  const auto c = corpus(43, 40, 9);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) differs = differs || !(a[i].lattice == c[i].lattice);
  CHECK(differs);
  CHECK_THROWS_AS(corpus(1, 1, 1), Error);
}

TEST_CASE("exhaustive enumeration matches the known numbers of lattices") {
  const std::size_t expected[] = {1, 1, 1, 2, 5, 15, 53};
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto all = all_lattices(n);
    CHECK_MESSAGE(all.size() == expected[n - 1], n);
    for (const auto& e : all) CHECK(e.lattice.size() == n);
  }
  const auto five = all_lattices(5);
  for (const char* name : {"M3", "N5"}) {
    CHECK(std::any_of(five.begin(), five.end(), [&](const CorpusEntry& e) {
      return isomorphic(e.lattice, named(name)).has_value();
    }));
  }
  CHECK_THROWS_AS(all_lattices(8), Error);
  CHECK_THROWS_AS(all_lattices(0), Error);
}
