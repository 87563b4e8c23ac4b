#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "latcon/error.hpp"
#include "latcon/expr.hpp"
#include "latcon/io.hpp"
#include "latcon/isomorphism.hpp"
#include "support.hpp"

using namespace support;

namespace {

bool evaluates_to(const char* text, const Lattice& expected) {
  return isomorphic(eval(parse_expr(text)), expected).has_value();
}

}  // namespace

TEST_CASE("expressions evaluate to the expected lattices") {
  CHECK(evaluates_to("hsum(chain(3),chain(4))", named("N5")));
  CHECK(evaluates_to("D(chain(3))", named("M3")));
  CHECK(evaluates_to("hsum(chain(3),chain(3),chain(3))", named("M3")));
  CHECK(evaluates_to("hsum(chain(3), osum(B2, chain(2)))", named("K")));
  CHECK(evaluates_to("ihsum(chain(3), \"0\", \"1\", B2)", named("M3")));
  CHECK(evaluates_to("  osum ( N5 , M3 ) ", osum(named("N5"), named("M3"))));
  CHECK(eval(parse_expr("div(1)")).is_trivial());
  CHECK(eval(parse_expr("K")) == named("K"));
}

TEST_CASE("syntax errors carry a 1-based offset") {
  try {
    parse_expr("osum(chain(2)");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 14);
  }
  try {
    parse_expr("hsum(B2,, B2)");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 9);
  }
  for (const char* bad : {"", "chain", "chain(x)", "Q5", "B2 B2", "file(\"x)", "N5()"}) {
    CHECK_THROWS_AS(parse_expr(bad), SyntaxError);
  }
}

TEST_CASE("arity errors") {
  for (const char* bad : {"hsum(B2)", "osum(B2,B2,B2)", "D(B2,B2)", "chain(3,4)",
                          "ihsum(B2,\"0\",\"1\")"}) {
    try {
      parse_expr(bad);
      FAIL("expected an arity error for ", bad);
    } catch (const Error& e) {
      CHECK_MESSAGE(e.kind() == ErrorKind::ArityError, bad);
    }
  }
}

TEST_CASE("render is canonical and parse inverts it") {
  for (const char* text :
       {"chain(3)", "B2", "M3", "N5", "K", "div(12)", "file(\"a \\\"b\\\".json\")",
        "osum(B2,chain(2))", "hsum(chain(3),chain(3),N5)", "ihsum(N5,\"y\",\"1\",B2)",
        "D(hsum(chain(3),D(chain(4))))"}) {
    const LatticeExpr e = parse_expr(text);
    CHECK(render(e) == text);
    CHECK(parse_expr(render(e)) == e);
  }
  CHECK(render(parse_expr(" hsum( chain(3) ,\tB2 ) ")) == "hsum(chain(3),B2)");
}

TEST_CASE("evaluation errors propagate") {
  CHECK_THROWS_AS(eval(parse_expr("ihsum(N5,\"z\",\"1\",B2)")), Error);
  CHECK_THROWS_AS(eval(parse_expr("ihsum(N5,\"q\",\"1\",B2)")), Error);
  CHECK_THROWS_AS(eval(parse_expr("hsum(B2,div(1))")), Error);
  try {
    eval(parse_expr("file(\"/nonexistent.json\")"));
    FAIL("expected an io error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IoError);
  }
}

TEST_CASE("export to json and re-import via file()") {
  const Lattice k = eval(parse_expr("hsum(chain(3),osum(B2,chain(2)))"));
  const std::string path = "latcon_expr_roundtrip.json";
  {
    std::ofstream out(path);
    out << to_json(k).dump();
  }
  CHECK(eval(parse_expr("file(\"" + path + "\")")) == k);
  std::remove(path.c_str());
}
