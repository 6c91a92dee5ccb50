#include <doctest.h>

#include "dgalab/errors.hpp"
#include "dgalab/io.hpp"
#include "oracles.hpp"

using namespace dgalab;

TEST_CASE("a1.dga parses with its fundamental class, alias and basis") {
  DgaDocument d = load_dga(oracle::fixture("a1.dga"));
  CHECK(d.dga.name() == "A1");
  CHECK(d.dga.size() == 6);
  REQUIRE(d.fundamental);
  CHECK(d.dga.algebra().format(d.fundamental->representative) == "x2^16");
  CHECK(d.fundamental->scale == 1);
  REQUIRE(d.basis);
  CHECK(d.basis->size() == 4);
  REQUIRE(d.aliases.size() == 1);
  CHECK(d.aliases[0].first == "w");
}

TEST_CASE("serialization round-trips") {
  for (const char* f : {"a1.dga", "a2.dga", "a3.dga", "a4.dga", "s2.dga"}) {
    DgaDocument d = load_dga(oracle::fixture(f));
    std::string s = serialize(d);
    DgaDocument e = parse_dga(s);
    CHECK(e.dga.algebra() == d.dga.algebra());
    CHECK(e.dga.differentials() == d.dga.differentials());
    CHECK(e.dga.name() == d.dga.name());
    CHECK(serialize(e) == s);
    REQUIRE(e.fundamental.has_value() == d.fundamental.has_value());
    if (d.fundamental) CHECK(e.fundamental->representative == d.fundamental->representative);
    CHECK(e.basis == d.basis);
  }
}

TEST_CASE("scaled fundamental classes") {
  DgaDocument d = parse_dga("dga S\ngenerator e 2\ngenerator f 3\nd f = e^2\nfundamental e scale 3/2\n");
  REQUIRE(d.fundamental);
  CHECK(d.fundamental->scale == Q(3, 2));
  CHECK(parse_dga(serialize(d)).fundamental->scale == Q(3, 2));
}

TEST_CASE("diagnostics carry line and column") {
  auto expect_line = [](const std::string& text, int line) {
    try {
      parse_dga(text);
      FAIL("expected an error");
    } catch (const InputError& e) {
      CHECK_MESSAGE(e.line() == line, e.what());
    }
  };
  expect_line("dga A\ngenerator x1 2\ngenerator y1 9\nd y1 = x1^2\n", 4);
  expect_line("dga A\ngenerator x1 2\nd x1 = q\n", 3);
  expect_line("dga A\ngenerator x1 2\ngenerator x1 4\n", 3);
  expect_line("dga A\ngenerator x1 two\n", 2);
  expect_line("dga A\ngenerator x1 2\nfundamental x1 scale 1/0\n", 3);
  expect_line("dga A\ngenerator x1 2\nwhatever\n", 3);
}

TEST_CASE("digest is stable") {
  CHECK(digest("") == "cbf29ce484222325");
  CHECK(digest("abc") == digest("abc"));
  CHECK(digest("abc") != digest("abd"));
}
