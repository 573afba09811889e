#include "doctest.h"

#include "contentlab/descriptor.hpp"
#include "grammar_suite.hpp"

using namespace contentlab;

namespace {

ParseError parse_error(const char* text) {
  try {
    parse_ring(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no error for " << text);
  return ParseError(Errc::syntax, 0, "", "");
}

}  // namespace

TEST_CASE("ring descriptors") {
  CHECK(parse_ring("trunc(Z/2,4)")->size() == 16);
  CHECK(parse_ring("prod(Z/2,Z/3)")->size() == 6);
  CHECK(parse_ring("quot(trunc(Z/4,2); 2*x)")->size() == 8);
  CHECK(parse_ring("quot(Z/12; 4)")->descriptor() == "quot(Z/12; 4)");
  CHECK(parse_ring("quot(Z/12; 8)")->descriptor() == "quot(Z/12; 4)");
  CHECK(parse_ring("quot(Z/12; 0)")->size() == 12);
}

TEST_CASE("nested truncations name their variables x, z, ...") {
  auto r = parse_ring("trunc(trunc(Z/2,2),2)");
  const Elem xz = parse_ring_element("x*z", r);
  CHECK(r->name(xz) == "x*z");
  CHECK(r->name(parse_ring_element("z+x", r)) == "x+z");
  CHECK(r->mul(xz, xz) == r->zero());
  CHECK(parse_ring_element("x", r) != parse_ring_element("z", r));
  auto s = parse_algebra("quad(x*z)", r);
  CHECK(s->element_name(parse_element("y*y", s).coords) == "x*z");
}

TEST_CASE("parse errors carry positions") {
  auto e = parse_error("trunc(Z/0,2)");
  CHECK(e.code() == Errc::invalid_modulus);
  CHECK(e.position() == 8);

  e = parse_error("poly(Z/2,3)");
  CHECK(e.code() == Errc::unknown_constructor);
  CHECK(e.position() == 0);

  e = parse_error("trunc(Z/2 4)");
  CHECK(e.code() == Errc::syntax);
  CHECK(e.position() == 10);

  e = parse_error("Z/2)");
  CHECK(e.code() == Errc::syntax);
  CHECK(e.position() == 3);

  e = parse_error("");
  CHECK(e.code() == Errc::syntax);

  try {
    parse_ring("trunc(Z/2,20)");
    FAIL("expected cap error");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::size_cap);
  }
}

TEST_CASE("algebra descriptors") {
  auto base = parse_ring("trunc(Z/2,4)");
  auto s = parse_algebra("quad(x^3)", base);
  CHECK(s->descriptor() == "quad(x^3)");
  CHECK(s->generator_symbol() == "y");
  auto t = parse_algebra("trunc(2)", parse_ring("Z/4"));
  CHECK(t->generator_symbol() == "x");
  CHECK_THROWS_AS(parse_algebra("quad(z)", base), ParseError);
  CHECK_THROWS_AS(parse_algebra("monoid(/nonexistent/table)", base), Error);
  CHECK_THROWS_AS(parse_algebra("lie(2)", base), ParseError);
}

TEST_CASE("element expressions") {
  auto base = parse_ring("trunc(Z/2,4)");
  auto s = parse_algebra("quad(x^3)", base);
  CHECK(s->element_name(parse_element("y*y", s).coords) == "x^3");
  CHECK(s->element_name(parse_element("(x+y)^2", s).coords) == "x^2+x^3");
  CHECK(s->element_name(parse_element("0", s).coords) == "0");
  CHECK_THROWS_AS(parse_element("y*", s), ParseError);
  CHECK_THROWS_AS(parse_element("q", s), ParseError);
}

TEST_CASE("round trip over the grammar suite") {
  const auto suite = testing::grammar_suite();
  CHECK(suite.size() == 50);
  for (const auto& c : suite) {
    CAPTURE(c.base);
    CAPTURE(c.alg);
    CAPTURE(c.text);
    CHECK(testing::round_trip(c) == "");
  }
}
