#include <catch2/catch_amalgamated.hpp>

#include "boxkit/formula.hpp"
#include "boxkit/parse.hpp"
#include "boxkit/print.hpp"
#include "boxkit/gen.hpp"

using namespace boxkit;

TEST_CASE("parsing core connectives and precedence", "[syntax]") {
  Formula x = Formula::var("x"), y = Formula::var("y");

  CHECK(parse("x -> []x") == Formula::imp(x, Formula::box(x)));
  CHECK(parse("x & y | y") == Formula::or_(Formula::and_(x, y), y));
  CHECK(parse("x -> y -> x") == Formula::imp(x, Formula::imp(y, x)));
  CHECK(parse("~x") == Formula::imp(x, Formula::bot()));
  CHECK(parse("T") == Formula::imp(Formula::bot(), Formula::bot()));
  CHECK(parse("Ka -> (b -> Ka)") ==
        Formula::imp(Formula::k(Formula::var("a")),
                     Formula::imp(Formula::var("b"), Formula::k(Formula::var("a")))));
}

TEST_CASE("abbreviations expand while parsing", "[syntax]") {
  Formula x = Formula::var("x");
  // x == ~~x is Box((x -> ~~x) & (~~x -> x)) in full
  Formula nn = Formula::neg(Formula::neg(x));
  CHECK(parse("x == ~~x") == Formula::box(Formula::and_(Formula::imp(x, nn), Formula::imp(nn, x))));
  CHECK(parse("<>_|_") == Formula::neg(Formula::box(Formula::neg(Formula::bot()))));
  CHECK(parse("x <-> y") == Formula::iff(Formula::var("x"), Formula::var("y")));
  // no derived node anywhere: every formula is built from the 7 constructors,
  // so the diamond really is ~[]~
  Formula d = parse("<>x");
  REQUIRE(d.conn() == Conn::Imp);
  CHECK(d.right().is_bot());
  CHECK(d.left().conn() == Conn::Box);
}

TEST_CASE("unicode aliases accepted", "[syntax]") {
  CHECK(parse("¬x") == parse("~x"));
  CHECK(parse("□x → x") == parse("[]x -> x"));
  CHECK(parse("x ≡ ⊤") == parse("x == T"));
  CHECK(parse("◇x ∨ ⊥") == parse("<>x | _|_"));
  CHECK(parse("x ∧ y ↔ y ∧ x") == parse("x & y <-> y & x"));
}

TEST_CASE("parse errors carry byte offsets and expectations", "[syntax]") {
  try {
    parse("x -> )");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset == 5);
    CHECK(!e.expected.empty());
  }
  CHECK_THROWS_AS(parse("x &"), ParseError);
  CHECK_THROWS_AS(parse("(x -> y"), ParseError);
  CHECK_THROWS_AS(parse("x <-> y <-> z"), ParseError);  // lowest level non-associative
  CHECK_THROWS_AS(parse(""), ParseError);
}

TEST_CASE("printer resugars outermost-first", "[syntax]") {
  Formula x = Formula::var("x"), y = Formula::var("y");
  CHECK(print(Formula::imp(x, Formula::bot())) == "~x");
  CHECK(print(Formula::box(Formula::and_(Formula::imp(x, y), Formula::imp(y, x)))) == "x == y");
  CHECK(print(x) == "x");
  CHECK(print(Formula::top()) == "T");
  CHECK(print(Formula::diamond(x)) == "<>x");
  CHECK(print(Formula::iff(x, y)) == "x <-> y");
  CHECK(print(Formula::neg(Formula::top())) == "~T");
  CHECK(print(parse("(x -> y) -> x")) == "(x -> y) -> x");
  CHECK(print(parse("x -> y -> x")) == "x -> y -> x");
}

TEST_CASE("substitution is simultaneous and capture-free", "[syntax]") {
  Formula x = Formula::var("x");
  CHECK(substitute(Formula::box(x), "x", Formula::bot()) == Formula::box(Formula::bot()));
  CHECK(substitute(parse("x -> y"), "x", parse("y & y")) == parse("(y & y) -> y"));

  Formula phi = parse("[]p -> p");
  CHECK(substitute(parse("[](p <-> x)"), "x", phi) ==
        Formula::box(Formula::iff(Formula::var("p"), phi)));
  CHECK(substitute(phi, "x", parse("q")) == phi);
  CHECK(substitute(phi, "p", Formula::var("p")) == phi);

  // simultaneous: x:=y, y:=x swaps rather than chains
  CHECK(substitute_all(parse("x -> y"), {{"x", Formula::var("y")}, {"y", Formula::var("x")}}) ==
        parse("y -> x"));
}

TEST_CASE("skeleton abstracts maximal modal subformulas", "[syntax]") {
  auto s1 = skeleton(parse("[]a"));
  CHECK(s1.propositional == Formula::var("_s0"));
  REQUIRE(s1.binding.size() == 1);
  CHECK(s1.binding[0].second == parse("[]a"));

  auto s2 = skeleton(parse("Ka -> (b -> Ka)"));
  CHECK(s2.propositional == parse("_s0 -> (b -> _s0)"));
  CHECK(s2.binding.size() == 1);

  auto s3 = skeleton(parse("[]a -> []a"));
  CHECK(s3.propositional == parse("_s0 -> _s0"));
  CHECK(s3.binding.size() == 1);

  // nested modal operators are swallowed by the outermost one
  auto s4 = skeleton(parse("[](Ka -> a) -> Kb"));
  CHECK(s4.propositional == parse("_s0 -> _s1"));
  CHECK(s4.binding.size() == 2);
}

TEST_CASE("round trips on random formulas", "[syntax]") {
  gen::Rng rng(0x5eed5eedULL);
  for (int i = 0; i < 1000; ++i) {
    Formula f = gen::random_formula(rng, 8, Language::Fm);
    Formula g = parse(print(f));
    REQUIRE(g == f);
  }
}

TEST_CASE("skeleton inverts via its binding on random formulas", "[syntax]") {
  gen::Rng rng(0xabcdefULL);
  for (int i = 0; i < 500; ++i) {
    Formula f = gen::random_formula(rng, 6, Language::Fm);
    auto s = skeleton(f);
    CHECK(s.propositional.in_language(Language::Fm0));
    CHECK(apply_binding(s.propositional, s.binding) == f);
  }
}
