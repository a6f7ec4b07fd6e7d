#include <catch2/catch_amalgamated.hpp>

#include "boxkit/calculi.hpp"
#include "boxkit/fixtures.hpp"
#include "boxkit/parse.hpp"
#include "boxkit/print.hpp"
#include "boxkit/gen.hpp"

using namespace boxkit;

namespace {

// Brute-force check that f is a substitution instance of some intuitionistic
// theorem: enumerate every way of carving f into abstracted chunks (equal
// chunks share a variable) and test each propositional shell.
void shells(const Formula& f, std::vector<Formula>& out) {
  out.push_back(Formula::var("#" + print(f)));  // abstract the whole subtree
  switch (f.conn()) {
    case Conn::Var:
    case Conn::Bot: out.push_back(f); return;
    case Conn::And:
    case Conn::Or:
    case Conn::Imp: {
      std::vector<Formula> ls, rs;
      shells(f.left(), ls);
      shells(f.right(), rs);
      for (const auto& l : ls)
        for (const auto& r : rs) {
          if (f.conn() == Conn::And) out.push_back(Formula::and_(l, r));
          if (f.conn() == Conn::Or) out.push_back(Formula::or_(l, r));
          if (f.conn() == Conn::Imp) out.push_back(Formula::imp(l, r));
        }
      return;
    }
    default: return;  // modal nodes can only be swallowed whole
  }
}

bool int_instance_brute(const Formula& f) {
  std::vector<Formula> cands;
  shells(f, cands);
  for (const auto& shell : cands)
    if (shell.in_language(Language::Fm0) && ipc_theorem({}, shell)) return true;
  return false;
}

}  // namespace

TEST_CASE("axiom scheme recognition", "[calculi]") {
  CHECK(is_axiom_instance(LogicId::L3, parse("[](x | y) -> ([]x | []y)")) == SchemeId::A1);
  CHECK(is_axiom_instance(LogicId::L5, parse("x | ~x")) == std::nullopt);  // theorem scheme only
  CHECK(is_axiom_instance(LogicId::EL5, parse("Ka -> (b -> Ka)")) == SchemeId::INT);
  CHECK(is_axiom_instance(LogicId::L3, parse("[]x -> x")) == SchemeId::A2);
  CHECK(is_axiom_instance(LogicId::L3, parse("[]x -> [][]x")) == std::nullopt);  // A4 not in L3
  CHECK(is_axiom_instance(LogicId::L4, parse("[]x -> [][]x")) == SchemeId::A4);
  CHECK(is_axiom_instance(LogicId::L5, parse("~[]x -> []~[]x")) == SchemeId::A5);
  CHECK(is_axiom_instance(LogicId::L, parse("[](x->y) -> ([](y->z) -> [](x->z))")) == SchemeId::TRANS);
  CHECK(is_axiom_instance(LogicId::L3, parse("[](x->y) -> ([](y->z) -> [](x->z))")) == std::nullopt);
  CHECK(is_axiom_instance(LogicId::EL5m, parse("K(x -> y) -> (Kx -> Ky)")) == SchemeId::KBel);
  CHECK(is_axiom_instance(LogicId::EL5m, parse("[]x -> []Kx")) == SchemeId::CoRe);
  CHECK(is_axiom_instance(LogicId::EL5, parse("Kx -> ~~x")) == SchemeId::IntRe);
  CHECK(is_axiom_instance(LogicId::EL5m, parse("Kx -> ~~x")) == std::nullopt);
  CHECK(is_axiom_instance(LogicId::E4L5m, parse("Kx -> KKx")) == SchemeId::E4);
  CHECK(is_axiom_instance(LogicId::E5L5m, parse("~Kx -> K~Kx")) == SchemeId::E5);
  CHECK(is_axiom_instance(LogicId::E6L5m, parse("Kx -> []Kx")) == SchemeId::PNB);
  CHECK(is_axiom_instance(LogicId::E6L5m, parse("~Kx -> []~Kx")) == SchemeId::NNB);
  CHECK(is_axiom_instance(LogicId::IEL, parse("x -> Kx")) == SchemeId::IntCo);
  CHECK(is_axiom_instance(LogicId::EL5star, parse("x -> Kx")) == SchemeId::IntCo);
  CHECK(is_axiom_instance(LogicId::EL5m, parse("x -> Kx")) == std::nullopt);
  // the structural scheme wins over INT when both apply
  CHECK(is_axiom_instance(LogicId::L3, parse("[](x -> x) -> (x -> x)")) == SchemeId::A2);
  // box(a or b) -> (box b or box a) is not an A1 instance (operands swapped)
  CHECK(is_axiom_instance(LogicId::L3, parse("[](x | y) -> ([]y | []x)")) == std::nullopt);
}

TEST_CASE("substitution principle instances", "[calculi]") {
  // (a == b) -> (chi[x:=a] == chi[x:=b])
  CHECK(is_sp_instance(parse("(x == y) -> ([]x == []y)")));
  CHECK(is_sp_instance(parse("(x == y) -> ((z -> Kx) == (z -> Ky))")));
  CHECK(is_sp_instance(parse("(x == y) -> (x == y)")));
  CHECK(is_sp_instance(parse("(x == y) -> (z == z)")));     // chi without the hole
  CHECK(is_sp_instance(parse("(x == y) -> ((x & x) == (y & y))")));
  // replacement of a single occurrence
  CHECK(is_sp_instance(parse("(x == y) -> ((x & x) == (x & y))")));
  CHECK(!is_sp_instance(parse("(x == y) -> ([]x == []z)")));
  CHECK(!is_sp_instance(parse("(x == y) -> ([]y == []x)")));  // orientation matters
  CHECK(!is_sp_instance(parse("(x == y) -> ([]x -> []y)")));
  CHECK(!is_sp_instance(parse("x -> (x == x)")));
  // the refinement derivation shape
  Formula phi = parse("[]p -> p");
  Formula inst = Formula::imp(
      Formula::equiv(phi, parse("q")),
      Formula::equiv(Formula::box(Formula::iff(phi, phi)), Formula::box(Formula::iff(phi, parse("q")))));
  CHECK(is_sp_instance(inst));
}

TEST_CASE("INT recognition agrees with brute-force abstraction", "[calculi]") {
  gen::Rng rng(0xfeedULL);
  int positives = 0, negatives = 0;
  for (int i = 0; i < 300; ++i) {
    Formula f = gen::random_formula(rng, 3, Language::Fm, {"p", "q"});
    bool fast = is_int_instance(f);
    bool slow = int_instance_brute(f);
    INFO(print(f));
    REQUIRE(fast == slow);
    (fast ? positives : negatives)++;
  }
  CHECK(positives > 0);
  CHECK(negatives > 0);

  // substitution instances of theorems are always recognized
  for (const char* thm : {"p -> p", "p -> (q -> p)", "~~(p | ~p)", "p & q -> q"}) {
    Formula base = parse(thm);
    for (int i = 0; i < 20; ++i) {
      Formula g = gen::random_formula(rng, 3, Language::Fm, {"p", "r"});
      Formula inst = substitute(substitute(base, "p", g), "q", Formula::box(g));
      INFO(print(inst));
      CHECK(is_int_instance(inst));
    }
  }
}

TEST_CASE("fixture derivations all check under their stated logics", "[calculi]") {
  for (const Fixture& fx : fixtures::all()) {
    INFO(fx.name);
    CheckResult r = check_derivation(fx.logic, fx.derivation, fx.options);
    INFO(r.reason << " at line " << r.line + 1);
    CHECK(r.accepted);
    CHECK(fx.derivation.conclusion() == fx.conclusion);
  }
}

TEST_CASE("accepted belief derivations remain accepted up the hierarchy", "[calculi]") {
  // every axiom scheme of EL3- is an axiom scheme of the larger systems
  std::vector<LogicId> above = {LogicId::EL4m, LogicId::EL5m, LogicId::E4L3m, LogicId::E5L3m,
                                LogicId::E6L3m, LogicId::EL3,  LogicId::E4L5m, LogicId::E5L5m,
                                LogicId::E6L5m, LogicId::EL5};
  for (const Fixture& fx : fixtures::all()) {
    if (fx.logic != LogicId::EL3m || fx.options.basis) continue;
    for (LogicId up : above) {
      INFO(fx.name << " in " << to_string(up));
      CHECK(check_derivation(up, fx.derivation).accepted);
    }
  }
  // and an L3 derivation is accepted verbatim in every stronger modal system
  Fixture base = fixtures::box_iff_equiv_top();
  for (LogicId up : {LogicId::L4, LogicId::L5, LogicId::EL3m, LogicId::EL5, LogicId::EL5star})
    CHECK(check_derivation(up, base.derivation).accepted);
}

TEST_CASE("rejections carry the offending line and reason", "[calculi]") {
  using F = Formula;
  Formula x = F::var("x");

  SECTION("AN on a theorem scheme") {
    Derivation d;
    d.lines.push_back({F::box(F::or_(x, F::neg(x))), Justification::an(SchemeId::TND)});
    CheckResult r = check_derivation(LogicId::L5, d);
    REQUIRE(!r.accepted);
    CHECK(r.line == 0);
    CHECK(r.reason == "AN on theorem scheme");
    d.lines[0].just = Justification::an(SchemeId::SP);
    CHECK(!check_derivation(LogicId::L5, d).accepted);
  }

  SECTION("AN citing a scheme outside the logic") {
    Derivation d;
    d.lines.push_back({F::box(parse("[]x -> [][]x")), Justification::an(SchemeId::A4)});
    CheckResult r = check_derivation(LogicId::L3, d);
    REQUIRE(!r.accepted);
    CHECK(r.reason.find("non-axiom cited by AN") == 0);
  }

  SECTION("bad MP") {
    Derivation d;
    d.lines.push_back({parse("[]x -> x"), Justification::ax(SchemeId::A2)});
    d.lines.push_back({x, Justification::mp(0, 0)});
    CheckResult r = check_derivation(LogicId::L3, d);
    REQUIRE(!r.accepted);
    CHECK(r.line == 1);

    d.lines[1].just = Justification::mp(5, 0);
    CHECK(check_derivation(LogicId::L3, d).reason == "bad MP indices");
  }

  SECTION("language violation") {
    Derivation d;
    d.lines.push_back({parse("Kx -> Kx"), Justification::ax(SchemeId::INT)});
    CheckResult r = check_derivation(LogicId::L5, d);  // Fm1 has no K
    REQUIRE(!r.accepted);
    CHECK(r.reason.find("language violation") == 0);

    Derivation e;
    e.lines.push_back({parse("[]x -> x"), Justification::ax(SchemeId::A2)});
    CHECK(!check_derivation(LogicId::IEL, e).accepted);
  }

  SECTION("scheme mismatch") {
    Derivation d;
    d.lines.push_back({parse("[]x -> y"), Justification::ax(SchemeId::A2)});
    CheckResult r = check_derivation(LogicId::L3, d);
    REQUIRE(!r.accepted);
    CHECK(r.reason.find("scheme mismatch") == 0);
  }

  SECTION("hypothesis not declared") {
    Derivation d;
    d.lines.push_back({x, Justification::hyp()});
    CHECK(!check_derivation(LogicId::L3, d).accepted);
  }

  SECTION("TND and AN are unavailable in the intuitionistic epistemic systems") {
    Derivation d;
    d.lines.push_back({parse("x | ~x"), Justification::thm(SchemeId::TND)});
    CHECK(!check_derivation(LogicId::IEL, d).accepted);
    Derivation e;
    e.lines.push_back({parse("x -> Kx"), Justification::ax(SchemeId::IntCo)});
    CHECK(check_derivation(LogicId::IEL, e).accepted);
  }

  SECTION("strict SP restricts primitive SP lines to the weakest system") {
    Derivation d;
    d.lines.push_back({parse("(x == y) -> ([]x == []y)"), Justification::thm(SchemeId::SP)});
    CHECK(check_derivation(LogicId::L5, d).accepted);
    CheckOptions strict;
    strict.strict_sp = true;
    CHECK(!check_derivation(LogicId::L5, d, strict).accepted);
    CHECK(check_derivation(LogicId::L, d, strict).accepted);
  }
}

TEST_CASE("box lifting turns theorems into boxed theorems", "[calculi]") {
  SECTION("single axiom line") {
    DerivationBuilder b(LogicId::L5);
    b.int_ax(parse("p -> p"));
    Derivation lifted = box_lift(b.take(), LogicId::L5);
    REQUIRE(lifted.lines.size() == 1);
    CHECK(lifted.conclusion() == parse("[](p -> p)"));
    CHECK(lifted.lines[0].just.kind == Justification::Kind::AN);
    CHECK(check_derivation(LogicId::L5, lifted).accepted);
  }

  SECTION("modus ponens from hypotheses") {
    DerivationBuilder b(LogicId::L5);
    int h1 = b.hyp(parse("p"));
    int h2 = b.hyp(parse("p -> q"));
    b.mp(h1, h2);
    Derivation lifted = box_lift(b.take(), LogicId::L5);
    CHECK(lifted.conclusion() == parse("[]q"));
    REQUIRE(lifted.hypotheses.size() == 2);
    CHECK(lifted.hypotheses[0] == parse("[]p"));
    CHECK(lifted.hypotheses[1] == parse("[](p -> q)"));
    CHECK(check_derivation(LogicId::L5, lifted).accepted);
  }

  SECTION("every lift input re-checks in its target") {
    for (const Derivation& d : fixtures::ipc_lift_inputs()) {
      Derivation lifted = box_lift(d, LogicId::L5);
      CHECK(check_derivation(LogicId::L5, lifted).accepted);
      CHECK(lifted.conclusion() == Formula::box(d.conclusion()));
      // the same inputs lift into EL5star as well
      Derivation lifted2 = box_lift(d, LogicId::EL5star);
      CHECK(check_derivation(LogicId::EL5star, lifted2).accepted);
    }
    for (const Derivation& d : fixtures::iel_lift_inputs()) {
      Derivation lifted = box_lift(d, LogicId::EL5star);
      CHECK(check_derivation(LogicId::EL5star, lifted).accepted);
      CHECK(lifted.conclusion() == Formula::box(d.conclusion()));
    }
  }

  SECTION("rejects unsuitable inputs") {
    DerivationBuilder b(LogicId::L5);
    b.tnd(parse("p | ~p"));
    CHECK_THROWS_AS(box_lift(b.take(), LogicId::L5), std::invalid_argument);

    DerivationBuilder c(LogicId::EL5star);
    c.ax(SchemeId::IntCo, parse("x -> Kx"));
    CHECK_THROWS_AS(box_lift(c.take(), LogicId::L5), std::invalid_argument);  // K outside Fm0

    CHECK_THROWS_AS(box_lift({}, LogicId::L3), std::invalid_argument);
  }
}
