#include <catch2/catch_amalgamated.hpp>

#include "boxkit/ipc.hpp"
#include "boxkit/parse.hpp"
#include "boxkit/gen.hpp"
#include "support/kripke_search.hpp"

using namespace boxkit;

namespace {

const std::vector<std::string> kTheorems = {
    "p -> p",
    "p -> (q -> p)",
    "(p -> q -> r) -> (p -> q) -> p -> r",
    "p & q -> p",
    "p & q -> q & p",
    "p -> p | q",
    "(p -> r) -> (q -> r) -> (p | q -> r)",
    "_|_ -> p",
    "~~(p | ~p)",
    "(p -> q) -> ~q -> ~p",
    "~~~p -> ~p",
    "p -> ~~p",
    "(p | ~p) -> ~~p -> p",
    "(p -> q) & (q -> r) -> (p -> r)",
    "~(p & ~p)",
    "((p & q) -> r) <-> (p -> q -> r)",
    "(p | q -> r) <-> (p -> r) & (q -> r)",
    "~(p | q) <-> ~p & ~q",
    "(p -> q) -> (p -> q -> r) -> (p -> r)",
    "((p -> q) -> q) -> ((q -> p) -> p) | T",
};

const std::vector<std::string> kNonTheorems = {
    "((p -> q) -> p) -> p",       // Peirce
    "p | ~p",                     // excluded middle
    "~~p -> p",                   // double negation elimination
    "(p -> q) | (q -> p)",        // linearity
    "~p | ~~p",                   // weak excluded middle
    "(~p -> q | r) -> (~p -> q) | (~p -> r)",
    "~(p & q) -> ~p | ~q",
    "(p -> q) -> ~p | q",
    "p | (p -> q)",
    "((p -> q) -> q) -> p | q",
};

}  // namespace

TEST_CASE("decision procedure on standard theorems and non-theorems", "[ipc]") {
  for (const auto& s : kTheorems) {
    INFO(s);
    IpcVerdict v = decide_ipc({}, parse(s));
    CHECK(v.theorem);
    CHECK(!v.trace.empty());
  }
  for (const auto& s : kNonTheorems) {
    INFO(s);
    IpcVerdict v = decide_ipc({}, parse(s));
    REQUIRE(!v.theorem);
    REQUIRE(v.counter.has_value());
    const KripkeModel& m = *v.counter;
    CHECK(!eval_kripke(m, m.root, parse(s)));
  }
}

TEST_CASE("peirce countermodel has two worlds and refutes at the root", "[ipc]") {
  Formula peirce = parse("((p -> q) -> p) -> p");
  IpcVerdict v = decide_ipc({}, peirce);
  REQUIRE(!v.theorem);
  REQUIRE(v.counter.has_value());
  CHECK(v.counter->n == 2);
  CHECK(!eval_kripke(*v.counter, v.counter->root, peirce));
}

TEST_CASE("hypotheses are honoured and witnessed at the root", "[ipc]") {
  IpcVerdict v1 = decide_ipc({parse("p"), parse("p -> q")}, parse("q"));
  CHECK(v1.theorem);

  IpcVerdict v2 = decide_ipc({parse("p -> q")}, parse("q"));
  REQUIRE(!v2.theorem);
  const KripkeModel& m = *v2.counter;
  CHECK(eval_kripke(m, m.root, parse("p -> q")));
  CHECK(!eval_kripke(m, m.root, parse("q")));
}

TEST_CASE("saturation-based countermodels also refute", "[ipc]") {
  // Bypass the small-model shortcut and exercise the canonical construction.
  for (const auto& s : kNonTheorems) {
    INFO(s);
    detail::IpcSolver solver;
    Formula f = parse(s);
    REQUIRE(!solver.provable({}, f));
    KripkeModel m = solver.countermodel({}, f);
    CHECK(!eval_kripke(m, m.root, f));
    // persistence of the valuation
    for (int i = 0; i < m.n; ++i)
      for (int j = 0; j < m.n; ++j)
        if (m.below(i, j))
          for (const auto& x : m.val[i]) CHECK(m.val[j].count(x) == 1);
    // unique minimum
    for (int j = 0; j < m.n; ++j) CHECK(m.below(m.root, j));
  }
}

TEST_CASE("agreement with exhaustive search on a small corpus", "[ipc]") {
  std::vector<std::string> corpus = kNonTheorems;
  corpus.insert(corpus.end(), kTheorems.begin(), kTheorems.end());
  for (const auto& s : corpus) {
    INFO(s);
    Formula f = parse(s);
    bool thm = ipc_theorem({}, f);
    auto refuted = oracle::find_refutation({}, f, 5);
    CHECK(thm == !refuted.has_value());
  }
}

TEST_CASE("forcing clauses and monotonicity", "[ipc]") {
  // two-world chain: root r, top t; p true at t only
  KripkeModel m;
  m.n = 2;
  m.root = 0;
  m.leq = {{1, 1}, {0, 1}};
  m.val = {{}, {"p"}};
  CHECK(eval_kripke(m, 0, parse("T")));
  CHECK(eval_kripke(m, 1, parse("p")));
  CHECK(!eval_kripke(m, 0, parse("p | ~p")));
  CHECK(!eval_kripke(m, 0, parse("~~p -> p")));
  CHECK(eval_kripke(m, 0, parse("~~p")));
  CHECK_THROWS_AS(eval_kripke(m, 7, parse("p")), std::out_of_range);

  gen::Rng rng(0x1234ULL);
  for (int i = 0; i < 200; ++i) {
    Formula f = gen::random_formula(rng, 4, Language::Fm0, {"p", "q"});
    for (int w = 0; w < m.n; ++w)
      if (eval_kripke(m, w, f))
        for (int w2 = 0; w2 < m.n; ++w2)
          if (m.below(w, w2)) CHECK(eval_kripke(m, w2, f));
  }
}

TEST_CASE("random differential check against the semantic oracle", "[ipc]") {
  // sound in both directions without assuming a finite-model bound:
  // a decided theorem admits no small refutation, and a small refutation
  // forces a non-theorem verdict
  gen::Rng rng(0x90210ULL);
  int theorems = 0, refuted = 0;
  for (int i = 0; i < 300; ++i) {
    Formula f = gen::random_formula(rng, 3, Language::Fm0, {"p", "q"});
    bool thm = ipc_theorem({}, f);
    auto small = oracle::find_refutation({}, f, 4);
    INFO(print(f));
    if (thm) REQUIRE(!small.has_value());
    if (small.has_value()) REQUIRE(!thm);
    theorems += thm;
    refuted += small.has_value();
  }
  CHECK(theorems > 20);
  CHECK(refuted > 20);
}

TEST_CASE("theoremhood is closed under substitution", "[ipc]") {
  gen::Rng rng(0x777ULL);
  int hits = 0;
  for (const auto& s : kTheorems) {
    Formula f = parse(s);
    Formula g = gen::random_formula(rng, 3, Language::Fm0, {"p", "q"});
    Formula inst = substitute(f, "p", g);
    CHECK(ipc_theorem({}, inst));
    ++hits;
  }
  CHECK(hits == static_cast<int>(kTheorems.size()));
}
