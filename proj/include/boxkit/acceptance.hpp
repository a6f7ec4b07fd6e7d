#pragma once

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "boxkit/bridge.hpp"
#include "boxkit/corpus.hpp"
#include "boxkit/fixtures.hpp"
#include "boxkit/gen.hpp"
#include "boxkit/io.hpp"
#include "boxkit/search.hpp"

namespace boxkit::acceptance {

struct Outcome {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

namespace detail {

struct Tally {
  long checks = 0;
  long violations = 0;
  std::string first;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (!ok) {
      ++violations;
      if (first.empty()) first = what();
    }
  }
  void note(const std::string& s) {
    ++violations;
    if (first.empty()) first = s;
  }
};

inline std::vector<Formula> scheme_instances(LogicId cls) {
  std::vector<Formula> out;
  for (SchemeId s : axiom_schemes(cls)) {
    if (s == SchemeId::INT) continue;
    out.push_back(substitute_all(boxkit::detail::scheme_pattern(s),
                                 {{"$p", Formula::var("x")},
                                  {"$q", Formula::var("y")},
                                  {"$r", Formula::var("z")}}));
  }
  return out;
}

template <typename Sat>
void sweep_assignments(int domain, const Formula& f, const Sat& sat, Tally& t,
                       const std::string& where) {
  const std::set<std::string> vs = f.vars();
  std::vector<std::string> vars(vs.begin(), vs.end());
  std::vector<int> pick(vars.size(), 0);
  for (;;) {
    t.expect(sat(vars, pick, f), [&] {
      std::ostringstream os;
      os << where << " violates " << print(f) << " at";
      for (size_t i = 0; i < vars.size(); ++i) os << " " << vars[i] << "=" << pick[i];
      return os.str();
    });
    size_t i = 0;
    for (; i < vars.size(); ++i) {
      if (++pick[i] < domain) break;
      pick[i] = 0;
    }
    if (i == vars.size()) break;
  }
}

inline AlgebraicModel chain3_rigid(LogicId cls) {
  AlgebraicModel m;
  m.alg = upperset_algebra(chain_poset(2));
  m.cls = cls;
  std::vector<int> box(3, m.alg.bot);
  box[static_cast<size_t>(m.alg.top)] = m.alg.top;
  m.box_t = std::move(box);
  m.true_filter = algebra_filters(m.alg).ultra.at(0);
  m.id = "chain3";
  return m;
}

}  // namespace detail

// 1. All fixture derivations check under their stated logics; applying AN to
//    a TND instance is rejected. Budget: under a second.
inline Outcome fixture_suite() {
  detail::Tally t;
  auto fixtures = fixtures::all();
  t.expect(fixtures.size() >= 14, [&] { return std::string("fewer than 14 fixtures"); });
  for (const Fixture& fx : fixtures) {
    CheckResult r = check_derivation(fx.logic, fx.derivation, fx.options);
    t.expect(r.accepted, [&] { return fx.name + " rejected at line " + std::to_string(r.line + 1) + ": " + r.reason; });
    t.expect(fx.derivation.conclusion() == fx.conclusion,
             [&] { return fx.name + " concludes the wrong formula"; });
  }
  Derivation bad;
  bad.lines.push_back({Formula::box(parse("x | ~x")), Justification::an(SchemeId::TND)});
  CheckResult r = check_derivation(LogicId::L5, bad);
  t.expect(!r.accepted && r.reason == "AN on theorem scheme",
           [&] { return std::string("AN on TND was not rejected properly"); });

  Outcome o{1, "fixture-derivations", t.violations == 0, "", 0};
  std::ostringstream os;
  os << fixtures.size() << " fixtures, " << t.checks << " checks";
  if (t.violations) os << "; FIRST: " << t.first;
  o.detail = os.str();
  return o;
}

// 2. Every axiom scheme instance of the S5-style epistemic classes holds
//    under all assignments in all enumerated models (carrier <= 16) and all
//    enumerated frames (<= 4 worlds).
inline Outcome soundness_sweep() {
  detail::Tally t;
  long models = 0, frames = 0;
  for (LogicId cls : {LogicId::EL5m, LogicId::E4L5m, LogicId::E5L5m, LogicId::E6L5m, LogicId::EL5,
                      LogicId::E6L5}) {
    std::vector<Formula> axioms = detail::scheme_instances(cls);
    axioms.push_back(parse("x | ~x"));
    enumerate_models(cls, 4, {}, [&](const AlgebraicModel& m) {
      ++models;
      for (const Formula& ax : axioms)
        detail::sweep_assignments(
            m.alg.n, ax,
            [&](const std::vector<std::string>& vars, const std::vector<int>& pick, const Formula& f) {
              Assignment g;
              for (size_t i = 0; i < vars.size(); ++i) g[vars[i]] = pick[i];
              return satisfies(m, g, f);
            },
            t, m.id);
      return true;
    });
    enumerate_frames(cls, 4, [&](const Frame& fr) {
      ++frames;
      for (const Formula& ax : axioms)
        detail::sweep_assignments(
            static_cast<int>(fr.props.size()), ax,
            [&](const std::vector<std::string>& vars, const std::vector<int>& pick, const Formula& f) {
              RelationalModel m{fr, {}};
              for (size_t i = 0; i < vars.size(); ++i) m.g[vars[i]] = fr.props[static_cast<size_t>(pick[i])];
              return true_in(m, f);
            },
            t, fr.id);
      return true;
    });
  }
  Outcome o{2, "soundness-sweep", t.violations == 0, "", 0};
  std::ostringstream os;
  os << models << " models, " << frames << " frames, " << t.checks << " instance checks, "
     << t.violations << " violations";
  if (t.violations) os << "; FIRST: " << t.first;
  o.detail = os.str();
  return o;
}

// 3. The prime-filter construction preserves satisfaction on the whole
//    correspondence corpus, and element denotation is an order isomorphism.
inline Outcome correspondence_suite() {
  detail::Tally t;
  long models = 0;
  const std::vector<Formula> corpus = corpus::parse_all(corpus::correspondence_corpus());
  for (LogicId cls : {LogicId::L5, LogicId::EL5m, LogicId::E4L5m, LogicId::E5L5m, LogicId::E6L5m,
                      LogicId::EL5, LogicId::E4L5, LogicId::E5L5, LogicId::E6L5, LogicId::EL5star}) {
    enumerate_models(cls, 4, {}, [&](const AlgebraicModel& m) {
      ++models;
      AlgebraToFrame r = algebra_to_frame(m, {});
      t.expect(r.model.frame.props.size() == static_cast<size_t>(m.alg.n),
               [&] { return m.id + ": element map is not injective"; });
      for (int a = 0; a < m.alg.n; ++a)
        for (int b = 0; b < m.alg.n; ++b)
          t.expect(m.alg.le(a, b) == ((r.elem_prop[static_cast<size_t>(a)] &
                                       ~r.elem_prop[static_cast<size_t>(b)]) == 0),
                   [&] { return m.id + ": element map does not preserve order"; });
      const bool has_k = m.k_t.has_value();
      for (const Formula& phi : corpus) {
        if (phi.has_k() && !has_k) continue;
        detail::sweep_assignments(
            m.alg.n, phi,
            [&](const std::vector<std::string>& vars, const std::vector<int>& pick, const Formula& f) {
              Assignment g;
              RelationalModel rm = r.model;
              for (size_t i = 0; i < vars.size(); ++i) {
                g[vars[i]] = pick[i];
                rm.g[vars[i]] = r.elem_prop[static_cast<size_t>(pick[i])];
              }
              return satisfies(m, g, f) == true_in(rm, f);
            },
            t, m.id);
      }
      return true;
    });
  }
  Outcome o{3, "correspondence", t.violations == 0, "", 0};
  std::ostringstream os;
  os << models << " models x " << corpus.size() << " formulas, " << t.checks << " agreements";
  if (t.violations) os << "; FIRST: " << t.first;
  o.detail = os.str();
  return o;
}

// 4. The boxing embedding: theorems stay theorems (no countermodels within
//    full bounds, lifted derivations re-check) and refuted goals transfer to
//    relational countermodels of the boxed goal. The decision procedure is
//    cross-checked against exhaustive Kripke search up to six worlds.
inline Outcome embedding_suite() {
  detail::Tally t;
  const auto theorems = corpus::parse_all(corpus::ipc_theorems());
  const auto non_theorems = corpus::parse_all(corpus::ipc_non_theorems());
  t.expect(theorems.size() == 20 && non_theorems.size() == 10,
           [&] { return std::string("corpus sizes drifted"); });

  for (const Formula& f : theorems) {
    IpcVerdict v = decide_ipc({}, f);
    t.expect(v.theorem, [&] { return "oracle rejects theorem " + print(f); });
    t.expect(!boxkit::detail::small_countermodel({}, f, 6).has_value(),
             [&] { return "exhaustive search refutes theorem " + print(f); });
  }
  for (const Formula& f : non_theorems) {
    IpcVerdict v = decide_ipc({}, f);
    t.expect(!v.theorem, [&] { return "oracle accepts non-theorem " + print(f); });
    t.expect(boxkit::detail::small_countermodel({}, f, 6).has_value(),
             [&] { return "exhaustive search cannot refute " + print(f); });
    if (!v.theorem && v.counter) {
      t.expect(!eval_kripke(*v.counter, v.counter->root, f),
               [&] { return "countermodel fails to refute " + print(f); });
      RelationalModel lifted = kripke_to_relational(*v.counter, f);
      t.expect(check_frame(lifted.frame, LogicId::L5).pass,
               [&] { return "lifted frame fails its class check for " + print(f); });
      t.expect(!true_in(lifted, Formula::box(f)),
               [&] { return "lifted model satisfies the boxed non-theorem " + print(f); });
    }
  }

  for (const Derivation& d : fixtures::ipc_lift_inputs()) {
    Derivation lifted = box_lift(d, LogicId::L5);
    t.expect(check_derivation(LogicId::L5, lifted).accepted,
             [&] { return "lifted derivation rejected: " + print(d.conclusion()); });
    t.expect(lifted.conclusion() == Formula::box(d.conclusion()),
             [&] { return std::string("lifted conclusion is not the boxed conclusion"); });
  }
  for (const Derivation& d : fixtures::iel_lift_inputs()) {
    Derivation lifted = box_lift(d, LogicId::EL5star);
    t.expect(check_derivation(LogicId::EL5star, lifted).accepted,
             [&] { return "lifted epistemic derivation rejected: " + print(d.conclusion()); });
  }

  Bounds full;  // desk defaults: 5 algebra worlds, 4 frame worlds
  for (const Formula& f : theorems) {
    auto r = find_countermodel(LogicId::L5, {}, Formula::box(f), full);
    t.expect(!r.has_value(), [&] { return "countermodel found for boxed theorem " + print(f); });
  }

  Outcome o{4, "embedding", t.violations == 0, "", 0};
  std::ostringstream os;
  os << theorems.size() << " theorems + " << non_theorems.size() << " non-theorems, "
     << t.checks << " checks";
  if (t.violations) os << "; FIRST: " << t.first;
  o.detail = os.str();
  return o;
}

// 5. Self-referential equations at desk bounds.
inline Outcome self_reference_suite() {
  detail::Tally t;
  Bounds b;
  b.max_algebra_worlds = 4;
  const std::vector<LogicId> every_class = all_logics();
  for (LogicId cls : every_class) {
    EquationReport r = solve_equation(cls, "x", parse("x"), parse("x -> _|_"), b);
    t.expect(r.models_searched > 0 && r.unsatisfiable_everywhere(),
             [&] { return std::string("liar satisfiable in class ") + to_string(cls); });
  }

  {
    EquationReport r = solve_equation(LogicId::L5, "x", parse("x"), parse("[]x"), b);
    std::map<std::string, std::vector<int>> per_model;
    for (const auto& s : r.solutions) per_model[s.model_id].push_back(s.element);
    long models = 0;
    enumerate_models(LogicId::L5, b.max_algebra_worlds, {}, [&](const AlgebraicModel& m) {
      ++models;
      auto it = per_model.find(m.id);
      bool exact = it != per_model.end() && it->second.size() == 2 &&
                   std::count(it->second.begin(), it->second.end(), m.alg.bot) == 1 &&
                   std::count(it->second.begin(), it->second.end(), m.alg.top) == 1;
      t.expect(exact, [&] { return m.id + ": provability truth-teller solutions are not {bot, top}"; });
      return true;
    });
    t.expect(models > 0, [&] { return std::string("no rigid models enumerated"); });
  }

  for (LogicId cls : {LogicId::L5, LogicId::EL5m, LogicId::E4L5m, LogicId::E5L5m, LogicId::E6L5m,
                      LogicId::EL5, LogicId::E4L5, LogicId::E5L5, LogicId::E6L5, LogicId::EL5star}) {
    EquationReport r = solve_equation(cls, "x", parse("x"), parse("[]~x"), b);
    t.expect(r.unsatisfiable_everywhere(),
             [&] { return std::string("self-refuting proposition found in ") + to_string(cls); });
  }

  {
    EquationReport l5 = solve_equation(LogicId::L5, "x", parse("x"), parse("<>x"), b);
    std::map<std::string, bool> top_hit;
    for (const auto& s : l5.solutions)
      if (s.classically_true) top_hit[s.model_id] = true;
    enumerate_models(LogicId::L5, b.max_algebra_worlds, {}, [&](const AlgebraicModel& m) {
      t.expect(top_hit.count(m.id) != 0,
               [&] { return m.id + ": top does not solve the consistency truth-teller"; });
      return true;
    });
    EquationReport l4 = solve_equation(LogicId::L4, "x", parse("x"), parse("<>x"), b);
    std::map<std::string, bool> bot_hit;
    enumerate_models(LogicId::L4, b.max_algebra_worlds, {}, [&](const AlgebraicModel& m) {
      bot_hit[m.id] = false;
      return true;
    });
    for (const auto& s : l4.solutions) {
      auto it = bot_hit.find(s.model_id);
      if (it != bot_hit.end() && !s.classically_true && s.element == 0) it->second = true;
    }
    enumerate_models(LogicId::L4, b.max_algebra_worlds, {}, [&](const AlgebraicModel& m) {
      Assignment g{{"x", m.alg.bot}};
      t.expect(eval(m, g, parse("x")) == eval(m, g, parse("<>x")),
               [&] { return m.id + ": bottom does not solve the consistency truth-teller"; });
      t.expect(m.alg.bot == 0 && bot_hit.at(m.id),
               [&] { return m.id + ": bottom solution missing from the report"; });
      return true;
    });
  }

  Outcome o{5, "self-reference", t.violations == 0, "", 0};
  std::ostringstream os;
  os << t.checks << " checks across " << every_class.size() << " classes";
  if (t.violations) os << "; FIRST: " << t.first;
  o.detail = os.str();
  return o;
}

// 6. The intuitionistic epistemic reading: axioms at the bottom world,
//    co-reflection fails on a classical frame, and the containments between
//    frame classes.
inline Outcome iel_suite() {
  detail::Tally t;
  std::vector<Formula> axioms;
  for (const char* s : {"Kx -> (y -> Kx)", "x -> x", "~~(Kx | ~Kx)", "x & Ky -> x",
                        "K(x -> y) -> (Kx -> Ky)", "x -> Kx", "Kx -> ~~x"})
    axioms.push_back(parse(s));
  long frames = 0;
  enumerate_frames(LogicId::IEL, 4, [&](const Frame& fr) {
    ++frames;
    for (const Formula& ax : axioms)
      detail::sweep_assignments(
          static_cast<int>(fr.props.size()), ax,
          [&](const std::vector<std::string>& vars, const std::vector<int>& pick, const Formula& f) {
            RelationalModel m{fr, {}};
            for (size_t i = 0; i < vars.size(); ++i) m.g[vars[i]] = fr.props[static_cast<size_t>(pick[i])];
            return sat(m, fr.wbot(), f);
          },
          t, fr.id);
    return true;
  });
  t.expect(frames > 0, [&] { return std::string("no frames enumerated"); });

  Bounds fb;
  fb.space = SearchSpace::FramesOnly;
  fb.max_frame_worlds = 2;
  auto r = find_countermodel(LogicId::EL5, {}, parse("x -> Kx"), fb);
  t.expect(r.has_value() && r->relational && r->relational->frame.n() <= 2,
           [&] { return std::string("co-reflection not refuted on a 2-world classical frame"); });

  enumerate_frames(LogicId::IEL, 3, [&](const Frame& fr) {
    Frame g = fr;
    g.wt = fr.order.maximal().front();
    t.expect(check_frame(g, LogicId::E5L5).pass,
             [&] { return fr.id + " fails the negative-introspection knowledge class"; });
    return true;
  });
  enumerate_frames(LogicId::IELm, 3, [&](const Frame& fr) {
    Frame g = fr;
    g.wt = fr.order.maximal().front();
    t.expect(check_frame(g, LogicId::E5L5m).pass,
             [&] { return fr.id + " fails the negative-introspection belief class"; });
    return true;
  });
  enumerate_frames(LogicId::E6L5m, 3, [&](const Frame& fr) {
    t.expect(check_frame(fr, LogicId::E5L5m).pass,
             [&] { return fr.id + " with constant belief fails the introspection class"; });
    return true;
  });

  Outcome o{6, "iel-suite", t.violations == 0, "", 0};
  std::ostringstream os;
  os << frames << " frames, " << t.checks << " checks";
  if (t.violations) os << "; FIRST: " << t.first;
  o.detail = os.str();
  return o;
}

// 7. Replacement failure witness: the middle element of the three-element
//    chain satisfies box ~~y but not box y.
inline Outcome replacement_failure_witness() {
  detail::Tally t;
  AlgebraicModel m = detail::chain3_rigid(LogicId::L5);
  t.expect(check_model(m, LogicId::L5).pass, [&] { return std::string("witness model fails its check"); });
  Assignment g{{"y", 1}};
  t.expect(satisfies(m, g, parse("[]~~y")), [&] { return std::string("box ~~y not satisfied"); });
  t.expect(!satisfies(m, g, parse("[]y")), [&] { return std::string("box y unexpectedly satisfied"); });
  t.expect(satisfies(m, g, parse("y <-> ~~y")),
           [&] { return std::string("classical equivalence missing"); });

  Outcome o{7, "replacement-failure", t.violations == 0, "", 0};
  o.detail = "3-chain, y = middle element: []~~y holds, []y fails";
  if (t.violations) o.detail += "; FIRST: " + t.first;
  return o;
}

// 8. Non-derivability witness: with two-valued K believing only the top
//    element, x -> <>Kx fails while all bridge-class conditions hold.
inline Outcome unknowable_truth_witness() {
  detail::Tally t;
  AlgebraicModel m = detail::chain3_rigid(LogicId::E6L5);
  m.k_t = std::vector<int>{m.alg.bot, m.alg.bot, m.alg.top};
  Report r = check_model(m, LogicId::E6L5);
  t.expect(r.pass, [&] { return "witness fails the class check: " + r.violations.front(); });
  Assignment g{{"x", 1}};
  t.expect(!satisfies(m, g, parse("x -> <>Kx")),
           [&] { return std::string("x -> <>Kx unexpectedly satisfied"); });
  t.expect(satisfies(m, g, parse("x")), [&] { return std::string("x should be true"); });

  Outcome o{8, "unknowable-truth", t.violations == 0, "", 0};
  o.detail = "3-chain E6 knowledge model refutes x -> <>Kx at the middle element";
  if (t.violations) o.detail += "; FIRST: " + t.first;
  return o;
}

// 9. Parser round trip on a reproducible random corpus.
inline Outcome parser_roundtrip(uint64_t seed = 0x5eed5eedULL) {
  detail::Tally t;
  gen::Rng rng(seed);
  for (int i = 0; i < 1000; ++i) {
    Formula f = gen::random_formula(rng, 8, Language::Fm);
    Formula g = parse(print(f));
    t.expect(g == f, [&] { return "round trip failed on " + print(f); });
  }
  // same seed, same corpus
  gen::Rng a(seed), b(seed);
  for (int i = 0; i < 1000; ++i)
    t.expect(gen::random_formula(a, 8, Language::Fm) == gen::random_formula(b, 8, Language::Fm),
             [&] { return std::string("the seeded corpus is not reproducible"); });
  Outcome o{9, "parser-roundtrip", t.violations == 0, "", 0};
  std::ostringstream os;
  os << "1000 formulas, seed " << seed;
  if (t.violations) os << "; FIRST: " << t.first;
  o.detail = os.str();
  return o;
}

inline Outcome run_criterion(int id) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  switch (id) {
    case 1: o = fixture_suite(); break;
    case 2: o = soundness_sweep(); break;
    case 3: o = correspondence_suite(); break;
    case 4: o = embedding_suite(); break;
    case 5: o = self_reference_suite(); break;
    case 6: o = iel_suite(); break;
    case 7: o = replacement_failure_witness(); break;
    case 8: o = unknowable_truth_witness(); break;
    case 9: o = parser_roundtrip(); break;
    default: throw std::invalid_argument("acceptance criteria are numbered 1..9");
  }
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (id == 1 && o.seconds >= 1.0) {
    o.pass = false;
    o.detail += "; over the 1s budget";
  }
  return o;
}

inline std::vector<Outcome> run_all() {
  std::vector<Outcome> out;
  for (int i = 1; i <= 9; ++i) out.push_back(run_criterion(i));
  return out;
}

}  // namespace boxkit::acceptance
