// boxkit: a workbench for classical modal logics of intuitionistic truth,
// belief and knowledge. Exit codes: 0 pass/found, 1 fail/none-within-bounds,
// 2 usage or input error.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "boxkit/acceptance.hpp"
#include "boxkit/bridge.hpp"
#include "boxkit/corpus.hpp"
#include "boxkit/fixtures.hpp"
#include "boxkit/io.hpp"
#include "boxkit/search.hpp"

using namespace boxkit;

namespace {

LogicId parse_logic(const std::string& tag) {
  auto id = logic_from_string(tag);
  if (!id) throw CLI::ValidationError("--logic", "unknown logic tag '" + tag + "'");
  return *id;
}

Formula parse_or_die(const std::string& text) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n        in: " << text << "\n";
    std::exit(2);
  }
}

Bounds parse_bounds(const std::string& spec) {
  Bounds b;
  if (spec.empty()) return b;
  size_t slash = spec.find('/');
  try {
    if (slash == std::string::npos) {
      b.max_algebra_worlds = std::stoi(spec);
    } else {
      b.max_algebra_worlds = std::stoi(spec.substr(0, slash));
      b.max_frame_worlds = std::stoi(spec.substr(slash + 1));
    }
  } catch (...) {
    throw CLI::ValidationError("--bounds", "expected N or N/M");
  }
  if (b.max_algebra_worlds < 1 || b.max_algebra_worlds > 5 || b.max_frame_worlds < 1 ||
      b.max_frame_worlds > 4)
    throw CLI::ValidationError("--bounds", "algebra worlds in 1..5, frame worlds in 1..4");
  return b;
}

void emit(const json& j, const std::optional<std::string>& out_path) {
  if (out_path) write_file(*out_path, j.dump(2) + "\n");
  else std::cout << j.dump(2) << "\n";
}

json model_summary(const AlgebraicModel& m, const Assignment& g) {
  json j = model_to_json(m);
  json a = json::object();
  for (const auto& [x, v] : g) a[x] = v;
  j["assignment"] = a;
  return j;
}

json relational_summary(const RelationalModel& m) {
  json j = frame_to_json(m.frame);
  json a = json::object();
  for (const auto& [x, v] : m.g) a[x] = v;
  j["assignment"] = a;
  return j;
}

void describe_counter(const CounterInterpretation& c, bool json_out,
                      const std::optional<std::string>& out) {
  if (c.algebra) {
    if (json_out || out) emit(model_summary(*c.algebra, c.algebra_assignment), out);
    if (!json_out) {
      std::cout << "countermodel: algebraic model " << c.model_id << " (carrier "
                << c.algebra->alg.n << ")";
      for (const auto& [x, v] : c.algebra_assignment) std::cout << " " << x << "=" << v;
      std::cout << "\n";
    }
  } else if (c.relational) {
    if (json_out || out) emit(relational_summary(*c.relational), out);
    if (!json_out) {
      std::cout << "countermodel: relational model on frame " << c.model_id << " ("
                << c.relational->frame.n() << " worlds)\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "boxkit - proof checking, finite semantics and countermodel search\n"
      "for classical modal logics of intuitionistic truth, belief and knowledge"};
  app.require_subcommand(1);

  std::string cd_file, cd_logic;
  bool cd_strict = false;
  auto* cd = app.add_subcommand("check-derivation", "check a derivation file");
  cd->add_option("file", cd_file, "derivation file")->required();
  cd->add_option("--logic", cd_logic, "override the file's logic tag");
  cd->add_flag("--strict-sp", cd_strict, "accept primitive SP lines only in L");

  std::string pi_formula;
  bool pi_json = false;
  std::optional<std::string> pi_out;
  auto* pi = app.add_subcommand("prove-ipc", "decide intuitionistic derivability");
  pi->add_option("formula", pi_formula, "goal formula (no modal operators)")->required();
  pi->add_flag("--json", pi_json, "machine-readable output");
  pi->add_option("--out", pi_out, "write the verdict (countermodel or trace) to a file");

  std::string ax_logic, ax_formula;
  bool ax_json = false;
  auto* ax = app.add_subcommand("axiom?", "which axiom scheme of a logic a formula instantiates");
  ax->add_option("logic", ax_logic, "logic tag")->required();
  ax->add_option("formula", ax_formula, "formula")->required();
  ax->add_flag("--json", ax_json);

  std::string en_kind, en_class;
  int en_size = 3;
  long en_limit = -1;
  bool en_json = false;
  auto* en = app.add_subcommand("enumerate", "stream models or frames of a class");
  en->add_option("kind", en_kind, "models | frames")->required()->check(CLI::IsMember({"models", "frames"}));
  en->add_option("class", en_class, "logic tag")->required();
  en->add_option("size", en_size, "maximum number of worlds")->required();
  en->add_option("--limit", en_limit, "stop after this many items");
  en->add_flag("--json", en_json, "emit one JSON object per item");

  std::string va_logic, va_formula, va_bounds;
  bool va_json = false, va_frames_only = false, va_algebras_only = false;
  auto* va = app.add_subcommand("valid?", "search for a countermodel to a formula");
  va->add_option("logic", va_logic)->required();
  va->add_option("formula", va_formula)->required();
  va->add_option("--bounds", va_bounds, "N or N/M: algebra / frame world caps");
  va->add_flag("--frames-only", va_frames_only);
  va->add_flag("--algebras-only", va_algebras_only);
  va->add_flag("--json", va_json);

  std::string co_logic, co_goal, co_bounds;
  std::vector<std::string> co_hyps;
  bool co_json = false;
  auto* co = app.add_subcommand("consequence?", "search for a countermodel to a consequence");
  co->add_option("logic", co_logic)->required();
  co->add_option("goal", co_goal)->required();
  co->add_option("--hyp", co_hyps, "hypothesis (repeatable)");
  co->add_option("--bounds", co_bounds);
  co->add_flag("--json", co_json);

  std::string eq_logic, eq_var, eq_lhs, eq_rhs, eq_bounds;
  bool eq_json = false;
  auto* eq = app.add_subcommand("solve-eq", "solve a self-referential equation lhs == rhs");
  eq->add_option("logic", eq_logic)->required();
  eq->add_option("var", eq_var, "the unknown")->required();
  eq->add_option("lhs", eq_lhs)->required();
  eq->add_option("rhs", eq_rhs)->required();
  eq->add_option("--bounds", eq_bounds);
  eq->add_flag("--json", eq_json);

  std::string br_file;
  std::optional<std::string> br_out;
  auto* br = app.add_subcommand("bridge",
                                "model file -> frame file, or frame file -> model file");
  br->add_option("file", br_file, "input JSON (direction inferred from its shape)")->required();
  br->add_option("--out", br_out, "output file (default: stdout)");

  std::string li_file, li_target = "L5";
  std::optional<std::string> li_out;
  auto* li = app.add_subcommand("lift", "box-lift a derivation into L5 or EL5star");
  li->add_option("file", li_file, "derivation file (hypothesis/axiom/MP lines)")->required();
  li->add_option("--target", li_target, "L5 | EL5star")->check(CLI::IsMember({"L5", "EL5star"}));
  li->add_option("--out", li_out, "output derivation file (default: stdout)");

  std::vector<std::string> rp_ids;
  std::string rp_fixture_dir;
  auto* rp = app.add_subcommand("reproduce", "run acceptance criteria (1..9 or all)");
  rp->add_option("id", rp_ids, "criterion numbers, or 'all'");
  rp->add_option("--fixture-dir", rp_fixture_dir,
                 "also export the fixture derivations as .drv files into this directory");

  uint64_t st_seed = 0x5eed5eedULL;
  auto* st = app.add_subcommand("selftest", "parser round-trip on a seeded random corpus");
  st->add_option("--seed", st_seed, "corpus seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cd) {
      DerivationFile df = derivation_from_text(read_file(cd_file));
      LogicId logic = cd_logic.empty() ? df.logic : parse_logic(cd_logic);
      CheckOptions opt;
      opt.strict_sp = cd_strict;
      CheckResult r = check_derivation(logic, df.derivation, opt);
      if (r.accepted) {
        std::cout << "accepted: derives " << print(df.derivation.conclusion()) << " in "
                  << to_string(logic) << "\n";
        return 0;
      }
      std::cout << "rejected at line " << r.line + 1 << ": " << r.reason << "\n";
      return 1;
    }

    if (*pi) {
      Formula goal = parse_or_die(pi_formula);
      if (!goal.in_language(Language::Fm0)) {
        std::cerr << "error: prove-ipc expects a purely propositional formula\n";
        return 2;
      }
      IpcVerdict v = decide_ipc({}, goal);
      if (v.theorem) {
        if (pi_json || pi_out) {
          json j{{"verdict", "theorem"}, {"trace", v.trace}};
          emit(j, pi_out);
        }
        if (!pi_json) std::cout << "theorem\n" << v.trace;
        return 0;
      }
      json j = kripke_to_json(*v.counter);
      j["verdict"] = "non-theorem";
      if (pi_json || pi_out) emit(j, pi_out);
      if (!pi_json)
        std::cout << "non-theorem: refuted at the root of a " << v.counter->n
                  << "-world model\n";
      return 1;
    }

    if (*ax) {
      LogicId logic = parse_logic(ax_logic);
      Formula f = parse_or_die(ax_formula);
      if (!f.in_language(language_of(logic))) {
        std::cerr << "error: formula is outside the language of " << to_string(logic) << "\n";
        return 2;
      }
      auto s = is_axiom_instance(logic, f);
      if (ax_json) {
        json j{{"scheme", s ? json(to_string(*s)) : json(nullptr)}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << (s ? to_string(*s) : "none") << "\n";
      }
      return s ? 0 : 1;
    }

    if (*en) {
      LogicId cls = parse_logic(en_class);
      long count = 0;
      auto tick = [&] { return en_limit < 0 || count < en_limit; };
      if (en_kind == "models") {
        enumerate_models(cls, en_size, {}, [&](const AlgebraicModel& m) {
          ++count;
          if (en_json) std::cout << model_to_json(m).dump() << "\n";
          else std::cout << m.id << " carrier=" << m.alg.n << "\n";
          return tick();
        });
      } else {
        enumerate_frames(cls, en_size, [&](const Frame& f) {
          ++count;
          if (en_json) std::cout << frame_to_json(f).dump() << "\n";
          else std::cout << f.id << " worlds=" << f.n() << " props=" << f.props.size() << "\n";
          return tick();
        });
      }
      std::cout << "total: " << count << "\n";
      return 0;
    }

    auto run_search = [&](const std::string& logic_tag, const std::vector<std::string>& hyp_texts,
                          const std::string& goal_text, const std::string& bounds_text,
                          bool frames_only, bool algebras_only, bool json_out) {
      LogicId logic = parse_logic(logic_tag);
      std::vector<Formula> hyps;
      for (const auto& h : hyp_texts) hyps.push_back(parse_or_die(h));
      Formula goal = parse_or_die(goal_text);
      Bounds b = parse_bounds(bounds_text);
      if (frames_only) b.space = SearchSpace::FramesOnly;
      if (algebras_only) b.space = SearchSpace::AlgebrasOnly;
      auto r = find_countermodel(logic, hyps, goal, b);
      if (!r) {
        if (json_out) std::cout << json{{"countermodel", nullptr}}.dump() << "\n";
        else
          std::cout << "pass: no countermodel within bounds (inconclusive beyond "
                    << b.max_algebra_worlds << "/" << b.max_frame_worlds << " worlds)\n";
        return 0;
      }
      describe_counter(*r, json_out, std::nullopt);
      return 1;
    };

    if (*va) return run_search(va_logic, {}, va_formula, va_bounds, va_frames_only, va_algebras_only, va_json);
    if (*co) return run_search(co_logic, co_hyps, co_goal, co_bounds, false, false, co_json);

    if (*eq) {
      LogicId logic = parse_logic(eq_logic);
      EquationReport r = solve_equation(logic, eq_var, parse_or_die(eq_lhs), parse_or_die(eq_rhs),
                                        parse_bounds(eq_bounds));
      if (eq_json) {
        json sols = json::array();
        for (const auto& s : r.solutions)
          sols.push_back({{"model", s.model_id}, {"element", s.element}, {"true", s.classically_true}});
        json j{{"models_searched", r.models_searched},
               {"solutions", sols},
               {"unsatisfiable_everywhere", r.unsatisfiable_everywhere()},
               {"solvable_true", r.solvable_true()},
               {"solvable_false", r.solvable_false()}};
        std::cout << j.dump(2) << "\n";
      } else if (r.unsatisfiable_everywhere()) {
        std::cout << "unsatisfiable everywhere (" << r.models_searched << " models)\n";
      } else {
        for (const auto& s : r.solutions)
          std::cout << s.model_id << ": " << eq_var << " = " << s.element
                    << (s.classically_true ? " (classically true)" : " (classically false)") << "\n";
        std::cout << "solutions: " << r.solutions.size() << " across " << r.models_searched
                  << " models; solvable-true=" << (r.solvable_true() ? "yes" : "no")
                  << " solvable-false=" << (r.solvable_false() ? "yes" : "no") << "\n";
      }
      return r.solutions.empty() ? 1 : 0;
    }

    if (*br) {
      json j = json::parse(read_file(br_file));
      if (j.contains("carrier")) {
        AlgebraicModel m = model_from_json(j);
        AlgebraToFrame r = algebra_to_frame(m, {});
        emit(frame_to_json(r.model.frame), br_out);
      } else if (j.contains("worlds")) {
        Frame f = frame_from_json(j);
        AlgebraicModel m = frame_to_algebra(f);
        m.cls = LogicId::EL5m;
        emit(model_to_json(m), br_out);
      } else {
        std::cerr << "error: " << br_file << " is neither a model nor a frame file\n";
        return 2;
      }
      return 0;
    }

    if (*li) {
      DerivationFile df = derivation_from_text(read_file(li_file));
      LogicId target = *logic_from_string(li_target);
      Derivation lifted = box_lift(df.derivation, target);
      std::string text = derivation_to_text(target, lifted);
      if (li_out) write_file(*li_out, text);
      else std::cout << text;
      CheckResult r = check_derivation(target, lifted);
      if (!r.accepted) {
        std::cerr << "internal error: lifted derivation fails its check\n";
        return 1;
      }
      return 0;
    }

    if (*rp) {
      if (!rp_fixture_dir.empty()) {
        std::filesystem::create_directories(rp_fixture_dir);
        for (const Fixture& fx : fixtures::all()) {
          if (fx.options.basis) continue;  // custom-basis fixtures have no file syntax
          write_file(rp_fixture_dir + "/" + fx.name + ".drv",
                     derivation_to_text(fx.logic, fx.derivation));
        }
        std::cout << "fixtures written to " << rp_fixture_dir << "\n";
      }
      std::vector<int> ids;
      bool all = rp_ids.empty();
      for (const auto& s : rp_ids) {
        if (s == "all") all = true;
        else ids.push_back(std::stoi(s));
      }
      if (all) {
        ids.clear();
        for (int i = 1; i <= 9; ++i) ids.push_back(i);
      }
      bool pass = true;
      for (int id : ids) {
        acceptance::Outcome o = acceptance::run_criterion(id);
        pass = pass && o.pass;
        std::printf("[%s] %d %-22s (%.2fs) %s\n", o.pass ? "PASS" : "FAIL", o.id, o.name.c_str(),
                    o.seconds, o.detail.c_str());
        std::fflush(stdout);
      }
      return pass ? 0 : 1;
    }

    if (*st) {
      acceptance::Outcome o = acceptance::parser_roundtrip(st_seed);
      std::cout << (o.pass ? "pass: " : "FAIL: ") << o.detail << "\n";
      return o.pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
