#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "boxkit/algebra.hpp"
#include "boxkit/frames.hpp"

namespace boxkit {

enum class SearchSpace { Auto, AlgebrasOnly, FramesOnly };

struct Bounds {
  int max_algebra_worlds = 5;
  int max_frame_worlds = 4;
  long max_interpretations = -1;  // cap on (model, assignment) pairs; -1 = unbounded
  long time_budget_ms = -1;       // -1 = unbounded
  SearchSpace space = SearchSpace::Auto;
};

// A found counter-interpretation: either an algebraic model with an element
// assignment or a relational model with its proposition assignment baked in.
struct CounterInterpretation {
  std::optional<AlgebraicModel> algebra;
  Assignment algebra_assignment;
  std::optional<RelationalModel> relational;
  std::string model_id;
};

namespace detail {

class Budget {
 public:
  explicit Budget(const Bounds& b)
      : left_(b.max_interpretations),
        deadline_(b.time_budget_ms < 0
                      ? std::chrono::steady_clock::time_point::max()
                      : std::chrono::steady_clock::now() + std::chrono::milliseconds(b.time_budget_ms)) {}

  bool spend() {
    if (left_ == 0) return false;
    if (left_ > 0) --left_;
    if ((++tick_ & 0x3ff) == 0 && std::chrono::steady_clock::now() > deadline_) {
      left_ = 0;
      return false;
    }
    return true;
  }

 private:
  long left_;
  long tick_ = 0;
  std::chrono::steady_clock::time_point deadline_;
};

inline std::vector<std::string> query_vars(const std::vector<Formula>& hyps, const Formula& goal) {
  std::set<std::string> vs = goal.vars();
  for (const auto& h : hyps) h.collect_vars(vs);
  return {vs.begin(), vs.end()};
}

}  // namespace detail

// First interpretation within bounds satisfying every hypothesis but not the
// goal, in deterministic enumeration order: algebraic models first (smaller
// ones first), then frames. Absence of a result is inconclusive, never a
// validity claim.
inline std::optional<CounterInterpretation> find_countermodel(LogicId logic,
                                                              const std::vector<Formula>& hyps,
                                                              const Formula& goal,
                                                              const Bounds& bounds = {}) {
  const Language lang = language_of(logic);
  for (const auto& h : hyps)
    if (!h.in_language(lang)) throw std::invalid_argument("find_countermodel: hypothesis outside the language");
  if (!goal.in_language(lang)) throw std::invalid_argument("find_countermodel: goal outside the language");

  const std::vector<std::string> vars = detail::query_vars(hyps, goal);
  detail::Budget budget(bounds);
  std::optional<CounterInterpretation> found;

  if (bounds.space != SearchSpace::FramesOnly) {
    enumerate_models(logic, bounds.max_algebra_worlds, {}, [&](const AlgebraicModel& m) {
      std::vector<int> pick(vars.size(), 0);
      for (;;) {
        if (!budget.spend()) return false;
        Assignment g;
        for (size_t i = 0; i < vars.size(); ++i) g[vars[i]] = pick[i];
        bool hyps_ok = true;
        for (const auto& h : hyps)
          if (!satisfies(m, g, h)) { hyps_ok = false; break; }
        if (hyps_ok && !satisfies(m, g, goal)) {
          // re-verify before reporting
          bool really = !satisfies(m, g, goal);
          for (const auto& h : hyps) really = really && satisfies(m, g, h);
          if (really) {
            found = CounterInterpretation{m, g, std::nullopt, m.id};
            return false;
          }
        }
        size_t i = 0;
        for (; i < vars.size(); ++i) {
          if (++pick[i] < m.alg.n) break;
          pick[i] = 0;
        }
        if (i == vars.size()) break;
      }
      return true;
    });
    if (found) return found;
  }

  if (bounds.space != SearchSpace::AlgebrasOnly && frame_class_exists(model_class(logic))) {
    enumerate_frames(logic, bounds.max_frame_worlds, [&](const Frame& f) {
      std::vector<size_t> pick(vars.size(), 0);
      for (;;) {
        if (!budget.spend()) return false;
        RelationalModel m{f, {}};
        for (size_t i = 0; i < vars.size(); ++i) m.g[vars[i]] = f.props[pick[i]];
        bool hyps_ok = true;
        for (const auto& h : hyps)
          if (!true_in(m, h)) { hyps_ok = false; break; }
        if (hyps_ok && !true_in(m, goal)) {
          bool really = !true_in(m, goal);
          for (const auto& h : hyps) really = really && true_in(m, h);
          if (really) {
            found = CounterInterpretation{std::nullopt, {}, m, f.id};
            return false;
          }
        }
        size_t i = 0;
        for (; i < vars.size(); ++i) {
          if (++pick[i] < f.props.size()) break;
          pick[i] = 0;
        }
        if (i == vars.size()) break;
      }
      return true;
    });
  }
  return found;
}

// ---------------------------------------------------------------------------
// Self-referential equations

struct EquationSolution {
  std::string model_id;
  int element = 0;
  bool classically_true = false;
};

struct EquationReport {
  std::vector<EquationSolution> solutions;
  long models_searched = 0;
  bool exhausted_bounds = false;

  bool unsatisfiable_everywhere() const { return solutions.empty(); }
  bool solvable_true() const {
    for (const auto& s : solutions)
      if (s.classically_true) return true;
    return false;
  }
  bool solvable_false() const {
    for (const auto& s : solutions)
      if (!s.classically_true) return true;
    return false;
  }
};

// Sweeps every enumerated model of the class for elements e such that lhs and
// rhs denote the same proposition when x denotes e; remaining variables are
// swept over all assignments. classically_true records membership of e in
// TRUE (denotation of the top element in the IEL classes).
inline EquationReport solve_equation(LogicId logic, const std::string& x, const Formula& lhs,
                                     const Formula& rhs, const Bounds& bounds = {}) {
  const Language lang = language_of(logic);
  if (!lhs.in_language(lang) || !rhs.in_language(lang))
    throw std::invalid_argument("solve_equation: equation outside the language");

  std::set<std::string> vs = lhs.vars();
  rhs.collect_vars(vs);
  vs.erase(x);
  const std::vector<std::string> others(vs.begin(), vs.end());

  EquationReport report;
  detail::Budget budget(bounds);
  enumerate_models(logic, bounds.max_algebra_worlds, {}, [&](const AlgebraicModel& m) {
    ++report.models_searched;
    std::vector<bool> solved(static_cast<size_t>(m.alg.n), false);
    for (int e = 0; e < m.alg.n; ++e) {
      std::vector<int> pick(others.size(), 0);
      for (;;) {
        if (!budget.spend()) {
          report.exhausted_bounds = true;
          return false;
        }
        Assignment g{{x, e}};
        for (size_t i = 0; i < others.size(); ++i) g[others[i]] = pick[i];
        if (eval(m, g, lhs) == eval(m, g, rhs)) {
          solved[static_cast<size_t>(e)] = true;
          break;
        }
        size_t i = 0;
        for (; i < others.size(); ++i) {
          if (++pick[i] < m.alg.n) break;
          pick[i] = 0;
        }
        if (i == others.size()) break;
      }
    }
    for (int e = 0; e < m.alg.n; ++e)
      if (solved[static_cast<size_t>(e)]) {
        bool truth = m.true_filter ? m.in_true(e) : e == m.alg.top;
        report.solutions.push_back({m.id, e, truth});
      }
    return true;
  });
  return report;
}

}  // namespace boxkit
