#pragma once

#include <string>
#include <vector>

#include "boxkit/formula.hpp"
#include "boxkit/parse.hpp"

namespace boxkit::corpus {

// Intuitionistic theorems used by the embedding suite.
inline const std::vector<std::string>& ipc_theorems() {
  static const std::vector<std::string> v = {
      "p -> p",
      "p -> (q -> p)",
      "(p -> q -> r) -> (p -> q) -> p -> r",
      "p & q -> p",
      "p & q -> q & p",
      "p -> p | q",
      "p | q -> q | p",
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
  };
  return v;
}

// Classically valid non-theorems, all refutable in at most six worlds.
inline const std::vector<std::string>& ipc_non_theorems() {
  static const std::vector<std::string> v = {
      "((p -> q) -> p) -> p",
      "p | ~p",
      "~~p -> p",
      "(p -> q) | (q -> p)",
      "~p | ~~p",
      "(~p -> q | r) -> (~p -> q) | (~p -> r)",
      "~(p & q) -> ~p | ~q",
      "(p -> q) -> ~p | q",
      "p | (p -> q)",
      "((p -> q) -> q) -> p | q",
  };
  return v;
}

// Modal/epistemic formulas exercised by the correspondence suite; at most
// two variables each so the assignment sweeps stay exhaustive.
inline const std::vector<std::string>& correspondence_corpus() {
  static const std::vector<std::string> v = {
      "x",
      "~x",
      "~~x",
      "x | ~x",
      "x & y",
      "x | y",
      "x -> y",
      "x <-> ~~x",
      "_|_",
      "T",
      "[]x",
      "[]~x",
      "[]~~x",
      "<>x",
      "<>~x",
      "[]x -> x",
      "x -> []x",
      "x -> <>x",
      "[]x -> [][]x",
      "~[]x -> []~[]x",
      "[](x | ~x)",
      "[]([]x | ~[]x)",
      "[](x | y) -> ([]x | []y)",
      "[](x -> y) -> ([]x -> []y)",
      "[](x -> y) -> []([]x -> []y)",
      "<>[]x -> [][]x",
      "<>~[]x -> []~[]x",
      "x == y",
      "x == T",
      "x == ~~x",
      "(x == y) -> ([]x == []y)",
      "[]x <-> (x == T)",
      "~<>_|_",
      "[]~<>_|_",
      "Kx",
      "~Kx",
      "KKx",
      "K(x & y)",
      "Kx & Ky",
      "K(x -> y) -> (Kx -> Ky)",
      "[]x -> []Kx",
      "Kx -> <>Kx",
      "[]x -> []K[]x",
      "~[]x -> []K~[]x",
      "Kx -> ~~x",
      "Kx == []Kx",
      "<>Kx",
      "x -> Kx",
      "K[]x | K~[]x",
      "[](Kx -> KKx)",
  };
  return v;
}

inline std::vector<Formula> parse_all(const std::vector<std::string>& in) {
  std::vector<Formula> out;
  out.reserve(in.size());
  for (const auto& s : in) out.push_back(parse(s));
  return out;
}

}  // namespace boxkit::corpus
