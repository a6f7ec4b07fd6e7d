#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "boxkit/algebra.hpp"
#include "boxkit/bridge.hpp"
#include "boxkit/calculi.hpp"
#include "boxkit/frames.hpp"
#include "boxkit/ipc.hpp"
#include "boxkit/parse.hpp"
#include "boxkit/print.hpp"

namespace boxkit {

using nlohmann::json;

// --------------------------------------------------------------------------
// Algebraic model files: carrier size, order as bit rows, modal tables as
// index arrays, TRUE as an index list, declared class tag.

inline json model_to_json(const AlgebraicModel& m) {
  json j;
  j["carrier"] = m.alg.n;
  std::vector<uint64_t> rows;
  for (int a = 0; a < m.alg.n; ++a) {
    uint64_t row = 0;
    for (int b = 0; b < m.alg.n; ++b)
      if (m.alg.le(a, b)) row |= 1ull << b;
    rows.push_back(row);
  }
  j["leq"] = rows;
  j["class"] = to_string(m.cls);
  if (m.box_t) j["box"] = *m.box_t;
  else j["box"] = nullptr;
  if (m.k_t) j["k"] = *m.k_t;
  else j["k"] = nullptr;
  if (m.true_filter) {
    std::vector<int> t;
    for (int a = 0; a < m.alg.n; ++a)
      if ((*m.true_filter >> a) & 1) t.push_back(a);
    j["true_filter"] = t;
  } else {
    j["true_filter"] = nullptr;
  }
  if (!m.id.empty()) j["id"] = m.id;
  return j;
}

inline AlgebraicModel model_from_json(const json& j) {
  AlgebraicModel m;
  int n = j.at("carrier").get<int>();
  if (n <= 0 || n > 32) throw std::invalid_argument("model file: carrier out of range");
  std::vector<uint64_t> rows = j.at("leq").get<std::vector<uint64_t>>();
  if (rows.size() != static_cast<size_t>(n)) throw std::invalid_argument("model file: bad leq");
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) leq[static_cast<size_t>(a) * n + b] = (rows[static_cast<size_t>(a)] >> b) & 1;
  m.alg = algebra_from_leq(n, leq);
  auto cls = logic_from_string(j.at("class").get<std::string>());
  if (!cls) throw std::invalid_argument("model file: unknown class tag");
  m.cls = *cls;
  auto table = [&](const char* key) -> std::optional<std::vector<int>> {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    std::vector<int> t = j.at(key).get<std::vector<int>>();
    if (t.size() != static_cast<size_t>(n)) throw std::invalid_argument("model file: bad table size");
    for (int v : t)
      if (v < 0 || v >= n) throw std::invalid_argument("model file: table index out of range");
    return t;
  };
  m.box_t = table("box");
  m.k_t = table("k");
  if (j.contains("true_filter") && !j.at("true_filter").is_null()) {
    uint64_t t = 0;
    for (int a : j.at("true_filter").get<std::vector<int>>()) {
      if (a < 0 || a >= n) throw std::invalid_argument("model file: TRUE index out of range");
      t |= 1ull << a;
    }
    m.true_filter = t;
  }
  if (j.contains("id")) m.id = j.at("id").get<std::string>();
  return m;
}

// --------------------------------------------------------------------------
// Frame files: world count, order as bit rows, props as bit rows over worlds,
// E as per-world generator lists (indices into props), optional w_T.

inline json frame_to_json(const Frame& f) {
  json j;
  j["worlds"] = f.n();
  std::vector<uint32_t> rows;
  for (int a = 0; a < f.n(); ++a) rows.push_back(f.order.up_mask(a));
  j["order"] = rows;
  j["props"] = f.props;
  std::vector<std::vector<int>> e;
  for (int w = 0; w < f.n(); ++w) {
    int idx = f.prop_index(f.egen[static_cast<size_t>(w)]);
    if (idx < 0) throw std::invalid_argument("frame file: belief generator outside P");
    e.push_back({idx});
  }
  j["E"] = e;
  if (f.wt) j["w_T"] = *f.wt;
  else j["w_T"] = nullptr;
  if (!f.id.empty()) j["id"] = f.id;
  return j;
}

inline Frame frame_from_json(const json& j) {
  Frame f;
  int n = j.at("worlds").get<int>();
  if (n <= 0 || n > 30) throw std::invalid_argument("frame file: world count out of range");
  f.order.n = n;
  f.order.mat.assign(static_cast<size_t>(n) * n, 0);
  std::vector<uint32_t> rows = j.at("order").get<std::vector<uint32_t>>();
  if (rows.size() != static_cast<size_t>(n)) throw std::invalid_argument("frame file: bad order");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      f.order.mat[static_cast<size_t>(a) * n + b] = (rows[static_cast<size_t>(a)] >> b) & 1;
  if (!f.order.valid()) throw std::invalid_argument("frame file: order is not a partial order");
  f.props = j.at("props").get<std::vector<uint32_t>>();
  for (uint32_t p : f.props)
    if (p > (1u << n) - 1) throw std::invalid_argument("frame file: proposition out of range");
  auto e = j.at("E").get<std::vector<std::vector<int>>>();
  if (e.size() != static_cast<size_t>(n)) throw std::invalid_argument("frame file: bad E arity");
  for (int w = 0; w < n; ++w) {
    uint32_t gen = (1u << n) - 1;  // empty generator list = the trivial filter {W}
    for (int idx : e[static_cast<size_t>(w)]) {
      if (idx < 0 || idx >= static_cast<int>(f.props.size()))
        throw std::invalid_argument("frame file: E index out of range");
      gen &= f.props[static_cast<size_t>(idx)];
    }
    f.egen.push_back(gen);
  }
  if (j.contains("w_T") && !j.at("w_T").is_null()) {
    int wt = j.at("w_T").get<int>();
    if (wt < 0 || wt >= n) throw std::invalid_argument("frame file: w_T out of range");
    f.wt = wt;
  }
  if (j.contains("id")) f.id = j.at("id").get<std::string>();
  return f;
}

// --------------------------------------------------------------------------
// Kripke countermodels

inline json kripke_to_json(const KripkeModel& m) {
  json j;
  j["worlds"] = m.n;
  std::vector<uint64_t> rows;
  for (int a = 0; a < m.n; ++a) {
    uint64_t row = 0;
    for (int b = 0; b < m.n; ++b)
      if (m.below(a, b)) row |= 1ull << b;
    rows.push_back(row);
  }
  j["order"] = rows;
  j["root"] = m.root;
  json val = json::object();
  std::set<std::string> vars;
  for (const auto& w : m.val) vars.insert(w.begin(), w.end());
  for (const auto& x : vars) {
    std::vector<int> at;
    for (int w = 0; w < m.n; ++w)
      if (m.val[static_cast<size_t>(w)].count(x)) at.push_back(w);
    val[x] = at;
  }
  j["valuation"] = val;
  return j;
}

inline KripkeModel kripke_from_json(const json& j) {
  KripkeModel m;
  m.n = j.at("worlds").get<int>();
  if (m.n <= 0 || m.n > 62) throw std::invalid_argument("kripke file: world count out of range");
  std::vector<uint64_t> rows = j.at("order").get<std::vector<uint64_t>>();
  if (rows.size() != static_cast<size_t>(m.n)) throw std::invalid_argument("kripke file: bad order");
  m.leq.assign(static_cast<size_t>(m.n), std::vector<uint8_t>(static_cast<size_t>(m.n), 0));
  for (int a = 0; a < m.n; ++a)
    for (int b = 0; b < m.n; ++b) m.leq[static_cast<size_t>(a)][static_cast<size_t>(b)] = (rows[static_cast<size_t>(a)] >> b) & 1;
  m.root = j.at("root").get<int>();
  if (m.root < 0 || m.root >= m.n) throw std::invalid_argument("kripke file: bad root");
  m.val.assign(static_cast<size_t>(m.n), {});
  for (auto it = j.at("valuation").begin(); it != j.at("valuation").end(); ++it)
    for (int w : it.value().get<std::vector<int>>()) {
      if (w < 0 || w >= m.n) throw std::invalid_argument("kripke file: valuation world out of range");
      m.val[static_cast<size_t>(w)].insert(it.key());
    }
  return m;
}

// --------------------------------------------------------------------------
// Derivation files
//
//   logic EL5-
//   hyp []p
//   1. []p ; hyp
//   2. []p -> p ; ax:A2
//   3. p ; MP 1 2
//
// Justifications: hyp, ax:<scheme>, thm:TND, thm:SP, AN:<scheme>, MP <i> <j>.
// Lines are numbered from 1; blank lines and # comments are ignored.

struct DerivationFile {
  LogicId logic = LogicId::L;
  Derivation derivation;
};

namespace detail {

inline std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

inline Justification parse_justification(const std::string& text, int lineno) {
  std::string t = trim(text);
  auto fail = [&](const std::string& why) -> Justification {
    throw std::invalid_argument("derivation file line " + std::to_string(lineno) + ": " + why);
  };
  if (t == "hyp") return Justification::hyp();
  if (t == "thm:TND") return Justification::thm(SchemeId::TND);
  if (t == "thm:SP") return Justification::thm(SchemeId::SP);
  if (t.rfind("ax:", 0) == 0) {
    auto s = scheme_from_string(t.substr(3));
    if (!s) return Justification::ax_extra(t.substr(3));
    return Justification::ax(*s);
  }
  if (t.rfind("AN:", 0) == 0) {
    auto s = scheme_from_string(t.substr(3));
    if (!s) return Justification::an_extra(t.substr(3));
    return Justification::an(*s);
  }
  if (t.rfind("MP", 0) == 0) {
    std::istringstream is(t.substr(2));
    int i = 0, jj = 0;
    if (!(is >> i >> jj)) return fail("malformed MP justification");
    return Justification::mp(i - 1, jj - 1);
  }
  return fail("unknown justification '" + t + "'");
}

}  // namespace detail

inline DerivationFile derivation_from_text(const std::string& text) {
  DerivationFile out;
  bool have_logic = false;
  std::istringstream is(text);
  std::string raw;
  int lineno = 0, expected = 1;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = detail::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("logic", 0) == 0 && !have_logic) {
      auto id = logic_from_string(detail::trim(line.substr(5)));
      if (!id) throw std::invalid_argument("derivation file line " + std::to_string(lineno) +
                                           ": unknown logic tag");
      out.logic = *id;
      have_logic = true;
      continue;
    }
    if (line.rfind("hyp", 0) == 0 && (line.size() == 3 || line[3] == ' ' || line[3] == '\t')) {
      out.derivation.hypotheses.push_back(parse(line.substr(3)));
      continue;
    }
    size_t dot = line.find('.');
    size_t semi = line.rfind(';');
    if (dot == std::string::npos || semi == std::string::npos || semi < dot)
      throw std::invalid_argument("derivation file line " + std::to_string(lineno) +
                                  ": expected '<n>. <formula> ; <justification>'");
    int num = 0;
    try {
      num = std::stoi(line.substr(0, dot));
    } catch (...) {
      throw std::invalid_argument("derivation file line " + std::to_string(lineno) +
                                  ": bad step number");
    }
    if (num != expected)
      throw std::invalid_argument("derivation file line " + std::to_string(lineno) +
                                  ": steps must be numbered consecutively from 1");
    ++expected;
    Formula f = parse(line.substr(dot + 1, semi - dot - 1));
    out.derivation.lines.push_back({f, detail::parse_justification(line.substr(semi + 1), lineno)});
  }
  if (!have_logic) throw std::invalid_argument("derivation file: missing 'logic <tag>' header");
  return out;
}

inline std::string derivation_to_text(LogicId logic, const Derivation& d) {
  std::ostringstream os;
  os << "logic " << to_string(logic) << "\n";
  for (const Formula& h : d.hypotheses) os << "hyp " << print(h) << "\n";
  for (size_t i = 0; i < d.lines.size(); ++i) {
    const auto& [f, just] = d.lines[i];
    os << (i + 1) << ". " << print(f) << " ; ";
    switch (just.kind) {
      case Justification::Kind::Hypothesis: os << "hyp"; break;
      case Justification::Kind::Axiom:
        os << "ax:" << (just.extra.empty() ? to_string(just.scheme) : just.extra.c_str());
        break;
      case Justification::Kind::TheoremScheme: os << "thm:" << to_string(just.scheme); break;
      case Justification::Kind::AN:
        os << "AN:" << (just.extra.empty() ? to_string(just.scheme) : just.extra.c_str());
        break;
      case Justification::Kind::MP: os << "MP " << just.i + 1 << " " << just.j + 1; break;
    }
    os << "\n";
  }
  return os.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace boxkit
