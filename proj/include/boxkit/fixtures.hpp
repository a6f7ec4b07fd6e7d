#pragma once

#include <string>
#include <vector>

#include "boxkit/calculi.hpp"
#include "boxkit/parse.hpp"

namespace boxkit {

// Incremental construction of Hilbert-style derivations. The builder keeps
// the line formulas so that MP conclusions and the derived blocks (chained
// implications, distribution, boxed transitivity) can be emitted without
// restating every intermediate formula at the call site.
class DerivationBuilder {
 public:
  explicit DerivationBuilder(LogicId logic) : logic_(logic) {}

  int hyp(const Formula& f) {
    d_.hypotheses.push_back(f);
    return add(f, Justification::hyp());
  }
  int ax(SchemeId s, const Formula& f) { return add(f, Justification::ax(s)); }
  int ax_extra(const std::string& name, const Formula& f) {
    return add(f, Justification::ax_extra(name));
  }
  int int_ax(const Formula& f) { return ax(SchemeId::INT, f); }
  int an(SchemeId s, const Formula& boxed) {
    require(boxed.conn() == Conn::Box, "AN line must be boxed");
    return add(boxed, Justification::an(s));
  }
  int an_extra(const std::string& name, const Formula& boxed) {
    require(boxed.conn() == Conn::Box, "AN line must be boxed");
    return add(boxed, Justification::an_extra(name));
  }
  int tnd(const Formula& f) {
    require(is_tnd_instance(f), "not a TND instance");
    return add(f, Justification::thm(SchemeId::TND));
  }
  int sp(const Formula& f) {
    require(is_sp_instance(f), "not an SP instance");
    return add(f, Justification::thm(SchemeId::SP));
  }
  int mp(int ante, int impl) {
    const Formula& fi = formula(ante);
    const Formula& fj = formula(impl);
    require(fj.conn() == Conn::Imp && fj.left() == fi, "MP premises do not fit");
    return add(fj.right(), Justification::mp(ante, impl));
  }

  // A -> C from lines A -> B and B -> C, through a transitivity instance.
  int imp_trans(int iab, int ibc) {
    const Formula ab = formula(iab), bc = formula(ibc);
    require(ab.conn() == Conn::Imp && bc.conn() == Conn::Imp && ab.right() == bc.left(),
            "imp_trans premises do not chain");
    int t = int_ax(Formula::imp(ab, Formula::imp(bc, Formula::imp(ab.left(), bc.right()))));
    return mp(ibc, mp(iab, t));
  }

  // box(a -> b) -> (box a -> box b), derived from an A3 and an A2 instance.
  int dist(const Formula& a, const Formula& b) {
    const Formula bi = Formula::box(Formula::imp(a, b));
    const Formula step = Formula::imp(Formula::box(a), Formula::box(b));
    int i1 = ax(SchemeId::A3, Formula::imp(bi, Formula::box(step)));
    int i2 = ax(SchemeId::A2, Formula::imp(Formula::box(step), step));
    return imp_trans(i1, i2);
  }

  // box b from lines box(a -> b) and box a.
  int box_mp(int iimp, int iante) {
    const Formula bi = formula(iimp);
    require(bi.conn() == Conn::Box && bi.child().conn() == Conn::Imp, "box_mp wants a boxed implication");
    int d = dist(bi.child().left(), bi.child().right());
    return mp(iante, mp(iimp, d));
  }

  // box(A -> C) from lines box(A -> B) and box(B -> C). Uses the transitivity
  // axiom where it is primitive, otherwise routes through distribution.
  int box_trans(int iab, int ibc) {
    const Formula fab = formula(iab), fbc = formula(ibc);
    require(fab.conn() == Conn::Box && fab.child().conn() == Conn::Imp, "box_trans premise 1");
    require(fbc.conn() == Conn::Box && fbc.child().conn() == Conn::Imp, "box_trans premise 2");
    const Formula a = fab.child().left(), b = fab.child().right(), c = fbc.child().right();
    require(fbc.child().left() == b, "box_trans premises do not chain");
    const Formula goal = Formula::box(Formula::imp(a, c));
    if (logic_ == LogicId::L) {
      int t = ax(SchemeId::TRANS, Formula::imp(fab, Formula::imp(fbc, goal)));
      return mp(ibc, mp(iab, t));
    }
    const Formula rest = Formula::imp(fbc.child(), Formula::imp(a, c));
    int t = an(SchemeId::INT, Formula::box(Formula::imp(fab.child(), rest)));
    int d1 = dist(fab.child(), rest);
    int m1 = mp(iab, mp(t, d1));  // box((b -> c) -> (a -> c))
    int d2 = dist(fbc.child(), Formula::imp(a, c));
    return mp(ibc, mp(m1, d2));
  }

  // A & B from lines A and B.
  int pair(int ia, int ib) {
    const Formula a = formula(ia), b = formula(ib);
    int t = int_ax(Formula::imp(a, Formula::imp(b, Formula::and_(a, b))));
    return mp(ib, mp(ia, t));
  }

  const Formula& formula(int i) const { return d_.lines[static_cast<size_t>(i)].formula; }
  int last() const { return static_cast<int>(d_.lines.size()) - 1; }
  Derivation take() { return std::move(d_); }
  LogicId logic() const { return logic_; }

 private:
  LogicId logic_;
  Derivation d_;

  int add(Formula f, Justification j) {
    d_.lines.push_back({std::move(f), std::move(j)});
    return last();
  }
  static void require(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("DerivationBuilder: ") + what);
  }
};

struct Fixture {
  std::string name;
  LogicId logic;
  CheckOptions options;
  Derivation derivation;
  Formula conclusion;  // expected final line
};

namespace fixtures {

inline Formula V(const char* s) { return Formula::var(s); }

// box x <-> (x == T), both directions paired into one derivation.
inline Fixture box_iff_equiv_top() {
  using F = Formula;
  DerivationBuilder b(LogicId::L3);
  const F x = V("x"), T = F::top();
  const F A = F::imp(x, T), B = F::imp(T, x), AB = F::and_(A, B);
  const F bx = F::box(x), bAB = F::box(AB);

  int l1 = b.an(SchemeId::INT, F::box(A));
  int l2 = b.an(SchemeId::INT, F::box(F::imp(x, B)));
  int l4 = b.mp(l2, b.dist(x, B));                       // box x -> box B
  int l5 = b.an(SchemeId::INT, F::box(F::imp(A, F::imp(B, AB))));
  int l6 = b.box_mp(l5, l1);                             // box(B -> AB)
  int l8 = b.mp(l6, b.dist(B, AB));                      // box B -> box AB
  int fwd = b.imp_trans(l4, l8);                         // box x -> (x == T)

  int l10 = b.an(SchemeId::INT, F::box(F::imp(AB, B)));
  int l12 = b.mp(l10, b.dist(AB, B));                    // box AB -> box B
  int l14 = b.imp_trans(l12, b.dist(T, x));              // box AB -> (box T -> box x)
  int l15 = b.an(SchemeId::INT, F::box(T));
  int l16 = b.int_ax(F::imp(F::imp(bAB, F::imp(F::box(T), bx)),
                            F::imp(F::box(T), F::imp(bAB, bx))));
  int l18 = b.mp(l15, b.mp(l14, l16));                   // (x == T) -> box x
  int fin = b.pair(fwd, l18);

  Formula stmt = b.formula(fin);
  return {"box_iff_equiv_top", LogicId::L3, {}, b.take(), stmt};
}

// no possible refutation of truth: ~<>_|_ in the weakest system
inline Fixture no_possible_proof_of_bot() {
  using F = Formula;
  DerivationBuilder b(LogicId::L);
  const F nb = F::neg(F::bot());
  int l1 = b.an(SchemeId::INT, F::box(nb));
  int l2 = b.int_ax(F::imp(F::box(nb), F::neg(F::neg(F::box(nb)))));
  int l3 = b.mp(l1, l2);
  Formula stmt = b.formula(l3);
  return {"no_possible_proof_of_bot", LogicId::L, {}, b.take(), stmt};
}

// truth implies possible proof: x -> <>x
inline Derivation truth_implies_possible(LogicId logic, const Formula& x, Formula* stmt) {
  using F = Formula;
  DerivationBuilder b(logic);
  const F bnx = F::box(F::neg(x));
  int l1 = b.ax(SchemeId::A2, F::imp(bnx, F::neg(x)));
  int l2 = b.int_ax(F::imp(F::imp(bnx, F::imp(x, F::bot())),
                           F::imp(x, F::imp(bnx, F::bot()))));
  int l3 = b.mp(l1, l2);
  *stmt = b.formula(l3);
  return b.take();
}

inline Fixture classical_truth_possible_proof() {
  Formula stmt;
  Derivation d = truth_implies_possible(LogicId::L, Formula::var("x"), &stmt);
  return {"classical_truth_possible_proof", LogicId::L, {}, std::move(d), stmt};
}

// actual proof implies possible proof: []x -> <>x
inline Fixture actual_implies_possible() {
  using F = Formula;
  DerivationBuilder b(LogicId::L);
  const F x = V("x"), bx = F::box(x), bnx = F::box(F::neg(x));
  int l1 = b.ax(SchemeId::A2, F::imp(bx, x));
  int l2 = b.ax(SchemeId::A2, F::imp(bnx, F::neg(x)));
  int l3 = b.int_ax(F::imp(F::imp(bnx, F::imp(x, F::bot())),
                           F::imp(x, F::imp(bnx, F::bot()))));
  int l4 = b.mp(l2, l3);  // x -> <>x
  int l5 = b.imp_trans(l1, l4);
  Formula stmt = b.formula(l5);
  return {"actual_implies_possible", LogicId::L, {}, b.take(), stmt};
}

// boxed consistency: [](~<>_|_), in the 4-logic via the boxing transform
inline Fixture boxed_consistency() {
  Fixture base = no_possible_proof_of_bot();
  Derivation lifted = box_theorem(base.derivation, LogicId::L4);
  Formula stmt = lifted.conclusion();
  return {"boxed_consistency", LogicId::L4, {}, std::move(lifted), stmt};
}

// <>[]x -> [][]x
inline Fixture possible_actuality_is_actual() {
  using F = Formula;
  DerivationBuilder b(LogicId::L5);
  const F x = V("x"), bx = F::box(x);
  int l1 = b.ax(SchemeId::A5, F::imp(F::neg(bx), F::box(F::neg(bx))));
  int l2 = b.int_ax(F::imp(b.formula(l1), F::imp(F::neg(F::box(F::neg(bx))), F::neg(F::neg(bx)))));
  int l3 = b.mp(l1, l2);  // <>[]x -> ~~[]x
  int l4 = b.tnd(F::or_(bx, F::neg(bx)));
  int l5 = b.int_ax(F::imp(b.formula(l4), F::imp(F::neg(F::neg(bx)), bx)));
  int l6 = b.mp(l4, l5);
  int l7 = b.imp_trans(l3, l6);  // <>[]x -> []x
  int l8 = b.ax(SchemeId::A4, F::imp(bx, F::box(bx)));
  int l9 = b.imp_trans(l7, l8);
  Formula stmt = b.formula(l9);
  return {"possible_actuality_is_actual", LogicId::L5, {}, b.take(), stmt};
}

// <>~[]x -> []~[]x
inline Fixture possible_unprovability_is_actual() {
  using F = Formula;
  DerivationBuilder b(LogicId::L5);
  const F x = V("x"), bx = F::box(x);
  const F nn = F::neg(F::neg(bx));
  int l1 = b.an(SchemeId::INT, F::box(F::imp(bx, nn)));
  int l2 = b.mp(l1, b.dist(bx, nn));  // [][]x -> []~~[]x
  int l3 = b.ax(SchemeId::A4, F::imp(bx, F::box(bx)));
  int l4 = b.imp_trans(l3, l2);  // []x -> []~~[]x
  int l5 = b.int_ax(F::imp(b.formula(l4), F::imp(F::neg(F::box(nn)), F::neg(bx))));
  int l6 = b.mp(l4, l5);  // <>~[]x -> ~[]x
  int l7 = b.ax(SchemeId::A5, F::imp(F::neg(bx), F::box(F::neg(bx))));
  int l8 = b.imp_trans(l6, l7);
  Formula stmt = b.formula(l8);
  return {"possible_unprovability_is_actual", LogicId::L5, {}, b.take(), stmt};
}

// [](([]x | ~[]x)): provability is internally decided
inline Fixture boxed_decidedness_of_proof() {
  using F = Formula;
  DerivationBuilder b(LogicId::L5);
  const F x = V("x"), D = F::box(x), E = F::neg(F::box(x));
  const F DE = F::or_(D, E), ED = F::or_(E, D);

  int l1 = b.an(SchemeId::INT, F::box(F::imp(D, DE)));
  int l3 = b.mp(l1, b.dist(D, DE));                 // []D -> [](D|E)
  int l4 = b.ax(SchemeId::A4, F::imp(D, F::box(D)));
  int l5 = b.imp_trans(l4, l3);                     // D -> [](D|E)

  int l6 = b.an(SchemeId::INT, F::box(F::imp(E, ED)));
  int l8 = b.mp(l6, b.dist(E, ED));                 // []E -> [](E|D)
  int l9 = b.ax(SchemeId::A5, F::imp(E, F::box(E)));
  int l10 = b.imp_trans(l9, l8);                    // E -> [](E|D)

  int l11 = b.an(SchemeId::INT, F::equiv(ED, DE));  // (E|D) == (D|E)
  int l12 = b.sp(F::imp(F::equiv(ED, DE), F::equiv(F::box(ED), F::box(DE))));
  int l13 = b.mp(l11, l12);                         // [](E|D) == [](D|E)
  int l14 = b.ax(SchemeId::A2, F::imp(b.formula(l13), F::iff(F::box(ED), F::box(DE))));
  int l15 = b.mp(l13, l14);
  int l16 = b.int_ax(F::imp(b.formula(l15), F::imp(F::box(ED), F::box(DE))));
  int l17 = b.mp(l15, l16);                         // [](E|D) -> [](D|E)
  int l18 = b.imp_trans(l10, l17);                  // E -> [](D|E)

  int l19 = b.int_ax(F::imp(b.formula(l5), F::imp(b.formula(l18), F::imp(DE, F::box(DE)))));
  int l21 = b.mp(l18, b.mp(l5, l19));
  int l22 = b.tnd(DE);
  int l23 = b.mp(l22, l21);
  Formula stmt = b.formula(l23);
  return {"boxed_decidedness_of_proof", LogicId::L5, {}, b.take(), stmt};
}

// Kx -> <>Kx: believed propositions are believable
inline Fixture believed_is_believable() {
  Formula stmt;
  Derivation d = truth_implies_possible(LogicId::EL3m, Formula::k(Formula::var("x")), &stmt);
  return {"believed_is_believable", LogicId::EL3m, {}, std::move(d), stmt};
}

// []x -> []K[]x
inline Fixture proof_yields_believed_proof() {
  using F = Formula;
  DerivationBuilder b(LogicId::EL4m);
  const F x = V("x"), bx = F::box(x);
  int l1 = b.ax(SchemeId::A4, F::imp(bx, F::box(bx)));
  int l2 = b.ax(SchemeId::CoRe, F::imp(F::box(bx), F::box(F::k(bx))));
  int l3 = b.imp_trans(l1, l2);
  Formula stmt = b.formula(l3);
  return {"proof_yields_believed_proof", LogicId::EL4m, {}, b.take(), stmt};
}

// ~[]x -> []K~[]x
inline Fixture unprovability_yields_believed_unprovability() {
  using F = Formula;
  DerivationBuilder b(LogicId::EL5m);
  const F x = V("x"), nbx = F::neg(F::box(x));
  int l1 = b.ax(SchemeId::A5, F::imp(nbx, F::box(nbx)));
  int l2 = b.ax(SchemeId::CoRe, F::imp(F::box(nbx), F::box(F::k(nbx))));
  int l3 = b.imp_trans(l1, l2);
  Formula stmt = b.formula(l3);
  return {"unprovability_yields_believed_unprovability", LogicId::EL5m, {}, b.take(), stmt};
}

// <>Kx -> Kx: believable propositions are already believed (with bridge axioms)
inline Fixture believable_is_believed() {
  using F = Formula;
  DerivationBuilder b(LogicId::E6L3m);
  const F kx = F::k(V("x")), nkx = F::neg(kx);
  int l1 = b.ax(SchemeId::NNB, F::imp(nkx, F::box(nkx)));
  int l2 = b.int_ax(F::imp(b.formula(l1), F::imp(F::neg(F::box(nkx)), F::neg(nkx))));
  int l3 = b.mp(l1, l2);  // <>Kx -> ~~Kx
  int l4 = b.tnd(F::or_(kx, nkx));
  int l5 = b.int_ax(F::imp(b.formula(l4), F::imp(F::neg(nkx), kx)));
  int l6 = b.mp(l4, l5);
  int l7 = b.imp_trans(l3, l6);
  Formula stmt = b.formula(l7);
  return {"believable_is_believed", LogicId::E6L3m, {}, b.take(), stmt};
}

// ~Kx -> []~Kx derived from the positive bridge axiom, never citing the
// negative one. Replacement runs through the substitution principle.
inline Fixture nnb_from_pnb() {
  using F = Formula;
  DerivationBuilder b(LogicId::E6L5m);
  const F a = F::k(V("x")), ba = F::box(a);
  int l1 = b.an(SchemeId::PNB, F::box(F::imp(a, ba)));
  int l2 = b.an(SchemeId::A2, F::box(F::imp(ba, a)));
  int l3 = b.an(SchemeId::INT,
                F::box(F::imp(F::imp(ba, a),
                              F::imp(F::imp(a, ba),
                                     F::and_(F::imp(ba, a), F::imp(a, ba))))));
  int l5 = b.box_mp(b.box_mp(l3, l2), l1);  // box Kx == Kx
  const F a5inst = F::imp(F::neg(ba), F::box(F::neg(ba)));
  const F swapped = F::imp(F::neg(ba), F::box(F::neg(a)));
  int l6 = b.sp(F::imp(F::equiv(ba, a), F::equiv(a5inst, swapped)));
  int l7 = b.mp(l5, l6);
  int l8 = b.ax(SchemeId::A2, F::imp(b.formula(l7), F::iff(a5inst, swapped)));
  int l9 = b.mp(l7, l8);
  int l10 = b.int_ax(F::imp(b.formula(l9), F::imp(a5inst, swapped)));
  int l11 = b.mp(l9, l10);
  int l12 = b.ax(SchemeId::A5, a5inst);
  int l13 = b.mp(l12, l11);  // ~[]Kx -> []~Kx
  int l14 = b.ax(SchemeId::A2, F::imp(ba, a));
  int l15 = b.int_ax(F::imp(b.formula(l14), F::imp(F::neg(a), F::neg(ba))));
  int l16 = b.mp(l14, l15);
  int l17 = b.imp_trans(l16, l13);
  Formula stmt = b.formula(l17);
  return {"nnb_from_pnb", LogicId::E6L5m, {}, b.take(), stmt};
}

// boxed positive and negative introspection from the bridge axioms: the
// E5-group systems are contained in the E6-group ones.
inline Fixture boxed_positive_introspection_from_bridge() {
  using F = Formula;
  DerivationBuilder b(LogicId::E6L3m);
  const F kx = F::k(V("x"));
  int l1 = b.an(SchemeId::PNB, F::box(F::imp(kx, F::box(kx))));
  int l2 = b.an(SchemeId::CoRe, F::box(F::imp(F::box(kx), F::box(F::k(kx)))));
  int l3 = b.an(SchemeId::A2, F::box(F::imp(F::box(F::k(kx)), F::k(kx))));
  int l4 = b.box_trans(l1, l2);
  int l5 = b.box_trans(l4, l3);
  Formula stmt = b.formula(l5);
  return {"boxed_positive_introspection_from_bridge", LogicId::E6L3m, {}, b.take(), stmt};
}

inline Fixture boxed_negative_introspection_from_bridge() {
  using F = Formula;
  DerivationBuilder b(LogicId::E6L3m);
  const F nkx = F::neg(F::k(V("x")));
  int l1 = b.an(SchemeId::NNB, F::box(F::imp(nkx, F::box(nkx))));
  int l2 = b.an(SchemeId::CoRe, F::box(F::imp(F::box(nkx), F::box(F::k(nkx)))));
  int l3 = b.an(SchemeId::A2, F::box(F::imp(F::box(F::k(nkx)), F::k(nkx))));
  int l4 = b.box_trans(l1, l2);
  int l5 = b.box_trans(l4, l3);
  Formula stmt = b.formula(l5);
  return {"boxed_negative_introspection_from_bridge", LogicId::E6L3m, {}, b.take(), stmt};
}

// The simplified axiomatization of the 4-logics: plain distribution and
// box p -> K p, instead of the stronger boxed forms.
inline AxiomBasis simplified_el4m_basis() {
  using F = Formula;
  const F p = F::var("$p"), q = F::var("$q");
  AxiomBasis basis;
  basis.schemes = {SchemeId::A1, SchemeId::A2, SchemeId::A4, SchemeId::KBel, SchemeId::INT};
  basis.extra.emplace_back("DIST", F::imp(F::box(F::imp(p, q)),
                                          F::imp(F::box(p), F::box(q))));
  basis.extra.emplace_back("CoReW", F::imp(F::box(p), F::k(p)));
  return basis;
}

// Direction one of the equivalence: the simplified axioms are theorems of
// the original system (and so are their boxed forms).
inline Fixture simplified_axioms_in_el4m() {
  using F = Formula;
  DerivationBuilder b(LogicId::EL4m);
  const F x = V("x"), y = V("y");
  int l1 = b.dist(x, y);  // [](x->y) -> ([]x -> []y)
  int l2 = b.ax(SchemeId::CoRe, F::imp(F::box(x), F::box(F::k(x))));
  int l3 = b.ax(SchemeId::A2, F::imp(F::box(F::k(x)), F::k(x)));
  int l4 = b.imp_trans(l2, l3);  // []x -> Kx
  int l5 = b.pair(l1, l4);
  Formula stmt = b.formula(l5);
  return {"simplified_axioms_in_el4m", LogicId::EL4m, {}, b.take(), stmt};
}

inline Fixture simplified_axioms_in_el4m_boxed() {
  Fixture base = simplified_axioms_in_el4m();
  Derivation lifted = box_theorem(base.derivation, LogicId::EL4m);
  Formula stmt = lifted.conclusion();
  return {"simplified_axioms_in_el4m_boxed", LogicId::EL4m, {}, std::move(lifted), stmt};
}

// Direction two: the original A3 and co-reflection instances are theorems of
// the simplified system.
inline Fixture original_axioms_in_simplified_el4m() {
  using F = Formula;
  DerivationBuilder b(LogicId::EL4m);
  const F x = V("x"), y = V("y");
  // co-reflection
  int l1 = b.an_extra("CoReW", F::box(F::imp(F::box(x), F::k(x))));
  int l2 = b.ax_extra("DIST", F::imp(b.formula(l1),
                                     F::imp(F::box(F::box(x)), F::box(F::k(x)))));
  int l3 = b.mp(l1, l2);  // [][]x -> []Kx
  int l4 = b.ax(SchemeId::A4, F::imp(F::box(x), F::box(F::box(x))));
  int l5 = b.imp_trans(l4, l3);  // []x -> []Kx
  // A3
  const F di = F::imp(F::box(F::imp(x, y)), F::imp(F::box(x), F::box(y)));
  int l6 = b.an_extra("DIST", F::box(di));
  int l7 = b.ax_extra("DIST", F::imp(F::box(di), F::imp(F::box(F::box(F::imp(x, y))),
                                                        F::box(F::imp(F::box(x), F::box(y))))));
  int l8 = b.mp(l6, l7);
  int l9 = b.ax(SchemeId::A4, F::imp(F::box(F::imp(x, y)), F::box(F::box(F::imp(x, y)))));
  int l10 = b.imp_trans(l9, l8);  // [](x->y) -> [](([]x -> []y))
  int l11 = b.pair(l5, l10);
  Formula stmt = b.formula(l11);
  CheckOptions opt;
  opt.basis = simplified_el4m_basis();
  return {"original_axioms_in_simplified_el4m", LogicId::EL4m, opt, b.take(), stmt};
}

inline Fixture original_axioms_in_simplified_el4m_boxed() {
  Fixture base = original_axioms_in_simplified_el4m();
  AxiomBasis basis = simplified_el4m_basis();
  Derivation lifted = box_theorem(base.derivation, LogicId::EL4m, &basis);
  Formula stmt = lifted.conclusion();
  CheckOptions opt;
  opt.basis = basis;
  return {"original_axioms_in_simplified_el4m_boxed", LogicId::EL4m, opt, std::move(lifted), stmt};
}

inline std::vector<Fixture> all() {
  return {
      box_iff_equiv_top(),
      no_possible_proof_of_bot(),
      classical_truth_possible_proof(),
      actual_implies_possible(),
      boxed_consistency(),
      possible_actuality_is_actual(),
      possible_unprovability_is_actual(),
      boxed_decidedness_of_proof(),
      believed_is_believable(),
      proof_yields_believed_proof(),
      unprovability_yields_believed_unprovability(),
      believable_is_believed(),
      nnb_from_pnb(),
      boxed_positive_introspection_from_bridge(),
      boxed_negative_introspection_from_bridge(),
      simplified_axioms_in_el4m(),
      simplified_axioms_in_el4m_boxed(),
      original_axioms_in_simplified_el4m(),
      original_axioms_in_simplified_el4m_boxed(),
  };
}

// Small derivations in the purely intuitionistic fragment, inputs to the
// box-lifting embedding.
inline std::vector<Derivation> ipc_lift_inputs() {
  std::vector<Derivation> out;
  auto single = [&](const char* s) {
    DerivationBuilder b(LogicId::L5);
    b.int_ax(parse(s));
    out.push_back(b.take());
  };
  single("p -> p");
  single("p -> (q -> p)");
  single("~~(p | ~p)");
  single("_|_ -> p");
  single("(p -> q) -> ((q -> r) -> (p -> r))");
  {
    DerivationBuilder b(LogicId::L5);
    int h1 = b.hyp(parse("p"));
    int h2 = b.hyp(parse("p -> q"));
    b.mp(h1, h2);
    out.push_back(b.take());
  }
  {
    DerivationBuilder b(LogicId::L5);
    int h1 = b.hyp(parse("p & q"));
    int t = b.int_ax(parse("p & q -> q"));
    b.mp(h1, t);
    out.push_back(b.take());
  }
  {
    DerivationBuilder b(LogicId::L5);
    int h = b.hyp(parse("p"));
    int t = b.int_ax(parse("p -> (q -> p)"));
    b.mp(h, t);
    out.push_back(b.take());
  }
  {
    DerivationBuilder b(LogicId::L5);
    int h1 = b.hyp(parse("p -> q"));
    int h2 = b.hyp(parse("q -> r"));
    b.imp_trans(h1, h2);
    out.push_back(b.take());
  }
  {
    DerivationBuilder b(LogicId::L5);
    int a = b.int_ax(parse("p -> (p | q)"));
    int t = b.int_ax(parse("(p -> (p | q)) -> (~(p | q) -> ~p)"));
    b.mp(a, t);
    out.push_back(b.take());
  }
  return out;
}

// Derivations in the intuitionistic epistemic systems (no box), inputs to
// the lifting into EL5star.
inline std::vector<Derivation> iel_lift_inputs() {
  using F = Formula;
  std::vector<Derivation> out;
  {
    DerivationBuilder b(LogicId::EL5star);
    b.ax(SchemeId::IntCo, parse("x -> Kx"));
    out.push_back(b.take());
  }
  {
    DerivationBuilder b(LogicId::EL5star);
    b.ax(SchemeId::IntRe, parse("Kx -> ~~x"));
    out.push_back(b.take());
  }
  {
    // Kp -> (Kq -> K(p & q))
    DerivationBuilder b(LogicId::EL5star);
    const Formula pairing = parse("p -> (q -> p & q)");
    int l1 = b.int_ax(pairing);
    int l2 = b.ax(SchemeId::IntCo, F::imp(pairing, F::k(pairing)));
    int l3 = b.mp(l1, l2);
    int l4 = b.ax(SchemeId::KBel, F::imp(F::k(pairing),
                                         F::imp(F::k(parse("p")), F::k(parse("q -> p & q")))));
    int l5 = b.mp(l3, l4);
    int l6 = b.ax(SchemeId::KBel, F::imp(F::k(parse("q -> p & q")),
                                         F::imp(F::k(parse("q")), F::k(parse("p & q")))));
    b.imp_trans(l5, l6);
    out.push_back(b.take());
  }
  {
    // from hypothesis x: Kx
    DerivationBuilder b(LogicId::EL5star);
    int h = b.hyp(parse("x"));
    int t = b.ax(SchemeId::IntCo, parse("x -> Kx"));
    b.mp(h, t);
    out.push_back(b.take());
  }
  return out;
}

}  // namespace fixtures

}  // namespace boxkit
