// Shared net fixtures for the unit and acceptance suites.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "netideal/proofnet.hpp"

namespace fixtures {

using netideal::Box;
using netideal::LinkKind;
using netideal::ProofNet;

/// Tiny builder for hand-written fixtures.
struct NB {
  ProofNet net;

  NB& e(const std::string& id, const std::string& formula) {
    std::string err;
    auto f = netideal::parse_formula(formula, &err);
    if (!f) throw std::invalid_argument("fixture formula '" + formula + "': " + err);
    net.edges[id] = {id, *f};
    return *this;
  }
  NB& l(const std::string& id, LinkKind k, std::vector<std::string> prem,
        std::vector<std::string> concl) {
    net.links[id] = {id, k, std::move(prem), std::move(concl)};
    return *this;
  }
  NB& box(const std::string& prom, std::vector<std::string> pax,
          std::vector<std::string> interior) {
    net.boxes.push_back({prom, std::move(pax), std::move(interior)});
    return *this;
  }
};

// ---------------------------------------------------------------------------
// Box gadgets.  Each takes an id prefix and wires a complete box whose bang
// edge is `<p>bang`; pax outputs (if any) are `<p>px<i>`.

/// Box with body X|~X built from one axiom (the promoted Church 0).
inline void add_box_church0(NB& b, const std::string& p) {
  b.e(p + "n", "X").e(p + "o", "~X").e(p + "m", "X|~X").e(p + "bang", "!(X|~X)");
  b.l(p + "ax", LinkKind::Ax, {}, {p + "n", p + "o"});
  b.l(p + "par", LinkKind::Par, {p + "n", p + "o"}, {p + "m"});
  b.l(p + "prom", LinkKind::Prom, {p + "m"}, {p + "bang"});
  b.box(p + "prom", {}, {p + "ax", p + "par"});
}

/// Box with atomic body X and one pax door ?~X (one axiom + dereliction).
inline void add_box_atomic_pax(NB& b, const std::string& p) {
  b.e(p + "u", "~X").e(p + "B", "X").e(p + "d", "?~X").e(p + "px1", "?~X").e(p + "bang", "!X");
  b.l(p + "ax", LinkKind::Ax, {}, {p + "u", p + "B"});
  b.l(p + "der", LinkKind::Der, {p + "u"}, {p + "d"});
  b.l(p + "pax", LinkKind::Pax, {p + "d"}, {p + "px1"});
  b.l(p + "prom", LinkKind::Prom, {p + "B"}, {p + "bang"});
  b.box(p + "prom", {p + "pax"}, {p + "ax", p + "der"});
}

/// Box with atomic body X, one pax door and an interior Cut (the paper-style
/// "cut-equivalent shallow" box).
inline void add_box_interior_cut(NB& b, const std::string& p) {
  b.e(p + "u", "~X").e(p + "x", "X").e(p + "y", "~X").e(p + "B", "X");
  b.e(p + "d", "?~X").e(p + "px1", "?~X").e(p + "bang", "!X");
  b.l(p + "ax1", LinkKind::Ax, {}, {p + "u", p + "x"});
  b.l(p + "ax2", LinkKind::Ax, {}, {p + "y", p + "B"});
  b.l(p + "cut", LinkKind::Cut, {p + "x", p + "y"}, {});
  b.l(p + "der", LinkKind::Der, {p + "u"}, {p + "d"});
  b.l(p + "pax", LinkKind::Pax, {p + "d"}, {p + "px1"});
  b.l(p + "prom", LinkKind::Prom, {p + "B"}, {p + "bang"});
  b.box(p + "prom", {p + "pax"}, {p + "ax1", p + "ax2", p + "cut", p + "der"});
}

/// Box with body X|X and two pax doors (each axiom leg derelicted, both
/// X conclusions collected into the body by a par).
inline void add_box_two_pax(NB& b, const std::string& p) {
  b.e(p + "u1", "~X").e(p + "x1", "X").e(p + "u2", "~X").e(p + "x2", "X");
  b.e(p + "B", "X|X");
  b.e(p + "d1", "?~X").e(p + "d2", "?~X");
  b.e(p + "px1", "?~X").e(p + "px2", "?~X").e(p + "bang", "!(X|X)");
  b.l(p + "ax1", LinkKind::Ax, {}, {p + "u1", p + "x1"});
  b.l(p + "ax2", LinkKind::Ax, {}, {p + "u2", p + "x2"});
  b.l(p + "par", LinkKind::Par, {p + "x1", p + "x2"}, {p + "B"});
  b.l(p + "der1", LinkKind::Der, {p + "u1"}, {p + "d1"});
  b.l(p + "der2", LinkKind::Der, {p + "u2"}, {p + "d2"});
  b.l(p + "pax1", LinkKind::Pax, {p + "d1"}, {p + "px1"});
  b.l(p + "pax2", LinkKind::Pax, {p + "d2"}, {p + "px2"});
  b.l(p + "prom", LinkKind::Prom, {p + "B"}, {p + "bang"});
  b.box(p + "prom", {p + "pax1", p + "pax2"},
        {p + "ax1", p + "ax2", p + "par", p + "der1", p + "der2"});
}

/// Axiom pair + tensor + dereliction producing a ?(~X*~X) edge `<p>q`
/// (the cut partner of the two-pax box's !(X|X)).
inline void add_der_pair_gadget(NB& b, const std::string& p) {
  b.e(p + "a", "X").e(p + "b", "~X").e(p + "c", "X").e(p + "d", "~X");
  b.e(p + "t", "~X*~X").e(p + "q", "?(~X*~X)");
  b.l(p + "ax1", LinkKind::Ax, {}, {p + "a", p + "b"});
  b.l(p + "ax2", LinkKind::Ax, {}, {p + "c", p + "d"});
  b.l(p + "tensor", LinkKind::Tensor, {p + "b", p + "d"}, {p + "t"});
  b.l(p + "der", LinkKind::Der, {p + "t"}, {p + "q"});
  b.l("conc." + p + "a", LinkKind::Conc, {p + "a"}, {});
  b.l("conc." + p + "c", LinkKind::Conc, {p + "c"}, {});
}

/// Axiom + dereliction gadget producing a ?~X edge named `<p>q`, with the
/// spare X conclusion Conc'd.
inline void add_der_gadget(NB& b, const std::string& p) {
  b.e(p + "w", "~X").e(p + "v", "X").e(p + "q", "?~X");
  b.l(p + "ax", LinkKind::Ax, {}, {p + "w", p + "v"});
  b.l(p + "der", LinkKind::Der, {p + "w"}, {p + "q"});
  b.l(p + "conc." + p + "v", LinkKind::Conc, {p + "v"}, {});
}

/// Axiom + tensor + dereliction gadget producing a ?(X*~X) edge `<p>q`.
inline void add_der_tensor_gadget(NB& b, const std::string& p) {
  b.e(p + "a", "~X").e(p + "b", "X").e(p + "c", "~X").e(p + "d", "X");
  b.e(p + "t", "X*~X").e(p + "q", "?(X*~X)");
  b.l(p + "ax1", LinkKind::Ax, {}, {p + "a", p + "b"});
  b.l(p + "ax2", LinkKind::Ax, {}, {p + "c", p + "d"});
  b.l(p + "tensor", LinkKind::Tensor, {p + "b", p + "c"}, {p + "t"});
  b.l(p + "der", LinkKind::Der, {p + "t"}, {p + "q"});
  b.l(p + "conc." + p + "a", LinkKind::Conc, {p + "a"}, {});
  b.l(p + "conc." + p + "d", LinkKind::Conc, {p + "d"}, {});
}

inline void conc(NB& b, const std::string& edge) {
  b.l("conc." + edge, LinkKind::Conc, {edge}, {});
}

// ---------------------------------------------------------------------------
// The paper's three structural examples.

/// Two boxes with atomic bodies; one bang cut against the other's pax output.
/// Shallow — and its only redex is a Prom/Pax commutation.
inline ProofNet ex_shallow_two_boxes() {
  NB b;
  add_box_atomic_pax(b, "L.");
  add_box_atomic_pax(b, "R.");
  b.l("cut.main", LinkKind::Cut, {"R.px1", "L.bang"}, {});
  conc(b, "L.px1");
  conc(b, "R.bang");
  return b.net;
}

/// A box nested inside another box: rejected with rule "nested-box".
inline ProofNet ex_nested_boxes() {
  NB b;
  add_box_atomic_pax(b, "I.");  // inner box
  b.e("v", "~X").e("c", "X").e("e", "?~X").e("q", "?~X").e("bang2", "!X");
  b.l("ax.o", LinkKind::Ax, {}, {"v", "c"});
  b.l("der.o", LinkKind::Der, {"v"}, {"e"});
  b.l("cut.inner", LinkKind::Cut, {"e", "I.bang"}, {});
  b.l("pax.o", LinkKind::Pax, {"I.px1"}, {"q"});
  b.l("prom.o", LinkKind::Prom, {"c"}, {"bang2"});
  b.box("prom.o", {"pax.o"},
        {"I.ax", "I.der", "I.pax", "I.prom", "ax.o", "der.o", "cut.inner"});
  conc(b, "q");
  conc(b, "bang2");
  return b.net;
}

/// A box whose interior has a persistent path avoiding the promoted body:
/// rejected with rule "persistent-path".
inline ProofNet ex_persistent_path() {
  NB b;
  b.e("u", "~X").e("x", "X").e("w", "~X").e("B", "X");
  b.e("m", "X|~X");
  b.e("d", "?~X").e("dm", "?(X|~X)");
  b.e("p", "?~X").e("pm", "?(X|~X)").e("bang", "!X");
  b.l("ax1", LinkKind::Ax, {}, {"u", "x"});
  b.l("ax2", LinkKind::Ax, {}, {"w", "B"});
  b.l("par", LinkKind::Par, {"x", "w"}, {"m"});
  b.l("der1", LinkKind::Der, {"u"}, {"d"});
  b.l("der2", LinkKind::Der, {"m"}, {"dm"});
  b.l("pax1", LinkKind::Pax, {"d"}, {"p"});
  b.l("pax2", LinkKind::Pax, {"dm"}, {"pm"});
  b.l("prom", LinkKind::Prom, {"B"}, {"bang"});
  b.box("prom", {"pax1", "pax2"}, {"ax1", "ax2", "par", "der1", "der2"});
  conc(b, "p");
  conc(b, "pm");
  conc(b, "bang");
  return b.net;
}

// ---------------------------------------------------------------------------
// MLL corpus: ten nets using only Ax/Cut/Tensor/Par/Conc.

inline std::vector<ProofNet> mll_corpus() {
  std::vector<ProofNet> nets;

  {  // 1: a single axiom.
    NB b;
    b.e("a", "X").e("b", "~X");
    b.l("ax", LinkKind::Ax, {}, {"a", "b"});
    conc(b, "a");
    conc(b, "b");
    nets.push_back(b.net);
  }
  {  // 2: axiom closed by a par (Church numeral 0).
    nets.push_back(netideal::church(0));
  }
  {  // 3: two axioms joined by a cut.
    NB b;
    b.e("a", "X").e("b", "~X").e("c", "X").e("d", "~X");
    b.l("ax1", LinkKind::Ax, {}, {"a", "b"});
    b.l("ax2", LinkKind::Ax, {}, {"c", "d"});
    b.l("cut", LinkKind::Cut, {"b", "c"}, {});
    conc(b, "a");
    conc(b, "d");
    nets.push_back(b.net);
  }
  {  // 4: tensor of two axiom legs.
    NB b;
    b.e("a", "X").e("b", "~X").e("c", "X").e("d", "~X").e("t", "~X*X");
    b.l("ax1", LinkKind::Ax, {}, {"a", "b"});
    b.l("ax2", LinkKind::Ax, {}, {"c", "d"});
    b.l("tensor", LinkKind::Tensor, {"b", "c"}, {"t"});
    conc(b, "a");
    conc(b, "t");
    conc(b, "d");
    nets.push_back(b.net);
  }
  {  // 5: tensor against par (one multiplicative cut).
    NB b;
    b.e("a", "X").e("b", "~X").e("c", "X").e("d", "~X").e("t", "~X*X");
    b.e("g", "X").e("e", "~X").e("f", "X").e("h", "~X").e("p", "~X|X");
    b.l("ax1", LinkKind::Ax, {}, {"a", "b"});
    b.l("ax2", LinkKind::Ax, {}, {"c", "d"});
    b.l("tensor", LinkKind::Tensor, {"b", "c"}, {"t"});
    b.l("ax3", LinkKind::Ax, {}, {"g", "e"});
    b.l("ax4", LinkKind::Ax, {}, {"f", "h"});
    b.l("par", LinkKind::Par, {"e", "f"}, {"p"});
    b.l("cut", LinkKind::Cut, {"t", "p"}, {});
    conc(b, "a");
    conc(b, "d");
    conc(b, "g");
    conc(b, "h");
    nets.push_back(b.net);
  }
  {  // 6: Church 0 cut against a tensor of two axiom legs.
    NB b;
    b.e("a", "X").e("b", "~X").e("c", "X|~X");
    b.l("ax", LinkKind::Ax, {}, {"a", "b"});
    b.l("par", LinkKind::Par, {"a", "b"}, {"c"});
    b.e("u", "X").e("v", "~X").e("w", "X").e("x", "~X").e("t", "X*~X");
    b.l("ax2", LinkKind::Ax, {}, {"u", "v"});
    b.l("ax3", LinkKind::Ax, {}, {"w", "x"});
    b.l("tensor", LinkKind::Tensor, {"u", "x"}, {"t"});
    b.l("cut", LinkKind::Cut, {"c", "t"}, {});
    conc(b, "v");
    conc(b, "w");
    nets.push_back(b.net);
  }
  {  // 7: axiom at a compound formula, cut against a built par.
    NB b;
    b.e("t", "X*~X").e("p", "X|~X");
    b.l("ax", LinkKind::Ax, {}, {"t", "p"});
    b.e("a", "X").e("bb", "~X").e("q", "X|~X");
    b.l("ax2", LinkKind::Ax, {}, {"a", "bb"});
    b.l("par", LinkKind::Par, {"a", "bb"}, {"q"});
    b.l("cut", LinkKind::Cut, {"t", "q"}, {});
    conc(b, "p");
    nets.push_back(b.net);
  }
  {  // 8: three-atom tensor chain.
    NB b;
    b.e("a", "X").e("b", "~X").e("c", "X").e("d", "~X").e("e", "X").e("f", "~X");
    b.e("t1", "~X*X").e("t2", "(~X*X)*~X");
    b.l("ax1", LinkKind::Ax, {}, {"a", "b"});
    b.l("ax2", LinkKind::Ax, {}, {"c", "d"});
    b.l("ax3", LinkKind::Ax, {}, {"e", "f"});
    b.l("tensor1", LinkKind::Tensor, {"b", "c"}, {"t1"});
    b.l("tensor2", LinkKind::Tensor, {"t1", "d"}, {"t2"});
    conc(b, "a");
    conc(b, "t2");
    conc(b, "e");
    conc(b, "f");
    nets.push_back(b.net);
  }
  {  // 9: three-atom tensor cut against the matching par.
    NB b;
    b.e("a", "X").e("b", "~X").e("c", "X").e("d", "~X").e("e", "X").e("f", "~X");
    b.e("t1", "~X*X").e("t2", "(~X*X)*~X");
    b.l("ax1", LinkKind::Ax, {}, {"a", "b"});
    b.l("ax2", LinkKind::Ax, {}, {"c", "d"});
    b.l("ax3", LinkKind::Ax, {}, {"e", "f"});
    b.l("tensor1", LinkKind::Tensor, {"b", "c"}, {"t1"});
    b.l("tensor2", LinkKind::Tensor, {"t1", "d"}, {"t2"});
    b.e("u", "X").e("v", "~X").e("w", "X").e("x", "~X");
    b.e("p1", "~X|X").e("p2", "X|(~X|X)");
    b.l("ax4", LinkKind::Ax, {}, {"u", "v"});
    b.l("ax5", LinkKind::Ax, {}, {"w", "x"});
    b.l("par1", LinkKind::Par, {"v", "w"}, {"p1"});
    b.l("par2", LinkKind::Par, {"u", "p1"}, {"p2"});
    b.l("cut", LinkKind::Cut, {"t2", "p2"}, {});
    conc(b, "a");
    conc(b, "e");
    conc(b, "f");
    conc(b, "x");
    nets.push_back(b.net);
  }
  {  // 10: two independent cut chains sharing a net.
    NB b;
    b.e("a", "X").e("b", "~X").e("c", "X").e("d", "~X");
    b.e("e", "X").e("f", "~X").e("g", "X").e("h", "~X");
    b.l("ax1", LinkKind::Ax, {}, {"a", "b"});
    b.l("ax2", LinkKind::Ax, {}, {"c", "d"});
    b.l("ax3", LinkKind::Ax, {}, {"e", "f"});
    b.l("ax4", LinkKind::Ax, {}, {"g", "h"});
    b.l("cut1", LinkKind::Cut, {"b", "c"}, {});
    b.l("cut2", LinkKind::Cut, {"f", "g"}, {});
    conc(b, "a");
    conc(b, "d");
    conc(b, "e");
    conc(b, "h");
    nets.push_back(b.net);
  }
  return nets;
}

// ---------------------------------------------------------------------------
// Reduction fixtures: (net, cut id) pairs, at least five per kind.

inline std::vector<std::pair<ProofNet, std::string>> axcut_fixtures() {
  std::vector<std::pair<ProofNet, std::string>> out;
  {  // plain axiom chain
    NB b;
    b.e("a", "X").e("b", "~X").e("c", "X").e("d", "~X");
    b.l("ax1", LinkKind::Ax, {}, {"a", "b"});
    b.l("ax2", LinkKind::Ax, {}, {"c", "d"});
    b.l("cut", LinkKind::Cut, {"b", "c"}, {});
    conc(b, "a");
    conc(b, "d");
    out.push_back({b.net, "cut"});
  }
  {  // chain of three axioms; reduce the left cut
    NB b;
    b.e("a", "X").e("b", "~X").e("c", "X").e("d", "~X").e("e", "X").e("f", "~X");
    b.l("ax1", LinkKind::Ax, {}, {"a", "b"});
    b.l("ax2", LinkKind::Ax, {}, {"c", "d"});
    b.l("ax3", LinkKind::Ax, {}, {"e", "f"});
    b.l("cut1", LinkKind::Cut, {"b", "c"}, {});
    b.l("cut2", LinkKind::Cut, {"d", "e"}, {});
    conc(b, "a");
    conc(b, "f");
    out.push_back({b.net, "cut1"});
  }
  {  // axiom cut under a tensor context
    NB b;
    b.e("a", "X").e("b", "~X").e("c", "X").e("d", "~X").e("e", "X").e("f", "~X");
    b.e("t", "X*~X");
    b.l("ax1", LinkKind::Ax, {}, {"a", "b"});
    b.l("ax2", LinkKind::Ax, {}, {"c", "d"});
    b.l("ax3", LinkKind::Ax, {}, {"e", "f"});
    b.l("tensor", LinkKind::Tensor, {"a", "d"}, {"t"});
    b.l("cut", LinkKind::Cut, {"b", "c"}, {});
    conc(b, "t");
    conc(b, "e");
    conc(b, "f");
    out.push_back({b.net, "cut"});
  }
  {  // axiom at a compound (two-atom) formula
    NB b;
    b.e("t", "X*~X").e("p", "X|~X").e("t2", "X*~X").e("p2", "X|~X");
    b.l("ax1", LinkKind::Ax, {}, {"t", "p"});
    b.l("ax2", LinkKind::Ax, {}, {"t2", "p2"});
    b.l("cut", LinkKind::Cut, {"p", "t2"}, {});
    conc(b, "t");
    conc(b, "p2");
    out.push_back({b.net, "cut"});
  }
  {  // axiom at an exponential pair (chart parameters are the coordinates)
    NB b;
    b.e("q1", "?(X*~X)").e("b1", "!(X|~X)").e("q2", "?(X*~X)").e("b2", "!(X|~X)");
    b.l("ax1", LinkKind::Ax, {}, {"q1", "b1"});
    b.l("ax2", LinkKind::Ax, {}, {"q2", "b2"});
    b.l("cut", LinkKind::Cut, {"b1", "q2"}, {});
    conc(b, "q1");
    conc(b, "b2");
    out.push_back({b.net, "cut"});
  }
  {  // degenerate: a single axiom cut against itself (closed net)
    NB b;
    b.e("a", "X").e("b", "~X");
    b.l("ax", LinkKind::Ax, {}, {"a", "b"});
    b.l("cut", LinkKind::Cut, {"a", "b"}, {});
    out.push_back({b.net, "cut"});
  }
  return out;
}

inline std::vector<std::pair<ProofNet, std::string>> tensorpar_fixtures() {
  std::vector<std::pair<ProofNet, std::string>> out;
  {  // basic 1+1 atom multiplicative cut
    NB b;
    b.e("a", "X").e("b", "~X").e("c", "X").e("d", "~X").e("t", "~X*X");
    b.e("g", "X").e("e", "~X").e("f", "X").e("h", "~X").e("p", "~X|X");
    b.l("ax1", LinkKind::Ax, {}, {"a", "b"});
    b.l("ax2", LinkKind::Ax, {}, {"c", "d"});
    b.l("tensor", LinkKind::Tensor, {"b", "c"}, {"t"});
    b.l("ax3", LinkKind::Ax, {}, {"g", "e"});
    b.l("ax4", LinkKind::Ax, {}, {"f", "h"});
    b.l("par", LinkKind::Par, {"e", "f"}, {"p"});
    b.l("cut", LinkKind::Cut, {"t", "p"}, {});
    conc(b, "a");
    conc(b, "d");
    conc(b, "g");
    conc(b, "h");
    out.push_back({b.net, "cut"});
  }
  {  // par built over a single axiom (Church 0 against a tensor)
    NB b;
    b.e("a", "X").e("b", "~X").e("c", "X|~X");
    b.l("ax", LinkKind::Ax, {}, {"a", "b"});
    b.l("par", LinkKind::Par, {"a", "b"}, {"c"});
    b.e("u", "X").e("v", "~X").e("w", "X").e("x", "~X").e("t", "X*~X");
    b.l("ax2", LinkKind::Ax, {}, {"u", "v"});
    b.l("ax3", LinkKind::Ax, {}, {"w", "x"});
    b.l("tensor", LinkKind::Tensor, {"u", "x"}, {"t"});
    b.l("cut", LinkKind::Cut, {"c", "t"}, {});
    conc(b, "v");
    conc(b, "w");
    out.push_back({b.net, "cut"});
  }
  {  // 2+1 atoms: compound left factor
    NB b;
    b.e("s", "X*~X").e("sp", "X|~X").e("y", "X").e("z", "~X");
    b.e("t2", "(X*~X)*X").e("u", "~X").e("v", "X").e("w", "X|~X").e("ww", "X*~X");
    b.e("p2", "~X|(X|~X)");
    b.l("ax1", LinkKind::Ax, {}, {"s", "sp"});
    b.l("ax2", LinkKind::Ax, {}, {"y", "z"});
    b.l("tensor", LinkKind::Tensor, {"s", "y"}, {"t2"});
    b.l("ax3", LinkKind::Ax, {}, {"u", "v"});
    b.l("ax4", LinkKind::Ax, {}, {"w", "ww"});
    b.l("par", LinkKind::Par, {"u", "w"}, {"p2"});
    b.l("cut", LinkKind::Cut, {"t2", "p2"}, {});
    conc(b, "sp");
    conc(b, "z");
    conc(b, "v");
    conc(b, "ww");
    out.push_back({b.net, "cut"});
  }
  {  // both factors immediately re-cut (stacked multiplicative cuts)
    NB b;
    b.e("a", "X").e("b", "~X").e("c", "X").e("d", "~X").e("t", "~X*X");
    b.e("e", "X").e("f", "~X").e("g", "X").e("h", "~X").e("p", "~X|X");
    b.e("i", "X").e("j", "~X");
    b.l("ax1", LinkKind::Ax, {}, {"a", "b"});
    b.l("ax2", LinkKind::Ax, {}, {"c", "d"});
    b.l("tensor", LinkKind::Tensor, {"b", "c"}, {"t"});
    b.l("ax3", LinkKind::Ax, {}, {"e", "f"});
    b.l("ax4", LinkKind::Ax, {}, {"g", "h"});
    b.l("par", LinkKind::Par, {"f", "g"}, {"p"});
    b.l("ax5", LinkKind::Ax, {}, {"i", "j"});
    b.l("cut1", LinkKind::Cut, {"t", "p"}, {});
    b.l("cut2", LinkKind::Cut, {"h", "i"}, {});
    conc(b, "a");
    conc(b, "d");
    conc(b, "e");
    conc(b, "j");
    out.push_back({b.net, "cut1"});
  }
  {  // tensor/par cut inside a box interior
    NB b;
    b.e("u", "~X").e("x", "X").e("w", "~X").e("B", "X");
    b.e("t", "X*~X").e("p", "X|~X").e("y", "X").e("z", "~X");
    b.e("d", "?~X").e("px1", "?~X").e("bang", "!X");
    b.l("ax1", LinkKind::Ax, {}, {"u", "x"});
    b.l("ax2", LinkKind::Ax, {}, {"w", "B"});
    b.l("ax3", LinkKind::Ax, {}, {"y", "z"});
    b.l("tensor", LinkKind::Tensor, {"x", "w"}, {"t"});
    b.l("par", LinkKind::Par, {"y", "z"}, {"p"});
    b.l("cut.in", LinkKind::Cut, {"t", "p"}, {});
    b.l("der", LinkKind::Der, {"u"}, {"d"});
    b.l("pax", LinkKind::Pax, {"d"}, {"px1"});
    b.l("prom", LinkKind::Prom, {"B"}, {"bang"});
    b.box("prom", {"pax"}, {"ax1", "ax2", "ax3", "tensor", "par", "cut.in", "der"});
    conc(b, "px1");
    conc(b, "bang");
    out.push_back({b.net, "cut.in"});
  }
  return out;
}

inline std::vector<std::pair<ProofNet, std::string>> bangquest_fixtures() {
  std::vector<std::pair<ProofNet, std::string>> out;
  {  // Church numeral 1 against promoted 0
    out.push_back({netideal::church(1, true), "cut.f"});
  }
  {  // dereliction against an atomic box with one pax door
    NB b;
    add_box_atomic_pax(b, "L.");
    add_der_gadget(b, "G.");
    b.l("cut.main", LinkKind::Cut, {"G.q", "L.bang"}, {});
    conc(b, "L.px1");
    out.push_back({b.net, "cut.main"});
  }
  {  // dereliction against a box with two pax doors
    NB b;
    add_box_two_pax(b, "L.");
    add_der_pair_gadget(b, "G.");
    b.l("cut.main", LinkKind::Cut, {"G.q", "L.bang"}, {});
    conc(b, "L.px1");
    conc(b, "L.px2");
    out.push_back({b.net, "cut.main"});
  }
  {  // dereliction against a box with an interior cut
    NB b;
    add_box_interior_cut(b, "L.");
    add_der_gadget(b, "G.");
    b.l("cut.main", LinkKind::Cut, {"G.q", "L.bang"}, {});
    conc(b, "L.px1");
    out.push_back({b.net, "cut.main"});
  }
  {  // Church 1 against promoted 0 with a bystander axiom chain
    NB b;
    b.net = netideal::church(1, true);
    b.e("z1", "X").e("z2", "~X").e("z3", "X").e("z4", "~X");
    b.l("ax.z1", LinkKind::Ax, {}, {"z1", "z2"});
    b.l("ax.z3", LinkKind::Ax, {}, {"z3", "z4"});
    b.l("cut.z", LinkKind::Cut, {"z2", "z3"}, {});
    conc(b, "z1");
    conc(b, "z4");
    out.push_back({b.net, "cut.f"});
  }
  return out;
}

/// WeakBang fixtures.  Every box here has at least one pax door, so the
/// weakening marker survives the step (both sides denote the empty scheme);
/// the door-less variant church(0, true) is exercised by the reduction-engine
/// tests instead, where only the rewrite itself is under test.
inline std::vector<std::pair<ProofNet, std::string>> weakbang_fixtures() {
  std::vector<std::pair<ProofNet, std::string>> out;
  {  // weakening against an atomic box with one pax door
    NB b;
    add_box_atomic_pax(b, "L.");
    b.e("wk", "?~X");
    b.l("weak", LinkKind::Weak, {}, {"wk"});
    b.l("cut.main", LinkKind::Cut, {"wk", "L.bang"}, {});
    conc(b, "L.px1");
    out.push_back({b.net, "cut.main"});
  }
  {  // weakening against a box with two pax doors
    NB b;
    add_box_two_pax(b, "L.");
    b.e("wk", "?(~X*~X)");
    b.l("weak", LinkKind::Weak, {}, {"wk"});
    b.l("cut.main", LinkKind::Cut, {"wk", "L.bang"}, {});
    conc(b, "L.px1");
    conc(b, "L.px2");
    out.push_back({b.net, "cut.main"});
  }
  {  // weakening against a box with an interior cut
    NB b;
    add_box_interior_cut(b, "L.");
    b.e("wk", "?~X");
    b.l("weak", LinkKind::Weak, {}, {"wk"});
    b.l("cut.main", LinkKind::Cut, {"wk", "L.bang"}, {});
    conc(b, "L.px1");
    out.push_back({b.net, "cut.main"});
  }
  {  // as the first fixture, beside a bystander axiom
    NB b;
    add_box_atomic_pax(b, "L.");
    b.e("wk", "?~X").e("z1", "X").e("z2", "~X");
    b.l("weak", LinkKind::Weak, {}, {"wk"});
    b.l("cut.main", LinkKind::Cut, {"wk", "L.bang"}, {});
    b.l("ax.z1", LinkKind::Ax, {}, {"z1", "z2"});
    conc(b, "L.px1");
    conc(b, "z1");
    conc(b, "z2");
    out.push_back({b.net, "cut.main"});
  }
  {  // two boxes each cut against a weakening; reduce the left one
    NB b;
    add_box_atomic_pax(b, "L.");
    add_box_atomic_pax(b, "R.");
    b.e("wl", "?~X").e("wr", "?~X");
    b.l("weak.l", LinkKind::Weak, {}, {"wl"});
    b.l("weak.r", LinkKind::Weak, {}, {"wr"});
    b.l("cut.wl", LinkKind::Cut, {"wl", "L.bang"}, {});
    b.l("cut.wr", LinkKind::Cut, {"wr", "R.bang"}, {});
    conc(b, "L.px1");
    conc(b, "R.px1");
    out.push_back({b.net, "cut.wl"});
  }
  return out;
}

inline std::vector<std::pair<ProofNet, std::string>> ctrbang_fixtures() {
  std::vector<std::pair<ProofNet, std::string>> out;
  {  // Church numeral 2 against promoted 0
    out.push_back({netideal::church(2, true), "cut.k"});
  }
  {  // contraction of a dereliction and a weakening
    NB b;
    add_box_church0(b, "Z.");
    add_der_tensor_gadget(b, "G.");
    b.e("wk", "?(X*~X)").e("m", "?(X*~X)");
    b.l("weak", LinkKind::Weak, {}, {"wk"});
    b.l("ctr", LinkKind::Ctr, {"G.q", "wk"}, {"m"});
    b.l("cut.main", LinkKind::Cut, {"m", "Z.bang"}, {});
    out.push_back({b.net, "cut.main"});
  }
  {  // contraction cut against a box with a pax door
    NB b;
    add_box_atomic_pax(b, "L.");
    add_der_gadget(b, "G1.");
    add_der_gadget(b, "G2.");
    b.e("m", "?~X");
    b.l("ctr", LinkKind::Ctr, {"G1.q", "G2.q"}, {"m"});
    b.l("cut.main", LinkKind::Cut, {"m", "L.bang"}, {});
    conc(b, "L.px1");
    out.push_back({b.net, "cut.main"});
  }
  {  // left-comb contraction tree of three derelictions
    NB b;
    add_box_church0(b, "Z.");
    add_der_tensor_gadget(b, "G1.");
    add_der_tensor_gadget(b, "G2.");
    add_der_tensor_gadget(b, "G3.");
    b.e("m1", "?(X*~X)").e("m2", "?(X*~X)");
    b.l("ctr1", LinkKind::Ctr, {"G1.q", "G2.q"}, {"m1"});
    b.l("ctr2", LinkKind::Ctr, {"m1", "G3.q"}, {"m2"});
    b.l("cut.main", LinkKind::Cut, {"m2", "Z.bang"}, {});
    out.push_back({b.net, "cut.main"});
  }
  {  // Church numeral 3 against promoted 0 (reduce the outer contraction)
    ProofNet n = netideal::church(3, true);
    out.push_back({n, "cut.p"});
  }
  return out;
}

}  // namespace fixtures
