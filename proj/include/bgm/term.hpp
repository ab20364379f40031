#pragma once

#include <memory>

#include "bgm/core.hpp"

namespace bgm {

struct Graph {
  std::vector<Id> nodes;
  std::vector<Arrow> edges;

  bool has_node(const Id& n) const;
  const Arrow& edge(const Id& e) const;
};

// 1-cell terms of the free bigroupoid on a graph.  Comp(right, left) is
// right . left with left applied first.  Ap(u) is the formal image of a
// source term under a morphism and is only legal in phi-decorated terms.
enum class OK { Gen, Unit, Comp, Star, Ap };

struct OneCell;
using Term = std::shared_ptr<const OneCell>;

struct OneCell {
  OK k;
  Id atom;      // Gen: edge id, Unit: node id
  Term right;   // Comp only
  Term left;    // Comp; also the child of Star and Ap
};

Term gen(const Id& edge);
Term unit(const Id& node);
Term comp(const Term& right, const Term& left);
Term star(const Term& t);
Term ap(const Term& t);

bool term_eq(const Term& a, const Term& b);
Id src0(const Graph& g, const Term& u);  // validates Comp composability
Id tgt0(const Graph& g, const Term& u);
int term_length(const Term& u);  // edge occurrences, with multiplicity

std::string print_term(const Term& u);
Term parse_term(const std::string& s);  // inverse of print_term; no Ap

// Formal 2-cells.  VComp(after, before) and HComp(after, before); the
// second argument acts first in both.
enum class TK {
  Id2, Assoc, LUnit, RUnit, Counit, Unit2, DoubleStar, StarComp,
  Inv, VComp, HComp, StarCell,
  PhiComp, PhiUnit, PhiInv, ApCell,
};

struct TwoCell;
using Cell2 = std::shared_ptr<const TwoCell>;

struct TwoCell {
  TK k;
  Term a, b, c;  // 1-cell parameters; Assoc(h,g,f) stores a=h, b=g, c=f
  Cell2 t1, t2;  // 2-cell arguments; binary nodes store (after=t2, before=t1)
  Id atom;       // PhiUnit node
};

Cell2 c_id2(const Term& u);
Cell2 c_assoc(const Term& h, const Term& g, const Term& f);  // (hg)f -> h(gf)
Cell2 c_lunit(const Term& f);                                // 1.f -> f
Cell2 c_runit(const Term& f);                                // f.1 -> f
Cell2 c_counit(const Term& f);                               // f*.f -> 1_src
Cell2 c_unit2(const Term& f);                                // 1_tgt -> f.f*
Cell2 c_double_star(const Term& f);                          // f** -> f
Cell2 c_star_comp(const Term& f, const Term& g);             // (g.f)* -> f*.g*
Cell2 c_inv(const Cell2& t);
Cell2 c_vcomp(const Cell2& after, const Cell2& before);
Cell2 c_hcomp(const Cell2& after, const Cell2& before);
Cell2 c_star_cell(const Cell2& t);
Cell2 c_phi_comp(const Term& g, const Term& f);  // Fg.Ff -> F(g.f)
Cell2 c_phi_unit(const Id& node);                // 1 -> F1
Cell2 c_phi_inv(const Term& f);                  // (Ff)* -> F(f*)
Cell2 c_ap_cell(const Cell2& t);

// Endpoint 1-cell terms; throw StructuralError on broken composites.
Term src2(const Graph& g, const Cell2& t);
Term tgt2(const Graph& g, const Cell2& t);

// A 2-cell term with its checked endpoints.  The combinators collapse
// identities, so chains built from fixed-point rewrites stay literal Id.
struct Witness {
  Cell2 cell;
  Term src, tgt;
};

Witness wit(const Graph& g, const Cell2& c);
Witness wid(const Graph& g, const Term& u);
Witness winv(const Graph& g, const Witness& w);
Witness wvcomp(const Graph& g, const Witness& after, const Witness& before);
Witness whcomp(const Graph& g, const Witness& after, const Witness& before);
Witness wstarcell(const Graph& g, const Witness& w);

}  // namespace bgm
