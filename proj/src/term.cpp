#include "bgm/term.hpp"

#include <algorithm>

namespace bgm {

bool Graph::has_node(const Id& n) const {
  return std::find(nodes.begin(), nodes.end(), n) != nodes.end();
}

const Arrow& Graph::edge(const Id& e) const {
  for (const auto& a : edges)
    if (a.id == e) return a;
  throw StructuralError("unknown edge: " + e);
}

Term gen(const Id& edge) { return std::make_shared<OneCell>(OneCell{OK::Gen, edge, {}, {}}); }
Term unit(const Id& node) { return std::make_shared<OneCell>(OneCell{OK::Unit, node, {}, {}}); }
Term comp(const Term& right, const Term& left) {
  return std::make_shared<OneCell>(OneCell{OK::Comp, {}, right, left});
}
Term star(const Term& t) { return std::make_shared<OneCell>(OneCell{OK::Star, {}, {}, t}); }
Term ap(const Term& t) { return std::make_shared<OneCell>(OneCell{OK::Ap, {}, {}, t}); }

bool term_eq(const Term& a, const Term& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->k != b->k) return false;
  switch (a->k) {
    case OK::Gen:
    case OK::Unit:
      return a->atom == b->atom;
    case OK::Comp:
      return term_eq(a->right, b->right) && term_eq(a->left, b->left);
    case OK::Star:
    case OK::Ap:
      return term_eq(a->left, b->left);
  }
  return false;
}

Id src0(const Graph& g, const Term& u) {
  if (!u) throw StructuralError("null term");
  switch (u->k) {
    case OK::Gen:
      return g.edge(u->atom).src;
    case OK::Unit:
      if (!g.has_node(u->atom)) throw StructuralError("unknown node: " + u->atom);
      return u->atom;
    case OK::Comp: {
      if (tgt0(g, u->left) != src0(g, u->right))
        throw StructuralError("non-composable composite: " + print_term(u));
      return src0(g, u->left);
    }
    case OK::Star:
      return tgt0(g, u->left);
    case OK::Ap:
      return src0(g, u->left);
  }
  throw StructuralError("bad term kind");
}

Id tgt0(const Graph& g, const Term& u) {
  if (!u) throw StructuralError("null term");
  switch (u->k) {
    case OK::Gen:
      return g.edge(u->atom).tgt;
    case OK::Unit:
      if (!g.has_node(u->atom)) throw StructuralError("unknown node: " + u->atom);
      return u->atom;
    case OK::Comp: {
      if (tgt0(g, u->left) != src0(g, u->right))
        throw StructuralError("non-composable composite: " + print_term(u));
      return tgt0(g, u->right);
    }
    case OK::Star:
      return src0(g, u->left);
    case OK::Ap:
      return tgt0(g, u->left);
  }
  throw StructuralError("bad term kind");
}

int term_length(const Term& u) {
  switch (u->k) {
    case OK::Gen:
      return 1;
    case OK::Unit:
      return 0;
    case OK::Comp:
      return term_length(u->right) + term_length(u->left);
    case OK::Star:
    case OK::Ap:
      return term_length(u->left);
  }
  return 0;
}

std::string print_term(const Term& u) {
  if (!u) return "<null>";
  switch (u->k) {
    case OK::Gen:
      return u->atom;
    case OK::Unit:
      return "1_" + u->atom;
    case OK::Comp:
      return "(" + print_term(u->right) + " . " + print_term(u->left) + ")";
    case OK::Star:
      return print_term(u->left) + "*";
    case OK::Ap:
      return "F[" + print_term(u->left) + "]";
  }
  return "<bad>";
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  void expect(char c) {
    if (peek() != c)
      throw StructuralError("parse error at " + std::to_string(pos) + ": expected '" +
                            std::string(1, c) + "'");
    ++pos;
  }

  Term primary() {
    if (peek() == '(') {
      ++pos;
      Term r = term();
      expect('.');
      Term l = term();
      expect(')');
      return comp(r, l);
    }
    skip();
    size_t start = pos;
    while (pos < s.size() && s[pos] != ' ' && s[pos] != '(' && s[pos] != ')' &&
           s[pos] != '.' && s[pos] != '*')
      ++pos;
    if (pos == start) throw StructuralError("parse error at " + std::to_string(pos));
    std::string a = s.substr(start, pos - start);
    if (a.rfind("1_", 0) == 0) return unit(a.substr(2));
    return gen(a);
  }

  Term term() {
    Term t = primary();
    while (pos < s.size() && s[pos] == '*') {
      t = star(t);
      ++pos;
    }
    return t;
  }
};

}  // namespace

Term parse_term(const std::string& s) {
  Parser p{s};
  Term t = p.term();
  p.skip();
  if (p.pos != s.size()) throw StructuralError("parse error: trailing input in '" + s + "'");
  return t;
}

namespace {
Cell2 mk(TwoCell c) { return std::make_shared<TwoCell>(std::move(c)); }
}  // namespace

Cell2 c_id2(const Term& u) { return mk({TK::Id2, u, {}, {}, {}, {}, {}}); }
Cell2 c_assoc(const Term& h, const Term& g, const Term& f) {
  return mk({TK::Assoc, h, g, f, {}, {}, {}});
}
Cell2 c_lunit(const Term& f) { return mk({TK::LUnit, f, {}, {}, {}, {}, {}}); }
Cell2 c_runit(const Term& f) { return mk({TK::RUnit, f, {}, {}, {}, {}, {}}); }
Cell2 c_counit(const Term& f) { return mk({TK::Counit, f, {}, {}, {}, {}, {}}); }
Cell2 c_unit2(const Term& f) { return mk({TK::Unit2, f, {}, {}, {}, {}, {}}); }
Cell2 c_double_star(const Term& f) { return mk({TK::DoubleStar, f, {}, {}, {}, {}, {}}); }
Cell2 c_star_comp(const Term& f, const Term& g) {
  return mk({TK::StarComp, f, g, {}, {}, {}, {}});
}
Cell2 c_inv(const Cell2& t) { return mk({TK::Inv, {}, {}, {}, t, {}, {}}); }
Cell2 c_vcomp(const Cell2& after, const Cell2& before) {
  return mk({TK::VComp, {}, {}, {}, before, after, {}});
}
Cell2 c_hcomp(const Cell2& after, const Cell2& before) {
  return mk({TK::HComp, {}, {}, {}, before, after, {}});
}
Cell2 c_star_cell(const Cell2& t) { return mk({TK::StarCell, {}, {}, {}, t, {}, {}}); }
Cell2 c_phi_comp(const Term& g, const Term& f) { return mk({TK::PhiComp, g, f, {}, {}, {}, {}}); }
Cell2 c_phi_unit(const Id& node) { return mk({TK::PhiUnit, {}, {}, {}, {}, {}, node}); }
Cell2 c_phi_inv(const Term& f) { return mk({TK::PhiInv, f, {}, {}, {}, {}, {}}); }
Cell2 c_ap_cell(const Cell2& t) { return mk({TK::ApCell, {}, {}, {}, t, {}, {}}); }

namespace {

struct Ends {
  Term src, tgt;
};

Ends ends2(const Graph& g, const Cell2& t) {
  if (!t) throw StructuralError("null 2-cell term");
  auto check = [&](const Term& u) {
    src0(g, u);
    return u;
  };
  switch (t->k) {
    case TK::Id2:
      return {check(t->a), t->a};
    case TK::Assoc:
      return {check(comp(comp(t->a, t->b), t->c)), check(comp(t->a, comp(t->b, t->c)))};
    case TK::LUnit:
      return {check(comp(unit(tgt0(g, t->a)), t->a)), t->a};
    case TK::RUnit:
      return {check(comp(t->a, unit(src0(g, t->a)))), t->a};
    case TK::Counit:
      return {check(comp(star(t->a), t->a)), unit(src0(g, t->a))};
    case TK::Unit2:
      return {unit(tgt0(g, t->a)), check(comp(t->a, star(t->a)))};
    case TK::DoubleStar:
      return {check(star(star(t->a))), t->a};
    case TK::StarComp:
      return {check(star(comp(t->b, t->a))), check(comp(star(t->a), star(t->b)))};
    case TK::Inv: {
      Ends e = ends2(g, t->t1);
      return {e.tgt, e.src};
    }
    case TK::VComp: {
      Ends e1 = ends2(g, t->t1), e2 = ends2(g, t->t2);
      if (!term_eq(e1.tgt, e2.src))
        throw StructuralError("broken vertical composite: " + print_term(e1.tgt) + " vs " +
                              print_term(e2.src));
      return {e1.src, e2.tgt};
    }
    case TK::HComp: {
      Ends e1 = ends2(g, t->t1), e2 = ends2(g, t->t2);
      return {check(comp(e2.src, e1.src)), check(comp(e2.tgt, e1.tgt))};
    }
    case TK::StarCell: {
      Ends e = ends2(g, t->t1);
      return {star(e.src), star(e.tgt)};
    }
    case TK::PhiComp:
      return {check(comp(ap(t->a), ap(t->b))), check(ap(comp(t->a, t->b)))};
    case TK::PhiUnit:
      return {check(unit(t->atom)), ap(unit(t->atom))};
    case TK::PhiInv:
      return {star(ap(t->a)), ap(star(t->a))};
    case TK::ApCell: {
      Ends e = ends2(g, t->t1);
      return {ap(e.src), ap(e.tgt)};
    }
  }
  throw StructuralError("bad 2-cell kind");
}

}  // namespace

Term src2(const Graph& g, const Cell2& t) { return ends2(g, t).src; }
Term tgt2(const Graph& g, const Cell2& t) { return ends2(g, t).tgt; }

Witness wit(const Graph& g, const Cell2& c) {
  Ends e = ends2(g, c);
  return {c, e.src, e.tgt};
}

Witness wid(const Graph& g, const Term& u) {
  src0(g, u);
  return {c_id2(u), u, u};
}

Witness winv(const Graph& g, const Witness& w) {
  (void)g;
  if (w.cell->k == TK::Id2) return w;
  return {c_inv(w.cell), w.tgt, w.src};
}

Witness wvcomp(const Graph& g, const Witness& after, const Witness& before) {
  (void)g;
  if (!term_eq(before.tgt, after.src))
    throw StructuralError("wvcomp: endpoint mismatch: " + print_term(before.tgt) + " vs " +
                          print_term(after.src));
  if (before.cell->k == TK::Id2) return after;
  if (after.cell->k == TK::Id2) return before;
  return {c_vcomp(after.cell, before.cell), before.src, after.tgt};
}

Witness whcomp(const Graph& g, const Witness& after, const Witness& before) {
  if (tgt0(g, before.src) != src0(g, after.src))
    throw StructuralError("whcomp: non-composable");
  if (before.cell->k == TK::Id2 && after.cell->k == TK::Id2)
    return wid(g, comp(after.src, before.src));
  return {c_hcomp(after.cell, before.cell), comp(after.src, before.src),
          comp(after.tgt, before.tgt)};
}

Witness wstarcell(const Graph& g, const Witness& w) {
  (void)g;
  if (w.cell->k == TK::Id2) return {c_id2(star(w.src)), star(w.src), star(w.src)};
  return {c_star_cell(w.cell), star(w.src), star(w.tgt)};
}

}  // namespace bgm
