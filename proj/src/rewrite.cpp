#include "bgm/rewrite.hpp"

namespace bgm {

namespace {

void strict_rec(const Graph& g, const Term& u, bool flip, NormalWord& out) {
  auto push = [&](const Id& e, bool inv) {
    if (!out.empty() && out.back().edge == e && out.back().inv != inv)
      out.pop_back();
    else
      out.push_back({e, inv});
  };
  switch (u->k) {
    case OK::Gen:
      push(g.edge(u->atom).id, flip);
      return;
    case OK::Unit:
      return;
    case OK::Star:
      strict_rec(g, u->left, !flip, out);
      return;
    case OK::Comp:
      if (!flip) {
        strict_rec(g, u->left, flip, out);
        strict_rec(g, u->right, flip, out);
      } else {
        strict_rec(g, u->right, flip, out);
        strict_rec(g, u->left, flip, out);
      }
      return;
    case OK::Ap:
      throw StructuralError("strictify: Ap is not a plain term");
  }
}

Term lit_term(const Lit& l) { return l.inv ? star(gen(l.edge)) : gen(l.edge); }

Lit leaf_to_lit(const Term& u) {
  if (u->k == OK::Gen) return {u->atom, false};
  if (u->k == OK::Star && u->left->k == OK::Gen) return {u->left->atom, true};
  throw ConstructionError("not an R-fixed letter: " + print_term(u));
}

void leaves_rec(const Term& u, std::vector<Term>& out) {
  if (u->k == OK::Comp) {
    leaves_rec(u->left, out);  // application order: left acts first
    leaves_rec(u->right, out);
  } else {
    out.push_back(u);
  }
}

std::vector<Term> leaves(const Term& u) {
  std::vector<Term> out;
  leaves_rec(u, out);
  return out;
}

// witness comp(A, B) -> left-associated, for A, B already left-associated
Witness merge_la(const Graph& g, const Term& A, const Term& B) {
  if (B->k != OK::Comp) return wid(g, comp(A, B));
  Witness step = wit(g, c_inv(c_assoc(A, B->right, B->left)));
  Witness rest = whcomp(g, merge_la(g, A, B->right), wid(g, B->left));
  return wvcomp(g, rest, step);
}

// witness u -> left-associated term on the same leaves
Witness la(const Graph& g, const Term& u) {
  if (u->k != OK::Comp) return wid(g, u);
  Witness wl = la(g, u->left), wr = la(g, u->right);
  Witness w0 = whcomp(g, wr, wl);
  return wvcomp(g, merge_la(g, wr.tgt, wl.tgt), w0);
}

// recursive unit deletion inside composites
Witness drop_units(const Graph& g, const Term& u) {
  switch (u->k) {
    case OK::Gen:
    case OK::Unit:
    case OK::Ap:
      return wid(g, u);
    case OK::Star:
      return wstarcell(g, drop_units(g, u->left));
    case OK::Comp: {
      Witness wl = drop_units(g, u->left), wr = drop_units(g, u->right);
      Witness base = whcomp(g, wr, wl);
      if (wr.tgt->k == OK::Unit) return wvcomp(g, wit(g, c_lunit(wl.tgt)), base);
      if (wl.tgt->k == OK::Unit) return wvcomp(g, wit(g, c_runit(wr.tgt)), base);
      return base;
    }
  }
  throw StructuralError("bad term kind");
}

// one pass of the R case table
Witness r_step(const Graph& g, const Term& u) {
  switch (u->k) {
    case OK::Gen:
    case OK::Unit:
    case OK::Ap:
      return wid(g, u);
    case OK::Comp:
      return whcomp(g, r_step(g, u->right), r_step(g, u->left));
    case OK::Star: {
      const Term& v = u->left;
      switch (v->k) {
        case OK::Gen:
        case OK::Ap:
          return wid(g, u);
        case OK::Unit:
          // 1* -> 1* . 1 -> 1 by the counit
          return wvcomp(g, wit(g, c_counit(v)), winv(g, wit(g, c_runit(star(v)))));
        case OK::Star:
          return wvcomp(g, r_step(g, v->left), wit(g, c_double_star(v->left)));
        case OK::Comp: {
          // (w . x)* -> x* . w*
          Witness b = wit(g, c_star_comp(v->left, v->right));
          return wvcomp(g, whcomp(g, r_step(g, star(v->left)), r_step(g, star(v->right))), b);
        }
      }
      throw StructuralError("bad term kind");
    }
  }
  throw StructuralError("bad term kind");
}

}  // namespace

NormalWord strictify(const Graph& g, const Term& u) {
  src0(g, u);  // validate
  NormalWord w;
  strict_rec(g, u, false, w);
  return w;
}

bool has_canonical_2cell(const Graph& g, const Term& u, const Term& v) {
  if (src0(g, u) != src0(g, v) || tgt0(g, u) != tgt0(g, v))
    throw StructuralError("has_canonical_2cell: terms are not parallel");
  return strictify(g, u) == strictify(g, v);
}

Term canonical_term(const NormalWord& w, const Id& node_if_empty) {
  if (w.empty()) return unit(node_if_empty);
  Term t = lit_term(w.back());
  for (size_t i = w.size() - 1; i-- > 0;) t = comp(t, lit_term(w[i]));
  return t;
}

RewriteResult rewrite_R(const Graph& g, const Term& u) {
  Witness total = wid(g, u);
  Term cur = u;
  while (true) {
    Witness w1 = drop_units(g, cur);
    Witness w2 = r_step(g, w1.tgt);
    if (term_eq(w2.tgt, cur)) break;
    total = wvcomp(g, w2, wvcomp(g, w1, total));
    cur = w2.tgt;
  }
  return {cur, total};
}

NormalizeResult normalize(const Graph& g, const Term& u) {
  if (!term_eq(rewrite_R(g, u).ru, u))
    throw PreconditionError("normalize: input is not R-fixed: " + print_term(u));
  if (u->k == OK::Unit) return {u, wid(g, u), {0}};

  Witness total = la(g, u);
  NormalWord seq;
  for (const auto& l : leaves(total.tgt)) seq.push_back(leaf_to_lit(l));
  Term cur = total.tgt;
  std::vector<int> lengths{(int)seq.size()};

  while (true) {
    size_t i = 0;
    bool found = false;
    for (; i + 1 < seq.size(); ++i)
      if (seq[i].edge == seq[i + 1].edge && seq[i].inv != seq[i + 1].inv) {
        found = true;
        break;
      }
    if (!found) break;

    NormalWord pre(seq.begin(), seq.begin() + i), post(seq.begin() + i + 2, seq.end());
    Term e = gen(seq[i].edge);
    Term pair = comp(lit_term(seq[i + 1]), lit_term(seq[i]));
    // the cancelling cell; tgt is a unit at the joint node
    Witness cw = seq[i].inv ? winv(g, wit(g, c_unit2(e))) : wit(g, c_counit(e));

    Term inner = pre.empty() ? pair : comp(pair, canonical_term(pre, ""));
    Term S = post.empty() ? inner : comp(canonical_term(post, ""), inner);
    Witness step = reassoc_witness(g, cur, S);

    Witness t = cw;
    if (!pre.empty()) {
      Term p = canonical_term(pre, "");
      t = wvcomp(g, wit(g, c_lunit(p)), whcomp(g, cw, wid(g, p)));
    }
    if (!post.empty()) {
      Term q = canonical_term(post, "");
      t = whcomp(g, wid(g, q), t);
      if (pre.empty()) t = wvcomp(g, wit(g, c_runit(q)), t);
    }
    step = wvcomp(g, t, step);

    seq = pre;
    seq.insert(seq.end(), post.begin(), post.end());
    Term next = seq.empty() ? unit(src0(g, u)) : canonical_term(seq, "");
    if (!pre.empty() && !post.empty()) step = wvcomp(g, reassoc_witness(g, step.tgt, next), step);
    if (!term_eq(step.tgt, next)) throw ConstructionError("normalize: step endpoint drifted");
    total = wvcomp(g, step, total);
    cur = next;
    lengths.push_back((int)seq.size());
  }
  return {cur, total, lengths};
}

std::optional<Witness> canonical_2cell(const Graph& g, const Term& u, const Term& v) {
  if (!has_canonical_2cell(g, u, v)) return std::nullopt;
  auto chain = [&](const Term& t) {
    RewriteResult r = rewrite_R(g, t);
    NormalizeResult n = normalize(g, r.ru);
    return wvcomp(g, n.w, r.rho);
  };
  Witness wu = chain(u), wv = chain(v);
  if (!term_eq(wu.tgt, wv.tgt))
    throw ConstructionError("canonical_2cell: normal forms disagree");
  return wvcomp(g, winv(g, wv), wu);
}

Witness reassoc_witness(const Graph& g, const Term& u, const Term& v) {
  std::vector<Term> lu = leaves(u), lv = leaves(v);
  if (lu.size() != lv.size()) throw StructuralError("reassoc_witness: leaf mismatch");
  for (size_t i = 0; i < lu.size(); ++i)
    if (!term_eq(lu[i], lv[i])) throw StructuralError("reassoc_witness: leaf mismatch");
  return wvcomp(g, winv(g, la(g, v)), la(g, u));
}

Witness expand_double_star(const Graph& g, const Term& f) {
  Term fs = star(f), fss = star(fs);
  Witness w = winv(g, wit(g, c_runit(fss)));
  w = wvcomp(g, whcomp(g, wid(g, fss), winv(g, wit(g, c_counit(f)))), w);
  w = wvcomp(g, winv(g, wit(g, c_assoc(fss, fs, f))), w);
  w = wvcomp(g, whcomp(g, wit(g, c_counit(fs)), wid(g, f)), w);
  return wvcomp(g, wit(g, c_lunit(f)), w);
}

Witness expand_star_comp(const Graph& g, const Term& f, const Term& g1) {
  Term s = star(comp(g1, f));
  Term fs = star(f), gs = star(g1);
  Witness w = winv(g, wit(g, c_runit(s)));
  w = wvcomp(g, whcomp(g, wid(g, s), wit(g, c_unit2(g1))), w);
  w = wvcomp(g, whcomp(g, wid(g, s), whcomp(g, wid(g, g1), winv(g, wit(g, c_lunit(gs))))), w);
  w = wvcomp(g,
             whcomp(g, wid(g, s), whcomp(g, wid(g, g1), whcomp(g, wit(g, c_unit2(f)), wid(g, gs)))),
             w);
  Term mid = comp(comp(s, comp(g1, f)), comp(fs, gs));
  w = wvcomp(g, reassoc_witness(g, w.tgt, mid), w);
  w = wvcomp(g, whcomp(g, wit(g, c_counit(comp(g1, f))), wid(g, comp(fs, gs))), w);
  return wvcomp(g, wit(g, c_lunit(comp(fs, gs))), w);
}

namespace {

bool contains_phi(const Cell2& t) {
  if (!t) return false;
  switch (t->k) {
    case TK::PhiComp:
    case TK::PhiUnit:
    case TK::PhiInv:
    case TK::ApCell:
      return true;
    default:
      return contains_phi(t->t1) || contains_phi(t->t2);
  }
}

}  // namespace

bool decide_formal(const Graph& g, const Cell2& t1, const Cell2& t2) {
  if (contains_phi(t1) || contains_phi(t2))
    throw StructuralError("decide_formal: phi constructors require phi mode");
  return term_eq(src2(g, t1), src2(g, t2)) && term_eq(tgt2(g, t1), tgt2(g, t2));
}

bool decide_formal_phi(const Graph& g, const Cell2& t1, const Cell2& t2) {
  return term_eq(src2(g, t1), src2(g, t2)) && term_eq(tgt2(g, t1), tgt2(g, t2));
}

}  // namespace bgm
