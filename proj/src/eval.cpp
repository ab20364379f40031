#include "bgm/eval.hpp"

namespace bgm {

namespace {

// One evaluator for both modes: in phi mode (F set) the 2-cells live in
// F.target and graph cells are interpreted through F.
struct Ev {
  const FiniteBigroupoid& T;
  const Graph& g;
  const Assign& a;
  const Pseudofunctor* F = nullptr;

  Id src_node_cell(const Id& node) const {
    auto it = a.nodes.find(node);
    if (it == a.nodes.end()) throw StructuralError("unassigned node: " + node);
    return it->second;
  }
  Id obj(const Id& node) const {
    Id x = src_node_cell(node);
    return F ? F->on0(x) : x;
  }

  Id ev1(const Term& u) const {
    switch (u->k) {
      case OK::Gen: {
        if (F) throw StructuralError("bare generator in a phi term: " + u->atom);
        auto it = a.edges.find(u->atom);
        if (it == a.edges.end()) throw StructuralError("unassigned edge: " + u->atom);
        return it->second;
      }
      case OK::Unit:
        return T.unit_at(obj(u->atom));
      case OK::Comp:
        return T.c1(obj(src0(g, u)), obj(tgt0(g, u->left)), obj(tgt0(g, u)),
                    ev1(u->right), ev1(u->left));
      case OK::Star:
        return T.star1(obj(src0(g, u->left)), obj(tgt0(g, u->left)), ev1(u->left));
      case OK::Ap: {
        if (!F) throw StructuralError("Ap term outside phi mode");
        Ev src_ev{F->source, g, a, nullptr};
        return F->on1(src_node_cell(src0(g, u->left)), src_node_cell(tgt0(g, u->left)),
                      src_ev.ev1(u->left));
      }
    }
    throw StructuralError("bad term kind");
  }

  // hom 0-cells of the 2-cell given by t
  std::pair<Id, Id> hom_of(const Cell2& t) const {
    Term s = src2(g, t);
    return {obj(src0(g, s)), obj(tgt0(g, s))};
  }

  Id ev2(const Cell2& t) const {
    switch (t->k) {
      case TK::Id2: {
        auto [A, B] = hom_of(t);
        return T.H(A, B).id_at(ev1(t->a));
      }
      case TK::Assoc:
        return T.a_at(obj(src0(g, t->c)), obj(tgt0(g, t->c)), obj(tgt0(g, t->b)),
                      obj(tgt0(g, t->a)), ev1(t->a), ev1(t->b), ev1(t->c));
      case TK::LUnit:
        return T.l_at(obj(src0(g, t->a)), obj(tgt0(g, t->a)), ev1(t->a));
      case TK::RUnit:
        return T.r_at(obj(src0(g, t->a)), obj(tgt0(g, t->a)), ev1(t->a));
      case TK::Counit:
        return T.e_at(obj(src0(g, t->a)), obj(tgt0(g, t->a)), ev1(t->a));
      case TK::Unit2:
        return T.i_at(obj(src0(g, t->a)), obj(tgt0(g, t->a)), ev1(t->a));
      case TK::DoubleStar:
        return ev2(expand_double_star(g, t->a).cell);
      case TK::StarComp:
        return ev2(expand_star_comp(g, t->a, t->b).cell);
      case TK::Inv: {
        auto [A, B] = hom_of(t->t1);
        return T.H(A, B).inv(ev2(t->t1));
      }
      case TK::VComp: {
        auto [A, B] = hom_of(t->t1);
        return T.v(A, B, ev2(t->t2), ev2(t->t1));
      }
      case TK::HComp: {
        Term s1 = src2(g, t->t1), s2 = src2(g, t->t2);
        return T.c2(obj(src0(g, s1)), obj(tgt0(g, s1)), obj(tgt0(g, s2)),
                    ev2(t->t2), ev2(t->t1));
      }
      case TK::StarCell: {
        auto [A, B] = hom_of(t->t1);
        return T.star2(A, B, ev2(t->t1));
      }
      case TK::PhiComp: {
        if (!F) throw StructuralError("phi cell outside phi mode");
        Ev src_ev{F->source, g, a, nullptr};
        return F->pc(src_node_cell(src0(g, t->b)), src_node_cell(tgt0(g, t->b)),
                     src_node_cell(tgt0(g, t->a)), src_ev.ev1(t->a), src_ev.ev1(t->b));
      }
      case TK::PhiUnit:
        if (!F) throw StructuralError("phi cell outside phi mode");
        return F->pu(src_node_cell(t->atom));
      case TK::PhiInv: {
        if (!F) throw StructuralError("phi cell outside phi mode");
        Ev src_ev{F->source, g, a, nullptr};
        return F->pi(src_node_cell(src0(g, t->a)), src_node_cell(tgt0(g, t->a)),
                     src_ev.ev1(t->a));
      }
      case TK::ApCell: {
        if (!F) throw StructuralError("phi cell outside phi mode");
        Ev src_ev{F->source, g, a, nullptr};
        Term s = src2(g, t->t1);
        return F->on2(src_node_cell(src0(g, s)), src_node_cell(tgt0(g, s)),
                      src_ev.ev2(t->t1));
      }
    }
    throw StructuralError("bad 2-cell kind");
  }
};

}  // namespace

void validate_assign(const FiniteBigroupoid& B, const Graph& g, const Assign& a) {
  for (const auto& n : g.nodes) {
    auto it = a.nodes.find(n);
    if (it == a.nodes.end()) throw StructuralError("unassigned node: " + n);
    if (!B.has_zero(it->second)) throw StructuralError("assign: unknown 0-cell " + it->second);
  }
  for (const auto& e : g.edges) {
    auto it = a.edges.find(e.id);
    if (it == a.edges.end()) throw StructuralError("unassigned edge: " + e.id);
    const FiniteGroupoid& H = B.H(a.nodes.at(e.src), a.nodes.at(e.tgt));
    if (!H.has_object(it->second))
      throw StructuralError("assign: " + it->second + " is not a 1-cell " + e.src + " -> " +
                            e.tgt);
  }
}

Id eval_1cell(const FiniteBigroupoid& B, const Graph& g, const Assign& a, const Term& u) {
  return Ev{B, g, a, nullptr}.ev1(u);
}

Id eval_2cell(const FiniteBigroupoid& B, const Graph& g, const Assign& a, const Cell2& t) {
  return Ev{B, g, a, nullptr}.ev2(t);
}

Id eval_1cell_phi(const Pseudofunctor& F, const Graph& g, const Assign& a, const Term& u) {
  return Ev{F.target, g, a, &F}.ev1(u);
}

Id eval_2cell_phi(const Pseudofunctor& F, const Graph& g, const Assign& a, const Cell2& t) {
  return Ev{F.target, g, a, &F}.ev2(t);
}

}  // namespace bgm
