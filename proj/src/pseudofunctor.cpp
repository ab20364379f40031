#include "bgm/pseudofunctor.hpp"

namespace bgm {

Id Pseudofunctor::on0(const Id& A) const {
  auto it = zero_map.find(A);
  if (it == zero_map.end()) throw StructuralError("0-cell not in domain: " + A);
  return it->second;
}

const GroupoidFunctor& Pseudofunctor::L(const Id& A, const Id& B) const {
  auto it = local.find({A, B});
  if (it == local.end()) throw StructuralError("missing local functor at (" + A + "," + B + ")");
  return it->second;
}

Id Pseudofunctor::on1(const Id& A, const Id& B, const Id& f) const { return L(A, B).on_obj(f); }
Id Pseudofunctor::on2(const Id& A, const Id& B, const Id& al) const { return L(A, B).on_arr(al); }

Id Pseudofunctor::pc(const Id& A, const Id& B, const Id& Cc, const Id& g, const Id& f) const {
  auto it = phi_comp.find({A, B, Cc, g, f});
  if (it == phi_comp.end())
    throw StructuralError("missing phi_comp at (" + g + ", " + f + ")");
  return it->second;
}

Id Pseudofunctor::pu(const Id& A) const {
  auto it = phi_unit.find(A);
  if (it == phi_unit.end()) throw StructuralError("missing phi_unit at " + A);
  return it->second;
}

Id Pseudofunctor::pi(const Id& A, const Id& B, const Id& f) const {
  auto it = phi_inv.find({A, B, f});
  if (it == phi_inv.end()) throw StructuralError("missing phi_inv at " + f);
  return it->second;
}

bool Pseudofunctor::is_strict() const {
  auto is_id = [](const FiniteGroupoid& G, const Id& cell) {
    return cell == G.id_at(G.arrow(cell).src);
  };
  for (const auto& [k, cell] : phi_comp) {
    const auto& [A, B, Cc, g, f] = k;
    (void)B; (void)g; (void)f;
    if (!is_id(target.H(on0(A), on0(Cc)), cell)) return false;
  }
  for (const auto& [A, cell] : phi_unit)
    if (!is_id(target.H(on0(A), on0(A)), cell)) return false;
  for (const auto& [k, cell] : phi_inv) {
    const auto& [A, B, f] = k;
    (void)f;
    if (!is_id(target.H(on0(B), on0(A)), cell)) return false;
  }
  return true;
}

ValidationReport validate_pseudofunctor(const Pseudofunctor& F) {
  ValidationReport rep;
  const FiniteBigroupoid& A = F.source;
  const FiniteBigroupoid& X = F.target;

  for (const auto& Z : A.zero_cells)
    if (!X.has_zero(F.on0(Z))) throw StructuralError("0-image undeclared: " + F.on0(Z));

  for (const auto& P : A.zero_cells)
    for (const auto& Q : A.zero_cells) {
      const GroupoidFunctor& l = F.L(P, Q);
      if (!(l.source == A.H(P, Q)) || !(l.target == X.H(F.on0(P), F.on0(Q))))
        throw StructuralError("local functor boundary mismatch at (" + P + "," + Q + ")");
      rep.merge(validate_functor(l), "local(" + P + "," + Q + ")/");
    }
  if (!rep.ok()) return rep;

  // phi endpoints (structural), totality
  for (const auto& P : A.zero_cells)
    for (const auto& Q : A.zero_cells)
      for (const auto& R : A.zero_cells)
        for (const auto& f : A.H(P, Q).objects)
          for (const auto& g : A.H(Q, R).objects) {
            Id c = F.pc(P, Q, R, g, f);
            Id FP = F.on0(P), FQ = F.on0(Q), FR = F.on0(R);
            const Arrow& ar = X.H(FP, FR).arrow(c);
            if (ar.src != X.c1(FP, FQ, FR, F.on1(Q, R, g), F.on1(P, Q, f)) ||
                ar.tgt != F.on1(P, R, A.c1(P, Q, R, g, f)))
              throw StructuralError("phi_comp endpoint mismatch at (" + g + ", " + f + ")");
          }
  for (const auto& P : A.zero_cells) {
    Id c = F.pu(P);
    Id FP = F.on0(P);
    const Arrow& ar = X.H(FP, FP).arrow(c);
    if (ar.src != X.unit_at(FP) || ar.tgt != F.on1(P, P, A.unit_at(P)))
      throw StructuralError("phi_unit endpoint mismatch at " + P);
  }
  for (const auto& P : A.zero_cells)
    for (const auto& Q : A.zero_cells)
      for (const auto& f : A.H(P, Q).objects) {
        Id c = F.pi(P, Q, f);
        Id FP = F.on0(P), FQ = F.on0(Q);
        const Arrow& ar = X.H(FQ, FP).arrow(c);
        if (ar.src != X.star1(FP, FQ, F.on1(P, Q, f)) ||
            ar.tgt != F.on1(Q, P, A.star1(P, Q, f)))
          throw StructuralError("phi_inv endpoint mismatch at " + f);
      }

  // naturality of phi_comp / phi_inv
  for (const auto& P : A.zero_cells)
    for (const auto& Q : A.zero_cells)
      for (const auto& R : A.zero_cells)
        for (const auto& al : A.H(P, Q).arrows)
          for (const auto& be : A.H(Q, R).arrows) {
            Id FP = F.on0(P), FQ = F.on0(Q), FR = F.on0(R);
            Id lhs = X.H(FP, FR).comp(
                F.on2(P, R, A.c2(P, Q, R, be.id, al.id)), F.pc(P, Q, R, be.src, al.src));
            Id rhs = X.H(FP, FR).comp(
                F.pc(P, Q, R, be.tgt, al.tgt),
                X.c2(FP, FQ, FR, F.on2(Q, R, be.id), F.on2(P, Q, al.id)));
            if (lhs != rhs) rep.add("phi_comp-naturality", {be.id, al.id});
          }
  for (const auto& P : A.zero_cells)
    for (const auto& Q : A.zero_cells)
      for (const auto& al : A.H(P, Q).arrows) {
        Id FP = F.on0(P), FQ = F.on0(Q);
        Id lhs = X.H(FQ, FP).comp(F.on2(Q, P, A.star2(P, Q, al.id)), F.pi(P, Q, al.src));
        Id rhs = X.H(FQ, FP).comp(F.pi(P, Q, al.tgt), X.star2(FP, FQ, F.on2(P, Q, al.id)));
        if (lhs != rhs) rep.add("phi_inv-naturality", {al.id});
      }

  // hexagon (4): phi_{h,gf} . (id_{Fh} phi_{g,f}) . a'_{Fh,Fg,Ff}
  //            = F(a_{h,g,f}) . phi_{hg,f} . (phi_{h,g} id_{Ff})
  for (const auto& P : A.zero_cells)
    for (const auto& Q : A.zero_cells)
      for (const auto& R : A.zero_cells)
        for (const auto& S : A.zero_cells)
          for (const auto& f : A.H(P, Q).objects)
            for (const auto& g : A.H(Q, R).objects)
              for (const auto& h : A.H(R, S).objects) {
                Id FP = F.on0(P), FQ = F.on0(Q), FR = F.on0(R), FS = F.on0(S);
                Id Ff = F.on1(P, Q, f), Fg = F.on1(Q, R, g), Fh = F.on1(R, S, h);
                Id gf = A.c1(P, Q, R, g, f), hg = A.c1(Q, R, S, h, g);
                Id lhs = X.v(FP, FS, F.pc(P, R, S, h, gf),
                             X.v(FP, FS,
                                 X.wl(FP, FR, FS, Fh, F.pc(P, Q, R, g, f)),
                                 X.a_at(FP, FQ, FR, FS, Fh, Fg, Ff)));
                Id rhs = X.v(FP, FS, F.on2(P, S, A.a_at(P, Q, R, S, h, g, f)),
                             X.v(FP, FS, F.pc(P, Q, S, hg, f),
                                 X.wr(FP, FQ, FS, F.pc(Q, R, S, h, g), Ff)));
                if (lhs != rhs) rep.add("hexagon", {h, g, f});
              }

  // the four squares (5)
  for (const auto& P : A.zero_cells)
    for (const auto& Q : A.zero_cells)
      for (const auto& f : A.H(P, Q).objects) {
        Id FP = F.on0(P), FQ = F.on0(Q);
        Id Ff = F.on1(P, Q, f);
        Id fs = A.star1(P, Q, f);
        Id Ffs = X.star1(FP, FQ, Ff);
        // r: F(r_f) . phi_{f,1_P} . (id_{Ff} phi_P) = r'_{Ff}
        {
          Id lhs = X.v(FP, FQ, F.on2(P, Q, A.r_at(P, Q, f)),
                       X.v(FP, FQ, F.pc(P, P, Q, f, A.unit_at(P)),
                           X.wl(FP, FP, FQ, Ff, F.pu(P))));
          if (lhs != X.r_at(FP, FQ, Ff)) rep.add("square-r", {f});
        }
        // l: F(l_f) . phi_{1_Q,f} . (phi_Q id_{Ff}) = l'_{Ff}
        {
          Id lhs = X.v(FP, FQ, F.on2(P, Q, A.l_at(P, Q, f)),
                       X.v(FP, FQ, F.pc(P, Q, Q, A.unit_at(Q), f),
                           X.wr(FP, FQ, FQ, F.pu(Q), Ff)));
          if (lhs != X.l_at(FP, FQ, Ff)) rep.add("square-l", {f});
        }
        // e: F(e_f) . phi_{f*,f} . (phi_f id_{Ff}) = phi_P . e'_{Ff}
        {
          Id lhs = X.v(FP, FP, F.on2(P, P, A.e_at(P, Q, f)),
                       X.v(FP, FP, F.pc(P, Q, P, fs, f),
                           X.wr(FP, FQ, FP, F.pi(P, Q, f), Ff)));
          Id rhs = X.v(FP, FP, F.pu(P), X.e_at(FP, FQ, Ff));
          if (lhs != rhs) rep.add("square-e", {f});
        }
        // i: phi_{f,f*} . (id_{Ff} phi_f) . i'_{Ff} = F(i_f) . phi_Q
        {
          Id lhs = X.v(FQ, FQ, F.pc(Q, P, Q, f, fs),
                       X.v(FQ, FQ,
                           X.wl(FQ, FP, FQ, Ff, F.pi(P, Q, f)),
                           X.i_at(FP, FQ, Ff)));
          Id rhs = X.v(FQ, FQ, F.on2(Q, Q, A.i_at(P, Q, f)), F.pu(Q));
          if (lhs != rhs) rep.add("square-i", {f});
        }
      }

  return rep;
}

ValidationReport validate_icon(const Icon& ic) {
  ValidationReport rep;
  const Pseudofunctor& F = ic.source;
  const Pseudofunctor& G = ic.target;
  if (!(F.source == G.source) || !(F.target == G.target) || !(F.zero_map == G.zero_map))
    throw StructuralError("icon requires parallel pseudofunctors agreeing on 0-cells");
  const FiniteBigroupoid& A = F.source;
  const FiniteBigroupoid& X = F.target;

  auto m_at = [&](const Id& P, const Id& Q, const Id& f) -> Id {
    auto it = ic.components.find({P, Q});
    if (it == ic.components.end())
      throw StructuralError("missing icon component at (" + P + "," + Q + ")");
    return it->second.at(f);
  };
  for (const auto& P : A.zero_cells)
    for (const auto& Q : A.zero_cells) {
      auto it = ic.components.find({P, Q});
      if (it == ic.components.end())
        throw StructuralError("missing icon component at (" + P + "," + Q + ")");
      if (!(it->second.source == F.L(P, Q)) || !(it->second.target == G.L(P, Q)))
        throw StructuralError("icon component boundary mismatch at (" + P + "," + Q + ")");
      rep.merge(validate_nat_iso(it->second), "component(" + P + "," + Q + ")/");
    }
  if (!rep.ok()) return rep;

  // (6) composition square: gamma_{g,f} . (m_g m_f) = m_{gf} . phi_{g,f}
  for (const auto& P : A.zero_cells)
    for (const auto& Q : A.zero_cells)
      for (const auto& R : A.zero_cells)
        for (const auto& f : A.H(P, Q).objects)
          for (const auto& g : A.H(Q, R).objects) {
            Id FP = F.on0(P), FQ = F.on0(Q), FR = F.on0(R);
            Id lhs = X.v(FP, FR, G.pc(P, Q, R, g, f),
                         X.c2(FP, FQ, FR, m_at(Q, R, g), m_at(P, Q, f)));
            Id rhs = X.v(FP, FR, m_at(P, R, A.c1(P, Q, R, g, f)), F.pc(P, Q, R, g, f));
            if (lhs != rhs) rep.add("icon-comp", {g, f});
          }
  // unit square: gamma_P = m_{1_P} . phi_P
  for (const auto& P : A.zero_cells) {
    Id FP = F.on0(P);
    if (G.pu(P) != X.v(FP, FP, m_at(P, P, A.unit_at(P)), F.pu(P))) rep.add("icon-unit", {P});
  }
  // inversion square: gamma_f . (m_f)* = m_{f*} . phi_f
  for (const auto& P : A.zero_cells)
    for (const auto& Q : A.zero_cells)
      for (const auto& f : A.H(P, Q).objects) {
        Id FP = F.on0(P), FQ = F.on0(Q);
        Id lhs = X.v(FQ, FP, G.pi(P, Q, f), X.star2(FP, FQ, m_at(P, Q, f)));
        Id rhs = X.v(FQ, FP, m_at(Q, P, A.star1(P, Q, f)), F.pi(P, Q, f));
        if (lhs != rhs) rep.add("icon-inv", {f});
      }
  return rep;
}

Pseudofunctor identity_pseudofunctor(const FiniteBigroupoid& B) {
  std::map<Id, Id> zm;
  for (const auto& A : B.zero_cells) zm[A] = A;
  std::map<std::pair<Id, Id>, GroupoidFunctor> loc;
  for (const auto& A : B.zero_cells)
    for (const auto& Bb : B.zero_cells) loc[{A, Bb}] = identity_functor(B.H(A, Bb));
  return make_strict(B, B, std::move(zm), std::move(loc));
}

Pseudofunctor compose_pseudofunctors(const Pseudofunctor& G, const Pseudofunctor& F) {
  if (!(F.target == G.source)) throw StructuralError("compose_pseudofunctors: boundary mismatch");
  Pseudofunctor H;
  H.source = F.source;
  H.target = G.target;
  const FiniteBigroupoid& A = F.source;
  for (const auto& P : A.zero_cells) H.zero_map[P] = G.on0(F.on0(P));
  for (const auto& P : A.zero_cells)
    for (const auto& Q : A.zero_cells)
      H.local[{P, Q}] = compose_functors(G.L(F.on0(P), F.on0(Q)), F.L(P, Q));
  const FiniteBigroupoid& Z = G.target;
  for (const auto& P : A.zero_cells)
    for (const auto& Q : A.zero_cells)
      for (const auto& R : A.zero_cells)
        for (const auto& f : A.H(P, Q).objects)
          for (const auto& g : A.H(Q, R).objects) {
            Id FP = F.on0(P), FQ = F.on0(Q), FR = F.on0(R);
            Id comp = Z.v(G.on0(FP), G.on0(FR),
                          G.on2(FP, FR, F.pc(P, Q, R, g, f)),
                          G.pc(FP, FQ, FR, F.on1(Q, R, g), F.on1(P, Q, f)));
            H.phi_comp[{P, Q, R, g, f}] = comp;
          }
  for (const auto& P : A.zero_cells) {
    Id FP = F.on0(P);
    H.phi_unit[P] = Z.v(G.on0(FP), G.on0(FP), G.on2(FP, FP, F.pu(P)), G.pu(FP));
  }
  for (const auto& P : A.zero_cells)
    for (const auto& Q : A.zero_cells)
      for (const auto& f : A.H(P, Q).objects) {
        Id FP = F.on0(P), FQ = F.on0(Q);
        H.phi_inv[{P, Q, f}] = Z.v(G.on0(FQ), G.on0(FP),
                                   G.on2(FQ, FP, F.pi(P, Q, f)),
                                   G.pi(FP, FQ, F.on1(P, Q, f)));
      }
  return H;
}

Pseudofunctor make_strict(const FiniteBigroupoid& src, const FiniteBigroupoid& tgt,
                          std::map<Id, Id> zero_map,
                          std::map<std::pair<Id, Id>, GroupoidFunctor> local) {
  Pseudofunctor F;
  F.source = src;
  F.target = tgt;
  F.zero_map = std::move(zero_map);
  F.local = std::move(local);
  for (const auto& P : src.zero_cells)
    for (const auto& Q : src.zero_cells)
      for (const auto& R : src.zero_cells)
        for (const auto& f : src.H(P, Q).objects)
          for (const auto& g : src.H(Q, R).objects) {
            Id FP = F.on0(P), FQ = F.on0(Q), FR = F.on0(R);
            Id lhs = tgt.c1(FP, FQ, FR, F.on1(Q, R, g), F.on1(P, Q, f));
            if (lhs != F.on1(P, R, src.c1(P, Q, R, g, f)))
              throw ConstructionError("make_strict: composition not preserved at (" + g +
                                      ", " + f + ")");
            F.phi_comp[{P, Q, R, g, f}] = tgt.H(FP, FR).id_at(lhs);
          }
  for (const auto& P : src.zero_cells) {
    Id FP = F.on0(P);
    if (F.on1(P, P, src.unit_at(P)) != tgt.unit_at(FP))
      throw ConstructionError("make_strict: unit not preserved at " + P);
    F.phi_unit[P] = tgt.H(FP, FP).id_at(tgt.unit_at(FP));
  }
  for (const auto& P : src.zero_cells)
    for (const auto& Q : src.zero_cells)
      for (const auto& f : src.H(P, Q).objects) {
        Id FP = F.on0(P), FQ = F.on0(Q);
        Id lhs = tgt.star1(FP, FQ, F.on1(P, Q, f));
        if (lhs != F.on1(Q, P, src.star1(P, Q, f)))
          throw ConstructionError("make_strict: inversion not preserved at " + f);
        F.phi_inv[{P, Q, f}] = tgt.H(FQ, FP).id_at(lhs);
      }
  return F;
}

ProductResult product_bigroupoid(const FiniteBigroupoid& B, const FiniteBigroupoid& C) {
  FiniteBigroupoid P;
  for (const auto& A1 : B.zero_cells)
    for (const auto& A2 : C.zero_cells) P.zero_cells.push_back(pair_id(A1, A2));
  for (const auto& A1 : B.zero_cells)
    for (const auto& A2 : C.zero_cells)
      for (const auto& B1 : B.zero_cells)
        for (const auto& B2 : C.zero_cells)
          P.hom[{pair_id(A1, A2), pair_id(B1, B2)}] =
              product_groupoid(B.H(A1, B1), C.H(A2, B2));
  for (const auto& A1 : B.zero_cells)
    for (const auto& A2 : C.zero_cells)
      P.unit[pair_id(A1, A2)] = pair_id(B.unit_at(A1), C.unit_at(A2));

  // comp functors: shuffle ((g,g2),(f,f2)) -> (gf, g2f2)
  for (const auto& A1 : B.zero_cells)
    for (const auto& A2 : C.zero_cells)
      for (const auto& B1 : B.zero_cells)
        for (const auto& B2 : C.zero_cells)
          for (const auto& C1 : B.zero_cells)
            for (const auto& C2 : C.zero_cells) {
              Id a = pair_id(A1, A2), b = pair_id(B1, B2), c = pair_id(C1, C2);
              GroupoidFunctor F;
              F.source = product_groupoid(P.H(b, c), P.H(a, b));
              F.target = P.H(a, c);
              for (const auto& g1 : B.H(B1, C1).objects)
                for (const auto& g2 : C.H(B2, C2).objects)
                  for (const auto& f1 : B.H(A1, B1).objects)
                    for (const auto& f2 : C.H(A2, B2).objects)
                      F.object_map[pair_id(pair_id(g1, g2), pair_id(f1, f2))] =
                          pair_id(B.c1(A1, B1, C1, g1, f1), C.c1(A2, B2, C2, g2, f2));
              for (const auto& g1 : B.H(B1, C1).arrows)
                for (const auto& g2 : C.H(B2, C2).arrows)
                  for (const auto& f1 : B.H(A1, B1).arrows)
                    for (const auto& f2 : C.H(A2, B2).arrows)
                      F.arrow_map[pair_id(pair_id(g1.id, g2.id), pair_id(f1.id, f2.id))] =
                          pair_id(B.c2(A1, B1, C1, g1.id, f1.id),
                                  C.c2(A2, B2, C2, g2.id, f2.id));
              P.comp[{a, b, c}] = std::move(F);
            }

  for (const auto& A1 : B.zero_cells)
    for (const auto& A2 : C.zero_cells)
      for (const auto& B1 : B.zero_cells)
        for (const auto& B2 : C.zero_cells) {
          Id a = pair_id(A1, A2), b = pair_id(B1, B2);
          GroupoidFunctor F;
          F.source = P.H(a, b);
          F.target = P.H(b, a);
          for (const auto& f1 : B.H(A1, B1).objects)
            for (const auto& f2 : C.H(A2, B2).objects)
              F.object_map[pair_id(f1, f2)] =
                  pair_id(B.star1(A1, B1, f1), C.star1(A2, B2, f2));
          for (const auto& f1 : B.H(A1, B1).arrows)
            for (const auto& f2 : C.H(A2, B2).arrows)
              F.arrow_map[pair_id(f1.id, f2.id)] =
                  pair_id(B.star2(A1, B1, f1.id), C.star2(A2, B2, f2.id));
          P.inv[{a, b}] = std::move(F);
        }

  for (const auto& A1 : B.zero_cells)
    for (const auto& A2 : C.zero_cells)
      for (const auto& B1 : B.zero_cells)
        for (const auto& B2 : C.zero_cells)
          for (const auto& C1 : B.zero_cells)
            for (const auto& C2 : C.zero_cells)
              for (const auto& D1 : B.zero_cells)
                for (const auto& D2 : C.zero_cells)
                  for (const auto& f1 : B.H(A1, B1).objects)
                    for (const auto& f2 : C.H(A2, B2).objects)
                      for (const auto& g1 : B.H(B1, C1).objects)
                        for (const auto& g2 : C.H(B2, C2).objects)
                          for (const auto& h1 : B.H(C1, D1).objects)
                            for (const auto& h2 : C.H(C2, D2).objects)
                              P.assoc[{pair_id(A1, A2), pair_id(B1, B2), pair_id(C1, C2),
                                       pair_id(D1, D2), pair_id(h1, h2), pair_id(g1, g2),
                                       pair_id(f1, f2)}] =
                                  pair_id(B.a_at(A1, B1, C1, D1, h1, g1, f1),
                                          C.a_at(A2, B2, C2, D2, h2, g2, f2));

  for (const auto& A1 : B.zero_cells)
    for (const auto& A2 : C.zero_cells)
      for (const auto& B1 : B.zero_cells)
        for (const auto& B2 : C.zero_cells)
          for (const auto& f1 : B.H(A1, B1).objects)
            for (const auto& f2 : C.H(A2, B2).objects) {
              CellKey k{pair_id(A1, A2), pair_id(B1, B2), pair_id(f1, f2)};
              P.lunit[k] = pair_id(B.l_at(A1, B1, f1), C.l_at(A2, B2, f2));
              P.runit[k] = pair_id(B.r_at(A1, B1, f1), C.r_at(A2, B2, f2));
              P.counit[k] = pair_id(B.e_at(A1, B1, f1), C.e_at(A2, B2, f2));
              P.unit2[k] = pair_id(B.i_at(A1, B1, f1), C.i_at(A2, B2, f2));
            }

  ProductResult out;
  out.product = std::move(P);

  // projections, strict
  {
    std::map<Id, Id> zm1, zm2;
    std::map<std::pair<Id, Id>, GroupoidFunctor> l1, l2;
    for (const auto& A1 : B.zero_cells)
      for (const auto& A2 : C.zero_cells) {
        zm1[pair_id(A1, A2)] = A1;
        zm2[pair_id(A1, A2)] = A2;
      }
    for (const auto& A1 : B.zero_cells)
      for (const auto& A2 : C.zero_cells)
        for (const auto& B1 : B.zero_cells)
          for (const auto& B2 : C.zero_cells) {
            Id a = pair_id(A1, A2), b = pair_id(B1, B2);
            GroupoidFunctor F1, F2;
            F1.source = out.product.H(a, b);
            F1.target = B.H(A1, B1);
            F2.source = out.product.H(a, b);
            F2.target = C.H(A2, B2);
            for (const auto& f1 : B.H(A1, B1).objects)
              for (const auto& f2 : C.H(A2, B2).objects) {
                F1.object_map[pair_id(f1, f2)] = f1;
                F2.object_map[pair_id(f1, f2)] = f2;
              }
            for (const auto& f1 : B.H(A1, B1).arrows)
              for (const auto& f2 : C.H(A2, B2).arrows) {
                F1.arrow_map[pair_id(f1.id, f2.id)] = f1.id;
                F2.arrow_map[pair_id(f1.id, f2.id)] = f2.id;
              }
            l1[{a, b}] = std::move(F1);
            l2[{a, b}] = std::move(F2);
          }
    out.proj1 = make_strict(out.product, B, std::move(zm1), std::move(l1));
    out.proj2 = make_strict(out.product, C, std::move(zm2), std::move(l2));
  }
  return out;
}

Pseudofunctor diagonal(const FiniteBigroupoid& B) {
  ProductResult pr = product_bigroupoid(B, B);
  std::map<Id, Id> zm;
  std::map<std::pair<Id, Id>, GroupoidFunctor> loc;
  for (const auto& A : B.zero_cells) zm[A] = pair_id(A, A);
  for (const auto& A : B.zero_cells)
    for (const auto& Bb : B.zero_cells) {
      GroupoidFunctor F;
      F.source = B.H(A, Bb);
      F.target = pr.product.H(pair_id(A, A), pair_id(Bb, Bb));
      for (const auto& f : B.H(A, Bb).objects) F.object_map[f] = pair_id(f, f);
      for (const auto& f : B.H(A, Bb).arrows) F.arrow_map[f.id] = pair_id(f.id, f.id);
      loc[{A, Bb}] = std::move(F);
    }
  return make_strict(B, pr.product, std::move(zm), std::move(loc));
}

FiniteBigroupoid terminal_bigroupoid() {
  FiniteBigroupoid T;
  T.zero_cells = {"*"};
  FiniteGroupoid G;
  G.objects = {"1"};
  G.arrows = {{"id", "1", "1"}};
  G.identity["1"] = "id";
  G.compose[{"id", "id"}] = "id";
  G.inverse["id"] = "id";
  T.hom[{"*", "*"}] = G;
  GroupoidFunctor Cf;
  Cf.source = product_groupoid(G, G);
  Cf.target = G;
  Cf.object_map[pair_id("1", "1")] = "1";
  Cf.arrow_map[pair_id("id", "id")] = "id";
  T.comp[{"*", "*", "*"}] = Cf;
  T.unit["*"] = "1";
  T.inv[{"*", "*"}] = identity_functor(G);
  T.assoc[{"*", "*", "*", "*", "1", "1", "1"}] = "id";
  T.lunit[{"*", "*", "1"}] = "id";
  T.runit[{"*", "*", "1"}] = "id";
  T.counit[{"*", "*", "1"}] = "id";
  T.unit2[{"*", "*", "1"}] = "id";
  return T;
}

TerminalResult terminal_and_bang(const FiniteBigroupoid& B) {
  TerminalResult out;
  out.terminal = terminal_bigroupoid();
  std::map<Id, Id> zm;
  std::map<std::pair<Id, Id>, GroupoidFunctor> loc;
  for (const auto& A : B.zero_cells) zm[A] = "*";
  for (const auto& A : B.zero_cells)
    for (const auto& Bb : B.zero_cells) {
      GroupoidFunctor F;
      F.source = B.H(A, Bb);
      F.target = out.terminal.H("*", "*");
      for (const auto& f : B.H(A, Bb).objects) F.object_map[f] = "1";
      for (const auto& f : B.H(A, Bb).arrows) F.arrow_map[f.id] = "id";
      loc[{A, Bb}] = std::move(F);
    }
  out.bang = make_strict(B, out.terminal, std::move(zm), std::move(loc));
  return out;
}

}  // namespace bgm
