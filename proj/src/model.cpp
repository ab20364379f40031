#include "bgm/model.hpp"

#include <algorithm>

namespace bgm {

namespace {

std::vector<Id> sorted_ids(std::vector<Id> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Scratch graph over a bigroupoid: fresh edges name concrete 1-cells, nodes
// name 0-cells, and parallel pastings are compared through their canonical
// 2-cell, evaluated back in B.
struct Scratch {
  const FiniteBigroupoid& B;
  Graph g;
  Assign asg;
  int n = 0;

  void node(const Id& A) {
    if (g.has_node(A)) return;
    g.nodes.push_back(A);
    asg.nodes[A] = A;
  }
  Term cell(const Id& f, const Id& A, const Id& Bb) {
    node(A);
    node(Bb);
    Id e = "e" + std::to_string(n++);
    g.edges.push_back({e, A, Bb});
    asg.edges[e] = f;
    return gen(e);
  }
  Id ev(const Term& u) const { return eval_1cell(B, g, asg, u); }
  // canonical 2-cell from the pasting u to the pasting v, as an arrow of B;
  // literally the identity when the terms coincide
  Id cano(const Term& u, const Term& v) const {
    if (term_eq(u, v)) return B.H(src0(g, u), tgt0(g, u)).id_at(ev(u));
    auto w = canonical_2cell(g, u, v);
    if (!w) throw ConstructionError("no canonical cell between the given pastings");
    return eval_2cell(B, g, asg, w->cell);
  }
};

// Section of a full, faithful functor surjective on objects: lex-least
// preimage objects, unique preimage arrows.
GroupoidFunctor section_of(const GroupoidFunctor& H) {
  GroupoidFunctor S;
  S.source = H.target;
  S.target = H.source;
  for (const auto& c : H.target.objects) {
    bool found = false;
    for (const auto& x : sorted_ids(H.source.objects))
      if (H.on_obj(x) == c) {
        S.object_map[c] = x;
        found = true;
        break;
      }
    if (!found) throw ConstructionError("section_of: no preimage object for " + c);
  }
  for (const auto& b : H.target.arrows)
    S.arrow_map[b.id] = ff_preimage(H, S.object_map.at(b.src), S.object_map.at(b.tgt), b.id);
  return S;
}

void require_ok(const ValidationReport& r, const std::string& what) {
  if (!r.ok())
    throw ConstructionError(what + ": output fails validation, first axiom " +
                            r.violations.front().axiom);
}

void require_square_data(const LiftingSquare& sq, const char* who) {
  if (!(compose_pseudofunctors(sq.right, sq.top) ==
        compose_pseudofunctors(sq.bottom, sq.left)))
    throw StructuralError(std::string(who) + ": square does not commute as data");
}

}  // namespace

Classification classify(const Pseudofunctor& F) {
  const FiniteBigroupoid& A = F.source;
  const FiniteBigroupoid& B = F.target;
  Classification c;

  // 1-cell lifting against 0-cells: every b: B0 -> F A' has a 1-cell over it
  bool lift0 = true;
  for (const auto& Ap : A.zero_cells)
    for (const auto& B0 : B.zero_cells)
      for (const auto& b : B.H(B0, F.on0(Ap)).objects) {
        bool found = false;
        for (const auto& A0 : A.zero_cells) {
          if (F.on0(A0) != B0) continue;
          for (const auto& a : A.H(A0, Ap).objects)
            if (F.on1(A0, Ap, a) == b) {
              found = true;
              break;
            }
          if (found) break;
        }
        if (!found) lift0 = false;
      }

  bool loc_fib = true, loc_cof = true, loc_we = true;
  for (const auto& P : A.zero_cells)
    for (const auto& Q : A.zero_cells) {
      GpdClassification lc = gpd_classify(F.L(P, Q));
      loc_fib = loc_fib && lc.is_fibration;
      loc_cof = loc_cof && lc.is_cofibration;
      loc_we = loc_we && lc.is_weak_equivalence;
    }

  bool inj0 = true;
  {
    std::map<Id, int> hits;
    for (const auto& A0 : A.zero_cells) ++hits[F.on0(A0)];
    for (const auto& [y, k] : hits)
      if (k > 1) inj0 = false;
  }

  // every 0-cell downstairs is connected to the image by a 1-cell
  bool conn0 = true;
  for (const auto& B0 : B.zero_cells) {
    bool hit = false;
    for (const auto& Ap : A.zero_cells)
      if (!B.H(B0, F.on0(Ap)).objects.empty()) hit = true;
    if (!hit) conn0 = false;
  }

  c.is_fibration = lift0 && loc_fib;
  c.is_cofibration = inj0 && loc_cof;
  c.is_weak_equivalence = conn0 && loc_we;
  c.is_trivial_fibration = c.is_fibration && c.is_weak_equivalence;
  c.is_trivial_cofibration = c.is_cofibration && c.is_weak_equivalence;
  return c;
}

Factorization factor_cof_trivfib(const Pseudofunctor& F) {
  const FiniteBigroupoid& A = F.source;
  const FiniteBigroupoid& C = F.target;

  FiniteBigroupoid B;
  std::map<Id, Id> p0;    // B 0-cell -> C 0-cell
  std::map<Id, Id> ltag;  // A 0-cell -> B 0-cell
  std::map<Id, Id> xof;   // L-tagged B 0-cell -> A 0-cell
  for (const auto& x : A.zero_cells) {
    Id u = pair_id("L", x);
    B.zero_cells.push_back(u);
    p0[u] = F.on0(x);
    ltag[x] = u;
    xof[u] = x;
  }
  for (const auto& y : C.zero_cells) {
    Id u = pair_id("R", y);
    B.zero_cells.push_back(u);
    p0[u] = y;
  }

  // homs: mapping cylinders of the local functors over L-pairs, copies of C
  // elsewhere; Hloc projects down, Sloc is its lex-least section
  std::map<std::pair<Id, Id>, GroupoidFunctor> Hloc, Sloc, Kloc;
  for (const auto& u : B.zero_cells)
    for (const auto& v : B.zero_cells) {
      auto xu = xof.find(u), xv = xof.find(v);
      if (xu != xof.end() && xv != xof.end()) {
        auto [K, Q] = gpd_factor(F.L(xu->second, xv->second), GpdWfs::cof_trivfib);
        B.hom[{u, v}] = K.target;
        Hloc[{u, v}] = Q;
        Kloc[{u, v}] = K;
      } else {
        B.hom[{u, v}] = C.H(p0[u], p0[v]);
        Hloc[{u, v}] = identity_functor(C.H(p0[u], p0[v]));
      }
      Sloc[{u, v}] = section_of(Hloc[{u, v}]);
    }

  for (const auto& u : B.zero_cells)
    for (const auto& v : B.zero_cells)
      for (const auto& w : B.zero_cells)
        B.comp[{u, v, w}] = compose_functors(
            Sloc[{u, w}], compose_functors(C.C(p0[u], p0[v], p0[w]),
                                           product_functor(Hloc[{v, w}], Hloc[{u, v}])));
  for (const auto& u : B.zero_cells) B.unit[u] = Sloc[{u, u}].on_obj(C.unit_at(p0[u]));
  for (const auto& u : B.zero_cells)
    for (const auto& v : B.zero_cells)
      B.inv[{u, v}] = compose_functors(
          Sloc[{v, u}], compose_functors(C.I(p0[u], p0[v]), Hloc[{u, v}]));

  // structure 2-cells: unique Hloc-preimages of C's components
  for (const auto& u : B.zero_cells)
    for (const auto& v : B.zero_cells)
      for (const auto& w : B.zero_cells)
        for (const auto& z : B.zero_cells)
          for (const auto& f : B.H(u, v).objects)
            for (const auto& g : B.H(v, w).objects)
              for (const auto& h : B.H(w, z).objects) {
                Id lhs = B.c1(u, v, z, B.c1(v, w, z, h, g), f);
                Id rhs = B.c1(u, w, z, h, B.c1(u, v, w, g, f));
                B.assoc[{u, v, w, z, h, g, f}] = ff_preimage(
                    Hloc[{u, z}], lhs, rhs,
                    C.a_at(p0[u], p0[v], p0[w], p0[z], Hloc[{w, z}].on_obj(h),
                           Hloc[{v, w}].on_obj(g), Hloc[{u, v}].on_obj(f)));
              }
  for (const auto& u : B.zero_cells)
    for (const auto& v : B.zero_cells)
      for (const auto& f : B.H(u, v).objects) {
        Id Hf = Hloc[{u, v}].on_obj(f);
        Id fs = B.star1(u, v, f);
        B.lunit[{u, v, f}] = ff_preimage(Hloc[{u, v}], B.c1(u, v, v, B.unit_at(v), f), f,
                                         C.l_at(p0[u], p0[v], Hf));
        B.runit[{u, v, f}] = ff_preimage(Hloc[{u, v}], B.c1(u, u, v, f, B.unit_at(u)), f,
                                         C.r_at(p0[u], p0[v], Hf));
        B.counit[{u, v, f}] = ff_preimage(Hloc[{u, u}], B.c1(u, v, u, fs, f), B.unit_at(u),
                                          C.e_at(p0[u], p0[v], Hf));
        B.unit2[{u, v, f}] = ff_preimage(Hloc[{v, v}], B.unit_at(v), B.c1(v, u, v, f, fs),
                                         C.i_at(p0[u], p0[v], Hf));
      }
  require_ok(validate_bigroupoid(B), "factor_cof_trivfib(middle)");

  Pseudofunctor G;
  G.source = A;
  G.target = B;
  G.zero_map = ltag;
  for (const auto& x : A.zero_cells)
    for (const auto& y : A.zero_cells) G.local[{x, y}] = Kloc[{ltag[x], ltag[y]}];
  for (const auto& x : A.zero_cells)
    for (const auto& y : A.zero_cells)
      for (const auto& z : A.zero_cells)
        for (const auto& f : A.H(x, y).objects)
          for (const auto& g : A.H(y, z).objects) {
            Id u = ltag[x], v = ltag[y], w = ltag[z];
            G.phi_comp[{x, y, z, g, f}] = ff_preimage(
                Hloc[{u, w}],
                B.c1(u, v, w, G.on1(y, z, g), G.on1(x, y, f)),
                G.on1(x, z, A.c1(x, y, z, g, f)), F.pc(x, y, z, g, f));
          }
  for (const auto& x : A.zero_cells) {
    Id u = ltag[x];
    G.phi_unit[x] = ff_preimage(Hloc[{u, u}], B.unit_at(u),
                                G.on1(x, x, A.unit_at(x)), F.pu(x));
  }
  for (const auto& x : A.zero_cells)
    for (const auto& y : A.zero_cells)
      for (const auto& f : A.H(x, y).objects) {
        Id u = ltag[x], v = ltag[y];
        G.phi_inv[{x, y, f}] = ff_preimage(Hloc[{v, u}], B.star1(u, v, G.on1(x, y, f)),
                                           G.on1(y, x, A.star1(x, y, f)), F.pi(x, y, f));
      }

  Pseudofunctor H = make_strict(B, C, p0, Hloc);

  require_ok(validate_pseudofunctor(G), "factor_cof_trivfib(first)");
  require_ok(validate_pseudofunctor(H), "factor_cof_trivfib(second)");
  if (!(compose_pseudofunctors(H, G) == F))
    throw ConstructionError("factor_cof_trivfib: legs do not compose to the input");

  Factorization out;
  out.middle = std::move(B);
  out.first = std::move(G);
  out.second = std::move(H);
  out.first_flags = classify(out.first);
  out.second_flags = classify(out.second);
  if (!out.first_flags.is_cofibration || !out.second_flags.is_trivial_fibration)
    throw ConstructionError("factor_cof_trivfib: legs land outside their classes");
  return out;
}

Pseudofunctor lift_cof_trivfib(const LiftingSquare& sq) {
  require_square_data(sq, "lift_cof_trivfib");
  const Pseudofunctor& T = sq.top;
  const Pseudofunctor& K = sq.left;
  const Pseudofunctor& G = sq.right;
  const Pseudofunctor& Bot = sq.bottom;
  if (!classify(K).is_cofibration)
    throw PreconditionError("lift_cof_trivfib: left map is not a cofibration");
  if (!classify(G).is_trivial_fibration)
    throw PreconditionError("lift_cof_trivfib: right map is not a trivial fibration");

  const FiniteBigroupoid& B = K.target;
  const FiniteBigroupoid& X = G.source;
  const FiniteBigroupoid& Y = G.target;

  Pseudofunctor L;
  L.source = B;
  L.target = X;

  std::map<Id, Id> preim;  // K-image 0-cell -> A 0-cell
  for (const auto& x : K.source.zero_cells) preim[K.on0(x)] = x;
  for (const auto& b : B.zero_cells) {
    auto it = preim.find(b);
    if (it != preim.end()) {
      L.zero_map[b] = T.on0(it->second);
      continue;
    }
    bool found = false;
    for (const auto& u : sorted_ids(X.zero_cells))
      if (G.on0(u) == Bot.on0(b)) {
        L.zero_map[b] = u;
        found = true;
        break;
      }
    if (!found) throw ConstructionError("lift_cof_trivfib: no 0-cell over " + Bot.on0(b));
  }

  for (const auto& b : B.zero_cells)
    for (const auto& bp : B.zero_cells) {
      auto ib = preim.find(b), ibp = preim.find(bp);
      if (ib != preim.end() && ibp != preim.end()) {
        GpdSquare s{T.L(ib->second, ibp->second), K.L(ib->second, ibp->second),
                    G.L(L.zero_map[b], L.zero_map[bp]), Bot.L(b, bp)};
        L.local[{b, bp}] = gpd_lift(s, GpdWfs::cof_trivfib);
        continue;
      }
      // lift the bottom local through the locally surjective equivalence G
      const GroupoidFunctor& Gl = G.L(L.zero_map[b], L.zero_map[bp]);
      const GroupoidFunctor& Bl = Bot.L(b, bp);
      GroupoidFunctor Ll;
      Ll.source = Bl.source;
      Ll.target = Gl.source;
      for (const auto& f : Bl.source.objects) {
        bool found = false;
        for (const auto& g : sorted_ids(Gl.source.objects))
          if (Gl.on_obj(g) == Bl.on_obj(f)) {
            Ll.object_map[f] = g;
            found = true;
            break;
          }
        if (!found)
          throw ConstructionError("lift_cof_trivfib: no 1-cell over " + Bl.on_obj(f));
      }
      for (const auto& a : Bl.source.arrows)
        Ll.arrow_map[a.id] =
            ff_preimage(Gl, Ll.object_map.at(a.src), Ll.object_map.at(a.tgt), Bl.on_arr(a.id));
      L.local[{b, bp}] = Ll;
    }

  // phi: the unique G-preimages of eta . gamma^-1
  for (const auto& b : B.zero_cells)
    for (const auto& bp : B.zero_cells)
      for (const auto& bpp : B.zero_cells)
        for (const auto& f : B.H(b, bp).objects)
          for (const auto& g : B.H(bp, bpp).objects) {
            Id u = L.zero_map[b], v = L.zero_map[bp], w = L.zero_map[bpp];
            Id Lf = L.local[{b, bp}].on_obj(f), Lg = L.local[{bp, bpp}].on_obj(g);
            Id cell = Y.v(Bot.on0(b), Bot.on0(bpp), Bot.pc(b, bp, bpp, g, f),
                          Y.H(Bot.on0(b), Bot.on0(bpp)).inv(G.pc(u, v, w, Lg, Lf)));
            L.phi_comp[{b, bp, bpp, g, f}] =
                ff_preimage(G.L(u, w), X.c1(u, v, w, Lg, Lf),
                            L.local[{b, bpp}].on_obj(B.c1(b, bp, bpp, g, f)), cell);
          }
  for (const auto& b : B.zero_cells) {
    Id u = L.zero_map[b];
    Id cell = Y.v(Bot.on0(b), Bot.on0(b), Bot.pu(b),
                  Y.H(Bot.on0(b), Bot.on0(b)).inv(G.pu(u)));
    L.phi_unit[b] = ff_preimage(G.L(u, u), X.unit_at(u),
                                L.local[{b, b}].on_obj(B.unit_at(b)), cell);
  }
  for (const auto& b : B.zero_cells)
    for (const auto& bp : B.zero_cells)
      for (const auto& f : B.H(b, bp).objects) {
        Id u = L.zero_map[b], v = L.zero_map[bp];
        Id Lf = L.local[{b, bp}].on_obj(f);
        Id cell = Y.v(Bot.on0(bp), Bot.on0(b), Bot.pi(b, bp, f),
                      Y.H(Bot.on0(bp), Bot.on0(b)).inv(G.pi(u, v, Lf)));
        L.phi_inv[{b, bp, f}] =
            ff_preimage(G.L(v, u), X.star1(u, v, Lf),
                        L.local[{bp, b}].on_obj(B.star1(b, bp, f)), cell);
      }

  require_ok(validate_pseudofunctor(L), "lift_cof_trivfib");
  if (!(compose_pseudofunctors(L, K) == T))
    throw ConstructionError("lift_cof_trivfib: upper triangle broken");
  if (!(compose_pseudofunctors(G, L) == Bot))
    throw ConstructionError("lift_cof_trivfib: lower triangle broken");
  return L;
}

namespace {

struct PbHom {
  FiniteGroupoid G;
  GroupoidFunctor pD, pB;
};

// pullback of Fl along Gl in groupoids, with its projections
PbHom pullback_hom(const GroupoidFunctor& Gl, const GroupoidFunctor& Fl) {
  PbHom out;
  for (const auto& d : Gl.source.objects)
    for (const auto& b : Fl.source.objects)
      if (Gl.on_obj(d) == Fl.on_obj(b)) {
        Id o = pair_id(d, b);
        out.G.objects.push_back(o);
        out.pD.object_map[o] = d;
        out.pB.object_map[o] = b;
      }
  std::map<Id, std::pair<Id, Id>> parts;
  for (const auto& x : Gl.source.arrows)
    for (const auto& y : Fl.source.arrows) {
      if (Gl.on_arr(x.id) != Fl.on_arr(y.id)) continue;
      Id a = pair_id(x.id, y.id);
      out.G.arrows.push_back({a, pair_id(x.src, y.src), pair_id(x.tgt, y.tgt)});
      out.pD.arrow_map[a] = x.id;
      out.pB.arrow_map[a] = y.id;
      parts[a] = {x.id, y.id};
    }
  for (const auto& d : Gl.source.objects)
    for (const auto& b : Fl.source.objects)
      if (Gl.on_obj(d) == Fl.on_obj(b))
        out.G.identity[pair_id(d, b)] =
            pair_id(Gl.source.id_at(d), Fl.source.id_at(b));
  for (const auto& a1 : out.G.arrows)
    for (const auto& a2 : out.G.arrows) {
      if (a2.tgt != a1.src) continue;
      out.G.compose[{a1.id, a2.id}] =
          pair_id(Gl.source.comp(parts[a1.id].first, parts[a2.id].first),
                  Fl.source.comp(parts[a1.id].second, parts[a2.id].second));
    }
  for (const auto& a : out.G.arrows)
    out.G.inverse[a.id] =
        pair_id(Gl.source.inv(parts[a.id].first), Fl.source.inv(parts[a.id].second));
  out.pD.source = out.G;
  out.pD.target = Gl.source;
  out.pB.source = out.G;
  out.pB.target = Fl.source;
  return out;
}

}  // namespace

PullbackResult pullback_fibration(const Pseudofunctor& F, const Pseudofunctor& G) {
  if (!(F.target == G.target))
    throw StructuralError("pullback_fibration: cospan boundary mismatch");
  if (!classify(F).is_fibration)
    throw PreconditionError("pullback_fibration: first map is not a fibration");
  if (F == identity_pseudofunctor(F.target)) {
    // pulling back along the identity reproduces the other source on the nose
    PullbackResult out;
    out.A = G.source;
    out.P = identity_pseudofunctor(G.source);
    out.R = G;
    out.F = F;
    out.G = G;
    return out;
  }
  const FiniteBigroupoid& B = F.source;
  const FiniteBigroupoid& C = F.target;
  const FiniteBigroupoid& D = G.source;

  FiniteBigroupoid A;
  std::map<Id, Id> dof, bof;
  for (const auto& d : D.zero_cells)
    for (const auto& b : B.zero_cells)
      if (G.on0(d) == F.on0(b)) {
        Id u = pair_id(d, b);
        A.zero_cells.push_back(u);
        dof[u] = d;
        bof[u] = b;
      }

  std::map<std::pair<Id, Id>, GroupoidFunctor> pD, pB;
  for (const auto& u : A.zero_cells)
    for (const auto& v : A.zero_cells) {
      PbHom h = pullback_hom(G.L(dof[u], dof[v]), F.L(bof[u], bof[v]));
      A.hom[{u, v}] = h.G;
      pD[{u, v}] = std::move(h.pD);
      pB[{u, v}] = std::move(h.pB);
    }

  Pseudofunctor R;
  R.source = A;  // refreshed after A is complete
  R.target = B;
  R.zero_map = bof;

  // composition: the B-side is lifted through the fibration so that the
  // square with the D-side commutes on the nose
  for (const auto& u : A.zero_cells)
    for (const auto& v : A.zero_cells)
      for (const auto& w : A.zero_cells) {
        Id d = dof[u], dp = dof[v], dpp = dof[w];
        Id b = bof[u], bp = bof[v], bpp = bof[w];
        GroupoidFunctor Dside = compose_functors(
            D.C(d, dp, dpp), product_functor(pD[{v, w}], pD[{u, v}]));
        GroupoidFunctor Frole = compose_functors(
            B.C(b, bp, bpp), product_functor(pB[{v, w}], pB[{u, v}]));
        GroupoidFunctor Hrole = compose_functors(G.L(d, dpp), Dside);
        NatIso beta;
        beta.source = Hrole;
        beta.target = compose_functors(F.L(b, bpp), Frole);
        for (const auto& y : A.H(v, w).objects)
          for (const auto& x : A.H(u, v).objects)
            beta.components[pair_id(y, x)] =
                C.v(F.on0(b), F.on0(bpp),
                    F.pc(b, bp, bpp, pB[{v, w}].on_obj(y), pB[{u, v}].on_obj(x)),
                    C.H(F.on0(b), F.on0(bpp))
                        .inv(G.pc(d, dp, dpp, pD[{v, w}].on_obj(y), pD[{u, v}].on_obj(x))));
        auto [Fp, al] = fibration_lift_up_to_iso(Frole, Hrole, F.L(b, bpp), beta);

        GroupoidFunctor Cf;
        Cf.source = Frole.source;
        Cf.target = A.H(u, w);
        for (const auto& o : Cf.source.objects)
          Cf.object_map[o] = pair_id(Dside.on_obj(o), Fp.on_obj(o));
        for (const auto& a : Cf.source.arrows)
          Cf.arrow_map[a.id] = pair_id(Dside.on_arr(a.id), Fp.on_arr(a.id));
        A.comp[{u, v, w}] = std::move(Cf);

        for (const auto& y : A.H(v, w).objects)
          for (const auto& x : A.H(u, v).objects)
            R.phi_comp[{u, v, w, y, x}] =
                B.H(b, bpp).inv(al.at(pair_id(y, x)));
      }

  // units: lift phi_b . gamma_d^-1 against the local isofibration
  for (const auto& u : A.zero_cells) {
    Id d = dof[u], b = bof[u];
    Id cell = C.v(F.on0(b), F.on0(b), F.pu(b),
                  C.H(F.on0(b), F.on0(b)).inv(G.pu(d)));
    std::vector<Id> ids;
    for (const auto& t : B.H(b, b).arrows) ids.push_back(t.id);
    bool found = false;
    for (const auto& t : sorted_ids(ids)) {
      const Arrow& ta = B.H(b, b).arrow(t);
      if (ta.tgt != B.unit_at(b) || F.L(b, b).on_arr(t) != cell) continue;
      A.unit[u] = pair_id(D.unit_at(d), ta.src);
      R.phi_unit[u] = B.H(b, b).inv(t);
      found = true;
      break;
    }
    if (!found) throw ConstructionError("pullback_fibration: no unit lift at " + u);
  }

  // inversion, lifted the same way
  for (const auto& u : A.zero_cells)
    for (const auto& v : A.zero_cells) {
      Id d = dof[u], dp = dof[v], b = bof[u], bp = bof[v];
      GroupoidFunctor Dside = compose_functors(D.I(d, dp), pD[{u, v}]);
      GroupoidFunctor Frole = compose_functors(B.I(b, bp), pB[{u, v}]);
      GroupoidFunctor Hrole = compose_functors(G.L(dp, d), Dside);
      NatIso beta;
      beta.source = Hrole;
      beta.target = compose_functors(F.L(bp, b), Frole);
      for (const auto& x : A.H(u, v).objects)
        beta.components[x] =
            C.v(F.on0(bp), F.on0(b), F.pi(b, bp, pB[{u, v}].on_obj(x)),
                C.H(F.on0(bp), F.on0(b)).inv(G.pi(d, dp, pD[{u, v}].on_obj(x))));
      auto [Fp, al] = fibration_lift_up_to_iso(Frole, Hrole, F.L(bp, b), beta);

      GroupoidFunctor If;
      If.source = A.H(u, v);
      If.target = A.H(v, u);
      for (const auto& x : A.H(u, v).objects)
        If.object_map[x] = pair_id(Dside.on_obj(x), Fp.on_obj(x));
      for (const auto& a : A.H(u, v).arrows)
        If.arrow_map[a.id] = pair_id(Dside.on_arr(a.id), Fp.on_arr(a.id));
      A.inv[{u, v}] = std::move(If);

      for (const auto& x : A.H(u, v).objects)
        R.phi_inv[{u, v, x}] = B.H(bp, b).inv(al.at(x));
    }

  // structure 2-cells: the D-side is D's, the B-side is forced by making R a
  // pseudofunctor with the phi tables above
  auto rc = [&](const Id& u, const Id& v, const Id& w, const Id& y, const Id& x) {
    return R.phi_comp.at({u, v, w, y, x});
  };
  for (const auto& u : A.zero_cells)
    for (const auto& v : A.zero_cells)
      for (const auto& w : A.zero_cells)
        for (const auto& z : A.zero_cells) {
          Id b = bof[u], bp = bof[v], bpp = bof[w], bppp = bof[z];
          for (const auto& x : A.H(u, v).objects)
            for (const auto& y : A.H(v, w).objects)
              for (const auto& zc : A.H(w, z).objects) {
                Id Rx = pB[{u, v}].on_obj(x), Ry = pB[{v, w}].on_obj(y),
                   Rz = pB[{w, z}].on_obj(zc);
                Id zy = A.c1(v, w, z, zc, y), yx = A.c1(u, v, w, y, x);
                Id s1 = B.H(b, bppp).inv(rc(u, v, z, zy, x));
                Id s2 = B.wr(b, bp, bppp, B.H(bp, bppp).inv(rc(v, w, z, zc, y)), Rx);
                Id s3 = B.a_at(b, bp, bpp, bppp, Rz, Ry, Rx);
                Id s4 = B.wl(b, bpp, bppp, Rz, rc(u, v, w, y, x));
                Id s5 = rc(u, w, z, zc, yx);
                Id part =
                    B.v(b, bppp, s5, B.v(b, bppp, s4, B.v(b, bppp, s3, B.v(b, bppp, s2, s1))));
                A.assoc[{u, v, w, z, zc, y, x}] =
                    pair_id(D.a_at(dof[u], dof[v], dof[w], dof[z], pD[{w, z}].on_obj(zc),
                                   pD[{v, w}].on_obj(y), pD[{u, v}].on_obj(x)),
                            part);
              }
        }
  for (const auto& u : A.zero_cells)
    for (const auto& v : A.zero_cells) {
      Id b = bof[u], bp = bof[v];
      for (const auto& x : A.H(u, v).objects) {
        Id Rx = pB[{u, v}].on_obj(x);
        Id xs = A.I(u, v).on_obj(x);
        Id dl = pD[{u, v}].on_obj(x);
        {
          Id s1 = B.H(b, bp).inv(rc(u, v, v, A.unit_at(v), x));
          Id s2 = B.wr(b, bp, bp, B.H(bp, bp).inv(R.phi_unit.at(v)), Rx);
          Id part = B.v(b, bp, B.l_at(b, bp, Rx), B.v(b, bp, s2, s1));
          A.lunit[{u, v, x}] = pair_id(D.l_at(dof[u], dof[v], dl), part);
        }
        {
          Id s1 = B.H(b, bp).inv(rc(u, u, v, x, A.unit_at(u)));
          Id s2 = B.wl(b, b, bp, Rx, B.H(b, b).inv(R.phi_unit.at(u)));
          Id part = B.v(b, bp, B.r_at(b, bp, Rx), B.v(b, bp, s2, s1));
          A.runit[{u, v, x}] = pair_id(D.r_at(dof[u], dof[v], dl), part);
        }
        {
          Id s1 = B.H(b, b).inv(rc(u, v, u, xs, x));
          Id s2 = B.wr(b, bp, b, B.H(bp, b).inv(R.phi_inv.at({u, v, x})), Rx);
          Id s3 = B.e_at(b, bp, Rx);
          Id part = B.v(b, b, R.phi_unit.at(u), B.v(b, b, s3, B.v(b, b, s2, s1)));
          A.counit[{u, v, x}] = pair_id(D.e_at(dof[u], dof[v], dl), part);
        }
        {
          Id s1 = B.H(bp, bp).inv(R.phi_unit.at(v));
          Id s2 = B.i_at(b, bp, Rx);
          Id s3 = B.wl(bp, b, bp, Rx, R.phi_inv.at({u, v, x}));
          Id s4 = rc(v, u, v, x, xs);
          Id part = B.v(bp, bp, s4, B.v(bp, bp, s3, B.v(bp, bp, s2, s1)));
          A.unit2[{u, v, x}] = pair_id(D.i_at(dof[u], dof[v], dl), part);
        }
      }
    }
  require_ok(validate_bigroupoid(A), "pullback_fibration(total)");

  std::map<std::pair<Id, Id>, GroupoidFunctor> pDl;
  for (auto& [k, f] : pD) pDl[k] = f;
  Pseudofunctor P = make_strict(A, D, dof, pDl);

  R.source = A;
  for (auto& [k, f] : pB) R.local[k] = f;
  require_ok(validate_pseudofunctor(R), "pullback_fibration(second projection)");
  if (!(compose_pseudofunctors(F, R) == compose_pseudofunctors(G, P)))
    throw ConstructionError("pullback_fibration: projections do not agree over the cospan");

  PullbackResult out;
  out.A = std::move(A);
  out.P = std::move(P);
  out.R = std::move(R);
  out.F = F;
  out.G = G;
  return out;
}

Pseudofunctor mediate(const PullbackResult& pb, const Pseudofunctor& S,
                      const Pseudofunctor& T) {
  if (!(S.target == pb.G.source) || !(T.target == pb.F.source))
    throw StructuralError("mediate: cone boundary mismatch");
  if (!(compose_pseudofunctors(pb.F, T) == compose_pseudofunctors(pb.G, S)))
    throw StructuralError("mediate: cone does not commute as data");
  if (pb.F == identity_pseudofunctor(pb.F.target)) {
    if (!(compose_pseudofunctors(pb.R, S) == T))
      throw ConstructionError("mediate: projections do not recover the cone");
    return S;
  }
  const FiniteBigroupoid& Z = S.source;
  const FiniteBigroupoid& Bt = pb.F.source;

  Pseudofunctor L;
  L.source = Z;
  L.target = pb.A;
  for (const auto& z : Z.zero_cells) L.zero_map[z] = pair_id(S.on0(z), T.on0(z));
  for (const auto& z : Z.zero_cells)
    for (const auto& zp : Z.zero_cells) {
      GroupoidFunctor f;
      f.source = Z.H(z, zp);
      f.target = pb.A.H(L.zero_map[z], L.zero_map[zp]);
      for (const auto& x : Z.H(z, zp).objects)
        f.object_map[x] = pair_id(S.on1(z, zp, x), T.on1(z, zp, x));
      for (const auto& a : Z.H(z, zp).arrows)
        f.arrow_map[a.id] = pair_id(S.on2(z, zp, a.id), T.on2(z, zp, a.id));
      L.local[{z, zp}] = std::move(f);
    }
  for (const auto& z : Z.zero_cells)
    for (const auto& zp : Z.zero_cells)
      for (const auto& zpp : Z.zero_cells)
        for (const auto& x : Z.H(z, zp).objects)
          for (const auto& y : Z.H(zp, zpp).objects) {
            Id u = L.zero_map[z], v = L.zero_map[zp], w = L.zero_map[zpp];
            Id Tb = T.on0(z), Tbpp = T.on0(zpp);
            Id bpart = Bt.v(Tb, Tbpp, T.pc(z, zp, zpp, y, x),
                            Bt.H(Tb, Tbpp).inv(pb.R.pc(u, v, w, L.local[{zp, zpp}].on_obj(y),
                                                       L.local[{z, zp}].on_obj(x))));
            L.phi_comp[{z, zp, zpp, y, x}] = pair_id(S.pc(z, zp, zpp, y, x), bpart);
          }
  for (const auto& z : Z.zero_cells) {
    Id u = L.zero_map[z];
    Id Tb = T.on0(z);
    Id bpart = Bt.v(Tb, Tb, T.pu(z), Bt.H(Tb, Tb).inv(pb.R.pu(u)));
    L.phi_unit[z] = pair_id(S.pu(z), bpart);
  }
  for (const auto& z : Z.zero_cells)
    for (const auto& zp : Z.zero_cells)
      for (const auto& x : Z.H(z, zp).objects) {
        Id u = L.zero_map[z], v = L.zero_map[zp];
        Id Tb = T.on0(z), Tbp = T.on0(zp);
        Id bpart =
            Bt.v(Tbp, Tb, T.pi(z, zp, x),
                 Bt.H(Tbp, Tb).inv(pb.R.pi(u, v, L.local[{z, zp}].on_obj(x))));
        L.phi_inv[{z, zp, x}] = pair_id(S.pi(z, zp, x), bpart);
      }

  require_ok(validate_pseudofunctor(L), "mediate");
  if (!(compose_pseudofunctors(pb.P, L) == S) || !(compose_pseudofunctors(pb.R, L) == T))
    throw ConstructionError("mediate: projections do not recover the cone");
  return L;
}

PathObjectResult path_object(const FiniteBigroupoid& B) {
  PathObjectResult out;
  FiniteBigroupoid& P = out.PB;

  struct ZData {
    Id A0, A1, f;
  };
  std::map<Id, ZData> zd;
  for (const auto& A0 : B.zero_cells)
    for (const auto& A1 : B.zero_cells)
      for (const auto& f : B.H(A0, A1).objects) {
        Id u = pair_id(pair_id(A0, A1), f);
        P.zero_cells.push_back(u);
        zd[u] = {A0, A1, f};
      }

  struct Trip {
    Id f, phi, fp;
  };
  struct TwoC {
    Id al, alp;
  };
  std::map<std::tuple<Id, Id, Id>, Trip> trip;
  std::map<std::tuple<Id, Id, Id>, TwoC> two;

  // the same component pair can connect several triples, so arrow ids
  // carry their source object
  auto wid = [](const Id& al, const Id& alp, const Id& from) {
    return pair_id(pair_id(al, alp), from);
  };

  for (const auto& u : P.zero_cells)
    for (const auto& v : P.zero_cells) {
      const ZData& a = zd[u];
      const ZData& b = zd[v];
      FiniteGroupoid Hg;
      for (const auto& f : B.H(a.A0, b.A0).objects)
        for (const auto& fp : B.H(a.A1, b.A1).objects) {
          Id lhs = B.c1(a.A0, a.A1, b.A1, fp, a.f);
          Id rhs = B.c1(a.A0, b.A0, b.A1, b.f, f);
          for (const auto& phi : B.H(a.A0, b.A1).arrows_from_to(lhs, rhs)) {
            Id o = pair_id(f, pair_id(phi, fp));
            Hg.objects.push_back(o);
            trip[{u, v, o}] = {f, phi, fp};
          }
        }
      for (const auto& o1 : Hg.objects)
        for (const auto& o2 : Hg.objects) {
          const Trip& t1 = trip[{u, v, o1}];
          const Trip& t2 = trip[{u, v, o2}];
          for (const auto& al : B.H(a.A0, b.A0).arrows_from_to(t1.f, t2.f))
            for (const auto& alp : B.H(a.A1, b.A1).arrows_from_to(t1.fp, t2.fp)) {
              if (B.v(a.A0, b.A1, B.wl(a.A0, b.A0, b.A1, b.f, al), t1.phi) !=
                  B.v(a.A0, b.A1, t2.phi, B.wr(a.A0, a.A1, b.A1, alp, a.f)))
                continue;
              Id aid = wid(al, alp, o1);
              Hg.arrows.push_back({aid, o1, o2});
              two[{u, v, aid}] = {al, alp};
            }
        }
      for (const auto& o : Hg.objects) {
        const Trip& t = trip[{u, v, o}];
        Hg.identity[o] =
            wid(B.H(a.A0, b.A0).id_at(t.f), B.H(a.A1, b.A1).id_at(t.fp), o);
      }
      for (const auto& a1 : Hg.arrows)
        for (const auto& a2 : Hg.arrows) {
          if (a2.tgt != a1.src) continue;
          const TwoC& c1 = two[{u, v, a1.id}];
          const TwoC& c2 = two[{u, v, a2.id}];
          Id r = wid(B.H(a.A0, b.A0).comp(c1.al, c2.al),
                     B.H(a.A1, b.A1).comp(c1.alp, c2.alp), a2.src);
          if (!Hg.has_arrow(r))
            throw ConstructionError("path_object: hom not closed under composition");
          Hg.compose[{a1.id, a2.id}] = r;
        }
      for (const auto& ar : Hg.arrows) {
        const TwoC& c = two[{u, v, ar.id}];
        Id r = wid(B.H(a.A0, b.A0).inv(c.al), B.H(a.A1, b.A1).inv(c.alp), ar.tgt);
        if (!Hg.has_arrow(r))
          throw ConstructionError("path_object: hom not closed under inversion");
        Hg.inverse[ar.id] = r;
      }
      P.hom[{u, v}] = std::move(Hg);
    }

  for (const auto& u : P.zero_cells) {
    const ZData& a = zd[u];
    Id phi = B.v(a.A0, a.A1, B.H(a.A0, a.A1).inv(B.r_at(a.A0, a.A1, a.f)),
                 B.l_at(a.A0, a.A1, a.f));
    P.unit[u] = pair_id(B.unit_at(a.A0), pair_id(phi, B.unit_at(a.A1)));
    if (!P.H(u, u).has_object(P.unit[u]))
      throw ConstructionError("path_object: unit 1-cell missing at " + u);
  }

  // composition: paste the two squares
  for (const auto& u : P.zero_cells)
    for (const auto& v : P.zero_cells)
      for (const auto& w : P.zero_cells) {
        const ZData& a = zd[u];
        const ZData& b = zd[v];
        const ZData& c = zd[w];
        GroupoidFunctor Cf;
        Cf.source = product_groupoid(P.H(v, w), P.H(u, v));
        Cf.target = P.H(u, w);
        for (const auto& o2 : P.H(v, w).objects)
          for (const auto& o1 : P.H(u, v).objects) {
            const Trip& t2 = trip[{v, w, o2}];
            const Trip& t1 = trip[{u, v, o1}];
            Id gf = B.c1(a.A0, b.A0, c.A0, t2.f, t1.f);
            Id gpfp = B.c1(a.A1, b.A1, c.A1, t2.fp, t1.fp);
            Id s1 = B.a_at(a.A0, a.A1, b.A1, c.A1, t2.fp, t1.fp, a.f);
            Id s2 = B.wl(a.A0, b.A1, c.A1, t2.fp, t1.phi);
            Id s3 = B.H(a.A0, c.A1)
                        .inv(B.a_at(a.A0, b.A0, b.A1, c.A1, t2.fp, b.f, t1.f));
            Id s4 = B.wr(a.A0, b.A0, c.A1, t2.phi, t1.f);
            Id s5 = B.a_at(a.A0, b.A0, c.A0, c.A1, c.f, t2.f, t1.f);
            Id chi = B.v(a.A0, c.A1, s5,
                         B.v(a.A0, c.A1, s4,
                             B.v(a.A0, c.A1, s3, B.v(a.A0, c.A1, s2, s1))));
            Id o = pair_id(gf, pair_id(chi, gpfp));
            if (!P.H(u, w).has_object(o))
              throw ConstructionError("path_object: pasted composite missing");
            Cf.object_map[pair_id(o2, o1)] = o;
          }
        for (const auto& ar2 : P.H(v, w).arrows)
          for (const auto& ar1 : P.H(u, v).arrows) {
            const TwoC& c2 = two[{v, w, ar2.id}];
            const TwoC& c1 = two[{u, v, ar1.id}];
            Cf.arrow_map[pair_id(ar2.id, ar1.id)] =
                wid(B.c2(a.A0, b.A0, c.A0, c2.al, c1.al),
                    B.c2(a.A1, b.A1, c.A1, c2.alp, c1.alp),
                    Cf.object_map.at(pair_id(ar2.src, ar1.src)));
          }
        P.comp[{u, v, w}] = std::move(Cf);
      }

  // inversion: the mate pasting on the square component
  for (const auto& u : P.zero_cells)
    for (const auto& v : P.zero_cells) {
      const ZData& a = zd[u];
      const ZData& b = zd[v];
      GroupoidFunctor If;
      If.source = P.H(u, v);
      If.target = P.H(v, u);
      for (const auto& o : P.H(u, v).objects) {
        const Trip& t = trip[{u, v, o}];
        Id fs = B.star1(a.A0, b.A0, t.f);
        Id fps = B.star1(a.A1, b.A1, t.fp);
        Scratch sc{B};
        Term ta = sc.cell(a.f, a.A0, a.A1);
        Term tb = sc.cell(b.f, b.A0, b.A1);
        Term tf = sc.cell(t.f, a.A0, b.A0);
        Term tfp = sc.cell(t.fp, a.A1, b.A1);
        Id afs = B.c1(b.A0, a.A0, a.A1, a.f, fs);
        Id c1s = sc.cano(comp(star(tfp), tb),
                         comp(star(tfp), comp(tb, unit(b.A0))));
        Id c2s = B.wl(b.A0, b.A1, a.A1, fps,
                      B.wl(b.A0, b.A0, b.A1, b.f, B.i_at(a.A0, b.A0, t.f)));
        Id c3s = sc.cano(comp(star(tfp), comp(tb, comp(tf, star(tf)))),
                         comp(star(tfp), comp(comp(tb, tf), star(tf))));
        Id c4s = B.wl(b.A0, b.A1, a.A1, fps,
                      B.wr(b.A0, a.A0, b.A1, B.H(a.A0, b.A1).inv(t.phi), fs));
        Id c5s = sc.cano(comp(star(tfp), comp(comp(tfp, ta), star(tf))),
                         comp(comp(star(tfp), tfp), comp(ta, star(tf))));
        Id c6s = B.wr(b.A0, a.A1, a.A1, B.e_at(a.A1, b.A1, t.fp), afs);
        Id c7s = B.l_at(b.A0, a.A1, afs);
        Id mate = B.v(b.A0, a.A1, c7s,
                      B.v(b.A0, a.A1, c6s,
                          B.v(b.A0, a.A1, c5s,
                              B.v(b.A0, a.A1, c4s,
                                  B.v(b.A0, a.A1, c3s, B.v(b.A0, a.A1, c2s, c1s))))));
        Id r = pair_id(fs, pair_id(mate, fps));
        if (!P.H(v, u).has_object(r))
          throw ConstructionError("path_object: mate 1-cell missing");
        If.object_map[o] = r;
      }
      for (const auto& ar : P.H(u, v).arrows) {
        const TwoC& c = two[{u, v, ar.id}];
        If.arrow_map[ar.id] =
            wid(B.star2(a.A0, b.A0, c.al), B.star2(a.A1, b.A1, c.alp),
                If.object_map.at(ar.src));
      }
      P.inv[{u, v}] = std::move(If);
    }

  // structure 2-cells are componentwise
  for (const auto& u : P.zero_cells)
    for (const auto& v : P.zero_cells)
      for (const auto& w : P.zero_cells)
        for (const auto& z : P.zero_cells) {
          const ZData& a = zd[u];
          const ZData& b = zd[v];
          const ZData& c = zd[w];
          const ZData& d = zd[z];
          for (const auto& o1 : P.H(u, v).objects)
            for (const auto& o2 : P.H(v, w).objects)
              for (const auto& o3 : P.H(w, z).objects) {
                const Trip& t1 = trip[{u, v, o1}];
                const Trip& t2 = trip[{v, w, o2}];
                const Trip& t3 = trip[{w, z, o3}];
                P.assoc[{u, v, w, z, o3, o2, o1}] =
                    wid(B.a_at(a.A0, b.A0, c.A0, d.A0, t3.f, t2.f, t1.f),
                        B.a_at(a.A1, b.A1, c.A1, d.A1, t3.fp, t2.fp, t1.fp),
                        P.c1(u, v, z, P.c1(v, w, z, o3, o2), o1));
              }
        }
  for (const auto& u : P.zero_cells)
    for (const auto& v : P.zero_cells) {
      const ZData& a = zd[u];
      const ZData& b = zd[v];
      for (const auto& o : P.H(u, v).objects) {
        const Trip& t = trip[{u, v, o}];
        P.lunit[{u, v, o}] =
            wid(B.l_at(a.A0, b.A0, t.f), B.l_at(a.A1, b.A1, t.fp),
                P.c1(u, v, v, P.unit_at(v), o));
        P.runit[{u, v, o}] =
            wid(B.r_at(a.A0, b.A0, t.f), B.r_at(a.A1, b.A1, t.fp),
                P.c1(u, u, v, o, P.unit_at(u)));
        P.counit[{u, v, o}] =
            wid(B.e_at(a.A0, b.A0, t.f), B.e_at(a.A1, b.A1, t.fp),
                P.c1(u, v, u, P.star1(u, v, o), o));
        P.unit2[{u, v, o}] =
            wid(B.i_at(a.A0, b.A0, t.f), B.i_at(a.A1, b.A1, t.fp), P.unit_at(v));
      }
    }
  require_ok(validate_bigroupoid(P), "path_object(total)");

  // R: constant squares
  {
    std::map<Id, Id> zm;
    std::map<std::pair<Id, Id>, GroupoidFunctor> loc;
    for (const auto& A0 : B.zero_cells) zm[A0] = pair_id(pair_id(A0, A0), B.unit_at(A0));
    for (const auto& A0 : B.zero_cells)
      for (const auto& A1 : B.zero_cells) {
        GroupoidFunctor f;
        f.source = B.H(A0, A1);
        f.target = P.H(zm[A0], zm[A1]);
        for (const auto& g : B.H(A0, A1).objects) {
          Id phi = B.v(A0, A1, B.H(A0, A1).inv(B.l_at(A0, A1, g)), B.r_at(A0, A1, g));
          f.object_map[g] = pair_id(g, pair_id(phi, g));
        }
        for (const auto& ar : B.H(A0, A1).arrows)
          f.arrow_map[ar.id] = wid(ar.id, ar.id, f.object_map.at(ar.src));
        loc[{A0, A1}] = std::move(f);
      }
    out.R = make_strict(B, P, std::move(zm), std::move(loc));
  }

  out.prod = product_bigroupoid(B, B);
  {
    std::map<Id, Id> zm;
    std::map<std::pair<Id, Id>, GroupoidFunctor> loc;
    for (const auto& u : P.zero_cells) zm[u] = pair_id(zd[u].A0, zd[u].A1);
    for (const auto& u : P.zero_cells)
      for (const auto& v : P.zero_cells) {
        GroupoidFunctor f;
        f.source = P.H(u, v);
        f.target = out.prod.product.H(zm[u], zm[v]);
        for (const auto& o : P.H(u, v).objects) {
          const Trip& t = trip[{u, v, o}];
          f.object_map[o] = pair_id(t.f, t.fp);
        }
        for (const auto& ar : P.H(u, v).arrows) {
          const TwoC& c = two[{u, v, ar.id}];
          f.arrow_map[ar.id] = pair_id(c.al, c.alp);
        }
        loc[{u, v}] = std::move(f);
      }
    out.st = make_strict(P, out.prod.product, std::move(zm), std::move(loc));
  }
  out.S = compose_pseudofunctors(out.prod.proj1, out.st);
  out.T = compose_pseudofunctors(out.prod.proj2, out.st);

  require_ok(validate_pseudofunctor(out.R), "path_object(R)");
  require_ok(validate_pseudofunctor(out.st), "path_object(<S,T>)");
  return out;
}

std::pair<Pseudofunctor, Pseudofunctor> split_trivcofib(const Pseudofunctor& K) {
  if (!classify(K).is_trivial_cofibration)
    throw PreconditionError("split_trivcofib: not a trivial cofibration");
  const FiniteBigroupoid& C = K.target;

  std::vector<Id> img;
  for (const auto& x : K.source.zero_cells) img.push_back(K.on0(x));
  img = sorted_ids(img);
  img.erase(std::unique(img.begin(), img.end()), img.end());

  FiniteBigroupoid M;
  M.zero_cells = img;
  for (const auto& u : img)
    for (const auto& v : img) M.hom[{u, v}] = C.H(u, v);
  for (const auto& u : img)
    for (const auto& v : img)
      for (const auto& w : img) M.comp[{u, v, w}] = C.C(u, v, w);
  for (const auto& u : img) M.unit[u] = C.unit_at(u);
  for (const auto& u : img)
    for (const auto& v : img) M.inv[{u, v}] = C.I(u, v);
  for (const auto& u : img)
    for (const auto& v : img)
      for (const auto& w : img)
        for (const auto& z : img)
          for (const auto& f : C.H(u, v).objects)
            for (const auto& g : C.H(v, w).objects)
              for (const auto& h : C.H(w, z).objects)
                M.assoc[{u, v, w, z, h, g, f}] = C.a_at(u, v, w, z, h, g, f);
  for (const auto& u : img)
    for (const auto& v : img)
      for (const auto& f : C.H(u, v).objects) {
        M.lunit[{u, v, f}] = C.l_at(u, v, f);
        M.runit[{u, v, f}] = C.r_at(u, v, f);
        M.counit[{u, v, f}] = C.e_at(u, v, f);
        M.unit2[{u, v, f}] = C.i_at(u, v, f);
      }
  require_ok(validate_bigroupoid(M), "split_trivcofib(middle)");

  Pseudofunctor G = K;
  G.target = M;  // the local functors and phi tables land in the sub-homs

  std::map<Id, Id> zm;
  std::map<std::pair<Id, Id>, GroupoidFunctor> loc;
  for (const auto& u : img) zm[u] = u;
  for (const auto& u : img)
    for (const auto& v : img) loc[{u, v}] = identity_functor(C.H(u, v));
  Pseudofunctor H = make_strict(M, C, std::move(zm), std::move(loc));

  require_ok(validate_pseudofunctor(G), "split_trivcofib(first)");
  if (!(compose_pseudofunctors(H, G) == K))
    throw ConstructionError("split_trivcofib: legs do not compose to the input");
  return {G, H};
}

namespace {

// Lemma-level lift for a 0-surjective trivial cofibration on the left and a
// strict fibration on the right.
Pseudofunctor surlift(const Pseudofunctor& N, const Pseudofunctor& G1,
                      const Pseudofunctor& P, const Pseudofunctor& H1) {
  if (!(compose_pseudofunctors(P, N) == compose_pseudofunctors(H1, G1)))
    throw ConstructionError("surlift: square does not commute as data");
  const FiniteBigroupoid& A = N.source;
  const FiniteBigroupoid& M = G1.target;
  const FiniteBigroupoid& E = N.target;

  std::map<Id, Id> k0inv;
  for (const auto& x : A.zero_cells) k0inv[G1.on0(x)] = x;
  if (k0inv.size() != M.zero_cells.size() || k0inv.size() != A.zero_cells.size())
    throw ConstructionError("surlift: left map is not bijective on 0-cells");

  Pseudofunctor L;
  L.source = M;
  L.target = E;
  for (const auto& m : M.zero_cells) L.zero_map[m] = N.on0(k0inv.at(m));
  for (const auto& m : M.zero_cells)
    for (const auto& mp : M.zero_cells) {
      Id a = k0inv.at(m), ap = k0inv.at(mp);
      GpdSquare s{N.L(a, ap), G1.L(a, ap), P.L(L.zero_map[m], L.zero_map[mp]),
                  H1.L(m, mp)};
      L.local[{m, mp}] = gpd_lift(s, GpdWfs::trivcof_fib);
    }

  for (const auto& m : M.zero_cells)
    for (const auto& mp : M.zero_cells)
      for (const auto& mpp : M.zero_cells) {
        Id a = k0inv.at(m), ap = k0inv.at(mp), app = k0inv.at(mpp);
        Id Lm = L.zero_map[m], Lmp = L.zero_map[mp], Lmpp = L.zero_map[mpp];
        GroupoidFunctor Gfun = product_functor(G1.L(ap, app), G1.L(a, ap));
        GroupoidFunctor Hrole = compose_functors(
            E.C(Lm, Lmp, Lmpp), product_functor(L.local[{mp, mpp}], L.local[{m, mp}]));
        GroupoidFunctor Krole = compose_functors(L.local[{m, mpp}], M.C(m, mp, mpp));
        NatIso al;
        al.source = compose_functors(Hrole, Gfun);
        al.target = compose_functors(Krole, Gfun);
        for (const auto& w : A.H(ap, app).objects)
          for (const auto& z : A.H(a, ap).objects)
            al.components[pair_id(w, z)] =
                E.v(Lm, Lmpp,
                    L.local[{m, mpp}].on_arr(
                        M.H(m, mpp).inv(G1.pc(a, ap, app, w, z))),
                    N.pc(a, ap, app, w, z));
        NatIso be = transport_pre(Gfun, Hrole, Krole, al);
        for (const auto& vv : M.H(mp, mpp).objects)
          for (const auto& uu : M.H(m, mp).objects)
            L.phi_comp[{m, mp, mpp, vv, uu}] = be.at(pair_id(vv, uu));
      }
  for (const auto& m : M.zero_cells) {
    Id a = k0inv.at(m);
    Id Lm = L.zero_map[m];
    L.phi_unit[m] =
        E.v(Lm, Lm, L.local[{m, m}].on_arr(M.H(m, m).inv(G1.pu(a))), N.pu(a));
  }
  for (const auto& m : M.zero_cells)
    for (const auto& mp : M.zero_cells) {
      Id a = k0inv.at(m), ap = k0inv.at(mp);
      Id Lm = L.zero_map[m], Lmp = L.zero_map[mp];
      GroupoidFunctor Hrole = compose_functors(E.I(Lm, Lmp), L.local[{m, mp}]);
      GroupoidFunctor Krole = compose_functors(L.local[{mp, m}], M.I(m, mp));
      NatIso al;
      al.source = compose_functors(Hrole, G1.L(a, ap));
      al.target = compose_functors(Krole, G1.L(a, ap));
      for (const auto& z : A.H(a, ap).objects)
        al.components[z] =
            E.v(Lmp, Lm,
                L.local[{mp, m}].on_arr(M.H(mp, m).inv(G1.pi(a, ap, z))),
                N.pi(a, ap, z));
      NatIso be = transport_pre(G1.L(a, ap), Hrole, Krole, al);
      for (const auto& uu : M.H(m, mp).objects) L.phi_inv[{m, mp, uu}] = be.at(uu);
    }

  require_ok(validate_pseudofunctor(L), "surlift");
  if (!(compose_pseudofunctors(L, G1) == N))
    throw ConstructionError("surlift: upper triangle broken");
  if (!(compose_pseudofunctors(P, L) == H1))
    throw ConstructionError("surlift: lower triangle broken");
  return L;
}

// Lemma-level lift against the identity for a strict inclusion of the full
// sub-bigroupoid on a weakly dense set of 0-cells.
Pseudofunctor isolift(const Pseudofunctor& L1, const Pseudofunctor& H1,
                      const Pseudofunctor& P) {
  const FiniteBigroupoid& M = H1.source;
  const FiniteBigroupoid& Bb = H1.target;
  const FiniteBigroupoid& E = P.source;
  if (!P.is_strict() || !H1.is_strict())
    throw ConstructionError("isolift: legs must be strict");
  if (!(compose_pseudofunctors(P, L1) == H1))
    throw ConstructionError("isolift: square does not commute as data");

  auto in_img = [&](const Id& Cc) { return M.has_zero(Cc); };
  // conjugate a pasting by the chosen 1-cells, skipping image endpoints so
  // no unit edges enter the word
  auto conj1 = [&](Term t, const Id& Csrc, const Id& Ctgt, const Term& tsrc,
                   const Term& ttgt) {
    Term r = std::move(t);
    if (!in_img(Csrc)) r = comp(r, star(tsrc));
    if (!in_img(Ctgt)) r = comp(ttgt, r);
    return r;
  };

  // stage 1: retract the 0-cells onto the image along chosen 1-cells
  std::map<Id, Id> TC, pC;
  std::vector<Id> msorted = sorted_ids(M.zero_cells);
  for (const auto& Cc : Bb.zero_cells) {
    if (in_img(Cc)) {
      TC[Cc] = Cc;
      pC[Cc] = Bb.unit_at(Cc);
      continue;
    }
    bool found = false;
    for (const auto& Am : msorted) {
      auto objs = sorted_ids(Bb.H(Cc, Am).objects);
      if (objs.empty()) continue;
      TC[Cc] = Am;
      pC[Cc] = objs.front();
      found = true;
      break;
    }
    if (!found) throw ConstructionError("isolift: no 1-cell into the image at " + Cc);
  }
  std::map<std::pair<Id, Id>, GroupoidFunctor> Pf;
  for (const auto& Cc : Bb.zero_cells)
    for (const auto& Cp : Bb.zero_cells) {
      if (in_img(Cc) && in_img(Cp)) {
        Pf[{Cc, Cp}] = identity_functor(Bb.H(Cc, Cp));
        continue;
      }
      GroupoidFunctor f;
      f.source = Bb.H(Cc, Cp);
      f.target = Bb.H(TC[Cc], TC[Cp]);
      Id ps = Bb.star1(Cc, TC[Cc], pC[Cc]);
      for (const auto& x : f.source.objects) {
        Id r = x;
        if (!in_img(Cc)) r = Bb.c1(TC[Cc], Cc, Cp, r, ps);
        if (!in_img(Cp)) r = Bb.c1(TC[Cc], Cp, TC[Cp], pC[Cp], r);
        f.object_map[x] = r;
      }
      for (const auto& ar : f.source.arrows) {
        Id r = ar.id;
        if (!in_img(Cc)) r = Bb.wr(TC[Cc], Cc, Cp, r, ps);
        if (!in_img(Cp)) r = Bb.wl(TC[Cc], Cp, TC[Cp], pC[Cp], r);
        f.arrow_map[ar.id] = r;
      }
      Pf[{Cc, Cp}] = std::move(f);
    }

  Pseudofunctor T;
  T.source = Bb;
  T.target = M;
  T.zero_map = TC;
  for (const auto& Cc : Bb.zero_cells)
    for (const auto& Cp : Bb.zero_cells) {
      GroupoidFunctor f = Pf[{Cc, Cp}];
      f.target = M.H(TC[Cc], TC[Cp]);
      T.local[{Cc, Cp}] = std::move(f);
    }
  for (const auto& Cc : Bb.zero_cells)
    for (const auto& Cp : Bb.zero_cells)
      for (const auto& Cpp : Bb.zero_cells)
        for (const auto& x : Bb.H(Cc, Cp).objects)
          for (const auto& y : Bb.H(Cp, Cpp).objects) {
            Scratch sc{Bb};
            Term tx = sc.cell(x, Cc, Cp);
            Term ty = sc.cell(y, Cp, Cpp);
            Term tp = sc.cell(pC[Cc], Cc, TC[Cc]);
            Term tpp = sc.cell(pC[Cp], Cp, TC[Cp]);
            Term tppp = sc.cell(pC[Cpp], Cpp, TC[Cpp]);
            Term Px = conj1(tx, Cc, Cp, tp, tpp);
            Term Py = conj1(ty, Cp, Cpp, tpp, tppp);
            Term Pyx = conj1(comp(ty, tx), Cc, Cpp, tp, tppp);
            T.phi_comp[{Cc, Cp, Cpp, y, x}] = sc.cano(comp(Py, Px), Pyx);
          }
  for (const auto& Cc : Bb.zero_cells) {
    Scratch sc{Bb};
    sc.node(Cc);
    Term tp = sc.cell(pC[Cc], Cc, TC[Cc]);
    Term P1 = in_img(Cc) ? unit(Cc) : comp(tp, comp(unit(Cc), star(tp)));
    T.phi_unit[Cc] = sc.cano(unit(TC[Cc]), P1);
  }
  for (const auto& Cc : Bb.zero_cells)
    for (const auto& Cp : Bb.zero_cells)
      for (const auto& x : Bb.H(Cc, Cp).objects) {
        Scratch sc{Bb};
        Term tx = sc.cell(x, Cc, Cp);
        Term tp = sc.cell(pC[Cc], Cc, TC[Cc]);
        Term tpp = sc.cell(pC[Cp], Cp, TC[Cp]);
        Term Px = conj1(tx, Cc, Cp, tp, tpp);
        Term Pxs = conj1(star(tx), Cp, Cc, tpp, tp);
        T.phi_inv[{Cc, Cp, x}] = sc.cano(star(Px), Pxs);
      }
  Pseudofunctor L1c = compose_pseudofunctors(L1, T);

  // stage 2: move each chosen 1-cell upstairs through the fibration
  std::map<Id, Id> eC, qC;
  for (const auto& Cc : Bb.zero_cells) {
    Id top = L1c.on0(Cc);
    if (in_img(Cc)) {
      eC[Cc] = top;
      qC[Cc] = E.unit_at(top);
      continue;
    }
    bool found = false;
    for (const auto& e : sorted_ids(E.zero_cells)) {
      if (P.on0(e) != Cc) continue;
      for (const auto& q : sorted_ids(E.H(e, top).objects)) {
        if (P.on1(e, top, q) != pC[Cc]) continue;
        eC[Cc] = e;
        qC[Cc] = q;
        found = true;
        break;
      }
      if (found) break;
    }
    if (!found) throw ConstructionError("isolift: no fibration lift of p at " + Cc);
  }
  std::map<std::pair<Id, Id>, GroupoidFunctor> Qf;
  for (const auto& Cc : Bb.zero_cells)
    for (const auto& Cp : Bb.zero_cells) {
      Id t0 = L1c.on0(Cc), t1 = L1c.on0(Cp);
      if (in_img(Cc) && in_img(Cp)) {
        Qf[{Cc, Cp}] = identity_functor(E.H(t0, t1));
        continue;
      }
      GroupoidFunctor f;
      f.source = E.H(t0, t1);
      f.target = E.H(eC[Cc], eC[Cp]);
      Id qs = E.star1(eC[Cp], t1, qC[Cp]);
      for (const auto& x : f.source.objects) {
        Id r = x;
        if (!in_img(Cc)) r = E.c1(eC[Cc], t0, t1, r, qC[Cc]);
        if (!in_img(Cp)) r = E.c1(eC[Cc], t1, eC[Cp], qs, r);
        f.object_map[x] = r;
      }
      for (const auto& ar : f.source.arrows) {
        Id r = ar.id;
        if (!in_img(Cc)) r = E.wr(eC[Cc], t0, t1, r, qC[Cc]);
        if (!in_img(Cp)) r = E.wl(eC[Cc], t1, eC[Cp], qs, r);
        f.arrow_map[ar.id] = r;
      }
      Qf[{Cc, Cp}] = std::move(f);
    }

  auto conjQ = [&](Term t, const Id& Csrc, const Id& Ctgt, const Term& qsrc,
                   const Term& qtgt) {
    Term r = std::move(t);
    if (!in_img(Csrc)) r = comp(r, qsrc);
    if (!in_img(Ctgt)) r = comp(star(qtgt), r);
    return r;
  };

  std::map<std::pair<Id, Id>, GroupoidFunctor> L2loc;
  for (const auto& Cc : Bb.zero_cells)
    for (const auto& Cp : Bb.zero_cells)
      L2loc[{Cc, Cp}] = compose_functors(Qf[{Cc, Cp}], L1c.L(Cc, Cp));

  std::map<PhiCompKey, Id> lam2c;
  std::map<Id, Id> lam2u;
  std::map<CellKey, Id> lam2i;
  for (const auto& Cc : Bb.zero_cells)
    for (const auto& Cp : Bb.zero_cells)
      for (const auto& Cpp : Bb.zero_cells)
        for (const auto& x : Bb.H(Cc, Cp).objects)
          for (const auto& y : Bb.H(Cp, Cpp).objects) {
            Scratch sc{E};
            Term tlx = sc.cell(L1c.on1(Cc, Cp, x), L1c.on0(Cc), L1c.on0(Cp));
            Term tly = sc.cell(L1c.on1(Cp, Cpp, y), L1c.on0(Cp), L1c.on0(Cpp));
            Term tq = sc.cell(qC[Cc], eC[Cc], L1c.on0(Cc));
            Term tqp = sc.cell(qC[Cp], eC[Cp], L1c.on0(Cp));
            Term tqpp = sc.cell(qC[Cpp], eC[Cpp], L1c.on0(Cpp));
            Term Qx = conjQ(tlx, Cc, Cp, tq, tqp);
            Term Qy = conjQ(tly, Cp, Cpp, tqp, tqpp);
            Term Qyx = conjQ(comp(tly, tlx), Cc, Cpp, tq, tqpp);
            Id yy = sc.cano(comp(Qy, Qx), Qyx);
            lam2c[{Cc, Cp, Cpp, y, x}] =
                E.v(eC[Cc], eC[Cpp],
                    Qf[{Cc, Cpp}].on_arr(L1c.pc(Cc, Cp, Cpp, y, x)), yy);
          }
  for (const auto& Cc : Bb.zero_cells) {
    Scratch sc{E};
    Id top = L1c.on0(Cc);
    sc.node(eC[Cc]);
    Term tq = sc.cell(qC[Cc], eC[Cc], top);
    Term Q1 = in_img(Cc) ? unit(eC[Cc]) : comp(star(tq), comp(unit(top), tq));
    Id yy = sc.cano(unit(eC[Cc]), Q1);
    lam2u[Cc] = E.v(eC[Cc], eC[Cc], Qf[{Cc, Cc}].on_arr(L1c.pu(Cc)), yy);
  }
  for (const auto& Cc : Bb.zero_cells)
    for (const auto& Cp : Bb.zero_cells)
      for (const auto& x : Bb.H(Cc, Cp).objects) {
        Scratch sc{E};
        Term tlx = sc.cell(L1c.on1(Cc, Cp, x), L1c.on0(Cc), L1c.on0(Cp));
        Term tq = sc.cell(qC[Cc], eC[Cc], L1c.on0(Cc));
        Term tqp = sc.cell(qC[Cp], eC[Cp], L1c.on0(Cp));
        Term Qx = conjQ(tlx, Cc, Cp, tq, tqp);
        Term Qxs = conjQ(star(tlx), Cp, Cc, tqp, tq);
        Id yy = sc.cano(star(Qx), Qxs);
        lam2i[{Cc, Cp, x}] =
            E.v(eC[Cp], eC[Cc], Qf[{Cp, Cc}].on_arr(L1c.pi(Cc, Cp, x)), yy);
      }

  // stage 3: straighten each hom with the canonical comparison to the identity
  std::map<std::pair<Id, Id>, GroupoidFunctor> Floc;
  std::map<std::pair<Id, Id>, NatIso> alph;
  for (const auto& Cc : Bb.zero_cells)
    for (const auto& Cp : Bb.zero_cells) {
      if (in_img(Cc) && in_img(Cp)) {
        Floc[{Cc, Cp}] = L2loc[{Cc, Cp}];
        alph[{Cc, Cp}] = identity_nat_iso(L2loc[{Cc, Cp}]);
        continue;
      }
      GroupoidFunctor Rf;
      Rf.source = Bb.H(TC[Cc], TC[Cp]);
      Rf.target = Bb.H(Cc, Cp);
      Id psp = Bb.star1(Cp, TC[Cp], pC[Cp]);
      for (const auto& z : Rf.source.objects) {
        Id r = z;
        if (!in_img(Cc)) r = Bb.c1(Cc, TC[Cc], TC[Cp], r, pC[Cc]);
        if (!in_img(Cp)) r = Bb.c1(Cc, TC[Cp], Cp, psp, r);
        Rf.object_map[z] = r;
      }
      for (const auto& ar : Rf.source.arrows) {
        Id r = ar.id;
        if (!in_img(Cc)) r = Bb.wr(Cc, TC[Cc], TC[Cp], r, pC[Cc]);
        if (!in_img(Cp)) r = Bb.wl(Cc, TC[Cp], Cp, psp, r);
        Rf.arrow_map[ar.id] = r;
      }
      if (!(compose_functors(P.L(eC[Cc], eC[Cp]), L2loc[{Cc, Cp}]) ==
            compose_functors(Rf, Pf[{Cc, Cp}])))
        throw ConstructionError("isolift: downstairs conjugations disagree");

      NatIso zeta;
      zeta.source = identity_functor(Bb.H(Cc, Cp));
      zeta.target = compose_functors(P.L(eC[Cc], eC[Cp]), L2loc[{Cc, Cp}]);
      for (const auto& x : Bb.H(Cc, Cp).objects) {
        Scratch sc{Bb};
        Term tx = sc.cell(x, Cc, Cp);
        Term tp = sc.cell(pC[Cc], Cc, TC[Cc]);
        Term tpp = sc.cell(pC[Cp], Cp, TC[Cp]);
        Term r = conj1(tx, Cc, Cp, tp, tpp);
        if (!in_img(Cc)) r = comp(r, tp);
        if (!in_img(Cp)) r = comp(star(tpp), r);
        zeta.components[x] = sc.cano(tx, r);
      }
      auto [Fp, al] = fibration_lift_up_to_iso(
          L2loc[{Cc, Cp}], identity_functor(Bb.H(Cc, Cp)), P.L(eC[Cc], eC[Cp]), zeta);
      Fp.source = Bb.H(Cc, Cp);
      Fp.target = E.H(eC[Cc], eC[Cp]);
      Floc[{Cc, Cp}] = std::move(Fp);
      alph[{Cc, Cp}] = std::move(al);
    }

  Pseudofunctor L2;
  L2.source = Bb;
  L2.target = E;
  L2.zero_map = eC;
  L2.local = Floc;
  for (const auto& Cc : Bb.zero_cells)
    for (const auto& Cp : Bb.zero_cells)
      for (const auto& Cpp : Bb.zero_cells)
        for (const auto& x : Bb.H(Cc, Cp).objects)
          for (const auto& y : Bb.H(Cp, Cpp).objects) {
            Id yx = Bb.c1(Cc, Cp, Cpp, y, x);
            L2.phi_comp[{Cc, Cp, Cpp, y, x}] =
                E.v(eC[Cc], eC[Cpp],
                    E.H(eC[Cc], eC[Cpp]).inv(alph[{Cc, Cpp}].at(yx)),
                    E.v(eC[Cc], eC[Cpp], lam2c.at({Cc, Cp, Cpp, y, x}),
                        E.c2(eC[Cc], eC[Cp], eC[Cpp], alph[{Cp, Cpp}].at(y),
                             alph[{Cc, Cp}].at(x))));
          }
  for (const auto& Cc : Bb.zero_cells)
    L2.phi_unit[Cc] =
        E.v(eC[Cc], eC[Cc],
            E.H(eC[Cc], eC[Cc]).inv(alph[{Cc, Cc}].at(Bb.unit_at(Cc))), lam2u.at(Cc));
  for (const auto& Cc : Bb.zero_cells)
    for (const auto& Cp : Bb.zero_cells)
      for (const auto& x : Bb.H(Cc, Cp).objects) {
        Id xs = Bb.star1(Cc, Cp, x);
        L2.phi_inv[{Cc, Cp, x}] =
            E.v(eC[Cp], eC[Cc], E.H(eC[Cp], eC[Cc]).inv(alph[{Cp, Cc}].at(xs)),
                E.v(eC[Cp], eC[Cc], lam2i.at({Cc, Cp, x}),
                    E.star2(eC[Cc], eC[Cp], alph[{Cc, Cp}].at(x))));
      }

  require_ok(validate_pseudofunctor(L2), "isolift");
  if (!(compose_pseudofunctors(L2, H1) == L1))
    throw ConstructionError("isolift: upper triangle broken");
  if (!(compose_pseudofunctors(P, L2) == identity_pseudofunctor(Bb)))
    throw ConstructionError("isolift: lower triangle broken");
  return L2;
}

}  // namespace

Pseudofunctor lift_trivcof_fib(const LiftingSquare& sq) {
  require_square_data(sq, "lift_trivcof_fib");
  if (!classify(sq.left).is_trivial_cofibration)
    throw PreconditionError("lift_trivcof_fib: left map is not a trivial cofibration");
  if (!classify(sq.right).is_fibration)
    throw PreconditionError("lift_trivcof_fib: right map is not a fibration");

  PullbackResult pb = pullback_fibration(sq.right, sq.bottom);
  Pseudofunctor N = mediate(pb, sq.left, sq.top);
  auto [G1, H1] = split_trivcofib(sq.left);
  Pseudofunctor L1 = surlift(N, G1, pb.P, H1);
  Pseudofunctor L2 = isolift(L1, H1, pb.P);
  Pseudofunctor L = compose_pseudofunctors(pb.R, L2);

  require_ok(validate_pseudofunctor(L), "lift_trivcof_fib");
  if (!(compose_pseudofunctors(L, sq.left) == sq.top))
    throw ConstructionError("lift_trivcof_fib: upper triangle broken");
  if (!(compose_pseudofunctors(sq.right, L) == sq.bottom))
    throw ConstructionError("lift_trivcof_fib: lower triangle broken");
  return L;
}

Factorization factor_trivcof_fib(const Pseudofunctor& F) {
  PathObjectResult po = path_object(F.target);
  PullbackResult pb = pullback_fibration(po.S, F);
  Pseudofunctor G =
      mediate(pb, identity_pseudofunctor(F.source), compose_pseudofunctors(po.R, F));
  Pseudofunctor H = compose_pseudofunctors(po.T, pb.R);

  if (!(compose_pseudofunctors(H, G) == F))
    throw ConstructionError("factor_trivcof_fib: legs do not compose to the input");
  require_ok(validate_pseudofunctor(H), "factor_trivcof_fib(second)");

  Factorization out;
  out.middle = pb.A;
  out.first = std::move(G);
  out.second = std::move(H);
  out.first_flags = classify(out.first);
  out.second_flags = classify(out.second);
  if (!out.first_flags.is_trivial_cofibration || !out.second_flags.is_fibration)
    throw ConstructionError("factor_trivcof_fib: legs land outside their classes");
  return out;
}

}  // namespace bgm
