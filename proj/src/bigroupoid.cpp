#include "bgm/bigroupoid.hpp"

#include <algorithm>

namespace bgm {

bool FiniteBigroupoid::has_zero(const Id& A) const {
  return std::find(zero_cells.begin(), zero_cells.end(), A) != zero_cells.end();
}

const FiniteGroupoid& FiniteBigroupoid::H(const Id& A, const Id& B) const {
  auto it = hom.find({A, B});
  if (it == hom.end()) throw StructuralError("missing hom(" + A + ", " + B + ")");
  return it->second;
}

const GroupoidFunctor& FiniteBigroupoid::C(const Id& A, const Id& B, const Id& Cc) const {
  auto it = comp.find({A, B, Cc});
  if (it == comp.end())
    throw StructuralError("missing comp(" + A + ", " + B + ", " + Cc + ")");
  return it->second;
}

const GroupoidFunctor& FiniteBigroupoid::I(const Id& A, const Id& B) const {
  auto it = inv.find({A, B});
  if (it == inv.end()) throw StructuralError("missing inv(" + A + ", " + B + ")");
  return it->second;
}

Id FiniteBigroupoid::unit_at(const Id& A) const {
  auto it = unit.find(A);
  if (it == unit.end()) throw StructuralError("missing unit at " + A);
  return it->second;
}

Id FiniteBigroupoid::c1(const Id& A, const Id& B, const Id& Cc, const Id& g, const Id& f) const {
  return C(A, B, Cc).on_obj(pair_id(g, f));
}

Id FiniteBigroupoid::c2(const Id& A, const Id& B, const Id& Cc, const Id& beta,
                        const Id& alpha) const {
  return C(A, B, Cc).on_arr(pair_id(beta, alpha));
}

Id FiniteBigroupoid::wl(const Id& A, const Id& B, const Id& Cc, const Id& g,
                        const Id& alpha) const {
  return c2(A, B, Cc, H(B, Cc).id_at(g), alpha);
}

Id FiniteBigroupoid::wr(const Id& A, const Id& B, const Id& Cc, const Id& beta,
                        const Id& f) const {
  return c2(A, B, Cc, beta, H(A, B).id_at(f));
}

Id FiniteBigroupoid::v(const Id& A, const Id& B, const Id& after, const Id& before) const {
  return H(A, B).comp(after, before);
}

Id FiniteBigroupoid::star1(const Id& A, const Id& B, const Id& f) const {
  return I(A, B).on_obj(f);
}

Id FiniteBigroupoid::star2(const Id& A, const Id& B, const Id& alpha) const {
  return I(A, B).on_arr(alpha);
}

Id FiniteBigroupoid::a_at(const Id& A, const Id& B, const Id& Cc, const Id& D,
                          const Id& h, const Id& g, const Id& f) const {
  auto it = assoc.find({A, B, Cc, D, h, g, f});
  if (it == assoc.end())
    throw StructuralError("missing assoc component at (" + h + ", " + g + ", " + f + ")");
  return it->second;
}

Id FiniteBigroupoid::l_at(const Id& A, const Id& B, const Id& f) const {
  auto it = lunit.find({A, B, f});
  if (it == lunit.end()) throw StructuralError("missing lunit at " + f);
  return it->second;
}

Id FiniteBigroupoid::r_at(const Id& A, const Id& B, const Id& f) const {
  auto it = runit.find({A, B, f});
  if (it == runit.end()) throw StructuralError("missing runit at " + f);
  return it->second;
}

Id FiniteBigroupoid::e_at(const Id& A, const Id& B, const Id& f) const {
  auto it = counit.find({A, B, f});
  if (it == counit.end()) throw StructuralError("missing counit at " + f);
  return it->second;
}

Id FiniteBigroupoid::i_at(const Id& A, const Id& B, const Id& f) const {
  auto it = unit2.find({A, B, f});
  if (it == unit2.end()) throw StructuralError("missing unit2 at " + f);
  return it->second;
}

namespace {

// endpoints of a 2-cell, as arrow of its hom groupoid
struct Two {
  Id src, tgt;
};

Two arr2(const FiniteGroupoid& G, const Id& a) {
  const Arrow& ar = G.arrow(a);
  return {ar.src, ar.tgt};
}

}  // namespace

ValidationReport validate_bigroupoid(const FiniteBigroupoid& B) {
  ValidationReport rep;

  // each hom is a groupoid
  for (const auto& A : B.zero_cells)
    for (const auto& Bb : B.zero_cells)
      rep.merge(validate_groupoid(B.H(A, Bb)), "hom(" + A + "," + Bb + ")/");

  // comp and inv are functors with the prescribed boundaries
  for (const auto& A : B.zero_cells)
    for (const auto& Bb : B.zero_cells)
      for (const auto& Cc : B.zero_cells) {
        const GroupoidFunctor& F = B.C(A, Bb, Cc);
        if (!(F.source == product_groupoid(B.H(Bb, Cc), B.H(A, Bb))))
          throw StructuralError("comp functor has wrong source at (" + A + "," + Bb + "," + Cc + ")");
        if (!(F.target == B.H(A, Cc)))
          throw StructuralError("comp functor has wrong target at (" + A + "," + Bb + "," + Cc + ")");
        rep.merge(validate_functor(F), "comp(" + A + "," + Bb + "," + Cc + ")/");
      }
  for (const auto& A : B.zero_cells)
    for (const auto& Bb : B.zero_cells) {
      const GroupoidFunctor& F = B.I(A, Bb);
      if (!(F.source == B.H(A, Bb)) || !(F.target == B.H(Bb, A)))
        throw StructuralError("inv functor has wrong boundary at (" + A + "," + Bb + ")");
      rep.merge(validate_functor(F), "inv(" + A + "," + Bb + ")/");
    }
  for (const auto& A : B.zero_cells)
    if (!B.H(A, A).has_object(B.unit_at(A)))
      throw StructuralError("unit at " + A + " is not an object of hom(" + A + "," + A + ")");
  if (!rep.ok()) return rep;  // structure first; axioms assume functoriality

  // component endpoints + invertibility (groupoid arrows are invertible; check endpoints)
  for (const auto& [k, cell] : B.assoc) {
    const auto& [A, Bb, Cc, D, h, g, f] = k;
    Two t = arr2(B.H(A, D), cell);
    Id lhs = B.c1(A, Bb, D, B.c1(Bb, Cc, D, h, g), f);
    Id rhs = B.c1(A, Cc, D, h, B.c1(A, Bb, Cc, g, f));
    if (t.src != lhs || t.tgt != rhs) rep.add("assoc-endpoints", {A, Bb, Cc, D, h, g, f});
  }
  for (const auto& [k, cell] : B.lunit) {
    const auto& [A, Bb, f] = k;
    Two t = arr2(B.H(A, Bb), cell);
    if (t.src != B.c1(A, Bb, Bb, B.unit_at(Bb), f) || t.tgt != f)
      rep.add("lunit-endpoints", {A, Bb, f});
  }
  for (const auto& [k, cell] : B.runit) {
    const auto& [A, Bb, f] = k;
    Two t = arr2(B.H(A, Bb), cell);
    if (t.src != B.c1(A, A, Bb, f, B.unit_at(A)) || t.tgt != f)
      rep.add("runit-endpoints", {A, Bb, f});
  }
  for (const auto& [k, cell] : B.counit) {
    const auto& [A, Bb, f] = k;
    Two t = arr2(B.H(A, A), cell);
    if (t.src != B.c1(A, Bb, A, B.star1(A, Bb, f), f) || t.tgt != B.unit_at(A))
      rep.add("counit-endpoints", {A, Bb, f});
  }
  for (const auto& [k, cell] : B.unit2) {
    const auto& [A, Bb, f] = k;
    Two t = arr2(B.H(Bb, Bb), cell);
    if (t.src != B.unit_at(Bb) || t.tgt != B.c1(Bb, A, Bb, f, B.star1(A, Bb, f)))
      rep.add("unit2-endpoints", {A, Bb, f});
  }

  // totality of the component tables
  for (const auto& A : B.zero_cells)
    for (const auto& Bb : B.zero_cells)
      for (const auto& f : B.H(A, Bb).objects) {
        if (!B.lunit.count({A, Bb, f})) throw StructuralError("missing lunit at " + f);
        if (!B.runit.count({A, Bb, f})) throw StructuralError("missing runit at " + f);
        if (!B.counit.count({A, Bb, f})) throw StructuralError("missing counit at " + f);
        if (!B.unit2.count({A, Bb, f})) throw StructuralError("missing unit2 at " + f);
      }
  for (const auto& A : B.zero_cells)
    for (const auto& Bb : B.zero_cells)
      for (const auto& Cc : B.zero_cells)
        for (const auto& D : B.zero_cells)
          for (const auto& f : B.H(A, Bb).objects)
            for (const auto& g : B.H(Bb, Cc).objects)
              for (const auto& h : B.H(Cc, D).objects)
                if (!B.assoc.count({A, Bb, Cc, D, h, g, f}))
                  throw StructuralError("missing assoc at (" + h + ", " + g + ", " + f + ")");
  if (!rep.ok()) return rep;

  // naturality of a: for 2-cells gamma: h->h', beta: g->g', alpha: f->f',
  //   a_{h',g',f'} . ((gamma beta) alpha) = (gamma (beta alpha)) . a_{h,g,f}
  for (const auto& A : B.zero_cells)
    for (const auto& Bb : B.zero_cells)
      for (const auto& Cc : B.zero_cells)
        for (const auto& D : B.zero_cells)
          for (const auto& al : B.H(A, Bb).arrows)
            for (const auto& be : B.H(Bb, Cc).arrows)
              for (const auto& ga : B.H(Cc, D).arrows) {
                Id left = B.v(A, D,
                              B.a_at(A, Bb, Cc, D, ga.tgt, be.tgt, al.tgt),
                              B.c2(A, Bb, D, B.c2(Bb, Cc, D, ga.id, be.id), al.id));
                Id right = B.v(A, D,
                               B.c2(A, Cc, D, ga.id, B.c2(A, Bb, Cc, be.id, al.id)),
                               B.a_at(A, Bb, Cc, D, ga.src, be.src, al.src));
                if (left != right)
                  rep.add("assoc-naturality", {ga.id, be.id, al.id});
              }

  // naturality of l, r, e, i
  for (const auto& A : B.zero_cells)
    for (const auto& Bb : B.zero_cells)
      for (const auto& al : B.H(A, Bb).arrows) {
        Id lf = B.l_at(A, Bb, al.src), lf2 = B.l_at(A, Bb, al.tgt);
        if (B.v(A, Bb, lf2, B.wl(A, Bb, Bb, B.unit_at(Bb), al.id)) != B.v(A, Bb, al.id, lf))
          rep.add("lunit-naturality", {al.id});
        Id rf = B.r_at(A, Bb, al.src), rf2 = B.r_at(A, Bb, al.tgt);
        if (B.v(A, Bb, rf2, B.wr(A, A, Bb, al.id, B.unit_at(A))) != B.v(A, Bb, al.id, rf))
          rep.add("runit-naturality", {al.id});
        Id st = B.star2(A, Bb, al.id);
        // e_{f'} . (alpha* alpha) = e_f
        if (B.v(A, A, B.e_at(A, Bb, al.tgt), B.c2(A, Bb, A, st, al.id)) != B.e_at(A, Bb, al.src))
          rep.add("counit-naturality", {al.id});
        // (alpha alpha*) . i_f = i_{f'}
        if (B.v(Bb, Bb, B.c2(Bb, A, Bb, al.id, st), B.i_at(A, Bb, al.src)) !=
            B.i_at(A, Bb, al.tgt))
          rep.add("unit2-naturality", {al.id});
      }

  // pentagon (1): (id_k a_{h,g,f}) . a_{k,hg,f} . (a_{k,h,g} id_f) = a_{k,h,gf} . a_{kh,g,f}
  for (const auto& A : B.zero_cells)
    for (const auto& Bb : B.zero_cells)
      for (const auto& Cc : B.zero_cells)
        for (const auto& D : B.zero_cells)
          for (const auto& E : B.zero_cells)
            for (const auto& f : B.H(A, Bb).objects)
              for (const auto& g : B.H(Bb, Cc).objects)
                for (const auto& h : B.H(Cc, D).objects)
                  for (const auto& k : B.H(D, E).objects) {
                    Id hg = B.c1(Bb, Cc, D, h, g);
                    Id gf = B.c1(A, Bb, Cc, g, f);
                    Id kh = B.c1(Cc, D, E, k, h);
                    Id lhs = B.v(A, E,
                                 B.wl(A, D, E, k, B.a_at(A, Bb, Cc, D, h, g, f)),
                                 B.v(A, E,
                                     B.a_at(A, Bb, D, E, k, hg, f),
                                     B.wr(A, Bb, E, B.a_at(Bb, Cc, D, E, k, h, g), f)));
                    Id rhs = B.v(A, E,
                                 B.a_at(A, Cc, D, E, k, h, gf),
                                 B.a_at(A, Bb, Cc, E, kh, g, f));
                    if (lhs != rhs) rep.add("pentagon", {k, h, g, f});
                  }

  // triangle (2): (id_g l_f) . a_{g,1_B,f} = r_g id_f
  for (const auto& A : B.zero_cells)
    for (const auto& Bb : B.zero_cells)
      for (const auto& Cc : B.zero_cells)
        for (const auto& f : B.H(A, Bb).objects)
          for (const auto& g : B.H(Bb, Cc).objects) {
            Id lhs = B.v(A, Cc,
                         B.wl(A, Bb, Cc, g, B.l_at(A, Bb, f)),
                         B.a_at(A, Bb, Bb, Cc, g, B.unit_at(Bb), f));
            Id rhs = B.wr(A, Bb, Cc, B.r_at(Bb, Cc, g), f);
            if (lhs != rhs) rep.add("triangle", {g, f});
          }

  // zig-zag (3): r_f . (id_f e_f) . a_{f,f*,f} . (i_f id_f) = l_f
  for (const auto& A : B.zero_cells)
    for (const auto& Bb : B.zero_cells)
      for (const auto& f : B.H(A, Bb).objects) {
        Id fs = B.star1(A, Bb, f);
        Id lhs = B.v(A, Bb,
                     B.r_at(A, Bb, f),
                     B.v(A, Bb,
                         B.wl(A, A, Bb, f, B.e_at(A, Bb, f)),
                         B.v(A, Bb,
                             B.a_at(A, Bb, A, Bb, f, fs, f),
                             B.wr(A, Bb, Bb, B.i_at(A, Bb, f), f))));
        if (lhs != B.l_at(A, Bb, f)) rep.add("zigzag", {f});
      }

  return rep;
}

}  // namespace bgm
