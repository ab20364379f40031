#include "bgm/core.hpp"

#include <algorithm>

namespace bgm {

void ValidationReport::merge(const ValidationReport& r, const std::string& prefix) {
  for (const auto& v : r.violations) violations.push_back({prefix + v.axiom, v.cells});
}

bool FiniteGroupoid::has_object(const Id& x) const {
  return std::find(objects.begin(), objects.end(), x) != objects.end();
}

bool FiniteGroupoid::has_arrow(const Id& a) const {
  for (const auto& ar : arrows)
    if (ar.id == a) return true;
  return false;
}

const Arrow& FiniteGroupoid::arrow(const Id& a) const {
  for (const auto& ar : arrows)
    if (ar.id == a) return ar;
  throw StructuralError("unknown arrow: " + a);
}

Id FiniteGroupoid::id_at(const Id& x) const {
  auto it = identity.find(x);
  if (it == identity.end()) throw StructuralError("no identity at object: " + x);
  return it->second;
}

Id FiniteGroupoid::comp(const Id& after, const Id& before) const {
  auto it = compose.find({after, before});
  if (it == compose.end())
    throw StructuralError("no compose entry: (" + after + ", " + before + ")");
  return it->second;
}

Id FiniteGroupoid::inv(const Id& a) const {
  auto it = inverse.find(a);
  if (it == inverse.end()) throw StructuralError("no inverse entry: " + a);
  return it->second;
}

std::vector<Id> FiniteGroupoid::arrows_from_to(const Id& x, const Id& y) const {
  std::vector<Id> out;
  for (const auto& ar : arrows)
    if (ar.src == x && ar.tgt == y) out.push_back(ar.id);
  return out;
}

Id GroupoidFunctor::on_obj(const Id& x) const {
  auto it = object_map.find(x);
  if (it == object_map.end()) throw StructuralError("object not in functor domain: " + x);
  return it->second;
}

Id GroupoidFunctor::on_arr(const Id& a) const {
  auto it = arrow_map.find(a);
  if (it == arrow_map.end()) throw StructuralError("arrow not in functor domain: " + a);
  return it->second;
}

Id NatIso::at(const Id& x) const {
  auto it = components.find(x);
  if (it == components.end()) throw StructuralError("no component at object: " + x);
  return it->second;
}

ValidationReport validate_groupoid(const FiniteGroupoid& G) {
  ValidationReport rep;
  // structure: declared references only
  for (const auto& a : G.arrows) {
    if (!G.has_object(a.src) || !G.has_object(a.tgt))
      throw StructuralError("arrow " + a.id + " has undeclared endpoint");
  }
  for (const auto& x : G.objects) {
    auto it = G.identity.find(x);
    if (it == G.identity.end()) throw StructuralError("missing identity at " + x);
    const Arrow& e = G.arrow(it->second);
    if (e.src != x || e.tgt != x) rep.add("identity-endpoints", {x, e.id});
  }
  // compose totality on composable pairs, nothing extra
  for (const auto& a : G.arrows)
    for (const auto& b : G.arrows) {
      bool composable = (b.tgt == a.src);
      auto it = G.compose.find({a.id, b.id});
      if (composable && it == G.compose.end())
        throw StructuralError("missing compose entry (" + a.id + ", " + b.id + ")");
      if (!composable && it != G.compose.end())
        rep.add("compose-non-composable", {a.id, b.id});
      if (composable && it != G.compose.end()) {
        const Arrow& c = G.arrow(it->second);
        if (c.src != b.src || c.tgt != a.tgt) rep.add("compose-endpoints", {a.id, b.id, c.id});
      }
    }
  // associativity
  for (const auto& a : G.arrows)
    for (const auto& b : G.arrows) {
      if (b.tgt != a.src) continue;
      for (const auto& c : G.arrows) {
        if (c.tgt != b.src) continue;
        if (G.comp(G.comp(a.id, b.id), c.id) != G.comp(a.id, G.comp(b.id, c.id)))
          rep.add("associativity", {a.id, b.id, c.id});
      }
    }
  // identity neutrality
  for (const auto& a : G.arrows) {
    if (G.comp(a.id, G.id_at(a.src)) != a.id) rep.add("right-unit", {a.id});
    if (G.comp(G.id_at(a.tgt), a.id) != a.id) rep.add("left-unit", {a.id});
  }
  // inverses
  for (const auto& a : G.arrows) {
    auto it = G.inverse.find(a.id);
    if (it == G.inverse.end()) throw StructuralError("missing inverse of " + a.id);
    const Arrow& b = G.arrow(it->second);
    if (b.src != a.tgt || b.tgt != a.src) rep.add("inverse-endpoints", {a.id, b.id});
    else {
      if (G.comp(b.id, a.id) != G.id_at(a.src)) rep.add("inverse-left", {a.id});
      if (G.comp(a.id, b.id) != G.id_at(a.tgt)) rep.add("inverse-right", {a.id});
    }
  }
  return rep;
}

ValidationReport validate_functor(const GroupoidFunctor& F) {
  ValidationReport rep;
  for (const auto& x : F.source.objects) {
    Id fx = F.on_obj(x);
    if (!F.target.has_object(fx)) throw StructuralError("functor image object undeclared: " + fx);
  }
  for (const auto& a : F.source.arrows) {
    Id fa = F.on_arr(a.id);
    const Arrow& fA = F.target.arrow(fa);
    if (fA.src != F.on_obj(a.src) || fA.tgt != F.on_obj(a.tgt))
      rep.add("functor-endpoints", {a.id, fa});
  }
  for (const auto& x : F.source.objects)
    if (F.on_arr(F.source.id_at(x)) != F.target.id_at(F.on_obj(x)))
      rep.add("functor-identity", {x});
  for (const auto& a : F.source.arrows)
    for (const auto& b : F.source.arrows) {
      if (b.tgt != a.src) continue;
      if (F.on_arr(F.source.comp(a.id, b.id)) != F.target.comp(F.on_arr(a.id), F.on_arr(b.id)))
        rep.add("functor-composition", {a.id, b.id});
    }
  return rep;
}

ValidationReport validate_nat_iso(const NatIso& n) {
  ValidationReport rep;
  if (!(n.source.source == n.target.source) || !(n.source.target == n.target.target))
    throw StructuralError("nat iso between non-parallel functors");
  const FiniteGroupoid& T = n.source.target;
  for (const auto& x : n.source.source.objects) {
    const Arrow& c = T.arrow(n.at(x));
    if (c.src != n.source.on_obj(x) || c.tgt != n.target.on_obj(x))
      rep.add("component-endpoints", {x, c.id});
  }
  for (const auto& a : n.source.source.arrows) {
    // naturality: n(tgt a) . F(a) = G(a) . n(src a)
    if (T.comp(n.at(a.tgt), n.source.on_arr(a.id)) !=
        T.comp(n.target.on_arr(a.id), n.at(a.src)))
      rep.add("naturality", {a.id});
  }
  return rep;
}

FiniteGroupoid product_groupoid(const FiniteGroupoid& G1, const FiniteGroupoid& G2) {
  FiniteGroupoid P;
  for (const auto& x : G1.objects)
    for (const auto& y : G2.objects) P.objects.push_back(pair_id(x, y));
  for (const auto& a : G1.arrows)
    for (const auto& b : G2.arrows)
      P.arrows.push_back({pair_id(a.id, b.id), pair_id(a.src, b.src), pair_id(a.tgt, b.tgt)});
  for (const auto& x : G1.objects)
    for (const auto& y : G2.objects)
      P.identity[pair_id(x, y)] = pair_id(G1.id_at(x), G2.id_at(y));
  for (const auto& a1 : G1.arrows)
    for (const auto& b1 : G2.arrows)
      for (const auto& a2 : G1.arrows) {
        if (a2.tgt != a1.src) continue;
        for (const auto& b2 : G2.arrows) {
          if (b2.tgt != b1.src) continue;
          P.compose[{pair_id(a1.id, b1.id), pair_id(a2.id, b2.id)}] =
              pair_id(G1.comp(a1.id, a2.id), G2.comp(b1.id, b2.id));
        }
      }
  for (const auto& a : G1.arrows)
    for (const auto& b : G2.arrows)
      P.inverse[pair_id(a.id, b.id)] = pair_id(G1.inv(a.id), G2.inv(b.id));
  return P;
}

GroupoidFunctor identity_functor(const FiniteGroupoid& G) {
  GroupoidFunctor F;
  F.source = G;
  F.target = G;
  for (const auto& x : G.objects) F.object_map[x] = x;
  for (const auto& a : G.arrows) F.arrow_map[a.id] = a.id;
  return F;
}

GroupoidFunctor compose_functors(const GroupoidFunctor& G, const GroupoidFunctor& F) {
  if (!(F.target == G.source)) throw StructuralError("compose_functors: boundary mismatch");
  GroupoidFunctor H;
  H.source = F.source;
  H.target = G.target;
  for (const auto& [x, fx] : F.object_map) H.object_map[x] = G.on_obj(fx);
  for (const auto& [a, fa] : F.arrow_map) H.arrow_map[a] = G.on_arr(fa);
  return H;
}

GroupoidFunctor product_functor(const GroupoidFunctor& F1, const GroupoidFunctor& F2) {
  GroupoidFunctor P;
  P.source = product_groupoid(F1.source, F2.source);
  P.target = product_groupoid(F1.target, F2.target);
  for (const auto& x : F1.source.objects)
    for (const auto& y : F2.source.objects)
      P.object_map[pair_id(x, y)] = pair_id(F1.on_obj(x), F2.on_obj(y));
  for (const auto& a : F1.source.arrows)
    for (const auto& b : F2.source.arrows)
      P.arrow_map[pair_id(a.id, b.id)] = pair_id(F1.on_arr(a.id), F2.on_arr(b.id));
  return P;
}

NatIso identity_nat_iso(const GroupoidFunctor& F) {
  NatIso n;
  n.source = F;
  n.target = F;
  for (const auto& x : F.source.objects) n.components[x] = F.target.id_at(F.on_obj(x));
  return n;
}

NatIso inverse_nat_iso(const NatIso& n) {
  NatIso m;
  m.source = n.target;
  m.target = n.source;
  for (const auto& [x, c] : n.components) m.components[x] = n.source.target.inv(c);
  return m;
}

Id ff_preimage(const GroupoidFunctor& F, const Id& x, const Id& y, const Id& b) {
  Id found;
  bool any = false;
  for (const auto& a : F.source.arrows) {
    if (a.src != x || a.tgt != y) continue;
    if (F.on_arr(a.id) != b) continue;
    if (any) throw ConstructionError("ff_preimage: several preimages of " + b);
    found = a.id;
    any = true;
  }
  if (!any)
    throw ConstructionError("ff_preimage: no preimage of " + b + " from " + x + " to " + y);
  return found;
}

}  // namespace bgm
