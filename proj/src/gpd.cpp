#include "bgm/gpd.hpp"

#include <algorithm>

namespace bgm {

namespace {

std::vector<Id> sorted_objects(const FiniteGroupoid& G) {
  std::vector<Id> out = G.objects;
  std::sort(out.begin(), out.end());
  return out;
}

// Arrow ids of G from x, sorted; empty x means "any source".
std::vector<Id> sorted_arrows(const FiniteGroupoid& G) {
  std::vector<Id> out;
  for (const auto& a : G.arrows) out.push_back(a.id);
  std::sort(out.begin(), out.end());
  return out;
}

bool faithful_and_full(const GroupoidFunctor& F) {
  for (const auto& x : F.source.objects)
    for (const auto& y : F.source.objects) {
      std::map<Id, int> hits;
      for (const auto& a : F.source.arrows_from_to(x, y)) ++hits[F.on_arr(a)];
      for (const auto& [b, n] : hits)
        if (n > 1) return false;  // not faithful
      for (const auto& b : F.target.arrows_from_to(F.on_obj(x), F.on_obj(y)))
        if (!hits.count(b)) return false;  // not full
    }
  return true;
}

bool essentially_surjective(const GroupoidFunctor& F) {
  for (const auto& y : F.target.objects) {
    bool hit = false;
    for (const auto& x : F.source.objects)
      if (!F.target.arrows_from_to(F.on_obj(x), y).empty()) hit = true;
    if (!hit) return false;
  }
  return true;
}

bool isofibration(const GroupoidFunctor& F) {
  for (const auto& x : F.source.objects)
    for (const auto& b : F.target.arrows) {
      if (b.src != F.on_obj(x)) continue;
      bool lifted = false;
      for (const auto& a : F.source.arrows)
        if (a.src == x && F.on_arr(a.id) == b.id) lifted = true;
      if (!lifted) return false;
    }
  return true;
}

bool object_injective(const GroupoidFunctor& F) {
  std::map<Id, int> hits;
  for (const auto& x : F.source.objects) ++hits[F.on_obj(x)];
  for (const auto& [y, n] : hits)
    if (n > 1) return false;
  return true;
}

void require_square(const GpdSquare& sq) {
  if (!(compose_functors(sq.right, sq.top) == compose_functors(sq.bottom, sq.left)))
    throw StructuralError("gpd_lift: square does not commute as data");
}

}  // namespace

GpdClassification gpd_classify(const GroupoidFunctor& F) {
  GpdClassification c;
  c.is_fibration = isofibration(F);
  c.is_cofibration = object_injective(F);
  c.is_weak_equivalence = faithful_and_full(F) && essentially_surjective(F);
  return c;
}

std::pair<GroupoidFunctor, GroupoidFunctor> gpd_factor(const GroupoidFunctor& F, GpdWfs which) {
  const FiniteGroupoid& A = F.source;
  const FiniteGroupoid& B = F.target;

  if (which == GpdWfs::cof_trivfib) {
    // mapping cylinder: objects A_0 + B_0, homs copied from B along the
    // projection p(L x) = Fx, p(R y) = y
    std::vector<std::pair<Id, Id>> objs;  // (tag id, projection)
    for (const auto& x : A.objects) objs.push_back({pair_id("L", x), F.on_obj(x)});
    for (const auto& y : B.objects) objs.push_back({pair_id("R", y), y});

    FiniteGroupoid M;
    for (const auto& [u, pu] : objs) M.objects.push_back(u);
    auto name = [](const Id& u, const Id& v, const Id& b) { return pair_id(pair_id(u, v), b); };
    for (const auto& [u, pu] : objs)
      for (const auto& [v, pv] : objs)
        for (const auto& b : B.arrows_from_to(pu, pv)) M.arrows.push_back({name(u, v, b), u, v});
    for (const auto& [u, pu] : objs) M.identity[u] = name(u, u, B.id_at(pu));
    std::map<Id, std::pair<std::pair<Id, Id>, Id>> parts;  // arrow -> ((u,v), b)
    for (const auto& [u, pu] : objs)
      for (const auto& [v, pv] : objs)
        for (const auto& b : B.arrows_from_to(pu, pv)) parts[name(u, v, b)] = {{u, v}, b};
    for (const auto& ar1 : M.arrows)
      for (const auto& ar2 : M.arrows) {
        if (ar2.tgt != ar1.src) continue;
        const auto& [uv1, b1] = parts[ar1.id];
        const auto& [uv2, b2] = parts[ar2.id];
        M.compose[{ar1.id, ar2.id}] = name(uv2.first, uv1.second, B.comp(b1, b2));
      }
    for (const auto& ar : M.arrows) {
      const auto& [uv, b] = parts[ar.id];
      M.inverse[ar.id] = name(uv.second, uv.first, B.inv(b));
    }

    GroupoidFunctor K;  // cofibration A -> M
    K.source = A;
    K.target = M;
    for (const auto& x : A.objects) K.object_map[x] = pair_id("L", x);
    for (const auto& a : A.arrows)
      K.arrow_map[a.id] = name(pair_id("L", a.src), pair_id("L", a.tgt), F.on_arr(a.id));

    GroupoidFunctor Q;  // trivial fibration M -> B
    Q.source = M;
    Q.target = B;
    for (const auto& [u, pu] : objs) Q.object_map[u] = pu;
    for (const auto& ar : M.arrows) Q.arrow_map[ar.id] = parts[ar.id].second;
    return {K, Q};
  }

  // mapping path space: objects (x, b: Fx -> y), an arrow (x,b) -> (x',b')
  // is an arrow a: x -> x' of A; its B-component is b' . Fa . b^-1
  std::vector<std::pair<Id, Id>> objs;  // (x, b)
  for (const auto& x : A.objects)
    for (const auto& b : B.arrows)
      if (b.src == F.on_obj(x)) objs.push_back({x, b.id});

  FiniteGroupoid M;
  for (const auto& [x, b] : objs) M.objects.push_back(pair_id(x, b));
  auto hcomp = [&](const Id& b1, const Id& a, const Id& b0) {
    return B.comp(B.comp(b1, F.on_arr(a)), B.inv(b0));
  };
  auto name = [&](const Id& x, const Id& b, const Id& a, const Id& b1) {
    return pair_id(pair_id(x, b), pair_id(a, hcomp(b1, a, b)));
  };
  for (const auto& [x, b] : objs)
    for (const auto& [x1, b1] : objs)
      for (const auto& a : A.arrows_from_to(x, x1))
        M.arrows.push_back({name(x, b, a, b1), pair_id(x, b), pair_id(x1, b1)});
  for (const auto& [x, b] : objs) M.identity[pair_id(x, b)] = name(x, b, A.id_at(x), b);
  std::map<Id, std::tuple<Id, Id, Id, Id>> parts;  // arrow -> (x, b, a, b1)
  for (const auto& [x, b] : objs)
    for (const auto& [x1, b1] : objs)
      for (const auto& a : A.arrows_from_to(x, x1)) parts[name(x, b, a, b1)] = {x, b, a, b1};
  for (const auto& ar1 : M.arrows)
    for (const auto& ar2 : M.arrows) {
      if (ar2.tgt != ar1.src) continue;
      const auto& [x1, b1, a1, c1] = parts[ar1.id];
      const auto& [x2, b2, a2, c2] = parts[ar2.id];
      M.compose[{ar1.id, ar2.id}] = name(x2, b2, A.comp(a1, a2), c1);
    }
  for (const auto& ar : M.arrows) {
    const auto& [x, b, a, b1] = parts[ar.id];
    M.inverse[ar.id] = name(A.arrow(a).tgt, b1, A.inv(a), b);
  }

  GroupoidFunctor J;  // trivial cofibration A -> M
  J.source = A;
  J.target = M;
  for (const auto& x : A.objects) J.object_map[x] = pair_id(x, B.id_at(F.on_obj(x)));
  for (const auto& a : A.arrows)
    J.arrow_map[a.id] = name(a.src, B.id_at(F.on_obj(a.src)), a.id, B.id_at(F.on_obj(a.tgt)));

  GroupoidFunctor Q;  // fibration M -> B
  Q.source = M;
  Q.target = B;
  for (const auto& [x, b] : objs) Q.object_map[pair_id(x, b)] = B.arrow(b).tgt;
  for (const auto& ar : M.arrows) {
    const auto& [x, b, a, b1] = parts[ar.id];
    Q.arrow_map[ar.id] = hcomp(b1, a, b);
  }
  return {J, Q};
}

GroupoidFunctor gpd_lift(const GpdSquare& sq, GpdWfs which) {
  require_square(sq);
  const GroupoidFunctor& K = sq.left;
  const GroupoidFunctor& G = sq.right;
  const GroupoidFunctor& T = sq.top;
  const GroupoidFunctor& Bot = sq.bottom;
  GpdClassification ck = gpd_classify(K), cg = gpd_classify(G);

  GroupoidFunctor L;
  L.source = K.target;
  L.target = G.source;

  if (which == GpdWfs::cof_trivfib) {
    if (!ck.is_cofibration) throw PreconditionError("gpd_lift: left map is not a cofibration");
    if (!(cg.is_fibration && cg.is_weak_equivalence))
      throw PreconditionError("gpd_lift: right map is not a trivial fibration");
    // image objects go to the top, others to the least G-preimage
    std::map<Id, Id> preim;  // K-image object -> A-object
    for (const auto& x : K.source.objects) preim[K.on_obj(x)] = x;
    for (const auto& b : sorted_objects(K.target)) {
      auto it = preim.find(b);
      if (it != preim.end()) {
        L.object_map[b] = T.on_obj(it->second);
        continue;
      }
      bool found = false;
      for (const auto& x : sorted_objects(G.source)) {
        if (G.on_obj(x) != Bot.on_obj(b)) continue;
        L.object_map[b] = x;
        found = true;
        break;
      }
      if (!found) throw ConstructionError("gpd_lift: no object over " + Bot.on_obj(b));
    }
    for (const auto& u : K.target.arrows)
      L.arrow_map[u.id] =
          ff_preimage(G, L.object_map[u.src], L.object_map[u.tgt], Bot.on_arr(u.id));
    return L;
  }

  if (!(ck.is_cofibration && ck.is_weak_equivalence))
    throw PreconditionError("gpd_lift: left map is not a trivial cofibration");
  if (!cg.is_fibration) throw PreconditionError("gpd_lift: right map is not a fibration");

  // per object of the middle: an iso sigma_b: b -> K(a_b), identity on the
  // image, then a lift tau_b of Bot(sigma_b)^-1 against the fibration
  std::map<Id, Id> preim;
  for (const auto& x : K.source.objects) preim[K.on_obj(x)] = x;
  std::map<Id, Id> abar, sigma, tau;  // object of K.target -> data
  std::vector<Id> xarrs = sorted_arrows(G.source);
  for (const auto& b : sorted_objects(K.target)) {
    auto it = preim.find(b);
    if (it != preim.end()) {
      abar[b] = it->second;
      sigma[b] = K.target.id_at(b);
      tau[b] = G.source.id_at(T.on_obj(it->second));
      L.object_map[b] = T.on_obj(it->second);
      continue;
    }
    bool found = false;
    for (const auto& a : sorted_objects(K.source)) {
      for (const auto& s : K.target.arrows_from_to(b, K.on_obj(a))) {
        abar[b] = a;
        sigma[b] = s;
        found = true;
        break;
      }
      if (found) break;
    }
    if (!found) throw ConstructionError("gpd_lift: no iso from " + b + " into the image");
    Id want = Bot.on_arr(K.target.inv(sigma[b]));
    found = false;
    for (const auto& t : xarrs) {
      const Arrow& ta = G.source.arrow(t);
      if (ta.src != T.on_obj(abar[b])) continue;
      if (G.on_arr(t) != want) continue;
      tau[b] = t;
      L.object_map[b] = ta.tgt;
      found = true;
      break;
    }
    if (!found) throw ConstructionError("gpd_lift: fibration lift missing at " + b);
  }
  for (const auto& u : K.target.arrows) {
    Id w = ff_preimage(K, abar[u.src], abar[u.tgt],
                       K.target.comp(K.target.comp(sigma[u.tgt], u.id),
                                     K.target.inv(sigma[u.src])));
    L.arrow_map[u.id] =
        G.source.comp(G.source.comp(tau[u.tgt], T.on_arr(w)), G.source.inv(tau[u.src]));
  }
  return L;
}

EquivalenceInverse pseudo_inverse(const GroupoidFunctor& F) {
  GpdClassification c = gpd_classify(F);
  if (!c.is_weak_equivalence) throw PreconditionError("pseudo_inverse: not an equivalence");
  EquivalenceInverse out;
  out.G.source = F.target;
  out.G.target = F.source;
  std::map<Id, Id> eps;  // b -> iso F(G b) -> b
  for (const auto& b : sorted_objects(F.target)) {
    bool found = false;
    for (const auto& a : sorted_objects(F.source)) {
      std::vector<Id> cands = F.target.arrows_from_to(F.on_obj(a), b);
      std::sort(cands.begin(), cands.end());
      if (cands.empty()) continue;
      out.G.object_map[b] = a;
      eps[b] = cands.front();
      found = true;
      break;
    }
    if (!found) throw ConstructionError("pseudo_inverse: no object over " + b);
  }
  for (const auto& u : F.target.arrows)
    out.G.arrow_map[u.id] =
        ff_preimage(F, out.G.on_obj(u.src), out.G.on_obj(u.tgt),
                    F.target.comp(F.target.comp(F.target.inv(eps[u.tgt]), u.id), eps[u.src]));
  out.eta.source = identity_functor(F.source);
  out.eta.target = compose_functors(out.G, F);
  for (const auto& a : F.source.objects)
    out.eta.components[a] =
        ff_preimage(F, a, out.G.on_obj(F.on_obj(a)), F.target.inv(eps[F.on_obj(a)]));
  out.eps.source = compose_functors(F, out.G);
  out.eps.target = identity_functor(F.target);
  out.eps.components = eps;
  return out;
}

NatIso transport_post(const GroupoidFunctor& F, const GroupoidFunctor& H,
                      const GroupoidFunctor& K, const NatIso& alpha) {
  EquivalenceInverse inv = pseudo_inverse(F);
  const FiniteGroupoid& A = F.source;
  NatIso beta;
  beta.source = H;
  beta.target = K;
  for (const auto& c : H.source.objects)
    beta.components[c] =
        A.comp(A.comp(A.inv(inv.eta.at(K.on_obj(c))), inv.G.on_arr(alpha.at(c))),
               inv.eta.at(H.on_obj(c)));
  return beta;
}

NatIso transport_pre(const GroupoidFunctor& G, const GroupoidFunctor& H,
                     const GroupoidFunctor& K, const NatIso& alpha) {
  EquivalenceInverse inv = pseudo_inverse(G);
  const FiniteGroupoid& B = H.target;
  NatIso beta;
  beta.source = H;
  beta.target = K;
  for (const auto& a : H.source.objects) {
    Id e = inv.eps.at(a);  // G(G' a) -> a
    beta.components[a] =
        B.comp(B.comp(K.on_arr(e), alpha.at(inv.G.on_obj(a))), B.inv(H.on_arr(e)));
  }
  return beta;
}

std::pair<GroupoidFunctor, NatIso> fibration_lift_up_to_iso(const GroupoidFunctor& F,
                                                            const GroupoidFunctor& H,
                                                            const GroupoidFunctor& G,
                                                            const NatIso& beta) {
  if (!gpd_classify(G).is_fibration)
    throw PreconditionError("fibration_lift_up_to_iso: not a fibration");
  GroupoidFunctor Fp;
  Fp.source = F.source;
  Fp.target = F.target;
  std::map<Id, Id> alpha;
  std::vector<Id> barrs = sorted_arrows(G.source);
  for (const auto& a : sorted_objects(F.source)) {
    bool found = false;
    for (const auto& t : barrs) {
      const Arrow& ta = G.source.arrow(t);
      if (ta.tgt != F.on_obj(a)) continue;
      if (G.on_arr(t) != beta.at(a)) continue;
      Fp.object_map[a] = ta.src;
      alpha[a] = t;
      found = true;
      break;
    }
    if (!found) throw ConstructionError("fibration_lift_up_to_iso: no lift at " + a);
  }
  const FiniteGroupoid& B = F.target;
  for (const auto& u : F.source.arrows)
    Fp.arrow_map[u.id] =
        B.comp(B.comp(B.inv(alpha[u.tgt]), F.on_arr(u.id)), alpha[u.src]);
  NatIso n;
  n.source = Fp;
  n.target = F;
  n.components = alpha;
  return {Fp, n};
}

std::vector<NatIso> enumerate_nat_isos(const GroupoidFunctor& H, const GroupoidFunctor& K,
                                       long long cap) {
  std::vector<Id> objs = sorted_objects(H.source);
  std::vector<std::vector<Id>> slots;
  long long total = 1;
  for (const auto& x : objs) {
    std::vector<Id> cands = H.target.arrows_from_to(H.on_obj(x), K.on_obj(x));
    std::sort(cands.begin(), cands.end());
    if (cands.empty()) return {};
    slots.push_back(cands);
    total *= (long long)cands.size();
    if (total > cap) throw PreconditionError("enumerate_nat_isos: search space above cap");
  }
  std::vector<NatIso> out;
  std::vector<size_t> idx(objs.size(), 0);
  while (true) {
    NatIso n;
    n.source = H;
    n.target = K;
    for (size_t i = 0; i < objs.size(); ++i) n.components[objs[i]] = slots[i][idx[i]];
    if (validate_nat_iso(n).ok()) out.push_back(n);
    size_t i = objs.size();
    while (i > 0 && ++idx[i - 1] == slots[i - 1].size()) idx[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

NatIso whisker_functor_pre(const NatIso& alpha, const GroupoidFunctor& F) {
  NatIso n;
  n.source = compose_functors(alpha.source, F);
  n.target = compose_functors(alpha.target, F);
  for (const auto& x : F.source.objects) n.components[x] = alpha.at(F.on_obj(x));
  return n;
}

NatIso whisker_functor_post(const GroupoidFunctor& F, const NatIso& alpha) {
  NatIso n;
  n.source = compose_functors(F, alpha.source);
  n.target = compose_functors(F, alpha.target);
  for (const auto& [x, c] : alpha.components) n.components[x] = F.on_arr(c);
  return n;
}

NatIso vcomp_nat_isos(const NatIso& after, const NatIso& before) {
  if (!(after.source == before.target)) throw StructuralError("vcomp_nat_isos: boundary mismatch");
  NatIso n;
  n.source = before.source;
  n.target = after.target;
  for (const auto& [x, c] : before.components)
    n.components[x] = n.source.target.comp(after.at(x), c);
  return n;
}

}  // namespace bgm
