#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bgm/gpd.hpp"

using namespace bgm;

namespace {

// Z/n as a one-object groupoid
FiniteGroupoid cyclic(int n) {
  FiniteGroupoid G;
  G.objects = {"*"};
  auto g = [](int i) { return "g" + std::to_string(i); };
  for (int i = 0; i < n; ++i) G.arrows.push_back({g(i), "*", "*"});
  G.identity["*"] = g(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G.compose[{g(i), g(j)}] = g((i + j) % n);
  for (int i = 0; i < n; ++i) G.inverse[g(i)] = g((n - i) % n);
  return G;
}

FiniteGroupoid codisc(int k) {
  FiniteGroupoid G;
  auto o = [](int i) { return "o" + std::to_string(i); };
  auto t = [&](int i, int j) { return pair_id(o(i), o(j)); };
  for (int i = 0; i < k; ++i) G.objects.push_back(o(i));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) G.arrows.push_back({t(i, j), o(i), o(j)});
  for (int i = 0; i < k; ++i) G.identity[o(i)] = t(i, i);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l) G.compose[{t(j, l), t(i, j)}] = t(i, l);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) G.inverse[t(i, j)] = t(j, i);
  return G;
}

FiniteGroupoid disc(int k) {
  FiniteGroupoid G;
  for (int i = 0; i < k; ++i) {
    Id o = "o" + std::to_string(i);
    G.objects.push_back(o);
    G.arrows.push_back({"1" + o, o, o});
    G.identity[o] = "1" + o;
    G.compose[{"1" + o, "1" + o}] = "1" + o;
    G.inverse["1" + o] = "1" + o;
  }
  return G;
}

// the unique functor determined by an object map when all homs of the
// target are singletons fails in general; build explicit ones instead
GroupoidFunctor collapse_codisc(int from, int to) {
  GroupoidFunctor F;
  F.source = codisc(from);
  F.target = codisc(to);
  auto o = [](int i) { return "o" + std::to_string(i); };
  auto t = [&](int i, int j) { return pair_id(o(i), o(j)); };
  auto pick = [&](int i) { return i < to ? i : to - 1; };
  for (int i = 0; i < from; ++i) F.object_map[o(i)] = o(pick(i));
  for (int i = 0; i < from; ++i)
    for (int j = 0; j < from; ++j) F.arrow_map[t(i, j)] = t(pick(i), pick(j));
  return F;
}

GroupoidFunctor point_in_codisc(int k, int at) {
  GroupoidFunctor F;
  F.source = disc(1);
  F.target = codisc(k);
  Id o = "o" + std::to_string(at);
  F.object_map["o0"] = o;
  F.arrow_map["1o0"] = pair_id(o, o);
  return F;
}

GroupoidFunctor trivial_group_map(int n) {
  GroupoidFunctor F;
  F.source = cyclic(n);
  F.target = cyclic(n);
  F.object_map["*"] = "*";
  for (int i = 0; i < n; ++i) F.arrow_map["g" + std::to_string(i)] = "g0";
  return F;
}

bool is_trivfib(const GpdClassification& c) { return c.is_fibration && c.is_weak_equivalence; }
bool is_trivcof(const GpdClassification& c) { return c.is_cofibration && c.is_weak_equivalence; }

}  // namespace

TEST_CASE("gpd_classify on stock examples") {
  GpdClassification c = gpd_classify(identity_functor(cyclic(3)));
  CHECK(c.is_fibration);
  CHECK(c.is_cofibration);
  CHECK(c.is_weak_equivalence);

  c = gpd_classify(collapse_codisc(2, 1));  // surjective equivalence
  CHECK(c.is_fibration);
  CHECK_FALSE(c.is_cofibration);
  CHECK(c.is_weak_equivalence);

  GroupoidFunctor pt_disc;  // one point into a 2-object discrete groupoid
  pt_disc.source = disc(1);
  pt_disc.target = disc(2);
  pt_disc.object_map["o0"] = "o0";
  pt_disc.arrow_map["1o0"] = "1o0";
  c = gpd_classify(pt_disc);
  CHECK(c.is_fibration);
  CHECK(c.is_cofibration);
  CHECK_FALSE(c.is_weak_equivalence);

  c = gpd_classify(point_in_codisc(2, 0));  // equivalence but no arrow lifts
  CHECK_FALSE(c.is_fibration);
  CHECK(c.is_cofibration);
  CHECK(c.is_weak_equivalence);

  c = gpd_classify(trivial_group_map(2));  // not faithful, g1 has no lift
  CHECK_FALSE(c.is_fibration);
  CHECK(c.is_cofibration);
  CHECK_FALSE(c.is_weak_equivalence);
}

TEST_CASE("gpd_factor produces valid factorizations in the right classes") {
  std::vector<GroupoidFunctor> samples = {
      identity_functor(cyclic(3)), collapse_codisc(3, 2), point_in_codisc(2, 1),
      trivial_group_map(2),
  };
  for (const auto& F : samples) {
    for (GpdWfs w : {GpdWfs::cof_trivfib, GpdWfs::trivcof_fib}) {
      auto [K, Q] = gpd_factor(F, w);
      CHECK(validate_groupoid(K.target).ok());
      CHECK(validate_functor(K).ok());
      CHECK(validate_functor(Q).ok());
      CHECK(compose_functors(Q, K) == F);
      GpdClassification ck = gpd_classify(K), cq = gpd_classify(Q);
      if (w == GpdWfs::cof_trivfib) {
        CHECK(ck.is_cofibration);
        CHECK(is_trivfib(cq));
      } else {
        CHECK(is_trivcof(ck));
        CHECK(cq.is_fibration);
      }
    }
  }
}

TEST_CASE("gpd_lift solves mixed factorization squares, both flavors") {
  std::vector<GroupoidFunctor> samples = {
      collapse_codisc(3, 2), point_in_codisc(2, 1), trivial_group_map(2),
      identity_functor(cyclic(2)),
  };
  for (const auto& F : samples) {
    auto [J, Q1] = gpd_factor(F, GpdWfs::trivcof_fib);
    auto [K, Q2] = gpd_factor(F, GpdWfs::cof_trivfib);
    GpdSquare sq{K, J, Q2, Q1};  // top, left, right, bottom
    for (GpdWfs w : {GpdWfs::cof_trivfib, GpdWfs::trivcof_fib}) {
      GroupoidFunctor L = gpd_lift(sq, w);
      CHECK(validate_functor(L).ok());
      CHECK(compose_functors(L, sq.left) == sq.top);
      CHECK(compose_functors(sq.right, L) == sq.bottom);
    }
  }
}

TEST_CASE("gpd_lift rejects bad squares and wrong classes") {
  GroupoidFunctor F = collapse_codisc(2, 1);
  GpdSquare bad{identity_functor(codisc(2)), identity_functor(codisc(2)), F,
                identity_functor(codisc(1))};
  CHECK_THROWS_AS(gpd_lift(bad, GpdWfs::cof_trivfib), StructuralError);

  // right leg not a trivial fibration (point inclusion is no fibration)
  GroupoidFunctor pt = point_in_codisc(2, 0);
  GpdSquare sq{identity_functor(disc(1)), identity_functor(disc(1)), pt, pt};
  CHECK_THROWS_AS(gpd_lift(sq, GpdWfs::cof_trivfib), PreconditionError);
  // left leg not a trivial cofibration for the other flavor
  GroupoidFunctor tg = trivial_group_map(2);
  GpdSquare sq2{tg, tg, identity_functor(cyclic(2)), identity_functor(cyclic(2))};
  CHECK_THROWS_AS(gpd_lift(sq2, GpdWfs::trivcof_fib), PreconditionError);
}

TEST_CASE("pseudo_inverse data and triangle identities") {
  for (const auto& F : {collapse_codisc(3, 2), point_in_codisc(3, 1),
                        identity_functor(cyclic(3))}) {
    EquivalenceInverse inv = pseudo_inverse(F);
    CHECK(validate_functor(inv.G).ok());
    CHECK(validate_nat_iso(inv.eta).ok());
    CHECK(validate_nat_iso(inv.eps).ok());
    // (eps F) . (F eta) = id_F and (G eps) . (eta G) = id_G
    NatIso t1 = vcomp_nat_isos(whisker_functor_pre(inv.eps, F),
                               whisker_functor_post(F, inv.eta));
    CHECK(t1.components == identity_nat_iso(F).components);
    NatIso t2 = vcomp_nat_isos(whisker_functor_post(inv.G, inv.eps),
                               whisker_functor_pre(inv.eta, inv.G));
    CHECK(t2.components == identity_nat_iso(inv.G).components);
  }
  CHECK_THROWS_AS(pseudo_inverse(trivial_group_map(2)), PreconditionError);
}

TEST_CASE("transport_post: unique preimage of a natural iso under F . -") {
  // P = codiscrete(2) x Z/2, F = second projection, an equivalence
  FiniteGroupoid C2 = codisc(2), Z2 = cyclic(2);
  FiniteGroupoid P = product_groupoid(C2, Z2);
  GroupoidFunctor F;
  F.source = P;
  F.target = Z2;
  for (const auto& x : C2.objects) F.object_map[pair_id(x, "*")] = "*";
  for (const auto& a : C2.arrows)
    for (const auto& g : Z2.arrows) F.arrow_map[pair_id(a.id, g.id)] = g.id;
  CHECK(gpd_classify(F).is_weak_equivalence);

  GroupoidFunctor H, K;  // two points of P
  H.source = disc(1);
  H.target = P;
  H.object_map["o0"] = pair_id("o0", "*");
  H.arrow_map["1o0"] = P.id_at(pair_id("o0", "*"));
  K = H;
  K.object_map["o0"] = pair_id("o1", "*");
  K.arrow_map["1o0"] = P.id_at(pair_id("o1", "*"));

  NatIso alpha;  // F H => F K picking the nontrivial element
  alpha.source = compose_functors(F, H);
  alpha.target = compose_functors(F, K);
  alpha.components["o0"] = "g1";
  CHECK(validate_nat_iso(alpha).ok());

  NatIso beta = transport_post(F, H, K, alpha);
  CHECK(validate_nat_iso(beta).ok());
  CHECK(whisker_functor_post(F, beta).components == alpha.components);
  // uniqueness, by enumeration
  int matches = 0;
  for (const auto& n : enumerate_nat_isos(H, K))
    if (whisker_functor_post(F, n).components == alpha.components) {
      ++matches;
      CHECK(n.components == beta.components);
    }
  CHECK(matches == 1);
  CHECK(enumerate_nat_isos(H, K).size() == 2);
}

TEST_CASE("transport_pre: unique extension of a natural iso along an equivalence") {
  FiniteGroupoid C2 = codisc(2), Z2 = cyclic(2);
  FiniteGroupoid P = product_groupoid(C2, Z2);
  GroupoidFunctor G;  // Z/2 -> P at the first codiscrete object, an equivalence
  G.source = Z2;
  G.target = P;
  G.object_map["*"] = pair_id("o0", "*");
  for (const auto& g : Z2.arrows) G.arrow_map[g.id] = pair_id(pair_id("o0", "o0"), g.id);
  CHECK(gpd_classify(G).is_weak_equivalence);

  GroupoidFunctor H;  // projection P -> Z/2
  H.source = P;
  H.target = Z2;
  for (const auto& x : C2.objects) H.object_map[pair_id(x, "*")] = "*";
  for (const auto& a : C2.arrows)
    for (const auto& g : Z2.arrows) H.arrow_map[pair_id(a.id, g.id)] = g.id;

  NatIso alpha;  // H G => H G by the nontrivial central element
  alpha.source = compose_functors(H, G);
  alpha.target = alpha.source;
  alpha.components["*"] = "g1";
  CHECK(validate_nat_iso(alpha).ok());

  NatIso beta = transport_pre(G, H, H, alpha);
  CHECK(validate_nat_iso(beta).ok());
  CHECK(whisker_functor_pre(beta, G).components == alpha.components);
  int matches = 0;
  for (const auto& n : enumerate_nat_isos(H, H))
    if (whisker_functor_pre(n, G).components == alpha.components) {
      ++matches;
      CHECK(n.components == beta.components);
    }
  CHECK(matches == 1);
}

TEST_CASE("fibration_lift_up_to_iso") {
  FiniteGroupoid C2 = codisc(2), Z2 = cyclic(2);
  FiniteGroupoid P = product_groupoid(C2, Z2);
  GroupoidFunctor G;  // projection P -> Z/2, a fibration
  G.source = P;
  G.target = Z2;
  for (const auto& x : C2.objects) G.object_map[pair_id(x, "*")] = "*";
  for (const auto& a : C2.arrows)
    for (const auto& g : Z2.arrows) G.arrow_map[pair_id(a.id, g.id)] = g.id;
  CHECK(gpd_classify(G).is_fibration);

  GroupoidFunctor F;  // a point of P
  F.source = disc(1);
  F.target = P;
  F.object_map["o0"] = pair_id("o0", "*");
  F.arrow_map["1o0"] = P.id_at(pair_id("o0", "*"));
  GroupoidFunctor H = compose_functors(G, F);

  NatIso beta;  // H => G F twisted by g1
  beta.source = H;
  beta.target = compose_functors(G, F);
  beta.components["o0"] = "g1";
  CHECK(validate_nat_iso(beta).ok());

  auto [Fp, alpha] = fibration_lift_up_to_iso(F, H, G, beta);
  CHECK(validate_functor(Fp).ok());
  CHECK(validate_nat_iso(alpha).ok());
  CHECK(compose_functors(G, Fp) == H);
  CHECK(whisker_functor_post(G, alpha).components == beta.components);
  CHECK(alpha.source == Fp);
  CHECK(alpha.target == F);
}

TEST_CASE("whiskering: interchange and composition laws, brute force") {
  FiniteGroupoid Z2 = cyclic(2);
  GroupoidFunctor idz = identity_functor(Z2);
  auto autos = enumerate_nat_isos(idz, idz);
  CHECK(autos.size() == 2);  // the center of Z/2
  for (const auto& a : autos)
    for (const auto& b : autos) {
      NatIso ab = vcomp_nat_isos(a, b);
      CHECK(validate_nat_iso(ab).ok());
      // post-whiskering by a functor is multiplicative
      GroupoidFunctor tg = trivial_group_map(2);
      CHECK(whisker_functor_post(tg, ab).components ==
            vcomp_nat_isos(whisker_functor_post(tg, a), whisker_functor_post(tg, b)).components);
      CHECK(whisker_functor_pre(ab, tg).components ==
            vcomp_nat_isos(whisker_functor_pre(a, tg), whisker_functor_pre(b, tg)).components);
      // interchange of pre and post whiskering
      CHECK(whisker_functor_pre(whisker_functor_post(tg, a), tg).components ==
            whisker_functor_post(tg, whisker_functor_pre(a, tg)).components);
    }
  // nat iso counts on other shapes
  GroupoidFunctor idc = identity_functor(codisc(2));
  CHECK(enumerate_nat_isos(idc, idc).size() == 1);
}
