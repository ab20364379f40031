#include "bgm/fixtures.hpp"

namespace bgm {

namespace {
int md(int x, int n) { return ((x % n) + n) % n; }
}  // namespace

Id zone(int n, int onecell) { return "g" + std::to_string(md(onecell, n)); }

Id zcell(int n, int onecell, int label) {
  return zone(n, onecell) + "#" + std::to_string(md(label, n));
}

FiniteBigroupoid strict_delooping(int n) {
  FiniteBigroupoid B;
  B.zero_cells = {"*"};
  FiniteGroupoid G;
  for (int i = 0; i < n; ++i) {
    Id f = zone(n, i);
    G.objects.push_back(f);
    G.arrows.push_back({"id(" + f + ")", f, f});
    G.identity[f] = "id(" + f + ")";
    G.compose[{"id(" + f + ")", "id(" + f + ")"}] = "id(" + f + ")";
    G.inverse["id(" + f + ")"] = "id(" + f + ")";
  }
  B.hom[{"*", "*"}] = G;
  GroupoidFunctor C;
  C.source = product_groupoid(G, G);
  C.target = G;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      C.object_map[pair_id(zone(n, i), zone(n, j))] = zone(n, i + j);
      C.arrow_map[pair_id("id(" + zone(n, i) + ")", "id(" + zone(n, j) + ")")] =
          "id(" + zone(n, i + j) + ")";
    }
  B.comp[{"*", "*", "*"}] = C;
  B.unit["*"] = zone(n, 0);
  GroupoidFunctor I;
  I.source = G;
  I.target = G;
  for (int i = 0; i < n; ++i) {
    I.object_map[zone(n, i)] = zone(n, -i);
    I.arrow_map["id(" + zone(n, i) + ")"] = "id(" + zone(n, -i) + ")";
  }
  B.inv[{"*", "*"}] = I;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        B.assoc[{"*", "*", "*", "*", zone(n, k), zone(n, j), zone(n, i)}] =
            "id(" + zone(n, i + j + k) + ")";
  for (int i = 0; i < n; ++i) {
    CellKey key{"*", "*", zone(n, i)};
    B.lunit[key] = "id(" + zone(n, i) + ")";
    B.runit[key] = "id(" + zone(n, i) + ")";
    B.counit[key] = "id(" + zone(n, 0) + ")";
    B.unit2[key] = "id(" + zone(n, 0) + ")";
  }
  return B;
}

FiniteBigroupoid cocycle_fixture(int n, const Cocycle3& c) {
  FiniteBigroupoid B;
  B.zero_cells = {"*"};
  FiniteGroupoid G;
  for (int i = 0; i < n; ++i) {
    G.objects.push_back(zone(n, i));
    for (int a = 0; a < n; ++a) G.arrows.push_back({zcell(n, i, a), zone(n, i), zone(n, i)});
    G.identity[zone(n, i)] = zcell(n, i, 0);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) G.compose[{zcell(n, i, a), zcell(n, i, b)}] = zcell(n, i, a + b);
      G.inverse[zcell(n, i, a)] = zcell(n, i, -a);
    }
  }
  B.hom[{"*", "*"}] = G;
  GroupoidFunctor C;
  C.source = product_groupoid(G, G);
  C.target = G;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      C.object_map[pair_id(zone(n, i), zone(n, j))] = zone(n, i + j);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          C.arrow_map[pair_id(zcell(n, i, a), zcell(n, j, b))] = zcell(n, i + j, a + b);
    }
  B.comp[{"*", "*", "*"}] = C;
  B.unit["*"] = zone(n, 0);
  GroupoidFunctor I;
  I.source = G;
  I.target = G;
  for (int i = 0; i < n; ++i) {
    I.object_map[zone(n, i)] = zone(n, -i);
    for (int a = 0; a < n; ++a) I.arrow_map[zcell(n, i, a)] = zcell(n, -i, -a);
  }
  B.inv[{"*", "*"}] = I;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        B.assoc[{"*", "*", "*", "*", zone(n, k), zone(n, j), zone(n, i)}] =
            zcell(n, i + j + k, c(k, j, i));
  for (int i = 0; i < n; ++i) {
    CellKey key{"*", "*", zone(n, i)};
    B.lunit[key] = zcell(n, i, 0);
    B.runit[key] = zcell(n, i, 0);
    B.counit[key] = zcell(n, 0, 0);
    // forced by the zig-zag equation
    B.unit2[key] = zcell(n, 0, -c(i, -i, i));
  }
  return B;
}

Cocycle3 trivial_cocycle() {
  return [](int, int, int) { return 0; };
}

Cocycle3 nontrivial_cocycle_z2() {
  return [](int h, int g, int f) { return md(h, 2) * md(g, 2) * md(f, 2); };
}

Cocycle3 standard_cocycle(int n) {
  return [n](int h, int g, int f) { return md(md(h, n) * ((md(g, n) + md(f, n)) / n), n); };
}

Pseudofunctor twisted_self_map(int n, const Cocycle3& c, const Cochain2& b) {
  FiniteBigroupoid B = cocycle_fixture(n, c);
  Pseudofunctor F;
  F.source = B;
  F.target = B;
  F.zero_map["*"] = "*";
  F.local[{"*", "*"}] = identity_functor(B.H("*", "*"));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      F.phi_comp[{"*", "*", "*", zone(n, j), zone(n, i)}] = zcell(n, i + j, b(j, i));
  F.phi_unit["*"] = zcell(n, 0, 0);
  for (int i = 0; i < n; ++i)
    F.phi_inv[{"*", "*", zone(n, i)}] = zcell(n, -i, -b(-i, i));
  return F;
}

std::vector<std::vector<std::vector<int>>> normalized_two_cocycles(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  // free slots: b(x,y) for x,y in [1,n)
  int slots = (n - 1) * (n - 1);
  long long total = 1;
  for (int i = 0; i < slots; ++i) total *= n;
  for (long long code = 0; code < total; ++code) {
    std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
    long long rem = code;
    for (int x = 1; x < n; ++x)
      for (int y = 1; y < n; ++y) {
        b[x][y] = static_cast<int>(rem % n);
        rem /= n;
      }
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n && ok; ++z)
          if (md(b[y][z] - b[md(x + y, n)][z] + b[x][md(y + z, n)] - b[x][y], n) != 0) ok = false;
    if (ok) out.push_back(std::move(b));
  }
  return out;
}

FiniteBigroupoid codiscrete_bigroupoid(int k) {
  FiniteBigroupoid B;
  for (int i = 0; i < k; ++i) B.zero_cells.push_back("P" + std::to_string(i));
  auto one = [](const Id& A, const Id& Bb) { return "t(" + A + "," + Bb + ")"; };
  auto two = [&](const Id& A, const Id& Bb) { return "e(" + A + "," + Bb + ")"; };
  for (const auto& A : B.zero_cells)
    for (const auto& Bb : B.zero_cells) {
      FiniteGroupoid G;
      G.objects = {one(A, Bb)};
      G.arrows = {{two(A, Bb), one(A, Bb), one(A, Bb)}};
      G.identity[one(A, Bb)] = two(A, Bb);
      G.compose[{two(A, Bb), two(A, Bb)}] = two(A, Bb);
      G.inverse[two(A, Bb)] = two(A, Bb);
      B.hom[{A, Bb}] = G;
    }
  for (const auto& A : B.zero_cells)
    for (const auto& Bb : B.zero_cells)
      for (const auto& Cc : B.zero_cells) {
        GroupoidFunctor C;
        C.source = product_groupoid(B.H(Bb, Cc), B.H(A, Bb));
        C.target = B.H(A, Cc);
        C.object_map[pair_id(one(Bb, Cc), one(A, Bb))] = one(A, Cc);
        C.arrow_map[pair_id(two(Bb, Cc), two(A, Bb))] = two(A, Cc);
        B.comp[{A, Bb, Cc}] = C;
      }
  for (const auto& A : B.zero_cells) B.unit[A] = one(A, A);
  for (const auto& A : B.zero_cells)
    for (const auto& Bb : B.zero_cells) {
      GroupoidFunctor I;
      I.source = B.H(A, Bb);
      I.target = B.H(Bb, A);
      I.object_map[one(A, Bb)] = one(Bb, A);
      I.arrow_map[two(A, Bb)] = two(Bb, A);
      B.inv[{A, Bb}] = I;
    }
  for (const auto& A : B.zero_cells)
    for (const auto& Bb : B.zero_cells)
      for (const auto& Cc : B.zero_cells)
        for (const auto& D : B.zero_cells)
          B.assoc[{A, Bb, Cc, D, one(Cc, D), one(Bb, Cc), one(A, Bb)}] = two(A, D);
  for (const auto& A : B.zero_cells)
    for (const auto& Bb : B.zero_cells) {
      CellKey key{A, Bb, one(A, Bb)};
      B.lunit[key] = two(A, Bb);
      B.runit[key] = two(A, Bb);
      B.counit[key] = two(A, A);
      B.unit2[key] = two(Bb, Bb);
    }
  return B;
}

FiniteBigroupoid discrete_bigroupoid(int k) {
  FiniteBigroupoid B;
  for (int i = 0; i < k; ++i) B.zero_cells.push_back("P" + std::to_string(i));
  for (const auto& A : B.zero_cells)
    for (const auto& Bb : B.zero_cells) {
      FiniteGroupoid G;
      if (A == Bb) {
        G.objects = {"1"};
        G.arrows = {{"e", "1", "1"}};
        G.identity["1"] = "e";
        G.compose[{"e", "e"}] = "e";
        G.inverse["e"] = "e";
      }
      B.hom[{A, Bb}] = G;
    }
  for (const auto& A : B.zero_cells)
    for (const auto& Bb : B.zero_cells)
      for (const auto& Cc : B.zero_cells) {
        GroupoidFunctor C;
        C.source = product_groupoid(B.H(Bb, Cc), B.H(A, Bb));
        C.target = B.H(A, Cc);
        if (A == Bb && Bb == Cc) {
          C.object_map[pair_id("1", "1")] = "1";
          C.arrow_map[pair_id("e", "e")] = "e";
        }
        B.comp[{A, Bb, Cc}] = C;
      }
  for (const auto& A : B.zero_cells) B.unit[A] = "1";
  for (const auto& A : B.zero_cells)
    for (const auto& Bb : B.zero_cells) {
      GroupoidFunctor I;
      I.source = B.H(A, Bb);
      I.target = B.H(Bb, A);
      if (A == Bb) {
        I.object_map["1"] = "1";
        I.arrow_map["e"] = "e";
      }
      B.inv[{A, Bb}] = I;
    }
  for (const auto& A : B.zero_cells) {
    B.assoc[{A, A, A, A, "1", "1", "1"}] = "e";
    CellKey key{A, A, "1"};
    B.lunit[key] = "e";
    B.runit[key] = "e";
    B.counit[key] = "e";
    B.unit2[key] = "e";
  }
  return B;
}

Pseudofunctor delooping_endo(int n, int k) {
  FiniteBigroupoid B = strict_delooping(n);
  std::map<Id, Id> zm{{"*", "*"}};
  GroupoidFunctor L;
  L.source = B.H("*", "*");
  L.target = B.H("*", "*");
  for (int i = 0; i < n; ++i) {
    L.object_map[zone(n, i)] = zone(n, k * i);
    L.arrow_map["id(" + zone(n, i) + ")"] = "id(" + zone(n, k * i) + ")";
  }
  std::map<std::pair<Id, Id>, GroupoidFunctor> loc{{{"*", "*"}, L}};
  return make_strict(B, B, std::move(zm), std::move(loc));
}

Pseudofunctor unit_inclusion(const FiniteBigroupoid& B, const Id& A) {
  FiniteBigroupoid T = terminal_bigroupoid();
  std::map<Id, Id> zm{{"*", A}};
  GroupoidFunctor L;
  L.source = T.H("*", "*");
  L.target = B.H(A, A);
  L.object_map["1"] = B.unit_at(A);
  L.arrow_map["id"] = B.H(A, A).id_at(B.unit_at(A));
  std::map<std::pair<Id, Id>, GroupoidFunctor> loc{{{"*", "*"}, L}};
  return make_strict(T, B, std::move(zm), std::move(loc));
}

}  // namespace bgm
