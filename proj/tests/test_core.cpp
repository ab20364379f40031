#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bgm/fixtures.hpp"

using namespace bgm;

TEST_CASE("groupoid validator accepts products and rejects broken tables") {
  FiniteGroupoid G = strict_delooping(3).H("*", "*");
  CHECK(validate_groupoid(G).ok());
  CHECK(validate_groupoid(product_groupoid(G, G)).ok());
  FiniteGroupoid bad = G;
  bad.inverse["id(g1)"] = "id(g2)";  // wrong inverse endpoint
  CHECK_FALSE(validate_groupoid(bad).ok());
}

TEST_CASE("strict delooping of Z/2 is a bigroupoid") {
  CHECK(validate_bigroupoid(strict_delooping(2)).ok());
  CHECK(validate_bigroupoid(strict_delooping(3)).ok());
}

TEST_CASE("terminal, discrete and codiscrete fixtures are bigroupoids") {
  CHECK(validate_bigroupoid(terminal_bigroupoid()).ok());
  CHECK(validate_bigroupoid(discrete_bigroupoid(2)).ok());
  CHECK(validate_bigroupoid(codiscrete_bigroupoid(2)).ok());
}

TEST_CASE("cocycle fixture validity and cocycle condition oracle") {
  // independent oracle: the coboundary of c vanishes
  auto c = nontrivial_cocycle_z2();
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z)
        for (int w = 0; w < 2; ++w)
          CHECK((c(y, z, w) + c((x + y) % 2, z, w) + c(x, (y + z) % 2, w) +
                 c(x, y, (z + w) % 2) + c(x, y, z)) % 2 == 0);
  CHECK(validate_bigroupoid(cocycle_fixture(2, c)).ok());
  CHECK(validate_bigroupoid(cocycle_fixture(2, trivial_cocycle())).ok());
  CHECK(validate_bigroupoid(cocycle_fixture(3, standard_cocycle(3))).ok());
}

TEST_CASE("every single assoc perturbation of the cocycle fixture is rejected") {
  FiniteBigroupoid B = cocycle_fixture(2, nontrivial_cocycle_z2());
  int pentagon_hits = 0;
  for (const auto& [key, cell] : B.assoc) {
    FiniteBigroupoid bad = B;
    // replace by the other element of the torsor
    const Arrow& a = B.H("*", "*").arrow(cell);
    for (const auto& cand : B.H("*", "*").arrows_from_to(a.src, a.tgt))
      if (cand != cell) bad.assoc[key] = cand;
    ValidationReport rep = validate_bigroupoid(bad);
    CHECK_FALSE(rep.ok());
    for (const auto& v : rep.violations)
      if (v.axiom == "pentagon") { ++pentagon_hits; break; }
  }
  CHECK(pentagon_hits >= 7);  // the xyz-perturbation is caught by the zig-zag instead
}

TEST_CASE("validate_pseudofunctor: identities, strict maps, twisted self-maps") {
  FiniteBigroupoid B = cocycle_fixture(2, nontrivial_cocycle_z2());
  CHECK(validate_pseudofunctor(identity_pseudofunctor(B)).ok());
  CHECK(identity_pseudofunctor(B).is_strict());
  CHECK(validate_pseudofunctor(delooping_endo(3, 2)).ok());
  CHECK(validate_pseudofunctor(unit_inclusion(B, "*")).ok());

  auto twists = normalized_two_cocycles(2);
  CHECK(twists.size() == 2);
  for (const auto& b : twists) {
    Pseudofunctor F = twisted_self_map(2, nontrivial_cocycle_z2(),
                                       [&](int x, int y) { return b[(x % 2 + 2) % 2][(y % 2 + 2) % 2]; });
    CHECK(validate_pseudofunctor(F).ok());
  }
  // a perturbed phi_comp breaks the hexagon
  Pseudofunctor F = twisted_self_map(2, nontrivial_cocycle_z2(), [](int, int) { return 0; });
  F.phi_comp[{"*", "*", "*", "g1", "g0"}] = zcell(2, 1, 1);
  ValidationReport rep = validate_pseudofunctor(F);
  CHECK_FALSE(rep.ok());
  bool hex = false;
  for (const auto& v : rep.violations) hex = hex || v.axiom == "hexagon";
  CHECK(hex);
}

TEST_CASE("composition of pseudofunctors") {
  FiniteBigroupoid B = cocycle_fixture(2, nontrivial_cocycle_z2());
  Pseudofunctor id = identity_pseudofunctor(B);
  auto twists = normalized_two_cocycles(2);
  Pseudofunctor F = twisted_self_map(2, nontrivial_cocycle_z2(),
                                     [&](int x, int y) {
                                       return twists[1][((x % 2) + 2) % 2][((y % 2) + 2) % 2];
                                     });
  CHECK(compose_pseudofunctors(id, F) == F);
  CHECK(compose_pseudofunctors(F, id) == F);
  Pseudofunctor FF = compose_pseudofunctors(F, F);
  CHECK(validate_pseudofunctor(FF).ok());
  // strict . strict is strict
  CHECK(compose_pseudofunctors(delooping_endo(3, 2), delooping_endo(3, 2)).is_strict());
  // associativity on data
  CHECK(compose_pseudofunctors(compose_pseudofunctors(F, F), F) ==
        compose_pseudofunctors(F, compose_pseudofunctors(F, F)));
}

TEST_CASE("icons") {
  FiniteBigroupoid B = cocycle_fixture(2, nontrivial_cocycle_z2());
  Pseudofunctor id = identity_pseudofunctor(B);
  Icon ic;
  ic.source = id;
  ic.target = id;
  ic.components[{"*", "*"}] = identity_nat_iso(id.L("*", "*"));
  CHECK(validate_icon(ic).ok());
  Icon bad = ic;
  bad.target = twisted_self_map(2, nontrivial_cocycle_z2(),
                                [](int x, int y) { return x * y; });
  ValidationReport rep = validate_icon(bad);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("products, diagonal, terminal") {
  FiniteBigroupoid D = strict_delooping(2);
  ProductResult pr = product_bigroupoid(D, D);
  CHECK(validate_bigroupoid(pr.product).ok());
  CHECK(pr.product.H(pair_id("*", "*"), pair_id("*", "*")).objects.size() == 4);
  CHECK(validate_pseudofunctor(pr.proj1).ok());
  CHECK(validate_pseudofunctor(pr.proj2).ok());
  Pseudofunctor d = diagonal(D);
  CHECK(validate_pseudofunctor(d).ok());
  CHECK(compose_pseudofunctors(pr.proj1, d) == identity_pseudofunctor(D));
  CHECK(compose_pseudofunctors(pr.proj2, d) == identity_pseudofunctor(D));

  ProductResult p1 = product_bigroupoid(terminal_bigroupoid(), D);
  CHECK(p1.product.zero_cells.size() == D.zero_cells.size());
  CHECK(p1.product.H(pair_id("*", "*"), pair_id("*", "*")).objects.size() ==
        D.H("*", "*").objects.size());

  TerminalResult t = terminal_and_bang(D);
  CHECK(validate_pseudofunctor(t.bang).ok());
  TerminalResult tt = terminal_and_bang(t.terminal);
  CHECK(tt.bang == identity_pseudofunctor(t.terminal));
}
