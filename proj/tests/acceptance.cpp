// End-to-end acceptance gate: one line per criterion, nonzero exit on any
// failure.  Everything here recomputes its own evidence; nothing is assumed
// from the unit suites.
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "bgm/eval.hpp"
#include "bgm/model.hpp"
#include "corpus.hpp"

using namespace bgm;

namespace {

bool expect(bool& ok, bool cond) {
  ok = ok && cond;
  return cond;
}

Graph two_loops() {
  Graph g;
  g.nodes = {"A"};
  g.edges = {{"f", "A", "A"}, {"g", "A", "A"}};
  return g;
}

Assign loop_assign(const Id& f_img, const Id& g_img) {
  Assign a;
  a.nodes["A"] = "*";
  a.edges["f"] = f_img;
  a.edges["g"] = g_img;
  return a;
}

Term random_term(std::mt19937& rng, int depth) {
  int r = (int)(rng() % 100);
  if (depth <= 0 || r < 35) {
    int s = (int)(rng() % 5);
    if (s == 0) return unit("A");
    return s % 2 ? gen("f") : gen("g");
  }
  if (r < 65) return comp(random_term(rng, depth - 1), random_term(rng, depth - 1));
  return star(random_term(rng, depth - 1));
}

std::vector<NormalWord> one_steps(const NormalWord& w) {
  std::vector<NormalWord> out;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i].edge == w[i + 1].edge && w[i].inv != w[i + 1].inv) {
      NormalWord v = w;
      v.erase(v.begin() + i, v.begin() + i + 2);
      out.push_back(v);
    }
  return out;
}

// --- criteria ---------------------------------------------------------

// every word of length <= 8 over two edges reduces to a unique minimal
// form, and distinct one-step reducts always complete a diamond
bool coherence_confluence() {
  bool ok = true;
  std::vector<Lit> alphabet = {{"a", false}, {"a", true}, {"b", false}, {"b", true}};
  std::map<NormalWord, std::set<NormalWord>> memo;
  std::function<const std::set<NormalWord>&(const NormalWord&)> forms =
      [&](const NormalWord& w) -> const std::set<NormalWord>& {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    std::set<NormalWord> out;
    auto steps = one_steps(w);
    if (steps.empty())
      out.insert(w);
    else
      for (const auto& v : steps) {
        const auto& sub = forms(v);
        out.insert(sub.begin(), sub.end());
      }
    return memo.emplace(w, std::move(out)).first->second;
  };

  std::vector<NormalWord> frontier = {{}};
  for (int len = 1; len <= 8; ++len) {
    std::vector<NormalWord> next;
    for (const auto& w : frontier)
      for (const auto& l : alphabet) {
        NormalWord v = w;
        v.push_back(l);
        next.push_back(v);
      }
    frontier = next;
    for (const auto& w : frontier) {
      expect(ok, forms(w).size() == 1);
      auto steps = one_steps(w);
      for (size_t i = 0; i < steps.size(); ++i)
        for (size_t j = i + 1; j < steps.size(); ++j) {
          if (steps[i] == steps[j]) continue;
          auto si = one_steps(steps[i]), sj = one_steps(steps[j]);
          si.push_back(steps[i]);
          sj.push_back(steps[j]);
          bool met = false;
          for (const auto& x : si)
            for (const auto& y : sj) met = met || x == y;
          expect(ok, met);
        }
    }
  }
  return ok;
}

// >= 500 random parallel pairs: two independently assembled witnesses
// evaluate to the same 2-cell in the twisted and the strict fixture
bool canonical_uniqueness() {
  bool ok = true;
  Graph g = two_loops();
  FiniteBigroupoid B = cocycle_fixture(2, nontrivial_cocycle_z2());
  FiniteBigroupoid S = strict_delooping(2);
  Assign a = loop_assign("g1", "g1");

  std::mt19937 rng(7);
  std::map<std::string, std::vector<Term>> buckets;
  for (int i = 0; i < 2600; ++i) {
    Term u = random_term(rng, 4);
    buckets[print_term(canonical_term(strictify(g, u), "A"))].push_back(u);
  }
  int pairs = 0;
  for (const auto& [key, terms] : buckets)
    for (size_t i = 0; i + 1 < terms.size(); i += 2) {
      const Term &u = terms[i], &v = terms[i + 1];
      auto w1 = canonical_2cell(g, u, v);
      if (!expect(ok, w1.has_value())) continue;
      Witness w2 = winv(g, *canonical_2cell(g, v, u));
      if (i + 2 < terms.size()) {
        const Term& z = terms[i + 2];
        w2 = wvcomp(g, *canonical_2cell(g, z, v), *canonical_2cell(g, u, z));
      }
      expect(ok, eval_2cell(B, g, a, w1->cell) == eval_2cell(B, g, a, w2.cell));
      expect(ok, eval_2cell(S, g, a, w1->cell) == eval_2cell(S, g, a, w2.cell));
      expect(ok, term_eq(w1->src, u) && term_eq(w1->tgt, v));
      ++pairs;
    }
  return expect(ok, pairs >= 500) && ok;
}

// the twisted fixture validates, every single-entry rewiring of its assoc
// table is rejected
bool fixture_validity() {
  bool ok = true;
  FiniteBigroupoid B = cocycle_fixture(2, nontrivial_cocycle_z2());
  expect(ok, validate_bigroupoid(B).ok());
  std::vector<Id> cells;
  for (const auto& ar : B.H("*", "*").arrows) cells.push_back(ar.id);
  for (const auto& [key, old] : B.assoc)
    for (const auto& c : cells) {
      if (c == old) continue;
      FiniteBigroupoid bad = B;
      bad.assoc[key] = c;
      expect(ok, !validate_bigroupoid(bad).ok());
    }
  return ok;
}

bool wfs1_factorization() {
  bool ok = true;
  auto maps = corpus::desk_maps();
  expect(ok, maps.size() >= 50);
  for (const auto& m : maps) {
    Factorization f = factor_cof_trivfib(m);
    expect(ok, classify(f.first).is_cofibration);
    expect(ok, classify(f.second).is_trivial_fibration);
    expect(ok, f.second.is_strict());
    expect(ok, compose_pseudofunctors(f.second, f.first) == m);
    expect(ok, f.middle.zero_cells.size() ==
                   m.source.zero_cells.size() + m.target.zero_cells.size());
  }
  return ok;
}

bool wfs2_factorization() {
  bool ok = true;
  int done = 0;
  for (const auto& m : corpus::desk_maps()) {
    PathObjectResult po = path_object(m.target);
    PullbackResult pb = pullback_fibration(po.S, m);
    Pseudofunctor G = mediate(pb, identity_pseudofunctor(m.source),
                              compose_pseudofunctors(po.R, m));
    Pseudofunctor H = compose_pseudofunctors(po.T, pb.R);
    expect(ok, compose_pseudofunctors(pb.P, G) == identity_pseudofunctor(m.source));
    expect(ok, classify(G).is_trivial_cofibration);
    expect(ok, classify(H).is_fibration);
    expect(ok, compose_pseudofunctors(H, G) == m);
    Factorization f = factor_trivcof_fib(m);
    expect(ok, f.first == G);
    expect(ok, f.second == H);
    ++done;
  }
  return expect(ok, done >= 50) && ok;
}

bool lifting() {
  bool ok = true;
  auto maps = corpus::desk_maps();

  int solved1 = 0;
  for (const auto& m : maps) {
    Factorization f = factor_cof_trivfib(m);
    LiftingSquare sq{f.first, f.first, f.second, f.second};
    Pseudofunctor L = lift_cof_trivfib(sq);
    expect(ok, compose_pseudofunctors(L, sq.left) == sq.top);
    expect(ok, compose_pseudofunctors(sq.right, L) == sq.bottom);
    ++solved1;
  }
  expect(ok, solved1 >= 50);

  std::vector<const Pseudofunctor*> trivcofs, fibs;
  for (const auto& m : maps) {
    Classification c = classify(m);
    if (c.is_trivial_cofibration) trivcofs.push_back(&m);
    if (c.is_fibration) fibs.push_back(&m);
  }
  int solved2 = 0;
  for (const auto* K : trivcofs)
    for (const auto& D : maps) {
      if (solved2 >= 50) break;
      if (!(D.source == K->target)) continue;
      for (const auto* Gf : fibs) {
        if (solved2 >= 50) break;
        if (!(Gf->source == D.target)) continue;
        LiftingSquare sq{compose_pseudofunctors(D, *K), *K, *Gf,
                         compose_pseudofunctors(*Gf, D)};
        Pseudofunctor L = lift_trivcof_fib(sq);
        expect(ok, compose_pseudofunctors(L, sq.left) == sq.top);
        expect(ok, compose_pseudofunctors(sq.right, L) == sq.bottom);
        ++solved2;
      }
    }
  expect(ok, solved2 >= 50);

  Pseudofunctor bad = delooping_endo(2, 0);
  Pseudofunctor idb = identity_pseudofunctor(bad.target);
  auto rejected = [](std::function<void()> f) {
    try {
      f();
    } catch (const PreconditionError&) {
      return true;
    } catch (...) {
      return false;
    }
    return false;
  };
  expect(ok, rejected([&] { lift_cof_trivfib({bad, bad, idb, idb}); }));
  expect(ok, rejected([&] { lift_cof_trivfib({idb, idb, bad, bad}); }));
  expect(ok, rejected([&] { lift_trivcof_fib({bad, bad, idb, idb}); }));
  expect(ok, rejected([&] { lift_trivcof_fib({idb, idb, bad, bad}); }));
  return ok;
}

bool path_objects() {
  bool ok = true;
  for (const auto& B : corpus::small_bigroupoids()) {
    PathObjectResult po = path_object(B);
    expect(ok, validate_bigroupoid(po.PB).ok());
    expect(ok, compose_pseudofunctors(po.st, po.R) == diagonal(B));
    expect(ok, classify(po.R).is_weak_equivalence);
    expect(ok, classify(po.st).is_fibration);
  }
  return ok;
}

bool pullback_universal() {
  bool ok = true;
  Pseudofunctor F = terminal_and_bang(strict_delooping(2)).bang;
  Pseudofunctor G = terminal_and_bang(discrete_bigroupoid(2)).bang;
  PullbackResult pb = pullback_fibration(F, G);

  Pseudofunctor T = unit_inclusion(strict_delooping(2), "*");
  Pseudofunctor S = unit_inclusion(discrete_bigroupoid(2), "P1");
  Pseudofunctor L = mediate(pb, S, T);
  expect(ok, compose_pseudofunctors(pb.P, L) == S);
  expect(ok, compose_pseudofunctors(pb.R, L) == T);

  FiniteBigroupoid Z = terminal_bigroupoid();
  Id z0 = Z.zero_cells.front();
  Id z1 = Z.unit_at(z0);
  Id za = Z.H(z0, z0).arrows.front().id;
  int found = 0;
  for (const auto& u : pb.A.zero_cells) {
    const FiniteGroupoid& H = pb.A.H(u, u);
    for (const auto& o : H.objects) {
      Pseudofunctor cand;
      cand.source = Z;
      cand.target = pb.A;
      cand.zero_map[z0] = u;
      GroupoidFunctor loc;
      loc.source = Z.H(z0, z0);
      loc.target = H;
      loc.object_map[z1] = o;
      loc.arrow_map[za] = H.id_at(o);
      cand.local[{z0, z0}] = loc;
      for (const auto& c : H.arrows_from_to(pb.A.c1(u, u, u, o, o), o))
        for (const auto& pu : H.arrows_from_to(pb.A.unit_at(u), o))
          for (const auto& pi : H.arrows_from_to(pb.A.star1(u, u, o), o)) {
            cand.phi_comp[{z0, z0, z0, z1, z1}] = c;
            cand.phi_unit[z0] = pu;
            cand.phi_inv[{z0, z0, z1}] = pi;
            if (!validate_pseudofunctor(cand).ok()) continue;
            if (!(compose_pseudofunctors(pb.P, cand) == S)) continue;
            if (!(compose_pseudofunctors(pb.R, cand) == T)) continue;
            expect(ok, cand == L);
            ++found;
          }
    }
  }
  return expect(ok, found == 1) && ok;
}

bool model_axioms() {
  bool ok = true;
  auto maps = corpus::desk_maps();

  // 2-out-of-3 over every composable corpus pair
  for (const auto& f : maps)
    for (const auto& g : maps) {
      if (!(g.source == f.target)) continue;
      bool wf = classify(f).is_weak_equivalence;
      bool wg = classify(g).is_weak_equivalence;
      bool wgf = classify(compose_pseudofunctors(g, f)).is_weak_equivalence;
      if (wf && wg) expect(ok, wgf);
      if (wf && wgf) expect(ok, wg);
      if (wg && wgf) expect(ok, wf);
      if ((int)(&f - maps.data()) % 7 == 0 && classify(f).is_fibration &&
          classify(g).is_fibration)
        expect(ok, classify(compose_pseudofunctors(g, f)).is_fibration);
    }

  // fibrations are closed under pullback
  {
    PathObjectResult po = path_object(strict_delooping(2));
    PullbackResult pb = pullback_fibration(po.st, diagonal(strict_delooping(2)));
    expect(ok, classify(pb.P).is_fibration);
    PullbackResult pb2 =
        pullback_fibration(terminal_and_bang(strict_delooping(2)).bang,
                           terminal_and_bang(discrete_bigroupoid(2)).bang);
    expect(ok, classify(pb2.P).is_fibration);
  }

  // split monomorphisms are cofibrations
  {
    PathObjectResult po = path_object(strict_delooping(2));
    expect(ok, compose_pseudofunctors(po.S, po.R) ==
                   identity_pseudofunctor(strict_delooping(2)));
    expect(ok, classify(po.R).is_cofibration);
    Pseudofunctor inc = unit_inclusion(cocycle_fixture(2, trivial_cocycle()), "*");
    expect(ok, compose_pseudofunctors(terminal_and_bang(inc.target).bang, inc) ==
                   identity_pseudofunctor(inc.source));
    expect(ok, classify(inc).is_cofibration);
  }

  // retract closure: F is a retract of R.F and of F.S through the path object
  {
    PathObjectResult po = path_object(strict_delooping(2));
    auto check_retract = [&](const Pseudofunctor& whole, const Pseudofunctor& part) {
      Classification cw = classify(whole), cp = classify(part);
      if (cw.is_fibration) expect(ok, cp.is_fibration);
      if (cw.is_cofibration) expect(ok, cp.is_cofibration);
      if (cw.is_weak_equivalence) expect(ok, cp.is_weak_equivalence);
    };
    for (const auto& F :
         {identity_pseudofunctor(strict_delooping(2)), delooping_endo(2, 1),
          delooping_endo(2, 0), unit_inclusion(strict_delooping(2), "*")})
      check_retract(compose_pseudofunctors(po.R, F), F);
    for (const auto& F : {delooping_endo(2, 1), delooping_endo(2, 0)})
      check_retract(compose_pseudofunctors(F, po.S), F);
  }
  return ok;
}

// triangle identities, star-of-2-cell mate, the u-triangles, and the
// defining square of the derived b cell, in a twisted and a strict fixture
bool derived_identities() {
  bool ok = true;
  Graph g = two_loops();
  Term f = gen("f"), gg = gen("g");
  for (const FiniteBigroupoid& B :
       {cocycle_fixture(2, nontrivial_cocycle_z2()), strict_delooping(2)}) {
    Assign a = loop_assign("g1", "g1");
    Id ef = a.edges.at("f");

    Witness t1 = winv(g, wit(g, c_lunit(f)));
    t1 = wvcomp(g, whcomp(g, wit(g, c_unit2(f)), wid(g, f)), t1);
    t1 = wvcomp(g, wit(g, c_assoc(f, star(f), f)), t1);
    t1 = wvcomp(g, whcomp(g, wid(g, f), wit(g, c_counit(f))), t1);
    t1 = wvcomp(g, wit(g, c_runit(f)), t1);
    expect(ok, eval_2cell(B, g, a, t1.cell) == B.H("*", "*").id_at(ef));

    Witness t2 = winv(g, wit(g, c_runit(star(f))));
    t2 = wvcomp(g, whcomp(g, wid(g, star(f)), wit(g, c_unit2(f))), t2);
    t2 = wvcomp(g, winv(g, wit(g, c_assoc(star(f), f, star(f)))), t2);
    t2 = wvcomp(g, whcomp(g, wit(g, c_counit(f)), wid(g, star(f))), t2);
    t2 = wvcomp(g, wit(g, c_lunit(star(f))), t2);
    expect(ok, eval_2cell(B, g, a, t2.cell) ==
                   B.H("*", "*").id_at(B.star1("*", "*", ef)));

    for (const auto& t : {c_counit(f), c_lunit(f), c_assoc(f, gg, f)}) {
      Witness wt = wit(g, t);
      Term u = wt.src, v = wt.tgt;
      Witness m = winv(g, wit(g, c_lunit(star(u))));
      m = wvcomp(g, whcomp(g, winv(g, wit(g, c_counit(v))), wid(g, star(u))), m);
      m = wvcomp(g, wit(g, c_assoc(star(v), v, star(u))), m);
      m = wvcomp(g, whcomp(g, wid(g, star(v)), whcomp(g, winv(g, wt), wid(g, star(u)))), m);
      m = wvcomp(g, whcomp(g, wid(g, star(v)), winv(g, wit(g, c_unit2(u)))), m);
      m = wvcomp(g, wit(g, c_runit(star(v))), m);
      expect(ok, eval_2cell(B, g, a, c_star_cell(t)) == eval_2cell(B, g, a, m.cell));
    }

    Witness l1 = winv(g, wit(g, c_counit(star(f))));
    l1 = wvcomp(g, whcomp(g, wit(g, c_double_star(f)), wid(g, star(f))), l1);
    expect(ok, eval_2cell(B, g, a, l1.cell) == eval_2cell(B, g, a, c_unit2(f)));

    Witness l2 = wit(g, c_unit2(star(f)));
    l2 = wvcomp(g, whcomp(g, wid(g, star(f)), wit(g, c_double_star(f))), l2);
    expect(ok, eval_2cell(B, g, a, l2.cell) == eval_2cell(B, g, a, c_inv(c_counit(f))));

    Witness lhs = wit(g, c_counit(comp(gg, f)));
    Witness rhs = whcomp(g, wit(g, c_star_comp(f, gg)), wid(g, comp(gg, f)));
    Term mid = comp(star(f), comp(comp(star(gg), gg), f));
    rhs = wvcomp(g, reassoc_witness(g, rhs.tgt, mid), rhs);
    Witness inner =
        wvcomp(g, wit(g, c_lunit(f)), whcomp(g, wit(g, c_counit(gg)), wid(g, f)));
    rhs = wvcomp(g, whcomp(g, wid(g, star(f)), inner), rhs);
    rhs = wvcomp(g, wit(g, c_counit(f)), rhs);
    expect(ok, term_eq(lhs.src, rhs.src) && term_eq(lhs.tgt, rhs.tgt));
    expect(ok, eval_2cell(B, g, a, lhs.cell) == eval_2cell(B, g, a, rhs.cell));
  }
  return ok;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    bool (*fn)();
  };
  const Criterion criteria[] = {
      {"coherence confluence: length <= 8 words over 2 edges", coherence_confluence},
      {"canonical uniqueness: >= 500 random parallel pairs", canonical_uniqueness},
      {"fixture validity: pentagon perturbations rejected", fixture_validity},
      {"factorization WFS #1: cofibration . strict trivial fibration", wfs1_factorization},
      {"factorization WFS #2: trivial cofibration . fibration, P.G = id", wfs2_factorization},
      {"lifting: >= 50 round-trip squares per WFS, class errors", lifting},
      {"path object: valid, <S,T>.R = diagonal, R we, <S,T> fibration", path_objects},
      {"pullback universal property: mediator exact and unique", pullback_universal},
      {"model axioms: 2-of-3, retracts, closure, split monos", model_axioms},
      {"derived identities: triangles, mate, u-triangles, b square", derived_identities},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    bool ok = false;
    try {
      ok = c.fn();
    } catch (const std::exception& e) {
      std::fprintf(stderr, "  (%s threw: %s)\n", c.name, e.what());
      ok = false;
    }
    std::printf("%s: %s\n", ok ? "PASS" : "FAIL", c.name);
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
