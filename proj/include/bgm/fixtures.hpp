#pragma once

#include <functional>

#include "bgm/pseudofunctor.hpp"

namespace bgm {

// Strict delooping of Z/n: one 0-cell "*", 1-cells g0..g{n-1}, identity
// 2-cells only, all tables strict.
FiniteBigroupoid strict_delooping(int n);

// B(Z/n, Z/n, c): one 0-cell; 1-cells = Z/n; 2-cells f -> f = Z/n torsors.
// c must be a normalized 3-cocycle; the i-components are forced by the
// zig-zag equation.
using Cocycle3 = std::function<int(int, int, int)>;
FiniteBigroupoid cocycle_fixture(int n, const Cocycle3& c);

// The nontrivial normalized 3-cocycle on Z/2 (h*g*f), and the standard
// generator a*floor((b+d)/n) on Z/n.
Cocycle3 trivial_cocycle();
Cocycle3 nontrivial_cocycle_z2();
Cocycle3 standard_cocycle(int n);

// Self-map (id, phi_b) of cocycle_fixture(n, c) twisted by a normalized
// 2-cocycle b.
using Cochain2 = std::function<int(int, int)>;
Pseudofunctor twisted_self_map(int n, const Cocycle3& c, const Cochain2& b);

// All normalized 2-cocycles Z/n x Z/n -> Z/n, as value tables indexed by
// (x,y), deterministic order.
std::vector<std::vector<std::vector<int>>> normalized_two_cocycles(int n);

// Strict 2-groupoid with k 0-cells and exactly one cell at every level
// (codiscrete).
FiniteBigroupoid codiscrete_bigroupoid(int k);

// k 0-cells, hom(A,A) = {1_A}, other homs empty.
FiniteBigroupoid discrete_bigroupoid(int k);

// Delooping endomorphism g -> k*g, strict.
Pseudofunctor delooping_endo(int n, int k);

// 0-cell inclusion of the terminal bigroupoid at a 0-cell A of B; requires
// strict units at A (true for all fixtures here).
Pseudofunctor unit_inclusion(const FiniteBigroupoid& B, const Id& A);

// 2-cell names used by the fixtures
Id zcell(int n, int onecell, int label);  // "g<i>#<a>"
Id zone(int n, int onecell);              // "g<i>"

}  // namespace bgm
