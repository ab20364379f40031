#pragma once

#include "bgm/bigroupoid.hpp"

namespace bgm {

using PhiCompKey = std::tuple<Id, Id, Id, Id, Id>;  // (A,B,C, g,f)

struct Pseudofunctor {
  FiniteBigroupoid source, target;
  std::map<Id, Id> zero_map;
  std::map<std::pair<Id, Id>, GroupoidFunctor> local;
  // phi_{g,f}: Fg Ff -> F(g f), in hom(FA,FC)
  std::map<PhiCompKey, Id> phi_comp;
  // phi_A: 1_{FA} -> F(1_A)
  std::map<Id, Id> phi_unit;
  // phi_f: (Ff)* -> F(f*), in hom(FB,FA)
  std::map<CellKey, Id> phi_inv;

  Id on0(const Id& A) const;
  const GroupoidFunctor& L(const Id& A, const Id& B) const;
  Id on1(const Id& A, const Id& B, const Id& f) const;
  Id on2(const Id& A, const Id& B, const Id& alpha) const;
  Id pc(const Id& A, const Id& B, const Id& Cc, const Id& g, const Id& f) const;
  Id pu(const Id& A) const;
  Id pi(const Id& A, const Id& B, const Id& f) const;
  bool is_strict() const;

  friend bool operator==(const Pseudofunctor&, const Pseudofunctor&) = default;
};

struct Icon {
  Pseudofunctor source, target;  // must agree on 0-cells
  std::map<std::pair<Id, Id>, NatIso> components;

  friend bool operator==(const Icon&, const Icon&) = default;
};

ValidationReport validate_pseudofunctor(const Pseudofunctor& F);
ValidationReport validate_icon(const Icon& a);

Pseudofunctor identity_pseudofunctor(const FiniteBigroupoid& B);
Pseudofunctor compose_pseudofunctors(const Pseudofunctor& G, const Pseudofunctor& F);

// Fills the phi tables with identities; the underlying maps must preserve
// composition, units and inverses on the nose.
Pseudofunctor make_strict(const FiniteBigroupoid& src, const FiniteBigroupoid& tgt,
                          std::map<Id, Id> zero_map,
                          std::map<std::pair<Id, Id>, GroupoidFunctor> local);

struct ProductResult {
  FiniteBigroupoid product;
  Pseudofunctor proj1, proj2;
};

ProductResult product_bigroupoid(const FiniteBigroupoid& B, const FiniteBigroupoid& C);
Pseudofunctor diagonal(const FiniteBigroupoid& B);  // B -> B x B, strict

struct TerminalResult {
  FiniteBigroupoid terminal;
  Pseudofunctor bang;
};

FiniteBigroupoid terminal_bigroupoid();
TerminalResult terminal_and_bang(const FiniteBigroupoid& B);

}  // namespace bgm
