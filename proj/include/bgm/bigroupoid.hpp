#pragma once

#include "bgm/core.hpp"

namespace bgm {

// Component table keys.  1-cell names are only unique per hom pair, so every
// key carries its 0-cell context.
using CellKey = std::tuple<Id, Id, Id>;                        // (A, B, f)
using AssocKey = std::tuple<Id, Id, Id, Id, Id, Id, Id>;       // (A,B,C,D, h,g,f)

struct FiniteBigroupoid {
  std::vector<Id> zero_cells;
  std::map<std::pair<Id, Id>, FiniteGroupoid> hom;
  // comp[(A,B,C)]: hom(B,C) x hom(A,B) -> hom(A,C), pair objects (g,f)
  std::map<std::tuple<Id, Id, Id>, GroupoidFunctor> comp;
  std::map<Id, Id> unit;                                 // A -> object of hom(A,A)
  std::map<std::pair<Id, Id>, GroupoidFunctor> inv;      // hom(A,B) -> hom(B,A)
  std::map<AssocKey, Id> assoc;   // a_{h,g,f}: (h g) f -> h (g f), in hom(A,D)
  std::map<CellKey, Id> lunit;    // l_f: 1_B f -> f
  std::map<CellKey, Id> runit;    // r_f: f 1_A -> f
  std::map<CellKey, Id> counit;   // e_f: f* f -> 1_A, in hom(A,A)
  std::map<CellKey, Id> unit2;    // i_f: 1_B -> f f*, in hom(B,B)

  bool has_zero(const Id& A) const;
  const FiniteGroupoid& H(const Id& A, const Id& B) const;
  const GroupoidFunctor& C(const Id& A, const Id& B, const Id& Cc) const;
  const GroupoidFunctor& I(const Id& A, const Id& B) const;
  Id unit_at(const Id& A) const;

  // composite 1-cell g f (f: A->B first, g: B->C)
  Id c1(const Id& A, const Id& B, const Id& Cc, const Id& g, const Id& f) const;
  // horizontal composite of 2-cells
  Id c2(const Id& A, const Id& B, const Id& Cc, const Id& beta, const Id& alpha) const;
  // whiskers: wl = id_g * alpha, wr = beta * id_f
  Id wl(const Id& A, const Id& B, const Id& Cc, const Id& g, const Id& alpha) const;
  Id wr(const Id& A, const Id& B, const Id& Cc, const Id& beta, const Id& f) const;
  // vertical composite in hom(A,B)
  Id v(const Id& A, const Id& B, const Id& after, const Id& before) const;
  Id star1(const Id& A, const Id& B, const Id& f) const;
  Id star2(const Id& A, const Id& B, const Id& alpha) const;

  Id a_at(const Id& A, const Id& B, const Id& Cc, const Id& D,
          const Id& h, const Id& g, const Id& f) const;
  Id l_at(const Id& A, const Id& B, const Id& f) const;
  Id r_at(const Id& A, const Id& B, const Id& f) const;
  Id e_at(const Id& A, const Id& B, const Id& f) const;
  Id i_at(const Id& A, const Id& B, const Id& f) const;

  friend bool operator==(const FiniteBigroupoid&, const FiniteBigroupoid&) = default;
};

ValidationReport validate_bigroupoid(const FiniteBigroupoid& B);

}  // namespace bgm
