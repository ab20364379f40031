#pragma once

#include "bgm/eval.hpp"
#include "bgm/gpd.hpp"

namespace bgm {

struct Classification {
  bool is_fibration = false;
  bool is_cofibration = false;
  bool is_weak_equivalence = false;
  bool is_trivial_fibration = false;    // fibration && weak equivalence
  bool is_trivial_cofibration = false;  // cofibration && weak equivalence
};

struct LiftingSquare {
  Pseudofunctor top, left, right, bottom;  // right.top = bottom.left as data
};

struct Factorization {
  FiniteBigroupoid middle;
  Pseudofunctor first, second;  // second . first = original
  Classification first_flags, second_flags;
};

// R: B -> PB, S/T: PB -> B, st = <S,T>: PB -> B x B into prod.product.
struct PathObjectResult {
  FiniteBigroupoid PB;
  Pseudofunctor R, S, T, st;
  ProductResult prod;
};

// P strict; F.R = G.P as data.  F and G are kept for the mediator.
struct PullbackResult {
  FiniteBigroupoid A;
  Pseudofunctor P, R;
  Pseudofunctor F, G;
};

Classification classify(const Pseudofunctor& F);

Factorization factor_cof_trivfib(const Pseudofunctor& F);
Factorization factor_trivcof_fib(const Pseudofunctor& F);

// Diagonals making both triangles equalities of data.
Pseudofunctor lift_cof_trivfib(const LiftingSquare& sq);
Pseudofunctor lift_trivcof_fib(const LiftingSquare& sq);

PullbackResult pullback_fibration(const Pseudofunctor& F, const Pseudofunctor& G);
// Unique N with P.N = S and R.N = T, for a cone F.T = G.S.
Pseudofunctor mediate(const PullbackResult& pb, const Pseudofunctor& S, const Pseudofunctor& T);

PathObjectResult path_object(const FiniteBigroupoid& B);

// K = H.G with G surjective on 0-cells and H the strict inclusion of the
// full sub-bigroupoid on the image 0-cells.
std::pair<Pseudofunctor, Pseudofunctor> split_trivcofib(const Pseudofunctor& K);

}  // namespace bgm
