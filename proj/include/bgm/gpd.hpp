#pragma once

#include "bgm/core.hpp"

namespace bgm {

struct GpdSquare {
  GroupoidFunctor top, left, right, bottom;  // right.top = bottom.left as data
};

struct GpdClassification {
  bool is_fibration = false;
  bool is_cofibration = false;
  bool is_weak_equivalence = false;
};

enum class GpdWfs { cof_trivfib, trivcof_fib };

GpdClassification gpd_classify(const GroupoidFunctor& F);

// H.G = F as data; cof_trivfib: (injective on objects, surjective equivalence
// full+faithful); trivcof_fib: (equivalence injective on objects, isofibration)
std::pair<GroupoidFunctor, GroupoidFunctor> gpd_factor(const GroupoidFunctor& F, GpdWfs which);

// Diagonal making both triangles commute as data.  Throws PreconditionError
// when the vertical maps are not in the advertised classes.
GroupoidFunctor gpd_lift(const GpdSquare& sq, GpdWfs which);

// Pseudo-inverse data for an equivalence F: A -> B.
struct EquivalenceInverse {
  GroupoidFunctor G;   // B -> A
  NatIso eta;          // id_A => G.F
  NatIso eps;          // F.G => id_B
};
EquivalenceInverse pseudo_inverse(const GroupoidFunctor& F);

// Lemma: unique beta: H => K with F(beta) = alpha, F an equivalence.
NatIso transport_post(const GroupoidFunctor& F, const GroupoidFunctor& H,
                      const GroupoidFunctor& K, const NatIso& alpha);

// Lemma: unique beta: H => K with beta G = alpha, G an equivalence.
NatIso transport_pre(const GroupoidFunctor& G, const GroupoidFunctor& H,
                     const GroupoidFunctor& K, const NatIso& alpha);

// Lemma: F' with G.F' = H and alpha: F' => F with G(alpha) = beta,
// given beta: H => G.F and G an isofibration.
std::pair<GroupoidFunctor, NatIso> fibration_lift_up_to_iso(const GroupoidFunctor& F,
                                                            const GroupoidFunctor& H,
                                                            const GroupoidFunctor& G,
                                                            const NatIso& beta);

// Brute-force enumeration, capped; throws PreconditionError above the cap.
std::vector<NatIso> enumerate_nat_isos(const GroupoidFunctor& H, const GroupoidFunctor& K,
                                       long long cap = 2000000);

// Horizontal composites of natural transformations with functors.
NatIso whisker_functor_pre(const NatIso& alpha, const GroupoidFunctor& F);   // alpha F
NatIso whisker_functor_post(const GroupoidFunctor& F, const NatIso& alpha);  // F alpha
NatIso vcomp_nat_isos(const NatIso& after, const NatIso& before);

}  // namespace bgm
