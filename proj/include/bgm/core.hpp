#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace bgm {

using Id = std::string;

// Dangling table references, malformed input, endpoint mismatches of
// hand-built composites.  Distinct from axiom violations, which are
// collected in a ValidationReport.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A solver was called outside its advertised class (e.g. lifting against a
// map that is not a fibration).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal stage invariant of a construction failed; indicates a bug,
// never raised on valid certified inputs.
struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Id pair_id(const Id& a, const Id& b) { return "(" + a + "," + b + ")"; }

struct Arrow {
  Id id, src, tgt;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

struct Violation {
  std::string axiom;
  std::vector<Id> cells;
  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string axiom, std::vector<Id> cells) {
    violations.push_back({std::move(axiom), std::move(cells)});
  }
  // Imports r's violations with their axiom tags prefixed.
  void merge(const ValidationReport& r, const std::string& prefix);
};

struct FiniteGroupoid {
  std::vector<Id> objects;
  std::vector<Arrow> arrows;
  std::map<Id, Id> identity;                // object -> arrow
  std::map<std::pair<Id, Id>, Id> compose;  // (after, before) -> after.before
  std::map<Id, Id> inverse;

  bool has_object(const Id& x) const;
  bool has_arrow(const Id& a) const;
  const Arrow& arrow(const Id& a) const;
  Id id_at(const Id& x) const;
  Id comp(const Id& after, const Id& before) const;
  Id inv(const Id& a) const;
  std::vector<Id> arrows_from_to(const Id& x, const Id& y) const;

  friend bool operator==(const FiniteGroupoid&, const FiniteGroupoid&) = default;
};

struct GroupoidFunctor {
  FiniteGroupoid source, target;
  std::map<Id, Id> object_map;
  std::map<Id, Id> arrow_map;

  Id on_obj(const Id& x) const;
  Id on_arr(const Id& a) const;

  friend bool operator==(const GroupoidFunctor&, const GroupoidFunctor&) = default;
};

struct NatIso {
  GroupoidFunctor source, target;  // parallel functors
  std::map<Id, Id> components;     // object of source.source -> arrow of source.target

  Id at(const Id& x) const;

  friend bool operator==(const NatIso&, const NatIso&) = default;
};

ValidationReport validate_groupoid(const FiniteGroupoid& G);
ValidationReport validate_functor(const GroupoidFunctor& F);
ValidationReport validate_nat_iso(const NatIso& n);

// Objects and arrows are pair_id pairs, first component from G1.
FiniteGroupoid product_groupoid(const FiniteGroupoid& G1, const FiniteGroupoid& G2);

GroupoidFunctor identity_functor(const FiniteGroupoid& G);
GroupoidFunctor compose_functors(const GroupoidFunctor& G, const GroupoidFunctor& F);
// Functor between product groupoids acting as F1 x F2 on pairs.
GroupoidFunctor product_functor(const GroupoidFunctor& F1, const GroupoidFunctor& F2);

NatIso identity_nat_iso(const GroupoidFunctor& F);
NatIso inverse_nat_iso(const NatIso& n);

// Unique arrow x -> y of F.source whose F-image is b; requires F locally
// injective there (F faithful).  Throws ConstructionError when no or
// several preimages exist.
Id ff_preimage(const GroupoidFunctor& F, const Id& x, const Id& y, const Id& b);

}  // namespace bgm
