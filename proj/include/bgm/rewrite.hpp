#pragma once

#include <optional>

#include "bgm/term.hpp"

namespace bgm {

// Reduced word in the free groupoid on the edges; inv marks orientation.
struct Lit {
  Id edge;
  bool inv = false;
  friend auto operator<=>(const Lit&, const Lit&) = default;
};
using NormalWord = std::vector<Lit>;

// Image in the locally discrete free 2-groupoid: expand Star as an
// orientation-reversing anti-homomorphism, drop units, cancel.
NormalWord strictify(const Graph& g, const Term& u);

// Parallel terms are connected by a canonical 2-cell iff they strictify
// to the same word.  Throws StructuralError when u, v are not parallel.
bool has_canonical_2cell(const Graph& g, const Term& u, const Term& v);

// Left-associated term of a word, starting at the given node when empty.
Term canonical_term(const NormalWord& w, const Id& node_if_empty);

// R of Construction A: deletes superfluous units and pushes Star to the
// letters; rho is identity (literally Id) on R-fixed terms.
struct RewriteResult {
  Term ru;
  Witness rho;
};
RewriteResult rewrite_R(const Graph& g, const Term& u);

// Leftmost (in application order) simple reduction of an R-fixed term to
// its unique minimal form.  lengths traces the edge count after each step.
struct NormalizeResult {
  Term m;
  Witness w;
  std::vector<int> lengths;
};
NormalizeResult normalize(const Graph& g, const Term& u);

// Witness u -> v through the shared normal form, or nothing when the
// strictifications differ.  Throws StructuralError on non-parallel input.
std::optional<Witness> canonical_2cell(const Graph& g, const Term& u, const Term& v);

// Pure re-association: u and v must have identical leaf sequences; the
// witness is a composite of Assoc moves only.
Witness reassoc_witness(const Graph& g, const Term& u, const Term& v);

// Defining composites for the derived generators (Lemma on u_f; the
// explicit composite chosen for b_{f,g}).  Used by the evaluators.
Witness expand_double_star(const Graph& g, const Term& f);
Witness expand_star_comp(const Graph& g, const Term& f, const Term& g1);

// Equality of formal 2-cells: both well-formed and parallel.  The plain
// mode rejects Phi/Ap constructors.
bool decide_formal(const Graph& g, const Cell2& t1, const Cell2& t2);
bool decide_formal_phi(const Graph& g, const Cell2& t1, const Cell2& t2);

}  // namespace bgm
