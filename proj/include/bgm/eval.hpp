#pragma once

#include "bgm/pseudofunctor.hpp"
#include "bgm/rewrite.hpp"

namespace bgm {

// Interpretation of a graph in a bigroupoid.
struct Assign {
  std::map<Id, Id> nodes;  // node -> 0-cell
  std::map<Id, Id> edges;  // edge -> 1-cell
};

// Checks the endpoint compatibility of an assignment.
void validate_assign(const FiniteBigroupoid& B, const Graph& g, const Assign& a);

Id eval_1cell(const FiniteBigroupoid& B, const Graph& g, const Assign& a, const Term& u);
Id eval_2cell(const FiniteBigroupoid& B, const Graph& g, const Assign& a, const Cell2& t);

// Evaluation of phi-decorated terms along F; the assignment lands in
// F.source and Ap / Phi constructors are interpreted through F.
Id eval_1cell_phi(const Pseudofunctor& F, const Graph& g, const Assign& a, const Term& u);
Id eval_2cell_phi(const Pseudofunctor& F, const Graph& g, const Assign& a, const Cell2& t);

}  // namespace bgm
