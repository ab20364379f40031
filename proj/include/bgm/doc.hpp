#pragma once

#include "bgm/model.hpp"
#include "bgm/term.hpp"
#include "json.hpp"

namespace bgm {

// On-disk shape: {"format_version": 1, "kind": ..., "payload": ...} with
// kind one of graph / bigroupoid / pseudofunctor / icon / square / term.
// Documents are self-contained; morphisms embed their boundary by value.
struct Document {
  int format_version = 1;
  std::string kind;
  nlohmann::json payload;

  friend bool operator==(const Document&, const Document&) = default;
};

std::string print_document(const Document& d);
Document parse_document(const std::string& text);  // StructuralError on bad input
Document load_document(const std::string& path);
void save_document(const std::string& path, const Document& d);

Document to_document(const Graph& g);
Document to_document(const FiniteBigroupoid& B);
Document to_document(const Pseudofunctor& F);
Document to_document(const Icon& ic);
Document to_document(const LiftingSquare& sq);
Document to_document(const Term& t);

Graph graph_of(const Document& d);
FiniteBigroupoid bigroupoid_of(const Document& d);
Pseudofunctor pseudofunctor_of(const Document& d);
Icon icon_of(const Document& d);
LiftingSquare square_of(const Document& d);
Term term_of(const Document& d);

}  // namespace bgm
