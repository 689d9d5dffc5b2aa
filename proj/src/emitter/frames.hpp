#pragma once

#include <optional>
#include <string>

#include "godp/ontology.hpp"

namespace godp::detail {

// Index of each clause keyword in the fixed frame order.
enum class ClauseSlot {
  SubClassOf,
  EquivalentTo,
  DisjointWith,
  Types,
  Facts,
  Domain,
  Range,
  Characteristics,
  SubPropertyOf,
  InverseOf,
  SubPropertyChain,
};

const char* keyword(ClauseSlot slot);

struct FrameClause {
  SymbolKind kind;  // kind of the frame the clause belongs to
  Name subject;
  ClauseSlot slot;
  std::string value;
};

// Places an axiom in the frame of its subject. Returns nullopt for axioms
// written as standalone statements (DifferentIndividuals). Throws
// KindMismatch for axioms with no Manchester frame form.
std::optional<FrameClause> frame_clause(const Axiom& axiom);

std::string standalone_text(const Axiom& axiom);

}  // namespace godp::detail
