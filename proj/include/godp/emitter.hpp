#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "godp/ontology.hpp"

namespace godp {

// One Manchester-syntax frame: a subject entity and its clauses, each clause
// holding exactly one value (e.g. {"SubClassOf", "Manifestation"}).
struct Frame {
  SymbolKind kind = SymbolKind::Class;
  std::string subject;
  std::vector<std::pair<std::string, std::string>> clauses;

  bool operator==(const Frame&) const = default;
};

// Deterministic layout of an ontology: Class frames, then Individual frames,
// then property frames, each group sorted by name, followed by axioms that
// have no subject (DifferentIndividuals). Clauses follow a fixed keyword
// order and are sorted by value within one keyword.
struct CanonicalForm {
  std::vector<Frame> frames;
  std::vector<std::string> standalone;

  bool operator==(const CanonicalForm&) const = default;
};

CanonicalForm canonicalize(const Ontology& onto);

// Renders a canonical form; every line is prefixed with `indent`.
std::string render(const CanonicalForm& form, std::string_view indent = {});

// Canonical Manchester text of a fully stratified ontology. Throws
// UnstratifiedName if a parameterized name remains.
std::string emit_manchester(const Ontology& onto);

struct GoldenDiff {
  std::vector<Axiom> only_in_actual;
  std::vector<Axiom> only_in_golden;
  std::vector<std::string> declarations_only_in_actual;
  std::vector<std::string> declarations_only_in_golden;

  bool empty() const {
    return only_in_actual.empty() && only_in_golden.empty() &&
           declarations_only_in_actual.empty() && declarations_only_in_golden.empty();
  }
};

// Compares canonical axiom and declaration sets; layout is irrelevant.
GoldenDiff diff_golden(const Ontology& actual, std::string_view golden_text);
GoldenDiff diff_ontologies(const Ontology& actual, const Ontology& golden);

std::string to_string(const GoldenDiff& diff);

}  // namespace godp
