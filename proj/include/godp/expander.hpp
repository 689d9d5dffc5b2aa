#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "godp/ontology.hpp"
#include "godp/spec.hpp"

namespace godp {

// All documents visible to an expansion: the inputs plus the library path.
// Declaration names are global across documents.
class Library {
 public:
  // Throws DuplicateDeclaration when a name is already taken by another
  // document.
  void add(Document doc);

  const PatternDef* find_pattern(const std::string& name) const;
  const NamedOntology* find_ontology(const std::string& name) const;
  const RefinementDef* find_refinement(const std::string& name) const;

  // Path of the document that declares `name` (empty if unknown).
  const std::string& path_of(const std::string& name) const;

  const std::vector<Document>& documents() const { return docs_; }

 private:
  struct Entry {
    std::size_t doc;
    std::size_t decl;
  };
  const Declaration* find(const std::string& name) const;

  std::vector<Document> docs_;
  std::map<std::string, Entry> index_;
};

// Result of matching actual arguments against formal parameters.
struct Binding {
  // Parameter identifier (head and tail names for list parameters) to the
  // argument it stands for. Empty-bound parameters map to a propagated Empty.
  Substitution sub;
  // Parameters (list heads included) bound to the empty ontology.
  std::set<std::string> empty_bound;
  // Whole list given to each list parameter, keyed by head name.
  std::map<std::string, Argument> lists;
  // Every list parameter received [] — the instantiation is empty.
  bool exhausted = false;
  // An elided (propagated) Empty reached a required parameter — the
  // instantiation is void.
  bool voided = false;
};

using KindEnv = std::map<Name, SymbolKind>;

// Binds arguments positionally. Throws ArityMismatch, EmptyForRequired,
// ListLengthMismatch, KindMismatch. `known` supplies kinds of symbols fixed
// by enclosing instantiations.
Binding bind_arguments(const std::vector<Parameter>& params, const std::vector<Argument>& args,
                       const KindEnv* known = nullptr);

// One executed instantiation whose parameters carry constraints; the
// verifier turns these into obligations.
struct InstantiationRecord {
  std::string pattern;
  std::vector<Parameter> params;
  Binding binding;
  std::string site;  // "path:line:column" of the instantiation
};

struct Expansion {
  Ontology ontology;
  std::vector<InstantiationRecord> instantiations;
  std::vector<std::string> warnings;
};

struct ExpansionOptions {
  std::size_t depth_budget = 10000;  // nested instantiation frames
};

// Expands specifications against a library. Named ontologies and `given`
// imports are expanded once and memoized. Deep recursion runs on a
// dedicated large stack so that the depth budget, not the process stack,
// is the limit.
class Expander {
 public:
  explicit Expander(const Library& lib, ExpansionOptions opts = {});
  ~Expander();
  Expander(const Expander&) = delete;
  Expander& operator=(const Expander&) = delete;

  // Throws UnknownPattern if no ontology of that name exists.
  const Expansion& expand_ontology(const std::string& name);

  // Expands a specification in the global scope; `path` names its source
  // for diagnostics.
  Expansion expand_spec(const Spec& spec, const std::string& path = {});

  Expansion expand_instantiation(const std::string& pattern, const std::vector<Argument>& args);

  // Expansions of the top-level `and`/`then` operands of a named ontology,
  // in source order.
  std::vector<Expansion> expand_operands(const std::string& ontology);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Expands every named ontology declared in `doc`, resolving references
// against `lib` (which should contain `doc`).
std::map<std::string, Expansion> expand_document(const Document& doc, const Library& lib,
                                                 ExpansionOptions opts = {});

// Flattens the top-level union/extension tree of a spec.
std::vector<const Spec*> top_level_operands(const Spec& spec);

}  // namespace godp
