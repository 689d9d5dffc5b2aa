#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "godp/error.hpp"
#include "godp/ontology.hpp"

namespace godp {

// An actual argument of an instantiation.
struct Argument {
  enum class Form { Symbol, List, Empty, Cons };

  Form form = Form::Empty;
  Name symbol;                          // Symbol
  std::optional<SymbolKind> kind;       // Symbol written as `Class: D`
  std::vector<Argument> items;          // List elements; Cons = {head, tail}
  // Empty produced by substituting an empty-bound name, as opposed to an
  // empty argument written in the source.
  bool propagated = false;

  static Argument of(Name n, std::optional<SymbolKind> k = std::nullopt);
  static Argument list(std::vector<Argument> elements);
  static Argument empty(bool from_elision = false);
  static Argument cons(Argument head, Argument tail);

  bool is_symbol() const { return form == Form::Symbol; }
  bool is_list() const { return form == Form::List; }
  bool is_empty() const { return form == Form::Empty; }

  bool operator==(const Argument&) const = default;
};

std::string to_string(const Argument& arg);

struct Parameter {
  SymbolKind kind = SymbolKind::Class;
  Name name;                    // head name for list parameters
  bool optional = false;
  std::optional<Name> tail;     // set for `head :: tail` parameters
  std::set<Axiom> constraints;  // stated on `name`

  bool is_list() const { return tail.has_value(); }
  bool operator==(const Parameter&) const = default;
};

struct PatternDef;

// Structuring tree of a specification.
struct Spec {
  enum class Op { Basic, Union, Extension, Inst, Let, Empty };

  Op op = Op::Empty;
  Ontology basic;                  // Basic
  std::vector<Spec> children;      // Union/Extension: {left, right}; Let: {body}
  std::string pattern;             // Inst
  std::vector<Argument> args;      // Inst
  std::vector<PatternDef> locals;  // Let
  SourceLoc loc;                   // not part of equality

  static Spec make_basic(Ontology onto, SourceLoc loc = {});
  static Spec make_union(Spec left, Spec right);
  static Spec make_extension(Spec base, Spec ext);
  static Spec make_inst(std::string pattern, std::vector<Argument> args, SourceLoc loc = {});
  static Spec make_let(std::vector<PatternDef> locals, Spec body);
  static Spec make_empty();

  bool operator==(const Spec& other) const;
};

struct PatternDef {
  std::string name;
  std::vector<Parameter> params;
  std::vector<std::string> imports;
  Spec body;
  SourceLoc loc;

  bool operator==(const PatternDef& other) const;
};

struct NamedOntology {
  std::string name;
  std::vector<std::string> imports;
  Spec body;
  SourceLoc loc;

  bool operator==(const NamedOntology& other) const;
};

struct RefinementDef {
  std::string name;
  Spec source;
  Spec target;
  std::vector<std::pair<Name, Name>> symbol_map;  // identity where absent
  SourceLoc loc;

  bool operator==(const RefinementDef& other) const;
};

using Declaration = std::variant<PatternDef, NamedOntology, RefinementDef>;

const std::string& declaration_name(const Declaration& decl);
SourceLoc declaration_loc(const Declaration& decl);

struct Document {
  std::string path;  // informational
  std::vector<Declaration> decls;

  const PatternDef* find_pattern(const std::string& name) const;
  const NamedOntology* find_ontology(const std::string& name) const;
  const RefinementDef* find_refinement(const std::string& name) const;

  bool operator==(const Document& other) const { return decls == other.decls; }
};

// Simultaneous substitution of parameter names, keyed by plain identifier.
using Substitution = std::map<std::string, Argument>;

// Image of a (possibly parameterized) name. Bound bases are replaced; a
// parameterized base absorbs the outer arguments (`p[v]` with p ↦ q[a] gives
// q[a, v]); list-bound arguments are spliced; any Empty part makes the whole
// result a propagated Empty.
Argument substitute_name(const Name& name, const Substitution& sub);
Argument substitute(const Argument& arg, const Substitution& sub);

// Replaces every bound name in `spec`. Basic axioms that mention an
// empty-bound name are dropped. Parameters of `let`-local patterns shadow
// outer bindings; each shadowing is reported in `warnings` when given.
Spec substitute(const Spec& spec, const Substitution& sub,
                std::vector<std::string>* warnings = nullptr);

// `first` followed by `second`, as a single simultaneous substitution.
Substitution compose(const Substitution& first, const Substitution& second);

}  // namespace godp
