#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "godp/name.hpp"

namespace godp {

enum class SymbolKind { Class, ObjectProperty, DataProperty, Individual };

const char* to_string(SymbolKind kind);
std::optional<SymbolKind> symbol_kind_from_keyword(std::string_view keyword);

struct PropExpr {
  Name name;
  bool inverse = false;

  static PropExpr named(Name n) { return {std::move(n), false}; }
  static PropExpr inverse_of(Name n) { return {std::move(n), true}; }

  bool operator==(const PropExpr&) const = default;
  std::strong_ordering operator<=>(const PropExpr&) const = default;
};

struct ClassExpr {
  enum class Op { Named, Some, Only, Max, And, OneOf };

  Op op = Op::Named;
  Name name;                       // Named
  PropExpr prop;                   // Some, Only, Max
  std::uint32_t cardinality = 0;   // Max
  std::vector<ClassExpr> operands; // filler (Some/Only/Max) or conjuncts (And)
  std::vector<Name> members;       // OneOf

  static ClassExpr named(Name n);
  static ClassExpr some(PropExpr p, ClassExpr filler);
  static ClassExpr only(PropExpr p, ClassExpr filler);
  static ClassExpr max(std::uint32_t n, PropExpr p, ClassExpr filler);
  static ClassExpr conjunction(std::vector<ClassExpr> conjuncts);
  static ClassExpr one_of(std::vector<Name> individuals);

  bool is_named() const { return op == Op::Named; }
  const ClassExpr& filler() const { return operands.front(); }

  bool operator==(const ClassExpr&) const = default;
  std::strong_ordering operator<=>(const ClassExpr&) const = default;
};

namespace ax {

#define GODP_AXIOM_ORDERING(T)             \
  bool operator==(const T&) const = default; \
  std::strong_ordering operator<=>(const T&) const = default;

struct SubClassOf { ClassExpr sub, sup; GODP_AXIOM_ORDERING(SubClassOf) };
struct EquivalentClasses { ClassExpr a, b; GODP_AXIOM_ORDERING(EquivalentClasses) };
struct DisjointClasses { ClassExpr a, b; GODP_AXIOM_ORDERING(DisjointClasses) };
struct SubPropertyOf { PropExpr sub, sup; GODP_AXIOM_ORDERING(SubPropertyOf) };
struct InverseProps { Name a, b; GODP_AXIOM_ORDERING(InverseProps) };
struct Domain { Name prop; ClassExpr cls; GODP_AXIOM_ORDERING(Domain) };
struct Range { Name prop; ClassExpr cls; GODP_AXIOM_ORDERING(Range) };
struct Functional { Name prop; GODP_AXIOM_ORDERING(Functional) };
struct Transitive { Name prop; GODP_AXIOM_ORDERING(Transitive) };
struct SubPropertyChain {
  Name prop;
  std::vector<PropExpr> chain;
  GODP_AXIOM_ORDERING(SubPropertyChain)
};
struct ClassAssertion { ClassExpr cls; Name individual; GODP_AXIOM_ORDERING(ClassAssertion) };
struct PropAssertion { Name prop, subject, object; GODP_AXIOM_ORDERING(PropAssertion) };
struct DifferentIndividuals {
  std::vector<Name> members;
  GODP_AXIOM_ORDERING(DifferentIndividuals)
};

#undef GODP_AXIOM_ORDERING

}  // namespace ax

using Axiom = std::variant<ax::SubClassOf, ax::EquivalentClasses, ax::DisjointClasses,
                           ax::SubPropertyOf, ax::InverseProps, ax::Domain, ax::Range,
                           ax::Functional, ax::Transitive, ax::SubPropertyChain,
                           ax::ClassAssertion, ax::PropAssertion, ax::DifferentIndividuals>;

// Sorts commutative operand lists so that set membership is syntax-insensitive.
ClassExpr canonical(ClassExpr expr);
Axiom canonical(Axiom axiom);

// Functional-style rendering used in reports, e.g. `Range(hasLicence, DrivingLicence)`.
std::string to_string(const ClassExpr& expr);
std::string to_string(const PropExpr& expr);
std::string to_string(const Axiom& axiom);

// Every entity an axiom mentions, with the kind its position implies.
std::vector<std::pair<SymbolKind, Name>> signature(const Axiom& axiom);

bool mentions(const Axiom& axiom, const std::function<bool(const Name&)>& pred);

// What a name maps to under a rewriting: a single name, a list of names to
// splice into list positions, or nothing (the axiom is dropped).
struct NameImage {
  enum class Form { Single, List, Empty };
  Form form = Form::Single;
  std::vector<Name> names;

  static NameImage single(Name n) { return {Form::Single, {std::move(n)}}; }
  static NameImage list(std::vector<Name> ns) { return {Form::List, std::move(ns)}; }
  static NameImage empty() { return {Form::Empty, {}}; }
};

using NameMap = std::function<NameImage(const Name&)>;

// Rewrites every name in an axiom. Lists are spliced into OneOf and
// DifferentIndividuals members; a list in a single-name position throws
// KindMismatch. Returns nullopt when any mapped name is Empty.
std::optional<Axiom> map_names(const Axiom& axiom, const NameMap& fn);

class Ontology {
 public:
  // Throws KindClash when `name` is already declared with another kind.
  void declare(SymbolKind kind, const Name& name);
  // Canonicalizes the axiom and implicitly declares its signature.
  void add(const Axiom& axiom);
  void merge(const Ontology& other);

  const std::map<Name, SymbolKind>& declarations() const { return declarations_; }
  const std::set<Axiom>& axioms() const { return axioms_; }
  std::optional<SymbolKind> kind_of(const Name& name) const;
  bool contains(const Axiom& axiom) const;
  bool empty() const { return declarations_.empty() && axioms_.empty(); }

  bool operator==(const Ontology&) const = default;

 private:
  std::map<Name, SymbolKind> declarations_;
  std::set<Axiom> axioms_;
};

// Set union of declarations and axioms (Same-Name-Same-Thing).
Ontology unite(const Ontology& a, const Ontology& b);

// Applies map_names to every declaration and axiom.
Ontology map_ontology(const Ontology& onto, const NameMap& fn);

// Replaces every name with its stratified plain form.
Ontology stratify(const Ontology& onto);

bool is_stratified(const Ontology& onto);

}  // namespace godp
