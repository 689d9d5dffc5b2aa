#include "godp/ontology.hpp"

#include <algorithm>

#include "godp/error.hpp"

namespace godp {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const char* to_string(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::Class: return "Class";
    case SymbolKind::ObjectProperty: return "ObjectProperty";
    case SymbolKind::DataProperty: return "DataProperty";
    case SymbolKind::Individual: return "Individual";
  }
  return "?";
}

std::optional<SymbolKind> symbol_kind_from_keyword(std::string_view keyword) {
  if (keyword == "Class") return SymbolKind::Class;
  if (keyword == "ObjectProperty") return SymbolKind::ObjectProperty;
  if (keyword == "DataProperty") return SymbolKind::DataProperty;
  if (keyword == "Individual") return SymbolKind::Individual;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Class expression constructors

ClassExpr ClassExpr::named(Name n) {
  ClassExpr e;
  e.op = Op::Named;
  e.name = std::move(n);
  return e;
}

ClassExpr ClassExpr::some(PropExpr p, ClassExpr filler) {
  ClassExpr e;
  e.op = Op::Some;
  e.prop = std::move(p);
  e.operands.push_back(std::move(filler));
  return e;
}

ClassExpr ClassExpr::only(PropExpr p, ClassExpr filler) {
  ClassExpr e = some(std::move(p), std::move(filler));
  e.op = Op::Only;
  return e;
}

ClassExpr ClassExpr::max(std::uint32_t n, PropExpr p, ClassExpr filler) {
  ClassExpr e = some(std::move(p), std::move(filler));
  e.op = Op::Max;
  e.cardinality = n;
  return e;
}

ClassExpr ClassExpr::conjunction(std::vector<ClassExpr> conjuncts) {
  ClassExpr e;
  e.op = Op::And;
  e.operands = std::move(conjuncts);
  return e;
}

ClassExpr ClassExpr::one_of(std::vector<Name> individuals) {
  ClassExpr e;
  e.op = Op::OneOf;
  e.members = std::move(individuals);
  return e;
}

// ---------------------------------------------------------------------------
// Canonical forms

namespace {

template <class T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

template <class T>
void order_pair(T& a, T& b) {
  if (b < a) std::swap(a, b);
}

}  // namespace

ClassExpr canonical(ClassExpr expr) {
  switch (expr.op) {
    case ClassExpr::Op::Named:
      break;
    case ClassExpr::Op::Some:
    case ClassExpr::Op::Only:
    case ClassExpr::Op::Max:
      expr.operands.front() = canonical(std::move(expr.operands.front()));
      break;
    case ClassExpr::Op::And: {
      std::vector<ClassExpr> flat;
      for (ClassExpr& c : expr.operands) {
        ClassExpr cc = canonical(std::move(c));
        if (cc.op == ClassExpr::Op::And) {
          for (ClassExpr& inner : cc.operands) flat.push_back(std::move(inner));
        } else {
          flat.push_back(std::move(cc));
        }
      }
      sort_unique(flat);
      if (flat.size() == 1) return std::move(flat.front());
      expr.operands = std::move(flat);
      break;
    }
    case ClassExpr::Op::OneOf:
      sort_unique(expr.members);
      break;
  }
  return expr;
}

Axiom canonical(Axiom axiom) {
  std::visit(
      overloaded{
          [](ax::SubClassOf& a) {
            a.sub = canonical(std::move(a.sub));
            a.sup = canonical(std::move(a.sup));
          },
          [](ax::EquivalentClasses& a) {
            a.a = canonical(std::move(a.a));
            a.b = canonical(std::move(a.b));
            order_pair(a.a, a.b);
          },
          [](ax::DisjointClasses& a) {
            a.a = canonical(std::move(a.a));
            a.b = canonical(std::move(a.b));
            order_pair(a.a, a.b);
          },
          [](ax::SubPropertyOf& a) {
            // inverse a ⊑ b is the same statement as a ⊑ inverse b.
            if (a.sub.inverse) {
              a.sub.inverse = false;
              a.sup.inverse = !a.sup.inverse;
            }
          },
          [](ax::InverseProps& a) { order_pair(a.a, a.b); },
          [](ax::Domain& a) { a.cls = canonical(std::move(a.cls)); },
          [](ax::Range& a) { a.cls = canonical(std::move(a.cls)); },
          [](ax::Functional&) {},
          [](ax::Transitive&) {},
          [](ax::SubPropertyChain&) {},
          [](ax::ClassAssertion& a) { a.cls = canonical(std::move(a.cls)); },
          [](ax::PropAssertion&) {},
          [](ax::DifferentIndividuals& a) { sort_unique(a.members); },
      },
      axiom);
  return axiom;
}

// ---------------------------------------------------------------------------
// Rendering

std::string to_string(const PropExpr& expr) {
  return expr.inverse ? "inverse " + to_string(expr.name) : to_string(expr.name);
}

namespace {

bool is_compound(const ClassExpr& e) {
  return e.op != ClassExpr::Op::Named && e.op != ClassExpr::Op::OneOf;
}

std::string filler_string(const ClassExpr& e) {
  return is_compound(e) ? "(" + to_string(e) + ")" : to_string(e);
}

std::string join_names(const std::vector<Name>& names, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += sep;
    out += to_string(names[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const ClassExpr& expr) {
  switch (expr.op) {
    case ClassExpr::Op::Named:
      return to_string(expr.name);
    case ClassExpr::Op::Some:
      return to_string(expr.prop) + " some " + filler_string(expr.filler());
    case ClassExpr::Op::Only:
      return to_string(expr.prop) + " only " + filler_string(expr.filler());
    case ClassExpr::Op::Max:
      return to_string(expr.prop) + " max " + std::to_string(expr.cardinality) + " " +
             filler_string(expr.filler());
    case ClassExpr::Op::And: {
      std::string out;
      for (std::size_t i = 0; i < expr.operands.size(); ++i) {
        if (i > 0) out += " and ";
        const ClassExpr& c = expr.operands[i];
        out += c.op == ClassExpr::Op::And ? "(" + to_string(c) + ")" : to_string(c);
      }
      return out;
    }
    case ClassExpr::Op::OneOf:
      return "{" + join_names(expr.members, ", ") + "}";
  }
  return {};
}

std::string to_string(const Axiom& axiom) {
  return std::visit(
      overloaded{
          [](const ax::SubClassOf& a) {
            return "SubClassOf(" + to_string(a.sub) + ", " + to_string(a.sup) + ")";
          },
          [](const ax::EquivalentClasses& a) {
            return "EquivalentClasses(" + to_string(a.a) + ", " + to_string(a.b) + ")";
          },
          [](const ax::DisjointClasses& a) {
            return "DisjointClasses(" + to_string(a.a) + ", " + to_string(a.b) + ")";
          },
          [](const ax::SubPropertyOf& a) {
            return "SubPropertyOf(" + to_string(a.sub) + ", " + to_string(a.sup) + ")";
          },
          [](const ax::InverseProps& a) {
            return "InverseProps(" + to_string(a.a) + ", " + to_string(a.b) + ")";
          },
          [](const ax::Domain& a) {
            return "Domain(" + to_string(a.prop) + ", " + to_string(a.cls) + ")";
          },
          [](const ax::Range& a) {
            return "Range(" + to_string(a.prop) + ", " + to_string(a.cls) + ")";
          },
          [](const ax::Functional& a) { return "Functional(" + to_string(a.prop) + ")"; },
          [](const ax::Transitive& a) { return "Transitive(" + to_string(a.prop) + ")"; },
          [](const ax::SubPropertyChain& a) {
            std::string chain;
            for (std::size_t i = 0; i < a.chain.size(); ++i) {
              if (i > 0) chain += " o ";
              chain += to_string(a.chain[i]);
            }
            return "SubPropertyChain(" + to_string(a.prop) + ", " + chain + ")";
          },
          [](const ax::ClassAssertion& a) {
            return "ClassAssertion(" + to_string(a.cls) + ", " + to_string(a.individual) + ")";
          },
          [](const ax::PropAssertion& a) {
            return "PropAssertion(" + to_string(a.prop) + ", " + to_string(a.subject) + ", " +
                   to_string(a.object) + ")";
          },
          [](const ax::DifferentIndividuals& a) {
            return "DifferentIndividuals(" + join_names(a.members, ", ") + ")";
          },
      },
      axiom);
}

// ---------------------------------------------------------------------------
// Signatures

namespace {

using Sig = std::vector<std::pair<SymbolKind, Name>>;

void collect(const ClassExpr& e, Sig& out) {
  switch (e.op) {
    case ClassExpr::Op::Named:
      out.emplace_back(SymbolKind::Class, e.name);
      break;
    case ClassExpr::Op::Some:
    case ClassExpr::Op::Only:
    case ClassExpr::Op::Max:
      out.emplace_back(SymbolKind::ObjectProperty, e.prop.name);
      collect(e.filler(), out);
      break;
    case ClassExpr::Op::And:
      for (const ClassExpr& c : e.operands) collect(c, out);
      break;
    case ClassExpr::Op::OneOf:
      for (const Name& n : e.members) out.emplace_back(SymbolKind::Individual, n);
      break;
  }
}

void prop(const Name& n, Sig& out) { out.emplace_back(SymbolKind::ObjectProperty, n); }
void ind(const Name& n, Sig& out) { out.emplace_back(SymbolKind::Individual, n); }

}  // namespace

std::vector<std::pair<SymbolKind, Name>> signature(const Axiom& axiom) {
  Sig out;
  std::visit(overloaded{
                 [&](const ax::SubClassOf& a) { collect(a.sub, out); collect(a.sup, out); },
                 [&](const ax::EquivalentClasses& a) { collect(a.a, out); collect(a.b, out); },
                 [&](const ax::DisjointClasses& a) { collect(a.a, out); collect(a.b, out); },
                 [&](const ax::SubPropertyOf& a) { prop(a.sub.name, out); prop(a.sup.name, out); },
                 [&](const ax::InverseProps& a) { prop(a.a, out); prop(a.b, out); },
                 [&](const ax::Domain& a) { prop(a.prop, out); collect(a.cls, out); },
                 [&](const ax::Range& a) { prop(a.prop, out); collect(a.cls, out); },
                 [&](const ax::Functional& a) { prop(a.prop, out); },
                 [&](const ax::Transitive& a) { prop(a.prop, out); },
                 [&](const ax::SubPropertyChain& a) {
                   prop(a.prop, out);
                   for (const PropExpr& p : a.chain) prop(p.name, out);
                 },
                 [&](const ax::ClassAssertion& a) { collect(a.cls, out); ind(a.individual, out); },
                 [&](const ax::PropAssertion& a) {
                   prop(a.prop, out);
                   ind(a.subject, out);
                   ind(a.object, out);
                 },
                 [&](const ax::DifferentIndividuals& a) {
                   for (const Name& n : a.members) ind(n, out);
                 },
             },
             axiom);
  return out;
}

namespace {

bool name_mentions(const Name& n, const std::function<bool(const Name&)>& pred) {
  if (pred(n)) return true;
  return std::any_of(n.args.begin(), n.args.end(),
                     [&](const Name& a) { return name_mentions(a, pred); });
}

}  // namespace

bool mentions(const Axiom& axiom, const std::function<bool(const Name&)>& pred) {
  for (const auto& [kind, name] : signature(axiom)) {
    if (name_mentions(name, pred)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Name mapping

namespace {

struct Dropped {};

Name single(const NameMap& fn, const Name& n) {
  NameImage img = fn(n);
  switch (img.form) {
    case NameImage::Form::Single:
      return std::move(img.names.front());
    case NameImage::Form::Empty:
      throw Dropped{};
    case NameImage::Form::List:
      throw Error(ErrorKind::KindMismatch,
                  "list argument bound to '" + to_string(n) + "' used where a single symbol is expected");
  }
  throw Dropped{};
}

std::vector<Name> splice(const NameMap& fn, const std::vector<Name>& names) {
  std::vector<Name> out;
  for (const Name& n : names) {
    NameImage img = fn(n);
    if (img.form == NameImage::Form::Empty) throw Dropped{};
    for (Name& m : img.names) out.push_back(std::move(m));
  }
  return out;
}

PropExpr map_prop(const NameMap& fn, const PropExpr& p) {
  return PropExpr{single(fn, p.name), p.inverse};
}

ClassExpr map_class(const NameMap& fn, const ClassExpr& e) {
  ClassExpr out = e;
  switch (e.op) {
    case ClassExpr::Op::Named:
      out.name = single(fn, e.name);
      break;
    case ClassExpr::Op::Some:
    case ClassExpr::Op::Only:
    case ClassExpr::Op::Max:
      out.prop = map_prop(fn, e.prop);
      out.operands.front() = map_class(fn, e.filler());
      break;
    case ClassExpr::Op::And:
      for (ClassExpr& c : out.operands) c = map_class(fn, c);
      break;
    case ClassExpr::Op::OneOf:
      out.members = splice(fn, e.members);
      break;
  }
  return out;
}

}  // namespace

std::optional<Axiom> map_names(const Axiom& axiom, const NameMap& fn) {
  try {
    return std::visit(
        overloaded{
            [&](const ax::SubClassOf& a) -> Axiom {
              return ax::SubClassOf{map_class(fn, a.sub), map_class(fn, a.sup)};
            },
            [&](const ax::EquivalentClasses& a) -> Axiom {
              return ax::EquivalentClasses{map_class(fn, a.a), map_class(fn, a.b)};
            },
            [&](const ax::DisjointClasses& a) -> Axiom {
              return ax::DisjointClasses{map_class(fn, a.a), map_class(fn, a.b)};
            },
            [&](const ax::SubPropertyOf& a) -> Axiom {
              return ax::SubPropertyOf{map_prop(fn, a.sub), map_prop(fn, a.sup)};
            },
            [&](const ax::InverseProps& a) -> Axiom {
              return ax::InverseProps{single(fn, a.a), single(fn, a.b)};
            },
            [&](const ax::Domain& a) -> Axiom {
              return ax::Domain{single(fn, a.prop), map_class(fn, a.cls)};
            },
            [&](const ax::Range& a) -> Axiom {
              return ax::Range{single(fn, a.prop), map_class(fn, a.cls)};
            },
            [&](const ax::Functional& a) -> Axiom { return ax::Functional{single(fn, a.prop)}; },
            [&](const ax::Transitive& a) -> Axiom { return ax::Transitive{single(fn, a.prop)}; },
            [&](const ax::SubPropertyChain& a) -> Axiom {
              ax::SubPropertyChain out{single(fn, a.prop), {}};
              for (const PropExpr& p : a.chain) out.chain.push_back(map_prop(fn, p));
              return out;
            },
            [&](const ax::ClassAssertion& a) -> Axiom {
              return ax::ClassAssertion{map_class(fn, a.cls), single(fn, a.individual)};
            },
            [&](const ax::PropAssertion& a) -> Axiom {
              return ax::PropAssertion{single(fn, a.prop), single(fn, a.subject),
                                       single(fn, a.object)};
            },
            [&](const ax::DifferentIndividuals& a) -> Axiom {
              return ax::DifferentIndividuals{splice(fn, a.members)};
            },
        },
        axiom);
  } catch (const Dropped&) {
    return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Ontology

void Ontology::declare(SymbolKind kind, const Name& name) {
  auto [it, inserted] = declarations_.emplace(name, kind);
  if (!inserted && it->second != kind) {
    throw Error(ErrorKind::KindClash, "'" + to_string(name) + "' declared both as " +
                                          to_string(it->second) + " and as " + to_string(kind));
  }
}

void Ontology::add(const Axiom& axiom) {
  Axiom c = canonical(axiom);
  for (const auto& [kind, name] : signature(c)) declare(kind, name);
  axioms_.insert(std::move(c));
}

void Ontology::merge(const Ontology& other) {
  for (const auto& [name, kind] : other.declarations_) declare(kind, name);
  axioms_.insert(other.axioms_.begin(), other.axioms_.end());
}

std::optional<SymbolKind> Ontology::kind_of(const Name& name) const {
  auto it = declarations_.find(name);
  if (it == declarations_.end()) return std::nullopt;
  return it->second;
}

bool Ontology::contains(const Axiom& axiom) const {
  return axioms_.count(canonical(axiom)) > 0;
}

Ontology unite(const Ontology& a, const Ontology& b) {
  Ontology out = a;
  out.merge(b);
  return out;
}

Ontology map_ontology(const Ontology& onto, const NameMap& fn) {
  Ontology out;
  for (const auto& [name, kind] : onto.declarations()) {
    NameImage img = fn(name);
    for (const Name& n : img.names) out.declare(kind, n);
  }
  for (const Axiom& a : onto.axioms()) {
    if (auto mapped = map_names(a, fn)) out.add(*mapped);
  }
  return out;
}

Ontology stratify(const Ontology& onto) {
  return map_ontology(onto, [](const Name& n) { return NameImage::single(Name(stratify(n))); });
}

bool is_stratified(const Ontology& onto) {
  for (const auto& [name, kind] : onto.declarations()) {
    if (!name.is_plain()) return false;
  }
  return true;
}

}  // namespace godp
