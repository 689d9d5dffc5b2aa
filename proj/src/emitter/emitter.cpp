#include "godp/emitter.hpp"

#include <algorithm>
#include <map>

#include "frames.hpp"
#include "godp/error.hpp"
#include "godp/parser.hpp"

namespace godp {

namespace detail {

const char* keyword(ClauseSlot slot) {
  switch (slot) {
    case ClauseSlot::SubClassOf: return "SubClassOf";
    case ClauseSlot::EquivalentTo: return "EquivalentTo";
    case ClauseSlot::DisjointWith: return "DisjointWith";
    case ClauseSlot::Types: return "Types";
    case ClauseSlot::Facts: return "Facts";
    case ClauseSlot::Domain: return "Domain";
    case ClauseSlot::Range: return "Range";
    case ClauseSlot::Characteristics: return "Characteristics";
    case ClauseSlot::SubPropertyOf: return "SubPropertyOf";
    case ClauseSlot::InverseOf: return "InverseOf";
    case ClauseSlot::SubPropertyChain: return "SubPropertyChain";
  }
  return "?";
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void no_frame(const Axiom& a) {
  throw Error(ErrorKind::KindMismatch, "axiom " + to_string(a) + " has no frame form");
}

// Class-pair axioms are written in the frame of a named operand.
FrameClause class_pair(const Axiom& whole, const ClassExpr& a, const ClassExpr& b,
                       ClauseSlot slot) {
  if (a.is_named()) return {SymbolKind::Class, a.name, slot, to_string(b)};
  if (b.is_named()) return {SymbolKind::Class, b.name, slot, to_string(a)};
  no_frame(whole);
}

}  // namespace

std::optional<FrameClause> frame_clause(const Axiom& axiom) {
  constexpr SymbolKind C = SymbolKind::Class;
  constexpr SymbolKind P = SymbolKind::ObjectProperty;
  constexpr SymbolKind I = SymbolKind::Individual;
  return std::visit(
      overloaded{
          [&](const ax::SubClassOf& a) -> std::optional<FrameClause> {
            if (!a.sub.is_named()) no_frame(axiom);
            return FrameClause{C, a.sub.name, ClauseSlot::SubClassOf, to_string(a.sup)};
          },
          [&](const ax::EquivalentClasses& a) -> std::optional<FrameClause> {
            return class_pair(axiom, a.a, a.b, ClauseSlot::EquivalentTo);
          },
          [&](const ax::DisjointClasses& a) -> std::optional<FrameClause> {
            return class_pair(axiom, a.a, a.b, ClauseSlot::DisjointWith);
          },
          [&](const ax::SubPropertyOf& a) -> std::optional<FrameClause> {
            if (a.sub.inverse) no_frame(axiom);
            return FrameClause{P, a.sub.name, ClauseSlot::SubPropertyOf, to_string(a.sup)};
          },
          [&](const ax::InverseProps& a) -> std::optional<FrameClause> {
            return FrameClause{P, a.a, ClauseSlot::InverseOf, to_string(a.b)};
          },
          [&](const ax::Domain& a) -> std::optional<FrameClause> {
            return FrameClause{P, a.prop, ClauseSlot::Domain, to_string(a.cls)};
          },
          [&](const ax::Range& a) -> std::optional<FrameClause> {
            return FrameClause{P, a.prop, ClauseSlot::Range, to_string(a.cls)};
          },
          [&](const ax::Functional& a) -> std::optional<FrameClause> {
            return FrameClause{P, a.prop, ClauseSlot::Characteristics, "Functional"};
          },
          [&](const ax::Transitive& a) -> std::optional<FrameClause> {
            return FrameClause{P, a.prop, ClauseSlot::Characteristics, "Transitive"};
          },
          [&](const ax::SubPropertyChain& a) -> std::optional<FrameClause> {
            std::string chain;
            for (std::size_t i = 0; i < a.chain.size(); ++i) {
              if (i > 0) chain += " o ";
              chain += to_string(a.chain[i]);
            }
            return FrameClause{P, a.prop, ClauseSlot::SubPropertyChain, chain};
          },
          [&](const ax::ClassAssertion& a) -> std::optional<FrameClause> {
            return FrameClause{I, a.individual, ClauseSlot::Types, to_string(a.cls)};
          },
          [&](const ax::PropAssertion& a) -> std::optional<FrameClause> {
            return FrameClause{I, a.subject, ClauseSlot::Facts,
                               to_string(a.prop) + " " + to_string(a.object)};
          },
          [&](const ax::DifferentIndividuals&) -> std::optional<FrameClause> {
            return std::nullopt;
          },
      },
      axiom);
}

std::string standalone_text(const Axiom& axiom) {
  const auto* d = std::get_if<ax::DifferentIndividuals>(&axiom);
  if (!d) no_frame(axiom);
  std::string out = "DifferentIndividuals: ";
  for (std::size_t i = 0; i < d->members.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(d->members[i]);
  }
  return out;
}

}  // namespace detail

namespace {

int group_rank(SymbolKind k) {
  switch (k) {
    case SymbolKind::Class: return 0;
    case SymbolKind::Individual: return 1;
    case SymbolKind::ObjectProperty: return 2;
    case SymbolKind::DataProperty: return 3;
  }
  return 4;
}

}  // namespace

CanonicalForm canonicalize(const Ontology& onto) {
  struct Entry {
    SymbolKind kind;
    std::vector<std::pair<detail::ClauseSlot, std::string>> clauses;
  };
  std::map<std::string, Entry> by_subject;
  for (const auto& [name, kind] : onto.declarations()) {
    by_subject.emplace(to_string(name), Entry{kind, {}});
  }

  CanonicalForm form;
  for (const Axiom& a : onto.axioms()) {
    auto clause = detail::frame_clause(a);
    if (!clause) {
      form.standalone.push_back(detail::standalone_text(a));
      continue;
    }
    std::string subject = to_string(clause->subject);
    auto it = by_subject.try_emplace(subject, Entry{clause->kind, {}}).first;
    it->second.clauses.emplace_back(clause->slot, std::move(clause->value));
  }

  for (auto& [subject, entry] : by_subject) {
    std::sort(entry.clauses.begin(), entry.clauses.end());
    Frame f{entry.kind, subject, {}};
    for (auto& [slot, value] : entry.clauses) f.clauses.emplace_back(detail::keyword(slot), value);
    form.frames.push_back(std::move(f));
  }
  std::stable_sort(form.frames.begin(), form.frames.end(), [](const Frame& a, const Frame& b) {
    return group_rank(a.kind) < group_rank(b.kind);
  });
  std::sort(form.standalone.begin(), form.standalone.end());
  return form;
}

std::string render(const CanonicalForm& form, std::string_view indent) {
  std::string out;
  bool first = true;
  auto separate = [&] {
    if (!first) out += '\n';
    first = false;
  };
  for (const Frame& f : form.frames) {
    separate();
    out.append(indent).append(to_string(f.kind)).append(": ").append(f.subject).append("\n");
    for (const auto& [kw, value] : f.clauses) {
      out.append(indent).append("  ").append(kw).append(": ").append(value).append("\n");
    }
  }
  for (const std::string& s : form.standalone) {
    separate();
    out.append(indent).append(s).append("\n");
  }
  return out;
}

std::string emit_manchester(const Ontology& onto) {
  for (const auto& [name, kind] : onto.declarations()) {
    if (!name.is_plain()) {
      throw Error(ErrorKind::UnstratifiedName,
                  "parameterized name " + to_string(name) + " was not stratified");
    }
  }
  return render(canonicalize(onto));
}

GoldenDiff diff_ontologies(const Ontology& actual, const Ontology& golden) {
  GoldenDiff d;
  std::set_difference(actual.axioms().begin(), actual.axioms().end(), golden.axioms().begin(),
                      golden.axioms().end(), std::back_inserter(d.only_in_actual));
  std::set_difference(golden.axioms().begin(), golden.axioms().end(), actual.axioms().begin(),
                      actual.axioms().end(), std::back_inserter(d.only_in_golden));
  auto decl_diff = [](const Ontology& x, const Ontology& y, std::vector<std::string>& out) {
    for (const auto& [name, kind] : x.declarations()) {
      auto other = y.kind_of(name);
      if (!other || *other != kind) {
        out.push_back(std::string(to_string(kind)) + ": " + to_string(name));
      }
    }
  };
  decl_diff(actual, golden, d.declarations_only_in_actual);
  decl_diff(golden, actual, d.declarations_only_in_golden);
  return d;
}

GoldenDiff diff_golden(const Ontology& actual, std::string_view golden_text) {
  return diff_ontologies(actual, parse_manchester_fragment(golden_text));
}

std::string to_string(const GoldenDiff& diff) {
  std::string out;
  for (const Axiom& a : diff.only_in_actual) out += "+ " + to_string(a) + "\n";
  for (const Axiom& a : diff.only_in_golden) out += "- " + to_string(a) + "\n";
  for (const std::string& s : diff.declarations_only_in_actual) out += "+ " + s + "\n";
  for (const std::string& s : diff.declarations_only_in_golden) out += "- " + s + "\n";
  return out;
}

}  // namespace godp
