#include "godp/spec.hpp"

namespace godp {

Argument Argument::of(Name n, std::optional<SymbolKind> k) {
  Argument a;
  a.form = Form::Symbol;
  a.symbol = std::move(n);
  a.kind = k;
  return a;
}

Argument Argument::list(std::vector<Argument> elements) {
  Argument a;
  a.form = Form::List;
  a.items = std::move(elements);
  return a;
}

Argument Argument::empty(bool from_elision) {
  Argument a;
  a.form = Form::Empty;
  a.propagated = from_elision;
  return a;
}

Argument Argument::cons(Argument head, Argument tail) {
  Argument a;
  a.form = Form::Cons;
  a.items.push_back(std::move(head));
  a.items.push_back(std::move(tail));
  return a;
}

std::string to_string(const Argument& arg) {
  switch (arg.form) {
    case Argument::Form::Symbol:
      return arg.kind ? std::string(to_string(*arg.kind)) + ": " + to_string(arg.symbol)
                      : to_string(arg.symbol);
    case Argument::Form::Empty:
      return "{}";
    case Argument::Form::Cons:
      return to_string(arg.items[0]) + " :: " + to_string(arg.items[1]);
    case Argument::Form::List: {
      std::string out = "[";
      for (std::size_t i = 0; i < arg.items.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(arg.items[i]);
      }
      return out + "]";
    }
  }
  return {};
}

Spec Spec::make_basic(Ontology onto, SourceLoc loc) {
  Spec s;
  s.op = Op::Basic;
  s.basic = std::move(onto);
  s.loc = loc;
  return s;
}

Spec Spec::make_union(Spec left, Spec right) {
  Spec s;
  s.op = Op::Union;
  s.loc = left.loc;
  s.children.push_back(std::move(left));
  s.children.push_back(std::move(right));
  return s;
}

Spec Spec::make_extension(Spec base, Spec ext) {
  Spec s = make_union(std::move(base), std::move(ext));
  s.op = Op::Extension;
  return s;
}

Spec Spec::make_inst(std::string pattern, std::vector<Argument> args, SourceLoc loc) {
  Spec s;
  s.op = Op::Inst;
  s.pattern = std::move(pattern);
  s.args = std::move(args);
  s.loc = loc;
  return s;
}

Spec Spec::make_let(std::vector<PatternDef> locals, Spec body) {
  Spec s;
  s.op = Op::Let;
  s.loc = body.loc;
  s.locals = std::move(locals);
  s.children.push_back(std::move(body));
  return s;
}

Spec Spec::make_empty() { return Spec{}; }

bool Spec::operator==(const Spec& other) const {
  return op == other.op && basic == other.basic && children == other.children &&
         pattern == other.pattern && args == other.args && locals == other.locals;
}

bool PatternDef::operator==(const PatternDef& other) const {
  return name == other.name && params == other.params && imports == other.imports &&
         body == other.body;
}

bool NamedOntology::operator==(const NamedOntology& other) const {
  return name == other.name && imports == other.imports && body == other.body;
}

bool RefinementDef::operator==(const RefinementDef& other) const {
  return name == other.name && source == other.source && target == other.target &&
         symbol_map == other.symbol_map;
}

const std::string& declaration_name(const Declaration& decl) {
  return std::visit([](const auto& d) -> const std::string& { return d.name; }, decl);
}

SourceLoc declaration_loc(const Declaration& decl) {
  return std::visit([](const auto& d) { return d.loc; }, decl);
}

namespace {

template <class T>
const T* find_decl(const std::vector<Declaration>& decls, const std::string& name) {
  for (const Declaration& d : decls) {
    if (const T* p = std::get_if<T>(&d); p && p->name == name) return p;
  }
  return nullptr;
}

}  // namespace

const PatternDef* Document::find_pattern(const std::string& name) const {
  return find_decl<PatternDef>(decls, name);
}

const NamedOntology* Document::find_ontology(const std::string& name) const {
  return find_decl<NamedOntology>(decls, name);
}

const RefinementDef* Document::find_refinement(const std::string& name) const {
  return find_decl<RefinementDef>(decls, name);
}

}  // namespace godp
