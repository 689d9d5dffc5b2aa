#include <algorithm>

#include "../emitter/frames.hpp"
#include "godp/emitter.hpp"
#include "godp/parser.hpp"

namespace godp {

namespace {

bool needs_parens(const Spec& child, const Spec& parent, bool is_right) {
  switch (child.op) {
    case Spec::Op::Basic:
    case Spec::Op::Let:
      return true;
    case Spec::Op::Union:
      return parent.op == Spec::Op::Union && is_right;
    case Spec::Op::Extension:
      return parent.op == Spec::Op::Union || is_right;
    case Spec::Op::Inst:
    case Spec::Op::Empty:
      return false;
  }
  return false;
}

void print_spec_into(const Spec& spec, const std::string& indent, std::string& out);

std::string param_text(const Parameter& p) {
  std::string clauses;
  std::vector<detail::FrameClause> cs;
  for (const Axiom& a : p.constraints) {
    if (auto c = detail::frame_clause(a)) cs.push_back(std::move(*c));
  }
  std::sort(cs.begin(), cs.end(), [](const auto& a, const auto& b) {
    return std::tie(a.slot, a.value) < std::tie(b.slot, b.value);
  });
  for (const detail::FrameClause& c : cs) {
    clauses += std::string(" ") + detail::keyword(c.slot) + ": " + c.value;
  }
  std::string head = std::string(to_string(p.kind)) + ": " + to_string(p.name) + clauses;
  std::string out = p.optional ? "? " : "";
  if (p.tail && !clauses.empty()) {
    out += "{" + head + "} :: " + to_string(*p.tail);
  } else if (p.tail) {
    out += head + " :: " + to_string(*p.tail);
  } else {
    out += head;
  }
  return out;
}

std::string given_text(const std::vector<std::string>& imports) {
  if (imports.empty()) return {};
  std::string out = " given ";
  for (std::size_t i = 0; i < imports.size(); ++i) {
    if (i > 0) out += ", ";
    out += imports[i];
  }
  return out;
}

void print_pattern(const PatternDef& p, const std::string& indent, std::string& out) {
  out += "pattern " + p.name;
  if (!p.params.empty()) {
    out += " [";
    for (std::size_t i = 0; i < p.params.size(); ++i) {
      if (i > 0) out += "; ";
      out += param_text(p.params[i]);
    }
    out += "]";
  }
  out += given_text(p.imports) + " =\n" + indent + "  ";
  print_spec_into(p.body, indent + "  ", out);
}

void print_operand(const Spec& child, const Spec& parent, bool is_right, const std::string& indent,
                   std::string& out) {
  if (needs_parens(child, parent, is_right)) {
    out += "(";
    print_spec_into(child, indent + "  ", out);
    out += ")";
  } else {
    print_spec_into(child, indent, out);
  }
}

void print_spec_into(const Spec& spec, const std::string& indent, std::string& out) {
  switch (spec.op) {
    case Spec::Op::Empty:
      out += "{}";
      break;
    case Spec::Op::Basic: {
      std::string text = render(canonicalize(spec.basic), indent);
      // The first line continues the current one.
      text.erase(0, indent.size());
      while (!text.empty() && text.back() == '\n') text.pop_back();
      out += text.empty() ? "{}" : text;
      break;
    }
    case Spec::Op::Union:
    case Spec::Op::Extension:
      print_operand(spec.children[0], spec, false, indent, out);
      out += "\n" + indent + (spec.op == Spec::Op::Union ? "and " : "then ");
      print_operand(spec.children[1], spec, true, indent, out);
      break;
    case Spec::Op::Inst:
      out += spec.pattern;
      if (!spec.args.empty()) {
        out += "[";
        for (std::size_t i = 0; i < spec.args.size(); ++i) {
          if (i > 0) out += "; ";
          out += to_string(spec.args[i]);
        }
        out += "]";
      }
      break;
    case Spec::Op::Let:
      out += "let\n";
      for (const PatternDef& p : spec.locals) {
        out += indent + "  ";
        print_pattern(p, indent + "  ", out);
        out += "\n";
      }
      out += indent + "in ";
      print_spec_into(spec.children.front(), indent + "  ", out);
      break;
  }
}

}  // namespace

std::string print_spec(const Spec& spec) {
  std::string out;
  print_spec_into(spec, "", out);
  return out;
}

std::string print_document(const Document& doc) {
  std::string out;
  for (const Declaration& d : doc.decls) {
    if (!out.empty()) out += "\n";
    if (const auto* p = std::get_if<PatternDef>(&d)) {
      print_pattern(*p, "", out);
    } else if (const auto* o = std::get_if<NamedOntology>(&d)) {
      out += "ontology " + o->name + given_text(o->imports) + " =\n  ";
      print_spec_into(o->body, "  ", out);
    } else if (const auto* r = std::get_if<RefinementDef>(&d)) {
      out += "refinement " + r->name + " =\n  ";
      print_spec_into(r->source, "  ", out);
      out += "\nrefined";
      if (!r->symbol_map.empty()) {
        out += " via ";
        for (std::size_t i = 0; i < r->symbol_map.size(); ++i) {
          if (i > 0) out += ", ";
          out += to_string(r->symbol_map[i].first) + " |-> " + to_string(r->symbol_map[i].second);
        }
      }
      out += " to\n  ";
      print_spec_into(r->target, "  ", out);
    }
    out += "\n";
  }
  return out;
}

}  // namespace godp
