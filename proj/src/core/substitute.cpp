#include "godp/spec.hpp"

namespace godp {

namespace {

// Appends the symbols of a list argument to `out`, flattening nested lists.
// Returns false if any element is empty.
bool splice_into(const Argument& list, std::vector<Name>& out) {
  for (const Argument& item : list.items) {
    switch (item.form) {
      case Argument::Form::Symbol:
        out.push_back(item.symbol);
        break;
      case Argument::Form::List:
        if (!splice_into(item, out)) return false;
        break;
      case Argument::Form::Empty:
        return false;
      case Argument::Form::Cons:
        throw Error(ErrorKind::KindMismatch, "unresolved list constructor " + to_string(item));
    }
  }
  return true;
}

NameImage image_of(const Name& name, const Substitution& sub) {
  Argument a = substitute_name(name, sub);
  switch (a.form) {
    case Argument::Form::Symbol:
      return NameImage::single(std::move(a.symbol));
    case Argument::Form::Empty:
      return NameImage::empty();
    case Argument::Form::List: {
      std::vector<Name> names;
      if (!splice_into(a, names)) return NameImage::empty();
      return NameImage::list(std::move(names));
    }
    case Argument::Form::Cons:
      break;
  }
  throw Error(ErrorKind::KindMismatch, "unresolved list constructor bound to " + to_string(name));
}

}  // namespace

Argument substitute_name(const Name& name, const Substitution& sub) {
  Name base(name.base);
  if (auto it = sub.find(name.base); it != sub.end()) {
    const Argument& bound = it->second;
    if (name.args.empty()) return bound;
    switch (bound.form) {
      case Argument::Form::Symbol:
        base = bound.symbol;
        break;
      case Argument::Form::Empty:
        return Argument::empty(true);
      case Argument::Form::List:
      case Argument::Form::Cons:
        throw Error(ErrorKind::KindMismatch,
                    "list bound to '" + name.base + "' used as the base of " + to_string(name));
    }
  }
  if (name.args.empty()) return Argument::of(std::move(base));

  std::vector<Name> args = std::move(base.args);
  for (const Name& arg : name.args) {
    Argument a = substitute_name(arg, sub);
    switch (a.form) {
      case Argument::Form::Symbol:
        args.push_back(std::move(a.symbol));
        break;
      case Argument::Form::Empty:
        return Argument::empty(true);
      case Argument::Form::List:
        if (!splice_into(a, args)) return Argument::empty(true);
        break;
      case Argument::Form::Cons:
        throw Error(ErrorKind::KindMismatch, "unresolved list constructor in " + to_string(name));
    }
  }
  return Argument::of(Name(std::move(base.base), std::move(args)));
}

Argument substitute(const Argument& arg, const Substitution& sub) {
  switch (arg.form) {
    case Argument::Form::Symbol: {
      Argument out = substitute_name(arg.symbol, sub);
      if (out.is_symbol() && arg.kind) out.kind = arg.kind;
      return out;
    }
    case Argument::Form::Empty:
      return arg;
    case Argument::Form::List: {
      std::vector<Argument> items;
      items.reserve(arg.items.size());
      for (const Argument& item : arg.items) items.push_back(substitute(item, sub));
      return Argument::list(std::move(items));
    }
    case Argument::Form::Cons: {
      Argument head = substitute(arg.items[0], sub);
      Argument tail = substitute(arg.items[1], sub);
      if (tail.is_list()) {
        tail.items.insert(tail.items.begin(), std::move(head));
        return tail;
      }
      return Argument::cons(std::move(head), std::move(tail));
    }
  }
  return arg;
}

Spec substitute(const Spec& spec, const Substitution& sub, std::vector<std::string>* warnings) {
  if (sub.empty()) return spec;
  Spec out;
  out.op = spec.op;
  out.loc = spec.loc;
  switch (spec.op) {
    case Spec::Op::Empty:
      break;
    case Spec::Op::Basic:
      out.basic = map_ontology(spec.basic, [&](const Name& n) { return image_of(n, sub); });
      break;
    case Spec::Op::Union:
    case Spec::Op::Extension:
      for (const Spec& c : spec.children) out.children.push_back(substitute(c, sub, warnings));
      break;
    case Spec::Op::Inst:
      out.pattern = spec.pattern;
      for (const Argument& a : spec.args) out.args.push_back(substitute(a, sub));
      break;
    case Spec::Op::Let:
      for (const PatternDef& local : spec.locals) {
        Substitution inner = sub;
        for (const Parameter& p : local.params) {
          std::vector<std::string> bound{p.name.base};
          if (p.tail) bound.push_back(p.tail->base);
          for (const std::string& b : bound) {
            if (inner.erase(b) > 0 && warnings) {
              warnings->push_back("parameter '" + b + "' of local pattern " + local.name +
                                  " shadows an outer binding");
            }
          }
        }
        PatternDef d = local;
        for (Parameter& p : d.params) {
          std::set<Axiom> constraints;
          for (const Axiom& c : p.constraints) {
            if (auto m = map_names(c, [&](const Name& n) { return image_of(n, inner); })) {
              constraints.insert(canonical(*m));
            }
          }
          p.constraints = std::move(constraints);
        }
        d.body = substitute(local.body, inner, warnings);
        out.locals.push_back(std::move(d));
      }
      out.children.push_back(substitute(spec.children.front(), sub, warnings));
      break;
  }
  return out;
}

Substitution compose(const Substitution& first, const Substitution& second) {
  Substitution out;
  for (const auto& [k, v] : first) out.emplace(k, substitute(v, second));
  for (const auto& [k, v] : second) out.emplace(k, v);
  return out;
}

}  // namespace godp
