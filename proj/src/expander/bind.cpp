#include <optional>

#include "godp/expander.hpp"

namespace godp {

namespace {

void check_kind(const Parameter& p, const Argument& arg, const KindEnv* known) {
  std::optional<SymbolKind> actual = arg.kind;
  if (!actual && known) {
    if (auto it = known->find(arg.symbol); it != known->end()) actual = it->second;
  }
  if (actual && *actual != p.kind) {
    throw Error(ErrorKind::KindMismatch, "argument " + to_string(arg.symbol) + " is a " +
                                             to_string(*actual) + " but parameter '" +
                                             p.name.base + "' expects a " + to_string(p.kind));
  }
}

// Handles an Empty given for a whole parameter. Returns false if the
// instantiation is void.
bool bind_empty(const Parameter& p, const Argument& arg, Binding& b) {
  if (!p.optional) {
    if (!arg.propagated) {
      throw Error(ErrorKind::EmptyForRequired,
                  "empty argument given for required parameter '" + p.name.base + "'");
    }
    b.voided = true;
    return false;
  }
  b.empty_bound.insert(p.name.base);
  b.sub[p.name.base] = Argument::empty(true);
  if (p.tail) {
    b.empty_bound.insert(p.tail->base);
    b.sub[p.tail->base] = Argument::empty(true);
  }
  return true;
}

}  // namespace

Binding bind_arguments(const std::vector<Parameter>& params, const std::vector<Argument>& args,
                       const KindEnv* known) {
  if (params.size() != args.size()) {
    throw Error(ErrorKind::ArityMismatch, "expected " + std::to_string(params.size()) +
                                              " arguments, got " + std::to_string(args.size()));
  }
  Binding b;
  std::optional<std::size_t> list_length;
  const Parameter* first_list = nullptr;

  for (std::size_t i = 0; i < params.size(); ++i) {
    const Parameter& p = params[i];
    const Argument& arg = args[i];

    if (arg.is_empty()) {
      if (!bind_empty(p, arg, b)) return b;
      continue;
    }

    if (!p.is_list()) {
      if (!arg.is_symbol()) {
        throw Error(ErrorKind::KindMismatch,
                    "list " + to_string(arg) + " given for parameter '" + p.name.base + "'");
      }
      check_kind(p, arg, known);
      b.sub[p.name.base] = arg;
      continue;
    }

    if (!arg.is_list()) {
      throw Error(ErrorKind::KindMismatch, "list parameter '" + p.name.base + " :: " +
                                               p.tail->base + "' needs a list, got " +
                                               to_string(arg));
    }
    if (list_length && *list_length != arg.items.size()) {
      throw Error(ErrorKind::ListLengthMismatch,
                  "lists for '" + first_list->name.base + "' and '" + p.name.base +
                      "' differ in length (" + std::to_string(*list_length) + " vs " +
                      std::to_string(arg.items.size()) + ")");
    }
    list_length = arg.items.size();
    if (!first_list) first_list = &p;
    b.lists[p.name.base] = arg;
    if (arg.items.empty()) {
      b.sub[p.tail->base] = arg;
      continue;
    }

    const Argument& head = arg.items.front();
    if (head.is_empty()) {
      // An undefined table cell: everything mentioning the head is elided.
      b.empty_bound.insert(p.name.base);
      b.sub[p.name.base] = Argument::empty(true);
    } else if (head.is_symbol()) {
      check_kind(p, head, known);
      b.sub[p.name.base] = head;
    } else {
      throw Error(ErrorKind::KindMismatch,
                  "nested list " + to_string(head) + " given as element of '" + p.name.base + "'");
    }
    b.sub[p.tail->base] =
        Argument::list(std::vector<Argument>(arg.items.begin() + 1, arg.items.end()));
  }

  b.exhausted = list_length && *list_length == 0;
  return b;
}

}  // namespace godp
