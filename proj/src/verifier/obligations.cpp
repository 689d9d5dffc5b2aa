#include <set>
#include <tuple>

#include "godp/verifier.hpp"

namespace godp {

namespace {

std::vector<Name> spliced(const Argument& list) {
  std::vector<Name> out;
  for (const Argument& a : list.items) {
    if (a.is_symbol()) out.push_back(a.symbol);
  }
  return out;
}

NameImage image(const Name& n, const Substitution& sub) {
  Argument a = substitute_name(n, sub);
  switch (a.form) {
    case Argument::Form::Symbol:
      return NameImage::single(std::move(a.symbol));
    case Argument::Form::List: {
      for (const Argument& item : a.items) {
        if (!item.is_symbol()) return NameImage::empty();
      }
      return NameImage::list(spliced(a));
    }
    case Argument::Form::Empty:
    case Argument::Form::Cons:
      break;
  }
  return NameImage::empty();
}

// Substitution for element k of every list parameter (parallel indexing).
Substitution element_substitution(const InstantiationRecord& rec, std::size_t k) {
  Substitution sub = rec.binding.sub;
  for (const Parameter& p : rec.params) {
    if (!p.is_list()) continue;
    auto it = rec.binding.lists.find(p.name.base);
    if (it == rec.binding.lists.end() || k >= it->second.items.size()) continue;
    const auto& items = it->second.items;
    sub[p.name.base] = items[k].is_empty() ? Argument::empty(true) : items[k];
    sub[p.tail->base] = Argument::list(std::vector<Argument>(items.begin() + k + 1, items.end()));
  }
  return sub;
}

std::size_t list_length(const InstantiationRecord& rec) {
  for (const auto& [head, list] : rec.binding.lists) return list.items.size();
  return 1;
}

std::vector<std::pair<std::string, std::string>> mapping_of(const InstantiationRecord& rec) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const Parameter& p : rec.params) {
    if (p.is_list()) {
      auto it = rec.binding.lists.find(p.name.base);
      std::string shown = it != rec.binding.lists.end() ? to_string(it->second) : "{}";
      out.emplace_back(p.name.base + " :: " + p.tail->base, shown);
    } else {
      auto it = rec.binding.sub.find(p.name.base);
      std::string shown =
          it == rec.binding.sub.end() || it->second.is_empty() ? "{}" : to_string(it->second);
      out.emplace_back(p.name.base, shown);
    }
  }
  return out;
}

}  // namespace

std::vector<Obligation> generate_obligations(const InstantiationRecord& rec,
                                             std::shared_ptr<const Ontology> context) {
  std::vector<Obligation> out;
  auto mapping = mapping_of(rec);
  for (const Parameter& p : rec.params) {
    if (p.constraints.empty()) continue;
    std::size_t n = p.is_list() ? list_length(rec) : 1;
    for (std::size_t k = 0; k < n; ++k) {
      Substitution sub = p.is_list() ? element_substitution(rec, k) : rec.binding.sub;
      for (const Axiom& c : p.constraints) {
        auto mapped = map_names(c, [&](const Name& nm) {
          NameImage img = image(nm, sub);
          for (Name& x : img.names) x = Name(stratify(x));
          return img;
        });
        if (!mapped) continue;  // mentions an empty-bound name
        Obligation ob;
        ob.axiom = canonical(*mapped);
        ob.context = context;
        ob.pattern = rec.pattern;
        ob.parameter = p.name.base;
        ob.element = k;
        ob.site = rec.site;
        ob.mapping = mapping;
        out.push_back(std::move(ob));
      }
    }
  }
  return out;
}

std::vector<Obligation> generate_obligations(const InstantiationRecord& rec,
                                             const Ontology& context) {
  return generate_obligations(rec, std::make_shared<const Ontology>(context));
}

std::vector<Obligation> collect_obligations(const std::string& ontology,
                                            const Expansion& expansion) {
  auto context = std::make_shared<const Ontology>(expansion.ontology);
  std::vector<Obligation> out;
  std::set<std::tuple<std::string, std::string, Axiom>> seen;
  for (const InstantiationRecord& rec : expansion.instantiations) {
    for (Obligation& ob : generate_obligations(rec, context)) {
      if (!seen.emplace(ob.pattern, ob.parameter, ob.axiom).second) continue;
      ob.ontology = ontology;
      out.push_back(std::move(ob));
    }
  }
  return out;
}

}  // namespace godp
