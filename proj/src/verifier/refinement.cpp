#include <map>

#include "../emitter/frames.hpp"
#include "godp/verifier.hpp"

namespace godp {

RefinementReport check_refinement(const RefinementDef& r, Expander& ex,
                                  const RuleEngineConfig& cfg, const std::string& path) {
  Ontology source = ex.expand_spec(r.source, path).ontology;
  Ontology target = ex.expand_spec(r.target, path).ontology;

  std::map<Name, Name> symbols;
  for (const auto& [from, to] : r.symbol_map) {
    Name a(stratify(from)), b(stratify(to));
    auto ka = source.kind_of(a);
    auto kb = target.kind_of(b);
    if (ka && kb && *ka != *kb) {
      throw Error(ErrorKind::MapKindMismatch, r.name + ": " + to_string(a) + " is a " +
                                                  to_string(*ka) + " but " + to_string(b) +
                                                  " is a " + to_string(*kb));
    }
    symbols[a] = b;
  }
  Ontology mapped = map_ontology(source, [&](const Name& n) {
    auto it = symbols.find(n);
    return NameImage::single(it == symbols.end() ? n : it->second);
  });

  RefinementReport report;
  report.name = r.name;
  Saturation sat(target, cfg);
  report.proven = true;
  for (const Axiom& a : mapped.axioms()) {
    Verdict v = sat.holds(a);
    report.proven = report.proven && v.proven;
    report.axioms.emplace_back(a, std::move(v));
  }
  return report;
}

Ontology contributed_frames(Expander& ex, const std::string& ontology,
                            const RuleEngineConfig& cfg) {
  std::vector<Expansion> ops = ex.expand_operands(ontology);
  if (ops.empty()) return {};
  const Expansion& last = ops.back();

  Ontology theory;
  for (std::size_t i = 0; i + 1 < ops.size(); ++i) theory.merge(ops[i].ontology);
  // The operand's own preconditions are assumed when judging what it adds.
  for (const InstantiationRecord& rec : last.instantiations) {
    for (const Obligation& ob : generate_obligations(rec, last.ontology)) theory.add(ob.axiom);
  }
  Saturation sat(theory, cfg);

  std::map<Name, std::vector<Axiom>> frames;
  std::map<Name, bool> adds;
  std::vector<Axiom> standalone;
  for (const Axiom& a : last.ontology.axioms()) {
    auto clause = detail::frame_clause(a);
    bool novel = !sat.holds(a).proven;
    if (!clause) {
      if (novel) standalone.push_back(a);
      continue;
    }
    frames[clause->subject].push_back(a);
    adds[clause->subject] = adds[clause->subject] || novel;
  }

  Ontology out;
  for (const auto& [subject, axioms] : frames) {
    if (!adds[subject]) continue;
    for (const Axiom& a : axioms) out.add(a);
  }
  for (const Axiom& a : standalone) out.add(a);
  return out;
}

}  // namespace godp
