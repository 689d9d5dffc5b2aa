#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "godp/expander.hpp"
#include "godp/ontology.hpp"

namespace godp {

// Named inference rules of the structural entailment engine.
enum class Rule {
  SubClassClosure,      // R1: reflexivity and transitivity of SubClassOf
  Equivalence,          // R2: EquivalentClasses as two SubClassOf
  Conjunction,          // R3: And elimination (subclass side) and introduction
  SubPropertyClosure,   // R4: reflexivity and transitivity of SubPropertyOf
  Inverses,             // R5: InverseProps, and Domain/Range through inverses
  AssertionLifting,     // R6: property assertions lifted along SubPropertyOf
  TypePropagation,      // R7: ClassAssertion along SubClassOf; OneOf membership
  DomainRangeTyping,    // asserted Domain/Range type the ends of assertions
  Restrictions,         // some/only/max monotonicity and existential introduction
  Characteristics,      // transitivity, chains, inherited functionality
};

constexpr std::size_t kRuleCount = 10;

struct RuleEngineConfig {
  std::set<Rule> enabled = {
      Rule::SubClassClosure,  Rule::Equivalence,     Rule::Conjunction,
      Rule::SubPropertyClosure, Rule::Inverses,      Rule::AssertionLifting,
      Rule::TypePropagation,  Rule::DomainRangeTyping, Rule::Restrictions,
      Rule::Characteristics};
  std::size_t step_limit = 100000;  // derived facts per saturation

  bool has(Rule r) const { return enabled.count(r) > 0; }
};

struct Verdict {
  bool proven = false;
  bool step_limit_exceeded = false;
  std::string diagnostic;  // why an axiom is unproven, when known

  bool operator==(const Verdict&) const = default;
};

// Saturated closure of a theory under the enabled rules. Queries are
// read-only and may run concurrently. Domain and Range are never derived
// from scoped (SubClassOf ... only ...) axioms.
class Saturation {
 public:
  Saturation(const Ontology& theory, const RuleEngineConfig& cfg = {});
  ~Saturation();
  Saturation(Saturation&&) noexcept;
  Saturation& operator=(Saturation&&) noexcept;

  Verdict holds(const Axiom& goal) const;
  bool step_limit_exceeded() const;
  std::size_t steps() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Sound, incomplete entailment check. Pure; saturates per call.
Verdict entails(const Ontology& theory, const Axiom& goal, const RuleEngineConfig& cfg = {});

struct Obligation {
  Axiom axiom;
  std::shared_ptr<const Ontology> context;
  std::string ontology;   // the checked ontology
  std::string pattern;    // instantiated pattern carrying the constraint
  std::string parameter;  // constrained parameter (head name for lists)
  std::size_t element = 0;  // list position for list parameters
  std::string site;         // instantiation site
  std::vector<std::pair<std::string, std::string>> mapping;  // parameter ↦ argument
  std::optional<Verdict> verdict;
};

// Constraint axioms of the record's parameters with arguments substituted
// and names stratified, one per constraint (per element for list
// parameters). Constraints mentioning empty-bound names are dropped.
std::vector<Obligation> generate_obligations(const InstantiationRecord& inst,
                                             const Ontology& context);
std::vector<Obligation> generate_obligations(const InstantiationRecord& inst,
                                             std::shared_ptr<const Ontology> context);

// All obligations of an expanded ontology against its full expansion,
// deduplicated by (pattern, parameter, axiom) in first-occurrence order.
std::vector<Obligation> collect_obligations(const std::string& ontology,
                                            const Expansion& expansion);

// Fills in every verdict. The serial form calls entails once per
// obligation; the parallel form saturates each distinct context once and
// answers the goals concurrently. Both produce identical verdicts.
void discharge_serial(std::vector<Obligation>& obs, const RuleEngineConfig& cfg = {});
void discharge_parallel(std::vector<Obligation>& obs, const RuleEngineConfig& cfg = {});

// Writes one `<ontology>__<pattern>__<param>__<k>.omn` file per unproven
// obligation (k counts obligations of the same origin). Returns the paths
// written, in obligation order.
std::vector<std::string> export_obligations(const std::vector<Obligation>& obs,
                                            const std::string& dir);

// Deterministic file stem of each obligation, in order.
std::vector<std::string> obligation_file_stems(const std::vector<Obligation>& obs);

struct RefinementReport {
  std::string name;
  std::vector<std::pair<Axiom, Verdict>> axioms;  // mapped source axioms
  bool proven = false;
};

// Expands both sides, maps the source through the symbol map (identity
// where absent) and checks each source axiom against the target. Throws
// MapKindMismatch when a symbol is mapped to one of another kind.
RefinementReport check_refinement(const RefinementDef& r, Expander& ex,
                                  const RuleEngineConfig& cfg = {},
                                  const std::string& path = {});

// The frames that the last top-level operand of `ontology` adds: every
// subject frame of that operand carrying at least one axiom not entailed
// by the other operands together with the operand's own preconditions.
Ontology contributed_frames(Expander& ex, const std::string& ontology,
                            const RuleEngineConfig& cfg = {});

}  // namespace godp
