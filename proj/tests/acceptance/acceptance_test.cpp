// Runs every acceptance criterion and prints one PASS/FAIL line per
// criterion. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "../support.hpp"
#include "godp/cli.hpp"
#include "godp/emitter.hpp"
#include "godp/verifier.hpp"

using namespace godp;
using namespace godp::testing;
namespace fs = std::filesystem;

namespace {

struct Failure {
  std::string why;
};

void require(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

std::string golden(const std::string& name) {
  return read_file(corpus() / "golden" / (name + ".omn"));
}

void require_zero_diff(const Ontology& actual, const std::string& golden_name) {
  GoldenDiff d = diff_golden(actual, golden(golden_name));
  require(d.empty(), "diff against " + golden_name + ".omn:\n" + to_string(d));
}

Ontology fragment(const std::string& text) { return parse_manchester_fragment(text); }

Argument sym(const std::string& s) { return Argument::of(Name(s)); }

Argument names(std::initializer_list<const char*> ns) {
  std::vector<Argument> items;
  for (const char* n : ns) items.push_back(sym(n));
  return Argument::list(std::move(items));
}

// -- golden expansions ------------------------------------------------------

void golden_temporal_extent() {
  Library lib = corpus_library();
  Expander ex(lib);
  require_zero_diff(ex.expand_ontology("TEMPORAL_Extent_Vehicle_log").ontology,
                    "TEMPORAL_Extent_Vehicle_log");
}

void golden_change_pd() {
  Library lib = corpus_library();
  Expander ex(lib);
  require_zero_diff(ex.expand_ontology("Change_PD_Vehicle_log").ontology,
                    "Change_PD_Vehicle_log");
}

void golden_ordgrade() {
  Library lib = corpus_library();
  Expander ex(lib);
  const Ontology& o = ex.expand_ontology("OrdGRADE_MaxSeats").ontology;
  require_zero_diff(o, "OrdGRADE_MaxSeats");
  // One frame for gt_MaxSeats, united from the two instantiations naming it.
  std::size_t gt_frames = 0;
  for (const Frame& f : canonicalize(o).frames) gt_frames += f.subject == "gt_MaxSeats";
  require(gt_frames == 1, "gt_MaxSeats appears in " + std::to_string(gt_frames) + " frames");
}

void golden_data_driver_contribution() {
  Library lib = corpus_library();
  Expander ex(lib);
  Ontology contributed = contributed_frames(ex, "Data_Driver_log");
  require_zero_diff(contributed, "Data_Driver_log_contribution");

  std::vector<std::string> subjects;
  for (const Frame& f : canonicalize(contributed).frames) {
    if (!f.clauses.empty()) {
      require(f.kind == SymbolKind::Individual, "non-individual frame " + f.subject);
      subjects.push_back(f.subject);
    }
  }
  require(subjects == std::vector<std::string>{"bkb_BusDriver", "bkb_PotentialDriver"},
          "contributed frames differ");

  const Ontology& driver = ex.expand_ontology("Driver_log").ontology;
  const Ontology& full = ex.expand_ontology("Data_Driver_log").ontology;
  for (const Axiom& a : driver.axioms()) {
    require(full.contains(a), "Data_Driver_log lacks " + to_string(a));
  }
  for (const auto& [n, k] : driver.declarations()) {
    require(full.kind_of(n) == k, "Data_Driver_log lacks declaration " + to_string(n));
  }
  require(full.axioms().size() > driver.axioms().size(), "no proper superset");
}

// -- stratification -----------------------------------------------------------

Name random_name(std::mt19937& rng, int depth) {
  static const char* kBases[] = {"a", "b", "c", "Vehicle", "gt", "PD", "x1"};
  Name n(kBases[rng() % 7]);
  if (depth > 0) {
    std::size_t k = rng() % 3;
    for (std::size_t i = 0; i < k; ++i) n.args.push_back(random_name(rng, depth - 1));
  }
  return n;
}

// Independent oracle: the leaves in reading order joined by '_'.
void flatten(const Name& n, std::vector<std::string>& out) {
  out.push_back(n.base);
  for (const Name& a : n.args) flatten(a, out);
}
std::string joined(const Name& n) {
  std::vector<std::string> parts;
  flatten(n, parts);
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "_" : "") + parts[i];
  return s;
}

Name apply(const Name& base, const Name& arg) {
  Name n = base;
  n.args.push_back(arg);
  return n;
}

void stratification_property() {
  std::mt19937 rng(20201);
  for (int trial = 0; trial < 500; ++trial) {
    // Trees of depth ≤ 3 overall: operands of depth ≤ 1 under two levels.
    Name a = random_name(rng, 1), b = random_name(rng, 1), c = random_name(rng, 1);
    Name n1("name", {a, apply(b, c)});
    Name n2("name", {apply(a, b), c});
    Name n3("name", {a, b, c});
    std::string s1 = stratify(n1), s2 = stratify(n2), s3 = stratify(n3);
    require(s1 == s2 && s2 == s3, to_string(n1) + " / " + to_string(n2) + " / " + to_string(n3) +
                                      " stratify to " + s1 + " / " + s2 + " / " + s3);
    require(s1 == joined(n3), "unexpected stratified form " + s1);

    // The same holds when the nesting is produced by substitution.
    std::string doc = "pattern P [ Class: x; Class: y ] = Class: name[x, y]\n";
    Library lib;
    lib.add(parse_document(doc, "<strat>"));
    Expander ex(lib);
    Expansion e = ex.expand_instantiation("P", {Argument::of(apply(a, b)), Argument::of(c)});
    require(e.ontology.kind_of(Name(s1)) == SymbolKind::Class,
            "substituted name does not stratify to " + s1);
    require(is_stratified(e.ontology), "parameterized name survived expansion");
  }

  // No emitted output of the corpus contains a bracket.
  Library lib = corpus_library();
  Expander ex(lib);
  for (const Document& d : lib.documents()) {
    for (const Declaration& decl : d.decls) {
      if (!std::holds_alternative<NamedOntology>(decl)) continue;
      const std::string& name = declaration_name(decl);
      std::string text = emit_manchester(ex.expand_ontology(name).ontology);
      require(text.find('[') == std::string::npos, name + " output contains '['");
    }
  }
}

// -- optional elision ---------------------------------------------------------

void optional_elision() {
  Library lib = corpus_library();
  Expander ex(lib);

  // Without a provider only the performer half and the temporal extent remain.
  Expansion mf = ex.expand_instantiation("CHANGE_Mf_Role", {sym("Car")});
  Expansion upper = ex.expand_spec(
      parse_document("ontology U = Scoped_FUNCTION_Inverse[manifestationOf; Mf[Car]; Car; "
                     "hasManifestation] and TEMPORAL_Extent[Mf[Car]]")
          .find_ontology("U")
          ->body);
  require(mf.ontology.axioms() == upper.ontology.axioms(),
          "CHANGE_Mf_Role differs from the performer half:\n" +
              to_string(diff_ontologies(mf.ontology, upper.ontology)));

  Expansion role = ex.expand_instantiation(
      "ROLE_Explicit", {sym("Rl"), sym("Pf"), sym("pBy"), sym("pfs"), Argument::empty(),
                        Argument::empty(), Argument::empty()});
  for (const Axiom& a : role.ontology.axioms()) {
    for (const auto& [k, n] : signature(a)) {
      require(n.base != "Provider" && n.base != "providedBy" && n.base != "provides",
              "provider axiom survived: " + to_string(a));
    }
  }
  require(role.ontology.axioms().size() == upper.ontology.axioms().size(),
          "ROLE_Explicit without provider has unexpected axioms");

  // VAL_Set without an order: membership only, no order axioms or facts.
  Expansion unordered =
      ex.expand_instantiation("VAL_Set", {sym("Val"), Argument::empty(), names({"v0", "v1", "v2"})});
  for (const Axiom& a : unordered.ontology.axioms()) {
    require(!std::holds_alternative<ax::Transitive>(a) && !std::holds_alternative<ax::Domain>(a) &&
                !std::holds_alternative<ax::Range>(a) &&
                !std::holds_alternative<ax::PropAssertion>(a),
            "order axiom survived: " + to_string(a));
  }
  Expansion single =
      ex.expand_instantiation("VAL_Set", {sym("Val"), Argument::empty(), names({"v0"})});
  Ontology expected = fragment(
      "Individual: v0 Types: Val\n"
      "DifferentIndividuals: v0\n"
      "Class: Val EquivalentTo: {v0}\n");
  require(single.ontology.axioms() == expected.axioms(),
          "VAL_Set[Val; ; [v0]]:\n" + to_string(diff_ontologies(single.ontology, expected)));
}

// -- list recursion -------------------------------------------------------------

void list_recursion() {
  Library lib = corpus_library_with(
      "pattern Forever [ Class: x ] = Class: x SubClassOf: Thing then Forever[x]\n");
  Expander ex(lib);
  const std::vector<std::pair<std::vector<const char*>, std::size_t>> cases = {
      {{}, 0}, {{"R1"}, 3}, {{"R1", "R2", "R3"}, 9}};
  for (const auto& [ranges, expected] : cases) {
    std::vector<Argument> rs, ps;
    for (const char* r : ranges) {
      rs.push_back(sym(r));
      ps.push_back(sym(std::string("p_") + r));
    }
    Expansion e = ex.expand_instantiation(
        "OVERLOAD_Domain", {sym("D"), sym("m"), Argument::list(rs), Argument::list(ps)});
    require(e.ontology.axioms().size() == expected,
            std::to_string(ranges.size()) + " elements gave " +
                std::to_string(e.ontology.axioms().size()) + " axioms, expected " +
                std::to_string(expected));
  }

  try {
    ex.expand_instantiation("OVERLOAD_Domain",
                            {sym("D"), sym("m"), names({"R1", "R2"}), names({"p1", "p2", "p3"})});
    require(false, "unequal lists were accepted");
  } catch (const Error& e) {
    require(e.kind() == ErrorKind::ListLengthMismatch,
            std::string("wrong error for unequal lists: ") + e.what());
  }

  auto start = std::chrono::steady_clock::now();
  try {
    ex.expand_instantiation("Forever", {sym("A")});
    require(false, "non-well-founded pattern terminated");
  } catch (const Error& e) {
    require(e.kind() == ErrorKind::DepthExceeded,
            std::string("wrong error for runaway recursion: ") + e.what());
  }
  auto elapsed = std::chrono::steady_clock::now() - start;
  require(elapsed < std::chrono::seconds(5), "runaway recursion took too long to stop");
}

// -- refinement -------------------------------------------------------------------

void refinement() {
  Library lib = corpus_library();
  Expander ex(lib);
  for (const char* name : {"R", "Scoped_Step1", "Scoped_Step2"}) {
    RefinementReport r = check_refinement(*lib.find_refinement(name), ex);
    require(r.proven, std::string(name) + " is not proven");
  }
  RefinementReport weak = check_refinement(*lib.find_refinement("Weakened"), ex);
  std::size_t unproven = 0;
  for (const auto& [a, v] : weak.axioms) unproven += !v.proven;
  require(!weak.proven && unproven == 1,
          "weakened target has " + std::to_string(unproven) + " unproven axioms");
}

// -- obligations ------------------------------------------------------------------

void obligation_generation() {
  std::vector<std::string> args = {"check",
                                   (corpus() / "logs" / "driver.gdol").string(),
                                   (corpus() / "logs" / "data_driver.gdol").string(),
                                   "--lib", corpus().string()};
  std::ostringstream out1, out2, err;
  int rc = run_cli(args, out1, err);
  require(rc == kExitOk, "check exited with " + std::to_string(rc) + ": " + err.str());
  run_cli(args, out2, err);
  require(out1.str() == out2.str(), "obligation report is not deterministic");
  for (const char* needle :
       {"Range(hasLicence, DrivingLicence)", "ClassAssertion(MaxAuthorisedMass, le3500kg)",
        "ClassAssertion(MaxSeats, le9Seats)", "ClassAssertion(DrivingLicence, BMotorVehicle)",
        "PropAssertion(licencedFor_le_BMotorVehicle, bkb_PotentialDriver, bkbs_VWBus)"}) {
    require(out1.str().find(needle) != std::string::npos, std::string("missing ") + needle);
  }

  Library lib = corpus_library();
  Expander ex(lib);
  Verdict v = entails(ex.expand_ontology("Driver_log").ontology,
                      ax::SubPropertyOf{PropExpr::named(Name("licencedFor_le_DBus")),
                                        PropExpr::named(Name("licencedFor_BMotorVehicle"))});
  require(v.proven, "SubPropertyOf(licencedFor_le_DBus, licencedFor_BMotorVehicle) unproven: " +
                        v.diagnostic);
}

// -- determinism and replay --------------------------------------------------------

std::map<std::string, std::string> expand_all(const fs::path& root, const fs::path& out) {
  std::vector<std::string> args = {"expand"};
  for (const auto& p : gdol_files(root)) args.push_back(p.string());
  args.insert(args.end(), {"--out", out.string()});
  std::ostringstream o, e;
  int rc = run_cli(args, o, e);
  require(rc == kExitOk, "expand failed: " + e.str());
  std::map<std::string, std::string> files;
  for (const auto& f : fs::directory_iterator(out)) {
    files[f.path().filename().string()] = read_file(f.path());
  }
  return files;
}

// Names a spec refers to: instantiated patterns and referenced ontologies.
void references(const Spec& s, std::set<std::string>& out) {
  if (s.op == Spec::Op::Inst) out.insert(s.pattern);
  for (const Spec& c : s.children) references(c, out);
  for (const PatternDef& local : s.locals) references(local.body, out);
}

void determinism_and_replay() {
  fs::path work = scratch_dir("replay");
  fs::copy(corpus(), work / "corpus", fs::copy_options::recursive);

  auto first = expand_all(work / "corpus", work / "a");
  auto second = expand_all(work / "corpus", work / "b");
  require(first == second, "two runs differ");
  require(!first.empty(), "no outputs");

  // Edit one pattern body and replay.
  fs::path temporal = work / "corpus" / "patterns" / "temporal.gdol";
  std::string text = read_file(temporal);
  std::string marker = "then Class: TemporalExtent DisjointWith: C";
  auto at = text.find(marker);
  require(at != std::string::npos, "edit marker not found");
  text.insert(at + marker.size(), "\n     Class: TemporalExtent SubClassOf: Region");
  write_file(temporal, text);
  auto edited = expand_all(work / "corpus", work / "c");

  // Oracle: ontologies that reach TEMPORAL_Extent through references/imports.
  std::map<std::string, std::set<std::string>> deps;
  std::set<std::string> ontologies;
  for (const auto& p : gdol_files(work / "corpus")) {
    for (const Declaration& d : load_document(p.string()).decls) {
      std::set<std::string>& out = deps[declaration_name(d)];
      if (const auto* pd = std::get_if<PatternDef>(&d)) {
        references(pd->body, out);
        out.insert(pd->imports.begin(), pd->imports.end());
      } else if (const auto* o = std::get_if<NamedOntology>(&d)) {
        references(o->body, out);
        out.insert(o->imports.begin(), o->imports.end());
        ontologies.insert(o->name);
      }
    }
  }
  std::function<bool(const std::string&, std::set<std::string>&)> reaches =
      [&](const std::string& n, std::set<std::string>& seen) {
        if (n == "TEMPORAL_Extent") return true;
        if (!seen.insert(n).second) return false;
        for (const std::string& m : deps[n]) {
          if (reaches(m, seen)) return true;
        }
        return false;
      };
  std::set<std::string> expected, changed;
  for (const std::string& o : ontologies) {
    std::set<std::string> seen;
    if (reaches(o, seen)) expected.insert(o + ".omn");
  }
  for (const auto& [file, content] : first) {
    if (edited.at(file) != content) changed.insert(file);
  }
  require(!expected.empty(), "oracle found no dependents");
  std::string listing;
  for (const auto& f : changed) listing += " " + f;
  require(changed == expected, "changed outputs:" + listing);
  fs::remove_all(work);
}

// -- round trip -----------------------------------------------------------------

void golden_round_trip() {
  for (const auto& e : fs::directory_iterator(corpus() / "golden")) {
    Ontology parsed = parse_manchester_fragment(read_file(e.path()));
    std::string emitted = emit_manchester(parsed);
    Ontology reparsed = parse_manchester_fragment(emitted);
    require(reparsed == parsed, e.path().filename().string() + " is not a fixed point");
    require(emit_manchester(reparsed) == emitted,
            e.path().filename().string() + " re-emits differently");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void()>>> criteria = {
      {"golden_temporal_extent_vehicle", golden_temporal_extent},
      {"golden_change_pd_vehicle", golden_change_pd},
      {"golden_ordgrade_maxseats", golden_ordgrade},
      {"golden_data_driver_contribution", golden_data_driver_contribution},
      {"stratification_property", stratification_property},
      {"optional_elision", optional_elision},
      {"list_recursion", list_recursion},
      {"refinement_chain", refinement},
      {"obligation_generation", obligation_generation},
      {"determinism_and_replay", determinism_and_replay},
      {"golden_round_trip", golden_round_trip},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    try {
      run();
      std::cout << "PASS " << name << "\n";
    } catch (const Failure& f) {
      ++failed;
      std::cout << "FAIL " << name << ": " << f.why << "\n";
    } catch (const std::exception& e) {
      ++failed;
      std::cout << "FAIL " << name << ": unexpected exception: " << e.what() << "\n";
    }
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
