#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>

#include "godp/cli.hpp"
#include "godp/emitter.hpp"
#include "godp/parser.hpp"
#include "godp/verifier.hpp"

namespace godp {

namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  std::vector<std::string> libs;
  std::string target;
  bool strict = false;
  std::string obligations_dir;
  std::size_t depth = ExpansionOptions{}.depth_budget;
  std::string out_dir = ".";
};

// Every `.gdol` file under a library path, in a stable order.
std::vector<fs::path> library_files(const std::string& lib) {
  fs::path p(lib);
  if (!fs::is_directory(p)) return {p};
  std::vector<fs::path> out;
  for (const auto& e : fs::recursive_directory_iterator(p)) {
    if (e.is_regular_file() && e.path().extension() == ".gdol") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Loaded {
  Library lib;
  std::vector<std::string> names;  // declarations of the input files, in order
};

Loaded load(const RunConfig& cfg) {
  Loaded l;
  std::set<fs::path> seen;
  auto add = [&](const fs::path& p, bool input) {
    if (!fs::exists(p)) throw Error(ErrorKind::Io, "no such file: " + p.string());
    fs::path key = fs::weakly_canonical(p);
    if (!seen.insert(key).second) return;
    Document doc = load_document(p.string());
    if (input) {
      for (const Declaration& d : doc.decls) l.names.push_back(declaration_name(d));
    }
    l.lib.add(std::move(doc));
  };
  for (const std::string& in : cfg.inputs) add(in, true);
  for (const std::string& lib : cfg.libs) {
    for (const fs::path& p : library_files(lib)) add(p, false);
  }
  return l;
}

std::vector<std::string> selected(const Loaded& l, const RunConfig& cfg, bool ontologies) {
  std::vector<std::string> out;
  for (const std::string& n : l.names) {
    bool kind = ontologies ? l.lib.find_ontology(n) != nullptr
                           : l.lib.find_refinement(n) != nullptr;
    if (kind && (cfg.target.empty() || cfg.target == n)) out.push_back(n);
  }
  if (!cfg.target.empty() && out.empty()) {
    throw Error(ErrorKind::UnknownPattern, "target '" + cfg.target + "' is not declared in the inputs");
  }
  return out;
}

void print_warnings(const Expansion& e, const std::string& name, std::ostream& err) {
  for (const std::string& w : e.warnings) err << "warning: " << name << ": " << w << "\n";
}

int cmd_expand(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Loaded l = load(cfg);
  Expander ex(l.lib, ExpansionOptions{cfg.depth});
  std::vector<std::string> names = selected(l, cfg, true);
  if (!names.empty()) fs::create_directories(cfg.out_dir);
  for (const std::string& name : names) {
    const Expansion& e = ex.expand_ontology(name);
    print_warnings(e, name, err);
    fs::path path = fs::path(cfg.out_dir) / (name + ".omn");
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::Io, "cannot write " + path.string());
    f << emit_manchester(e.ontology);
    out << "wrote " << path.string() << "\n";
  }
  return kExitOk;
}

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Loaded l = load(cfg);
  Expander ex(l.lib, ExpansionOptions{cfg.depth});
  std::vector<Obligation> all;
  for (const std::string& name : selected(l, cfg, true)) {
    const Expansion& e = ex.expand_ontology(name);
    print_warnings(e, name, err);
    std::vector<Obligation> obs = collect_obligations(name, e);
    all.insert(all.end(), obs.begin(), obs.end());
  }
  discharge_parallel(all);

  std::size_t unproven = 0;
  for (const Obligation& ob : all) {
    bool ok = ob.verdict && ob.verdict->proven;
    if (!ok) ++unproven;
    out << (ok ? "proven   " : "UNPROVEN ") << ob.ontology << ": " << to_string(ob.axiom)
        << "  [" << ob.pattern << "." << ob.parameter << " at " << ob.site << "]\n";
    if (!ok && ob.verdict && !ob.verdict->diagnostic.empty()) {
      err << "warning: " << ob.ontology << ": unproven " << to_string(ob.axiom) << ": "
          << ob.verdict->diagnostic << "\n";
    }
  }
  out << all.size() << " obligations, " << all.size() - unproven << " proven, " << unproven
      << " unproven\n";
  if (!cfg.obligations_dir.empty()) {
    for (const std::string& p : export_obligations(all, cfg.obligations_dir)) {
      out << "exported " << p << "\n";
    }
  }
  return cfg.strict && unproven > 0 ? kExitVerificationFailure : kExitOk;
}

int cmd_refine(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  Loaded l = load(cfg);
  Expander ex(l.lib, ExpansionOptions{cfg.depth});
  bool all_proven = true;
  for (const std::string& name : selected(l, cfg, false)) {
    RefinementReport r =
        check_refinement(*l.lib.find_refinement(name), ex, {}, l.lib.path_of(name));
    all_proven = all_proven && r.proven;
    out << name << ": " << (r.proven ? "proven" : "UNPROVEN") << "\n";
    for (const auto& [axiom, v] : r.axioms) {
      if (!v.proven) out << "  unproven: " << to_string(axiom) << "\n";
    }
  }
  return all_proven ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Compiles generic ontology design patterns to OWL Manchester syntax", "godpc"};
  app.require_subcommand(1, 1);
  const std::pair<const char*, const char*> commands[] = {
      {"expand", "write each ontology's expansion as <name>.omn"},
      {"check", "verify parameter constraints of every instantiation"},
      {"refine", "check that each refinement's target entails its source"}};
  for (const auto& [name, description] : commands) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("files", cfg.inputs, "input documents")->required();
    sub->add_option("--target", cfg.target, "only this ontology or refinement");
    sub->add_option("--lib", cfg.libs, "library file or directory (repeatable)");
    sub->add_option("--depth", cfg.depth, "instantiation depth budget");
    sub->add_option("--out", cfg.out_dir, "output directory for expand");
    sub->add_flag("--strict", cfg.strict, "treat unproven obligations as failures");
    sub->add_option("--emit-obligations", cfg.obligations_dir,
                    "write unproven obligations as .omn files here");
    sub->callback([&cfg, sub] { cfg.subcommand = sub->get_name(); });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (cfg.subcommand == "expand") return cmd_expand(cfg, out, err);
    if (cfg.subcommand == "check") return cmd_check(cfg, out, err);
    return cmd_refine(cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace godp
