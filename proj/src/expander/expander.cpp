#include "godp/expander.hpp"

#include <pthread.h>

#include <exception>
#include <functional>

namespace godp {

// ---------------------------------------------------------------------------
// Library

void Library::add(Document doc) {
  std::size_t d = docs_.size();
  for (std::size_t i = 0; i < doc.decls.size(); ++i) {
    const std::string& name = declaration_name(doc.decls[i]);
    if (auto it = index_.find(name); it != index_.end()) {
      throw Error(ErrorKind::DuplicateDeclaration,
                  "'" + name + "' declared in " + doc.path + " is already declared in " +
                      docs_[it->second.doc].path);
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (declaration_name(doc.decls[j]) == name) {
        throw Error(ErrorKind::DuplicateDeclaration,
                    "'" + name + "' is declared twice in " + doc.path);
      }
    }
  }
  for (std::size_t i = 0; i < doc.decls.size(); ++i) {
    index_.emplace(declaration_name(doc.decls[i]), Entry{d, i});
  }
  docs_.push_back(std::move(doc));
}

const Declaration* Library::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return nullptr;
  return &docs_[it->second.doc].decls[it->second.decl];
}

const PatternDef* Library::find_pattern(const std::string& name) const {
  const Declaration* d = find(name);
  return d ? std::get_if<PatternDef>(d) : nullptr;
}

const NamedOntology* Library::find_ontology(const std::string& name) const {
  const Declaration* d = find(name);
  return d ? std::get_if<NamedOntology>(d) : nullptr;
}

const RefinementDef* Library::find_refinement(const std::string& name) const {
  const Declaration* d = find(name);
  return d ? std::get_if<RefinementDef>(d) : nullptr;
}

const std::string& Library::path_of(const std::string& name) const {
  static const std::string kNone;
  auto it = index_.find(name);
  return it == index_.end() ? kNone : docs_[it->second.doc].path;
}

std::vector<const Spec*> top_level_operands(const Spec& spec) {
  if (spec.op == Spec::Op::Union || spec.op == Spec::Op::Extension) {
    std::vector<const Spec*> out = top_level_operands(spec.children[0]);
    std::vector<const Spec*> right = top_level_operands(spec.children[1]);
    out.insert(out.end(), right.begin(), right.end());
    return out;
  }
  return {&spec};
}

// ---------------------------------------------------------------------------
// Running on a large stack

namespace {

thread_local bool on_large_stack = false;

constexpr std::size_t kExpansionStack = std::size_t{1} << 30;

void run_on_large_stack(const std::function<void()>& fn) {
  if (on_large_stack) {
    fn();
    return;
  }
  struct Task {
    const std::function<void()>* fn;
    std::exception_ptr error;
  } task{&fn, nullptr};

  auto entry = [](void* arg) -> void* {
    auto* t = static_cast<Task*>(arg);
    on_large_stack = true;
    try {
      (*t->fn)();
    } catch (...) {
      t->error = std::current_exception();
    }
    return nullptr;
  };

  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_t thread;
  bool started = pthread_attr_setstacksize(&attr, kExpansionStack) == 0 &&
                 pthread_create(&thread, &attr, entry, &task) == 0;
  pthread_attr_destroy(&attr);
  if (!started) {
    fn();  // fall back to the caller's stack
    return;
  }
  pthread_join(thread, nullptr);
  if (task.error) std::rethrow_exception(task.error);
}

// Lexical scope of `let`-local patterns: a chain where each node holds one
// local definition. A local pattern's own node is its defining scope, so it
// sees itself (recursion), earlier siblings and enclosing locals.
struct ScopeNode {
  PatternDef def;
  std::string path;
  std::shared_ptr<const ScopeNode> parent;
};
using ScopePtr = std::shared_ptr<const ScopeNode>;

struct Ctx {
  ScopePtr scope;
  std::string path;
  std::size_t depth = 0;
  std::shared_ptr<const KindEnv> kinds;
};

// Expansion plus the name bookkeeping used for collision warnings.
struct Out {
  Expansion exp;
  std::set<std::string> plain_names;
  std::set<std::string> stratified_names;

  void merge(const Out& other) {
    exp.ontology.merge(other.exp.ontology);
    exp.instantiations.insert(exp.instantiations.end(), other.exp.instantiations.begin(),
                              other.exp.instantiations.end());
    exp.warnings.insert(exp.warnings.end(), other.exp.warnings.begin(),
                        other.exp.warnings.end());
    plain_names.insert(other.plain_names.begin(), other.plain_names.end());
    stratified_names.insert(other.stratified_names.begin(), other.stratified_names.end());
  }
};

void note_names(const Ontology& basic, Out& out) {
  for (const auto& [name, kind] : basic.declarations()) {
    if (name.is_plain()) {
      out.plain_names.insert(name.base);
    } else {
      out.stratified_names.insert(stratify(name));
    }
  }
}

void finish(Out& out) {
  for (const std::string& s : out.stratified_names) {
    if (out.plain_names.count(s)) {
      out.exp.warnings.push_back("stratified name '" + s +
                                 "' coincides with a plain name; both denote one entity");
    }
  }
  std::vector<std::string> unique;
  std::set<std::string> seen;
  for (std::string& w : out.exp.warnings) {
    if (seen.insert(w).second) unique.push_back(std::move(w));
  }
  out.exp.warnings = std::move(unique);
}

std::string site_of(const std::string& path, SourceLoc loc) {
  return (path.empty() ? std::string("<input>") : path) + ":" + to_string(loc);
}

}  // namespace

// ---------------------------------------------------------------------------
// Expander

struct Expander::Impl {
  const Library& lib;
  ExpansionOptions opts;
  std::map<std::string, Out> cache;
  std::set<std::string> in_progress;

  Impl(const Library& l, ExpansionOptions o) : lib(l), opts(o) {}

  const Out& ontology(const std::string& name) {
    if (auto it = cache.find(name); it != cache.end()) return it->second;
    const NamedOntology* def = lib.find_ontology(name);
    if (!def) throw Error(ErrorKind::UnknownPattern, "unknown ontology '" + name + "'");
    if (!in_progress.insert(name).second) {
      throw Error(ErrorKind::CyclicImport, "ontology '" + name + "' refers to itself");
    }
    Out out;
    try {
      for (const std::string& imp : def->imports) out.merge(ontology(imp));
      Ctx ctx;
      ctx.path = lib.path_of(name);
      expand(def->body, ctx, out);
    } catch (...) {
      in_progress.erase(name);
      throw;
    }
    in_progress.erase(name);
    finish(out);
    return cache.emplace(name, std::move(out)).first->second;
  }

  void expand(const Spec& spec, const Ctx& ctx, Out& out) {
    switch (spec.op) {
      case Spec::Op::Empty:
        return;
      case Spec::Op::Basic:
        note_names(spec.basic, out);
        out.exp.ontology.merge(stratify(spec.basic));
        return;
      case Spec::Op::Union:
      case Spec::Op::Extension:
        expand(spec.children[0], ctx, out);
        expand(spec.children[1], ctx, out);
        return;
      case Spec::Op::Let: {
        Ctx inner = ctx;
        for (const PatternDef& local : spec.locals) {
          inner.scope = std::make_shared<const ScopeNode>(ScopeNode{local, ctx.path, inner.scope});
        }
        expand(spec.children.front(), inner, out);
        return;
      }
      case Spec::Op::Inst:
        instantiate_or_refer(spec, ctx, out);
        return;
    }
  }

  void instantiate_or_refer(const Spec& inst, const Ctx& ctx, Out& out) {
    for (const ScopeNode* n = ctx.scope.get(); n; n = n->parent.get()) {
      if (n->def.name == inst.pattern) {
        // Re-wrap the node so the callee sees its own defining scope.
        ScopePtr self = find_node(ctx.scope, n);
        instantiate(n->def, self, n->path, inst, ctx, out);
        return;
      }
    }
    if (const PatternDef* def = lib.find_pattern(inst.pattern)) {
      instantiate(*def, nullptr, lib.path_of(inst.pattern), inst, ctx, out);
      return;
    }
    if (inst.args.empty() && lib.find_ontology(inst.pattern)) {
      out.merge(ontology(inst.pattern));
      return;
    }
    throw Error(ErrorKind::UnknownPattern,
                site_of(ctx.path, inst.loc) + ": unknown pattern '" + inst.pattern + "'");
  }

  static ScopePtr find_node(const ScopePtr& from, const ScopeNode* target) {
    for (ScopePtr p = from; p; p = p->parent) {
      if (p.get() == target) return p;
    }
    return nullptr;
  }

  void instantiate(const PatternDef& def, const ScopePtr& def_scope, const std::string& def_path,
                   const Spec& inst, const Ctx& ctx, Out& out) {
    if (ctx.depth + 1 > opts.depth_budget) {
      throw Error(ErrorKind::DepthExceeded,
                  site_of(ctx.path, inst.loc) + ": instantiation of " + def.name +
                      " exceeds the depth budget of " + std::to_string(opts.depth_budget));
    }
    Binding b;
    try {
      b = bind_arguments(def.params, inst.args, ctx.kinds.get());
    } catch (const Error& e) {
      throw Error(e.kind(), site_of(ctx.path, inst.loc) + ": " + def.name + ": " + e.what());
    }
    if (b.exhausted || b.voided) return;

    auto kinds = std::make_shared<KindEnv>(ctx.kinds ? *ctx.kinds : KindEnv{});
    for (const Parameter& p : def.params) {
      if (b.empty_bound.count(p.name.base) && !p.is_list()) continue;
      auto declare = [&](const Argument& a) {
        if (!a.is_symbol()) return;
        (*kinds)[a.symbol] = p.kind;
        out.exp.ontology.declare(p.kind, Name(stratify(a.symbol)));
      };
      if (p.is_list()) {
        for (const Argument& a : b.lists[p.name.base].items) declare(a);
      } else {
        declare(b.sub.at(p.name.base));
      }
    }

    bool constrained = false;
    for (const Parameter& p : def.params) constrained = constrained || !p.constraints.empty();
    if (constrained) {
      out.exp.instantiations.push_back(
          InstantiationRecord{def.name, def.params, b, site_of(ctx.path, inst.loc)});
    }

    for (const std::string& imp : def.imports) out.merge(ontology(imp));

    Spec body = substitute(def.body, b.sub, &out.exp.warnings);
    Ctx inner{def_scope, def_path, ctx.depth + 1, std::move(kinds)};
    expand(body, inner, out);
  }
};

Expander::Expander(const Library& lib, ExpansionOptions opts)
    : impl_(std::make_unique<Impl>(lib, opts)) {}

Expander::~Expander() = default;

const Expansion& Expander::expand_ontology(const std::string& name) {
  const Out* result = nullptr;
  run_on_large_stack([&] { result = &impl_->ontology(name); });
  return result->exp;
}

Expansion Expander::expand_spec(const Spec& spec, const std::string& path) {
  Out out;
  run_on_large_stack([&] {
    Ctx ctx;
    ctx.path = path;
    impl_->expand(spec, ctx, out);
  });
  finish(out);
  return std::move(out.exp);
}

Expansion Expander::expand_instantiation(const std::string& pattern,
                                         const std::vector<Argument>& args) {
  return expand_spec(Spec::make_inst(pattern, args));
}

std::vector<Expansion> Expander::expand_operands(const std::string& ontology) {
  const NamedOntology* def = impl_->lib.find_ontology(ontology);
  if (!def) throw Error(ErrorKind::UnknownPattern, "unknown ontology '" + ontology + "'");
  std::vector<Expansion> out;
  for (const std::string& imp : def->imports) out.push_back(expand_ontology(imp));
  const std::string& path = impl_->lib.path_of(ontology);
  for (const Spec* op : top_level_operands(def->body)) out.push_back(expand_spec(*op, path));
  return out;
}

std::map<std::string, Expansion> expand_document(const Document& doc, const Library& lib,
                                                 ExpansionOptions opts) {
  Expander ex(lib, opts);
  std::map<std::string, Expansion> out;
  for (const Declaration& d : doc.decls) {
    if (const auto* o = std::get_if<NamedOntology>(&d)) {
      out.emplace(o->name, ex.expand_ontology(o->name));
    }
  }
  return out;
}

}  // namespace godp
