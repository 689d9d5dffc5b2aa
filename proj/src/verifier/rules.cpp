#include <algorithm>
#include <map>
#include <set>

#include "bitset.hpp"
#include "godp/verifier.hpp"

namespace godp {

using detail::Bitset;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Thrown internally when the step budget runs out.
struct StepLimit {};

}  // namespace

struct Saturation::Impl {
  RuleEngineConfig cfg;
  std::map<Name, SymbolKind> declared;

  // -- interned vocabulary ------------------------------------------------
  struct Node {
    ClassExpr expr;
    int prop = -1;    // property expression id (Some/Only/Max)
    int filler = -1;  // node id (Some/Only/Max)
    std::vector<int> conjuncts;
    std::vector<int> members;  // individual ids (OneOf)
  };
  std::vector<Node> nodes;
  std::map<ClassExpr, int> node_ids;
  std::map<Name, int> prop_ids;  // property name -> index p; expression ids 2p, 2p+1
  std::vector<Name> prop_names;
  std::map<Name, int> ind_ids;

  // -- facts ---------------------------------------------------------------
  std::vector<Bitset> sub;      // sub[c] = superclasses of node c
  std::vector<Bitset> subprop;  // subprop[P] = superproperties of expression P
  std::vector<Bitset> dom;      // dom[P] = domain classes of expression P
  std::vector<bool> functional;
  std::vector<bool> transitive;
  std::vector<std::set<std::pair<int, int>>> rel;  // per property name
  std::vector<Bitset> type;                        // type[a] = classes of individual a
  std::vector<std::pair<int, int>> disjoint;
  struct Chain {
    int prop;
    std::vector<int> elems;
  };
  std::vector<Chain> chains;
  std::vector<std::set<int>> different;

  std::size_t steps = 0;
  bool exceeded = false;

  // -- construction ----------------------------------------------------------

  int prop_index(const Name& n) {
    auto [it, inserted] = prop_ids.emplace(n, static_cast<int>(prop_names.size()));
    if (inserted) prop_names.push_back(n);
    return it->second;
  }
  int prop_expr(const PropExpr& p) { return 2 * prop_index(p.name) + (p.inverse ? 1 : 0); }
  static int inv(int P) { return P ^ 1; }

  int individual(const Name& n) {
    return ind_ids.emplace(n, static_cast<int>(ind_ids.size())).first->second;
  }

  int intern(const ClassExpr& e) {
    if (auto it = node_ids.find(e); it != node_ids.end()) return it->second;
    Node n;
    n.expr = e;
    switch (e.op) {
      case ClassExpr::Op::Named:
        break;
      case ClassExpr::Op::Some:
      case ClassExpr::Op::Only:
      case ClassExpr::Op::Max:
        n.prop = prop_expr(e.prop);
        n.filler = intern(e.filler());
        break;
      case ClassExpr::Op::And:
        for (const ClassExpr& c : e.operands) n.conjuncts.push_back(intern(c));
        break;
      case ClassExpr::Op::OneOf:
        for (const Name& m : e.members) n.members.push_back(individual(m));
        break;
    }
    int id = static_cast<int>(nodes.size());
    nodes.push_back(std::move(n));
    node_ids.emplace(e, id);
    return id;
  }

  void intern_vocabulary(const Ontology& theory) {
    for (const auto& [name, kind] : theory.declarations()) {
      switch (kind) {
        case SymbolKind::Class: intern(ClassExpr::named(name)); break;
        case SymbolKind::ObjectProperty: prop_index(name); break;
        case SymbolKind::Individual: individual(name); break;
        case SymbolKind::DataProperty: break;
      }
    }
    for (const Axiom& a : theory.axioms()) {
      std::visit(overloaded{
                     [&](const ax::SubClassOf& x) { intern(x.sub); intern(x.sup); },
                     [&](const ax::EquivalentClasses& x) { intern(x.a); intern(x.b); },
                     [&](const ax::DisjointClasses& x) { intern(x.a); intern(x.b); },
                     [&](const ax::Domain& x) { intern(x.cls); },
                     [&](const ax::Range& x) { intern(x.cls); },
                     [&](const ax::ClassAssertion& x) { intern(x.cls); },
                     [](const auto&) {},
                 },
                 a);
    }
  }

  void allocate() {
    std::size_t N = nodes.size(), P = 2 * prop_names.size(), I = ind_ids.size();
    sub.assign(N, Bitset(N));
    for (std::size_t c = 0; c < N; ++c) sub[c].set(c);
    subprop.assign(P, Bitset(P));
    for (std::size_t p = 0; p < P; ++p) subprop[p].set(p);
    dom.assign(P, Bitset(N));
    functional.assign(P, false);
    transitive.assign(P, false);
    rel.assign(prop_names.size(), {});
    type.assign(I, Bitset(N));
  }

  void step(std::size_t n = 1) {
    steps += n;
    if (steps > cfg.step_limit) throw StepLimit{};
  }

  void add_sub(int c, int d) {
    if (sub[c].set(d)) step();
  }
  void add_subprop(int p, int q) {
    if (subprop[p].set(q)) step();
    if (subprop[inv(p)].set(inv(q))) step();
  }
  void add_type(int a, int c) {
    if (type[a].set(c)) step();
  }
  // Records an edge of property expression P.
  bool add_edge(int P, int a, int b) {
    int p = P / 2;
    bool fresh = (P % 2 == 0) ? rel[p].emplace(a, b).second : rel[p].emplace(b, a).second;
    if (fresh) step();
    return fresh;
  }
  std::vector<std::pair<int, int>> edges(int P) const {
    const auto& r = rel[P / 2];
    std::vector<std::pair<int, int>> out(r.begin(), r.end());
    if (P % 2 == 1) {
      for (auto& e : out) std::swap(e.first, e.second);
    }
    return out;
  }

  void assert_axioms(const Ontology& theory) {
    for (const Axiom& a : theory.axioms()) {
      std::visit(
          overloaded{
              [&](const ax::SubClassOf& x) { add_sub(node_ids.at(x.sub), node_ids.at(x.sup)); },
              [&](const ax::EquivalentClasses& x) {
                if (!cfg.has(Rule::Equivalence)) return;
                int a = node_ids.at(x.a), b = node_ids.at(x.b);
                add_sub(a, b);
                add_sub(b, a);
              },
              [&](const ax::DisjointClasses& x) {
                disjoint.emplace_back(node_ids.at(x.a), node_ids.at(x.b));
              },
              [&](const ax::SubPropertyOf& x) { add_subprop(prop_expr(x.sub), prop_expr(x.sup)); },
              [&](const ax::InverseProps& x) {
                if (!cfg.has(Rule::Inverses)) return;
                int a = 2 * prop_index(x.a), b = 2 * prop_index(x.b);
                add_subprop(a, inv(b));
                add_subprop(inv(b), a);
              },
              [&](const ax::Domain& x) {
                if (dom[2 * prop_index(x.prop)].set(node_ids.at(x.cls))) step();
              },
              [&](const ax::Range& x) {
                if (dom[inv(2 * prop_index(x.prop))].set(node_ids.at(x.cls))) step();
              },
              [&](const ax::Functional& x) { functional[2 * prop_index(x.prop)] = true; },
              [&](const ax::Transitive& x) {
                int p = 2 * prop_index(x.prop);
                transitive[p] = transitive[inv(p)] = true;
              },
              [&](const ax::SubPropertyChain& x) {
                Chain c{2 * prop_index(x.prop), {}};
                for (const PropExpr& e : x.chain) c.elems.push_back(prop_expr(e));
                chains.push_back(std::move(c));
              },
              [&](const ax::ClassAssertion& x) {
                add_type(individual(x.individual), node_ids.at(x.cls));
              },
              [&](const ax::PropAssertion& x) {
                add_edge(2 * prop_index(x.prop), individual(x.subject), individual(x.object));
              },
              [&](const ax::DifferentIndividuals& x) {
                std::set<int> s;
                for (const Name& m : x.members) s.insert(individual(m));
                different.push_back(std::move(s));
              },
          },
          a);
    }
    // Structural facts of the interned expressions.
    for (std::size_t c = 0; c < nodes.size(); ++c) {
      const Node& n = nodes[c];
      if (cfg.has(Rule::Conjunction)) {
        for (int k : n.conjuncts) add_sub(static_cast<int>(c), k);
      }
      if (cfg.has(Rule::TypePropagation)) {
        for (int m : n.members) add_type(m, static_cast<int>(c));
      }
    }
  }

  // -- saturation rounds; each returns whether anything was added ----------

  bool close_properties() {
    std::size_t before = steps;
    std::size_t P = subprop.size();
    if (cfg.has(Rule::SubPropertyClosure)) {
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t p = 0; p < P; ++p) {
          Bitset row = subprop[p];
          row.for_each([&](std::size_t q) {
            if (q != p) {
              std::size_t n = subprop[p].merge(subprop[q]);
              if (n) {
                step(n);
                changed = true;
              }
            }
          });
        }
      }
      // Keep the table closed under inversion.
      for (std::size_t p = 0; p < P; ++p) {
        Bitset row = subprop[p];
        row.for_each([&](std::size_t q) {
          if (subprop[inv(static_cast<int>(p))].set(inv(static_cast<int>(q)))) step();
        });
      }
    }
    if (cfg.has(Rule::Characteristics)) {
      for (std::size_t p = 0; p < P; ++p) {
        if (functional[p]) continue;
        bool inherited = false;
        subprop[p].for_each([&](std::size_t q) { inherited = inherited || functional[q]; });
        if (inherited) {
          functional[p] = true;
          step();
        }
      }
    }
    return steps != before;
  }

  bool close_domains() {
    std::size_t before = steps;
    std::size_t P = dom.size();
    for (std::size_t p = 0; p < P; ++p) {
      if (cfg.has(Rule::Inverses) || cfg.has(Rule::SubPropertyClosure)) {
        // Domain(q, C) and p ⊑ q give Domain(p, C).
        subprop[p].for_each([&](std::size_t q) {
          if (q != p) step(dom[p].merge(dom[q]));
        });
      }
      if (cfg.has(Rule::SubClassClosure)) {
        Bitset row = dom[p];
        row.for_each([&](std::size_t c) { step(dom[p].merge(sub[c])); });
      }
      if (cfg.has(Rule::Conjunction)) {
        for (std::size_t a = 0; a < nodes.size(); ++a) {
          const auto& cs = nodes[a].conjuncts;
          if (cs.empty() || dom[p].test(a)) continue;
          if (std::all_of(cs.begin(), cs.end(), [&](int k) { return dom[p].test(k); })) {
            dom[p].set(a);
            step();
          }
        }
      }
    }
    return steps != before;
  }

  bool close_classes() {
    std::size_t before = steps;
    std::size_t N = nodes.size();
    bool changed = true;
    while (changed) {
      std::size_t round = steps;
      if (cfg.has(Rule::SubClassClosure)) {
        for (std::size_t c = 0; c < N; ++c) {
          Bitset row = sub[c];
          row.for_each([&](std::size_t d) {
            if (d != c) step(sub[c].merge(sub[d]));
          });
        }
      }
      if (cfg.has(Rule::Conjunction)) {
        for (std::size_t a = 0; a < N; ++a) {
          const auto& cs = nodes[a].conjuncts;
          if (cs.empty()) continue;
          for (std::size_t x = 0; x < N; ++x) {
            if (sub[x].test(a)) continue;
            if (std::all_of(cs.begin(), cs.end(), [&](int k) { return sub[x].test(k); })) {
              add_sub(static_cast<int>(x), static_cast<int>(a));
            }
          }
        }
      }
      if (cfg.has(Rule::Restrictions)) restriction_monotonicity();
      if (cfg.has(Rule::DomainRangeTyping)) {
        // Domain(p, C) gives (p some X) ⊑ C.
        for (std::size_t s = 0; s < N; ++s) {
          if (nodes[s].expr.op == ClassExpr::Op::Some) step(sub[s].merge(dom[nodes[s].prop]));
        }
      }
      if (cfg.has(Rule::TypePropagation)) one_of_subsumption();
      changed = steps != round;
    }
    return steps != before;
  }

  void restriction_monotonicity() {
    std::size_t N = nodes.size();
    for (std::size_t s = 0; s < N; ++s) {
      const Node& a = nodes[s];
      if (a.prop < 0) continue;
      for (std::size_t t = 0; t < N; ++t) {
        const Node& b = nodes[t];
        if (s == t || b.prop < 0 || a.expr.op != b.expr.op || sub[s].test(t)) continue;
        bool holds = false;
        switch (a.expr.op) {
          case ClassExpr::Op::Some:
            holds = subprop[a.prop].test(b.prop) && sub[a.filler].test(b.filler);
            break;
          case ClassExpr::Op::Only:
            holds = subprop[b.prop].test(a.prop) && sub[a.filler].test(b.filler);
            break;
          case ClassExpr::Op::Max:
            holds = a.expr.cardinality <= b.expr.cardinality && subprop[b.prop].test(a.prop) &&
                    sub[b.filler].test(a.filler);
            break;
          default:
            break;
        }
        if (holds) add_sub(static_cast<int>(s), static_cast<int>(t));
      }
    }
  }

  void one_of_subsumption() {
    std::size_t N = nodes.size();
    for (std::size_t o = 0; o < N; ++o) {
      const auto& ms = nodes[o].members;
      if (ms.empty()) continue;
      // {a, b} ⊑ {a, b, c}
      for (std::size_t t = 0; t < N; ++t) {
        const auto& ts = nodes[t].members;
        if (t == o || ts.empty() || sub[o].test(t)) continue;
        if (std::all_of(ms.begin(), ms.end(), [&](int m) {
              return std::find(ts.begin(), ts.end(), m) != ts.end();
            })) {
          add_sub(static_cast<int>(o), static_cast<int>(t));
        }
      }
      // {a, b} ⊑ C when a : C and b : C
      Bitset common = type[ms.front()];
      for (std::size_t k = 1; k < ms.size(); ++k) {
        Bitset meet(N);
        common.for_each([&](std::size_t c) {
          if (type[ms[k]].test(c)) meet.set(c);
        });
        common = std::move(meet);
      }
      step(sub[o].merge(common));
    }
  }

  bool close_assertions() {
    std::size_t before = steps;
    std::size_t N = nodes.size();
    std::size_t P = subprop.size();

    if (cfg.has(Rule::AssertionLifting)) {
      for (std::size_t p = 0; p < P; p += 2) {
        for (auto [a, b] : edges(static_cast<int>(p))) {
          subprop[p].for_each([&](std::size_t q) {
            if (q != p) add_edge(static_cast<int>(q), a, b);
          });
        }
      }
    }
    if (cfg.has(Rule::Characteristics)) {
      for (std::size_t p = 0; p < P; p += 2) {
        if (!transitive[p]) continue;
        bool changed = true;
        while (changed) {
          changed = false;
          auto es = edges(static_cast<int>(p));
          std::multimap<int, int> from(es.begin(), es.end());
          for (auto [a, b] : es) {
            auto range = from.equal_range(b);
            for (auto it = range.first; it != range.second; ++it) {
              changed = add_edge(static_cast<int>(p), a, it->second) || changed;
            }
          }
        }
      }
      for (const Chain& c : chains) {
        std::set<std::pair<int, int>> acc;
        for (auto e : edges(c.elems.front())) acc.insert(e);
        for (std::size_t k = 1; k < c.elems.size() && !acc.empty(); ++k) {
          std::multimap<int, int> next;
          for (auto e : edges(c.elems[k])) next.insert(e);
          std::set<std::pair<int, int>> joined;
          for (auto [a, b] : acc) {
            auto range = next.equal_range(b);
            for (auto it = range.first; it != range.second; ++it) joined.emplace(a, it->second);
          }
          acc = std::move(joined);
        }
        for (auto [a, b] : acc) add_edge(c.prop, a, b);
      }
    }
    if (cfg.has(Rule::DomainRangeTyping)) {
      for (std::size_t p = 0; p < P; p += 2) {
        for (auto [a, b] : edges(static_cast<int>(p))) {
          step(type[a].merge(dom[p]));
          step(type[b].merge(dom[p + 1]));
        }
      }
    }
    for (std::size_t a = 0; a < type.size(); ++a) {
      if (cfg.has(Rule::TypePropagation)) {
        Bitset row = type[a];
        row.for_each([&](std::size_t c) { step(type[a].merge(sub[c])); });
      }
      if (cfg.has(Rule::Conjunction)) {
        for (std::size_t n = 0; n < N; ++n) {
          const auto& cs = nodes[n].conjuncts;
          if (cs.empty() || type[a].test(n)) continue;
          if (std::all_of(cs.begin(), cs.end(), [&](int k) { return type[a].test(k); })) {
            add_type(static_cast<int>(a), static_cast<int>(n));
          }
        }
      }
    }
    if (cfg.has(Rule::Restrictions)) {
      for (std::size_t n = 0; n < N; ++n) {
        const Node& node = nodes[n];
        if (node.expr.op == ClassExpr::Op::Some) {
          for (auto [a, b] : edges(node.prop)) {
            if (type[b].test(node.filler)) add_type(a, static_cast<int>(n));
          }
        } else if (node.expr.op == ClassExpr::Op::Only) {
          for (auto [a, b] : edges(node.prop)) {
            if (type[a].test(n)) add_type(b, node.filler);
          }
        }
      }
    }
    return steps != before;
  }

  void saturate() {
    try {
      bool changed = true;
      while (changed) {
        changed = false;
        changed = close_properties() || changed;
        changed = close_classes() || changed;
        changed = close_domains() || changed;
        changed = close_classes() || changed;
        changed = close_assertions() || changed;
      }
    } catch (const StepLimit&) {
      exceeded = true;
    }
  }

  // -- queries ---------------------------------------------------------------

  int node_of(const ClassExpr& e) const {
    auto it = node_ids.find(e);
    return it == node_ids.end() ? -1 : it->second;
  }
  int prop_of(const PropExpr& p) const {
    auto it = prop_ids.find(p.name);
    return it == prop_ids.end() ? -1 : 2 * it->second + (p.inverse ? 1 : 0);
  }
  int ind_of(const Name& n) const {
    auto it = ind_ids.find(n);
    return it == ind_ids.end() ? -1 : it->second;
  }

  bool subprop_holds(int p, int q) const { return p >= 0 && q >= 0 && subprop[p].test(q); }

  // Candidate nodes X with c ⊑ X whose shape matches `op`.
  template <class F>
  bool any_super(int c, ClassExpr::Op op, F&& pred) const {
    bool found = false;
    sub[c].for_each([&](std::size_t x) {
      if (!found && nodes[x].expr.op == op) found = pred(nodes[x]);
    });
    return found;
  }

  bool subsumed(const ClassExpr& C, const ClassExpr& D) const {
    int c = node_of(C), d = node_of(D);
    if (c >= 0 && d >= 0 && sub[c].test(d)) return true;
    if (C == D) return true;
    if (D.op == ClassExpr::Op::And) {
      return std::all_of(D.operands.begin(), D.operands.end(),
                         [&](const ClassExpr& k) { return subsumed(C, k); });
    }
    if (C.op == ClassExpr::Op::And) {
      if (std::any_of(C.operands.begin(), C.operands.end(),
                      [&](const ClassExpr& k) { return subsumed(k, D); })) {
        return true;
      }
    }
    if (D.op == ClassExpr::Op::Some || D.op == ClassExpr::Op::Only ||
        D.op == ClassExpr::Op::Max) {
      int q = prop_of(D.prop);
      auto matches = [&](const ClassExpr& X, int p) {
        switch (D.op) {
          case ClassExpr::Op::Some:
            return subprop_holds(p, q) && subsumed(X.filler(), D.filler());
          case ClassExpr::Op::Only:
            return subprop_holds(q, p) && subsumed(X.filler(), D.filler());
          case ClassExpr::Op::Max:
            return X.cardinality <= D.cardinality && subprop_holds(q, p) &&
                   subsumed(D.filler(), X.filler());
          default:
            return false;
        }
      };
      if (C.op == D.op && matches(C, prop_of(C.prop))) return true;
      if (c >= 0 && any_super(c, D.op, [&](const Node& x) { return matches(x.expr, x.prop); })) {
        return true;
      }
    }
    if (D.op == ClassExpr::Op::OneOf) {
      auto within = [&](const std::vector<Name>& ms) {
        return std::all_of(ms.begin(), ms.end(), [&](const Name& m) {
          return std::find(D.members.begin(), D.members.end(), m) != D.members.end();
        });
      };
      if (C.op == ClassExpr::Op::OneOf && within(C.members)) return true;
      if (c >= 0 && any_super(c, ClassExpr::Op::OneOf,
                              [&](const Node& x) { return within(x.expr.members); })) {
        return true;
      }
    }
    if (c < 0 && C.op == ClassExpr::Op::Some && cfg.has(Rule::DomainRangeTyping)) {
      int p = prop_of(C.prop);
      if (p >= 0 && domain_holds(p, D)) return true;
    }
    if (c < 0 && C.op == ClassExpr::Op::OneOf) {
      return std::all_of(C.members.begin(), C.members.end(),
                         [&](const Name& m) { return type_holds(m, D); });
    }
    return false;
  }

  bool domain_holds(int P, const ClassExpr& C) const {
    if (P < 0) return false;
    if (C.op == ClassExpr::Op::And) {
      return std::all_of(C.operands.begin(), C.operands.end(),
                         [&](const ClassExpr& k) { return domain_holds(P, k); });
    }
    bool found = false;
    dom[P].for_each([&](std::size_t x) { found = found || subsumed(nodes[x].expr, C); });
    return found;
  }

  bool type_holds(const Name& ind, const ClassExpr& C) const {
    int a = ind_of(ind);
    if (a < 0) return false;
    int c = node_of(C);
    if (c >= 0 && type[a].test(c)) return true;
    switch (C.op) {
      case ClassExpr::Op::And:
        return std::all_of(C.operands.begin(), C.operands.end(),
                           [&](const ClassExpr& k) { return type_holds(ind, k); });
      case ClassExpr::Op::OneOf:
        if (std::find(C.members.begin(), C.members.end(), ind) != C.members.end()) return true;
        break;
      case ClassExpr::Op::Some: {
        int p = prop_of(C.prop);
        if (p >= 0 && cfg.has(Rule::Restrictions)) {
          std::vector<Name> by_id(ind_ids.size());
          for (const auto& [n, id] : ind_ids) by_id[id] = n;
          for (auto [x, y] : edges(p)) {
            if (x == a && type_holds(by_id[y], C.filler())) return true;
          }
        }
        break;
      }
      default:
        break;
    }
    bool found = false;
    type[a].for_each([&](std::size_t x) { found = found || subsumed(nodes[x].expr, C); });
    return found;
  }

  Verdict evaluate(const Axiom& goal) const {
    return std::visit(
        overloaded{
            [&](const ax::SubClassOf& g) { return verdict(subsumed(g.sub, g.sup)); },
            [&](const ax::EquivalentClasses& g) {
              return verdict(subsumed(g.a, g.b) && subsumed(g.b, g.a));
            },
            [&](const ax::DisjointClasses& g) {
              bool ok = false;
              for (auto [x, y] : disjoint) {
                const ClassExpr& X = nodes[x].expr;
                const ClassExpr& Y = nodes[y].expr;
                ok = ok || (subsumed(g.a, X) && subsumed(g.b, Y)) ||
                     (subsumed(g.a, Y) && subsumed(g.b, X));
              }
              return verdict(ok);
            },
            [&](const ax::SubPropertyOf& g) {
              return verdict(subprop_holds(prop_of(g.sub), prop_of(g.sup)));
            },
            [&](const ax::InverseProps& g) {
              int a = prop_of(PropExpr::named(g.a)), b = prop_of(PropExpr::inverse_of(g.b));
              return verdict(subprop_holds(a, b) && subprop_holds(b, a));
            },
            [&](const ax::Domain& g) {
              return verdict(domain_holds(prop_of(PropExpr::named(g.prop)), g.cls));
            },
            [&](const ax::Range& g) {
              return verdict(domain_holds(prop_of(PropExpr::inverse_of(g.prop)), g.cls));
            },
            [&](const ax::Functional& g) {
              int p = prop_of(PropExpr::named(g.prop));
              return verdict(p >= 0 && functional[p]);
            },
            [&](const ax::Transitive& g) {
              int p = prop_of(PropExpr::named(g.prop));
              return verdict(p >= 0 && transitive[p]);
            },
            [&](const ax::SubPropertyChain& g) {
              int target = prop_of(PropExpr::named(g.prop));
              bool ok = false;
              for (const Chain& c : chains) {
                if (c.elems.size() != g.chain.size() || !subprop_holds(c.prop, target)) continue;
                bool all = true;
                for (std::size_t k = 0; k < c.elems.size(); ++k) {
                  all = all && subprop_holds(prop_of(g.chain[k]), c.elems[k]);
                }
                ok = ok || all;
              }
              return verdict(ok);
            },
            [&](const ax::ClassAssertion& g) { return verdict(type_holds(g.individual, g.cls)); },
            [&](const ax::PropAssertion& g) {
              int p = prop_of(PropExpr::named(g.prop));
              int a = ind_of(g.subject), b = ind_of(g.object);
              return verdict(p >= 0 && a >= 0 && b >= 0 && rel[p / 2].count({a, b}) > 0);
            },
            [&](const ax::DifferentIndividuals& g) {
              if (g.members.size() <= 1) return verdict(true);
              std::set<int> want;
              for (const Name& m : g.members) want.insert(ind_of(m));
              bool ok = false;
              for (const auto& s : different) {
                ok = ok || std::includes(s.begin(), s.end(), want.begin(), want.end());
              }
              return verdict(ok);
            },
        },
        goal);
  }

  static Verdict verdict(bool proven) {
    Verdict v;
    v.proven = proven;
    if (!proven) v.diagnostic = "not derivable by the rule engine";
    return v;
  }
};

Saturation::Saturation(const Ontology& theory, const RuleEngineConfig& cfg)
    : impl_(std::make_unique<Impl>()) {
  impl_->cfg = cfg;
  impl_->declared = theory.declarations();
  impl_->intern_vocabulary(theory);
  impl_->allocate();
  try {
    impl_->assert_axioms(theory);
  } catch (const StepLimit&) {
    impl_->exceeded = true;
    return;
  }
  impl_->saturate();
}

Saturation::~Saturation() = default;
Saturation::Saturation(Saturation&&) noexcept = default;
Saturation& Saturation::operator=(Saturation&&) noexcept = default;

bool Saturation::step_limit_exceeded() const { return impl_->exceeded; }
std::size_t Saturation::steps() const { return impl_->steps; }

Verdict Saturation::holds(const Axiom& goal) const {
  Axiom g = canonical(goal);
  for (const auto& [kind, name] : signature(g)) {
    auto it = impl_->declared.find(name);
    if (it == impl_->declared.end() || it->second != kind) {
      Verdict v;
      v.diagnostic = std::string(to_string(kind)) + " " + to_string(name) +
                     " is not declared in the context";
      return v;
    }
  }
  if (impl_->exceeded) {
    Verdict v;
    v.step_limit_exceeded = true;
    v.diagnostic = "step limit of " + std::to_string(impl_->cfg.step_limit) + " exceeded";
    return v;
  }
  return impl_->evaluate(g);
}

Verdict entails(const Ontology& theory, const Axiom& goal, const RuleEngineConfig& cfg) {
  return Saturation(theory, cfg).holds(goal);
}

}  // namespace godp
