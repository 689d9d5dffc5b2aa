#include <gtest/gtest.h>

#include <random>

#include "godp/ontology.hpp"
#include "godp/parser.hpp"
#include "godp/spec.hpp"

using namespace godp;

namespace {

Name random_name(std::mt19937& rng, int depth) {
  static const char* kBases[] = {"a", "B", "c9", "Role", "le", "x"};
  Name n(kBases[rng() % 6]);
  if (depth > 0) {
    for (std::size_t i = 0, k = rng() % 3; i < k; ++i) n.args.push_back(random_name(rng, depth - 1));
  }
  return n;
}

Ontology random_ontology(std::mt19937& rng) {
  static const char* kClasses[] = {"A", "B", "C", "D"};
  static const char* kProps[] = {"p", "q"};
  Ontology o;
  for (std::size_t i = 0, n = rng() % 5; i < n; ++i) {
    ClassExpr a = ClassExpr::named(Name(kClasses[rng() % 4]));
    ClassExpr b = ClassExpr::named(Name(kClasses[rng() % 4]));
    switch (rng() % 4) {
      case 0: o.add(ax::SubClassOf{a, b}); break;
      case 1: o.add(ax::EquivalentClasses{a, ClassExpr::some(PropExpr::named(Name(kProps[rng() % 2])), b)}); break;
      case 2: o.add(ax::DisjointClasses{b, a}); break;
      default: o.add(ax::Domain{Name(kProps[rng() % 2]), a}); break;
    }
  }
  return o;
}

}  // namespace

TEST(Stratify, ParameterizedNameFlattens) {
  EXPECT_EQ(stratify(Name("performs", {Name("MotherRole")})), "performs_MotherRole");
  EXPECT_EQ(stratify(Name("Vehicle")), "Vehicle");
}

TEST(Stratify, NestedBracketingsAgree) {
  Name a("A"), b("B"), c("C");
  Name bc("B", {c}), ab("A", {b});
  EXPECT_EQ(stratify(Name("name", {a, bc})), "name_A_B_C");
  EXPECT_EQ(stratify(Name("name", {ab, c})), "name_A_B_C");
  EXPECT_EQ(stratify(Name("name", {a, b, c})), "name_A_B_C");
}

TEST(Stratify, OutputNeverContainsBracketsOrCommas) {
  std::mt19937 rng(7);
  for (int i = 0; i < 1000; ++i) {
    std::string s = stratify(random_name(rng, 3));
    EXPECT_EQ(s.find_first_of("[],"), std::string::npos) << s;
  }
}

TEST(Stratify, SurfaceFormShowsBrackets) {
  EXPECT_EQ(to_string(Name("le", {Name("gt", {Name("X")}), Name("Y")})), "le[gt[X], Y]");
}

TEST(Union, RepeatedDeclarationIsOneEntity) {
  Ontology a, b;
  a.declare(SymbolKind::Class, Name("TemporalExtent"));
  b.declare(SymbolKind::Class, Name("TemporalExtent"));
  Ontology u = unite(a, b);
  EXPECT_EQ(u.declarations().size(), 1u);
}

TEST(Union, EmptyIsIdentity) {
  std::mt19937 rng(3);
  Ontology o = random_ontology(rng);
  EXPECT_EQ(unite(o, Ontology{}), o);
  EXPECT_EQ(unite(Ontology{}, o), o);
}

TEST(Union, CommutativeAssociativeIdempotent) {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    Ontology a = random_ontology(rng), b = random_ontology(rng), c = random_ontology(rng);
    EXPECT_EQ(unite(a, b), unite(b, a));
    EXPECT_EQ(unite(unite(a, b), c), unite(a, unite(b, c)));
    EXPECT_EQ(unite(a, a), a);
  }
}

TEST(Union, MergesFramesOfOneProperty) {
  Ontology order = parse_manchester_fragment(
      "ObjectProperty: gt_MaxSeats Domain: MaxSeats Range: MaxSeats Characteristics: Transitive");
  Ontology rel = parse_manchester_fragment("ObjectProperty: gt_MaxSeats SubPropertyOf: ge_MaxSeats");
  Ontology u = unite(order, rel);
  EXPECT_EQ(u.axioms().size(), 4u);
  EXPECT_EQ(u.kind_of(Name("gt_MaxSeats")), SymbolKind::ObjectProperty);
}

TEST(Union, KindClashIsAnError) {
  Ontology a;
  a.declare(SymbolKind::Class, Name("X"));
  try {
    a.declare(SymbolKind::Individual, Name("X"));
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::KindClash);
  }
}

TEST(Canonical, CommutativeOperandsAreSorted) {
  auto p = PropExpr::named(Name("p"));
  ClassExpr x = ClassExpr::conjunction({ClassExpr::only(p, ClassExpr::named(Name("R"))),
                                        ClassExpr::some(p, ClassExpr::named(Name("R")))});
  ClassExpr y = ClassExpr::conjunction({ClassExpr::some(p, ClassExpr::named(Name("R"))),
                                        ClassExpr::only(p, ClassExpr::named(Name("R")))});
  EXPECT_EQ(canonical(x), canonical(y));
  EXPECT_EQ(canonical(Axiom{ax::EquivalentClasses{ClassExpr::named(Name("B")), ClassExpr::named(Name("A"))}}),
            canonical(Axiom{ax::EquivalentClasses{ClassExpr::named(Name("A")), ClassExpr::named(Name("B"))}}));
  EXPECT_EQ(canonical(Axiom{ax::DifferentIndividuals{{Name("b"), Name("a"), Name("b")}}}),
            (Axiom{ax::DifferentIndividuals{{Name("a"), Name("b")}}}));
}

TEST(Canonical, InverseSubPropertyIsNormalized) {
  Axiom a = ax::SubPropertyOf{PropExpr::inverse_of(Name("p")), PropExpr::named(Name("q"))};
  Axiom b = ax::SubPropertyOf{PropExpr::named(Name("p")), PropExpr::inverse_of(Name("q"))};
  EXPECT_EQ(canonical(a), canonical(b));
}

TEST(Substitute, ReplacesParameterInBody) {
  Document d = parse_document(
      "pattern TEMPORAL_Extent [ Class: C ] =\n"
      "  TotalRELATION_ScopedRange[hasTemporalExtent; C; TemporalExtent]\n"
      "  then Class: TemporalExtent DisjointWith: C\n");
  Spec body = d.find_pattern("TEMPORAL_Extent")->body;
  Spec replaced = substitute(body, {{"C", Argument::of(Name("Vehicle"))}});
  Document expected = parse_document(
      "ontology X = TotalRELATION_ScopedRange[hasTemporalExtent; Vehicle; TemporalExtent]\n"
      "  then Class: TemporalExtent DisjointWith: Vehicle\n");
  EXPECT_EQ(replaced, expected.find_ontology("X")->body);
}

TEST(Substitute, EmptyBindingIsIdentity) {
  Document d = parse_document("pattern P [ Class: C ] = Class: C SubClassOf: D then Q[C]");
  const Spec& body = d.find_pattern("P")->body;
  EXPECT_EQ(substitute(body, {}), body);
}

TEST(Substitute, ParameterizedNameTakesArgument) {
  Argument a = substitute_name(Name("performs", {Name("Rle")}), {{"Rle", Argument::of(Name("MotherRole"))}});
  ASSERT_TRUE(a.is_symbol());
  EXPECT_EQ(a.symbol, Name("performs", {Name("MotherRole")}));
}

TEST(Substitute, ParameterizedBaseAbsorbsArguments) {
  Argument a = substitute_name(Name("p", {Name("v")}),
                               {{"p", Argument::of(Name("q", {Name("a")}))}, {"v", Argument::of(Name("b"))}});
  ASSERT_TRUE(a.is_symbol());
  EXPECT_EQ(stratify(a.symbol), "q_a_b");
}

TEST(Substitute, EmptyPartMakesNameEmpty) {
  Argument a = substitute_name(Name("rz", {Name("xy")}), {{"xy", Argument::empty(true)}});
  EXPECT_TRUE(a.is_empty());
  EXPECT_TRUE(a.propagated);
}

TEST(Substitute, AxiomMentioningEmptyBoundNameIsDropped) {
  Document d = parse_document("pattern P [ ? Class: C ] = Class: D SubClassOf: C Class: E SubClassOf: D");
  Spec s = substitute(d.find_pattern("P")->body, {{"C", Argument::empty(true)}});
  ASSERT_EQ(s.op, Spec::Op::Basic);
  EXPECT_EQ(s.basic.axioms().size(), 1u);
}

TEST(Substitute, CompositionWithDisjointDomains) {
  Document d = parse_document(
      "pattern P [ Class: C; Class: E ] = Class: C SubClassOf: E then Q[C; f[E]]");
  const Spec& body = d.find_pattern("P")->body;
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    Substitution m1{{"C", Argument::of(random_name(rng, 2))}};
    Substitution m2{{"E", Argument::of(random_name(rng, 2))}};
    EXPECT_EQ(substitute(substitute(body, m1), m2), substitute(body, compose(m1, m2)));
  }
}

TEST(Substitute, ShadowingLocalParameterWarns) {
  Document d = parse_document(
      "pattern P [ Class: x ] = let pattern L [ Class: x ] = Class: x SubClassOf: T in L[x]");
  std::vector<std::string> warnings;
  substitute(d.find_pattern("P")->body, {{"x", Argument::of(Name("A"))}}, &warnings);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("shadows"), std::string::npos);
}
