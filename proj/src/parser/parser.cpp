#include "godp/parser.hpp"

#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include "lexer.hpp"

namespace godp {

using detail::Tok;
using detail::Token;

namespace {

constexpr std::array kReserved = {"pattern", "ontology", "refinement", "refined", "given",
                                  "let",     "in",       "and",        "then",    "some",
                                  "only",    "max",      "inverse"};

bool is_reserved(const std::string& s) {
  for (const char* k : kReserved) {
    if (s == k) return true;
  }
  return false;
}

enum class Clause {
  SubClassOf,
  EquivalentTo,
  DisjointWith,
  Types,
  Facts,
  Domain,
  Range,
  Characteristics,
  SubPropertyOf,
  InverseOf,
  SubPropertyChain,
};

std::optional<Clause> clause_from(const std::string& s) {
  static const std::map<std::string, Clause> kClauses = {
      {"SubClassOf", Clause::SubClassOf},
      {"EquivalentTo", Clause::EquivalentTo},
      {"DisjointWith", Clause::DisjointWith},
      {"Types", Clause::Types},
      {"Facts", Clause::Facts},
      {"Domain", Clause::Domain},
      {"Range", Clause::Range},
      {"Characteristics", Clause::Characteristics},
      {"SubPropertyOf", Clause::SubPropertyOf},
      {"InverseOf", Clause::InverseOf},
      {"SubPropertyChain", Clause::SubPropertyChain},
  };
  auto it = kClauses.find(s);
  if (it == kClauses.end()) return std::nullopt;
  return it->second;
}

bool clause_allowed(SymbolKind kind, Clause c) {
  switch (kind) {
    case SymbolKind::Class:
      return c == Clause::SubClassOf || c == Clause::EquivalentTo || c == Clause::DisjointWith;
    case SymbolKind::Individual:
      return c == Clause::Types || c == Clause::Facts;
    case SymbolKind::ObjectProperty:
      return c == Clause::Domain || c == Clause::Range || c == Clause::Characteristics ||
             c == Clause::SubPropertyOf || c == Clause::InverseOf ||
             c == Clause::SubPropertyChain;
    case SymbolKind::DataProperty:
      return false;
  }
  return false;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(detail::tokenize(text)) {}

  Document document() {
    Document doc;
    std::set<std::string> seen;
    while (!at(Tok::End)) {
      Declaration d = declaration();
      const std::string& name = declaration_name(d);
      if (!seen.insert(name).second) {
        throw ParseError(ErrorKind::DuplicateDeclaration, declaration_loc(d),
                         "'" + name + "' is declared twice in this document");
      }
      doc.decls.push_back(std::move(d));
    }
    return doc;
  }

  Ontology fragment() {
    Ontology onto;
    while (at_frame_start()) frame(onto);
    if (!at(Tok::End)) {
      if (at(Tok::Ident) && peek(1).kind == Tok::Colon) unknown_keyword(cur());
      fail("expected a frame", {"Class:", "ObjectProperty:", "Individual:",
                                "DifferentIndividuals:", "end of input"});
    }
    return onto;
  }

 private:
  // -- token helpers --------------------------------------------------------

  const Token& cur() const { return toks_[pos_]; }
  const Token& peek(std::size_t k) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  bool at(Tok t) const { return cur().kind == t; }
  bool at_word(std::string_view w) const { return at(Tok::Ident) && cur().text == w; }
  Token take() {
    Token t = cur();
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) const {
    const Token& t = cur();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(ErrorKind::Parse, t.loc, what + ", found " + found, std::move(expected));
  }

  [[noreturn]] void unknown_keyword(const Token& t) const {
    throw ParseError(ErrorKind::UnknownKeyword, t.loc, "unknown keyword '" + t.text + ":'");
  }

  Token expect(Tok t) {
    if (!at(t)) fail(std::string("expected ") + detail::describe(t), {detail::describe(t)});
    return take();
  }

  void expect_word(std::string_view w) {
    if (!at_word(w)) fail("expected '" + std::string(w) + "'", {std::string(w)});
    take();
  }

  bool accept(Tok t) {
    if (!at(t)) return false;
    take();
    return true;
  }

  bool accept_word(std::string_view w) {
    if (!at_word(w)) return false;
    take();
    return true;
  }

  std::string identifier() {
    if (!at(Tok::Ident) || is_reserved(cur().text)) fail("expected an identifier", {"identifier"});
    return take().text;
  }

  // -- declarations ---------------------------------------------------------

  Declaration declaration() {
    SourceLoc loc = cur().loc;
    if (accept_word("pattern")) return pattern_decl(loc);
    if (accept_word("ontology")) {
      NamedOntology o;
      o.loc = loc;
      o.name = identifier();
      o.imports = given();
      expect(Tok::Equals);
      o.body = spec();
      return o;
    }
    if (accept_word("refinement")) {
      RefinementDef r;
      r.loc = loc;
      r.name = identifier();
      expect(Tok::Equals);
      r.source = spec();
      expect_word("refined");
      if (accept_word("via")) {
        do {
          Name from = name();
          expect(Tok::MapsTo);
          r.symbol_map.emplace_back(std::move(from), name());
        } while (accept(Tok::Comma));
      }
      expect_word("to");
      r.target = spec();
      return r;
    }
    if (at(Tok::Ident) && !is_reserved(cur().text)) {
      throw ParseError(ErrorKind::UnknownKeyword, loc,
                       "unknown keyword '" + cur().text + "'",
                       {"pattern", "ontology", "refinement"});
    }
    fail("expected a declaration", {"pattern", "ontology", "refinement"});
  }

  PatternDef pattern_decl(SourceLoc loc) {
    PatternDef p;
    p.loc = loc;
    p.name = identifier();
    if (accept(Tok::LBracket)) {
      if (!at(Tok::RBracket)) {
        do {
          p.params.push_back(parameter());
        } while (accept(Tok::Semi));
      }
      expect(Tok::RBracket);
    }
    p.imports = given();
    expect(Tok::Equals);
    p.body = spec();
    return p;
  }

  std::vector<std::string> given() {
    std::vector<std::string> out;
    if (accept_word("given")) {
      do {
        out.push_back(identifier());
      } while (accept(Tok::Comma));
    }
    return out;
  }

  Parameter parameter() {
    Parameter p;
    p.optional = accept(Tok::Question);
    bool braced = accept(Tok::LBrace);
    p.kind = symbol_kind_keyword();
    p.name = Name(identifier());
    Ontology sink;
    clauses(p.kind, p.name, sink);
    p.constraints = sink.axioms();
    if (braced) expect(Tok::RBrace);
    if (accept(Tok::ColonColon)) {
      p.tail = Name(identifier());
    }
    return p;
  }

  SymbolKind symbol_kind_keyword() {
    if (at(Tok::Ident) && peek(1).kind == Tok::Colon) {
      if (auto k = symbol_kind_from_keyword(cur().text)) {
        take();
        take();
        return *k;
      }
      unknown_keyword(cur());
    }
    fail("expected a symbol kind", {"Class:", "ObjectProperty:", "DataProperty:", "Individual:"});
  }

  // -- specifications ------------------------------------------------------

  Spec spec() {
    Spec left = union_spec();
    while (accept_word("then")) left = Spec::make_extension(std::move(left), union_spec());
    return left;
  }

  Spec union_spec() {
    Spec left = primary_spec();
    while (accept_word("and")) left = Spec::make_union(std::move(left), primary_spec());
    return left;
  }

  Spec primary_spec() {
    SourceLoc loc = cur().loc;
    if (accept_word("let")) {
      std::vector<PatternDef> locals;
      while (at_word("pattern")) {
        SourceLoc ploc = take().loc;
        locals.push_back(pattern_decl(ploc));
      }
      if (locals.empty()) fail("expected a local pattern", {"pattern"});
      expect_word("in");
      return Spec::make_let(std::move(locals), spec());
    }
    if (accept(Tok::LBrace)) {
      expect(Tok::RBrace);
      Spec s = Spec::make_empty();
      s.loc = loc;
      return s;
    }
    if (accept(Tok::LParen)) {
      Spec s = spec();
      expect(Tok::RParen);
      return s;
    }
    if (at_frame_start()) {
      Ontology onto;
      while (at_frame_start()) frame(onto);
      return Spec::make_basic(std::move(onto), loc);
    }
    if (at(Tok::Ident) && peek(1).kind == Tok::Colon) unknown_keyword(cur());
    if (at(Tok::Ident) && !is_reserved(cur().text)) {
      std::string pattern = take().text;
      std::vector<Argument> args;
      if (accept(Tok::LBracket)) {
        if (!at(Tok::RBracket)) {
          while (true) {
            if (at(Tok::Semi) || at(Tok::RBracket)) {
              args.push_back(Argument::empty());
            } else {
              args.push_back(argument());
            }
            if (!accept(Tok::Semi)) break;
          }
        }
        expect(Tok::RBracket);
      }
      return Spec::make_inst(std::move(pattern), std::move(args), loc);
    }
    fail("expected a specification",
         {"identifier", "Class:", "ObjectProperty:", "Individual:", "let", "{", "("});
  }

  Argument argument() {
    Argument a;
    if (accept(Tok::LBrace)) {
      expect(Tok::RBrace);
      a = Argument::empty();
    } else if (accept(Tok::LBracket)) {
      std::vector<Argument> items;
      if (!at(Tok::RBracket)) {
        do {
          items.push_back(argument());
        } while (accept(Tok::Comma));
      }
      expect(Tok::RBracket);
      a = Argument::list(std::move(items));
    } else if (at(Tok::Ident) && peek(1).kind == Tok::Colon) {
      SymbolKind k = symbol_kind_keyword();
      a = Argument::of(name(), k);
    } else {
      a = Argument::of(name());
    }
    if (accept(Tok::ColonColon)) return Argument::cons(std::move(a), argument());
    return a;
  }

  // -- Manchester frames ---------------------------------------------------

  bool at_frame_start() const {
    if (!at(Tok::Ident) || peek(1).kind != Tok::Colon) return false;
    return symbol_kind_from_keyword(cur().text) || cur().text == "DifferentIndividuals";
  }

  void frame(Ontology& onto) {
    if (cur().text == "DifferentIndividuals") {
      take();
      take();
      onto.add(ax::DifferentIndividuals{name_list()});
      return;
    }
    SymbolKind kind = *symbol_kind_from_keyword(take().text);
    take();
    Name subject = name();
    onto.declare(kind, subject);
    clauses(kind, subject, onto);
  }

  void clauses(SymbolKind kind, const Name& subject, Ontology& onto) {
    while (at(Tok::Ident) && peek(1).kind == Tok::Colon && !at_frame_start()) {
      const Token& kw = cur();
      auto clause = clause_from(kw.text);
      if (!clause) unknown_keyword(kw);
      if (!clause_allowed(kind, *clause)) {
        throw ParseError(ErrorKind::Parse, kw.loc,
                         "'" + kw.text + ":' is not allowed in a " + to_string(kind) + " frame");
      }
      take();
      take();
      clause_values(*clause, subject, onto);
    }
  }

  void clause_values(Clause c, const Name& s, Ontology& onto) {
    do {
      switch (c) {
        case Clause::SubClassOf:
          onto.add(ax::SubClassOf{ClassExpr::named(s), class_expr()});
          break;
        case Clause::EquivalentTo:
          onto.add(ax::EquivalentClasses{ClassExpr::named(s), class_expr()});
          break;
        case Clause::DisjointWith:
          onto.add(ax::DisjointClasses{ClassExpr::named(s), class_expr()});
          break;
        case Clause::Types:
          onto.add(ax::ClassAssertion{class_expr(), s});
          break;
        case Clause::Facts: {
          Name p = name();
          onto.add(ax::PropAssertion{std::move(p), s, name()});
          break;
        }
        case Clause::Domain:
          onto.add(ax::Domain{s, class_expr()});
          break;
        case Clause::Range:
          onto.add(ax::Range{s, class_expr()});
          break;
        case Clause::Characteristics: {
          const Token& t = cur();
          if (accept_word("Functional")) {
            onto.add(ax::Functional{s});
          } else if (accept_word("Transitive")) {
            onto.add(ax::Transitive{s});
          } else if (at(Tok::Ident)) {
            throw ParseError(ErrorKind::UnknownKeyword, t.loc,
                             "unsupported characteristic '" + t.text + "'",
                             {"Functional", "Transitive"});
          } else {
            fail("expected a characteristic", {"Functional", "Transitive"});
          }
          break;
        }
        case Clause::SubPropertyOf:
          onto.add(ax::SubPropertyOf{PropExpr::named(s), prop_expr()});
          break;
        case Clause::InverseOf:
          onto.add(ax::InverseProps{s, name()});
          break;
        case Clause::SubPropertyChain: {
          std::vector<PropExpr> chain{prop_expr()};
          do {
            expect_word("o");
            chain.push_back(prop_expr());
          } while (at_word("o"));
          onto.add(ax::SubPropertyChain{s, std::move(chain)});
          break;
        }
      }
    } while (accept(Tok::Comma));
  }

  std::vector<Name> name_list() {
    std::vector<Name> out{name()};
    while (accept(Tok::Comma)) out.push_back(name());
    return out;
  }

  Name name() {
    Name n(identifier());
    if (accept(Tok::LBracket)) {
      do {
        n.args.push_back(name());
      } while (accept(Tok::Comma));
      expect(Tok::RBracket);
    }
    return n;
  }

  PropExpr prop_expr() {
    if (accept_word("inverse")) return PropExpr::inverse_of(name());
    return PropExpr::named(name());
  }

  // conj := restriction ('and' restriction)*
  ClassExpr class_expr() {
    std::vector<ClassExpr> conjuncts{restriction()};
    while (accept_word("and")) conjuncts.push_back(restriction());
    if (conjuncts.size() == 1) return std::move(conjuncts.front());
    return ClassExpr::conjunction(std::move(conjuncts));
  }

  ClassExpr restriction() {
    if (accept(Tok::LParen)) {
      ClassExpr e = class_expr();
      expect(Tok::RParen);
      return e;
    }
    if (accept(Tok::LBrace)) {
      std::vector<Name> members = name_list();
      expect(Tok::RBrace);
      return ClassExpr::one_of(std::move(members));
    }
    bool inverse = accept_word("inverse");
    Name n = name();
    if (accept_word("some")) return ClassExpr::some({n, inverse}, restriction());
    if (accept_word("only")) return ClassExpr::only({n, inverse}, restriction());
    if (accept_word("max")) {
      Token count = expect(Tok::Int);
      return ClassExpr::max(static_cast<std::uint32_t>(std::stoul(count.text)), {n, inverse},
                            restriction());
    }
    if (inverse) fail("expected 'some', 'only' or 'max' after an inverse property",
                      {"some", "only", "max"});
    return ClassExpr::named(std::move(n));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Document parse_document(std::string_view text, std::string path) {
  Document doc = Parser(text).document();
  doc.path = std::move(path);
  return doc;
}

Ontology parse_manchester_fragment(std::string_view text) { return Parser(text).fragment(); }

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str(), path);
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), e.location(), path + ": " + e.detail(), e.expected());
  }
}

}  // namespace godp
