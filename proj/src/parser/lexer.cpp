#include "lexer.hpp"

#include <cctype>

namespace godp::detail {

const char* describe(Tok tok) {
  switch (tok) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Colon: return "':'";
    case Tok::ColonColon: return "'::'";
    case Tok::Equals: return "'='";
    case Tok::Question: return "'?'";
    case Tok::MapsTo: return "'|->'";
    case Tok::End: return "end of input";
  }
  return "?";
}

namespace {

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

char closer_for(Tok open) {
  switch (open) {
    case Tok::LBracket: return ']';
    case Tok::LBrace: return '}';
    default: return ')';
  }
}

void check_balance(const std::vector<Token>& tokens) {
  std::vector<const Token*> open;
  for (const Token& t : tokens) {
    switch (t.kind) {
      case Tok::LBracket:
      case Tok::LBrace:
      case Tok::LParen:
        open.push_back(&t);
        break;
      case Tok::RBracket:
      case Tok::RBrace:
      case Tok::RParen: {
        Tok expected = t.kind == Tok::RBracket ? Tok::LBracket
                       : t.kind == Tok::RBrace ? Tok::LBrace
                                               : Tok::LParen;
        if (open.empty() || open.back()->kind != expected) {
          throw ParseError(ErrorKind::UnbalancedBracket, t.loc, "unmatched '" + t.text + "'");
        }
        open.pop_back();
        break;
      }
      case Tok::End:
        if (!open.empty()) {
          const Token& o = *open.back();
          throw ParseError(ErrorKind::UnbalancedBracket, t.loc,
                           "'" + o.text + "' opened at " + to_string(o.loc) + " is never closed",
                           {std::string("'") + closer_for(o.kind) + "'"});
        }
        break;
      default:
        break;
    }
  }
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1;
  int col = 1;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };

  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '%' && i + 1 < text.size() && text[i + 1] == '%') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.loc = {line, col};
    if (ident_char(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      t.text = std::string(text.substr(i, j - i));
      bool digits = true;
      for (char d : t.text) digits = digits && std::isdigit(static_cast<unsigned char>(d));
      t.kind = digits ? Tok::Int : Tok::Ident;
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }
    std::size_t len = 1;
    switch (c) {
      case '[': t.kind = Tok::LBracket; break;
      case ']': t.kind = Tok::RBracket; break;
      case '{': t.kind = Tok::LBrace; break;
      case '}': t.kind = Tok::RBrace; break;
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      case ',': t.kind = Tok::Comma; break;
      case ';': t.kind = Tok::Semi; break;
      case '=': t.kind = Tok::Equals; break;
      case '?': t.kind = Tok::Question; break;
      case ':':
        if (i + 1 < text.size() && text[i + 1] == ':') {
          t.kind = Tok::ColonColon;
          len = 2;
        } else {
          t.kind = Tok::Colon;
        }
        break;
      case '|':
        if (text.substr(i, 3) == "|->") {
          t.kind = Tok::MapsTo;
          len = 3;
          break;
        }
        [[fallthrough]];
      default:
        throw ParseError(ErrorKind::Parse, t.loc,
                         std::string("unexpected character '") + c + "'");
    }
    t.text = std::string(text.substr(i, len));
    advance(len);
    out.push_back(std::move(t));
  }
  out.push_back(Token{Tok::End, "", {line, col}});
  check_balance(out);
  return out;
}

}  // namespace godp::detail
