#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "godp/error.hpp"

namespace godp::detail {

enum class Tok {
  Ident,
  Int,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  LParen,
  RParen,
  Comma,
  Semi,
  Colon,
  ColonColon,
  Equals,
  Question,
  MapsTo,  // |->
  End,
};

const char* describe(Tok tok);

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceLoc loc;
};

// Splits `text` into tokens, dropping whitespace and `%%` line comments.
// Brackets are checked for balance up front so that a missing `]` is
// reported as UnbalancedBracket rather than as a confusing parse error.
std::vector<Token> tokenize(std::string_view text);

}  // namespace godp::detail
