#include "godp/name.hpp"

#include <cctype>

#include "godp/error.hpp"

namespace godp {

namespace {

void stratify_into(const Name& name, std::string& out) {
  out += name.base;
  for (const Name& arg : name.args) {
    out += '_';
    stratify_into(arg, out);
  }
}

}  // namespace

std::string stratify(const Name& name) {
  std::string out;
  stratify_into(name, out);
  return out;
}

std::string to_string(const Name& name) {
  if (name.args.empty()) return name.base;
  std::string out = name.base + "[";
  for (std::size_t i = 0; i < name.args.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(name.args[i]);
  }
  out += "]";
  return out;
}

bool is_valid_identifier(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::UnknownKeyword: return "UnknownKeyword";
    case ErrorKind::UnbalancedBracket: return "UnbalancedBracket";
    case ErrorKind::DuplicateDeclaration: return "DuplicateDeclaration";
    case ErrorKind::KindClash: return "KindClash";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::EmptyForRequired: return "EmptyForRequired";
    case ErrorKind::ListLengthMismatch: return "ListLengthMismatch";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::UnknownPattern: return "UnknownPattern";
    case ErrorKind::DepthExceeded: return "DepthExceeded";
    case ErrorKind::CyclicImport: return "CyclicImport";
    case ErrorKind::UnstratifiedName: return "UnstratifiedName";
    case ErrorKind::MapKindMismatch: return "MapKindMismatch";
    case ErrorKind::Io: return "IoError";
  }
  return "Error";
}

std::string to_string(const SourceLoc& loc) {
  return std::to_string(loc.line) + ":" + std::to_string(loc.column);
}

ParseError::ParseError(ErrorKind kind, SourceLoc loc, const std::string& message,
                       std::vector<std::string> expected)
    : Error(kind, to_string(loc) + ": " + message),
      loc_(loc),
      detail_(message),
      expected_(std::move(expected)) {}

}  // namespace godp
