#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace godp {

enum class ErrorKind {
  Parse,
  UnknownKeyword,
  UnbalancedBracket,
  DuplicateDeclaration,
  KindClash,
  ArityMismatch,
  EmptyForRequired,
  ListLengthMismatch,
  KindMismatch,
  UnknownPattern,
  DepthExceeded,
  CyclicImport,
  UnstratifiedName,
  MapKindMismatch,
  Io,
};

const char* to_string(ErrorKind kind);

// Base class for every failure raised by the compiler. The kind is what
// callers branch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct SourceLoc {
  int line = 0;
  int column = 0;
};

std::string to_string(const SourceLoc& loc);

class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, SourceLoc loc, const std::string& message,
             std::vector<std::string> expected = {});

  SourceLoc location() const { return loc_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& detail() const { return detail_; }

 private:
  SourceLoc loc_;
  std::string detail_;
  std::vector<std::string> expected_;
};

}  // namespace godp
