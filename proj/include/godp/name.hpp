#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace godp {

// A plain identifier or a parameterized name `base[arg, ...]`. Names compare
// structurally; two names denote the same entity after expansion iff their
// stratified forms are equal.
struct Name {
  std::string base;
  std::vector<Name> args;

  Name() = default;
  explicit Name(std::string id) : base(std::move(id)) {}
  Name(std::string id, std::vector<Name> arguments)
      : base(std::move(id)), args(std::move(arguments)) {}

  bool is_plain() const { return args.empty(); }

  bool operator==(const Name&) const = default;
  std::strong_ordering operator<=>(const Name&) const = default;
};

// Flattens a parameterized name: `[` and `,` become `_`, `]` is dropped.
std::string stratify(const Name& name);

// Surface form with brackets, e.g. `performs[MotherRole]`.
std::string to_string(const Name& name);

bool is_valid_identifier(std::string_view id);

}  // namespace godp
