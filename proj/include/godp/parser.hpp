#pragma once

#include <string>
#include <string_view>

#include "godp/spec.hpp"

namespace godp {

// Parses a document of `pattern`, `ontology` and `refinement` declarations.
// Throws ParseError (kinds Parse, UnknownKeyword, UnbalancedBracket),
// KindClash, or DuplicateDeclaration.
Document parse_document(std::string_view text, std::string path = {});

// Parses bare Manchester-syntax frames into a canonical ontology.
Ontology parse_manchester_fragment(std::string_view text);

// Re-emits a document in the surface syntax; parse_document of the result
// yields an equal Document.
std::string print_document(const Document& doc);
std::string print_spec(const Spec& spec);

Document load_document(const std::string& path);

}  // namespace godp
