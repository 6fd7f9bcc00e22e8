#pragma once

#include "garside/element.hpp"
#include "garside/structure.hpp"

#include <stdexcept>
#include <string>

namespace garside {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line(line) {}
  int line;
};

/// Parses the `garside-structure v1` text format and validates the table.
/// Throws ParseError on syntax problems, ValidationError on axiom failures.
TablePtr load_structure(const std::string& text);

/// Canonical serialization: sections in fixed order, product cells sorted by
/// index. load_structure(serialize_structure(t)) is table-identical to t.
std::string serialize_structure(const StructureTable& table);

/// Word syntax: whitespace-separated atom names with optional ^k / ^-k
/// suffixes, plus a `D` token for Delta (expanded into atoms). Example:
/// "s1 s2^-1 D^2".
Word parse_word(const StructureTable& table, const std::string& text);

/// Renders an element as a parseable word: "D^p a1 a2 ..." with each factor
/// expanded into its canonical atom word. parse_word/from_word of the result
/// reproduces the element.
std::string element_to_word_string(const Element& g);

}  // namespace garside
