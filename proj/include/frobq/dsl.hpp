#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "frobq/ideal.hpp"
#include "frobq/quiver.hpp"
#include "frobq/scalar.hpp"

namespace frobq {

struct SourceLocation {
  std::size_t line = 0;
  std::size_t column = 0;
};

// A parsed quiver document. Relation coefficients are kept over Q; the
// field only matters once a basis is computed.
struct QuiverDocument {
  Field field;
  Quiver quiver;
  IdealSpec ideal;
  std::vector<SourceLocation> relation_locations;  // one per generator
};

// Grammar (line oriented, '#' starts a comment):
//   field Q | field F <prime>
//   vertex <id> [<id> ...]
//   arrow <id> : <vertex> -> <vertex>
//   relation <term> { (+|-) <term> } ;
//   term := [<rational>] [*] <arrow> { * <arrow> }
// Lexical and syntax errors throw ParseError; semantic problems throw
// ValidationError prefixed with the line number.
QuiverDocument parse_document(std::string_view text);

// Normal form: field line, one vertex line, arrows by identifier, relations
// with terms in canonical path order and unit coefficients omitted.
std::string print_document(const Field& field, const Quiver& q, const IdealSpec& ideal);
std::string print_document(const QuiverDocument& doc);

}  // namespace frobq
