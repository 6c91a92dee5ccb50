#pragma once

#include <map>
#include <string>
#include <string_view>

#include "dgalab/algebra.hpp"

namespace dgalab {

// Named abbreviations usable as factors inside expressions (e.g. w in "x2 w").
using AliasTable = std::map<std::string, Element, std::less<>>;

// Parses the shared expression grammar:
//   expr   := [sign] term { ('+' | '-') term }
//   term   := [rational] { factor }        (at least one of the two)
//   factor := name [ '^' integer ]
// Factors are separated by whitespace. Names resolve to generators first, then aliases.
// Errors are InputError with a 1-based column relative to `text` offset by `column_offset`;
// `line` is passed through for diagnostics.
Element parse_expression(const Algebra& algebra, std::string_view text,
                         const AliasTable& aliases = {}, int line = 0, int column_offset = 0);

}  // namespace dgalab
