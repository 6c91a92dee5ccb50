#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dgalab/degree_calculus.hpp"
#include "dgalab/dga.hpp"
#include "dgalab/expression.hpp"
#include "dgalab/poincare.hpp"

namespace dgalab {

// A parsed .dga file. Statements:
//   dga <name>
//   generator <name> <degree>
//   d <generator> = <expr>              (omitted means zero)
//   alias <name> = <expr>
//   fundamental <expr> [scale p/q]
//   basis <expr>, <expr>, ...           (named basis of the middle cohomology)
// '#' starts a comment. Generator declarations may appear anywhere; the other
// statements are resolved in file order after all generators are known.
struct DgaDocument {
  DgaSpec dga;
  std::vector<std::pair<std::string, Element>> aliases;  // declaration order
  std::optional<FundamentalClass> fundamental;
  std::optional<std::vector<Element>> basis;

  AliasTable alias_table() const;
};

DgaDocument parse_dga(std::string_view text);
DgaDocument load_dga(const std::filesystem::path& path);

// Canonical form: generators in declaration order, expanded expressions in monomial order.
std::string serialize(const DgaDocument& doc);

// Catalog records:
//   entry <name> dim <n>
//   flag <name> inflexible | strongly_inflexible | pi_{n-1}_rational_zero
//   degset <from> <to> finite {a,b,...} | infinite
//   model <name> <path to .dga>         (the π-flag is then derived from the model)
// Relative model paths resolve against `base_dir`.
Catalog parse_catalog(std::string_view text, const std::filesystem::path& base_dir = {});
Catalog load_catalog(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string digest(std::string_view bytes);

}  // namespace dgalab
