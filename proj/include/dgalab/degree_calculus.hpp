#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace dgalab {

// A set of mapping degrees. `bound` is meaningful for finite sets and contains the whole
// set; `known` lists degrees certainly attained and always includes 0 (constant maps).
struct DegSet {
  enum class Kind { finite, infinite, unknown };
  Kind kind = Kind::unknown;
  std::set<long> bound;
  std::set<long> known{0};

  static DegSet finite(std::set<long> values);
  static DegSet infinite();
  static DegSet unknown();

  std::string to_string() const;
  friend bool operator==(const DegSet&, const DegSet&) = default;
};

// Elementwise sum. Anything but finite + finite degrades to unknown: the connected-sum
// estimate is only an upper containment.
DegSet sum_sets(const DegSet& a, const DegSet& b);

enum class Flag { inflexible, strongly_inflexible, pi_rational_zero };
const char* to_string(Flag f);
std::optional<Flag> parse_flag(const std::string& s);

struct CatalogEntry {
  std::string name;
  int dimension = 0;
  std::vector<std::string> summands;  // from a name of the form "A#B#..."
  std::optional<std::filesystem::path> model;
  int line = 0;
};

struct CatalogFlag {
  std::string entry;
  Flag flag;
  int line = 0;
};

struct CatalogDegSet {
  std::string from;
  std::string to;
  DegSet set;
  int line = 0;
};

struct Catalog {
  std::vector<CatalogEntry> entries;
  std::vector<CatalogFlag> flags;
  std::vector<CatalogDegSet> degsets;

  const CatalogEntry* find(const std::string& name) const;
};

struct Fact {
  enum class Kind { flag, finite, infinite, member };
  Kind kind = Kind::flag;
  std::string subject;  // entry name for flags, source for deg-set facts
  std::string target;   // deg-set facts only
  Flag flag = Flag::inflexible;
  std::set<long> bound;  // finite facts
  long value = 0;        // member facts

  std::string rule;  // "axiom" or a rule name
  std::vector<std::size_t> premises;
  std::string note;  // e.g. the axiom's catalog line

  std::string key() const;
  std::string statement() const;
};

struct Derivation {
  std::vector<Fact> facts;

  std::vector<const Fact*> derived() const;
  const Fact* find(const std::string& key) const;
};

// Rules, applied to a fixpoint:
//   R1  deg(N1#...#Nr, M) ⊂ Σ deg(Ni, M), needs the π-flag on M and finite deg(Ni, M)
//   R2  1 ∈ deg(N, M), deg(N, M) finite ⇒ deg(N, N) finite
//   R2' deg(N, N) finite ⇒ N inflexible
//   R3  1 ∈ deg(M#N, M) (collapse map)
//   R4  strongly inflexible ⇒ inflexible
//   R5  inflexible ⇒ deg(M, M) ⊂ {-1, 0, 1}
//   Rpi a model without generators in degree n-1 gives π_{n-1}(M) ⊗ Q = 0
//   Rm  a catalog deg-set given as finite contains each of its listed degrees
// Throws Error when two facts contradict each other; the message names both.
Derivation propagate(const Catalog& catalog);

// Re-derives every non-axiom fact from its premises; returns an empty string on success
// or a description of the first step that does not replay.
std::string replay(const Catalog& catalog, const Derivation& derivation);

}  // namespace dgalab
