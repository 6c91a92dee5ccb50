#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dgalab/lattice.hpp"
#include "dgalab/polynomial.hpp"

namespace dgalab {

struct SolverConfig {
  int max_splits = 8;
  bool parity_rules = true;     // R-mono parity deductions on even powers
  bool support_rule = true;     // R-support
  std::size_t max_nodes = 4096; // guard; exhausted branches become inconclusive
};

// A product ∏ L_j^{e_j} of general linear combinations L_j = Σ u·(generator), in pairwise
// disjoint generator blocks, that a chain-map equation forces into a given monomial set.
// When every L_j is nonzero, no forbidden pair of coefficients can be nonzero together.
struct SupportEquation {
  std::string provenance;
  std::vector<std::vector<Var>> factors;
  std::vector<std::pair<Var, Var>> forbidden_pairs;
};

struct SolverInput {
  std::vector<Poly> constraints;
  std::vector<std::string> provenance;  // parallel to constraints
  Poly degree;                          // P, unless degree_at is set
  // Deferred P: called with the current value of each unknown in a branch; returns P in
  // the remaining unknowns, or nullopt when the expansion is still too large.
  std::function<std::optional<Poly>(const std::function<Poly(Var)>&)> degree_at;
  std::vector<Var> degree_vars;  // unknowns P depends on, kept unsubstituted while deferred
  std::vector<SupportEquation> support;
  std::function<std::string(Var)> name;
};

struct Assumption {
  enum class Kind { zero, nonzero, all_zero, some_nonzero };
  Kind kind = Kind::zero;
  std::vector<Var> vars;

  bool holds(const std::vector<Q>& assignment) const;
  std::string to_string(const std::function<std::string(Var)>& name) const;
};

struct RuleApplication {
  std::string rule;  // R-subst, R-factor-zero, R-split, R-sum-reduce, R-mono, R-support, ...
  std::string detail;
  std::string provenance;
};

enum class Verdict { open, degree_zero, degree_unit, infeasible, inconclusive };
const char* to_string(Verdict v);

struct BranchNode {
  std::vector<Assumption> assumptions;  // added by the split that created this node
  std::vector<RuleApplication> rules;
  std::vector<std::pair<Var, Poly>> substitutions;  // in the order they were made
  std::vector<Relation> relations;                  // reduced multiplicative relations
  std::vector<std::size_t> children;
  std::optional<std::size_t> parent;
  int depth = 0;
  Verdict verdict = Verdict::open;
  std::string reason;
  Poly degree;                    // P after this node's deductions
  std::vector<Poly> residual;     // constraints still open at a leaf
  std::size_t residual_count = 0;
};

struct BranchTree {
  std::vector<BranchNode> nodes;  // nodes[0] is the root

  std::vector<std::size_t> leaves() const;
  // Leaves whose whole assumption path holds at the assignment.
  std::vector<std::size_t> matching_leaves(const std::vector<Q>& assignment) const;
  // Values for every unknown: `free_values` for unknowns never substituted on the path,
  // then substitutions replayed from the leaf up to the root.
  std::vector<Q> specialize(std::size_t leaf, std::size_t unknown_count,
                            const std::function<Q(Var)>& free_values) const;
  std::vector<std::pair<Var, Poly>> path_substitutions(std::size_t leaf) const;
};

BranchTree solve(const SolverInput& input, const SolverConfig& config = {});

}  // namespace dgalab
