#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dgalab/ansatz.hpp"
#include "dgalab/cohomology.hpp"
#include "dgalab/poincare.hpp"
#include "dgalab/solver.hpp"

namespace dgalab {

// P with H(f)[fc] = P · [fc] for the ansatz endomorphism f: f(representative) is expanded
// and every monomial is reduced against [fc] in top cohomology.
Poly symbolic_degree(const TopFunctional& top, const DgaSpec& dga, const EndoAnsatz& ansatz,
                     const FundamentalClass& fc);

// The same reduction for arbitrary generator images; nullopt when an intermediate
// product exceeds max_terms coefficient terms (0 disables the limit).
std::optional<Poly> expand_degree(const TopFunctional& top, const DgaSpec& dga,
                                  const std::vector<SymbolicElement>& images,
                                  const FundamentalClass& fc, std::size_t max_terms);

// Chain-map equations d(f g) = f(d g) whose right side is a product of images of even
// generators that are general linear combinations of generators in disjoint blocks.
std::vector<SupportEquation> support_equations(const DgaSpec& dga, const EndoAnsatz& ansatz);

struct Certificate {
  enum class Overall { inflexible, inconclusive };

  std::string algebra;
  Element fundamental;
  EndoAnsatz ansatz;
  ConstraintSystem constraints;
  Poly degree;
  bool degree_deferred = false;  // P too large up front; expanded per branch instead
  std::vector<SupportEquation> support;
  BranchTree tree;
  Overall verdict = Overall::inconclusive;

  std::size_t count(Verdict v) const;
};

const char* to_string(Certificate::Overall v);

// Inflexible iff every leaf concludes P = 0, |P| = 1 or infeasibility. Never "flexible".
struct CertifyConfig : SolverConfig {
  std::size_t max_degree_terms = 200000;
};

Certificate certify_inflexible(std::shared_ptr<const Cohomology> h, const FundamentalClass& fc,
                               const CertifyConfig& config = {});

// The scalar d with H(f)[fc] = d·[fc]. Throws PreconditionError when f is not a chain map.
Q degree_of(std::shared_ptr<const Cohomology> h, const ConcreteEndo& f,
            const FundamentalClass& fc);

// One entry per nonzero odd-word-length component of each cohomology basis class.
struct FlexibilityWitness {
  int degree = 0;
  int odd_length = 0;
  Element component;  // cocycle, nonzero in cohomology
  Q factor;           // H(f)[component] = factor · [component] for the scaling map f
  bool verified = false;
  bool flexible() const { return factor != 0 && factor != 1 && factor != -1; }
};

// Pure DGAs only (PreconditionError otherwise). Degrees 0 .. formal dimension.
std::vector<FlexibilityWitness> pure_flexibility_witnesses(std::shared_ptr<const Cohomology> h,
                                                           const Q& base = 2);

}  // namespace dgalab
