#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgalab/dga.hpp"
#include "dgalab/polynomial.hpp"

namespace dgalab {

// Element of the algebra whose coefficients are polynomials in the ansatz unknowns.
using SymbolicElement = std::map<Monomial, Poly, MonomialOrder>;

void add_to(SymbolicElement& target, const Monomial& m, const Poly& c);
SymbolicElement multiply(const Algebra& algebra, const SymbolicElement& a,
                         const SymbolicElement& b);

struct Unknown {
  std::size_t generator = 0;
  Monomial monomial;
  std::string name;  // "c[<generator>|<monomial>]"
};

// The general degree-preserving endomorphism: f(g) = Σ u_{g,i} b_i over the monomial
// basis b_i of degree |g|, one fresh unknown per pair.
class EndoAnsatz {
 public:
  EndoAnsatz() = default;
  explicit EndoAnsatz(const DgaSpec& dga);

  std::size_t size() const { return unknowns_.size(); }
  const Unknown& unknown(Var v) const { return unknowns_[v]; }
  const std::string& name(Var v) const { return unknowns_[v].name; }
  std::optional<Var> find(const std::string& name) const;
  // The unknown multiplying monomial m in f(generator), if any.
  std::optional<Var> find(std::size_t generator, const Monomial& m) const;
  const std::vector<Var>& unknowns_of(std::size_t generator) const { return by_generator_[generator]; }
  const SymbolicElement& image(std::size_t generator) const { return images_[generator]; }

  // f applied to a monomial, products of generator images with Koszul signs.
  SymbolicElement apply(const Algebra& algebra, const Monomial& m) const;
  SymbolicElement apply(const Algebra& algebra, const Element& e) const;

  // 1 on each generator's own monomial, 0 elsewhere.
  std::vector<Q> identity_assignment() const;
  ConcreteEndo specialize(const std::vector<Q>& assignment) const;
  std::function<std::string(Var)> namer() const;

 private:
  std::vector<Unknown> unknowns_;
  std::vector<std::vector<Var>> by_generator_;
  std::vector<SymbolicElement> images_;
  std::map<std::string, Var> by_name_;
};

EndoAnsatz build_ansatz(const DgaSpec& dga);

struct Constraint {
  Poly poly;  // required to vanish
  std::size_t generator = 0;
  Monomial monomial;  // coefficient of this monomial in f(dg) − d(f(g))
};

struct ConstraintSystem {
  std::vector<Constraint> constraints;
  std::string provenance(const DgaSpec& dga, std::size_t i) const;
};

ConstraintSystem chain_constraints(const DgaSpec& dga, const EndoAnsatz& ansatz);

}  // namespace dgalab
