#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dgalab/algebra.hpp"

namespace dgalab {

// A finitely generated free graded-commutative DGA over Q, given by its generators
// and the differential on each generator. Construction checks that every d(g) is
// homogeneous of degree |g| + 1; d∘d = 0 is checked separately by check_d_squared.
class DgaSpec {
 public:
  DgaSpec() = default;
  DgaSpec(std::string name, Algebra algebra, std::vector<Element> differential);

  const std::string& name() const { return name_; }
  const Algebra& algebra() const { return algebra_; }
  std::size_t size() const { return algebra_.size(); }
  const Element& d(std::size_t generator) const { return differential_[generator]; }
  const std::vector<Element>& differentials() const { return differential_; }

  // Leibniz extension: d(ab) = d(a) b + (-1)^{|a|} a d(b).
  Element differential(const Element& e) const;
  Element differential(const Monomial& m) const;

 private:
  std::string name_;
  Algebra algebra_;
  std::vector<Element> differential_;
};

struct DSquaredReport {
  bool pass = true;
  std::optional<std::size_t> failing_generator;
  Element residue;  // d(d(g)) at the first failing generator
};

DSquaredReport check_d_squared(const DgaSpec& dga);

struct StructuralReport {
  bool simply_connected = false;
  bool minimal = false;
  bool pure = false;
};

StructuralReport structural_report(const DgaSpec& dga);

// Σ_{odd g} |g| − Σ_{even g} (|g| − 1). Requires a minimal simply connected DGA.
int formal_dimension(const DgaSpec& dga);

// Number of generators in each degree 1..upto (zeros included); for a minimal model
// this is dim π_k ⊗ Q of the modeled space.
std::map<int, int> rational_homotopy_dims(const DgaSpec& dga, int upto);

// Generators are concatenated; names get suffixes "_a" and "_b".
DgaSpec tensor_product(const DgaSpec& a, const DgaSpec& b);

// The product a·b in tensor_product(A, B) of a ∈ A (with A.size() == a_size) and b ∈ B.
Element tensor_element(const DgaSpec& tensor, const Element& a, std::size_t a_size,
                       const Element& b);

// Partition of the generators into the finest blocks closed under "appears in the
// differential of". A DGA is the tensor product of the sub-DGAs on its blocks.
std::vector<std::vector<std::size_t>> tensor_components(const DgaSpec& dga);

// Sub-DGA on a set of generators closed under the differential (declaration order kept).
DgaSpec restrict_to(const DgaSpec& dga, std::span<const std::size_t> generators,
                    const std::string& name);

// Splits a monomial into its parts over the given blocks: m = sign · ∏ parts (block order).
struct MonomialSplit {
  int sign = 1;
  std::vector<Monomial> parts;
};
MonomialSplit split_monomial(const DgaSpec& dga,
                             const std::vector<std::vector<std::size_t>>& blocks,
                             const Monomial& m);

// Algebra endomorphism given by its values on generators.
class ConcreteEndo {
 public:
  ConcreteEndo() = default;
  explicit ConcreteEndo(std::vector<Element> images) : images_(std::move(images)) {}

  const std::vector<Element>& images() const { return images_; }
  const Element& image(std::size_t g) const { return images_[g]; }

  Element apply(const Algebra& algebra, const Element& e) const;
  Element apply(const Algebra& algebra, const Monomial& m) const;

 private:
  std::vector<Element> images_;
};

ConcreteEndo identity_endo(const DgaSpec& dga);
ConcreteEndo zero_endo(const DgaSpec& dga);

// Pure DGAs only: x ↦ base^{|x|} x on even generators, y ↦ base^{|y|+1} y on odd ones.
ConcreteEndo pure_scaling_endo(const DgaSpec& dga, const Q& base = 2);

struct ChainMapReport {
  bool pass = true;
  std::optional<std::size_t> failing_generator;
  Element lhs;  // f(d g)
  Element rhs;  // d(f g)
};

// Throws InputError when an image is not homogeneous of its generator's degree.
ChainMapReport check_chain_map(const DgaSpec& dga, const ConcreteEndo& f);

}  // namespace dgalab
