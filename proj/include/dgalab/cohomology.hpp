#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dgalab/dga.hpp"
#include "dgalab/errors.hpp"
#include "dgalab/linalg.hpp"

namespace dgalab {

class NotCocycleError : public Error {
 public:
  NotCocycleError(const std::string& message, Element boundary)
      : Error(message), boundary_(std::move(boundary)) {}
  const Element& boundary() const { return boundary_; }

 private:
  Element boundary_;
};

// Monomial basis of one degree with a reverse index; vectors over it are SparseVec.
struct DegreeBasis {
  int degree = 0;
  std::vector<Monomial> monomials;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;

  std::size_t size() const { return monomials.size(); }
  SparseVec vector_of(const Element& e) const;
  Element element_of(const SparseVec& v) const;
};

// H^n presented by echelon data inside the cochains C^n.
struct CohomologySpace {
  int degree = 0;
  std::size_t cochain_dim = 0;
  std::size_t cocycle_dim = 0;
  Echelon image;            // B^n
  Echelon representatives;  // cocycles reduced modulo B^n, in echelon form

  std::size_t dimension() const { return representatives.rank(); }
};

struct CohomologyClass {
  int degree = 0;
  std::vector<Q> coordinates;

  bool is_zero() const;
  friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;
};

struct NilpotencyResult {
  std::optional<int> exponent;  // smallest k ≤ bound with [g]^k = 0
  int bound = 0;
  Element witness;              // d(witness) = g^k
};

// Degreewise cohomology of one DGA. Spaces are computed on demand and cached; the
// object is safe to share between threads.
class Cohomology {
 public:
  explicit Cohomology(DgaSpec dga, Exec exec = Exec::parallel);

  const DgaSpec& dga() const { return dga_; }
  Exec exec() const { return exec_; }

  const DegreeBasis& basis(int n) const;
  const CohomologySpace& space(int n) const;
  // Fills the cache for degrees in [from, to], one degree per OpenMP task when parallel.
  void precompute(int from, int to) const;

  std::vector<Element> representatives(int n) const;
  Element representative(const CohomologyClass& c) const;

  bool is_cocycle(const Element& c) const { return dga_.differential(c).is_zero(); }
  // `degree` is required only for the zero element.
  CohomologyClass class_of(const Element& c, std::optional<int> degree = std::nullopt) const;
  // u with d(u) = c, or nullopt when c is not exact. Throws NotCocycleError.
  std::optional<Element> coboundary_witness(const Element& c) const;
  CohomologyClass cup(const CohomologyClass& u, const CohomologyClass& v) const;
  // Powers of an even generator; default bound floor(formal_dimension / |g|) + 1.
  NilpotencyResult nilpotency(std::size_t generator, std::optional<int> bound = std::nullopt) const;

  // Columns d(b) for b in basis(n), expressed over basis(n + 1).
  std::vector<SparseVec> differential_columns(int n) const;

 private:
  CohomologySpace compute_space(int n) const;
  int require_degree(const Element& c, std::optional<int> degree) const;

  DgaSpec dga_;
  Exec exec_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::unique_ptr<DegreeBasis>> bases_;
  mutable std::map<int, std::unique_ptr<CohomologySpace>> spaces_;
};

// Linear functional on degree-n cochains that vanishes on coboundaries and takes the
// value 1 on the fundamental class; on cocycles it is the coefficient against [fc].
// When the DGA splits as a tensor product of several generator blocks the functional
// is assembled from the blocks' top-degree functionals, so the top degree of the
// whole algebra is never enumerated.
class TopFunctional {
 public:
  TopFunctional(std::shared_ptr<const Cohomology> cohomology, const Element& fundamental);

  int degree() const { return degree_; }
  bool factorized() const { return !blocks_.empty(); }
  Q operator()(const Monomial& m) const;
  Q operator()(const Element& e) const;

 private:
  struct Block {
    std::vector<std::size_t> generators;
    std::shared_ptr<const Cohomology> cohomology;
    int top = 0;
  };
  Q raw(const Monomial& m) const;
  static Q direct(const Cohomology& h, const Monomial& m);

  std::shared_ptr<const Cohomology> cohomology_;
  std::vector<Block> blocks_;
  std::vector<std::vector<std::size_t>> block_generators_;
  int degree_ = 0;
  Q scale_ = 1;
  mutable std::mutex mutex_;
  mutable std::unordered_map<Monomial, Q, MonomialHash> cache_;
};

}  // namespace dgalab
