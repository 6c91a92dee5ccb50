#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dgalab/cohomology.hpp"
#include "dgalab/linalg.hpp"

namespace dgalab {

// The class scale · [representative].
struct FundamentalClass {
  Element representative;
  Q scale = 1;

  int degree() const { return representative.degree().value_or(-1); }
  Element scaled() const { return representative * scale; }
};

struct PairingCheck {
  int degree = 0;  // pairing H^degree × H^{n - degree}
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool perfect = false;
};

struct PoincareReport {
  bool pass = false;
  int formal_dimension = 0;
  bool representative_cocycle = false;
  bool representative_exact = false;
  std::size_t top_dimension = 0;
  std::vector<PairingCheck> pairings;
  std::vector<int> vanishing_checked;  // degrees above n verified to have H = 0
  std::string failure;                 // empty on success
  std::vector<PoincareReport> factors; // filled when checked through a tensor splitting
};

// `above_check` extra degrees n+1 .. n+above_check are verified to have zero cohomology.
PoincareReport check_poincare(std::shared_ptr<const Cohomology> h, const FundamentalClass& fc,
                              int above_check = 0);

struct BilinearFormQ {
  DenseMatrix matrix;
  std::vector<std::string> labels;

  std::size_t dimension() const { return matrix.size(); }
  Q pair(const std::vector<Q>& u, const std::vector<Q>& v) const;
  bool symmetric() const;
  bool unimodular_integral() const;
};

// Middle-degree pairing (u, v) ↦ c with [u][v] = c · fc. Uses the canonical echelon basis
// unless `basis` is given; a supplied basis must consist of cocycles spanning H^{n/2}.
BilinearFormQ intersection_form(std::shared_ptr<const Cohomology> h, const FundamentalClass& fc,
                                const std::optional<std::vector<Element>>& basis = std::nullopt);

Q determinant(const DenseMatrix& m);
int signature(const BilinearFormQ& f);

bool verify_lagrangian(const BilinearFormQ& f, const std::vector<std::vector<Q>>& subspace);

enum class Metabolic { yes, no, undetermined };
const char* to_string(Metabolic m);

struct WittVerdict {
  int signature = 0;
  Metabolic metabolic = Metabolic::undetermined;
  std::vector<std::vector<Q>> lagrangian;
  int height_bound = 0;
  std::string reason;
};

constexpr int default_height_bound = 10;

WittVerdict find_lagrangian(const BilinearFormQ& f, int height_bound = default_height_bound);

enum class Condition { holds, fails, undetermined };
const char* to_string(Condition c);

struct BargeSullivanReport {
  BilinearFormQ form;
  WittVerdict witt;
  Condition witt_condition = Condition::undetermined;       // Witt class in the image of W0(Z)
  Condition signature_condition = Condition::undetermined;  // signature = <L(1), [X]> = 0
};

BargeSullivanReport barge_sullivan_report(std::shared_ptr<const Cohomology> h,
                                          const FundamentalClass& fc,
                                          const std::optional<std::vector<Element>>& basis = std::nullopt,
                                          int height_bound = default_height_bound);

}  // namespace dgalab
