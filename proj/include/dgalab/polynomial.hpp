#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dgalab/rational.hpp"

namespace dgalab {

using Var = std::uint32_t;

// Power product of unknowns: (variable, exponent) pairs sorted by variable, exponents > 0.
using PowerProduct = std::vector<std::pair<Var, std::uint32_t>>;

PowerProduct multiply(const PowerProduct& a, const PowerProduct& b);
std::uint32_t total_degree(const PowerProduct& p);

// Multivariate polynomial over Q in the ansatz unknowns.
class Poly {
 public:
  using Terms = std::map<PowerProduct, Q>;

  Poly() = default;
  Poly(const Q& constant);  // NOLINT: implicit constants keep arithmetic readable
  static Poly variable(Var v);
  static Poly term(PowerProduct p, const Q& c);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Q constant() const;  // coefficient of the empty power product
  bool is_monomial() const { return terms_.size() == 1; }

  void add_term(const PowerProduct& p, const Q& c);
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Q& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Q& s) { return a *= s; }
  friend Poly operator*(const Q& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const { return *this * Q(-1); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly pow(unsigned k) const;

  std::set<Var> variables() const;
  bool contains(Var v) const;
  std::uint32_t degree_in(Var v) const;
  // Coefficient polynomial of v^1 when v occurs at most linearly (nullopt otherwise),
  // together with the part free of v.
  std::optional<std::pair<Poly, Poly>> linear_split(Var v) const;

  Poly substitute(Var v, const Poly& value) const;
  Poly substitute(const std::map<Var, Poly>& values) const;
  Q evaluate(const std::function<Q(Var)>& value) const;

  // Largest power product dividing every term (empty for a constant term).
  PowerProduct common_factor() const;
  Poly divide_by(const PowerProduct& p) const;  // exact: p must divide every term

  std::string to_string(const std::function<std::string(Var)>& name) const;

 private:
  Terms terms_;
};

}  // namespace dgalab
