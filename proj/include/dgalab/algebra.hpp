#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dgalab/rational.hpp"

namespace dgalab {

struct GeneratorSpec {
  std::string name;
  int degree = 0;

  bool odd() const { return degree % 2 != 0; }
  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

// Exponent vector over the generators of one algebra, in declaration order.
// The total degree is cached because the monomial order is graded.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::vector<std::uint16_t> exponents, int degree)
      : exponents_(std::move(exponents)), degree_(degree) {}

  const std::vector<std::uint16_t>& exponents() const { return exponents_; }
  std::uint16_t operator[](std::size_t i) const { return exponents_[i]; }
  std::size_t size() const { return exponents_.size(); }
  int degree() const { return degree_; }
  bool is_unit() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents_ == b.exponents_;
  }

 private:
  std::vector<std::uint16_t> exponents_;
  int degree_ = 0;
};

// Graded-lex: total degree ascending, then exponent vectors descending in declaration
// order (so x1^2 precedes x2 when x1 is declared first).
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() > b.exponents();
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// Finite Q-linear combination of sign-normalized monomials. Zero coefficients are never stored.
class Element {
 public:
  using Terms = std::map<Monomial, Q, MonomialOrder>;

  Element() = default;
  Element(const Monomial& m, const Q& c) { add_term(m, c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Degree of a nonzero homogeneous element; nullopt for zero or mixed elements.
  std::optional<int> degree() const;
  bool is_homogeneous() const;

  Q coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Q& c);

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Q& scalar);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Q& s) { return a *= s; }
  friend Element operator*(const Q& s, Element a) { return a *= s; }
  Element operator-() const { return *this * Q(-1); }

  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

// The free graded-commutative algebra on an ordered list of generators over Q.
// Odd generators anticommute and square to zero; the declaration order is the
// normal order of monomials.
class Algebra {
 public:
  Algebra() = default;
  explicit Algebra(std::vector<GeneratorSpec> generators);

  std::size_t size() const { return generators_.size(); }
  const std::vector<GeneratorSpec>& generators() const { return generators_; }
  const GeneratorSpec& generator(std::size_t i) const { return generators_[i]; }
  bool is_odd(std::size_t i) const { return generators_[i].odd(); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  Monomial unit_monomial() const;
  Monomial generator_monomial(std::size_t i) const;
  // Builds a monomial from an exponent vector; nullopt when an odd exponent exceeds 1.
  std::optional<Monomial> monomial(std::vector<std::uint16_t> exponents) const;
  int degree_of(const std::vector<std::uint16_t>& exponents) const;

  Element one() const;
  Element gen(std::size_t i) const;
  Element gen(std::string_view name) const;

  // Sign-normalized product of monomials: sign in {-1, 0, +1} and the normal-form monomial.
  std::pair<int, Monomial> multiply(const Monomial& a, const Monomial& b) const;
  Element multiply(const Element& a, const Element& b) const;
  Element power(const Element& a, unsigned k) const;

  // Every monomial of total degree n, graded-lex ordered (see MonomialOrder).
  std::vector<Monomial> basis_of_degree(int n) const;

  int odd_word_length(const Monomial& m) const;
  // Word length in the generators (sum of exponents).
  int word_length(const Monomial& m) const;

  std::string format(const Monomial& m) const;
  std::string format(const Element& e) const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.generators_ == b.generators_;
  }

 private:
  std::vector<GeneratorSpec> generators_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace dgalab
