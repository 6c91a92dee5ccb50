#include "dgalab/algebra.hpp"

#include <sstream>

#include "dgalab/errors.hpp"

namespace dgalab {

bool Monomial::is_unit() const {
  for (auto e : exponents_)
    if (e != 0) return false;
  return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exponents()) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

std::optional<int> Element::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.begin()->first.degree();
  if (terms_.rbegin()->first.degree() != d) return std::nullopt;
  return d;
}

bool Element::is_homogeneous() const { return terms_.empty() || degree().has_value(); }

Q Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Q(0) : it->second;
}

void Element::add_term(const Monomial& m, const Q& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Q& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Algebra::Algebra(std::vector<GeneratorSpec> generators) : generators_(std::move(generators)) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (g.name.empty()) throw InputError("generator with empty name");
    if (g.degree < 1) throw InputError("generator '" + g.name + "' must have positive degree");
    if (!index_.emplace(g.name, i).second)
      throw InputError("duplicate generator name '" + g.name + "'");
  }
}

std::optional<std::size_t> Algebra::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Monomial Algebra::unit_monomial() const {
  return Monomial(std::vector<std::uint16_t>(generators_.size(), 0), 0);
}

Monomial Algebra::generator_monomial(std::size_t i) const {
  std::vector<std::uint16_t> e(generators_.size(), 0);
  e[i] = 1;
  return Monomial(std::move(e), generators_[i].degree);
}

int Algebra::degree_of(const std::vector<std::uint16_t>& exponents) const {
  int d = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) d += exponents[i] * generators_[i].degree;
  return d;
}

std::optional<Monomial> Algebra::monomial(std::vector<std::uint16_t> exponents) const {
  if (exponents.size() != generators_.size())
    throw InputError("monomial does not belong to this algebra");
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (generators_[i].odd() && exponents[i] > 1) return std::nullopt;
  int d = degree_of(exponents);
  return Monomial(std::move(exponents), d);
}

Element Algebra::one() const { return Element(unit_monomial(), 1); }

Element Algebra::gen(std::size_t i) const { return Element(generator_monomial(i), 1); }

Element Algebra::gen(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw InputError("unknown generator '" + std::string(name) + "'");
  return gen(*i);
}

std::pair<int, Monomial> Algebra::multiply(const Monomial& a, const Monomial& b) const {
  const std::size_t n = generators_.size();
  if (a.size() != n || b.size() != n) throw InputError("monomial does not belong to this algebra");
  std::vector<std::uint16_t> e(n);
  // Moving each odd factor of b leftwards past the odd factors of a with larger index.
  int swaps = 0;
  int odd_in_a_after = 0;
  for (std::size_t i = n; i-- > 0;) {
    if (generators_[i].odd()) {
      if (a[i] && b[i]) return {0, Monomial()};
      if (b[i]) swaps += odd_in_a_after;
      if (a[i]) ++odd_in_a_after;
    }
    e[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  }
  return {swaps % 2 ? -1 : 1, Monomial(std::move(e), a.degree() + b.degree())};
}

Element Algebra::multiply(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      auto [sign, m] = multiply(ma, mb);
      if (sign == 0) continue;
      out.add_term(m, sign > 0 ? Q(ca * cb) : Q(-(ca * cb)));
    }
  }
  return out;
}

Element Algebra::power(const Element& a, unsigned k) const {
  Element result = one();
  Element base = a;
  while (k) {
    if (k & 1u) result = multiply(result, base);
    k >>= 1u;
    if (k) base = multiply(base, base);
  }
  return result;
}

std::vector<Monomial> Algebra::basis_of_degree(int n) const {
  std::vector<Monomial> out;
  if (n < 0) return out;
  const std::size_t k = generators_.size();
  std::vector<std::uint16_t> e(k, 0);
  // Exponents are tried from high to low so the output is already lex-descending.
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == k) {
      if (remaining == 0) out.emplace_back(e, n);
      return;
    }
    const int d = generators_[i].degree;
    int max_e = remaining / d;
    if (generators_[i].odd() && max_e > 1) max_e = 1;
    for (int x = max_e; x >= 0; --x) {
      e[i] = static_cast<std::uint16_t>(x);
      self(self, i + 1, remaining - x * d);
    }
    e[i] = 0;
  };
  rec(rec, 0, n);
  return out;
}

int Algebra::odd_word_length(const Monomial& m) const {
  int k = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (generators_[i].odd()) k += m[i];
  return k;
}

int Algebra::word_length(const Monomial& m) const {
  int k = 0;
  for (auto e : m.exponents()) k += e;
  return k;
}

std::string Algebra::format(const Monomial& m) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!first) os << ' ';
    first = false;
    os << generators_[i].name;
    if (m[i] > 1) os << '^' << m[i];
  }
  if (first) os << '1';
  return os.str();
}

std::string Algebra::format(const Element& e) const {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    Q mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_unit()) {
      os << to_string(mag);
    } else {
      if (mag != 1) os << to_string(mag) << ' ';
      os << format(m);
    }
  }
  return os.str();
}

}  // namespace dgalab
