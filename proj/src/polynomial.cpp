#include "dgalab/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace dgalab {

PowerProduct multiply(const PowerProduct& a, const PowerProduct& b) {
  PowerProduct out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

std::uint32_t total_degree(const PowerProduct& p) {
  std::uint32_t d = 0;
  for (const auto& [v, e] : p) d += e;
  return d;
}

Poly::Poly(const Q& constant) {
  if (constant != 0) terms_.emplace(PowerProduct{}, constant);
}

Poly Poly::variable(Var v) { return term({{v, 1}}, 1); }

Poly Poly::term(PowerProduct p, const Q& c) {
  Poly out;
  if (c != 0) out.terms_.emplace(std::move(p), c);
  return out;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Q Poly::constant() const {
  auto it = terms_.find(PowerProduct{});
  return it == terms_.end() ? Q(0) : it->second;
}

void Poly::add_term(const PowerProduct& p, const Q& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

Poly& Poly::operator*=(const Q& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [pa, ca] : a.terms_)
    for (const auto& [pb, cb] : b.terms_) out.add_term(multiply(pa, pb), ca * cb);
  return out;
}

Poly Poly::pow(unsigned k) const {
  Poly result(1);
  Poly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

std::set<Var> Poly::variables() const {
  std::set<Var> out;
  for (const auto& [p, c] : terms_)
    for (const auto& [v, e] : p) out.insert(v);
  return out;
}

bool Poly::contains(Var v) const { return degree_in(v) > 0; }

std::uint32_t Poly::degree_in(Var v) const {
  std::uint32_t d = 0;
  for (const auto& [p, c] : terms_)
    for (const auto& [w, e] : p)
      if (w == v) d = std::max(d, e);
  return d;
}

std::optional<std::pair<Poly, Poly>> Poly::linear_split(Var v) const {
  Poly coeff;
  Poly rest;
  for (const auto& [p, c] : terms_) {
    auto it = std::find_if(p.begin(), p.end(), [&](const auto& x) { return x.first == v; });
    if (it == p.end()) {
      rest.add_term(p, c);
    } else if (it->second == 1) {
      PowerProduct q = p;
      q.erase(q.begin() + (it - p.begin()));
      coeff.add_term(q, c);
    } else {
      return std::nullopt;
    }
  }
  return std::make_pair(std::move(coeff), std::move(rest));
}

Poly Poly::substitute(Var v, const Poly& value) const {
  Poly out;
  std::map<std::uint32_t, Poly> powers;
  for (const auto& [p, c] : terms_) {
    auto it = std::find_if(p.begin(), p.end(), [&](const auto& x) { return x.first == v; });
    if (it == p.end()) {
      out.add_term(p, c);
      continue;
    }
    const std::uint32_t e = it->second;
    auto pit = powers.find(e);
    if (pit == powers.end()) pit = powers.emplace(e, value.pow(e)).first;
    PowerProduct q = p;
    q.erase(q.begin() + (it - p.begin()));
    for (const auto& [r, k] : pit->second.terms_) out.add_term(multiply(q, r), c * k);
  }
  return out;
}

Poly Poly::substitute(const std::map<Var, Poly>& values) const {
  Poly out;
  for (const auto& [p, c] : terms_) {
    Poly t(c);
    PowerProduct kept;
    for (const auto& [v, e] : p) {
      auto it = values.find(v);
      if (it == values.end())
        kept.emplace_back(v, e);
      else
        t = t * it->second.pow(e);
    }
    for (const auto& [r, k] : t.terms_) out.add_term(multiply(kept, r), k);
  }
  return out;
}

Q Poly::evaluate(const std::function<Q(Var)>& value) const {
  Q total = 0;
  for (const auto& [p, c] : terms_) {
    Q t = c;
    for (const auto& [v, e] : p) {
      t *= dgalab::pow(value(v), e);
      if (t == 0) break;
    }
    total += t;
  }
  return total;
}

PowerProduct Poly::common_factor() const {
  if (terms_.empty()) return {};
  PowerProduct g = terms_.begin()->first;
  for (const auto& [p, c] : terms_) {
    PowerProduct next;
    auto i = g.begin();
    auto j = p.begin();
    while (i != g.end() && j != p.end()) {
      if (i->first < j->first) {
        ++i;
      } else if (j->first < i->first) {
        ++j;
      } else {
        next.emplace_back(i->first, std::min(i->second, j->second));
        ++i;
        ++j;
      }
    }
    g = std::move(next);
    if (g.empty()) break;
  }
  return g;
}

Poly Poly::divide_by(const PowerProduct& d) const {
  Poly out;
  for (const auto& [p, c] : terms_) {
    PowerProduct q;
    auto j = d.begin();
    for (const auto& [v, e] : p) {
      while (j != d.end() && j->first < v) ++j;
      std::uint32_t sub = (j != d.end() && j->first == v) ? j->second : 0;
      if (e > sub) q.emplace_back(v, e - sub);
    }
    out.add_term(q, c);
  }
  return out;
}

std::string Poly::to_string(const std::function<std::string(Var)>& name) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads closer to hand-written relations.
  std::vector<std::pair<PowerProduct, Q>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return total_degree(a.first) > total_degree(b.first);
  });
  for (const auto& [p, c] : sorted) {
    Q mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (p.empty()) {
      os << dgalab::to_string(mag);
      continue;
    }
    if (mag != 1) os << dgalab::to_string(mag) << '*';
    bool firstv = true;
    for (const auto& [v, e] : p) {
      if (!firstv) os << '*';
      firstv = false;
      os << name(v);
      if (e > 1) os << '^' << e;
    }
  }
  return os.str();
}

}  // namespace dgalab
