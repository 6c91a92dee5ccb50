#include "dgalab/ansatz.hpp"

#include <unordered_map>

#include "dgalab/errors.hpp"

namespace dgalab {

void add_to(SymbolicElement& target, const Monomial& m, const Poly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = target.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) target.erase(it);
  }
}

SymbolicElement multiply(const Algebra& algebra, const SymbolicElement& a,
                         const SymbolicElement& b) {
  SymbolicElement out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      auto [sign, m] = algebra.multiply(ma, mb);
      if (sign == 0) continue;
      Poly c = ca * cb;
      if (sign < 0) c *= Q(-1);
      add_to(out, m, c);
    }
  return out;
}

EndoAnsatz::EndoAnsatz(const DgaSpec& dga) {
  const Algebra& alg = dga.algebra();
  by_generator_.resize(alg.size());
  images_.resize(alg.size());
  for (std::size_t g = 0; g < alg.size(); ++g) {
    for (const auto& b : alg.basis_of_degree(alg.generator(g).degree)) {
      const Var v = static_cast<Var>(unknowns_.size());
      Unknown u{g, b, "c[" + alg.generator(g).name + "|" + alg.format(b) + "]"};
      by_name_.emplace(u.name, v);
      unknowns_.push_back(std::move(u));
      by_generator_[g].push_back(v);
      images_[g].emplace(b, Poly::variable(v));
    }
  }
}

std::optional<Var> EndoAnsatz::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<Var> EndoAnsatz::find(std::size_t generator, const Monomial& m) const {
  for (Var v : by_generator_[generator])
    if (unknowns_[v].monomial == m) return v;
  return std::nullopt;
}

SymbolicElement EndoAnsatz::apply(const Algebra& algebra, const Monomial& m) const {
  SymbolicElement out;
  out.emplace(algebra.unit_monomial(), Poly(1));
  for (std::size_t g = 0; g < m.size(); ++g) {
    if (m[g] == 0) continue;
    if (algebra.is_odd(g) && m[g] > 1) return {};
    SymbolicElement p;
    p.emplace(algebra.unit_monomial(), Poly(1));
    for (unsigned k = 0; k < m[g]; ++k) p = multiply(algebra, p, images_[g]);
    out = multiply(algebra, out, p);
    if (out.empty()) break;
  }
  return out;
}

SymbolicElement EndoAnsatz::apply(const Algebra& algebra, const Element& e) const {
  SymbolicElement out;
  for (const auto& [m, c] : e.terms())
    for (const auto& [mm, p] : apply(algebra, m)) add_to(out, mm, p * c);
  return out;
}

std::vector<Q> EndoAnsatz::identity_assignment() const {
  std::vector<Q> out(unknowns_.size(), 0);
  for (std::size_t v = 0; v < unknowns_.size(); ++v) {
    const auto& u = unknowns_[v];
    const auto& ex = u.monomial.exponents();
    bool own = ex[u.generator] == 1;
    for (std::size_t i = 0; i < ex.size() && own; ++i)
      if (i != u.generator && ex[i] != 0) own = false;
    if (own) out[v] = 1;
  }
  return out;
}

ConcreteEndo EndoAnsatz::specialize(const std::vector<Q>& assignment) const {
  if (assignment.size() != unknowns_.size())
    throw PreconditionError("assignment size does not match the ansatz");
  std::vector<Element> images(images_.size());
  for (std::size_t g = 0; g < images_.size(); ++g)
    for (Var v : by_generator_[g]) images[g].add_term(unknowns_[v].monomial, assignment[v]);
  return ConcreteEndo(std::move(images));
}

std::function<std::string(Var)> EndoAnsatz::namer() const {
  return [this](Var v) { return unknowns_[v].name; };
}

EndoAnsatz build_ansatz(const DgaSpec& dga) { return EndoAnsatz(dga); }

std::string ConstraintSystem::provenance(const DgaSpec& dga, std::size_t i) const {
  const auto& c = constraints[i];
  return "d(" + dga.algebra().generator(c.generator).name + ") at " +
         dga.algebra().format(c.monomial);
}

namespace {

// f on products of generators, memoizing generator powers.
class PowerCache {
 public:
  PowerCache(const Algebra& alg, const EndoAnsatz& f) : alg_(alg), f_(f) {}

  const SymbolicElement& power(std::size_t g, unsigned k) {
    auto key = std::make_pair(g, k);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    SymbolicElement value;
    if (k == 0) {
      value.emplace(alg_.unit_monomial(), Poly(1));
    } else if (alg_.is_odd(g) && k > 1) {
      value = {};
    } else {
      value = multiply(alg_, power(g, k - 1), f_.image(g));
    }
    return cache_.emplace(key, std::move(value)).first->second;
  }

  SymbolicElement apply(const Monomial& m) {
    SymbolicElement out;
    out.emplace(alg_.unit_monomial(), Poly(1));
    for (std::size_t g = 0; g < m.size() && !out.empty(); ++g)
      if (m[g] != 0) out = multiply(alg_, out, power(g, m[g]));
    return out;
  }

 private:
  const Algebra& alg_;
  const EndoAnsatz& f_;
  std::map<std::pair<std::size_t, unsigned>, SymbolicElement> cache_;
};

}  // namespace

ConstraintSystem chain_constraints(const DgaSpec& dga, const EndoAnsatz& ansatz) {
  const Algebra& alg = dga.algebra();
  PowerCache cache(alg, ansatz);
  ConstraintSystem out;
  for (std::size_t g = 0; g < alg.size(); ++g) {
    SymbolicElement diff;  // f(dg) − d(f(g))
    for (const auto& [m, c] : dga.d(g).terms())
      for (const auto& [mm, p] : cache.apply(m)) add_to(diff, mm, p * c);
    for (Var v : ansatz.unknowns_of(g)) {
      const Element dm = dga.differential(ansatz.unknown(v).monomial);
      for (const auto& [mm, c] : dm.terms()) add_to(diff, mm, Poly::term({{v, 1}}, -c));
    }
    for (auto& [m, p] : diff) out.constraints.push_back(Constraint{std::move(p), g, m});
  }
  return out;
}

}  // namespace dgalab
