#include "dgalab/inflexibility.hpp"

#include <algorithm>
#include <set>

#include "dgalab/errors.hpp"

namespace dgalab {

namespace {

std::size_t weight(const SymbolicElement& e) {
  std::size_t n = 0;
  for (const auto& [m, p] : e) n += p.size();
  return n;
}

}  // namespace

std::optional<Poly> expand_degree(const TopFunctional& top, const DgaSpec& dga,
                                  const std::vector<SymbolicElement>& images,
                                  const FundamentalClass& fc, std::size_t max_terms) {
  const Algebra& alg = dga.algebra();
  const Element& rep = fc.representative;
  const Q base = top(rep);
  if (base == 0) throw PreconditionError("fundamental class representative is exact");
  SymbolicElement unit;
  unit.emplace(alg.unit_monomial(), Poly(1));
  Poly p;
  for (const auto& [m, c] : rep.terms()) {
    SymbolicElement acc = unit;
    for (std::size_t g = 0; g < m.size() && !acc.empty(); ++g)
      for (unsigned k = 0; k < m[g] && !acc.empty(); ++k) {
        acc = multiply(alg, acc, images[g]);
        if (max_terms && weight(acc) > max_terms) return std::nullopt;
      }
    for (const auto& [mm, coeff] : acc) {
      const Q t = top(mm);
      if (t != 0) p += coeff * (c * t / base);
    }
  }
  return p;
}

Poly symbolic_degree(const TopFunctional& top, const DgaSpec& dga, const EndoAnsatz& ansatz,
                     const FundamentalClass& fc) {
  std::vector<SymbolicElement> images;
  for (std::size_t g = 0; g < dga.size(); ++g) images.push_back(ansatz.image(g));
  return *expand_degree(top, dga, images, fc, 0);
}

namespace {

using Exponents = std::vector<std::uint16_t>;

std::optional<std::size_t> single_generator(const Monomial& m) {
  std::optional<std::size_t> g;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (m[i] != 1 || g) return std::nullopt;
    g = i;
  }
  return g;
}

}  // namespace

std::vector<SupportEquation> support_equations(const DgaSpec& dga, const EndoAnsatz& ansatz) {
  const Algebra& alg = dga.algebra();
  std::vector<SupportEquation> out;
  for (std::size_t g = 0; g < alg.size(); ++g) {
    if (dga.d(g).size() != 1) continue;
    const Monomial& dm = dga.d(g).terms().begin()->first;
    struct Factor {
      unsigned exponent;
      std::vector<Var> vars;
      std::vector<std::size_t> gens;  // generator carried by each var
    };
    std::vector<Factor> factors;
    std::set<std::size_t> used;
    bool ok = true;
    for (std::size_t i = 0; i < dm.size() && ok; ++i) {
      if (dm[i] == 0) continue;
      if (alg.is_odd(i)) ok = false;
      Factor f{dm[i], {}, {}};
      for (Var v : ansatz.unknowns_of(i)) {
        auto sg = single_generator(ansatz.unknown(v).monomial);
        if (!sg || !used.insert(*sg).second) {
          ok = false;
          break;
        }
        f.vars.push_back(v);
        f.gens.push_back(*sg);
      }
      factors.push_back(std::move(f));
    }
    if (!ok || factors.empty()) continue;

    std::set<Exponents> allowed;
    for (Var v : ansatz.unknowns_of(g)) {
      const Element dv = dga.differential(ansatz.unknown(v).monomial);
      for (const auto& [m, c] : dv.terms()) allowed.insert(m.exponents());
    }

    SupportEquation eq;
    eq.provenance = "d(" + alg.generator(g).name + ") = " + alg.format(dga.d(g));
    for (const auto& f : factors) eq.factors.push_back(f.vars);

    // Pair (a, b) of factor i is forbidden when, for every choice of one generator t_j
    // from each other factor, some a^k b^{e-k} ∏ t_j^{e_j} falls outside the allowed set.
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const Factor& fi = factors[i];
      for (std::size_t a = 0; a < fi.vars.size(); ++a)
        for (std::size_t b = a + 1; b < fi.vars.size(); ++b) {
          bool forbidden = true;
          std::vector<std::size_t> choice(factors.size(), 0);
          while (true) {
            Exponents base(alg.size(), 0);
            for (std::size_t j = 0; j < factors.size(); ++j)
              if (j != i) base[factors[j].gens[choice[j]]] += factors[j].exponent;
            bool all_in = true;
            for (unsigned k = 0; k <= fi.exponent && all_in; ++k) {
              Exponents e = base;
              e[fi.gens[a]] += k;
              e[fi.gens[b]] += fi.exponent - k;
              all_in = allowed.count(e) > 0;
            }
            if (all_in) {
              forbidden = false;
              break;
            }
            std::size_t j = 0;
            for (; j < factors.size(); ++j) {
              if (j == i) continue;
              if (++choice[j] < factors[j].vars.size()) break;
              choice[j] = 0;
            }
            if (j == factors.size()) break;
          }
          if (forbidden) eq.forbidden_pairs.emplace_back(fi.vars[a], fi.vars[b]);
        }
    }
    if (!eq.forbidden_pairs.empty()) out.push_back(std::move(eq));
  }
  return out;
}

std::size_t Certificate::count(Verdict v) const {
  std::size_t n = 0;
  for (std::size_t leaf : tree.leaves())
    if (tree.nodes[leaf].verdict == v) ++n;
  return n;
}

const char* to_string(Certificate::Overall v) {
  return v == Certificate::Overall::inflexible ? "inflexible" : "inconclusive";
}

Certificate certify_inflexible(std::shared_ptr<const Cohomology> h, const FundamentalClass& fc,
                               const CertifyConfig& config) {
  const DgaSpec& dga = h->dga();
  TopFunctional top(h, fc.representative);
  Certificate cert;
  cert.algebra = dga.name();
  cert.fundamental = fc.scaled();
  cert.ansatz = build_ansatz(dga);
  cert.constraints = chain_constraints(dga, cert.ansatz);
  std::vector<SymbolicElement> images;
  for (std::size_t g = 0; g < dga.size(); ++g) images.push_back(cert.ansatz.image(g));
  auto expanded = expand_degree(top, dga, images, fc, config.max_degree_terms);
  cert.degree_deferred = !expanded;
  if (expanded) cert.degree = std::move(*expanded);

  const auto id = cert.ansatz.identity_assignment();
  auto at_id = [&](Var v) { return id[v]; };
  for (std::size_t i = 0; i < cert.constraints.constraints.size(); ++i)
    if (cert.constraints.constraints[i].poly.evaluate(at_id) != 0)
      throw Error("internal: identity does not satisfy the constraint from " +
                  cert.constraints.provenance(dga, i));
  if (expanded && cert.degree.evaluate(at_id) != 1)
    throw Error("internal: degree polynomial is not 1 at the identity");

  SolverInput input;
  for (std::size_t i = 0; i < cert.constraints.constraints.size(); ++i) {
    input.constraints.push_back(cert.constraints.constraints[i].poly);
    input.provenance.push_back(cert.constraints.provenance(dga, i));
  }
  input.degree = cert.degree;
  if (cert.degree_deferred) {
    for (const auto& [m, c] : fc.representative.terms())
      for (std::size_t g = 0; g < m.size(); ++g)
        if (m[g] != 0)
          for (Var v : cert.ansatz.unknowns_of(g)) input.degree_vars.push_back(v);
    input.degree_at = [&, images](const std::function<Poly(Var)>& value) {
      std::vector<SymbolicElement> current(images.size());
      for (std::size_t g = 0; g < images.size(); ++g)
        for (const auto& [m, c] : images[g]) {
          Poly v;
          for (const auto& [pp, q] : c.terms()) {
            Poly t(q);
            for (const auto& [u, e] : pp) t = t * value(u).pow(e);
            v += t;
          }
          add_to(current[g], m, v);
        }
      return expand_degree(top, dga, current, fc, config.max_degree_terms);
    };
  }
  if (config.support_rule) cert.support = support_equations(dga, cert.ansatz);
  input.support = cert.support;
  input.name = cert.ansatz.namer();
  cert.tree = solve(input, config);

  bool all = true;
  for (std::size_t leaf : cert.tree.leaves()) {
    Verdict v = cert.tree.nodes[leaf].verdict;
    if (v != Verdict::degree_zero && v != Verdict::degree_unit && v != Verdict::infeasible)
      all = false;
  }
  cert.verdict = all ? Certificate::Overall::inflexible : Certificate::Overall::inconclusive;
  return cert;
}

Q degree_of(std::shared_ptr<const Cohomology> h, const ConcreteEndo& f,
            const FundamentalClass& fc) {
  TopFunctional top(h, fc.representative);
  auto chain = check_chain_map(h->dga(), f);
  if (!chain.pass) {
    const auto& name = h->dga().algebra().generator(*chain.failing_generator).name;
    throw PreconditionError("not a chain map: f(d " + name + ") != d(f " + name + ")");
  }
  return top(f.apply(h->dga().algebra(), fc.representative)) / top(fc.representative);
}

std::vector<FlexibilityWitness> pure_flexibility_witnesses(std::shared_ptr<const Cohomology> h,
                                                           const Q& base) {
  const DgaSpec& dga = h->dga();
  const Algebra& alg = dga.algebra();
  if (!structural_report(dga).pure) throw PreconditionError("the DGA is not pure");
  const ConcreteEndo f = pure_scaling_endo(dga, base);
  if (!check_chain_map(dga, f).pass) throw Error("internal: scaling map is not a chain map");
  const int n = formal_dimension(dga);
  std::vector<FlexibilityWitness> out;
  for (int deg = 0; deg <= n; ++deg) {
    for (const Element& rep : h->representatives(deg)) {
      std::map<int, Element> parts;
      for (const auto& [m, c] : rep.terms()) parts[alg.odd_word_length(m)].add_term(m, c);
      for (const auto& [k, part] : parts) {
        if (!h->is_cocycle(part)) throw Error("internal: word-length component is not a cocycle");
        const CohomologyClass cls = h->class_of(part, deg);
        if (cls.is_zero()) continue;
        FlexibilityWitness w;
        w.degree = deg;
        w.odd_length = k;
        w.component = part;
        w.factor = pow(base, deg + k);
        const CohomologyClass image = h->class_of(f.apply(alg, part), deg);
        CohomologyClass expected = cls;
        for (auto& x : expected.coordinates) x *= w.factor;
        w.verified = image == expected;
        out.push_back(std::move(w));
      }
    }
  }
  return out;
}

}  // namespace dgalab
