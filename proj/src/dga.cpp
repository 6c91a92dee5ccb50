#include "dgalab/dga.hpp"

#include <algorithm>
#include <numeric>

#include "dgalab/errors.hpp"

namespace dgalab {

DgaSpec::DgaSpec(std::string name, Algebra algebra, std::vector<Element> differential)
    : name_(std::move(name)), algebra_(std::move(algebra)), differential_(std::move(differential)) {
  if (differential_.size() != algebra_.size())
    throw InputError("differential must be given for every generator");
  for (std::size_t g = 0; g < differential_.size(); ++g) {
    const auto& dg = differential_[g];
    if (dg.is_zero()) continue;
    auto deg = dg.degree();
    const auto& spec = algebra_.generator(g);
    if (!deg || *deg != spec.degree + 1)
      throw InputError("d(" + spec.name + ") must be homogeneous of degree " +
                       std::to_string(spec.degree + 1));
  }
}

Element DgaSpec::differential(const Monomial& m) const {
  Element out;
  const std::size_t n = algebra_.size();
  std::vector<std::uint16_t> prefix(n, 0);
  int prefix_degree = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned e = m[i];
    if (e == 0) continue;
    if (!differential_[i].is_zero()) {
      // P · d(g^e) · S = (-1)^{|P|} e · P · dg · (g^{e-1} S); g^{e-1} is even so it commutes with dg.
      std::vector<std::uint16_t> rest(n, 0);
      for (std::size_t j = i; j < n; ++j) rest[j] = m[j];
      rest[i] = static_cast<std::uint16_t>(e - 1);
      Monomial p(prefix, prefix_degree);
      Monomial r(rest, m.degree() - prefix_degree - algebra_.generator(i).degree);
      Q scale = (prefix_degree % 2 ? -1 : 1) * static_cast<long>(e);
      for (const auto& [t, c] : differential_[i].terms()) {
        auto [s1, pt] = algebra_.multiply(p, t);
        if (s1 == 0) continue;
        auto [s2, full] = algebra_.multiply(pt, r);
        if (s2 == 0) continue;
        out.add_term(full, (s1 * s2 > 0) ? Q(c * scale) : Q(-c * scale));
      }
    }
    prefix[i] = static_cast<std::uint16_t>(e);
    prefix_degree += static_cast<int>(e) * algebra_.generator(i).degree;
  }
  return out;
}

Element DgaSpec::differential(const Element& e) const {
  Element out;
  for (const auto& [m, c] : e.terms()) {
    Element dm = differential(m);
    for (const auto& [t, k] : dm.terms()) out.add_term(t, k * c);
  }
  return out;
}

DSquaredReport check_d_squared(const DgaSpec& dga) {
  DSquaredReport report;
  for (std::size_t g = 0; g < dga.size(); ++g) {
    Element dd = dga.differential(dga.d(g));
    if (!dd.is_zero()) {
      report.pass = false;
      report.failing_generator = g;
      report.residue = std::move(dd);
      return report;
    }
  }
  return report;
}

StructuralReport structural_report(const DgaSpec& dga) {
  const auto& alg = dga.algebra();
  StructuralReport r;
  r.simply_connected = std::all_of(alg.generators().begin(), alg.generators().end(),
                                   [](const GeneratorSpec& g) { return g.degree >= 2; });
  r.minimal = true;
  r.pure = true;
  for (std::size_t g = 0; g < dga.size(); ++g) {
    for (const auto& [m, c] : dga.d(g).terms()) {
      if (alg.word_length(m) <= 1) r.minimal = false;
      if (!alg.is_odd(g) || alg.odd_word_length(m) > 0) r.pure = false;
    }
  }
  return r;
}

int formal_dimension(const DgaSpec& dga) {
  auto s = structural_report(dga);
  if (!s.minimal || !s.simply_connected)
    throw PreconditionError("formal dimension needs a minimal simply connected DGA");
  int n = 0;
  for (const auto& g : dga.algebra().generators()) n += g.odd() ? g.degree : -(g.degree - 1);
  return n;
}

std::map<int, int> rational_homotopy_dims(const DgaSpec& dga, int upto) {
  std::map<int, int> out;
  for (int k = 1; k <= upto; ++k) out[k] = 0;
  for (const auto& g : dga.algebra().generators())
    if (g.degree <= upto) ++out[g.degree];
  return out;
}

namespace {

Monomial embed(const Monomial& m, std::size_t offset, std::size_t total) {
  std::vector<std::uint16_t> e(total, 0);
  std::copy(m.exponents().begin(), m.exponents().end(), e.begin() + static_cast<long>(offset));
  return Monomial(std::move(e), m.degree());
}

Element embed(const Element& x, std::size_t offset, std::size_t total) {
  Element out;
  for (const auto& [m, c] : x.terms()) out.add_term(embed(m, offset, total), c);
  return out;
}

}  // namespace

DgaSpec tensor_product(const DgaSpec& a, const DgaSpec& b) {
  std::vector<GeneratorSpec> gens;
  for (const auto& g : a.algebra().generators()) gens.push_back({g.name + "_a", g.degree});
  for (const auto& g : b.algebra().generators()) gens.push_back({g.name + "_b", g.degree});
  const std::size_t total = gens.size();
  std::vector<Element> d;
  for (std::size_t g = 0; g < a.size(); ++g) d.push_back(embed(a.d(g), 0, total));
  for (std::size_t g = 0; g < b.size(); ++g) d.push_back(embed(b.d(g), a.size(), total));
  return DgaSpec(a.name() + "_x_" + b.name(), Algebra(std::move(gens)), std::move(d));
}

Element tensor_element(const DgaSpec& tensor, const Element& a, std::size_t a_size,
                       const Element& b) {
  const Algebra& alg = tensor.algebra();
  Element out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      std::vector<std::uint16_t> e(alg.size(), 0);
      if (ma.size() != a_size || a_size + mb.size() != alg.size())
        throw PreconditionError("element does not belong to a tensor factor");
      std::copy(ma.exponents().begin(), ma.exponents().end(), e.begin());
      std::copy(mb.exponents().begin(), mb.exponents().end(), e.begin() + a_size);
      out.add_term(*alg.monomial(std::move(e)), ca * cb);
    }
  return out;
}

std::vector<std::vector<std::size_t>> tensor_components(const DgaSpec& dga) {
  const std::size_t n = dga.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t g = 0; g < n; ++g)
    for (const auto& [m, c] : dga.d(g).terms())
      for (std::size_t i = 0; i < n; ++i)
        if (m[i]) parent[find(i)] = find(g);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t g = 0; g < n; ++g) groups[find(g)].push_back(g);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

DgaSpec restrict_to(const DgaSpec& dga, std::span<const std::size_t> generators,
                    const std::string& name) {
  std::vector<std::size_t> sorted(generators.begin(), generators.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<long> position(dga.size(), -1);
  std::vector<GeneratorSpec> gens;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    position[sorted[k]] = static_cast<long>(k);
    gens.push_back(dga.algebra().generator(sorted[k]));
  }
  std::vector<Element> d;
  for (auto g : sorted) {
    Element img;
    for (const auto& [m, c] : dga.d(g).terms()) {
      std::vector<std::uint16_t> e(sorted.size(), 0);
      for (std::size_t i = 0; i < dga.size(); ++i) {
        if (!m[i]) continue;
        if (position[i] < 0)
          throw PreconditionError("generator set is not closed under the differential");
        e[static_cast<std::size_t>(position[i])] = m[i];
      }
      img.add_term(Monomial(std::move(e), m.degree()), c);
    }
    d.push_back(std::move(img));
  }
  return DgaSpec(name, Algebra(std::move(gens)), std::move(d));
}

MonomialSplit split_monomial(const DgaSpec& dga,
                             const std::vector<std::vector<std::size_t>>& blocks,
                             const Monomial& m) {
  const auto& alg = dga.algebra();
  std::vector<std::size_t> block_of(dga.size(), 0);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (auto g : blocks[b]) block_of[g] = b;
  MonomialSplit out;
  // Odd factors in normal order, tagged by block; regrouping them costs one sign per inversion.
  std::vector<std::size_t> odd_blocks;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] && alg.is_odd(i)) odd_blocks.push_back(block_of[i]);
  long inversions = 0;
  for (std::size_t i = 0; i < odd_blocks.size(); ++i)
    for (std::size_t j = i + 1; j < odd_blocks.size(); ++j)
      if (odd_blocks[i] > odd_blocks[j]) ++inversions;
  out.sign = inversions % 2 ? -1 : 1;
  for (const auto& block : blocks) {
    std::vector<std::uint16_t> e(block.size(), 0);
    int degree = 0;
    for (std::size_t k = 0; k < block.size(); ++k) {
      e[k] = m[block[k]];
      degree += e[k] * alg.generator(block[k]).degree;
    }
    out.parts.emplace_back(std::move(e), degree);
  }
  return out;
}

Element ConcreteEndo::apply(const Algebra& algebra, const Monomial& m) const {
  Element out = algebra.one();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    out = algebra.multiply(out, algebra.power(images_[i], m[i]));
    if (out.is_zero()) break;
  }
  return out;
}

Element ConcreteEndo::apply(const Algebra& algebra, const Element& e) const {
  Element out;
  for (const auto& [m, c] : e.terms()) out += apply(algebra, m) * c;
  return out;
}

ConcreteEndo identity_endo(const DgaSpec& dga) {
  std::vector<Element> images;
  for (std::size_t g = 0; g < dga.size(); ++g) images.push_back(dga.algebra().gen(g));
  return ConcreteEndo(std::move(images));
}

ConcreteEndo zero_endo(const DgaSpec& dga) {
  return ConcreteEndo(std::vector<Element>(dga.size()));
}

ConcreteEndo pure_scaling_endo(const DgaSpec& dga, const Q& base) {
  if (!structural_report(dga).pure)
    throw PreconditionError("pure scaling endomorphism requires a pure DGA");
  std::vector<Element> images;
  for (std::size_t g = 0; g < dga.size(); ++g) {
    const auto& spec = dga.algebra().generator(g);
    long exponent = spec.odd() ? spec.degree + 1 : spec.degree;
    images.push_back(dga.algebra().gen(g) * pow(base, exponent));
  }
  return ConcreteEndo(std::move(images));
}

ChainMapReport check_chain_map(const DgaSpec& dga, const ConcreteEndo& f) {
  const auto& alg = dga.algebra();
  if (f.images().size() != dga.size())
    throw InputError("endomorphism must give an image for every generator");
  for (std::size_t g = 0; g < dga.size(); ++g) {
    const auto& img = f.image(g);
    if (img.is_zero()) continue;
    auto deg = img.degree();
    if (!deg || *deg != alg.generator(g).degree)
      throw InputError("image of " + alg.generator(g).name + " is not homogeneous of degree " +
                       std::to_string(alg.generator(g).degree));
  }
  ChainMapReport report;
  for (std::size_t g = 0; g < dga.size(); ++g) {
    Element lhs = f.apply(alg, dga.d(g));
    Element rhs = dga.differential(f.image(g));
    if (!(lhs == rhs)) {
      report.pass = false;
      report.failing_generator = g;
      report.lhs = std::move(lhs);
      report.rhs = std::move(rhs);
      return report;
    }
  }
  return report;
}

}  // namespace dgalab
