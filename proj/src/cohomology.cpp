#include "dgalab/cohomology.hpp"

#include <algorithm>

namespace dgalab {

SparseVec DegreeBasis::vector_of(const Element& e) const {
  SparseVec v;
  v.reserve(e.size());
  for (const auto& [m, c] : e.terms()) {
    auto it = index.find(m);
    if (it == index.end()) throw Error("element is not of degree " + std::to_string(degree));
    v.emplace_back(it->second, c);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

Element DegreeBasis::element_of(const SparseVec& v) const {
  Element e;
  for (const auto& [i, c] : v) e.add_term(monomials[i], c);
  return e;
}

bool CohomologyClass::is_zero() const {
  return std::all_of(coordinates.begin(), coordinates.end(), [](const Q& q) { return q == 0; });
}

Cohomology::Cohomology(DgaSpec dga, Exec exec) : dga_(std::move(dga)), exec_(exec) {}

const DegreeBasis& Cohomology::basis(int n) const {
  {
    std::lock_guard lock(mutex_);
    auto it = bases_.find(n);
    if (it != bases_.end()) return *it->second;
  }
  auto b = std::make_unique<DegreeBasis>();
  b->degree = n;
  b->monomials = dga_.algebra().basis_of_degree(n);
  for (std::size_t i = 0; i < b->monomials.size(); ++i) b->index.emplace(b->monomials[i], i);
  std::lock_guard lock(mutex_);
  auto [it, inserted] = bases_.try_emplace(n, std::move(b));
  return *it->second;
}

std::vector<SparseVec> Cohomology::differential_columns(int n) const {
  const auto& source = basis(n);
  const auto& target = basis(n + 1);
  std::vector<SparseVec> cols(source.size());
  const long count = static_cast<long>(source.size());
  const bool parallel = exec_ == Exec::parallel;
#pragma omp parallel for schedule(dynamic) if (parallel && count > 16)
  for (long j = 0; j < count; ++j)
    cols[static_cast<std::size_t>(j)] =
        target.vector_of(dga_.differential(source.monomials[static_cast<std::size_t>(j)]));
  return cols;
}

CohomologySpace Cohomology::compute_space(int n) const {
  CohomologySpace s;
  s.degree = n;
  const auto& here = basis(n);
  s.cochain_dim = here.size();
  const auto& next = basis(n + 1);
  // Z^n = ker(d_n): the rows of d_n as a matrix are indexed by degree-(n+1) monomials.
  auto dn = transpose(differential_columns(n), next.size());
  auto cocycles = kernel_basis(rref(dn, here.size(), exec_));
  s.cocycle_dim = cocycles.size();
  s.image = rref(differential_columns(n - 1), here.size(), exec_);
  for (auto& z : cocycles) z = s.image.reduce(z);
  s.representatives = rref(cocycles, here.size(), exec_);
  return s;
}

const CohomologySpace& Cohomology::space(int n) const {
  {
    std::lock_guard lock(mutex_);
    auto it = spaces_.find(n);
    if (it != spaces_.end()) return *it->second;
  }
  auto s = std::make_unique<CohomologySpace>(compute_space(n));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = spaces_.try_emplace(n, std::move(s));
  return *it->second;
}

void Cohomology::precompute(int from, int to) const {
  const bool parallel = exec_ == Exec::parallel;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int n = from; n <= to; ++n) space(n);
}

std::vector<Element> Cohomology::representatives(int n) const {
  const auto& s = space(n);
  const auto& b = basis(n);
  std::vector<Element> out;
  for (const auto& row : s.representatives.rows) out.push_back(b.element_of(row));
  return out;
}

Element Cohomology::representative(const CohomologyClass& c) const {
  auto reps = representatives(c.degree);
  Element out;
  for (std::size_t i = 0; i < reps.size() && i < c.coordinates.size(); ++i)
    out += reps[i] * c.coordinates[i];
  return out;
}

int Cohomology::require_degree(const Element& c, std::optional<int> degree) const {
  if (c.is_zero()) {
    if (!degree) throw Error("the degree of the zero element must be given");
    return *degree;
  }
  auto d = c.degree();
  if (!d) throw Error("element is not homogeneous");
  if (degree && *degree != *d) throw Error("element degree does not match");
  return *d;
}

CohomologyClass Cohomology::class_of(const Element& c, std::optional<int> degree) const {
  const int n = require_degree(c, degree);
  Element dc = dga_.differential(c);
  if (!dc.is_zero()) throw NotCocycleError("not a cocycle", std::move(dc));
  const auto& s = space(n);
  CohomologyClass out;
  out.degree = n;
  auto rest = s.representatives.reduce(s.image.reduce(basis(n).vector_of(c)), &out.coordinates);
  if (!rest.empty()) throw Error("cocycle outside the computed cocycle space");
  return out;
}

std::optional<Element> Cohomology::coboundary_witness(const Element& c) const {
  if (c.is_zero()) return Element();
  const int n = require_degree(c, std::nullopt);
  Element dc = dga_.differential(c);
  if (!dc.is_zero()) throw NotCocycleError("not a cocycle", std::move(dc));
  const auto& here = basis(n);
  SparseVec v = here.vector_of(c);
  if (!space(n).image.contains(v)) return std::nullopt;
  const auto& below = basis(n - 1);
  auto rows = transpose(differential_columns(n - 1), here.size());
  auto x = solve(rows, below.size(), v, exec_);
  if (!x) throw Error("coboundary solve disagrees with the image echelon form");
  Element u = below.element_of(*x);
  if (!(dga_.differential(u) == c)) throw Error("coboundary witness failed verification");
  return u;
}

CohomologyClass Cohomology::cup(const CohomologyClass& u, const CohomologyClass& v) const {
  Element p = dga_.algebra().multiply(representative(u), representative(v));
  return class_of(p, u.degree + v.degree);
}

NilpotencyResult Cohomology::nilpotency(std::size_t generator, std::optional<int> bound) const {
  const auto& spec = dga_.algebra().generator(generator);
  if (spec.odd()) throw PreconditionError("nilpotency check needs an even generator");
  NilpotencyResult r;
  r.bound = bound ? *bound : formal_dimension(dga_) / spec.degree + 1;
  if (r.bound < 1) throw PreconditionError("nilpotency bound must be at least 1");
  if (!dga_.d(generator).is_zero()) throw PreconditionError("generator is not closed");
  Element g = dga_.algebra().gen(generator);
  Element power = dga_.algebra().one();
  for (int k = 1; k <= r.bound; ++k) {
    power = dga_.algebra().multiply(power, g);
    auto w = coboundary_witness(power);
    if (w) {
      r.exponent = k;
      r.witness = std::move(*w);
      return r;
    }
  }
  return r;
}

TopFunctional::TopFunctional(std::shared_ptr<const Cohomology> cohomology,
                             const Element& fundamental)
    : cohomology_(std::move(cohomology)) {
  const auto& dga = cohomology_->dga();
  if (fundamental.is_zero()) throw PreconditionError("fundamental class representative is zero");
  auto n = fundamental.degree();
  if (!n) throw PreconditionError("fundamental class representative is not homogeneous");
  degree_ = *n;
  if (!cohomology_->is_cocycle(fundamental))
    throw PreconditionError("fundamental class representative is not a cocycle");

  auto comps = tensor_components(dga);
  if (comps.size() > 1) {
    int total = 0;
    bool usable = true;
    for (std::size_t b = 0; b < comps.size(); ++b) {
      auto sub = restrict_to(dga, comps[b], dga.name() + "#" + std::to_string(b));
      if (!structural_report(sub).minimal) {
        usable = false;
        break;
      }
      Block block;
      block.generators = comps[b];
      block.top = formal_dimension(sub);
      block.cohomology = std::make_shared<Cohomology>(std::move(sub), cohomology_->exec());
      if (block.cohomology->space(block.top).dimension() != 1) {
        usable = false;
        break;
      }
      total += block.top;
      blocks_.push_back(std::move(block));
    }
    if (!usable || total != degree_) blocks_.clear();
    for (const auto& b : blocks_) block_generators_.push_back(b.generators);
  }
  if (blocks_.empty() && cohomology_->space(degree_).dimension() != 1)
    throw PreconditionError("top cohomology is not one-dimensional");

  Q value = 0;
  for (const auto& [m, c] : fundamental.terms()) value += c * raw(m);
  if (value == 0) throw PreconditionError("fundamental class representative is exact");
  scale_ = 1 / value;
}

Q TopFunctional::direct(const Cohomology& h, const Monomial& m) {
  const auto& s = h.space(m.degree());
  if (s.dimension() == 0) return 0;
  std::vector<Q> coeffs;
  s.representatives.reduce(s.image.reduce(h.basis(m.degree()).vector_of(Element(m, 1))), &coeffs);
  return coeffs.empty() ? Q(0) : coeffs.front();
}

Q TopFunctional::raw(const Monomial& m) const {
  if (m.degree() != degree_) return 0;
  if (blocks_.empty()) return direct(*cohomology_, m);
  auto split = split_monomial(cohomology_->dga(), block_generators_, m);
  Q value = split.sign;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (split.parts[b].degree() != blocks_[b].top) return 0;
    value *= direct(*blocks_[b].cohomology, split.parts[b]);
    if (value == 0) return 0;
  }
  return value;
}

Q TopFunctional::operator()(const Monomial& m) const {
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
  }
  Q v = raw(m) * scale_;
  std::lock_guard lock(mutex_);
  cache_.emplace(m, v);
  return v;
}

Q TopFunctional::operator()(const Element& e) const {
  Q total = 0;
  for (const auto& [m, c] : e.terms()) total += c * (*this)(m);
  return total;
}

}  // namespace dgalab
