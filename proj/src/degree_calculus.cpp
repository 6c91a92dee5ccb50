#include "dgalab/degree_calculus.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "dgalab/errors.hpp"
#include "dgalab/io.hpp"

namespace dgalab {

DegSet DegSet::finite(std::set<long> values) {
  DegSet s;
  s.kind = Kind::finite;
  s.bound = std::move(values);
  s.bound.insert(0);
  s.known = s.bound;
  return s;
}

DegSet DegSet::infinite() {
  DegSet s;
  s.kind = Kind::infinite;
  return s;
}

DegSet DegSet::unknown() { return DegSet{}; }

namespace {

std::string set_string(const std::set<long>& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (long v : s) {
    if (!first) os << ',';
    first = false;
    os << v;
  }
  os << '}';
  return os.str();
}

std::set<long> sum_bounds(const std::set<long>& a, const std::set<long>& b) {
  std::set<long> out;
  for (long x : a)
    for (long y : b) out.insert(x + y);
  return out;
}

}  // namespace

std::string DegSet::to_string() const {
  switch (kind) {
    case Kind::finite: return "finite " + set_string(bound);
    case Kind::infinite: return "infinite";
    case Kind::unknown: return "unknown";
  }
  return "unknown";
}

DegSet sum_sets(const DegSet& a, const DegSet& b) {
  if (a.kind == DegSet::Kind::finite && b.kind == DegSet::Kind::finite) {
    DegSet s;
    s.kind = DegSet::Kind::finite;
    s.bound = sum_bounds(a.bound, b.bound);
    s.known = {0};
    return s;
  }
  return DegSet::unknown();
}

const char* to_string(Flag f) {
  switch (f) {
    case Flag::inflexible: return "inflexible";
    case Flag::strongly_inflexible: return "strongly_inflexible";
    case Flag::pi_rational_zero: return "pi_{n-1}_rational_zero";
  }
  return "";
}

std::optional<Flag> parse_flag(const std::string& s) {
  if (s == "inflexible") return Flag::inflexible;
  if (s == "strongly_inflexible") return Flag::strongly_inflexible;
  if (s == "pi_{n-1}_rational_zero" || s == "pi_rational_zero") return Flag::pi_rational_zero;
  return std::nullopt;
}

const CatalogEntry* Catalog::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

std::string Fact::key() const {
  switch (kind) {
    case Kind::flag: return "flag:" + subject + ":" + dgalab::to_string(flag);
    case Kind::finite: return "finite:" + subject + "->" + target + ":" + set_string(bound);
    case Kind::infinite: return "infinite:" + subject + "->" + target;
    case Kind::member: return "member:" + subject + "->" + target + ":" + std::to_string(value);
  }
  return "";
}

std::string Fact::statement() const {
  switch (kind) {
    case Kind::flag:
      if (flag == Flag::pi_rational_zero) return "pi_{n-1}(" + subject + ") ⊗ Q = 0";
      return subject + " " + dgalab::to_string(flag);
    case Kind::finite: return "deg(" + subject + ", " + target + ") is finite, contained in " + set_string(bound);
    case Kind::infinite: return "deg(" + subject + ", " + target + ") is infinite";
    case Kind::member: return std::to_string(value) + " in deg(" + subject + ", " + target + ")";
  }
  return "";
}

std::vector<const Fact*> Derivation::derived() const {
  std::vector<const Fact*> out;
  for (const auto& f : facts)
    if (f.rule != "axiom") out.push_back(&f);
  return out;
}

const Fact* Derivation::find(const std::string& key) const {
  for (const auto& f : facts)
    if (f.key() == key) return &f;
  return nullptr;
}

namespace {

Fact flag_fact(const std::string& subject, Flag flag) {
  Fact f;
  f.kind = Fact::Kind::flag;
  f.subject = subject;
  f.flag = flag;
  return f;
}

Fact finite_fact(const std::string& from, const std::string& to, std::set<long> bound) {
  Fact f;
  f.kind = Fact::Kind::finite;
  f.subject = from;
  f.target = to;
  f.bound = std::move(bound);
  return f;
}

Fact member_fact(const std::string& from, const std::string& to, long value) {
  Fact f;
  f.kind = Fact::Kind::member;
  f.subject = from;
  f.target = to;
  f.value = value;
  return f;
}

// π_{n-1} ⊗ Q of a minimal model is spanned by its degree-(n-1) generators.
bool model_has_pi_flag(const CatalogEntry& e) {
  auto doc = load_dga(*e.model);
  auto s = structural_report(doc.dga);
  if (!s.minimal || !s.simply_connected)
    throw InputError("model of '" + e.name + "' is not a minimal simply connected DGA", e.line);
  const int n = formal_dimension(doc.dga);
  if (n != e.dimension)
    throw InputError("model of '" + e.name + "' has formal dimension " + std::to_string(n) +
                         " but the entry has dimension " + std::to_string(e.dimension),
                     e.line);
  return rational_homotopy_dims(doc.dga, n - 1)[n - 1] == 0;
}

class Engine {
 public:
  explicit Engine(const Catalog& c) : catalog_(c) {}

  Derivation run() {
    for (const auto& e : catalog_.entries)
      for (const auto& s : e.summands) {
        const auto* part = catalog_.find(s);
        if (part && part->dimension != e.dimension)
          throw InputError("summand '" + s + "' of '" + e.name + "' has a different dimension", e.line);
      }
    for (const auto& f : catalog_.flags) {
      Fact fact = flag_fact(f.entry, f.flag);
      fact.note = "catalog line " + std::to_string(f.line);
      add(std::move(fact), "axiom", {});
    }
    for (const auto& d : catalog_.degsets) {
      Fact fact;
      fact.subject = d.from;
      fact.target = d.to;
      fact.note = "catalog line " + std::to_string(d.line);
      if (d.set.kind == DegSet::Kind::infinite) {
        fact.kind = Fact::Kind::infinite;
      } else {
        fact.kind = Fact::Kind::finite;
        fact.bound = d.set.bound;
      }
      add(std::move(fact), "axiom", {});
    }
    bool changed = true;
    while (changed) {
      changed = false;
      const std::size_t count = out_.facts.size();
      for (std::size_t i = 0; i < count; ++i) changed |= step_single(i);
      changed |= step_entries();
    }
    check_consistency();
    return std::move(out_);
  }

 private:
  bool add(Fact f, const std::string& rule, std::vector<std::size_t> premises) {
    const std::string k = f.key();
    if (index_.count(k)) return false;
    f.rule = rule;
    f.premises = std::move(premises);
    index_[k] = out_.facts.size();
    if (f.kind == Fact::Kind::finite) first_finite_.try_emplace(f.subject + "->" + f.target, out_.facts.size());
    out_.facts.push_back(std::move(f));
    return true;
  }

  // The earliest finite bound recorded for deg(from, to); later bounds are kept as facts
  // but only this one feeds further rules, which keeps the closure finite.
  std::optional<std::size_t> finite_for(const std::string& from, const std::string& to) const {
    auto it = first_finite_.find(from + "->" + to);
    if (it == first_finite_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<std::size_t> lookup(const std::string& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Rules with a single premise.
  bool step_single(std::size_t i) {
    const Fact f = out_.facts[i];
    bool changed = false;
    if (f.kind == Fact::Kind::flag && f.flag == Flag::strongly_inflexible)
      changed |= add(flag_fact(f.subject, Flag::inflexible), "R4", {i});
    if (f.kind == Fact::Kind::flag && f.flag == Flag::inflexible)
      changed |= add(finite_fact(f.subject, f.subject, {-1, 0, 1}), "R5", {i});
    if (f.kind == Fact::Kind::finite && f.subject == f.target)
      changed |= add(flag_fact(f.subject, Flag::inflexible), "R2'", {i});
    if (f.kind == Fact::Kind::finite && f.rule == "axiom")
      for (long v : f.bound) changed |= add(member_fact(f.subject, f.target, v), "Rm", {i});
    if (f.kind == Fact::Kind::member && f.value == 1 && f.subject != f.target) {
      if (auto fin = finite_for(f.subject, f.target)) {
        auto bound = out_.facts[*fin].bound;
        changed |= add(finite_fact(f.subject, f.subject, bound), "R2", {i, *fin});
      }
    }
    return changed;
  }

  bool step_entries() {
    bool changed = false;
    for (const auto& e : catalog_.entries) {
      if (e.model && !pi_checked_.count(e.name)) {
        pi_checked_.insert(e.name);
        if (model_has_pi_flag(e)) changed |= add(flag_fact(e.name, Flag::pi_rational_zero), "Rpi", {});
      }
      if (e.summands.size() < 2) continue;
      for (const auto& s : e.summands)
        if (catalog_.find(s)) changed |= add(member_fact(e.name, s, 1), "R3", {});
      for (const auto& target : catalog_.entries) {
        auto pi = lookup(flag_fact(target.name, Flag::pi_rational_zero).key());
        if (!pi) continue;
        std::vector<std::size_t> premises{*pi};
        std::set<long> bound{0};
        bool all = true;
        for (const auto& s : e.summands) {
          auto fin = finite_for(s, target.name);
          if (!fin) {
            all = false;
            break;
          }
          premises.push_back(*fin);
          bound = sum_bounds(bound, out_.facts[*fin].bound);
        }
        if (all) changed |= add(finite_fact(e.name, target.name, bound), "R1", premises);
      }
    }
    return changed;
  }

  void check_consistency() const {
    for (const auto& f : out_.facts) {
      if (f.kind != Fact::Kind::infinite && f.kind != Fact::Kind::member) continue;
      for (const auto& g : out_.facts) {
        if (g.kind != Fact::Kind::finite || g.subject != f.subject || g.target != f.target) continue;
        if (f.kind == Fact::Kind::infinite || !g.bound.count(f.value))
          throw Error("contradictory facts: '" + f.statement() + "' and '" + g.statement() + "'");
      }
    }
  }

  const Catalog& catalog_;
  Derivation out_;
  std::map<std::string, std::size_t> index_;
  std::map<std::string, std::size_t> first_finite_;
  std::set<std::string> pi_checked_;
};

}  // namespace

Derivation propagate(const Catalog& catalog) { return Engine(catalog).run(); }

std::string replay(const Catalog& catalog, const Derivation& derivation) {
  const auto& facts = derivation.facts;
  for (std::size_t i = 0; i < facts.size(); ++i) {
    const Fact& f = facts[i];
    auto fail = [&](const std::string& why) {
      return "fact " + std::to_string(i) + " (" + f.statement() + ") via " + f.rule + ": " + why;
    };
    for (auto p : f.premises)
      if (p >= i) return fail("premise is not earlier in the chain");
    auto premise = [&](std::size_t k) -> const Fact& { return facts[f.premises.at(k)]; };
    if (f.rule == "axiom") continue;
    if (f.rule == "R4") {
      if (f.premises.size() != 1 || premise(0).kind != Fact::Kind::flag ||
          premise(0).flag != Flag::strongly_inflexible || premise(0).subject != f.subject ||
          f.key() != flag_fact(f.subject, Flag::inflexible).key())
        return fail("premise does not match");
    } else if (f.rule == "R5") {
      if (f.premises.size() != 1 || premise(0).key() != flag_fact(f.subject, Flag::inflexible).key() ||
          f.kind != Fact::Kind::finite || f.target != f.subject || f.bound != std::set<long>{-1, 0, 1})
        return fail("premise does not match");
    } else if (f.rule == "R2'") {
      if (f.premises.size() != 1 || premise(0).kind != Fact::Kind::finite ||
          premise(0).subject != f.subject || premise(0).target != f.subject ||
          f.key() != flag_fact(f.subject, Flag::inflexible).key())
        return fail("premise does not match");
    } else if (f.rule == "Rm") {
      if (f.premises.size() != 1 || premise(0).kind != Fact::Kind::finite || premise(0).rule != "axiom" ||
          f.kind != Fact::Kind::member || !premise(0).bound.count(f.value) ||
          premise(0).subject != f.subject || premise(0).target != f.target)
        return fail("premise does not match");
    } else if (f.rule == "R2") {
      if (f.premises.size() != 2) return fail("expected two premises");
      const Fact& m = premise(0);
      const Fact& fin = premise(1);
      if (m.kind != Fact::Kind::member || m.value != 1 || fin.kind != Fact::Kind::finite ||
          m.subject != fin.subject || m.target != fin.target || f.kind != Fact::Kind::finite ||
          f.subject != m.subject || f.target != m.subject || f.bound != fin.bound)
        return fail("premises do not match");
    } else if (f.rule == "R3") {
      const auto* e = catalog.find(f.subject);
      if (!e || f.kind != Fact::Kind::member || f.value != 1 || e->summands.size() < 2 ||
          std::find(e->summands.begin(), e->summands.end(), f.target) == e->summands.end())
        return fail("target is not a summand");
    } else if (f.rule == "R1") {
      const auto* e = catalog.find(f.subject);
      if (!e || f.kind != Fact::Kind::finite) return fail("not a connected sum");
      if (f.premises.size() != e->summands.size() + 1) return fail("wrong number of premises");
      if (premise(0).key() != flag_fact(f.target, Flag::pi_rational_zero).key())
        return fail("missing rational homotopy hypothesis on the target");
      std::set<long> bound{0};
      for (std::size_t k = 0; k < e->summands.size(); ++k) {
        const Fact& p = premise(k + 1);
        if (p.kind != Fact::Kind::finite || p.subject != e->summands[k] || p.target != f.target)
          return fail("summand premise does not match");
        bound = sum_bounds(bound, p.bound);
      }
      if (bound != f.bound) return fail("bound does not equal the sum of the summand bounds");
    } else if (f.rule == "Rpi") {
      const auto* e = catalog.find(f.subject);
      if (!e || !e->model || !model_has_pi_flag(*e)) return fail("model does not give the flag");
    } else {
      return fail("unknown rule");
    }
  }
  return "";
}

}  // namespace dgalab
