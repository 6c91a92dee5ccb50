#include "dgalab/solver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>

namespace dgalab {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::open: return "open";
    case Verdict::degree_zero: return "P = 0";
    case Verdict::degree_unit: return "|P| = 1";
    case Verdict::infeasible: return "infeasible";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

bool Assumption::holds(const std::vector<Q>& a) const {
  auto zero = [&](Var v) { return a.at(v) == 0; };
  switch (kind) {
    case Kind::zero:
    case Kind::all_zero: return std::all_of(vars.begin(), vars.end(), zero);
    case Kind::nonzero: return !zero(vars.at(0));
    case Kind::some_nonzero: return !std::all_of(vars.begin(), vars.end(), zero);
  }
  return false;
}

std::string Assumption::to_string(const std::function<std::string(Var)>& name) const {
  auto list = [&] {
    std::string s;
    for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? ", " : "") + name(vars[i]);
    return s;
  };
  switch (kind) {
    case Kind::zero: return name(vars.at(0)) + " = 0";
    case Kind::nonzero: return name(vars.at(0)) + " != 0";
    case Kind::all_zero: return "all zero: " + list();
    case Kind::some_nonzero: return "not all zero: " + list();
  }
  return "";
}

std::vector<std::size_t> BranchTree::leaves() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].children.empty()) out.push_back(i);
  return out;
}

std::vector<std::size_t> BranchTree::matching_leaves(const std::vector<Q>& assignment) const {
  std::vector<std::size_t> out;
  for (std::size_t leaf : leaves()) {
    bool ok = true;
    for (std::optional<std::size_t> n = leaf; n && ok; n = nodes[*n].parent)
      for (const auto& a : nodes[*n].assumptions)
        if (!a.holds(assignment)) {
          ok = false;
          break;
        }
    if (ok) out.push_back(leaf);
  }
  return out;
}

std::vector<std::pair<Var, Poly>> BranchTree::path_substitutions(std::size_t leaf) const {
  std::vector<std::size_t> path;
  for (std::optional<std::size_t> n = leaf; n; n = nodes[*n].parent) path.push_back(*n);
  std::vector<std::pair<Var, Poly>> out;
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    out.insert(out.end(), nodes[*it].substitutions.begin(), nodes[*it].substitutions.end());
  return out;
}

std::vector<Q> BranchTree::specialize(std::size_t leaf, std::size_t unknown_count,
                                      const std::function<Q(Var)>& free_values) const {
  std::vector<Q> values(unknown_count);
  for (Var v = 0; v < unknown_count; ++v) values[v] = free_values(v);
  auto subs = path_substitutions(leaf);
  for (auto it = subs.rbegin(); it != subs.rend(); ++it)
    values[it->first] = it->second.evaluate([&](Var v) { return values[v]; });
  return values;
}

namespace {

enum class Status { zero, nonzero, unknown };

std::string clip(std::string s) {
  constexpr std::size_t limit = 160;
  if (s.size() > limit) s = s.substr(0, limit) + " ... (" + std::to_string(s.size()) + " chars)";
  return s;
}

std::vector<std::pair<Var, long>> exponents_of(const PowerProduct& p) {
  std::vector<std::pair<Var, long>> out;
  for (const auto& [v, e] : p) out.emplace_back(v, static_cast<long>(e));
  return out;
}

struct Contradiction {
  std::string reason;
};

struct State {
  std::vector<Poly> cons;
  std::vector<std::string> prov;
  std::vector<bool> alive;
  std::unordered_map<Var, std::set<std::size_t>> occ;
  std::unordered_map<Var, Poly> subst;
  std::set<Var> nonzero;
  std::vector<std::vector<Var>> groups;
  std::vector<bool> support_done;
  std::set<Var> abs_known;
  Poly degree;
  bool degree_known = true;
};

class Engine {
 public:
  Engine(const SolverInput& in, const SolverConfig& cfg) : in_(in), cfg_(cfg) {}

  BranchTree run();

 private:
  using Name = std::function<std::string(Var)>;

  Status status(const State& s, Var u) const {
    auto it = s.subst.find(u);
    if (it != s.subst.end()) {
      if (it->second.is_zero()) return Status::zero;
      if (it->second.is_constant()) return Status::nonzero;
      return Status::unknown;
    }
    return s.nonzero.count(u) ? Status::nonzero : Status::unknown;
  }

  std::string str(const Poly& p) const { return clip(p.to_string(in_.name)); }
  std::string str(const PowerProduct& m) const { return str(Poly::term(m, 1)); }

  void index(State& s, std::size_t i) {
    for (Var v : s.cons[i].variables()) s.occ[v].insert(i);
  }

  void add_constraint(State& s, Poly p, std::string prov) {
    s.cons.push_back(std::move(p));
    s.prov.push_back(std::move(prov));
    s.alive.push_back(true);
    index(s, s.cons.size() - 1);
    check_constant(s, s.cons.size() - 1);
  }

  void check_constant(State& s, std::size_t i) {
    if (!s.cons[i].is_constant()) return;
    s.alive[i] = false;
    if (!s.cons[i].is_zero())
      throw Contradiction{"constraint from " + s.prov[i] + " reduces to " + str(s.cons[i]) +
                          " = 0"};
  }

  void replace(State& s, std::size_t i, Poly p) {
    for (Var v : s.cons[i].variables()) {
      auto it = s.occ.find(v);
      if (it != s.occ.end()) it->second.erase(i);
    }
    s.cons[i] = std::move(p);
    index(s, i);
    check_constant(s, i);
  }

  Poly resolve(const State& s, Poly p) const {
    while (true) {
      bool any = false;
      for (Var v : p.variables()) {
        auto it = s.subst.find(v);
        if (it == s.subst.end()) continue;
        p = p.substitute(v, it->second);
        any = true;
        break;
      }
      if (!any) return p;
    }
  }

  void substitute(State& s, BranchNode& node, Var u, const Poly& e, const std::string& rule,
                  const std::string& detail, const std::string& prov) {
    if (s.nonzero.count(u) && e.is_zero())
      throw Contradiction{rule + " sets " + in_.name(u) + " = 0 but it is known nonzero"};
    s.subst.emplace(u, e);
    node.substitutions.emplace_back(u, e);
    node.rules.push_back({rule, detail.empty() ? in_.name(u) + " := " + str(e) : detail, prov});
    auto it = s.occ.find(u);
    if (it != s.occ.end()) {
      std::set<std::size_t> touched = std::move(it->second);
      s.occ.erase(it);
      for (std::size_t i : touched)
        if (s.alive[i]) replace(s, i, s.cons[i].substitute(u, e));
    }
    s.degree = s.degree.substitute(u, e);
  }

  void assume_zero(State& s, BranchNode& node, Var u, const std::string& rule,
                   const std::string& prov) {
    auto it = s.subst.find(u);
    if (it == s.subst.end()) {
      substitute(s, node, u, Poly(), rule, in_.name(u) + " := 0", prov);
      return;
    }
    Poly e = resolve(s, it->second);
    node.rules.push_back({rule, in_.name(u) + " = 0 on the substituted value " + str(e), prov});
    add_constraint(s, std::move(e), prov);
  }

  bool mark_nonzero(State& s, BranchNode& node, Var u, const std::string& rule,
                    const std::string& detail, const std::string& prov) {
    if (status(s, u) == Status::nonzero) return false;
    if (status(s, u) == Status::zero)
      throw Contradiction{detail + " but " + in_.name(u) + " = 0"};
    if (s.subst.count(u)) return false;  // value is an expression; nothing recordable
    s.nonzero.insert(u);
    node.rules.push_back({rule, detail, prov});
    return true;
  }

  std::set<Var> protected_vars(const State& s) const {
    std::set<Var> out = s.degree.variables();
    if (!s.degree_known) out.insert(in_.degree_vars.begin(), in_.degree_vars.end());
    for (const auto& g : s.groups) out.insert(g.begin(), g.end());
    for (std::size_t k = 0; k < in_.support.size(); ++k) {
      if (s.support_done[k]) continue;
      for (const auto& f : in_.support[k].factors) out.insert(f.begin(), f.end());
    }
    return out;
  }

  // R-subst to a fixpoint: a constraint c·u + E with c constant and u absent from E.
  // Unknowns of P are kept while other rules may still conclude; `relaxed` lifts that.
  bool subst_pass(State& s, BranchNode& node, bool relaxed = false) {
    bool changed = false;
    auto protect = [&] {
      std::set<Var> keep = protected_vars(s);
      if (relaxed && s.degree_known)
        for (Var v : s.degree.variables()) {
          bool grouped = false;
          for (const auto& g : s.groups) grouped = grouped || std::count(g.begin(), g.end(), v);
          if (!grouped) keep.erase(v);
        }
      return keep;
    };
    std::set<Var> keep = protect();
    for (std::size_t i = 0; i < s.cons.size(); ++i) {
      if (!s.alive[i]) continue;
      const Poly& p = s.cons[i];
      auto vars = p.variables();
      for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        const Var u = *it;
        auto split = p.linear_split(u);
        if (!split || !split->first.is_constant() || split->first.is_zero()) continue;
        Poly e = split->second * (Q(-1) / split->first.constant());
        const bool constant = e.is_constant();
        if (!constant && (keep.count(u) || s.nonzero.count(u))) continue;
        substitute(s, node, u, e, "R-subst", "", s.prov[i]);
        changed = true;
        keep = protect();
        break;
      }
    }
    return changed;
  }

  std::vector<Var> unknown_vars(const State& s, const PowerProduct& m) const {
    std::vector<Var> out;
    for (const auto& [v, e] : m)
      if (status(s, v) != Status::nonzero) out.push_back(v);
    return out;
  }

  bool all_nonzero(const State& s, const PowerProduct& m) const {
    return unknown_vars(s, m).empty();
  }

  // Monomial and two-term constraints, and the nonzero groups.
  bool scan_pass(State& s, BranchNode& node) {
    bool changed = false;
    for (std::size_t i = 0; i < s.cons.size(); ++i) {
      if (!s.alive[i]) continue;
      const Poly& p = s.cons[i];
      if (p.size() == 1) {
        const PowerProduct m = p.terms().begin()->first;
        auto u = unknown_vars(s, m);
        if (u.empty())
          throw Contradiction{"monomial constraint " + str(p) + " = 0 from " + s.prov[i] +
                              " has only nonzero factors"};
        if (u.size() == 1) {
          substitute(s, node, u[0], Poly(), "R-factor-zero",
                     str(p) + " = 0 with the other factors nonzero gives " + in_.name(u[0]) +
                         " = 0",
                     s.prov[i]);
          changed = true;
        }
      } else if (p.size() == 2) {
        const PowerProduct g = p.common_factor();
        if (!g.empty()) {
          if (all_nonzero(s, g)) {
            const std::string before = str(p);
            Poly reduced = p.divide_by(g);
            node.rules.push_back({"R-sum-reduce",
                                  before + " = 0 divided by the nonzero " + str(g) + " gives " +
                                      str(reduced) + " = 0",
                                  s.prov[i]});
            replace(s, i, std::move(reduced));
            changed = true;
          }
          continue;
        }
        auto it = p.terms().begin();
        const PowerProduct m1 = it->first;
        const PowerProduct m2 = std::next(it)->first;
        const bool n1 = all_nonzero(s, m1);
        const bool n2 = all_nonzero(s, m2);
        if (n1 != n2) {
          const PowerProduct& other = n1 ? m2 : m1;
          for (Var v : unknown_vars(s, other))
            changed = mark_nonzero(s, node, v, "R-sum-reduce",
                                   str(p) + " = 0 with " + str(n1 ? m1 : m2) +
                                       " nonzero gives " + in_.name(v) + " != 0",
                                   s.prov[i]) ||
                      changed;
        }
      }
    }
    for (const auto& g : s.groups) {
      std::vector<Var> open;
      bool satisfied = false;
      for (Var v : g) {
        Status st = status(s, v);
        if (st == Status::nonzero) satisfied = true;
        if (st == Status::unknown) open.push_back(v);
      }
      if (satisfied) continue;
      if (open.empty()) {
        std::string names;
        for (Var v : g) names += (names.empty() ? "" : ", ") + in_.name(v);
        throw Contradiction{"all of " + names + " vanish but one of them is assumed nonzero"};
      }
      if (open.size() == 1)
        changed = mark_nonzero(s, node, open[0], "R-support",
                               in_.name(open[0]) +
                                   " is the last possibly nonzero coefficient of a "
                                   "combination assumed nonzero",
                               "") ||
                  changed;
    }
    return changed;
  }

  // Multiplicative relations among nonzero unknowns from two-term constraints.
  std::optional<RelationLattice> lattice(const State& s) const {
    RelationLattice lat;
    bool any = false;
    for (std::size_t i = 0; i < s.cons.size(); ++i) {
      if (!s.alive[i] || s.cons[i].size() != 2) continue;
      const Poly& p = s.cons[i];
      auto it = p.terms().begin();
      const auto& [m1, c1] = *it;
      const auto& [m2, c2] = *std::next(it);
      if (!all_nonzero(s, m1) || !all_nonzero(s, m2)) continue;
      Relation r;
      std::map<Var, long> ex;
      for (const auto& [v, e] : m1) ex[v] += static_cast<long>(e);
      for (const auto& [v, e] : m2) ex[v] -= static_cast<long>(e);
      for (const auto& [v, e] : ex)
        if (e != 0) r.exponents.emplace_back(v, e);
      r.value = -c2 / c1;
      lat.add(r);
      any = true;
    }
    if (!any) return std::nullopt;
    if (!lat.reduce())
      throw Contradiction{"multiplicative relations reduce to 1 = c with c != 1"};
    return lat;
  }

  bool mono_pass(State& s, BranchNode& node) {
    auto lat = lattice(s);
    if (!lat) return false;
    node.relations = lat->rows();
    for (Var u : lat->columns()) {
      if (s.subst.count(u)) continue;
      auto pk = lat->power_of({{u, 1}});
      if (!pk) continue;
      const auto& [k, c] = *pk;
      const std::string fact = in_.name(u) + (k > 1 ? "^" + std::to_string(k) : "") + " = " +
                               dgalab::to_string(c);
      if (k % 2 == 1) {
        auto r = exact_root(c, static_cast<unsigned long>(k));
        if (!r) throw Contradiction{fact + " has no rational solution"};
        substitute(s, node, u, Poly(*r), "R-mono", fact + " with odd exponent gives " +
                                                       in_.name(u) + " = " + dgalab::to_string(*r),
                   "");
        return true;
      }
      if (!cfg_.parity_rules) continue;
      if (c < 0) throw Contradiction{fact + " with even exponent"};
      auto r = exact_root(c, static_cast<unsigned long>(k));
      if (!r) throw Contradiction{fact + " has no rational solution"};
      if (s.abs_known.insert(u).second)
        node.rules.push_back(
            {"R-mono", fact + " with even exponent gives " + in_.name(u) + " = ±" +
                           dgalab::to_string(*r),
             ""});
    }
    return false;
  }

  void deduce(State& s, BranchNode& node) {
    bool changed = true;
    while (changed) {
      changed = subst_pass(s, node);
      changed = scan_pass(s, node) || changed;
      if (!changed) changed = mono_pass(s, node);
    }
  }

  // The strongest conclusion about P available in this branch.
  void expand_degree(State& s, BranchNode& node) {
    if (s.degree_known || !in_.degree_at) return;
    std::map<Var, Poly> memo;
    auto value = [&](Var v) -> Poly {
      auto it = s.subst.find(v);
      if (it == s.subst.end()) return Poly::variable(v);
      auto m = memo.find(v);
      if (m == memo.end()) m = memo.emplace(v, resolve(s, it->second)).first;
      return m->second;
    };
    if (auto p = in_.degree_at(value)) {
      s.degree = std::move(*p);
      s.degree_known = true;
      node.rules.push_back({"degree", "P expanded from the branch's images: " + str(s.degree), ""});
    }
  }

  std::optional<std::pair<Verdict, std::string>> judge(const State& s) const {
    if (!s.degree_known) return std::nullopt;
    const Poly& p = s.degree;
    if (p.is_zero()) return std::make_pair(Verdict::degree_zero, std::string("P = 0"));
    if (p.is_constant()) {
      if (abs(p.constant()) == 1)
        return std::make_pair(Verdict::degree_unit, "P = " + dgalab::to_string(p.constant()));
      return std::nullopt;
    }
    if (!p.is_monomial()) return std::nullopt;
    const auto& [m, c] = *p.terms().begin();
    if (!all_nonzero(s, m)) return std::nullopt;
    auto lat = lattice(s);
    if (!lat) return std::nullopt;
    auto pk = lat->power_of(exponents_of(m));
    if (!pk) return std::nullopt;
    const Q value = pow(c, pk->first) * pk->second;
    if (abs(value) != 1) return std::nullopt;
    return std::make_pair(Verdict::degree_unit, "P^" + std::to_string(pk->first) + " = " +
                                                    dgalab::to_string(value) + " for P = " +
                                                    str(p));
  }

  struct SplitChoice {
    std::optional<std::size_t> support;
    std::optional<Var> var;
    std::string why;
    bool in_place = false;  // every combination already known nonzero: no split needed
  };

  std::optional<SplitChoice> choose_split(State& s) const {
    if (cfg_.support_rule) {
      for (std::size_t k = 0; k < in_.support.size(); ++k) {
        if (s.support_done[k]) continue;
        const auto& eq = in_.support[k];
        bool trivial = false;
        for (const auto& f : eq.factors)
          if (std::all_of(f.begin(), f.end(),
                          [&](Var v) { return status(s, v) == Status::zero; }))
            trivial = true;
        bool settled = std::all_of(eq.forbidden_pairs.begin(), eq.forbidden_pairs.end(),
                                   [&](const auto& pr) {
                                     return status(s, pr.first) == Status::zero ||
                                            status(s, pr.second) == Status::zero;
                                   });
        if (trivial || settled || eq.forbidden_pairs.empty()) {
          s.support_done[k] = true;
          continue;
        }
        const bool known = std::all_of(eq.factors.begin(), eq.factors.end(), [&](const auto& f) {
          return std::any_of(f.begin(), f.end(),
                             [&](Var v) { return status(s, v) == Status::nonzero; }) ||
                 std::find(s.groups.begin(), s.groups.end(), f) != s.groups.end();
        });
        return SplitChoice{k, std::nullopt, "support equation " + eq.provenance, known};
      }
    }
    std::map<Var, std::size_t> count;
    auto tally = [&](const std::vector<Var>& vs) {
      for (Var v : vs)
        if (!s.subst.count(v)) ++count[v];
    };
    for (std::size_t i = 0; i < s.cons.size(); ++i)
      if (s.alive[i] && s.cons[i].size() == 1)
        tally(unknown_vars(s, s.cons[i].terms().begin()->first));
    std::string why = "factor of a monomial constraint";
    if (count.empty()) {
      for (std::size_t i = 0; i < s.cons.size(); ++i)
        if (s.alive[i] && s.cons[i].size() == 2) tally(unknown_vars(s, s.cons[i].common_factor()));
      why = "common factor of a two-term constraint";
    }
    if (count.empty() && s.degree_known) {
      for (const auto& [m, c] : s.degree.terms()) tally(unknown_vars(s, m));
      why = "unknown of the degree polynomial";
    }
    if (count.empty()) return std::nullopt;
    Var best = count.begin()->first;
    for (const auto& [v, n] : count)
      if (n > count[best]) best = v;
    return SplitChoice{std::nullopt, best, why};
  }

  std::size_t new_node(BranchTree& tree, std::optional<std::size_t> parent) {
    BranchNode n;
    n.parent = parent;
    if (parent) {
      n.depth = tree.nodes[*parent].depth + 1;
      tree.nodes[*parent].children.push_back(tree.nodes.size());
    }
    tree.nodes.push_back(std::move(n));
    return tree.nodes.size() - 1;
  }

  void finish(BranchTree& tree, std::size_t id, const State& s, Verdict v, std::string reason) {
    BranchNode& node = tree.nodes[id];
    node.verdict = v;
    node.reason = std::move(reason);
    node.degree = s.degree;
    for (std::size_t i = 0; i < s.cons.size(); ++i)
      if (s.alive[i]) {
        ++node.residual_count;
        if (node.residual.size() < 32) node.residual.push_back(s.cons[i]);
      }
  }

  void add_forbidden_pairs(State& s, BranchNode& node, const SupportEquation& eq) {
    for (const auto& [u, v] : eq.forbidden_pairs) {
      node.rules.push_back(
          {"R-support",
           "all combinations nonzero forces " + in_.name(u) + "*" + in_.name(v) + " = 0",
           eq.provenance});
      add_constraint(s, resolve(s, Poly::variable(u) * Poly::variable(v)),
                     "R-support on " + eq.provenance);
    }
  }

  void explore(BranchTree& tree, std::size_t id, State s) {
    std::optional<SplitChoice> choice;
    while (true) {
      try {
        deduce(s, tree.nodes[id]);
      } catch (const Contradiction& c) {
        finish(tree, id, s, Verdict::infeasible, c.reason);
        return;
      }
      expand_degree(s, tree.nodes[id]);
      tree.nodes[id].degree = s.degree;
      if (auto j = judge(s)) {
        finish(tree, id, s, j->first, j->second);
        return;
      }
      try {
        if (subst_pass(s, tree.nodes[id], true)) continue;
      } catch (const Contradiction& c) {
        finish(tree, id, s, Verdict::infeasible, c.reason);
        return;
      }
      choice = choose_split(s);
      if (!choice || !choice->in_place) break;
      s.support_done[*choice->support] = true;
      try {
        add_forbidden_pairs(s, tree.nodes[id], in_.support[*choice->support]);
      } catch (const Contradiction& c) {
        finish(tree, id, s, Verdict::infeasible, c.reason);
        return;
      }
    }
    if (!choice) {
      finish(tree, id, s, Verdict::inconclusive,
             s.degree_known ? "no rule applies and no split candidate"
                            : "degree polynomial too large to expand in this branch");
      return;
    }
    if (tree.nodes[id].depth >= cfg_.max_splits) {
      finish(tree, id, s, Verdict::inconclusive, "split depth limit reached");
      return;
    }
    if (tree.nodes.size() >= cfg_.max_nodes) {
      finish(tree, id, s, Verdict::inconclusive, "node budget exhausted");
      return;
    }
    if (choice->var) {
      const Var u = *choice->var;
      tree.nodes[id].rules.push_back({"R-split", in_.name(u) + " = 0 or != 0 (" + choice->why + ")", ""});
      std::size_t a = new_node(tree, id);
      std::size_t b = new_node(tree, id);
      tree.nodes[a].assumptions.push_back({Assumption::Kind::zero, {u}});
      tree.nodes[b].assumptions.push_back({Assumption::Kind::nonzero, {u}});
      State sa = s;
      State sb = std::move(s);
      bool ok_a = true;
      try {
        assume_zero(sa, tree.nodes[a], u, "R-split", "assumption");
      } catch (const Contradiction& c) {
        finish(tree, a, sa, Verdict::infeasible, c.reason);
        ok_a = false;
      }
      if (ok_a) explore(tree, a, std::move(sa));
      sb.nonzero.insert(u);
      explore(tree, b, std::move(sb));
      return;
    }
    const std::size_t k = *choice->support;
    const auto& eq = in_.support[k];
    s.support_done[k] = true;
    tree.nodes[id].rules.push_back(
        {"R-support", "case split on which combination vanishes first", eq.provenance});
    for (std::size_t i = 0; i <= eq.factors.size(); ++i) {
      std::size_t c = new_node(tree, id);
      State sc = s;
      BranchNode& node = tree.nodes[c];
      for (std::size_t j = 0; j < i && j < eq.factors.size(); ++j) {
        node.assumptions.push_back({Assumption::Kind::some_nonzero, eq.factors[j]});
        sc.groups.push_back(eq.factors[j]);
      }
      try {
        if (i < eq.factors.size()) {
          node.assumptions.push_back({Assumption::Kind::all_zero, eq.factors[i]});
          for (Var v : eq.factors[i]) assume_zero(sc, tree.nodes[c], v, "R-support", eq.provenance);
        } else {
          add_forbidden_pairs(sc, tree.nodes[c], eq);
        }
      } catch (const Contradiction& e) {
        finish(tree, c, sc, Verdict::infeasible, e.reason);
        continue;
      }
      explore(tree, c, std::move(sc));
    }
  }

  const SolverInput& in_;
  const SolverConfig& cfg_;
};

BranchTree Engine::run() {
  BranchTree tree;
  State s;
  s.support_done.assign(in_.support.size(), false);
  s.degree = in_.degree;
  s.degree_known = !in_.degree_at;
  std::size_t root = new_node(tree, std::nullopt);
  try {
    for (std::size_t i = 0; i < in_.constraints.size(); ++i)
      add_constraint(s, in_.constraints[i],
                     i < in_.provenance.size() ? in_.provenance[i] : "constraint " + std::to_string(i));
  } catch (const Contradiction& c) {
    finish(tree, root, s, Verdict::infeasible, c.reason);
    return tree;
  }
  explore(tree, root, std::move(s));
  return tree;
}

}  // namespace

BranchTree solve(const SolverInput& input, const SolverConfig& config) {
  Engine engine(input, config);
  return engine.run();
}

}  // namespace dgalab
