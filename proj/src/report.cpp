#include "dgalab/report.hpp"

namespace dgalab {

Json to_json(const Q& q) { return to_string(q); }

Json to_json(const Algebra& algebra, const Element& e) { return algebra.format(e); }

Json to_json(const DenseMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json to_json(const CohomologySpace& space, const Cohomology& h) {
  Json reps = Json::array();
  for (const auto& e : h.representatives(space.degree)) reps.push_back(to_json(h.dga().algebra(), e));
  return Json{{"degree", space.degree},
              {"dimension", space.dimension()},
              {"cochains", space.cochain_dim},
              {"cocycles", space.cocycle_dim},
              {"representatives", std::move(reps)}};
}

Json to_json(const PoincareReport& r) {
  Json pairings = Json::array();
  for (const auto& p : r.pairings)
    pairings.push_back(Json{{"degree", p.degree}, {"rows", p.rows}, {"cols", p.cols}, {"perfect", p.perfect}});
  Json out{{"pass", r.pass},
           {"formal_dimension", r.formal_dimension},
           {"representative_cocycle", r.representative_cocycle},
           {"representative_exact", r.representative_exact},
           {"top_dimension", r.top_dimension},
           {"pairings", std::move(pairings)},
           {"vanishing_checked", r.vanishing_checked}};
  if (!r.failure.empty()) out["failure"] = r.failure;
  if (!r.factors.empty()) {
    Json fs = Json::array();
    for (const auto& f : r.factors) fs.push_back(to_json(f));
    out["factors"] = std::move(fs);
  }
  return out;
}

Json to_json(const BilinearFormQ& f) {
  return Json{{"dimension", f.dimension()}, {"basis", f.labels}, {"matrix", to_json(f.matrix)}};
}

Json to_json(const WittVerdict& w) {
  Json lag = Json::array();
  for (const auto& v : w.lagrangian) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(to_json(x));
    lag.push_back(std::move(row));
  }
  Json out{{"signature", w.signature},
           {"metabolic", to_string(w.metabolic)},
           {"lagrangian", std::move(lag)},
           {"height_bound", w.height_bound}};
  if (!w.reason.empty()) out["reason"] = w.reason;
  return out;
}

Json to_json(const BargeSullivanReport& r) {
  return Json{{"form", to_json(r.form)},
              {"witt", to_json(r.witt)},
              {"witt_condition", to_string(r.witt_condition)},
              {"signature_condition", to_string(r.signature_condition)}};
}

Json to_json(const BranchTree& tree, const std::function<std::string(Var)>& name) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& n = tree.nodes[i];
    Json assumptions = Json::array();
    for (const auto& a : n.assumptions) assumptions.push_back(a.to_string(name));
    Json rules = Json::array();
    for (const auto& r : n.rules) {
      Json j{{"rule", r.rule}, {"detail", r.detail}};
      if (!r.provenance.empty()) j["provenance"] = r.provenance;
      rules.push_back(std::move(j));
    }
    Json relations = Json::array();
    for (const auto& rel : n.relations) {
      std::string lhs;
      for (const auto& [v, e] : rel.exponents)
        lhs += (lhs.empty() ? "" : "*") + name(v) + (e != 1 ? "^" + std::to_string(e) : "");
      relations.push_back(lhs + " = " + to_string(rel.value));
    }
    Json node{{"id", i},
              {"parent", n.parent ? Json(*n.parent) : Json(nullptr)},
              {"depth", n.depth},
              {"assumptions", std::move(assumptions)},
              {"rules", std::move(rules)},
              {"relations", std::move(relations)},
              {"children", n.children}};
    if (n.children.empty()) {
      node["verdict"] = to_string(n.verdict);
      node["reason"] = n.reason;
      node["degree"] = n.degree.to_string(name);
      node["open_constraints"] = n.residual_count;
    }
    nodes.push_back(std::move(node));
  }
  return Json{{"nodes", std::move(nodes)}};
}

Json to_json(const Certificate& c, const DgaSpec& dga, bool with_tree) {
  auto name = c.ansatz.namer();
  Json leaves{{"total", c.tree.leaves().size()},
              {"degree_zero", c.count(Verdict::degree_zero)},
              {"degree_unit", c.count(Verdict::degree_unit)},
              {"infeasible", c.count(Verdict::infeasible)},
              {"inconclusive", c.count(Verdict::inconclusive)}};
  Json support = Json::array();
  for (const auto& s : c.support) support.push_back(s.provenance);
  std::size_t depth = 0;
  std::size_t rules = 0;
  for (const auto& n : c.tree.nodes) {
    depth = std::max<std::size_t>(depth, static_cast<std::size_t>(n.depth));
    rules += n.rules.size();
  }
  Json out{{"algebra", c.algebra},
           {"fundamental", to_json(dga.algebra(), c.fundamental)},
           {"verdict", to_string(c.verdict)},
           {"unknowns", c.ansatz.size()},
           {"constraints", c.constraints.constraints.size()},
           {"degree_polynomial", c.degree_deferred ? Json("deferred") : Json(c.degree.to_string(name))},
           {"support_equations", std::move(support)},
           {"nodes", c.tree.nodes.size()},
           {"max_depth", depth},
           {"rule_applications", rules},
           {"leaves", std::move(leaves)}};
  if (with_tree) out["tree"] = to_json(c.tree, name);
  return out;
}

namespace {

const char* kind_name(Fact::Kind k) {
  switch (k) {
    case Fact::Kind::flag: return "flag";
    case Fact::Kind::finite: return "finite";
    case Fact::Kind::infinite: return "infinite";
    case Fact::Kind::member: return "member";
  }
  return "?";
}

}  // namespace

Json to_json(const Derivation& d) {
  Json facts = Json::array();
  for (std::size_t i = 0; i < d.facts.size(); ++i) {
    const auto& f = d.facts[i];
    Json j{{"id", i}, {"kind", kind_name(f.kind)}, {"statement", f.statement()}, {"rule", f.rule},
           {"premises", f.premises}};
    if (!f.note.empty()) j["note"] = f.note;
    facts.push_back(std::move(j));
  }
  return Json{{"facts", std::move(facts)}};
}

Json to_json(const std::vector<FlexibilityWitness>& ws, const Algebra& algebra) {
  Json out = Json::array();
  for (const auto& w : ws)
    out.push_back(Json{{"degree", w.degree},
                       {"odd_word_length", w.odd_length},
                       {"component", to_json(algebra, w.component)},
                       {"factor", to_json(w.factor)},
                       {"verified", w.verified},
                       {"flexible", w.flexible()}});
  return out;
}

Json envelope(const std::string& command, const std::vector<ReportInput>& inputs,
              const std::string& verdict, int exit_code, Json result) {
  Json in = Json::array();
  for (const auto& i : inputs) in.push_back(Json{{"path", i.path}, {"digest", i.digest}});
  return Json{{"command", command},
              {"inputs", std::move(in)},
              {"verdict", verdict},
              {"exit_code", exit_code},
              {"result", std::move(result)}};
}

}  // namespace dgalab
