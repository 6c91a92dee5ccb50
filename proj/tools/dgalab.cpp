#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "dgalab/errors.hpp"
#include "dgalab/inflexibility.hpp"
#include "dgalab/io.hpp"
#include "dgalab/report.hpp"

namespace fs = std::filesystem;
using namespace dgalab;

namespace {

enum Exit { ok = 0, fails = 1, inconclusive = 2, input_error = 3 };

struct Options {
  bool json = false;
  std::string output;  // report file; stdout when empty
};

struct Outcome {
  std::string verdict;
  int code = ok;
  Json result;
  std::string text;
};

struct Loaded {
  DgaDocument doc;
  ReportInput input;
};

Loaded load(const std::string& path) {
  const std::string text = read_file(path);
  return {parse_dga(text), {path, digest(text)}};
}

const FundamentalClass& require_fundamental(const Loaded& l) {
  if (!l.doc.fundamental) throw InputError(l.input.path + ": no 'fundamental' statement");
  return *l.doc.fundamental;
}

int height_bound() {
  if (const char* env = std::getenv("DGALAB_HEIGHT_BOUND")) {
    try {
      int v = std::stoi(env);
      if (v >= 0) return v;
    } catch (const std::exception&) {
    }
    throw InputError("DGALAB_HEIGHT_BOUND must be a nonnegative integer");
  }
  return default_height_bound;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::string matrix_text(const DenseMatrix& m) {
  std::ostringstream os;
  for (const auto& row : m) {
    os << "  [";
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? ", " : "") << to_string(row[j]);
    os << "]\n";
  }
  return os.str();
}

Outcome cmd_check(const Loaded& l) {
  const DgaSpec& dga = l.doc.dga;
  const Algebra& alg = dga.algebra();
  auto d2 = check_d_squared(dga);
  auto st = structural_report(dga);
  Outcome o;
  o.result = Json{{"name", dga.name()},
                  {"generators", dga.size()},
                  {"d_squared_zero", d2.pass},
                  {"simply_connected", st.simply_connected},
                  {"minimal", st.minimal},
                  {"pure", st.pure}};
  std::ostringstream os;
  os << dga.name() << ": " << dga.size() << " generators\n";
  os << "d^2 = 0: " << (d2.pass ? "yes" : "no") << "\n";
  if (!d2.pass) {
    const auto& g = alg.generator(*d2.failing_generator).name;
    o.result["failing_generator"] = g;
    o.result["residue"] = to_json(alg, d2.residue);
    os << "  d(d(" << g << ")) = " << alg.format(d2.residue) << "\n";
  }
  os << "simply connected: " << (st.simply_connected ? "yes" : "no")
     << ", minimal: " << (st.minimal ? "yes" : "no") << ", pure: " << (st.pure ? "yes" : "no")
     << "\n";
  if (st.minimal && st.simply_connected) {
    int n = formal_dimension(dga);
    o.result["formal_dimension"] = n;
    os << "formal dimension: " << n << "\n";
  }
  o.verdict = d2.pass ? "pass" : "fail";
  o.code = d2.pass ? ok : fails;
  o.text = os.str();
  return o;
}

Outcome cmd_cohom(const Loaded& l, std::optional<int> degree, std::optional<int> upto,
                  int above) {
  auto h = std::make_shared<Cohomology>(l.doc.dga);
  int from = 0;
  int to = 0;
  if (degree) {
    from = to = *degree;
  } else if (upto) {
    to = *upto;
  } else {
    to = formal_dimension(l.doc.dga) + above;
  }
  if (from < 0 || to < from) throw InputError("degree range is empty or negative");
  h->precompute(from, to);
  Outcome o;
  Json spaces = Json::array();
  std::ostringstream os;
  for (int n = from; n <= to; ++n) {
    const auto& sp = h->space(n);
    if (!degree && sp.dimension() == 0) continue;
    spaces.push_back(to_json(sp, *h));
    os << "H^" << n << ": dimension " << sp.dimension();
    auto reps = h->representatives(n);
    if (!reps.empty()) {
      std::vector<std::string> r;
      for (const auto& e : reps) r.push_back(l.doc.dga.algebra().format(e));
      os << "  [" << join(r, "], [") << "]";
    }
    os << "\n";
  }
  o.result = Json{{"from", from}, {"to", to}, {"spaces", std::move(spaces)}};
  o.verdict = "computed";
  o.text = os.str();
  return o;
}

Outcome cmd_class(const Loaded& l, const std::string& expr) {
  auto h = std::make_shared<Cohomology>(l.doc.dga);
  const Algebra& alg = l.doc.dga.algebra();
  Element e = parse_expression(alg, expr, l.doc.alias_table());
  Outcome o;
  std::ostringstream os;
  Json r{{"expression", to_json(alg, e)}};
  if (e.is_zero()) {
    r["cocycle"] = true;
    r["exact"] = true;
    r["witness"] = "0";
    o.result = r;
    o.verdict = "exact";
    o.text = "0 is exact (witness 0)\n";
    return o;
  }
  auto deg = e.degree();
  if (!deg) throw InputError("expression is not homogeneous");
  r["degree"] = *deg;
  const Element de = l.doc.dga.differential(e);
  if (!de.is_zero()) {
    r["cocycle"] = false;
    r["boundary"] = to_json(alg, de);
    o.result = r;
    o.verdict = "not a cocycle";
    o.code = fails;
    o.text = "not a cocycle: d(" + alg.format(e) + ") = " + alg.format(de) + "\n";
    return o;
  }
  r["cocycle"] = true;
  auto cls = h->class_of(e, *deg);
  Json coords = Json::array();
  for (const auto& x : cls.coordinates) coords.push_back(to_json(x));
  r["coordinates"] = coords;
  auto reps = h->representatives(*deg);
  Json rj = Json::array();
  for (const auto& x : reps) rj.push_back(to_json(alg, x));
  r["basis"] = rj;
  if (cls.is_zero()) {
    auto w = h->coboundary_witness(e);
    r["exact"] = true;
    r["witness"] = to_json(alg, *w);
    o.verdict = "exact";
    os << alg.format(e) << " = d(" << alg.format(*w) << ")\n";
  } else {
    r["exact"] = false;
    o.verdict = "nonzero class";
    std::vector<std::string> cs;
    for (const auto& x : cls.coordinates) cs.push_back(to_string(x));
    os << "[" << alg.format(e) << "] = (" << join(cs, ", ") << ") in H^" << *deg << " (dimension "
       << cls.coordinates.size() << ")\n";
  }
  o.result = r;
  o.text = os.str();
  return o;
}

FundamentalClass scaled(FundamentalClass fc, const std::optional<std::string>& scale) {
  if (scale) fc.scale = parse_rational(*scale);
  if (fc.scale == 0) throw InputError("fundamental class scale must be nonzero");
  return fc;
}

Outcome cmd_poincare(const Loaded& l, int above) {
  auto h = std::make_shared<Cohomology>(l.doc.dga);
  auto rep = check_poincare(h, require_fundamental(l), above);
  Outcome o;
  o.result = to_json(rep);
  o.verdict = rep.pass ? "pass" : "fail";
  o.code = rep.pass ? ok : fails;
  std::ostringstream os;
  os << "Poincaré duality: " << (rep.pass ? "holds" : "fails") << "\n";
  os << "formal dimension " << rep.formal_dimension << ", top cohomology dimension "
     << rep.top_dimension << ", fundamental representative "
     << (rep.representative_exact ? "exact" : "not exact") << "\n";
  for (const auto& p : rep.pairings)
    os << "  H^" << p.degree << " x H^" << rep.formal_dimension - p.degree << ": " << p.rows
       << " x " << p.cols << (p.perfect ? " perfect" : " degenerate") << "\n";
  if (!rep.factors.empty()) os << "  checked through " << rep.factors.size() << " tensor factors\n";
  if (!rep.failure.empty()) os << "failure: " << rep.failure << "\n";
  o.text = os.str();
  return o;
}

Outcome cmd_intersection(const Loaded& l, bool canonical, const std::optional<std::string>& scale) {
  auto h = std::make_shared<Cohomology>(l.doc.dga);
  const FundamentalClass fc = scaled(require_fundamental(l), scale);
  std::optional<std::vector<Element>> basis;
  if (!canonical) basis = l.doc.basis;
  auto bs = barge_sullivan_report(h, fc, basis, height_bound());
  Outcome o;
  o.result = to_json(bs);
  const bool holds = bs.witt_condition == Condition::holds && bs.signature_condition == Condition::holds;
  const bool failed = bs.witt_condition == Condition::fails || bs.signature_condition == Condition::fails;
  o.verdict = holds ? "conditions hold" : failed ? "condition fails" : "undetermined";
  o.code = holds ? ok : failed ? fails : inconclusive;
  std::ostringstream os;
  os << "intersection form on H^" << fc.degree() / 2 << " (dimension " << bs.form.dimension()
     << ")";
  if (!bs.form.labels.empty()) os << ", basis " << join(bs.form.labels, ", ");
  os << "\n" << matrix_text(bs.form.matrix);
  os << "signature " << bs.witt.signature << ", metabolic " << to_string(bs.witt.metabolic) << "\n";
  for (const auto& v : bs.witt.lagrangian) {
    std::vector<std::string> xs;
    for (const auto& x : v) xs.push_back(to_string(x));
    os << "  lagrangian vector (" << join(xs, ", ") << ")\n";
  }
  os << "Witt condition: " << to_string(bs.witt_condition)
     << ", signature condition: " << to_string(bs.signature_condition) << "\n";
  o.text = os.str();
  return o;
}

Outcome cmd_inflexible(const Loaded& l, const CertifyConfig& cfg, bool trace,
                       const Options& opt) {
  auto h = std::make_shared<Cohomology>(l.doc.dga);
  auto cert = certify_inflexible(h, require_fundamental(l), cfg);
  Outcome o;
  o.result = to_json(cert, l.doc.dga, trace);
  o.verdict = to_string(cert.verdict);
  o.code = cert.verdict == Certificate::Overall::inflexible ? ok : inconclusive;
  if (trace) {
    fs::path dir = opt.output.empty() ? fs::current_path() : fs::path(opt.output).parent_path();
    fs::path file = dir / (fs::path(l.input.path).stem().string() + ".trace.json");
    std::ofstream f(file);
    if (!f) throw InputError("cannot write " + file.string());
    f << to_json(cert.tree, cert.ansatz.namer()).dump(2) << "\n";
    o.result["trace_file"] = file.filename().string();
  }
  std::ostringstream os;
  os << cert.algebra << ": " << to_string(cert.verdict) << "\n";
  os << "unknowns " << cert.ansatz.size() << ", constraints " << cert.constraints.constraints.size()
     << ", support equations " << cert.support.size() << "\n";
  os << "degree polynomial P = "
     << (cert.degree_deferred ? std::string("(expanded per branch)")
                              : cert.degree.to_string(cert.ansatz.namer()))
     << "\n";
  os << "leaves: " << cert.count(Verdict::degree_zero) << " with P = 0, "
     << cert.count(Verdict::degree_unit) << " with |P| = 1, " << cert.count(Verdict::infeasible)
     << " infeasible, " << cert.count(Verdict::inconclusive) << " inconclusive\n";
  o.text = os.str();
  return o;
}

Outcome cmd_tensor(const Loaded& a, const Loaded& b, const std::string& out) {
  DgaDocument doc;
  doc.dga = tensor_product(a.doc.dga, b.doc.dga);
  if (a.doc.fundamental && b.doc.fundamental) {
    FundamentalClass fc;
    fc.representative = tensor_element(doc.dga, a.doc.fundamental->representative,
                                       a.doc.dga.size(), b.doc.fundamental->representative);
    fc.scale = a.doc.fundamental->scale * b.doc.fundamental->scale;
    doc.fundamental = fc;
  }
  const std::string text = serialize(doc);
  std::ofstream f(out);
  if (!f) throw InputError("cannot write " + out);
  f << text;
  Outcome o;
  o.result = Json{{"output", out}, {"name", doc.dga.name()}, {"generators", doc.dga.size()},
                  {"digest", digest(text)}};
  o.verdict = "written";
  o.text = "wrote " + out + " (" + doc.dga.name() + ", " + std::to_string(doc.dga.size()) +
           " generators)\n";
  return o;
}

Outcome cmd_homotopy(const Loaded& l, std::optional<int> upto) {
  const DgaSpec& dga = l.doc.dga;
  if (!structural_report(dga).minimal)
    throw PreconditionError("rational homotopy is read off minimal models only");
  int top = 0;
  for (const auto& g : dga.algebra().generators()) top = std::max(top, g.degree);
  auto dims = rational_homotopy_dims(dga, upto.value_or(top));
  Outcome o;
  Json j = Json::object();
  std::ostringstream os;
  for (const auto& [k, n] : dims) {
    if (n == 0) continue;
    j[std::to_string(k)] = n;
    os << "pi_" << k << " ⊗ Q: dimension " << n << "\n";
  }
  o.result = Json{{"upto", upto.value_or(top)}, {"dimensions", j}};
  o.verdict = "computed";
  o.text = os.str();
  return o;
}

Outcome cmd_degsets(const std::string& path) {
  Catalog cat = load_catalog(path);
  Outcome o;
  try {
    Derivation d = propagate(cat);
    const std::string problem = replay(cat, d);
    o.result = to_json(d);
    o.result["replay"] = problem.empty() ? "ok" : problem;
    o.verdict = problem.empty() ? "derived" : "replay failed";
    o.code = problem.empty() ? ok : fails;
    std::ostringstream os;
    for (const Fact* f : d.derived()) os << f->statement() << "   [" << f->rule << "]\n";
    if (!problem.empty()) os << "replay failed: " << problem << "\n";
    o.text = os.str();
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    o.result = Json{{"contradiction", e.what()}};
    o.verdict = "contradiction";
    o.code = fails;
    o.text = std::string("contradiction: ") + e.what() + "\n";
  }
  return o;
}

Outcome cmd_flexible(const Loaded& l, const std::string& base) {
  auto h = std::make_shared<Cohomology>(l.doc.dga);
  auto ws = pure_flexibility_witnesses(h, parse_rational(base));
  Outcome o;
  bool all = true;
  std::ostringstream os;
  for (const auto& w : ws) {
    if (w.degree > 0 && !(w.verified && w.flexible())) all = false;
    os << "H^" << w.degree << " word length " << w.odd_length << ": ["
       << l.doc.dga.algebra().format(w.component) << "] scaled by " << to_string(w.factor)
       << (w.verified ? " (verified)" : " (NOT verified)") << "\n";
  }
  o.result = Json{{"base", base}, {"witnesses", to_json(ws, l.doc.dga.algebra())}};
  o.verdict = all ? "flexible classes" : "unverified";
  o.code = all ? ok : fails;
  o.text = os.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dgalab: exact computations on graded-commutative DGAs over Q"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Write a JSON report instead of text");
  app.add_option("-r,--report", opt.output, "Write the report to this file");

  std::string file;
  std::string file_b;
  std::string out;
  std::optional<int> degree;
  std::optional<int> upto;
  int above = 0;
  std::string expr;
  bool canonical = false;
  bool named_basis = false;
  std::optional<std::string> scale;
  CertifyConfig cfg;
  bool trace = false;
  std::string base = "2";

  auto* check = app.add_subcommand("check", "Parse, check d^2 = 0, report structure");
  check->add_option("file", file, "DGA file")->required();

  auto* cohom = app.add_subcommand("cohom", "Cohomology dimensions and representatives");
  cohom->add_option("file", file, "DGA file")->required();
  auto* o_deg = cohom->add_option("--degree", degree, "Single degree");
  cohom->add_option("--upto", upto, "All degrees 0..N")->excludes(o_deg);
  cohom->add_option("--above-check", above, "Extra degrees past the formal dimension");

  auto* cls = app.add_subcommand("class", "Cohomology class of an expression");
  cls->add_option("file", file, "DGA file")->required();
  cls->add_option("--expr", expr, "Expression")->required();

  auto* poinc = app.add_subcommand("poincare", "Check Poincaré duality for the fundamental class");
  poinc->add_option("file", file, "DGA file")->required();
  poinc->add_option("--above-check", above, "Verify H = 0 in this many degrees above the top");

  auto* inter = app.add_subcommand("intersection", "Intersection form, Witt class, Barge-Sullivan conditions");
  inter->add_option("file", file, "DGA file")->required();
  auto* o_can = inter->add_flag("--canonical", canonical, "Use the canonical echelon basis");
  inter->add_flag("--basis", named_basis, "Use the file's basis statement (default when present)")
      ->excludes(o_can);
  inter->add_option("--scale", scale, "Scale the fundamental class by p/q");

  auto* infl = app.add_subcommand("inflexible", "Certify inflexibility of the fundamental class");
  infl->add_option("file", file, "DGA file")->required();
  infl->add_option("--max-splits", cfg.max_splits, "Maximum case-split depth")->check(CLI::NonNegativeNumber);
  infl->add_flag("--trace", trace, "Write the branch tree as <file stem>.trace.json");

  auto* tens = app.add_subcommand("tensor", "Write the tensor product of two DGA files");
  tens->add_option("a", file, "First DGA file")->required();
  tens->add_option("b", file_b, "Second DGA file")->required();
  tens->add_option("-o,--output", out, "Output DGA file")->required();

  auto* homo = app.add_subcommand("homotopy", "Rational homotopy ranks of a minimal model");
  homo->add_option("file", file, "DGA file")->required();
  homo->add_option("--upto", upto, "Highest degree");

  auto* degs = app.add_subcommand("degsets", "Propagate mapping-degree facts over a catalog");
  degs->add_option("catalog", file, "Catalog file")->required();

  auto* flex = app.add_subcommand("flexible", "Scaling witnesses for a pure DGA");
  flex->add_option("file", file, "DGA file")->required();
  flex->add_option("--base", base, "Scaling base");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : input_error;
  }

  std::string command;
  std::vector<ReportInput> inputs;
  Outcome outcome;
  auto emit = [&](const std::string& rendered) {
    if (opt.output.empty()) {
      std::cout << rendered;
      return true;
    }
    std::ofstream f(opt.output);
    if (!f) {
      std::cerr << "dgalab: cannot write " << opt.output << "\n";
      return false;
    }
    f << rendered;
    return true;
  };
  auto fail = [&](const std::string& message) {
    std::cerr << "dgalab: " << message << "\n";
    if (opt.json)
      emit(envelope(command, inputs, "input error", input_error, Json{{"error", message}}).dump(2) + "\n");
    return input_error;
  };
  try {
    if (check->parsed()) {
      command = "check";
      auto l = load(file);
      inputs.push_back(l.input);
      outcome = cmd_check(l);
    } else if (cohom->parsed()) {
      command = "cohom";
      auto l = load(file);
      inputs.push_back(l.input);
      outcome = cmd_cohom(l, degree, upto, above);
    } else if (cls->parsed()) {
      command = "class";
      auto l = load(file);
      inputs.push_back(l.input);
      outcome = cmd_class(l, expr);
    } else if (poinc->parsed()) {
      command = "poincare";
      auto l = load(file);
      inputs.push_back(l.input);
      outcome = cmd_poincare(l, above);
    } else if (inter->parsed()) {
      command = "intersection";
      auto l = load(file);
      inputs.push_back(l.input);
      outcome = cmd_intersection(l, canonical, scale);
    } else if (infl->parsed()) {
      command = "inflexible";
      auto l = load(file);
      inputs.push_back(l.input);
      outcome = cmd_inflexible(l, cfg, trace, opt);
    } else if (tens->parsed()) {
      command = "tensor";
      auto a = load(file);
      auto b = load(file_b);
      inputs = {a.input, b.input};
      outcome = cmd_tensor(a, b, out);
    } else if (homo->parsed()) {
      command = "homotopy";
      auto l = load(file);
      inputs.push_back(l.input);
      outcome = cmd_homotopy(l, upto);
    } else if (degs->parsed()) {
      command = "degsets";
      inputs.push_back({file, digest(read_file(file))});
      outcome = cmd_degsets(file);
    } else if (flex->parsed()) {
      command = "flexible";
      auto l = load(file);
      inputs.push_back(l.input);
      outcome = cmd_flexible(l, base);
    }
  } catch (const InputError& e) {
    return fail("input error: " + std::string(e.what()));
  } catch (const PreconditionError& e) {
    return fail(std::string("precondition: ") + e.what());
  } catch (const std::invalid_argument& e) {
    return fail(std::string("invalid argument: ") + e.what());
  } catch (const std::exception& e) {
    return fail(std::string("error: ") + e.what());
  }

  std::string rendered = opt.json ? envelope(command, inputs, outcome.verdict, outcome.code,
                                             outcome.result)
                                            .dump(2) +
                                        "\n"
                                  : outcome.text;
  if (!emit(rendered)) return input_error;
  return outcome.code;
}
