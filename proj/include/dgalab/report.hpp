#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "dgalab/cohomology.hpp"
#include "dgalab/degree_calculus.hpp"
#include "dgalab/dga.hpp"
#include "dgalab/inflexibility.hpp"
#include "dgalab/poincare.hpp"

namespace dgalab {

// Field order is kept as written so that reports are byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const Q& q);  // always a "p/q" or "p" string
Json to_json(const Algebra& algebra, const Element& e);
Json to_json(const DenseMatrix& m);
Json to_json(const CohomologySpace& space, const Cohomology& h);
Json to_json(const PoincareReport& r);
Json to_json(const BilinearFormQ& f);
Json to_json(const WittVerdict& w);
Json to_json(const BargeSullivanReport& r);
Json to_json(const BranchTree& tree, const std::function<std::string(Var)>& name);
// Summary of a certificate; the full tree is included when `with_tree`.
Json to_json(const Certificate& c, const DgaSpec& dga, bool with_tree);
Json to_json(const Derivation& d);
Json to_json(const std::vector<FlexibilityWitness>& ws, const Algebra& algebra);

struct ReportInput {
  std::string path;
  std::string digest;
};

// {"command", "inputs", "verdict", "exit_code", "result"}
Json envelope(const std::string& command, const std::vector<ReportInput>& inputs,
              const std::string& verdict, int exit_code, Json result);

}  // namespace dgalab
