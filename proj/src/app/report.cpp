#include "ringlat/app/report.hpp"

#include <sstream>

namespace ringlat::app {

json subspace_json(const Subspace& s) {
  json j = json::object();
  j["dim"] = s.dim();
  json rows = json::array();
  for (const auto& v : s.basis()) {
    json row = json::array();
    for (auto x : v) row.push_back(static_cast<unsigned>(x));
    rows.push_back(row);
  }
  j["basis"] = rows;
  return j;
}

json nagata_json(const NagataReport& rep) {
  json j = json::object();
  j["fip"] = rep.fip;
  j["cardinality"] = rep.cardinality ? json(*rep.cardinality) : json(nullptr);
  j["length"] = rep.length;
  j["lambda"] = rep.lambda;
  json w = json::array();
  for (const auto& f : rep.witnesses) {
    json x = json::object();
    x["maximal_ideal"] = subspace_json(f.maximal_ideal);
    x["incomparable"] = json::array({subspace_json(f.first), subspace_json(f.second)});
    w.push_back(x);
  }
  j["witnesses"] = w;
  json c = json::object();
  for (const auto& cr : rep.criteria) c[cr.name] = cr.verdict;
  j["criteria"] = c;
  j["criteria_agree"] = rep.criteria_agree;
  json t = json::object();
  for (const auto& [k, v] : rep.transfers) t[k] = v;
  j["transfers"] = t;
  j["any_number_of_variables"] = rep.any_number_of_variables;
  return j;
}

namespace {

/// Index of the maximal ideal of the lower node that is crucial for an edge.
std::size_t crucial_index(const LatticeAnalysis& an, std::size_t lower, const MinimalKind& k) {
  return an.structure(lower).index_of(k.conductor);
}

}  // namespace

json analysis_json(const LatticeAnalysis& an, const CheckOptions& options) {
  const Extension& ext = an.extension();
  const ExtensionLattice& lat = an.lattice();
  json j = json::object();
  json inst = json::object();
  inst["q"] = ext.algebra.field().order();
  inst["dim_s"] = ext.algebra.dim();
  inst["dim_r"] = ext.base.dim();
  j["instance"] = inst;
  j["interval_cardinality"] = lat.size();
  const LengthResult len = interval_length(lat);
  j["interval_length"] = len.length;

  const auto supp = support(ext);
  json s = json::object();
  s["size"] = supp.size();
  s["maximal_ideals_of_r"] = base_maximal_ideals(ext).size();
  json ms = json::array();
  for (const auto& m : supp) ms.push_back(subspace_json(m));
  s["maximal_ideals"] = ms;
  j["support"] = s;

  const CanonicalDecomposition cd = canonical_decomposition(an);
  json c = json::object();
  c["dim_r"] = ext.base.dim();
  c["dim_seminormalization"] = lat.node(cd.seminormalization).dim();
  c["dim_t_closure"] = lat.node(cd.t_closure).dim();
  c["dim_s"] = ext.algebra.dim();
  c["seminormalization"] = subspace_json(lat.node(cd.seminormalization));
  c["t_closure"] = subspace_json(lat.node(cd.t_closure));
  j["canonical_decomposition"] = c;

  const Census census = edge_census(an);
  json cj = json::object();
  cj["inert"] = census.inert;
  cj["decomposed"] = census.decomposed;
  cj["ramified"] = census.ramified;
  j["census"] = cj;

  const TClosedResult tc = is_t_closed(an, options.scan_budget);
  json p = json::object();
  p["subintegral"] = an.subintegral(lat.bottom(), lat.top());
  p["infra_integral"] = an.infra_integral(lat.bottom(), lat.top());
  p["t_closed"] = tc.t_closed;
  p["chained"] = is_chained(lat).chained;
  p["arithmetic"] = is_arithmetic(ext, an.options()).arithmetic;
  p["delta"] = is_delta_extension(ext, lat).holds;
  p["pinched_at_tclosure"] = is_pinched_at(lat, cd.t_closure);
  j["predicates"] = p;
  j["t_closed_decided_by"] = tc.by_scan ? "scan" : "inert-chain";
  j["lambda"] = lambda_invariant(ext);
  j["nagata"] = nagata_json(nagata_report(an));
  return j;
}

std::string analysis_text(const json& r) {
  std::ostringstream os;
  os << "extension          dim R = " << r["instance"]["dim_r"] << ", dim S = " << r["instance"]["dim_s"]
     << ", q = " << r["instance"]["q"] << "\n";
  os << "interval           " << r["interval_cardinality"] << " subalgebras, length " << r["interval_length"] << "\n";
  os << "support            " << r["support"]["size"] << " of " << r["support"]["maximal_ideals_of_r"]
     << " maximal ideals\n";
  const auto& c = r["canonical_decomposition"];
  os << "canonical dims     R " << c["dim_r"] << " <= +R " << c["dim_seminormalization"] << " <= tR "
     << c["dim_t_closure"] << " <= S " << c["dim_s"] << "\n";
  os << "minimal steps      inert " << r["census"]["inert"] << ", decomposed " << r["census"]["decomposed"]
     << ", ramified " << r["census"]["ramified"] << "\n";
  os << "predicates\n";
  for (auto it = r["predicates"].begin(); it != r["predicates"].end(); ++it) {
    os << "  " << it.key() << std::string(22 - std::min<std::size_t>(20, it.key().size()), ' ')
       << (it.value().get<bool>() ? "yes" : "no") << "\n";
  }
  os << "lambda             " << r["lambda"] << "\n";
  os << nagata_text(r["nagata"]);
  return os.str();
}

std::string nagata_text(const json& n) {
  std::ostringstream os;
  os << "nagata extension\n";
  os << "  fip                  " << (n["fip"].get<bool>() ? "yes" : "no") << "\n";
  if (!n["cardinality"].is_null()) os << "  cardinality          " << n["cardinality"] << "\n";
  os << "  length               " << n["length"] << "\n";
  os << "  lambda               " << n["lambda"] << "\n";
  for (const auto& w : n["witnesses"]) {
    os << "  witness              incomparable pair of dims " << w["incomparable"][0]["dim"] << " and "
       << w["incomparable"][1]["dim"] << "\n";
  }
  os << "  criteria agree       " << (n["criteria_agree"].get<bool>() ? "yes" : "no") << "\n";
  return os.str();
}

json lattice_json(const LatticeAnalysis& an) {
  const ExtensionLattice& lat = an.lattice();
  json j = json::object();
  json nodes = json::array();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    json n = subspace_json(lat.node(i));
    n["index"] = i;
    nodes.push_back(n);
  }
  j["nodes"] = nodes;
  json edges = json::array();
  for (std::size_t e = 0; e < lat.covers().size(); ++e) {
    const auto [lo, hi] = lat.covers()[e];
    const MinimalKind& k = an.edge_kinds()[e];
    json x = json::object();
    x["lower"] = lo;
    x["upper"] = hi;
    x["kind"] = kind_name(k.kind);
    x["crucial_ideal_index"] = crucial_index(an, lo, k);
    edges.push_back(x);
  }
  j["edges"] = edges;
  j["bottom"] = lat.bottom();
  j["top"] = lat.top();
  return j;
}

std::string lattice_dot(const LatticeAnalysis& an) {
  const ExtensionLattice& lat = an.lattice();
  std::vector<std::string> labels;
  for (std::size_t e = 0; e < lat.covers().size(); ++e) {
    const MinimalKind& k = an.edge_kinds()[e];
    labels.push_back(std::string(1, kind_letter(k.kind)) + std::to_string(crucial_index(an, lat.covers()[e].first, k)));
  }
  return to_dot(lat, labels);
}

json checks_json(const std::vector<CheckResult>& results) {
  json arr = json::array();
  for (const auto& r : results) {
    json x = json::object();
    x["name"] = r.name;
    x["status"] = !r.passed ? "fail" : r.skipped ? "skipped" : "pass";
    x["detail"] = r.detail;
    arr.push_back(x);
  }
  return arr;
}

std::string checks_text(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (!r.passed ? "FAIL " : r.skipped ? "SKIP " : "PASS ") << r.name;
    if (!r.detail.empty()) os << "  (" << r.detail << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace ringlat::app
