#include "ringlat/app/commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "ringlat/app/instance.hpp"
#include "ringlat/app/report.hpp"
#include "ringlat/errors.hpp"
#include "ringlat/gen.hpp"

namespace ringlat::app {

namespace {

struct Common {
  std::string path;
  bool json_out = false;
  unsigned threads = 1;
  std::size_t budget_nodes = 20000;
  std::uint64_t budget_scan = std::uint64_t{1} << 20;
  std::uint64_t budget_oracle = std::uint64_t{1} << 24;
  bool timing = false;

  CheckOptions check_options() const {
    CheckOptions o;
    o.lattice.node_budget = budget_nodes;
    o.lattice.threads = threads;
    o.scan_budget = budget_scan;
    o.oracle_budget = budget_oracle;
    return o;
  }
};

void add_budget_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--threads", c.threads, "Worker threads for lattice enumeration")->check(CLI::Range(1u, 256u));
  cmd->add_option("--budget-nodes", c.budget_nodes, "Maximum number of lattice nodes");
  cmd->add_option("--budget-scan", c.budget_scan, "Maximum (b, r) pairs in the t-closed scan");
  cmd->add_option("--budget-oracle", c.budget_oracle, "Maximum subspaces scanned by the oracle");
}

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  ss << in.rdbuf();
  return ss.str();
}

Extension load(const std::string& path) { return build_extension(parse_instance(read_input(path))); }

GenSpec parse_gen_spec(const std::string& text, std::optional<std::uint64_t> seed) {
  GenSpec spec;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("--gen", "expected key=value, got \"" + item + "\"");
    const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    try {
      if (key == "shape") {
        const auto s = parse_shape(value);
        if (!s) throw ParseError("--gen", "unknown shape \"" + value + "\"");
        spec.shape = *s;
      } else if (key == "q") {
        spec.q = static_cast<unsigned>(std::stoul(value));
      } else if (key == "max_dim") {
        spec.max_dim = std::stoul(value);
      } else if (key == "count") {
        spec.count = std::stoul(value);
      } else if (key == "seed") {
        spec.seed = std::stoull(value);
      } else {
        throw ParseError("--gen", "unknown key \"" + key + "\"");
      }
    } catch (const std::logic_error&) {
      throw ParseError("--gen", "bad number in \"" + item + "\"");
    }
  }
  if (seed) spec.seed = *seed;
  return spec;
}

int cmd_analyze(const Common& c, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const CheckOptions opts = c.check_options();
  const LatticeAnalysis an(load(c.path), opts.lattice);
  json result = analysis_json(an, opts);
  if (c.timing) {
    const auto t1 = std::chrono::steady_clock::now();
    json t = json::object();
    t["total_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
    result["timing"] = t;
  }
  if (c.json_out) {
    out << result.dump(2) << "\n";
  } else {
    out << analysis_text(result);
    if (c.timing) out << "time               " << result["timing"]["total_ms"] << " ms\n";
  }
  return kOk;
}

int cmd_lattice(const Common& c, const std::string& format, std::ostream& out) {
  const LatticeAnalysis an(load(c.path), c.check_options().lattice);
  if (format == "json") {
    out << lattice_json(an).dump(2) << "\n";
  } else {
    out << lattice_dot(an);
  }
  return kOk;
}

int cmd_nagata(const Common& c, std::ostream& out) {
  const LatticeAnalysis an(load(c.path), c.check_options().lattice);
  const json n = nagata_json(nagata_report(an));
  out << (c.json_out ? n.dump(2) + "\n" : nagata_text(n));
  return kOk;
}

int cmd_check(const Common& c, const std::string& gen, std::optional<std::uint64_t> seed, std::ostream& out) {
  const CheckOptions opts = c.check_options();
  if (gen.empty()) {
    if (c.path.empty()) throw ParseError("check", "give an instance path or --gen");
    const auto results = run_checks(load(c.path), opts);
    const bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
    if (c.json_out) {
      json j = json::object();
      j["passed"] = ok;
      j["checks"] = checks_json(results);
      out << j.dump(2) << "\n";
    } else {
      out << checks_text(results);
    }
    return ok ? kOk : kInvariantError;
  }

  const GenSpec spec = parse_gen_spec(gen, seed);
  ExtensionGenerator generator(spec);
  struct Tally {
    std::size_t pass = 0, skip = 0, fail = 0;
    std::vector<json> counterexamples;
  };
  std::map<std::string, Tally> tally;
  std::vector<std::string> order;
  for (std::size_t i = 0; i < spec.count; ++i) {
    const Extension ext = generator.next();
    for (const auto& r : run_checks(ext, opts)) {
      if (!tally.count(r.name)) order.push_back(r.name);
      Tally& t = tally[r.name];
      if (!r.passed) {
        ++t.fail;
        json cx = json::object();
        cx["index"] = i;
        cx["detail"] = r.detail;
        cx["instance"] = json::parse(serialize_instance(document_from_extension(ext), false));
        t.counterexamples.push_back(cx);
      } else if (r.skipped) {
        ++t.skip;
      } else {
        ++t.pass;
      }
    }
  }
  bool ok = true;
  json arr = json::array();
  std::ostringstream text;
  for (const auto& name : order) {
    const Tally& t = tally[name];
    ok = ok && t.fail == 0;
    json x = json::object();
    x["name"] = name;
    x["pass"] = t.pass;
    x["skipped"] = t.skip;
    x["fail"] = t.fail;
    x["counterexamples"] = t.counterexamples;
    arr.push_back(x);
    text << (t.fail ? "FAIL " : "PASS ") << name << " " << t.pass << "/" << spec.count;
    if (t.skip) text << " (" << t.skip << " skipped)";
    text << "\n";
    for (const auto& cx : t.counterexamples) text << "  counterexample: " << cx.dump() << "\n";
  }
  if (c.json_out) {
    json j = json::object();
    j["passed"] = ok;
    j["instances"] = spec.count;
    j["attempts"] = generator.stats().attempts;
    j["checks"] = arr;
    out << j.dump(2) << "\n";
  } else {
    out << "instances " << spec.count << " (acceptance " << generator.stats().accepted << "/"
        << generator.stats().attempts << ")\n"
        << text.str();
  }
  return ok ? kOk : kInvariantError;
}

int cmd_oracle(const Common& c, std::ostream& out) {
  const Extension ext = load(c.path);
  const ExtensionLattice lat = enumerate_interval(ext, c.check_options().lattice);
  const auto bf = brute_force_interval(ext, c.budget_oracle);
  const bool equal = bf == lat.nodes();
  if (c.json_out) {
    json j = json::object();
    j["equal"] = equal;
    j["enumerated"] = lat.size();
    j["brute_force"] = bf.size();
    out << j.dump(2) << "\n";
  } else {
    out << "enumerated " << lat.size() << ", brute force " << bf.size() << ": " << (equal ? "equal" : "DIFFERENT")
        << "\n";
  }
  return equal ? kOk : kInvariantError;
}

int cmd_gen(const GenSpec& spec, const std::string& out_dir, std::ostream& out, std::ostream& err) {
  ExtensionGenerator generator(spec);
  for (std::size_t i = 0; i < spec.count; ++i) {
    const InstanceDocument doc = document_from_extension(generator.next());
    if (out_dir.empty()) {
      out << serialize_instance(doc, false) << "\n";
    } else {
      std::filesystem::create_directories(out_dir);
      char name[32];
      std::snprintf(name, sizeof name, "instance_%04zu.json", i);
      std::ofstream f(std::filesystem::path(out_dir) / name);
      f << serialize_instance(doc, true);
    }
  }
  err << "generated " << spec.count << " instances, acceptance " << generator.stats().accepted << "/"
      << generator.stats().attempts << "\n";
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analyze finite ring extensions R ⊆ S over finite fields", "ringlat"};
  app.require_subcommand(1);
  Common c;
  std::string format = "dot";
  bool dot = false;
  std::string gen;
  std::optional<std::uint64_t> seed;
  GenSpec gen_spec;
  std::string shape = "mixed";
  std::string out_dir;

  auto* analyze = app.add_subcommand("analyze", "Full report for one instance");
  analyze->add_option("path", c.path, "Instance file (- for stdin)")->required();
  analyze->add_flag("--json", c.json_out, "Emit JSON");
  analyze->add_flag("--timing", c.timing, "Include wall-clock timing");
  add_budget_flags(analyze, c);

  auto* lattice = app.add_subcommand("lattice", "Hasse diagram of the interval");
  lattice->add_option("path", c.path, "Instance file (- for stdin)")->required();
  lattice->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  lattice->add_flag("--dot", dot, "Same as --format dot");
  add_budget_flags(lattice, c);

  auto* nagata = app.add_subcommand("nagata", "Predicted invariants of the Nagata extension");
  nagata->add_option("path", c.path, "Instance file (- for stdin)")->required();
  nagata->add_flag("--json", c.json_out, "Emit JSON");
  add_budget_flags(nagata, c);

  auto* check = app.add_subcommand("check", "Run the invariant suite");
  check->add_option("path", c.path, "Instance file (- for stdin)");
  check->add_option("--gen", gen, "Generator spec, e.g. shape=local-subintegral,q=2,max_dim=4,count=100");
  check->add_option("--seed", seed, "Override the generator seed");
  check->add_flag("--json", c.json_out, "Emit JSON");
  add_budget_flags(check, c);

  auto* oracle = app.add_subcommand("oracle", "Compare enumeration with the brute-force scan");
  oracle->add_option("path", c.path, "Instance file (- for stdin)")->required();
  oracle->add_flag("--json", c.json_out, "Emit JSON");
  add_budget_flags(oracle, c);

  auto* gencmd = app.add_subcommand("gen", "Emit random instances");
  gencmd->add_option("--shape", shape, "local-subintegral, product-of-locals, field-tower or mixed")
      ->check(CLI::IsMember({"local-subintegral", "product-of-locals", "field-tower", "mixed"}));
  gencmd->add_option("--q", gen_spec.q, "Field size");
  gencmd->add_option("--max-dim", gen_spec.max_dim, "Bound on dim S");
  gencmd->add_option("--count", gen_spec.count, "Number of instances");
  gencmd->add_option("--seed", gen_spec.seed, "Generator seed");
  gencmd->add_option("--out", out_dir, "Write pretty files into this directory instead of JSON lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(c, out);
    if (*lattice) return cmd_lattice(c, dot ? "dot" : format, out);
    if (*nagata) return cmd_nagata(c, out);
    if (*check) return cmd_check(c, gen, seed, out);
    if (*oracle) return cmd_oracle(c, out);
    if (*gencmd) {
      gen_spec.shape = *parse_shape(shape);
      return cmd_gen(gen_spec, out_dir, out, err);
    }
  } catch (const ParseError& e) {
    err << "error: parse error at " << e.what() << "\n";
    return kInputError;
  } catch (const AlgebraError& e) {
    err << "error: invalid instance: " << e.what() << "\n";
    return kInputError;
  } catch (const BudgetExceeded& e) {
    err << "error: budget exceeded: " << e.what() << "\n";
    return kBudgetError;
  } catch (const InvariantViolation& e) {
    err << "error: invariant violation [" << e.tag() << "]: " << e.what() << "\n";
    return kInvariantError;
  }
  return kInputError;
}

}  // namespace ringlat::app
