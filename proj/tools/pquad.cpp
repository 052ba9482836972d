// pquad: command-line front end.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pquad/errors.hpp"
#include "pquad/report.hpp"

using namespace pquad;

namespace {

enum Exit { kOk = 0, kFailure = 1, kInput = 2, kCap = 3 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

// Flattens JSON into "path: value" lines for the text format.
void flatten(const Json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured() && !x.is_array(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

std::string render(const Json& j, const std::string& format) {
  if (format == "json") return j.dump(2) + "\n";
  std::ostringstream out;
  flatten(j, "", out);
  return out.str();
}

GroupPtr load_group(const std::string& path, std::size_t max_elements) {
  PcPresentation pres;
  try {
    pres = parse_pcp(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
  return std::make_shared<const PcGroup>(std::move(pres), PcGroup::Options{max_elements});
}

Representation build_natural(const GroupPtr& g) {
  if (g->n() == 3) {
    try {
      return Representation::natural_unitriangular(g);
    } catch (const HypothesisViolation&) {
    }
  }
  return Representation::natural_affine(g);
}

struct Common {
  std::size_t max_elements = kDefaultMaxElements;
  int max_rank = kDefaultMaxRank;
  std::string format = "json";
  std::string output;
};

int cmd_analyze(const std::string& path, const Common& c) {
  auto g = load_group(path, c.max_elements);
  g->require_enumerable("analyze");
  Json j;
  j["tool_version"] = kToolVersion;
  j["input"] = path;
  j["group"] = analyze_json(*g);
  write_output(c.output, render(j, c.format));
  return kOk;
}

int cmd_module(const std::string& group_path, const std::string& mat_path, const std::string& check,
               std::uint64_t seed, std::size_t samples, const Common& c) {
  auto g = load_group(group_path, c.max_elements);
  g->require_enumerable("module analysis");
  MatFile mat;
  try {
    mat = parse_mat(read_file(mat_path));
  } catch (const ParseError& e) {
    throw InputError(mat_path + ": " + e.what());
  }
  Representation rho(g, mat);
  Json j;
  j["tool_version"] = kToolVersion;
  j["group"] = group_path;
  j["module"] = mat_path;
  j["check"] = check;
  j["dim"] = rho.dim();
  const bool faithful = rho.is_faithful();
  j["faithful"] = faithful;
  if (check == "faithful") {
    write_output(c.output, render(j, c.format));
    return kOk;
  }
  EaPoset poset = enumerate_ea(*g, c.max_rank);
  ModuleFacts facts = module_facts(rho, poset);
  j["fmodule"] = facts.fmodule();
  std::vector<Verdict> verdicts;
  if (check == "fmodule") {
    j["j0_exponent"] = facts.offenders && facts.offenders->j0 ? Json(*facts.offenders->j0) : Json(nullptr);
  } else if (check == "offenders") {
    if (!faithful) throw HypothesisViolation("offender analysis needs a faithful module");
    j["offenders"] = offenders_json(rho, poset, *facts.offenders);
    verdicts.push_back(offender_theorems(rho, poset, facts));
  } else if (check == "quadratic") {
    verdicts.push_back(check_quadratic(rho, facts));
  } else if (check == "oliver") {
    verdicts.push_back(check_oliver(rho, facts));
  } else if (check == "lemmas") {
    verdicts.push_back(offender_theorems(rho, poset, facts));
    verdicts.push_back(lemma31_suite(rho, facts, samples, seed));
    for (auto& v : structural_suites(rho, poset, facts)) verdicts.push_back(std::move(v));
  }
  ScopeVerdict scope{true, "class <= 4"};
  if (g->n() >= 3) scope = conjecture_scope(*g, profile(*g));
  j["scope"] = Json{{"covered", scope.covered}, {"reason", scope.reason}};
  bool failed = false;
  Json vs = Json::array();
  for (const auto& v : verdicts) {
    Json vj = verdict_json(*g, v);
    bool conjecture = v.check == "quadratic" || v.check == "oliver";
    if (conjecture && v.status == Status::counterexample && !scope.covered) vj["conjecture_status"] = "open";
    else if (is_failure(v.status)) failed = true;
    vs.push_back(vj);
  }
  if (!verdicts.empty()) j["verdicts"] = vs;
  write_output(c.output, render(j, c.format));
  return failed ? kFailure : kOk;
}

int cmd_catalog(const std::string& family, std::uint32_t p, std::optional<int> n, const std::string& mat_out,
                const Common& c) {
  Family f = parse_family(family);
  int order_exponent = n ? *n : default_order_exponent(f, p).value_or(0);
  if (!n && !default_order_exponent(f, p)) throw InputError("--n is required for the padic family");
  auto pres = catalog(f, p, order_exponent);
  std::string text = "# " + family + "(" + std::to_string(p) + (f == Family::padic ? "," + std::to_string(order_exponent) : "") +
                     ")\n" + write_pcp(pres);
  write_output(c.output, text);
  if (!mat_out.empty()) {
    auto g = std::make_shared<const PcGroup>(pres, PcGroup::Options{c.max_elements});
    write_output(mat_out, write_mat(build_natural(g).to_mat()));
  }
  return kOk;
}

int cmd_suite(SuiteConfig config, const std::vector<std::string>& inputs, const Common& c) {
  config.max_elements = c.max_elements;
  config.max_rank = c.max_rank;
  for (const auto& spec : inputs) {
    // group.pcp[:module.mat[:module.mat...]]
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.empty() || parts[0].empty()) throw InputError("empty --input");
    InstanceSpec inst;
    inst.label = parts[0];
    try {
      inst.pres = parse_pcp(read_file(parts[0]));
    } catch (const ParseError& e) {
      throw InputError(parts[0] + ": " + e.what());
    }
    auto report = validate_consistency(inst.pres, c.max_elements);
    if (!report.consistent) throw InconsistentPresentation(parts[0] + ": " + report.problems.front());
    inst.modules.push_back({ModuleSpec::Kind::regular, std::nullopt, "regular"});
    inst.modules.push_back({ModuleSpec::Kind::maximal_permutations, std::nullopt, "permutation"});
    for (std::size_t k = 1; k < parts.size(); ++k) {
      try {
        inst.modules.push_back({ModuleSpec::Kind::file, parse_mat(read_file(parts[k])), parts[k]});
      } catch (const ParseError& e) {
        throw InputError(parts[k] + ": " + e.what());
      }
    }
    config.inputs.push_back(spec);
    config.instances.push_back(std::move(inst));
  }
  auto report = run_suite(config);
  write_output(c.output, c.format == "json" ? suite_json(report).dump(2) + "\n" : suite_text(report));
  return report.summary.failures > 0 ? kFailure : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power-commutator p-groups, offenders and the quadratic conjecture"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--max-elements", common.max_elements, "Element cap for cached enumeration");
    sub->add_option("--max-rank", common.max_rank, "Rank cap for elementary abelian enumeration");
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("-o,--output", common.output, "Output file (default stdout)");
  };

  auto* analyze = app.add_subcommand("analyze", "Series and maximal-class profile of a .pcp group");
  std::string group_path;
  analyze->add_option("group", group_path, "Presentation file")->required();
  add_common(analyze);

  auto* module = app.add_subcommand("module", "Module checks for a .pcp group and a .mat module");
  std::string mat_path, check = "fmodule";
  std::uint64_t seed = 1;
  std::size_t samples = 64;
  module->add_option("group", group_path, "Presentation file")->required();
  module->add_option("module", mat_path, "Module file")->required();
  module->add_option("--check", check, "Check to run")
      ->check(CLI::IsMember({"faithful", "fmodule", "offenders", "quadratic", "oliver", "lemmas"}));
  module->add_option("--seed", seed, "Seed for sampled suites");
  module->add_option("--samples", samples, "Quadratic pairs sampled by the coefficient-law suite");
  add_common(module);

  auto* cat = app.add_subcommand("catalog", "Write a catalog presentation");
  std::string family;
  std::uint32_t p = 3;
  std::optional<int> n;
  std::string mat_out;
  cat->add_option("--family", family, "heisenberg, wreath or padic")->required();
  cat->add_option("--p", p, "Odd prime");
  cat->add_option("--n", n, "Order exponent");
  cat->add_option("--mat", mat_out, "Also write the natural module here");
  add_common(cat);

  auto* suite = app.add_subcommand("suite", "Batch verification");
  SuiteConfig config;
  std::vector<std::string> inputs;
  suite->add_option("--suite", config.suite, "Built-in suite")->check(CLI::IsMember({"default", "none"}));
  suite->add_option("--p", config.p, "Prime for the built-in suite");
  suite->add_option("--max-n", config.max_n, "Largest order exponent in the built-in suite");
  suite->add_option("--seed", config.seed, "Seed for sampled suites");
  suite->add_option("--samples", config.samples, "Quadratic pairs sampled by the coefficient-law suite");
  suite->add_option("--input", inputs, "group.pcp[:module.mat...] to add");
  add_common(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*analyze) return cmd_analyze(group_path, common);
    if (*module) return cmd_module(group_path, mat_path, check, seed, samples, common);
    if (*cat) return cmd_catalog(family, p, n, mat_out, common);
    if (*suite) return cmd_suite(config, inputs, common);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCap;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const HypothesisViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}
