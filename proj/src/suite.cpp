#include "pquad/suite.hpp"

#include "pquad/errors.hpp"

namespace pquad {

std::vector<InstanceSpec> default_suite(std::uint32_t p, int max_n) {
  using Kind = ModuleSpec::Kind;
  const std::vector<ModuleSpec> common{{Kind::regular, std::nullopt, "regular"},
                                       {Kind::maximal_permutations, std::nullopt, "permutation"}};
  auto with_natural = [&](bool natural) {
    auto mods = common;
    if (natural) {
      mods.push_back({Kind::natural, std::nullopt, "natural"});
      mods.push_back({Kind::natural_dual, std::nullopt, "natural_dual"});
    }
    return mods;
  };
  std::vector<InstanceSpec> out;
  const std::string ps = std::to_string(p);
  if (max_n >= 3) out.push_back({"heisenberg(" + ps + ")", catalog(Family::heisenberg, p, 3), with_natural(true), true});
  if (static_cast<int>(p) + 1 <= max_n)
    out.push_back({"wreath(" + ps + ")", catalog(Family::wreath, p, p + 1), with_natural(true), true});
  for (int n = 3; n <= max_n; ++n)
    out.push_back({"padic(" + ps + "," + std::to_string(n) + ")", catalog(Family::padic, p, n),
                   with_natural(n <= static_cast<int>(p)), true});
  return out;
}

namespace {

Representation build_natural(const GroupPtr& g) {
  if (g->n() == 3) {
    try {
      return Representation::natural_unitriangular(g);
    } catch (const HypothesisViolation&) {
    }
  }
  return Representation::natural_affine(g);
}

ModuleResult run_module(const Representation& rho, std::string label, const EaPoset& poset,
                        const SuiteConfig& config) {
  ModuleResult m;
  m.label = std::move(label);
  m.dim = rho.dim();
  ModuleFacts facts = module_facts(rho, poset);
  m.faithful = facts.faithful;
  m.fmodule = facts.fmodule();
  if (facts.offenders) {
    m.j0 = facts.offenders->j0;
    m.offenders = facts.offenders->offenders.size();
    m.best_offenders = facts.offenders->best.size();
  }
  m.verdicts.push_back(check_quadratic(rho, facts));
  m.verdicts.push_back(check_oliver(rho, facts));
  m.verdicts.push_back(offender_theorems(rho, poset, facts));
  m.verdicts.push_back(lemma31_suite(rho, facts, config.samples, config.seed));
  for (auto& v : structural_suites(rho, poset, facts)) m.verdicts.push_back(std::move(v));
  for (const auto& v : m.verdicts)
    if (is_failure(v.status)) {
      m.mat_text = write_mat(rho.to_mat());
      break;
    }
  return m;
}

}  // namespace

InstanceResult run_instance(const InstanceSpec& spec, const SuiteConfig& config) {
  InstanceResult r;
  r.label = spec.label;
  r.p = spec.pres.p;
  r.n = spec.pres.n;
  r.pcp_text = write_pcp(spec.pres);
  try {
    auto g = std::make_shared<const PcGroup>(spec.pres, PcGroup::Options{config.max_elements});
    g->require_enumerable("suite instance");
    auto series = central_series(*g);
    r.nilpotency_class = series.nilpotency_class;
    std::optional<MaxClassProfile> prof;
    if (g->n() >= 3) {
      prof = profile(*g);
      r.maximal_class = prof->is_maximal_class;
      r.degree_of_commutativity = prof->degree_of_commutativity;
      r.exceptional = prof->exceptional;
      r.scope = conjecture_scope(*g, *prof);
      r.group_verdicts.push_back(maxclass_theorems(*g, *prof));
      if (spec.from_catalog) r.group_verdicts.push_back(catalog_invariants(*g, *prof));
    } else {
      r.scope = {true, "class <= 4"};
    }
    r.group_verdicts.push_back(lemma49_suite(*g));

    EaPoset poset = enumerate_ea(*g, config.max_rank);
    for (const auto& ms : spec.modules) {
      switch (ms.kind) {
        case ModuleSpec::Kind::regular:
          r.modules.push_back(run_module(Representation::regular(g), ms.label, poset, config));
          break;
        case ModuleSpec::Kind::maximal_permutations: {
          int k = 0;
          for (const auto& h : maximal_subgroups(*g)) {
            auto m = run_module(Representation::permutation(g, h), ms.label + ":M" + std::to_string(++k), poset, config);
            m.subgroup_generators = h.generators();
            r.modules.push_back(std::move(m));
          }
          break;
        }
        case ModuleSpec::Kind::natural:
          r.modules.push_back(run_module(build_natural(g), ms.label, poset, config));
          break;
        case ModuleSpec::Kind::natural_dual:
          r.modules.push_back(run_module(Representation::dual(build_natural(g)), ms.label, poset, config));
          break;
        case ModuleSpec::Kind::file:
          r.modules.push_back(run_module(Representation(g, *ms.mat), ms.label, poset, config));
          break;
      }
    }
  } catch (const CapExceeded& e) {
    r.skipped = e.what();
    r.conjecture_status = "skipped";
    return r;
  }

  bool witness = false, missing = false;
  for (auto& m : r.modules) {
    for (const auto& v : m.verdicts) {
      if (v.check == "quadratic" && v.status != Status::not_applicable) {
        ++r.witness_search_modules;
        (v.status == Status::witness ? witness : missing) = true;
      }
    }
  }
  if (missing)
    r.conjecture_status = r.scope.covered ? "counterexample" : "open";
  else if (witness)
    r.conjecture_status = "witness";
  else
    r.conjecture_status = r.scope.covered ? "no_fmodule" : "open";

  // Conjecture checks fail only inside the known range; lemma and theorem
  // suites fail everywhere.
  auto counts = [&](const Verdict& v) {
    if (!is_failure(v.status)) return false;
    if (v.check == "quadratic" || v.check == "oliver") return r.scope.covered;
    return true;
  };
  for (const auto& v : r.group_verdicts) r.failures += counts(v);
  for (const auto& m : r.modules)
    for (const auto& v : m.verdicts) r.failures += counts(v);
  return r;
}

SuiteReport run_suite(const SuiteConfig& config) {
  SuiteReport report;
  report.config = config;
  std::vector<InstanceSpec> specs;
  if (config.suite == "default") specs = default_suite(config.p, config.max_n);
  else if (config.suite != "none") throw InputError("unknown suite '" + config.suite + "'");
  specs.insert(specs.end(), config.instances.begin(), config.instances.end());
  report.config.instances.clear();

  auto& s = report.summary;
  for (const auto& spec : specs) {
    InstanceResult r = run_instance(spec, config);
    if (r.skipped) ++s.skipped;
    if (r.conjecture_status == "open") ++s.open;
    auto tally = [&](const Verdict& v) {
      switch (v.status) {
        case Status::witness:
          ++s.witnesses;
          break;
        case Status::vacuous:
          ++s.vacuous;
          break;
        case Status::verified:
          ++s.verified;
          break;
        case Status::not_applicable:
          ++s.not_applicable;
          break;
        default:
          break;
      }
    };
    for (const auto& v : r.group_verdicts) tally(v);
    for (const auto& m : r.modules)
      for (const auto& v : m.verdicts) tally(v);
    const bool failed = r.failures > 0;
    s.failures += r.failures;
    report.instances.push_back(std::move(r));
    if (failed) {
      report.aborted = "failure on " + spec.label;
      break;
    }
  }
  return report;
}

}  // namespace pquad
