#pragma once
// Batch verification over catalog groups and ingested instances.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pquad/conjecture.hpp"

namespace pquad {

inline constexpr const char* kToolVersion = "0.1.0";

struct ModuleSpec {
  enum class Kind { regular, maximal_permutations, natural, natural_dual, file };
  Kind kind = Kind::regular;
  /// For Kind::file.
  std::optional<MatFile> mat;
  std::string label;
};

struct InstanceSpec {
  std::string label;
  PcPresentation pres;
  std::vector<ModuleSpec> modules;
  /// Catalog instances also get the catalog invariant checks.
  bool from_catalog = false;
};

struct SuiteConfig {
  std::string suite = "default";
  std::uint32_t p = 3;
  int max_n = 6;
  std::uint64_t seed = 1;
  std::size_t samples = 64;
  std::size_t max_elements = kDefaultMaxElements;
  int max_rank = kDefaultMaxRank;
  /// Display names of ingested files, echoed in the report.
  std::vector<std::string> inputs;
  std::vector<InstanceSpec> instances;
};

/// heisenberg(p), wreath(p) when p + 1 <= max_n, padic(p, 3..max_n); each with
/// the regular module, the permutation modules on all maximal subgroups and,
/// where it exists, the natural module and its dual.
std::vector<InstanceSpec> default_suite(std::uint32_t p, int max_n);

struct ModuleResult {
  std::string label;
  /// Generators of the point stabilizer for permutation modules.
  std::vector<Element> subgroup_generators;
  std::size_t dim = 0;
  bool faithful = false;
  bool fmodule = false;
  std::optional<int> j0;
  std::size_t offenders = 0;
  std::size_t best_offenders = 0;
  std::vector<Verdict> verdicts;
  /// Module matrices, kept only when a verdict failed.
  std::string mat_text;
};

struct InstanceResult {
  std::string label;
  std::uint32_t p = 0;
  int n = 0;
  std::string pcp_text;
  std::optional<std::string> skipped;
  int nilpotency_class = 0;
  bool maximal_class = false;
  int degree_of_commutativity = -1;
  bool exceptional = false;
  ScopeVerdict scope;
  std::vector<Verdict> group_verdicts;
  std::vector<ModuleResult> modules;
  std::size_t witness_search_modules = 0;
  /// witness, open, counterexample, no_fmodule, skipped
  std::string conjecture_status;
  /// Failing verdicts that count against the run.
  std::size_t failures = 0;
};

struct SuiteSummary {
  std::size_t witnesses = 0;
  std::size_t vacuous = 0;
  std::size_t open = 0;
  std::size_t failures = 0;
  std::size_t verified = 0;
  std::size_t not_applicable = 0;
  std::size_t skipped = 0;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<InstanceResult> instances;
  SuiteSummary summary;
  /// Set when a failure stopped the batch.
  std::optional<std::string> aborted;
};

InstanceResult run_instance(const InstanceSpec& spec, const SuiteConfig& config);
SuiteReport run_suite(const SuiteConfig& config);

}  // namespace pquad
