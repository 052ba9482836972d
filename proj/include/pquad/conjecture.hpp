#pragma once
// Conjecture checkers, lemma-level assertion suites and the batch harness.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pquad/maxclass.hpp"
#include "pquad/modrep.hpp"
#include "pquad/offender.hpp"

namespace pquad {

/// `verified` marks an assertion suite whose hypotheses held on at least one
/// case and whose conclusions all held.
enum class Status { not_applicable, witness, counterexample, vacuous, internal_inconsistency, verified };

std::string_view status_name(Status s);
bool is_failure(Status s);

struct Verdict {
  std::string check;
  Status status = Status::vacuous;
  std::vector<Element> witnesses;
  /// Hypotheses evaluated and conclusions checked, in order.
  std::vector<std::string> trail;
  /// Number of hypothesis-satisfying cases whose conclusion was checked.
  std::size_t cases = 0;
  /// Set by suites that can run exhaustively (the coefficient law for quadratic pairs).
  bool exhaustive = false;
};

/// Facts about one module shared by the checkers.
struct ModuleFacts {
  bool faithful = false;
  /// Set when faithful.
  std::optional<OffenderReport> offenders;
  /// Quadratic elements of Omega_1(Z(G)).
  std::vector<Element> central_quadratic;

  bool fmodule() const { return offenders && offenders->is_fmodule(); }
  /// Faithful and Omega_1(Z(G)) has no quadratic element.
  bool no_central_quadratic() const { return faithful && central_quadratic.empty(); }
};

ModuleFacts module_facts(const Representation& rho, const EaPoset& poset);

/// Quadratic Conjecture: a quadratic element in Omega_1(Z(G)).
Verdict check_quadratic(const Representation& rho, const ModuleFacts& facts);
/// Oliver's conjecture: some 1 != g in Omega_1(Z(G)) with (X - 1)^(p-1) killing rho(g).
Verdict check_oliver(const Representation& rho, const ModuleFacts& facts);

/// Replacement and weak-closure theorems for every best offender.
Verdict offender_theorems(const Representation& rho, const EaPoset& poset, const ModuleFacts& facts);

/// Pairs (a, b) with a quadratic and c = [a, b] a nontrivial element of
/// C_G(a, b). With more than sample_count pairs, a seeded sample is checked.
Verdict lemma31_suite(const Representation& rho, const ModuleFacts& facts, std::size_t sample_count,
                      std::uint64_t seed);

/// One verdict per statement: lemma_2_5, lemma_3_2, cor_3_3, thm_3_4, thm_3_5.
std::vector<Verdict> structural_suites(const Representation& rho, const EaPoset& poset, const ModuleFacts& facts);

/// [B, G] versus B / (B cap Z(G)). Throws HypothesisViolation when A is not
/// abelian normal with G/A cyclic, B is not normal inside A, or G is abelian.
Verdict lemma49_check(const PcGroup& g, const Subgroup& a, const Subgroup& b);
/// lemma49_check over every abelian maximal subgroup A and normal B <= A.
Verdict lemma49_suite(const PcGroup& g);

/// Maximal-class statements on one group: positivity of l versus
/// exceptionality (n >= 4), Omega_1(G_1) = G_{n-p+1} and l > 0 for n > p + 1,
/// l > 0 for odd 5 <= n <= 2p + 1.
Verdict maxclass_theorems(const PcGroup& g, const MaxClassProfile& prof);
/// Catalog invariants: class n - 1, |G_i| = p^(n-i), |Z(G)| = p, G_1 abelian (n >= 4).
Verdict catalog_invariants(const PcGroup& g, const MaxClassProfile& prof);

/// Whether the Quadratic Conjecture is a theorem for this group: maximal class
/// inside the known range, class at most four, or metabelian.
ScopeVerdict conjecture_scope(const PcGroup& g, const MaxClassProfile& prof);

}  // namespace pquad
