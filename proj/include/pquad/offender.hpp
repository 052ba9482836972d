#pragma once
// Elementary abelian subgroups and offender analytics.

#include <optional>
#include <vector>

#include "pquad/modrep.hpp"
#include "pquad/subgroup.hpp"

namespace pquad {

inline constexpr int kDefaultMaxRank = 8;

/// All nontrivial elementary abelian subgroups, sorted by (order, key).
struct EaPoset {
  std::vector<Subgroup> members;
  std::vector<int> rank;
  /// covers[i]: indices of the members of rank rank[i] - 1 inside members[i].
  std::vector<std::vector<int>> covers;
  int max_rank = 0;

  /// Indices of all nontrivial members contained in members[i] (itself included), ascending.
  std::vector<int> down_set(int i) const;
  std::optional<int> find(const Subgroup& h) const;
};

/// Throws CapExceeded when some member would exceed max_rank.
EaPoset enumerate_ea(const PcGroup& g, int max_rank = kDefaultMaxRank);

/// J(G): join of the members of largest rank.
Subgroup thompson_subgroup(const PcGroup& g, const EaPoset& poset);

/// Throws HypothesisViolation when A is not abelian.
bool is_weakly_closed(const PcGroup& g, const Subgroup& a);

struct OffenderEntry {
  int member = 0;  // index into the poset
  int j_exponent = 0;
  bool offender = false;
  bool best = false;  // member of P(G, V)
  bool quadratic = false;
  bool weakly_closed = false;
};

struct OffenderReport {
  /// One entry per poset member, in poset order. quadratic/weakly_closed are
  /// computed for offenders only.
  std::vector<OffenderEntry> entries;
  /// Indices (into entries) of the offenders and of P(G, V).
  std::vector<int> offenders;
  std::vector<int> best;
  /// max j-exponent over offenders.
  std::optional<int> j0;

  bool is_fmodule() const { return !best.empty(); }
};

/// Throws HypothesisViolation when rho is not faithful.
OffenderReport best_offenders(const Representation& rho, const EaPoset& poset);

/// Smallest F <= E (by order, then key) in P(G, V) that is quadratic with
/// j_F = j_E. `e` indexes the poset and must be in P(G, V). Throws
/// InternalInconsistency when no such F exists.
int timmesfeld_replace(const Representation& rho, const EaPoset& poset, const OffenderReport& report, int e);

struct WeaklyClosedResult {
  int member = 0;  // smallest weakly closed quadratic offender with j = j0
  int j0 = 0;
  /// Offenders D with j_D = j0 for which a qualifying E inside D^G was found.
  int refinements_checked = 0;
};

/// std::nullopt for non-F-modules. Throws InternalInconsistency when no
/// weakly closed quadratic offender at j0 exists, or when some offender D
/// at j0 has none inside its normal closure.
std::optional<WeaklyClosedResult> weakly_closed_quadratic_offender(const Representation& rho,
                                                                   const EaPoset& poset,
                                                                   const OffenderReport& report);

}  // namespace pquad
