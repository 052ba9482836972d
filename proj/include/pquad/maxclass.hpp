#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pquad/pcgroup.hpp"
#include "pquad/subgroup.hpp"

namespace pquad {

/// Invariants of a p-group of maximal class. Series indices follow the usual
/// convention G = G_1 > G_2 = G' > ... ; the two-step centralizer
/// C_G(G_2/G_4) is kept under its own name to avoid clashing with G_1 = G.
struct MaxClassProfile {
  int n = 0;
  int nilpotency_class = 0;
  bool is_maximal_class = false;
  CentralSeries series;
  std::optional<Subgroup> g1_centralizer;
  bool g1_abelian = false;
  /// two_step_centralizers[i - 3] = C_G(G_i / G_{i+2}) for 3 <= i <= n - 2.
  std::vector<Subgroup> two_step_centralizers;
  bool exceptional = false;
  /// -1 when the group is not of maximal class.
  int degree_of_commutativity = -1;
  std::optional<Subgroup> omega1_g1;
};

/// Throws HypothesisViolation for n < 3.
MaxClassProfile profile(const PcGroup& g);

struct ScopeVerdict {
  bool covered = false;
  std::string reason;
};

/// Whether the quadratic conjecture is known for maximal-class groups of
/// order p^n: n <= 8 or n >= max(2p - 6, p + 2).
ScopeVerdict maximal_class_scope(std::uint32_t p, int n);

enum class Family { heisenberg, wreath, padic };

Family parse_family(std::string_view name);
std::string_view family_name(Family f);

/// Catalog of maximal-class groups, all with pc generators g_1 = s acting and
/// g_2, g_3, ... spanning an abelian maximal subgroup (except heisenberg, where
/// every maximal subgroup is abelian).
///  heisenberg(p): order p^3, [g_2, g_1] = g_3.
///  wreath(p): C_p wr C_p, order p^(p+1); s acts on F_p[x]/(x^p) by 1 + x.
///  padic(p, n): s acts on Z[zeta_p]/pi^(n-1) by zeta, pi = zeta - 1; the
///  abelian part has digits in powers of pi.
/// Throws InputError for unsupported (family, p, n).
PcPresentation catalog(Family family, std::uint32_t p, int n);

/// Default n for a family (heisenberg 3, wreath p + 1); padic has none.
std::optional<int> default_order_exponent(Family family, std::uint32_t p);

}  // namespace pquad
