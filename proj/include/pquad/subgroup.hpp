#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pquad/pcgroup.hpp"

namespace pquad {

/// A subgroup with its full element set cached. The sorted element list is
/// the canonical key: two subgroups are equal iff their element lists are.
class Subgroup {
 public:
  /// The trivial subgroup.
  Subgroup() : elements_{Element{0}} {}

  const std::vector<Element>& generators() const { return gens_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  /// log_p of the order.
  int rank_of_order(std::uint32_t p) const;
  bool is_trivial() const { return elements_.size() == 1; }

  bool contains(Element x) const;
  bool is_subgroup_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }
  /// Orders by size, then lexicographically by canonical key.
  friend bool operator<(const Subgroup& a, const Subgroup& b);

 private:
  friend class SubgroupBuilder;
  std::vector<Element> gens_;
  std::vector<Element> elements_;
};

Subgroup closure(const PcGroup& g, std::span<const Element> gens);
/// <H, extra>
Subgroup closure(const PcGroup& g, const Subgroup& h, std::span<const Element> extra);
/// Wraps an element list already known to be a subgroup (sorted or not).
Subgroup from_elements(const PcGroup& g, std::vector<Element> elements);
Subgroup whole_group(const PcGroup& g);

Subgroup join(const PcGroup& g, const Subgroup& a, const Subgroup& b);
Subgroup intersection(const PcGroup& g, const Subgroup& a, const Subgroup& b);
/// HK for K normal (or any pair whose product set is a subgroup).
Subgroup product(const PcGroup& g, const Subgroup& a, const Subgroup& b);

Subgroup conjugate(const PcGroup& g, const Subgroup& h, Element x);
bool is_normal(const PcGroup& g, const Subgroup& h);
Subgroup normal_closure(const PcGroup& g, const Subgroup& h);
/// [H, K] = <[h, k] : h in H, k in K>
Subgroup commutator_subgroup(const PcGroup& g, const Subgroup& h, const Subgroup& k);
bool is_abelian(const PcGroup& g, const Subgroup& h);
bool is_elementary_abelian(const PcGroup& g, const Subgroup& h);

/// C_G(A/B) = {g : [a, g] in B for all a in A}. Requires A, B normal and B <= A.
Subgroup section_centralizer(const PcGroup& g, const Subgroup& a, const Subgroup& b);
/// Pointwise centralizer C_G(H).
Subgroup centralizer(const PcGroup& g, const Subgroup& h);
Subgroup center(const PcGroup& g);
Subgroup normalizer(const PcGroup& g, const Subgroup& h);

struct CentralSeries {
  /// lower[0] = G, lower[1] = G', ..., last = 1. lower[i] is G_{i+1} in the usual numbering.
  std::vector<Subgroup> lower;
  /// upper[0] = 1, upper[1] = Z(G), ..., last = G.
  std::vector<Subgroup> upper;
  /// derived[0] = G, derived[1] = G', ... down to 1.
  std::vector<Subgroup> derived;
  int nilpotency_class = 0;

  /// G_i with the convention G_1 = G and G_i = 1 beyond the series.
  const Subgroup& lcs(int i) const;
  /// Z_i(G), saturating at G.
  const Subgroup& z(int i) const;
};

CentralSeries central_series(const PcGroup& g);

/// Omega_1(H) = <h in H : h^p = 1>
Subgroup omega1(const PcGroup& g, const Subgroup& h);
/// Mho_1(H) = <h^p : h in H>
Subgroup mho1(const PcGroup& g, const Subgroup& h);
Subgroup frattini(const PcGroup& g);
std::vector<Subgroup> maximal_subgroups(const PcGroup& g);
/// Normal subgroups of G contained in `within`, sorted. With abelian_only,
/// only the abelian ones.
std::vector<Subgroup> normal_subgroups_within(const PcGroup& g, const Subgroup& within,
                                              bool abelian_only);

/// Abelian invariants of X/C as p-power exponents, descending: {2, 1} means
/// C_{p^2} x C_p. X must be abelian and C <= X.
std::vector<int> abelian_invariants(const PcGroup& g, const Subgroup& x, const Subgroup& c);
inline std::vector<int> abelian_invariants(const PcGroup& g, const Subgroup& x) {
  return abelian_invariants(g, x, Subgroup{});
}

}  // namespace pquad
