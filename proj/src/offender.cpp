#include "pquad/offender.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pquad/errors.hpp"

namespace pquad {

std::vector<int> EaPoset::down_set(int i) const {
  std::vector<int> out{i};
  std::vector<bool> seen(members.size(), false);
  seen[i] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int c : covers[out[k]])
      if (!seen[c]) {
        seen[c] = true;
        out.push_back(c);
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> EaPoset::find(const Subgroup& h) const {
  auto it = std::lower_bound(members.begin(), members.end(), h);
  if (it == members.end() || !(*it == h)) return std::nullopt;
  return static_cast<int>(it - members.begin());
}

EaPoset enumerate_ea(const PcGroup& g, int max_rank) {
  g.require_enumerable("elementary abelian subgroup enumeration");
  const std::uint32_t p = g.p();
  std::vector<Element> order_p;
  for (Element x : g.elements())
    if (x != g.identity() && g.power(x, p) == g.identity()) order_p.push_back(x);

  // levels[r - 1] holds the rank-r members with the covers found while building them.
  struct Level {
    std::map<std::vector<Element>, int> index;
    std::vector<Subgroup> members;
    std::vector<std::set<int>> covers;
  };
  std::vector<Level> levels(1);
  for (Element x : order_p) {
    std::vector<Element> gens{x};
    Subgroup c = closure(g, gens);
    if (c.elements()[1] != x) continue;  // keep one generator per cyclic subgroup
    levels[0].index.emplace(c.elements(), static_cast<int>(levels[0].members.size()));
    levels[0].members.push_back(std::move(c));
    levels[0].covers.emplace_back();
  }
  while (!levels.back().members.empty()) {
    Level next;
    const Level& cur = levels.back();
    for (int e = 0; e < static_cast<int>(cur.members.size()); ++e) {
      const Subgroup& base = cur.members[e];
      for (Element y : order_p) {
        if (base.contains(y)) continue;
        bool commutes = std::all_of(base.generators().begin(), base.generators().end(),
                                    [&](Element a) { return g.commute(a, y); });
        if (!commutes) continue;
        // one y per coset y*base: the least element of the coset
        bool least = std::all_of(base.elements().begin(), base.elements().end(),
                                 [&](Element a) { return !(g.multiply(y, a) < y); });
        if (!least) continue;
        std::vector<Element> extra{y};
        Subgroup f = closure(g, base, extra);
        auto [it, inserted] = next.index.emplace(f.elements(), static_cast<int>(next.members.size()));
        if (inserted) {
          next.members.push_back(std::move(f));
          next.covers.emplace_back();
        }
        next.covers[it->second].insert(e);
      }
    }
    if (!next.members.empty() && static_cast<int>(levels.size()) + 1 > max_rank)
      throw CapExceeded("elementary abelian subgroups of rank " + std::to_string(levels.size() + 1) +
                        " exceed the rank cap " + std::to_string(max_rank));
    levels.push_back(std::move(next));
  }
  levels.pop_back();

  // Flatten in (order, key) order; within a level the map is already key-sorted.
  EaPoset poset;
  std::vector<std::vector<int>> position(levels.size());
  for (std::size_t r = 0; r < levels.size(); ++r) {
    position[r].resize(levels[r].members.size());
    for (const auto& [key, idx] : levels[r].index) {
      position[r][idx] = static_cast<int>(poset.members.size());
      poset.members.push_back(levels[r].members[idx]);
      poset.rank.push_back(static_cast<int>(r) + 1);
      poset.covers.emplace_back();
    }
  }
  for (std::size_t r = 0; r < levels.size(); ++r)
    for (std::size_t idx = 0; idx < levels[r].members.size(); ++idx) {
      auto& cov = poset.covers[position[r][idx]];
      for (int c : levels[r].covers[idx]) cov.push_back(position[r - 1][c]);
      std::sort(cov.begin(), cov.end());
    }
  poset.max_rank = static_cast<int>(levels.size());
  return poset;
}

Subgroup thompson_subgroup(const PcGroup& g, const EaPoset& poset) {
  Subgroup j;
  for (std::size_t i = 0; i < poset.members.size(); ++i)
    if (poset.rank[i] == poset.max_rank) j = join(g, j, poset.members[i]);
  return j;
}

bool is_weakly_closed(const PcGroup& g, const Subgroup& a) {
  if (!is_abelian(g, a)) throw HypothesisViolation("weak closure is defined for abelian subgroups");
  std::set<std::vector<Element>> seen{a.elements()};
  std::vector<Subgroup> queue{a};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (int i = 0; i < g.n(); ++i) {
      Subgroup b = conjugate(g, queue[k], g.generator(i));
      if (!seen.insert(b.elements()).second) continue;
      bool commute = true;
      for (Element x : a.generators())
        for (Element y : b.generators()) commute = commute && g.commute(x, y);
      if (commute) return false;
      queue.push_back(std::move(b));
    }
  }
  return true;
}

OffenderReport best_offenders(const Representation& rho, const EaPoset& poset) {
  if (!rho.is_faithful()) throw HypothesisViolation("offender analysis needs a faithful module");
  const auto& g = rho.group();
  const std::size_t count = poset.members.size();
  OffenderReport report;
  report.entries.resize(count);
  // best_below[i] = max j-exponent over proper subgroups of members[i], the trivial one included.
  std::vector<int> best_below(count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    auto& entry = report.entries[i];
    entry.member = static_cast<int>(i);
    entry.j_exponent = rho.j_exponent(poset.members[i]);
    for (int c : poset.covers[i])
      best_below[i] = std::max({best_below[i], best_below[c], report.entries[c].j_exponent});
    entry.offender = entry.j_exponent >= 0;
    entry.best = entry.j_exponent >= best_below[i];
    if (entry.offender) {
      entry.quadratic = rho.is_quadratic_subgroup(poset.members[i]);
      entry.weakly_closed = is_weakly_closed(g, poset.members[i]);
      report.offenders.push_back(static_cast<int>(i));
      report.j0 = std::max(report.j0.value_or(entry.j_exponent), entry.j_exponent);
    }
    if (entry.best) report.best.push_back(static_cast<int>(i));
  }
  return report;
}

int timmesfeld_replace(const Representation& rho, const EaPoset& poset, const OffenderReport& report, int e) {
  const auto& target = report.entries.at(e);
  if (!target.best) throw HypothesisViolation("replacement needs a member of P(G, V)");
  for (int f : poset.down_set(e)) {
    const auto& entry = report.entries[f];
    if (entry.best && entry.quadratic && entry.j_exponent == target.j_exponent) return f;
  }
  throw InternalInconsistency("no quadratic best offender with equal j below " +
                              std::to_string(poset.members[e].order()) + "-element member on module of dimension " +
                              std::to_string(rho.dim()));
}

std::optional<WeaklyClosedResult> weakly_closed_quadratic_offender(const Representation& rho,
                                                                   const EaPoset& poset,
                                                                   const OffenderReport& report) {
  if (!report.is_fmodule()) return std::nullopt;
  const auto& g = rho.group();
  WeaklyClosedResult result;
  result.j0 = *report.j0;
  std::vector<int> candidates;
  for (int i : report.offenders) {
    const auto& entry = report.entries[i];
    if (entry.j_exponent == result.j0 && entry.quadratic && entry.weakly_closed) candidates.push_back(i);
  }
  if (candidates.empty())
    throw InternalInconsistency("no weakly closed quadratic offender with j-exponent " + std::to_string(result.j0));
  result.member = candidates.front();
  for (int d : report.offenders) {
    if (report.entries[d].j_exponent != result.j0) continue;
    Subgroup closure_d = normal_closure(g, poset.members[d]);
    bool found = std::any_of(candidates.begin(), candidates.end(),
                             [&](int c) { return poset.members[c].is_subgroup_of(closure_d); });
    if (!found)
      throw InternalInconsistency("offender of order " + std::to_string(poset.members[d].order()) +
                                  " at j0 has no weakly closed quadratic offender inside its normal closure");
    ++result.refinements_checked;
  }
  return result;
}

}  // namespace pquad
