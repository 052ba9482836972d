#include "pquad/subgroup.hpp"

#include <algorithm>
#include <iterator>
#include <cassert>
#include <map>
#include <set>

#include "pquad/errors.hpp"

namespace pquad {

class SubgroupBuilder {
 public:
  static Subgroup make(std::vector<Element> gens, std::vector<Element> sorted_elements) {
    Subgroup s;
    s.gens_ = std::move(gens);
    s.elements_ = std::move(sorted_elements);
    return s;
  }
};

namespace {

// Membership marks over the whole group, cleared after each use.
class Marks {
 public:
  explicit Marks(std::uint64_t order) {
    auto& buf = buffer();
    if (buf.size() < order) buf.assign(order, 0);
  }
  ~Marks() {
    auto& buf = buffer();
    for (auto x : touched_) buf[x.id] = 0;
  }
  Marks(const Marks&) = delete;
  Marks& operator=(const Marks&) = delete;

  bool test(Element x) const { return buffer()[x.id] != 0; }
  bool insert(Element x) {
    auto& b = buffer()[x.id];
    if (b) return false;
    b = 1;
    touched_.push_back(x);
    return true;
  }

 private:
  static std::vector<std::uint8_t>& buffer() {
    thread_local std::vector<std::uint8_t> buf;
    return buf;
  }
  std::vector<Element> touched_;
};

// Extends the closed set `elems` (already marked) by new generator x.
void extend_closure(const PcGroup& g, std::vector<Element>& elems, std::vector<Element>& gens,
                    Element x, Marks& marks) {
  gens.push_back(x);
  const std::size_t old_size = elems.size();
  for (std::size_t i = 0; i < old_size; ++i) {
    Element y = g.multiply(elems[i], x);
    if (marks.insert(y)) elems.push_back(y);
  }
  for (std::size_t i = old_size; i < elems.size(); ++i) {
    for (Element s : gens) {
      Element y = g.multiply(elems[i], s);
      if (marks.insert(y)) elems.push_back(y);
    }
  }
}

Subgroup build(const PcGroup& g, const Subgroup* base, std::span<const Element> extra) {
  g.require_enumerable("subgroup closure");
  Marks marks(g.order());
  std::vector<Element> elems;
  std::vector<Element> gens;
  if (base) {
    elems = base->elements();
    gens = base->generators();
  } else {
    elems = {g.identity()};
  }
  for (Element e : elems) marks.insert(e);
  for (Element x : extra) {
    if (marks.test(x)) continue;
    extend_closure(g, elems, gens, x, marks);
  }
  std::sort(elems.begin(), elems.end());
  return SubgroupBuilder::make(std::move(gens), std::move(elems));
}

}  // namespace

int Subgroup::rank_of_order(std::uint32_t p) const {
  int r = 0;
  for (std::size_t n = elements_.size(); n > 1; n /= p) ++r;
  return r;
}

bool Subgroup::contains(Element x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (order() > other.order()) return false;
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

bool operator<(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements_ < b.elements_;
}

Subgroup closure(const PcGroup& g, std::span<const Element> gens) { return build(g, nullptr, gens); }

Subgroup closure(const PcGroup& g, const Subgroup& h, std::span<const Element> extra) {
  return build(g, &h, extra);
}

Subgroup from_elements(const PcGroup& g, std::vector<Element> elements) {
  g.require_enumerable("subgroup construction");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  Marks marks(g.order());
  std::vector<Element> closed{g.identity()};
  marks.insert(g.identity());
  std::vector<Element> gens;
  for (Element x : elements) {
    if (marks.test(x)) continue;
    extend_closure(g, closed, gens, x, marks);
    if (closed.size() == elements.size()) break;
  }
  assert(closed.size() == elements.size());
  return SubgroupBuilder::make(std::move(gens), std::move(elements));
}

Subgroup whole_group(const PcGroup& g) {
  g.require_enumerable("whole group");
  std::vector<Element> gens(g.n());
  for (int i = 0; i < g.n(); ++i) gens[i] = g.generator(i);
  return SubgroupBuilder::make(std::move(gens), g.elements());
}

Subgroup join(const PcGroup& g, const Subgroup& a, const Subgroup& b) {
  if (b.order() > a.order()) return closure(g, b, a.generators());
  return closure(g, a, b.generators());
}

Subgroup intersection(const PcGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Element> common;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(common));
  return from_elements(g, std::move(common));
}

Subgroup product(const PcGroup& g, const Subgroup& a, const Subgroup& b) { return join(g, a, b); }

Subgroup conjugate(const PcGroup& g, const Subgroup& h, Element x) {
  std::vector<Element> gens, elems;
  elems.reserve(h.order());
  for (Element e : h.elements()) elems.push_back(g.conjugate(e, x));
  for (Element e : h.generators()) gens.push_back(g.conjugate(e, x));
  std::sort(elems.begin(), elems.end());
  return SubgroupBuilder::make(std::move(gens), std::move(elems));
}

bool is_normal(const PcGroup& g, const Subgroup& h) {
  for (Element s : h.generators())
    for (int i = 0; i < g.n(); ++i)
      if (!h.contains(g.conjugate(s, g.generator(i)))) return false;
  return true;
}

namespace {

// Smallest subgroup containing h and closed under conjugation by `by`.
Subgroup close_under_conjugation(const PcGroup& g, Subgroup h, std::span<const Element> by) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < h.generators().size(); ++i) {
      Element s = h.generators()[i];
      for (Element x : by) {
        Element c = g.conjugate(s, x);
        if (!h.contains(c)) {
          h = closure(g, h, std::span<const Element>(&c, 1));
          changed = true;
        }
      }
    }
  }
  return h;
}

std::vector<Element> pc_generators(const PcGroup& g) {
  std::vector<Element> gens(g.n());
  for (int i = 0; i < g.n(); ++i) gens[i] = g.generator(i);
  return gens;
}

}  // namespace

Subgroup normal_closure(const PcGroup& g, const Subgroup& h) {
  auto gens = pc_generators(g);
  return close_under_conjugation(g, h, gens);
}

Subgroup commutator_subgroup(const PcGroup& g, const Subgroup& h, const Subgroup& k) {
  std::vector<Element> comms;
  for (Element a : h.generators())
    for (Element b : k.generators()) comms.push_back(g.commutator(a, b));
  auto s = closure(g, comms);
  std::vector<Element> by = h.generators();
  by.insert(by.end(), k.generators().begin(), k.generators().end());
  return close_under_conjugation(g, std::move(s), by);
}

bool is_abelian(const PcGroup& g, const Subgroup& h) {
  const auto& gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!g.commute(gens[i], gens[j])) return false;
  return true;
}

bool is_elementary_abelian(const PcGroup& g, const Subgroup& h) {
  if (!is_abelian(g, h)) return false;
  for (Element s : h.generators())
    if (g.power(s, g.p()) != g.identity()) return false;
  return true;
}

Subgroup section_centralizer(const PcGroup& g, const Subgroup& a, const Subgroup& b) {
  if (!b.is_subgroup_of(a)) throw HypothesisViolation("section centralizer: B is not contained in A");
  if (!is_normal(g, a)) throw HypothesisViolation("section centralizer: A is not normal");
  if (!is_normal(g, b)) throw HypothesisViolation("section centralizer: B is not normal");
  std::vector<Element> out;
  for (Element x : g.elements()) {
    bool ok = true;
    for (Element s : a.generators())
      if (!b.contains(g.commutator(s, x))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return from_elements(g, std::move(out));
}

Subgroup centralizer(const PcGroup& g, const Subgroup& h) {
  std::vector<Element> out;
  for (Element x : g.elements()) {
    bool ok = true;
    for (Element s : h.generators())
      if (!g.commute(s, x)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return from_elements(g, std::move(out));
}

Subgroup center(const PcGroup& g) { return centralizer(g, whole_group(g)); }

Subgroup normalizer(const PcGroup& g, const Subgroup& h) {
  std::vector<Element> out;
  for (Element x : g.elements()) {
    bool ok = true;
    for (Element s : h.generators())
      if (!h.contains(g.conjugate(s, x))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return from_elements(g, std::move(out));
}

const Subgroup& CentralSeries::lcs(int i) const {
  assert(i >= 1);
  if (static_cast<std::size_t>(i) <= lower.size()) return lower[i - 1];
  return lower.back();
}

const Subgroup& CentralSeries::z(int i) const {
  assert(i >= 0);
  if (static_cast<std::size_t>(i) < upper.size()) return upper[i];
  return upper.back();
}

CentralSeries central_series(const PcGroup& g) {
  CentralSeries s;
  const Subgroup whole = whole_group(g);
  s.lower.push_back(whole);
  while (!s.lower.back().is_trivial()) s.lower.push_back(commutator_subgroup(g, s.lower.back(), whole));
  s.upper.push_back(Subgroup{});
  while (s.upper.back().order() != whole.order())
    s.upper.push_back(section_centralizer(g, whole, s.upper.back()));
  s.derived.push_back(whole);
  while (!s.derived.back().is_trivial())
    s.derived.push_back(commutator_subgroup(g, s.derived.back(), s.derived.back()));
  s.nilpotency_class = static_cast<int>(s.lower.size()) - 1;
  assert(s.nilpotency_class == static_cast<int>(s.upper.size()) - 1);
  return s;
}

Subgroup omega1(const PcGroup& g, const Subgroup& h) {
  std::vector<Element> gens;
  for (Element x : h.elements())
    if (g.power(x, g.p()) == g.identity()) gens.push_back(x);
  return closure(g, gens);
}

Subgroup mho1(const PcGroup& g, const Subgroup& h) {
  std::vector<Element> gens;
  for (Element x : h.elements()) gens.push_back(g.power(x, g.p()));
  return closure(g, gens);
}

Subgroup frattini(const PcGroup& g) {
  const Subgroup whole = whole_group(g);
  return join(g, commutator_subgroup(g, whole, whole), mho1(g, whole));
}

std::vector<Subgroup> maximal_subgroups(const PcGroup& g) {
  const std::uint32_t p = g.p();
  Subgroup phi = frattini(g);
  // Basis of G/Phi(G) from the pc generators.
  std::vector<Element> basis;
  Subgroup cur = phi;
  for (int i = 0; i < g.n(); ++i) {
    Element x = g.generator(i);
    if (cur.contains(x)) continue;
    basis.push_back(x);
    cur = closure(g, cur, std::span<const Element>(&x, 1));
  }
  const std::size_t d = basis.size();
  // Coordinates of every element in G/Phi(G).
  std::vector<std::vector<std::uint32_t>> coord(g.order());
  std::vector<std::uint32_t> a(d, 0);
  while (true) {
    Element rep = g.identity();
    for (std::size_t i = 0; i < d; ++i) rep = g.multiply(rep, g.power(basis[i], a[i]));
    for (Element f : phi.elements()) coord[g.multiply(rep, f).id] = a;
    std::size_t i = 0;
    while (i < d && ++a[i] == p) a[i++] = 0;
    if (i == d) break;
  }
  std::vector<Subgroup> out;
  // Normalized functionals: leading nonzero coefficient equal to 1.
  std::vector<std::uint32_t> f(d, 0);
  while (true) {
    std::size_t i = 0;
    while (i < d && ++f[i] == p) f[i++] = 0;
    if (i == d) break;
    std::size_t lead = 0;
    while (f[lead] == 0) ++lead;
    if (f[lead] != 1) continue;
    std::vector<Element> elems;
    for (Element x : g.elements()) {
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < d; ++k) s += std::uint64_t{f[k]} * coord[x.id][k];
      if (s % p == 0) elems.push_back(x);
    }
    out.push_back(from_elements(g, std::move(elems)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> normal_subgroups_within(const PcGroup& g, const Subgroup& within,
                                              bool abelian_only) {
  // Every normal subgroup is a join of normal closures of single elements.
  std::set<std::vector<Element>> seen_cyclic;
  std::vector<Subgroup> cyclic_closures;
  for (Element x : within.elements()) {
    if (x == g.identity()) continue;
    auto c = normal_closure(g, closure(g, std::span<const Element>(&x, 1)));
    if (abelian_only && !is_abelian(g, c)) continue;
    if (seen_cyclic.insert(c.elements()).second) cyclic_closures.push_back(std::move(c));
  }
  std::map<std::vector<Element>, std::size_t> index;
  std::vector<Subgroup> out{Subgroup{}};
  index[out[0].elements()] = 0;
  for (std::size_t q = 0; q < out.size(); ++q) {
    for (const auto& c : cyclic_closures) {
      if (c.is_subgroup_of(out[q])) continue;
      Subgroup j = join(g, out[q], c);
      if (abelian_only && !is_abelian(g, j)) continue;
      if (index.count(j.elements())) continue;
      index[j.elements()] = out.size();
      out.push_back(std::move(j));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> abelian_invariants(const PcGroup& g, const Subgroup& x, const Subgroup& c) {
  if (!is_abelian(g, x)) throw HypothesisViolation("abelian invariants of a non-abelian group");
  if (!c.is_subgroup_of(x)) throw HypothesisViolation("abelian invariants: C is not contained in X");
  const std::uint32_t p = g.p();
  auto log_p = [p](std::size_t v) {
    int r = 0;
    for (; v > 1; v /= p) ++r;
    return r;
  };
  // omega[k] = log_p |{xC : (xC)^(p^k) = 1}|
  std::vector<int> omega{0};
  std::uint64_t pk = 1;
  while (true) {
    pk *= p;
    std::size_t count = 0;
    for (Element e : x.elements())
      if (c.contains(g.power(e, pk))) ++count;
    omega.push_back(log_p(count / c.order()));
    if (count == x.order()) break;
  }
  std::vector<int> out;
  const int top = static_cast<int>(omega.size()) - 1;
  for (int k = top; k >= 1; --k) {
    int at_least_k = omega[k] - omega[k - 1];
    int at_least_next = k < top ? omega[k + 1] - omega[k] : 0;
    for (int r = 0; r < at_least_k - at_least_next; ++r) out.push_back(k);
  }
  return out;
}

}  // namespace pquad
