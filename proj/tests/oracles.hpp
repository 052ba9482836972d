#pragma once
// Independent reference implementations used only by tests.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pquad/pcgroup.hpp"

namespace pquad::testing {

// Multiplies normal forms by naive word rewriting straight from the relations:
// the word is a list of generator letters; an adjacent descent "a b" (a > b)
// becomes "b a [a,b]" and p equal letters in a row become the power word.
class NaiveCollector {
 public:
  explicit NaiveCollector(PcPresentation pres) : pres_(std::move(pres)) {}

  Exponents multiply(const Exponents& x, const Exponents& y) const {
    std::vector<int> word = letters(x);
    auto tail = letters(y);
    word.insert(word.end(), tail.begin(), tail.end());
    for (std::size_t steps = 0;; ++steps) {
      if (steps > 50'000'000) throw std::runtime_error("naive collection did not terminate");
      if (!rewrite_once(word)) break;
    }
    Exponents out(pres_.n, 0);
    for (int g : word) ++out[g];
    return out;
  }

 private:
  std::vector<int> letters(const Exponents& e) const {
    std::vector<int> w;
    for (int i = 0; i < pres_.n; ++i)
      for (int k = 0; k < e[i]; ++k) w.push_back(i);
    return w;
  }

  bool rewrite_once(std::vector<int>& w) const {
    const int p = static_cast<int>(pres_.p);
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k + 1 < w.size() && w[k] > w[k + 1]) {
        int a = w[k], b = w[k + 1];
        std::vector<int> repl{b, a};
        auto c = letters(pres_.comm(a, b));
        repl.insert(repl.end(), c.begin(), c.end());
        w.erase(w.begin() + k, w.begin() + k + 2);
        w.insert(w.begin() + k, repl.begin(), repl.end());
        return true;
      }
      std::size_t run = 1;
      while (k + run < w.size() && w[k + run] == w[k]) ++run;
      if (run >= static_cast<std::size_t>(p)) {
        auto pw = letters(pres_.power[w[k]]);
        w.erase(w.begin() + k, w.begin() + k + p);
        w.insert(w.begin() + k, pw.begin(), pw.end());
        return true;
      }
    }
    return false;
  }

  PcPresentation pres_;
};

// 3x3 upper unitriangular matrices over Z/p, stored as (a, b, c) for
// [[1 a c] [0 1 b] [0 0 1]].
struct Unitriangular {
  std::uint32_t p;
  std::int64_t a = 0, b = 0, c = 0;

  Unitriangular operator*(const Unitriangular& o) const {
    Unitriangular r{p};
    r.a = (a + o.a) % p;
    r.b = (b + o.b) % p;
    r.c = (c + o.c + a * o.b) % p;
    return r;
  }
  Unitriangular inv() const {
    Unitriangular r{p};
    r.a = (p - a) % p;
    r.b = (p - b) % p;
    r.c = ((a * b - c) % p + p) % p;
    return r;
  }
  bool operator==(const Unitriangular& o) const { return a == o.a && b == o.b && c == o.c; }
};

}  // namespace pquad::testing

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>

#include "pquad/modrep.hpp"

namespace pquad::testing {

// Subgroup generated by `gens`, by breadth-first multiplication.
inline std::vector<Element> naive_closure(const PcGroup& g, const std::vector<Element>& gens) {
  std::set<Element> seen{g.identity()};
  std::vector<Element> queue{g.identity()};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (Element s : gens) {
      Element y = g.multiply(queue[k], s);
      if (seen.insert(y).second) queue.push_back(y);
    }
  return {seen.begin(), seen.end()};
}

// Every subgroup generated by at most two elements.
inline std::set<std::vector<Element>> two_generated_subgroups(const PcGroup& g) {
  std::set<std::vector<Element>> out;
  auto all = g.elements();
  for (Element x : all)
    for (Element y : all)
      if (!(y < x)) out.insert(naive_closure(g, {x, y}));
  return out;
}

struct BruteOffenders {
  std::map<std::vector<Element>, int> j;  // nontrivial elementary abelian subgroups -> j-exponent
  std::set<std::vector<Element>> best;
  std::optional<int> j0;
};

// Offender data from all subgroups and all fixed vectors found by scanning GF(p)^d.
inline BruteOffenders brute_offenders(const Representation& rho, const std::set<std::vector<Element>>& subgroups) {
  const auto& g = rho.group();
  const std::uint32_t p = g.p();
  std::vector<Vector> vectors;
  {
    Vector v(rho.dim(), 0);
    while (true) {
      vectors.push_back(v);
      std::size_t i = 0;
      while (i < v.size() && ++v[i] == p) v[i++] = 0;
      if (i == v.size()) break;
    }
  }
  auto log_p = [&](std::size_t x) {
    int e = 0;
    while (x > 1) {
      x /= p;
      ++e;
    }
    return e;
  };
  std::map<std::vector<Element>, int> exponent;
  for (const auto& h : subgroups) {
    std::vector<Matrix> mats;
    for (Element x : h) mats.push_back(rho.matrix(x));
    std::size_t fixed = 0;
    for (const auto& v : vectors)
      if (std::all_of(mats.begin(), mats.end(), [&](const Matrix& m) { return m.apply(v) == v; })) ++fixed;
    exponent[h] = log_p(h.size()) + log_p(fixed) - static_cast<int>(rho.dim());
  }
  BruteOffenders out;
  for (const auto& [h, e] : exponent) {
    if (h.size() == 1) continue;
    bool ea = true;
    for (Element x : h)
      for (Element y : h) ea = ea && g.commute(x, y);
    for (Element x : h) ea = ea && g.power(x, p) == g.identity();
    if (!ea) continue;
    out.j[h] = e;
    bool best = true;
    for (const auto& [f, ef] : exponent)
      if (std::includes(h.begin(), h.end(), f.begin(), f.end()) && ef > e) best = false;
    if (best) out.best.insert(h);
    if (e >= 0) out.j0 = std::max(out.j0.value_or(e), e);
  }
  return out;
}

inline std::vector<Element> brute_center(const PcGroup& g) {
  std::vector<Element> z;
  auto all = g.elements();
  for (Element x : all) {
    bool central = true;
    for (std::size_t i = 0; i < all.size() && central; ++i) central = g.commute(x, all[i]);
    if (central) z.push_back(x);
  }
  return z;
}

// Abelian invariants of X/C are fixed by the counts |{xC : x^(p^k) in C}|.
inline std::vector<std::size_t> power_profile(const PcGroup& g, const std::vector<Element>& x,
                                              const std::vector<Element>& c) {
  std::set<Element> cs(c.begin(), c.end());
  std::vector<std::size_t> out;
  std::uint64_t q = 1;
  for (std::size_t done = 0; done < x.size();) {
    q *= g.p();
    done = 0;
    for (Element e : x) done += cs.count(g.power(e, q));
    out.push_back(done / c.size());
    if (q > g.order()) break;
  }
  return out;
}


// [B, G] and B / (B cap Z(G)) have the same abelian invariants.
inline bool lemma49_holds(const PcGroup& g, const std::vector<Element>& b, const std::vector<Element>& z) {
  std::vector<Element> comms;
  for (Element x : b)
    for (Element y : g.elements()) comms.push_back(g.commutator(x, y));
  auto bg = naive_closure(g, comms);
  std::vector<Element> bz;
  for (Element x : b)
    if (std::find(z.begin(), z.end(), x) != z.end()) bz.push_back(x);
  return power_profile(g, bg, {g.identity()}) == power_profile(g, b, bz);
}

}  // namespace pquad::testing
