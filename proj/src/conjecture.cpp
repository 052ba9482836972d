#include "pquad/conjecture.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>

#include "pquad/errors.hpp"

namespace pquad {

namespace {

std::string invariants_text(const std::vector<int>& inv) {
  std::string out = "[";
  for (std::size_t i = 0; i < inv.size(); ++i) out += (i ? "," : "") + std::to_string(inv[i]);
  return out + "]";
}

Verdict make(std::string_view check) {
  Verdict v;
  v.check = std::string(check);
  return v;
}

void fail(Verdict& v, std::string message) {
  v.status = Status::counterexample;
  v.trail.push_back("FAILED: " + std::move(message));
}

// Closes a suite: failures stick, otherwise verified when some case ran.
void settle(Verdict& v) {
  if (v.status == Status::counterexample || v.status == Status::internal_inconsistency) return;
  v.status = v.cases > 0 ? Status::verified : Status::vacuous;
}

bool gate(Verdict& v, const ModuleFacts& facts) {
  if (!facts.faithful) {
    v.status = Status::not_applicable;
    v.trail.push_back("module is not faithful");
    return false;
  }
  if (!facts.fmodule()) {
    v.status = Status::not_applicable;
    v.trail.push_back("module is not an F-module");
    return false;
  }
  v.trail.push_back("faithful F-module");
  return true;
}

Vector sub_vec(const Vector& a, const Vector& b, Scalar p) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = reduce_mod(std::int64_t(a[i]) - b[i], p);
  return out;
}

}  // namespace

std::string_view status_name(Status s) {
  switch (s) {
    case Status::not_applicable:
      return "not_applicable";
    case Status::witness:
      return "witness";
    case Status::counterexample:
      return "counterexample";
    case Status::vacuous:
      return "vacuous";
    case Status::internal_inconsistency:
      return "internal_inconsistency";
    case Status::verified:
      return "verified";
  }
  return "?";
}

bool is_failure(Status s) { return s == Status::counterexample || s == Status::internal_inconsistency; }

ModuleFacts module_facts(const Representation& rho, const EaPoset& poset) {
  const auto& g = rho.group();
  ModuleFacts facts;
  facts.faithful = rho.is_faithful();
  if (facts.faithful) facts.offenders = best_offenders(rho, poset);
  Subgroup z = omega1(g, center(g));
  for (Element x : z.elements())
    if (x != g.identity() && rho.is_quadratic_element(x)) facts.central_quadratic.push_back(x);
  return facts;
}

Verdict check_quadratic(const Representation& rho, const ModuleFacts& facts) {
  Verdict v = make("quadratic");
  if (!gate(v, facts)) return v;
  v.cases = 1;
  if (facts.central_quadratic.empty()) {
    fail(v, "no quadratic element in Omega_1(Z(G))");
    return v;
  }
  v.status = Status::witness;
  v.witnesses = facts.central_quadratic;
  v.trail.push_back("quadratic element " + rho.group().format(v.witnesses.front()) + " in Omega_1(Z(G))");
  return v;
}

Verdict check_oliver(const Representation& rho, const ModuleFacts& facts) {
  Verdict v = make("oliver");
  if (!gate(v, facts)) return v;
  const auto& g = rho.group();
  v.cases = 1;
  Subgroup z = omega1(g, center(g));
  for (Element x : z.elements())
    if (x != g.identity() && rho.unipotent_minpoly_degree(x) <= g.p() - 1) v.witnesses.push_back(x);
  if (v.witnesses.empty()) {
    fail(v, "no element of Omega_1(Z(G)) with minimal polynomial dividing (X-1)^(p-1)");
    return v;
  }
  v.status = Status::witness;
  v.trail.push_back("minimal polynomial of " + g.format(v.witnesses.front()) + " divides (X-1)^(p-1)");
  return v;
}

Verdict offender_theorems(const Representation& rho, const EaPoset& poset, const ModuleFacts& facts) {
  Verdict v = make("offender_theorems");
  if (!gate(v, facts)) return v;
  const auto& report = *facts.offenders;
  try {
    for (int e : report.best) {
      int f = timmesfeld_replace(rho, poset, report, e);
      if (report.entries[f].j_exponent != report.entries[e].j_exponent)
        throw InternalInconsistency("replacement changed the j-exponent");
      ++v.cases;
    }
    v.trail.push_back("replacement found for " + std::to_string(report.best.size()) + " best offenders");
    auto wc = weakly_closed_quadratic_offender(rho, poset, report);
    v.cases += static_cast<std::size_t>(wc->refinements_checked) + 1;
    v.trail.push_back("weakly closed quadratic offender of order " +
                      std::to_string(poset.members[wc->member].order()) + " at j0 = " + std::to_string(wc->j0) +
                      "; " + std::to_string(wc->refinements_checked) + " normal-closure refinements");
  } catch (const InternalInconsistency& e) {
    v.status = Status::internal_inconsistency;
    v.trail.push_back(std::string("FAILED: ") + e.what());
    return v;
  }
  settle(v);
  return v;
}

Verdict lemma31_suite(const Representation& rho, const ModuleFacts& facts, std::size_t sample_count,
                      std::uint64_t seed) {
  Verdict v = make("lemma_3_1");
  if (!facts.faithful) {
    v.status = Status::not_applicable;
    v.trail.push_back("module is not faithful");
    return v;
  }
  const auto& g = rho.group();
  const Scalar p = g.p();
  std::vector<Element> quadratic;
  for (Element x : g.elements())
    if (rho.is_quadratic_element(x)) quadratic.push_back(x);
  std::vector<std::pair<Element, Element>> pairs;
  for (Element a : quadratic)
    for (Element b : g.elements()) {
      Element c = g.commutator(a, b);
      if (c != g.identity() && g.commute(c, a) && g.commute(c, b)) pairs.emplace_back(a, b);
    }
  v.trail.push_back(std::to_string(quadratic.size()) + " quadratic elements, " + std::to_string(pairs.size()) +
                    " qualifying pairs");
  if (pairs.empty()) {
    v.status = Status::vacuous;
    return v;
  }
  std::mt19937_64 rng(seed);
  if (pairs.size() > sample_count) {
    for (std::size_t i = 0; i < sample_count; ++i) std::swap(pairs[i], pairs[i + rng() % (pairs.size() - i)]);
    pairs.resize(sample_count);
    v.trail.push_back("sampled " + std::to_string(sample_count) + " pairs");
  }

  // Vectors: the standard basis when small (the identities are linear in v), else a sample.
  const std::size_t d = rho.dim();
  const bool all_basis = d <= 32;
  const std::size_t p4 = std::size_t(p) * p * p * p;
  const bool all_exponents = p4 <= 4096;
  v.exhaustive = all_basis && all_exponents;
  const Scalar minus_four = reduce_mod(-4, p);

  auto bracket = [&](Element x, const Vector& w) { return sub_vec(rho.apply(x, w), w, p); };
  for (auto [a, b] : pairs) {
    Element c = g.commutator(a, b);
    Element d_el = g.multiply(a, c);
    Element e_el = g.multiply(d_el, c);
    if (d_el != g.conjugate(a, b) || e_el != g.conjugate(a, g.multiply(b, b)) ||
        e_el != g.multiply(g.inverse(a), g.power(d_el, 2))) {
      fail(v, "conjugation identities for a = " + g.format(a) + ", b = " + g.format(b));
      continue;
    }
    std::vector<Vector> vectors;
    if (all_basis) {
      for (std::size_t i = 0; i < d; ++i) {
        Vector w(d, 0);
        w[i] = 1;
        vectors.push_back(std::move(w));
      }
    } else {
      for (int t = 0; t < 8; ++t) {
        Vector w(d);
        for (auto& x : w) x = static_cast<Scalar>(rng() % p);
        vectors.push_back(std::move(w));
      }
    }
    std::vector<std::array<Scalar, 4>> exps;
    if (all_exponents) {
      for (Scalar i = 0; i < p; ++i)
        for (Scalar j = 0; j < p; ++j)
          for (Scalar k = 0; k < p; ++k)
            for (Scalar l = 0; l < p; ++l) exps.push_back({i, j, k, l});
    } else {
      for (int t = 0; t < 256; ++t)
        exps.push_back({Scalar(rng() % p), Scalar(rng() % p), Scalar(rng() % p), Scalar(rng() % p)});
    }
    bool ok = true;
    for (const auto& w : vectors) {
      Vector base = bracket(d_el, bracket(a, w));  // [w, a, d]
      for (const auto& [i, j, k, l] : exps) {
        Element x = g.multiply(g.power(a, i), g.power(d_el, j));
        Element y = g.multiply(g.power(a, k), g.power(d_el, l));
        Vector lhs = bracket(y, bracket(x, w));
        Scalar coef = (i * l + j * k) % p;
        for (std::size_t r = 0; r < d && ok; ++r)
          if (lhs[r] != base[r] * coef % p) ok = false;
        if (!ok) {
          fail(v, "coefficient law at (i,j,k,l) = (" + std::to_string(i) + "," + std::to_string(j) + "," +
                      std::to_string(k) + "," + std::to_string(l) + ") for a = " + g.format(a) +
                      ", b = " + g.format(b));
          break;
        }
      }
      if (!ok) break;
      Vector eee = bracket(e_el, bracket(e_el, w));
      for (std::size_t r = 0; r < d; ++r)
        if (eee[r] != base[r] * minus_four % p) ok = false;
      if (!ok) {
        fail(v, "[v,e,e] = -4[v,a,d] for a = " + g.format(a) + ", b = " + g.format(b));
        break;
      }
    }
    std::vector<Element> gens{a, c};
    if (!rho.commutator_space(closure(g, gens), 2).is_zero()) {
      fail(v, "[V,<a,c>,<a,c>] != 0 for a = " + g.format(a) + ", b = " + g.format(b));
      ok = false;
    }
    if (ok) ++v.cases;
  }
  v.trail.push_back(std::to_string(v.cases) + " pairs satisfy the coefficient law, the -4 identity and [V,E,E] = 0" +
                    (v.exhaustive ? " (all exponents, all basis vectors)" : ""));
  settle(v);
  return v;
}

std::vector<Verdict> structural_suites(const Representation& rho, const EaPoset& poset, const ModuleFacts& facts) {
  const auto& g = rho.group();
  const std::uint32_t p = g.p();
  const auto series = central_series(g);
  const bool h0 = facts.no_central_quadratic();
  const std::string h0_text = h0 ? "faithful, no quadratic element in Omega_1(Z(G))"
                                 : (facts.faithful ? "Omega_1(Z(G)) has a quadratic element" : "module is not faithful");
  std::vector<Verdict> out;
  const OffenderReport* report = facts.offenders ? &*facts.offenders : nullptr;

  {
    Verdict v = make("lemma_2_5");
    v.trail.push_back(h0_text);
    if (h0 && facts.fmodule()) {
      for (int e : report->offenders) {
        const auto& m = poset.members[e];
        ++v.cases;
        if (m.order() < std::size_t(p) * p) fail(v, "offender of order " + std::to_string(m.order()));
        if (report->entries[e].weakly_closed && m.order() < std::size_t(p) * p * p)
          fail(v, "weakly closed offender of order " + std::to_string(m.order()));
      }
    } else if (h0) {
      v.trail.push_back("not an F-module");
    }
    settle(v);
    out.push_back(std::move(v));
  }
  {
    Verdict v = make("lemma_3_2");
    v.trail.push_back(h0_text);
    if (h0 && facts.fmodule()) {
      const Subgroup& z2 = series.z(2);
      const Subgroup& z3 = series.z(3);
      const Subgroup& z4 = series.z(4);
      for (Element x : z2.elements())
        if (rho.is_quadratic_element(x)) fail(v, "quadratic element " + g.format(x) + " in Z_2(G)");
      for (int e : report->offenders) {
        if (!report->entries[e].quadratic || !report->entries[e].weakly_closed) continue;
        const auto& m = poset.members[e];
        ++v.cases;
        if (!intersection(g, z2, m).is_trivial()) fail(v, "Z_2(G) meets a weakly closed quadratic offender");
        if (!commutator_subgroup(g, z2, m).is_trivial()) fail(v, "[Z_2(G), E] != 1");
        if (!commutator_subgroup(g, z3, m).is_trivial()) fail(v, "[Z_3(G), E] != 1");
        if (!commutator_subgroup(g, z4, m).is_subgroup_of(intersection(g, z3, m)))
          fail(v, "[Z_4(G), E] not inside Z_3(G) cap E");
      }
    }
    settle(v);
    out.push_back(std::move(v));
  }
  {
    Verdict v = make("cor_3_3");
    v.trail.push_back(h0_text);
    v.trail.push_back("class " + std::to_string(series.nilpotency_class));
    if (h0 && series.nilpotency_class <= 4) {
      ++v.cases;
      if (facts.fmodule()) fail(v, "class <= 4 group with an F-module and no central quadratic element");
    }
    settle(v);
    out.push_back(std::move(v));
  }
  {
    Verdict v = make("thm_3_4");
    v.trail.push_back(h0_text);
    if (h0) {
      const Subgroup& derived = series.lower.size() > 1 ? series.lower[1] : series.lower[0];
      for (int e : report->offenders) {
        const auto& m = poset.members[e];
        ++v.cases;
        if (is_abelian(g, normal_closure(g, m))) fail(v, "offender inside the abelian normal subgroup E^G");
        if (commutator_subgroup(g, derived, m).is_trivial()) fail(v, "[G', E] = 1 for an offender");
      }
    }
    settle(v);
    out.push_back(std::move(v));
  }
  {
    Verdict v = make("thm_3_5");
    if (facts.faithful && report) {
      // abelian normal subgroups inside each distinct E^G
      std::map<std::vector<Element>, std::vector<Subgroup>> abelian_normal;
      for (int e : report->offenders) {
        if (!report->entries[e].quadratic) continue;
        const auto& m = poset.members[e];
        Subgroup eg = normal_closure(g, m);
        auto it = abelian_normal.find(eg.elements());
        if (it == abelian_normal.end())
          it = abelian_normal.emplace(eg.elements(), normal_subgroups_within(g, eg, true)).first;
        bool hyp = false;
        for (const auto& k : it->second)
          if (m.order() * k.order() == eg.order() * intersection(g, m, k).order()) {
            hyp = true;
            break;
          }
        if (!hyp) continue;
        ++v.cases;
        if (facts.central_quadratic.empty())
          fail(v, "E^G = EK with K abelian normal but no quadratic element in Omega_1(Z(G))");
      }
      v.trail.push_back(std::to_string(v.cases) + " quadratic offenders with E^G = EK, K abelian normal");
    } else {
      v.trail.push_back("module is not faithful");
    }
    settle(v);
    out.push_back(std::move(v));
  }
  return out;
}

Verdict lemma49_check(const PcGroup& g, const Subgroup& a, const Subgroup& b) {
  if (is_abelian(g, whole_group(g))) throw HypothesisViolation("G must be non-abelian");
  if (!is_abelian(g, a) || !is_normal(g, a)) throw HypothesisViolation("A must be abelian and normal");
  if (!b.is_subgroup_of(a) || !is_normal(g, b)) throw HypothesisViolation("B must be normal and inside A");
  Subgroup phi_a = join(g, frattini(g), a);
  if (phi_a.order() * g.p() < g.order()) throw HypothesisViolation("G/A must be cyclic");
  Verdict v = make("lemma_4_9");
  Subgroup lhs = commutator_subgroup(g, b, whole_group(g));
  Subgroup bz = intersection(g, b, center(g));
  auto left = abelian_invariants(g, lhs);
  auto right = abelian_invariants(g, b, bz);
  v.cases = 1;
  v.trail.push_back("[B,G] invariants " + invariants_text(left) + ", B/(B cap Z) invariants " +
                    invariants_text(right));
  if (left != right || lhs.order() * bz.order() != b.order()) fail(v, "abelian invariants differ");
  settle(v);
  return v;
}

Verdict lemma49_suite(const PcGroup& g) {
  Verdict v = make("lemma_4_9");
  if (is_abelian(g, whole_group(g))) {
    v.status = Status::not_applicable;
    v.trail.push_back("G is abelian");
    return v;
  }
  for (const auto& a : maximal_subgroups(g)) {
    if (!is_abelian(g, a)) continue;
    for (const auto& b : normal_subgroups_within(g, a, false)) {
      Verdict one = lemma49_check(g, a, b);
      v.cases += one.cases;
      if (is_failure(one.status)) {
        v.status = one.status;
        v.trail.insert(v.trail.end(), one.trail.begin(), one.trail.end());
      }
    }
  }
  v.trail.push_back(std::to_string(v.cases) + " (A, B) pairs");
  settle(v);
  return v;
}

Verdict maxclass_theorems(const PcGroup& g, const MaxClassProfile& prof) {
  Verdict v = make("maxclass_theorems");
  if (!prof.is_maximal_class) {
    v.status = Status::not_applicable;
    v.trail.push_back("not of maximal class");
    return v;
  }
  const int n = prof.n;
  const int p = static_cast<int>(g.p());
  const int l = prof.degree_of_commutativity;
  v.trail.push_back("l = " + std::to_string(l) + (prof.exceptional ? ", exceptional" : ", not exceptional"));
  if (n >= 4) {
    ++v.cases;
    if ((l > 0) == prof.exceptional) fail(v, "positivity of l does not match non-exceptionality");
  }
  if (n > p + 1) {
    v.cases += 2;
    if (!(*prof.omega1_g1 == prof.series.lcs(n - p + 1))) fail(v, "Omega_1(G_1) != G_{n-p+1}");
    if (l <= 0) fail(v, "l = 0 although n > p + 1");
  }
  if (n % 2 == 1 && n >= 5 && n <= 2 * p + 1) {
    ++v.cases;
    if (l <= 0) fail(v, "l = 0 for odd n in [5, 2p+1]");
  }
  settle(v);
  return v;
}

Verdict catalog_invariants(const PcGroup& g, const MaxClassProfile& prof) {
  Verdict v = make("catalog_invariants");
  const int n = prof.n;
  v.cases = 1;
  if (prof.nilpotency_class != n - 1) fail(v, "class " + std::to_string(prof.nilpotency_class));
  std::uint64_t expected = g.order() / g.p();
  for (int i = 2; i <= n; ++i) {
    expected /= g.p();
    if (prof.series.lcs(i).order() != expected) fail(v, "|G_" + std::to_string(i) + "| != p^(n-i)");
  }
  if (center(g).order() != g.p()) fail(v, "|Z(G)| != p");
  if (n >= 4 && !prof.g1_abelian) fail(v, "G_1 is not abelian");
  settle(v);
  return v;
}

ScopeVerdict conjecture_scope(const PcGroup& g, const MaxClassProfile& prof) {
  ScopeVerdict s;
  if (prof.is_maximal_class) {
    s = maximal_class_scope(g.p(), prof.n);
    s.reason = "maximal class, " + s.reason;
    if (s.covered) return s;
  }
  if (prof.nilpotency_class <= 4) return {true, "class <= 4"};
  if (prof.series.derived.size() <= 3) return {true, "metabelian"};
  if (!prof.is_maximal_class) s.reason = "not of maximal class, class > 4, not metabelian";
  return s;
}

}  // namespace pquad
