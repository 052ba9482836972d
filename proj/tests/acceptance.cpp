// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "oracles.hpp"
#include "pquad/conjecture.hpp"
#include "pquad/report.hpp"
#include "pquad/suite.hpp"
#include "test_support.hpp"

using namespace pquad;
using namespace pquad::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::vector<GroupPtr> catalog_up_to_3_6() {
  std::vector<GroupPtr> out{heisenberg3(), make_group(Family::wreath, 3, 4)};
  for (int n = 3; n <= 6; ++n) out.push_back(make_group(Family::padic, 3, n));
  return out;
}

Outcome engine_oracle() {
  Outcome o;
  auto g = heisenberg3();
  NaiveCollector naive(g->presentation());
  auto all = g->elements();
  for (Element x : all)
    for (Element y : all) {
      auto expected = naive.multiply(g->exponents(x), g->exponents(y));
      o.require(g->exponents(g->multiply(x, y)) == expected, "heisenberg table differs from naive collection");
    }
  std::mt19937_64 rng(2024);
  for (const auto& h : catalog_up_to_3_6()) {
    NaiveCollector nh(h->presentation());
    for (int t = 0; t < 1000; ++t) {
      Element a = random_element(*h, rng), b = random_element(*h, rng), c = random_element(*h, rng);
      Element ab = h->multiply(a, b);
      o.require(h->multiply(ab, c) == h->multiply(a, h->multiply(b, c)), "associativity failed");
      o.require(h->exponents(ab) == nh.multiply(h->exponents(a), h->exponents(b)),
                "product differs from naive collection");
    }
  }
  o.detail = o.pass ? "729 table entries, 1000 triples in each of 6 groups" : o.detail;
  return o;
}

Outcome maxclass_invariants() {
  Outcome o;
  for (int n = 4; n <= 7; ++n) {
    auto g = make_group(Family::padic, 3, n);
    auto prof = profile(*g);
    std::string tag = "padic(3," + std::to_string(n) + "): ";
    o.require(prof.nilpotency_class == n - 1, tag + "class");
    o.require(prof.series.lcs(1).order() == g->order(), tag + "G_1 = G");
    for (int i = 2; i <= n; ++i) {
      std::uint64_t expected = 1;
      for (int k = 0; k < n - i; ++k) expected *= 3;
      o.require(prof.series.lcs(i).order() == expected, tag + "lower central series order");
    }
    o.require(prof.g1_abelian, tag + "G_1 abelian");
    o.require(prof.degree_of_commutativity == n - 3, tag + "degree of commutativity");
    o.require(!prof.exceptional, tag + "exceptional");
    o.require((prof.degree_of_commutativity > 0) == !prof.exceptional, tag + "positivity");
    o.require(maxclass_theorems(*g, prof).status == Status::verified, tag + "maximal-class statements");
  }
  o.detail = o.pass ? "n = 4..7: class n-1, |G_i| = 3^(n-i) for i >= 2, l = n-3, not exceptional" : o.detail;
  return o;
}

Outcome omega1_check() {
  Outcome o;
  for (int n = 5; n <= 7; ++n) {
    auto g = make_group(Family::padic, 3, n);
    auto prof = profile(*g);
    o.require(prof.omega1_g1 && *prof.omega1_g1 == prof.series.lcs(n - 2),
              "Omega_1(G_1) != G_(n-2) for n = " + std::to_string(n));
  }
  o.detail = o.pass ? "Omega_1(G_1) = G_(n-2) for n = 5, 6, 7" : o.detail;
  return o;
}

Outcome offender_oracle() {
  Outcome o;
  auto g = heisenberg3();
  auto rho = Representation::natural_unitriangular(g);
  auto poset = enumerate_ea(*g);
  auto report = best_offenders(rho, poset);
  auto brute = brute_offenders(rho, two_generated_subgroups(*g));
  o.require(brute.j.size() == poset.members.size(), "elementary abelian subgroup count");
  std::set<std::vector<Element>> offenders, best;
  for (const auto& e : report.entries) {
    const auto& key = poset.members[e.member].elements();
    auto it = brute.j.find(key);
    o.require(it != brute.j.end() && it->second == e.j_exponent, "j-exponent mismatch");
    if (e.offender) offenders.insert(key);
    if (e.best) best.insert(key);
  }
  std::set<std::vector<Element>> brute_offender_set;
  for (const auto& [k, j] : brute.j)
    if (j >= 0) brute_offender_set.insert(k);
  o.require(offenders == brute_offender_set, "offender list mismatch");
  o.require(best == brute.best, "best offender set mismatch");
  o.require(report.j0 == brute.j0 && report.j0 == 1, "j0 exponent");
  o.detail = o.pass ? std::to_string(offenders.size()) + " offenders, " + std::to_string(best.size()) +
                          " best offenders, j0 = 1"
                    : o.detail;
  return o;
}

const Verdict* find_verdict(const ModuleResult& m, const std::string& check) {
  for (const auto& v : m.verdicts)
    if (v.check == check) return &v;
  return nullptr;
}

Outcome offender_theorems_in_suite(const SuiteReport& r) {
  Outcome o;
  std::size_t fmodules = 0;
  for (const auto& inst : r.instances)
    for (const auto& m : inst.modules) {
      for (const auto& v : m.verdicts)
        o.require(v.status != Status::internal_inconsistency, inst.label + "/" + m.label + ": internal inconsistency");
      if (!(m.faithful && m.fmodule)) continue;
      ++fmodules;
      const Verdict* v = find_verdict(m, "offender_theorems");
      o.require(v && v->status == Status::verified, inst.label + "/" + m.label + ": offender theorems");
    }
  o.require(fmodules > 0, "no faithful F-module in the suite");
  o.detail = o.pass ? std::to_string(fmodules) + " faithful F-modules, replacement and weak closure verified"
                    : o.detail;
  return o;
}

Outcome main_theorem(const SuiteReport& r, double runtime) {
  Outcome o;
  std::size_t witnesses = 0;
  for (const auto& inst : r.instances) {
    o.require(!inst.skipped, inst.label + " skipped");
    for (const auto& m : inst.modules)
      for (const char* check : {"quadratic", "oliver"}) {
        const Verdict* v = find_verdict(m, check);
        o.require(v != nullptr, inst.label + "/" + m.label + ": missing " + check);
        if (!v) continue;
        o.require(v->status != Status::counterexample, inst.label + "/" + m.label + ": counterexample");
        if (m.faithful && m.fmodule) {
          o.require(v->status == Status::witness, inst.label + "/" + m.label + ": no witness");
          ++witnesses;
        }
      }
  }
  o.require(!r.aborted, "suite aborted");
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu witnesses, 0 counterexamples, suite %.2f s", witnesses, runtime);
  if (o.pass) o.detail = buf;
  return o;
}

Outcome lemma31_in_suite(const SuiteReport& r) {
  Outcome o;
  std::size_t exhaustive = 0, cases = 0;
  for (const auto& inst : r.instances)
    for (const auto& m : inst.modules) {
      const Verdict* v = find_verdict(m, "lemma_3_1");
      if (!v) continue;
      o.require(!is_failure(v->status), inst.label + "/" + m.label + ": coefficient law failed");
      if (v->status == Status::verified) {
        cases += v->cases;
        if (v->exhaustive) ++exhaustive;
      }
    }
  o.require(exhaustive > 0, "no exhaustive coefficient-law instance");
  o.detail = o.pass ? std::to_string(cases) + " pairs checked, " + std::to_string(exhaustive) + " exhaustive instances"
                    : o.detail;
  return o;
}

Outcome lemma49_padic() {
  Outcome o;
  std::size_t pairs = 0;
  for (int n = 3; n <= 6; ++n) {
    auto g = make_group(Family::padic, 3, n);
    auto z = brute_center(*g);
    std::size_t here = 0;
    for (const auto& a : maximal_subgroups(*g)) {
      if (!is_abelian(*g, a)) continue;
      for (const auto& b : normal_subgroups_within(*g, a, false)) {
        o.require(lemma49_holds(*g, b.elements(), z), "oracle: invariants differ");
        o.require(lemma49_check(*g, a, b).status == Status::verified, "engine: invariants differ");
        ++here;
      }
    }
    auto suite = lemma49_suite(*g);
    o.require(suite.status == Status::verified && suite.cases == here, "[B,G] suite");
    pairs += here;
  }
  o.detail = o.pass ? std::to_string(pairs) + " (A, B) pairs in padic(3, 3..6)" : o.detail;
  return o;
}

Outcome structural_in_suite(const SuiteReport& r) {
  Outcome o;
  std::map<std::string, std::map<std::string, std::size_t>> tally;
  for (const auto& inst : r.instances)
    for (const auto& m : inst.modules)
      for (const auto& v : m.verdicts) {
        if (v.check != "lemma_2_5" && v.check != "lemma_3_2" && v.check != "cor_3_3" && v.check != "thm_3_4" &&
            v.check != "thm_3_5")
          continue;
        o.require(!is_failure(v.status), inst.label + "/" + m.label + ": " + v.check + " failed");
        ++tally[v.check][std::string(status_name(v.status))];
      }
  o.require(tally.size() == 5, "missing structural suites");
  std::string detail;
  for (const auto& [check, counts] : tally) {
    detail += (detail.empty() ? "" : "; ") + check;
    for (const auto& [status, k] : counts) detail += " " + status + "=" + std::to_string(k);
  }
  if (o.pass) o.detail = detail;
  return o;
}

Outcome determinism(const std::string& first) {
  Outcome o;
  auto second = suite_json(run_suite(SuiteConfig{})).dump(2);
  o.require(first == second, "JSON differs between runs");
  o.detail = o.pass ? std::to_string(first.size()) + " bytes identical" : o.detail;
  return o;
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int id, const char* name, const std::function<Outcome()>& run) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %2d %-32s %6.2f s  %s\n", o.pass ? "PASS" : "FAIL", id, name, seconds_since(t0),
                o.detail.c_str());
    std::fflush(stdout);
  };

  report(1, "engine vs naive collection", [] {
    auto t0 = Clock::now();
    Outcome o = engine_oracle();
    o.require(seconds_since(t0) < 10, "slower than 10 s");
    return o;
  });
  report(2, "maximal-class invariants", [] {
    auto t0 = Clock::now();
    Outcome o = maxclass_invariants();
    o.require(seconds_since(t0) < 120, "slower than 2 min");
    return o;
  });
  report(3, "Omega_1(G_1) = G_(n-p+1)", omega1_check);
  report(4, "offender analytics vs brute force", [] {
    auto t0 = Clock::now();
    Outcome o = offender_oracle();
    o.require(seconds_since(t0) < 5, "slower than 5 s");
    return o;
  });

  auto t0 = Clock::now();
  SuiteReport suite;
  std::string json;
  try {
    suite = run_suite(SuiteConfig{});
    json = suite_json(suite).dump(2);
  } catch (const std::exception& e) {
    std::printf("default suite threw: %s\n", e.what());
  }
  const double runtime = seconds_since(t0);

  report(5, "replacement and weak closure", [&] { return offender_theorems_in_suite(suite); });
  report(6, "quadratic and Oliver conjectures", [&] {
    Outcome o = main_theorem(suite, runtime);
    o.require(runtime < 1800, "slower than 30 min");
    return o;
  });
  report(7, "coefficient law and -4 identity", [&] { return lemma31_in_suite(suite); });
  report(8, "[B,G] versus B/(B cap Z(G))", lemma49_padic);
  report(9, "structural suites", [&] { return structural_in_suite(suite); });
  report(10, "determinism", [&] { return determinism(json); });

  std::printf("%d of 10 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
