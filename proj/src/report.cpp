#include "pquad/report.hpp"

#include <map>
#include <sstream>

namespace pquad {

namespace {

Exponents exponents_of(std::uint32_t p, int n, Element x) {
  Exponents e(n);
  std::uint32_t id = x.id;
  for (int i = n - 1; i >= 0; --i) {
    e[i] = static_cast<int>(id % p);
    id /= p;
  }
  return e;
}

Json verdict_json(std::uint32_t p, int n, const Verdict& v) {
  Json j;
  j["check"] = v.check;
  j["status"] = status_name(v.status);
  j["cases"] = v.cases;
  if (v.exhaustive) j["exhaustive"] = true;
  if (!v.witnesses.empty()) {
    Json w = Json::array();
    for (Element x : v.witnesses) w.push_back(exponents_of(p, n, x));
    j["witnesses"] = w;
  }
  j["trail"] = v.trail;
  return j;
}

Json orders_json(const std::vector<Subgroup>& series) {
  Json j = Json::array();
  for (const auto& h : series) j.push_back(h.order());
  return j;
}

}  // namespace

Json element_json(const PcGroup& g, Element x) { return g.exponents(x); }

Json subgroup_json(const PcGroup& g, const Subgroup& h) {
  Json gens = Json::array();
  for (Element x : h.generators()) gens.push_back(element_json(g, x));
  return Json{{"order", h.order()}, {"generators", gens}};
}

Json verdict_json(const PcGroup& g, const Verdict& v) { return verdict_json(g.p(), g.n(), v); }

Json analyze_json(const PcGroup& g) {
  Json j;
  j["p"] = g.p();
  j["n"] = g.n();
  j["order"] = g.order();
  auto series = central_series(g);
  j["class"] = series.nilpotency_class;
  j["lower_central_series"] = orders_json(series.lower);
  j["upper_central_series"] = orders_json(series.upper);
  j["derived_series"] = orders_json(series.derived);
  if (g.n() >= 3) {
    auto prof = profile(g);
    Json m;
    m["is_maximal_class"] = prof.is_maximal_class;
    if (prof.is_maximal_class) {
      m["g1_centralizer"] = subgroup_json(g, *prof.g1_centralizer);
      m["g1_abelian"] = prof.g1_abelian;
      m["exceptional"] = prof.exceptional;
      m["degree_of_commutativity"] = prof.degree_of_commutativity;
      m["omega1_g1"] = subgroup_json(g, *prof.omega1_g1);
      // the lower central term equal to Omega_1(G_1), if any
      for (int i = 1; i <= g.n(); ++i)
        if (series.lcs(i) == *prof.omega1_g1) {
          m["omega1_g1_equals_lcs"] = i;
          break;
        }
    }
    j["maximal_class"] = m;
    auto scope = conjecture_scope(g, prof);
    j["scope"] = Json{{"covered", scope.covered}, {"reason", scope.reason}};
    if (prof.is_maximal_class) {
      auto ms = maximal_class_scope(g.p(), g.n());
      j["maximal_class_scope"] = Json{{"covered", ms.covered}, {"reason", ms.reason}};
    }
  } else {
    j["maximal_class"] = Json{{"is_maximal_class", false}};
    j["scope"] = Json{{"covered", true}, {"reason", "class <= 4"}};
  }
  return j;
}

Json offenders_json(const Representation& rho, const EaPoset& poset, const OffenderReport& report) {
  const auto& g = rho.group();
  Json j;
  j["elementary_abelian_subgroups"] = poset.members.size();
  j["max_rank"] = poset.max_rank;
  j["thompson_subgroup"] = subgroup_json(g, thompson_subgroup(g, poset));
  j["fmodule"] = report.is_fmodule();
  j["j0_exponent"] = report.j0 ? Json(*report.j0) : Json(nullptr);
  Json list = Json::array();
  for (int i : report.offenders) {
    const auto& e = report.entries[i];
    Json o = subgroup_json(g, poset.members[i]);
    o["j_exponent"] = e.j_exponent;
    o["best"] = e.best;
    o["quadratic"] = e.quadratic;
    o["weakly_closed"] = e.weakly_closed;
    list.push_back(o);
  }
  j["offenders"] = list;
  j["best_offender_count"] = report.best.size();
  return j;
}

Json suite_json(const SuiteReport& report) {
  const auto& c = report.config;
  Json j;
  j["tool_version"] = kToolVersion;
  j["config"] = Json{{"suite", c.suite},       {"p", c.p},
                     {"max_n", c.max_n},       {"seed", c.seed},
                     {"samples", c.samples},   {"max_elements", c.max_elements},
                     {"max_rank", c.max_rank}, {"inputs", c.inputs}};
  std::map<std::string, std::map<std::string, std::size_t>> per_check;
  Json instances = Json::array();
  for (const auto& r : report.instances) {
    Json in;
    in["label"] = r.label;
    in["p"] = r.p;
    in["n"] = r.n;
    if (r.skipped) {
      in["skipped"] = *r.skipped;
      in["conjecture_status"] = r.conjecture_status;
      instances.push_back(in);
      continue;
    }
    in["class"] = r.nilpotency_class;
    in["maximal_class"] = r.maximal_class;
    if (r.maximal_class) {
      in["degree_of_commutativity"] = r.degree_of_commutativity;
      in["exceptional"] = r.exceptional;
    }
    in["scope"] = Json{{"covered", r.scope.covered}, {"reason", r.scope.reason}};
    in["conjecture_status"] = r.conjecture_status;
    in["witness_search_modules"] = r.witness_search_modules;
    in["failures"] = r.failures;
    Json gv = Json::array();
    for (const auto& v : r.group_verdicts) {
      gv.push_back(verdict_json(r.p, r.n, v));
      ++per_check[v.check][std::string(status_name(v.status))];
    }
    in["group_checks"] = gv;
    Json mods = Json::array();
    for (const auto& m : r.modules) {
      Json mj;
      mj["label"] = m.label;
      if (!m.subgroup_generators.empty()) {
        Json gens = Json::array();
        for (Element x : m.subgroup_generators) gens.push_back(exponents_of(r.p, r.n, x));
        mj["stabilizer_generators"] = gens;
      }
      mj["dim"] = m.dim;
      mj["faithful"] = m.faithful;
      mj["fmodule"] = m.fmodule;
      mj["j0_exponent"] = m.j0 ? Json(*m.j0) : Json(nullptr);
      mj["offenders"] = m.offenders;
      mj["best_offenders"] = m.best_offenders;
      Json vs = Json::array();
      for (const auto& v : m.verdicts) {
        vs.push_back(verdict_json(r.p, r.n, v));
        ++per_check[v.check][std::string(status_name(v.status))];
      }
      mj["checks"] = vs;
      if (!m.mat_text.empty()) mj["reproduction"] = Json{{"pcp", r.pcp_text}, {"mat", m.mat_text}};
      mods.push_back(mj);
    }
    in["modules"] = mods;
    instances.push_back(in);
  }
  j["instances"] = instances;
  const auto& s = report.summary;
  Json sum;
  sum["witnesses"] = s.witnesses;
  sum["vacuous"] = s.vacuous;
  sum["open"] = s.open;
  sum["failures"] = s.failures;
  sum["verified"] = s.verified;
  sum["not_applicable"] = s.not_applicable;
  sum["skipped"] = s.skipped;
  Json pc = Json::object();
  for (const auto& [check, statuses] : per_check) {
    Json t = Json::object();
    for (const auto& [status, count] : statuses) t[status] = count;
    pc[check] = t;
  }
  sum["per_check"] = pc;
  if (report.aborted) sum["aborted"] = *report.aborted;
  j["summary"] = sum;
  return j;
}

std::string suite_text(const SuiteReport& report) {
  std::ostringstream out;
  for (const auto& r : report.instances) {
    out << r.label << ": ";
    if (r.skipped) {
      out << "skipped (" << *r.skipped << ")\n";
      continue;
    }
    out << "class " << r.nilpotency_class << (r.maximal_class ? ", maximal class" : "") << ", scope "
        << (r.scope.covered ? "covered" : "open") << " (" << r.scope.reason << "), conjecture "
        << r.conjecture_status << ", failures " << r.failures << '\n';
    for (const auto& v : r.group_verdicts)
      out << "  " << v.check << ": " << status_name(v.status) << " (" << v.cases << " cases)\n";
    for (const auto& m : r.modules) {
      out << "  module " << m.label << " dim " << m.dim << (m.faithful ? " faithful" : " not faithful")
          << (m.fmodule ? " F-module" : "") << '\n';
      for (const auto& v : m.verdicts) {
        out << "    " << v.check << ": " << status_name(v.status) << " (" << v.cases << " cases)\n";
        for (const auto& t : v.trail)
          if (t.rfind("FAILED", 0) == 0) out << "      " << t << '\n';
      }
    }
  }
  const auto& s = report.summary;
  out << "summary: witnesses " << s.witnesses << ", verified " << s.verified << ", vacuous " << s.vacuous
      << ", not_applicable " << s.not_applicable << ", open " << s.open << ", skipped " << s.skipped
      << ", failures " << s.failures << '\n';
  if (report.aborted) out << "aborted: " << *report.aborted << '\n';
  return out.str();
}

}  // namespace pquad
