#include "pquad/pcgroup.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "pquad/errors.hpp"
#include "text.hpp"

namespace pquad {

namespace {

using detail::parse_int;
using detail::split_ws;

std::string format_exponents(const Exponents& e) {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) out += '*';
    first = false;
    out += 'g' + std::to_string(i + 1);
    if (e[i] != 1) out += '^' + std::to_string(e[i]);
  }
  return first ? "1" : out;
}

bool is_trivial(const Exponents& e) {
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

std::vector<std::string> structural_problems(const PcPresentation& pres) {
  std::vector<std::string> problems;
  const int n = pres.n;
  auto check_word = [&](const Exponents& w, int min_index, int lhs_weight, const std::string& name) {
    for (int k = 0; k < n; ++k) {
      if (w[k] == 0) continue;
      if (pres.weight[k] <= lhs_weight)
        problems.push_back("weight violation in " + name + ": g" + std::to_string(k + 1) +
                           " has weight " + std::to_string(pres.weight[k]) +
                           ", needs weight > " + std::to_string(lhs_weight));
      else if (k <= min_index)
        problems.push_back("weight violation in " + name + ": g" + std::to_string(k + 1) +
                           " does not come after the left-hand generators");
    }
  };
  for (int i = 0; i < n; ++i) {
    check_word(pres.power[i], i, pres.weight[i], "pow " + std::to_string(i + 1));
    for (int j = 0; j < i; ++j)
      check_word(pres.comm(i, j), i, std::max(pres.weight[i], pres.weight[j]),
                 "comm " + std::to_string(i + 1) + " " + std::to_string(j + 1));
  }
  return problems;
}

void check_shape(const PcPresentation& pres) {
  if (pres.p < 3 || !is_prime(pres.p))
    throw InputError(std::to_string(pres.p) + " is not an odd prime");
  if (pres.n < 1) throw InputError("generator count must be at least 1");
  if (pres.power.size() != static_cast<std::size_t>(pres.n) ||
      pres.commutator.size() != static_cast<std::size_t>(pres.n) ||
      pres.weight.size() != static_cast<std::size_t>(pres.n))
    throw InputError("relation tables do not match the generator count");
  double bits = pres.n * std::log2(static_cast<double>(pres.p));
  if (bits >= 32.0)
    throw CapExceeded("group order " + std::to_string(pres.p) + "^" + std::to_string(pres.n) +
                      " exceeds the 32-bit element encoding");
}

}  // namespace

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

PcPresentation PcPresentation::with_trivial_relations(std::uint32_t p, int n) {
  PcPresentation pres;
  pres.p = p;
  pres.n = n;
  pres.power.assign(n, Exponents(n, 0));
  pres.commutator.resize(n);
  for (int i = 0; i < n; ++i) pres.commutator[i].assign(i, Exponents(n, 0));
  pres.weight.resize(n);
  for (int i = 0; i < n; ++i) pres.weight[i] = i + 1;
  return pres;
}

PcPresentation parse_pcp(std::string_view text) {
  PcPresentation pres;
  bool have_header = false;
  std::vector<bool> seen_pow;
  std::vector<std::vector<bool>> seen_comm;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (!have_header) {
      if (tokens.size() != 2) throw ParseError(line_no, "header must be 'p n'");
      auto p = parse_int(tokens[0], line_no);
      auto n = parse_int(tokens[1], line_no);
      if (p < 3 || p > 65521 || !is_prime(static_cast<std::uint64_t>(p)))
        throw ParseError(line_no, std::to_string(p) + " is not an odd prime");
      if (n < 1 || n > 64) throw ParseError(line_no, "generator count out of range");
      pres = PcPresentation::with_trivial_relations(static_cast<std::uint32_t>(p), static_cast<int>(n));
      seen_pow.assign(n, false);
      seen_comm.resize(n);
      for (int i = 0; i < n; ++i) seen_comm[i].assign(i, false);
      have_header = true;
      if (end == text.size()) break;
      continue;
    }
    const int n = pres.n;
    // Split "kind idx...:" from the exponent list.
    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(line_no, "missing ':'");
    auto head = split_ws(line.substr(0, colon));
    auto values = split_ws(line.substr(colon + 1));
    if (head.empty()) throw ParseError(line_no, "missing relation kind");
    if (values.size() != static_cast<std::size_t>(n))
      throw ParseError(line_no, "expected " + std::to_string(n) + " values, got " +
                                    std::to_string(values.size()));
    Exponents word(n);
    for (int k = 0; k < n; ++k) {
      auto v = parse_int(values[k], line_no);
      word[k] = static_cast<int>(v);
      if (head[0] != "weights" && (v < 0 || v >= static_cast<long long>(pres.p)))
        throw ParseError(line_no, "exponent " + std::to_string(v) + " out of range [0," +
                                      std::to_string(pres.p) + ")");
    }
    auto parse_index = [&](std::string_view tok) {
      auto i = parse_int(tok, line_no);
      if (i < 1 || i > n) throw ParseError(line_no, "generator index " + std::to_string(i) + " out of range");
      return static_cast<int>(i - 1);
    };
    if (head[0] == "pow") {
      if (head.size() != 2) throw ParseError(line_no, "expected 'pow i:'");
      int i = parse_index(head[1]);
      if (seen_pow[i]) throw ParseError(line_no, "duplicate power relation");
      seen_pow[i] = true;
      pres.power[i] = std::move(word);
    } else if (head[0] == "comm") {
      if (head.size() != 3) throw ParseError(line_no, "expected 'comm i j:'");
      int i = parse_index(head[1]);
      int j = parse_index(head[2]);
      if (j >= i) throw ParseError(line_no, "commutator relation needs j < i");
      if (seen_comm[i][j]) throw ParseError(line_no, "duplicate commutator relation");
      seen_comm[i][j] = true;
      pres.comm(i, j) = std::move(word);
    } else if (head[0] == "weights") {
      if (head.size() != 1) throw ParseError(line_no, "expected 'weights:'");
      for (int k = 0; k < n; ++k)
        if (word[k] < 1) throw ParseError(line_no, "weights must be positive");
      pres.weight = std::move(word);
    } else {
      throw ParseError(line_no, "unknown relation kind '" + std::string(head[0]) + "'");
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "empty presentation");
  return pres;
}

std::string write_pcp(const PcPresentation& pres) {
  std::ostringstream out;
  out << pres.p << ' ' << pres.n << '\n';
  bool default_weights = true;
  for (int i = 0; i < pres.n; ++i)
    if (pres.weight[i] != i + 1) default_weights = false;
  auto write_word = [&](const Exponents& w) {
    for (int x : w) out << ' ' << x;
    out << '\n';
  };
  if (!default_weights) {
    out << "weights:";
    write_word(pres.weight);
  }
  for (int i = 0; i < pres.n; ++i) {
    if (is_trivial(pres.power[i])) continue;
    out << "pow " << i + 1 << ':';
    write_word(pres.power[i]);
  }
  for (int i = 0; i < pres.n; ++i)
    for (int j = 0; j < i; ++j) {
      if (is_trivial(pres.comm(i, j))) continue;
      out << "comm " << i + 1 << ' ' << j + 1 << ':';
      write_word(pres.comm(i, j));
    }
  return out.str();
}

ValidationReport validate_consistency(const PcPresentation& pres, std::size_t max_elements) {
  ValidationReport report;
  check_shape(pres);
  report.problems = structural_problems(pres);
  if (!report.problems.empty()) return report;
  PcGroup group(pres, PcGroup::Options{max_elements}, PcGroup::Unchecked{});
  report.problems = group.overlap_failures();
  report.consistent = report.problems.empty();
  if (report.consistent) report.order_exponent = pres.n;
  return report;
}

PcGroup::PcGroup(PcPresentation pres, Options options) : PcGroup(std::move(pres), options, Unchecked{}) {
  auto problems = structural_problems(pres_);
  if (problems.empty()) problems = overlap_failures();
  if (!problems.empty()) {
    std::string msg = "inconsistent presentation";
    for (const auto& p : problems) msg += "\n  " + p;
    throw InconsistentPresentation(msg);
  }
}

PcGroup::PcGroup(PcPresentation pres, Options options, Unchecked)
    : pres_(std::move(pres)), options_(options) {
  check_shape(pres_);
  const int n = pres_.n;
  place_.assign(n, 1);
  for (int i = n - 2; i >= 0; --i) place_[i] = place_[i + 1] * pres_.p;
  order_ = std::uint64_t{place_[0]} * pres_.p;
  // A structurally broken presentation would send the collector into a loop.
  if (structural_problems(pres_).empty() && order_ <= options_.max_elements) build_table();
}

void PcGroup::require_enumerable(std::string_view what) const {
  if (!enumerable())
    throw CapExceeded(std::string(what) + ": group order " + std::to_string(order_) +
                      " exceeds the element cap " + std::to_string(options_.max_elements));
}

Element PcGroup::generator(int i) const {
  assert(i >= 0 && i < n());
  return Element{place_[i]};
}

Element PcGroup::element(std::span<const int> exponents) const {
  assert(exponents.size() == static_cast<std::size_t>(n()));
  std::uint32_t id = 0;
  for (int i = 0; i < n(); ++i) id += static_cast<std::uint32_t>(exponents[i]) * place_[i];
  return Element{id};
}

Exponents PcGroup::exponents(Element x) const {
  Exponents e(n());
  std::uint32_t id = x.id;
  for (int i = n() - 1; i >= 0; --i) {
    e[i] = static_cast<int>(id % pres_.p);
    id /= pres_.p;
  }
  return e;
}

std::vector<Element> PcGroup::elements() const {
  require_enumerable("element listing");
  std::vector<Element> out(order_);
  for (std::uint32_t i = 0; i < order_; ++i) out[i] = Element{i};
  return out;
}

// Collection from the left. For x = head * tail with head on g_1..g_k and tail
// on g_{k+1}..g_n:  x g_k = head g_k * tail^{g_k}, where
// tail^{g_k} = prod_j (g_j [g_j, g_k])^{e_j} lives in <g_{k+1}, ..., g_n>.
// An overflowing g_k exponent is replaced by the power relation word.
Exponents PcGroup::collect_times_generator(Exponents x, int k) const {
  if (!right_gen_.empty() && !right_gen_[k].empty()) {
    return exponents(Element{right_gen_[k][element(x).id]});
  }
  const int n = pres_.n;
  Exponents conj(n, 0);
  for (int j = k + 1; j < n; ++j) {
    for (int r = 0; r < x[j]; ++r) {
      conj = collect_times_generator(std::move(conj), j);
      conj = collect_multiply(std::move(conj), pres_.comm(j, k));
    }
  }
  for (int j = k + 1; j < n; ++j) x[j] = 0;
  if (x[k] + 1 < static_cast<int>(pres_.p)) {
    ++x[k];
  } else {
    x[k] = 0;
    conj = collect_multiply(pres_.power[k], conj);
  }
  for (int j = k + 1; j < n; ++j) x[j] = conj[j];
  return x;
}

Exponents PcGroup::collect_multiply(Exponents x, const Exponents& y) const {
  for (int i = 0; i < pres_.n; ++i)
    for (int r = 0; r < y[i]; ++r) x = collect_times_generator(std::move(x), i);
  return x;
}

void PcGroup::build_table() {
  const int n = pres_.n;
  const std::uint32_t p = pres_.p;
  const auto order = static_cast<std::uint32_t>(order_);
  right_gen_.assign(n, {});
  // Table-driven product for elements whose support lies strictly after the
  // rows already built.
  auto mul = [&](std::uint32_t a, std::uint32_t b) {
    for (int i = 0; i < n; ++i) {
      std::uint32_t e = (b / place_[i]) % p;
      for (std::uint32_t r = 0; r < e; ++r) a = right_gen_[i][a];
    }
    return a;
  };
  for (int k = n - 1; k >= 0; --k) {
    const std::uint32_t tail_size = place_[k];
    // conj[t] = t^{g_k} for t in <g_{k+1}, ..., g_n>; conjugation is an
    // automorphism, so peel off the leading generator of t.
    std::vector<std::uint32_t> conj(tail_size), pow_conj(tail_size);
    conj[0] = 0;
    std::vector<std::uint32_t> image_of(n, 0);
    for (int j = k + 1; j < n; ++j)
      image_of[j] = mul(place_[j], element(pres_.comm(j, k)).id);
    for (std::uint32_t t = 1; t < tail_size; ++t) {
      int j = k + 1;
      while ((t / place_[j]) % p == 0) ++j;
      conj[t] = mul(image_of[j], conj[t - place_[j]]);
    }
    const std::uint32_t pw = element(pres_.power[k]).id;
    for (std::uint32_t t = 0; t < tail_size; ++t) pow_conj[t] = mul(pw, conj[t]);
    std::vector<std::uint32_t> row(order);
    for (std::uint32_t x = 0; x < order; ++x) {
      std::uint32_t tail = x % tail_size;
      std::uint32_t head = x / tail_size;
      if (head % p + 1 < p)
        row[x] = (head + 1) * tail_size + conj[tail];
      else
        row[x] = (head - (p - 1)) * tail_size + pow_conj[tail];
    }
    right_gen_[k] = std::move(row);
  }
}

Element PcGroup::multiply(Element a, Element b) const {
  if (!enumerable()) return element(collect_multiply(exponents(a), exponents(b)));
  const std::uint32_t p = pres_.p;
  std::uint32_t x = a.id;
  const std::uint32_t y = b.id;
  for (int i = 0; i < pres_.n; ++i) {
    std::uint32_t e = (y / place_[i]) % p;
    for (std::uint32_t r = 0; r < e; ++r) x = right_gen_[i][x];
  }
  return Element{x};
}

Element PcGroup::power(Element a, std::uint64_t k) const {
  Element result = identity();
  Element base = a;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    k >>= 1;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

std::uint64_t PcGroup::order_of(Element a) const {
  std::uint64_t ord = 1;
  while (a != identity()) {
    a = power(a, pres_.p);
    ord *= pres_.p;
  }
  return ord;
}

Element PcGroup::inverse(Element a) const { return power(a, order_of(a) - 1); }

Element PcGroup::commutator(Element a, Element b) const {
  return multiply(inverse(multiply(b, a)), multiply(a, b));
}

Element PcGroup::conjugate(Element a, Element g) const {
  return multiply(inverse(g), multiply(a, g));
}

std::vector<std::string> PcGroup::overlap_failures() const {
  std::vector<std::string> failures;
  const int n = pres_.n;
  const int p = static_cast<int>(pres_.p);
  auto unit = [&](int i, int e) {
    Exponents x(n, 0);
    x[i] = e;
    return x;
  };
  auto mul = [&](const Exponents& a, const Exponents& b) { return collect_multiply(a, b); };
  auto report = [&](const std::string& overlap, const Exponents& lhs, const Exponents& rhs) {
    if (lhs != rhs)
      failures.push_back("overlap " + overlap + ": " + format_exponents(lhs) + " != " +
                         format_exponents(rhs));
  };
  auto g = [](int i) { return "g" + std::to_string(i + 1); };
  auto gp = [&](int i) { return g(i) + "^" + std::to_string(p); };
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < j; ++i)
        report("(" + g(k) + " " + g(j) + ") " + g(i), mul(mul(unit(k, 1), unit(j, 1)), unit(i, 1)),
               mul(unit(k, 1), mul(unit(j, 1), unit(i, 1))));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      report("(" + gp(j) + ") " + g(i), mul(pres_.power[j], unit(i, 1)),
             mul(unit(j, p - 1), mul(unit(j, 1), unit(i, 1))));
      report(g(j) + " (" + gp(i) + ")", mul(unit(j, 1), pres_.power[i]),
             mul(mul(unit(j, 1), unit(i, 1)), unit(i, p - 1)));
    }
  for (int i = 0; i < n; ++i)
    report(g(i) + " " + gp(i), mul(unit(i, 1), pres_.power[i]), mul(pres_.power[i], unit(i, 1)));
  return failures;
}

std::string PcGroup::format(Element x) const { return format_exponents(exponents(x)); }

}  // namespace pquad
