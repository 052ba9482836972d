#include "pquad/maxclass.hpp"

#include <algorithm>
#include <cstdint>

#include "pquad/errors.hpp"

namespace pquad {

MaxClassProfile profile(const PcGroup& g) {
  const int n = g.n();
  if (n < 3) throw HypothesisViolation("maximal class is only defined here for order p^n with n >= 3");
  MaxClassProfile prof;
  prof.n = n;
  prof.series = central_series(g);
  prof.nilpotency_class = prof.series.nilpotency_class;
  prof.is_maximal_class = prof.nilpotency_class == n - 1;
  if (!prof.is_maximal_class) return prof;

  const auto& s = prof.series;
  prof.g1_centralizer = section_centralizer(g, s.lcs(2), s.lcs(4));
  const Subgroup& g1 = *prof.g1_centralizer;
  prof.g1_abelian = is_abelian(g, g1);
  for (int i = 3; i <= n - 2; ++i) {
    prof.two_step_centralizers.push_back(section_centralizer(g, s.lcs(i), s.lcs(i + 2)));
    if (n >= 5 && !(prof.two_step_centralizers.back() == g1)) prof.exceptional = true;
  }
  prof.omega1_g1 = omega1(g, g1);

  if (prof.g1_abelian) {
    prof.degree_of_commutativity = n - 3;
    return prof;
  }
  // Index 1 stands for the two-step centralizer, i >= 2 for G_i.
  auto term = [&](int i) -> const Subgroup& { return i == 1 ? g1 : s.lcs(i); };
  const int top = n - 1;
  std::vector<std::vector<Subgroup>> comm(top + 1, std::vector<Subgroup>(top + 1));
  for (int i = 1; i <= top; ++i)
    for (int j = i; j <= top; ++j) comm[i][j] = commutator_subgroup(g, term(i), term(j));
  for (int l = n - 3; l >= 0; --l) {
    bool ok = true;
    for (int i = 1; i <= top && ok; ++i)
      for (int j = i; j <= top && ok; ++j)
        if (!comm[i][j].is_subgroup_of(s.lcs(i + j + l))) ok = false;
    if (ok) {
      prof.degree_of_commutativity = l;
      break;
    }
  }
  return prof;
}

ScopeVerdict maximal_class_scope(std::uint32_t p, int n) {
  const long long bound = std::max<long long>(2LL * p - 6, static_cast<long long>(p) + 2);
  ScopeVerdict v;
  if (n <= 8) {
    v.covered = true;
    v.reason = "n <= 8";
  } else if (n >= bound) {
    v.covered = true;
    v.reason = "n >= max(2p-6, p+2) = " + std::to_string(bound);
  } else {
    v.reason = "9 <= n < max(2p-6, p+2) = " + std::to_string(bound);
  }
  return v;
}

Family parse_family(std::string_view name) {
  if (name == "heisenberg") return Family::heisenberg;
  if (name == "wreath") return Family::wreath;
  if (name == "padic") return Family::padic;
  throw InputError("unknown family '" + std::string(name) + "' (expected heisenberg, wreath, padic)");
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::heisenberg:
      return "heisenberg";
    case Family::wreath:
      return "wreath";
    case Family::padic:
      return "padic";
  }
  return "?";
}

std::optional<int> default_order_exponent(Family family, std::uint32_t p) {
  switch (family) {
    case Family::heisenberg:
      return 3;
    case Family::wreath:
      return static_cast<int>(p) + 1;
    case Family::padic:
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

// Digit expansion in R = Z[x]/(Phi_p(1+x), x^m): every element is uniquely
// sum a_k x^k with 0 <= a_k < p. In R, p = -x^(p-1) w(x) where w is the
// inverse of u(x) = Phi_p(1+x) - x^(p-1) divided by p, so a carry at x^j
// moves to degrees >= j + p - 1.
class PiAdicDigits {
 public:
  PiAdicDigits(std::uint32_t p, int m, bool characteristic_p) : p_(p), m_(m), char_p_(characteristic_p) {
    if (char_p_) return;
    // u_k = C(p, k+1) / p for k = 0..p-2
    std::vector<std::int64_t> u(m_, 0);
    std::int64_t binom = 1;  // C(p, k)
    for (std::uint32_t k = 1; k < p_; ++k) {
      binom = binom * (p_ - k + 1) / k;
      if (static_cast<int>(k - 1) < m_) u[k - 1] = binom / p_;
    }
    // w = u^{-1} mod x^m (u_0 = 1)
    w_.assign(m_, 0);
    if (m_ > 0) w_[0] = 1;
    for (int k = 1; k < m_; ++k) {
      std::int64_t acc = 0;
      for (int t = 1; t <= k; ++t) acc += u[t] * w_[k - t];
      w_[k] = -acc;
    }
  }

  Exponents normalize(std::vector<std::int64_t> c) const {
    const auto p = static_cast<std::int64_t>(p_);
    for (int j = 0; j < m_; ++j) {
      std::int64_t q = c[j] / p;
      std::int64_t a = c[j] - q * p;
      if (a < 0) {
        a += p;
        --q;
      }
      c[j] = a;
      if (q == 0 || char_p_) continue;
      for (int t = 0; j + static_cast<int>(p_) - 1 + t < m_; ++t)
        c[j + p_ - 1 + t] -= q * w_[t];
    }
    Exponents out(m_);
    for (int j = 0; j < m_; ++j) out[j] = static_cast<int>(c[j]);
    return out;
  }

 private:
  std::uint32_t p_;
  int m_;
  bool char_p_;
  std::vector<std::int64_t> w_;
};

// s acting on an abelian group with digit basis x^0..x^(m-1) by 1 + x.
PcPresentation translation_extension(std::uint32_t p, int m, bool characteristic_p) {
  const int n = m + 1;
  auto pres = PcPresentation::with_trivial_relations(p, n);
  PiAdicDigits digits(p, m, characteristic_p);
  auto embed = [&](const Exponents& d) {
    Exponents w(n, 0);
    for (int k = 0; k < m; ++k) w[k + 1] = d[k];
    return w;
  };
  for (int k = 0; k < m; ++k) {
    std::vector<std::int64_t> c(m, 0);
    c[k] = p;
    pres.power[k + 1] = embed(digits.normalize(c));
    // [x^k, s] = (zeta - 1) x^k = x^(k+1)
    if (k + 1 < m) pres.comm(k + 1, 0)[k + 2] = 1;
  }
  return pres;
}

}  // namespace

PcPresentation catalog(Family family, std::uint32_t p, int n) {
  if (p < 3 || !is_prime(p)) throw InputError(std::to_string(p) + " is not an odd prime");
  switch (family) {
    case Family::heisenberg: {
      if (n != 3) throw InputError("heisenberg family fixes n = 3");
      auto pres = PcPresentation::with_trivial_relations(p, 3);
      pres.comm(1, 0)[2] = 1;
      return pres;
    }
    case Family::wreath:
      if (n != static_cast<int>(p) + 1) throw InputError("wreath family fixes n = p + 1");
      return translation_extension(p, n - 1, true);
    case Family::padic:
      if (n < 3) throw InputError("padic family needs n >= 3");
      if (n > 31) throw InputError("padic family: n too large");
      return translation_extension(p, n - 1, false);
  }
  throw InputError("unsupported family");
}

}  // namespace pquad
