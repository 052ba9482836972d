#pragma once

// Finite p-groups given by power-commutator presentations.
//
// Generators are 0-based internally and 1-based in files and printed output.
// Elements are stored by normal-form index: the exponent vector (e_1, ..., e_n)
// read as a base-p number with e_1 most significant, so sorting indices sorts
// normal forms lexicographically.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pquad {

inline constexpr std::size_t kDefaultMaxElements = 1'000'000;

using Exponents = std::vector<int>;

struct PcPresentation {
  std::uint32_t p = 0;
  int n = 0;
  /// power[i] is the normal form of g_i^p.
  std::vector<Exponents> power;
  /// commutator[i][j] (j < i) is the normal form of [g_i, g_j].
  std::vector<std::vector<Exponents>> commutator;
  std::vector<int> weight;

  /// All relations trivial, weights 1..n.
  static PcPresentation with_trivial_relations(std::uint32_t p, int n);

  const Exponents& comm(int i, int j) const { return commutator[i][j]; }
  Exponents& comm(int i, int j) { return commutator[i][j]; }
};

/// Parses the .pcp text format. Omitted relations are trivial. The result is
/// not yet checked for consistency.
PcPresentation parse_pcp(std::string_view text);
/// Writes the .pcp format; trivial relations are omitted and a weights line is
/// written only when the weights differ from 1..n.
std::string write_pcp(const PcPresentation& pres);

bool is_prime(std::uint64_t v);

struct ValidationReport {
  bool consistent = false;
  int order_exponent = 0;
  std::vector<std::string> problems;
};

ValidationReport validate_consistency(const PcPresentation& pres,
                                      std::size_t max_elements = kDefaultMaxElements);

struct Element {
  std::uint32_t id = 0;
  friend auto operator<=>(Element, Element) = default;
};

class PcGroup {
 public:
  struct Options {
    std::size_t max_elements = kDefaultMaxElements;
  };

  /// Validates and throws InputError/InconsistentPresentation on failure.
  explicit PcGroup(PcPresentation pres) : PcGroup(std::move(pres), Options{}) {}
  PcGroup(PcPresentation pres, Options options);

  const PcPresentation& presentation() const { return pres_; }
  std::uint32_t p() const { return pres_.p; }
  int n() const { return pres_.n; }
  std::uint64_t order() const { return order_; }
  std::size_t max_elements() const { return options_.max_elements; }

  /// True when the group fits under the element cap and the generator
  /// multiplication table has been built.
  bool enumerable() const { return !right_gen_.empty(); }
  /// Throws CapExceeded if the group is not enumerable.
  void require_enumerable(std::string_view what) const;

  Element identity() const { return Element{0}; }
  Element generator(int i) const;
  Element element(std::span<const int> exponents) const;
  Exponents exponents(Element x) const;
  std::vector<Element> elements() const;

  Element multiply(Element a, Element b) const;
  Element inverse(Element a) const;
  Element power(Element a, std::uint64_t k) const;
  /// [a, b] = a^-1 b^-1 a b
  Element commutator(Element a, Element b) const;
  /// a^g = g^-1 a g
  Element conjugate(Element a, Element g) const;
  /// Least p^k with a^(p^k) = 1.
  std::uint64_t order_of(Element a) const;
  bool commute(Element a, Element b) const { return multiply(a, b) == multiply(b, a); }

  /// Failing overlap descriptions; empty for a consistent presentation.
  std::vector<std::string> overlap_failures() const;

  std::string format(Element x) const;

 private:
  struct Unchecked {};
  PcGroup(PcPresentation pres, Options options, Unchecked);
  friend ValidationReport validate_consistency(const PcPresentation&, std::size_t);

  Exponents collect_times_generator(Exponents x, int k) const;
  Exponents collect_multiply(Exponents x, const Exponents& y) const;
  void build_table();

  PcPresentation pres_;
  Options options_;
  std::uint64_t order_ = 1;
  std::vector<std::uint32_t> place_;  // place_[i] = p^(n-1-i)
  std::vector<std::vector<std::uint32_t>> right_gen_;  // right_gen_[k][x] = x * g_k
};

using GroupPtr = std::shared_ptr<const PcGroup>;

}  // namespace pquad
