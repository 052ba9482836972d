#include <random>

#include "doctest.h"
#include "pquad/gfp.hpp"

using namespace pquad;

namespace {

Matrix random_matrix(Scalar p, std::size_t r, std::size_t c, std::mt19937_64& rng, int zero_bias = 0) {
  Matrix m(p, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = (rng() % (p + zero_bias)) % p * (rng() % 3 != 0);
  return m;
}

// All vectors of GF(p)^d, enumerated.
std::vector<Vector> all_vectors(Scalar p, std::size_t d) {
  std::vector<Vector> out;
  Vector v(d, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < d && ++v[i] == p) v[i++] = 0;
    if (i == d) break;
  }
  return out;
}

std::size_t count_members(const Subspace& s) {
  std::size_t count = 0;
  for (const auto& v : all_vectors(s.prime(), s.ambient_dim()))
    if (s.contains(v)) ++count;
  return count;
}

}  // namespace

TEST_CASE("inverse_mod") {
  for (Scalar p : {3u, 5u, 7u, 11u})
    for (Scalar a = 1; a < p; ++a) CHECK(a * inverse_mod(a, p) % p == 1);
  CHECK_THROWS(inverse_mod(0, 5));
}

TEST_CASE("kernel agrees with a brute-force scan") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Scalar p = trial % 2 ? 3 : 5;
    std::size_t d = 2 + trial % 3;
    Matrix m = random_matrix(p, 1 + trial % 4, d, rng);
    Subspace k = Subspace::kernel(m);
    std::size_t brute = 0;
    for (const auto& v : all_vectors(p, d)) {
      auto mv = m.apply(v);
      bool zero = std::all_of(mv.begin(), mv.end(), [](Scalar x) { return x == 0; });
      if (zero) ++brute;
      CHECK(k.contains(v) == zero);
    }
    std::size_t expected = 1;
    for (std::size_t i = 0; i < k.dim(); ++i) expected *= p;
    CHECK(brute == expected);
  }
}

TEST_CASE("intersection and sum follow the dimension formula") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Scalar p = 3;
    std::size_t d = 4;
    Subspace a = Subspace::span(random_matrix(p, 2, d, rng));
    Subspace b = Subspace::span(random_matrix(p, 2, d, rng));
    Subspace meet = a.intersect(b);
    Subspace sum = a + b;
    CHECK(meet.dim() + sum.dim() == a.dim() + b.dim());
    CHECK(a.contains(meet));
    CHECK(b.contains(meet));
    CHECK(sum.contains(a));
    std::size_t brute = 0;
    for (const auto& v : all_vectors(p, d))
      if (a.contains(v) && b.contains(v)) ++brute;
    CHECK(brute == count_members(meet));
  }
}

TEST_CASE("echelon basis is canonical") {
  Scalar p = 5;
  Matrix rows(p, 2, 3);
  rows(0, 0) = 1, rows(0, 1) = 2, rows(0, 2) = 3;
  rows(1, 0) = 0, rows(1, 1) = 1, rows(1, 2) = 1;
  Matrix other(p, 2, 3);
  other(0, 0) = 3, other(0, 1) = 2, other(0, 2) = 0;  // 3*row0 + row1
  other(1, 0) = 0, other(1, 1) = 2, other(1, 2) = 2;  // 2*row1
  CHECK(Subspace::span(rows) == Subspace::span(other));
  CHECK(Subspace::span(rows).dim() == 2);
}

TEST_CASE("matrix inverse and powers") {
  std::mt19937_64 rng(3);
  int invertible = 0;
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m = random_matrix(7, 4, 4, rng);
    auto inv = inverse(m);
    CHECK(inv.has_value() == (rank(m) == 4));
    if (inv) {
      ++invertible;
      CHECK((m * *inv).is_identity());
      CHECK(m.pow(0).is_identity());
      CHECK(m.pow(3) == m * m * m);
    }
  }
  CHECK(invertible > 0);
}

TEST_CASE("perp is an involution") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Subspace a = Subspace::span(random_matrix(3, 1 + trial % 3, 5, rng));
    CHECK(a.perp().perp() == a);
    CHECK(a.perp().dim() + a.dim() == 5);
  }
  CHECK(Subspace::zero(3, 4).perp() == Subspace::whole(3, 4));
}
