#include <random>

#include "doctest.h"
#include "pquad/errors.hpp"
#include "pquad/modrep.hpp"
#include "test_support.hpp"

using namespace pquad;
using namespace pquad::testing;

namespace {

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

// Fixed vectors of H found by applying every element of H to every vector.
std::size_t brute_fixed_count(const Representation& rho, const Subgroup& h) {
  std::vector<Matrix> mats;
  for (Element x : h.elements()) mats.push_back(rho.matrix(x));
  std::size_t count = 0;
  for (const auto& v : all_vectors(rho.p(), rho.dim())) {
    bool fixed = true;
    for (const auto& m : mats) fixed = fixed && m.apply(v) == v;
    if (fixed) ++count;
  }
  return count;
}

std::size_t pow_size(Scalar p, std::size_t k) {
  std::size_t r = 1;
  while (k--) r *= p;
  return r;
}

Matrix unit(Scalar p, std::size_t d, std::size_t r, std::size_t c) {
  Matrix m = Matrix::identity(p, d);
  m(r, c) = 1;
  return m;
}

}  // namespace

TEST_CASE("natural unitriangular module on heisenberg") {
  auto g = heisenberg3();
  auto rho = Representation::natural_unitriangular(g);
  CHECK(rho.dim() == 3);
  CHECK_FALSE(rho.is_permutation());
  CHECK(rho.generator_matrix(0) == unit(3, 3, 0, 1));
  CHECK(rho.generator_matrix(1) == unit(3, 3, 1, 2));
  Matrix c = rho.generator_matrix(2);
  Matrix minus = Matrix::identity(3, 3);
  minus(0, 2) = 2;
  CHECK((c == unit(3, 3, 0, 2) || c == minus));
  CHECK(rho.is_faithful());

  Subgroup h13 = sub(*g, {g->generator(0), g->generator(2)});
  Subgroup h23 = sub(*g, {g->generator(1), g->generator(2)});
  auto f13 = rho.fixed_space(h13);
  CHECK(f13.dim() == 1);
  CHECK(f13.contains(Vector{1, 0, 0}));
  auto f23 = rho.fixed_space(h23);
  CHECK(f23.dim() == 2);
  CHECK(f23.contains(Vector{1, 0, 0}));
  CHECK(f23.contains(Vector{0, 1, 0}));
  CHECK(rho.j_exponent(h13) == 0);
  CHECK(rho.j_exponent(h23) == 1);
  CHECK(rho.j_exponent(Subgroup{}) == 0);

  CHECK(f23.contains(rho.commutator_space(h23)));
  CHECK(rho.commutator_space(h13, 2).is_zero());
  CHECK(rho.is_quadratic_subgroup(h13));
  CHECK(rho.is_quadratic_subgroup(h23));
  CHECK(rho.commutator_space(Subgroup{}).is_zero());

  CHECK(rho.is_quadratic_element(g->generator(2)));
  CHECK(rho.unipotent_minpoly_degree(g->generator(2)) == 2);
  CHECK_FALSE(rho.is_quadratic_element(g->identity()));
  CHECK(rho.unipotent_minpoly_degree(g->identity()) == 1);
  // g1 g2 acts as I + E12 + E23 + E13, minimal polynomial (X - 1)^3
  CHECK(rho.unipotent_minpoly_degree(g->multiply(g->generator(0), g->generator(1))) == 3);
}

TEST_CASE("regular and permutation modules") {
  auto c3 = from_text("3 1\n");
  auto reg = Representation::regular(c3);
  CHECK(reg.dim() == 3);
  CHECK(reg.is_permutation());
  CHECK(reg.is_faithful());

  auto g = heisenberg3();
  auto whole = Representation::permutation(g, whole_group(*g));
  CHECK(whole.dim() == 1);
  CHECK_FALSE(whole.is_faithful());
  CHECK(whole.acts_trivially(g->generator(0)));

  auto r = Representation::regular(g);
  CHECK(r.dim() == 27);
  CHECK(r.is_faithful());
  for (Element x : g->elements()) {
    Subgroup h = sub(*g, {x});
    // orbits of H on G by left multiplication: |G| / |H|
    CHECK(r.fixed_dim(h) == 27 / h.order());
    CHECK(r.fixed_space(h).dim() == 27 / h.order());
    CHECK(r.commutator_space(h).dim() == 27 - 27 / h.order());
    CHECK(r.unipotent_minpoly_degree(x) == g->order_of(x));
    CHECK_FALSE(r.is_quadratic_element(x));
  }
  for (const auto& m : maximal_subgroups(*g)) {
    auto perm = Representation::permutation(g, m);
    CHECK(perm.dim() == 3);
    CHECK_FALSE(perm.is_faithful());
  }
}

TEST_CASE("permutation fast paths agree with dense computations") {
  auto g = make_group(Family::wreath, 3, 4);
  Subgroup h = sub(*g, {g->generator(0)});
  auto perm = Representation::permutation(g, h);
  // same module with the matrices perturbed into a non-permutation basis
  Matrix basis = Matrix::identity(3, perm.dim());
  basis(0, 1) = 1;
  Matrix binv = *inverse(basis);
  std::vector<Matrix> conj;
  for (int i = 0; i < g->n(); ++i) conj.push_back(binv * perm.generator_matrix(i) * basis);
  Representation dense(g, conj);
  CHECK_FALSE(dense.is_permutation());
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    Element x = random_element(*g, rng);
    Subgroup k = sub(*g, {x, random_element(*g, rng)});
    CHECK(perm.fixed_dim(k) == dense.fixed_dim(k));
    CHECK(perm.commutator_space(k).dim() == dense.commutator_space(k).dim());
    CHECK(perm.commutator_space(k, 2).dim() == dense.commutator_space(k, 2).dim());
    CHECK(perm.unipotent_minpoly_degree(x) == dense.unipotent_minpoly_degree(x));
    CHECK(perm.is_quadratic_subgroup(k) == dense.is_quadratic_subgroup(k));
    CHECK(perm.is_quadratic_element(x) == dense.is_quadratic_element(x));
  }
}

TEST_CASE("natural affine modules") {
  for (auto [f, n] : {std::pair{Family::padic, 3}, std::pair{Family::padic, 4}, std::pair{Family::wreath, 4}}) {
    auto g = make_group(f, 3, n);
    if (f == Family::padic && n == 4) {
      // translations of padic(3,4) have exponent 9
      CHECK_THROWS_AS(Representation::natural_affine(g), HypothesisViolation);
      continue;
    }
    auto rho = Representation::natural_affine(g);
    CHECK(rho.dim() == static_cast<std::size_t>(n));
    CHECK(rho.is_faithful());
    Subgroup z = center(*g);
    CHECK(rho.is_quadratic_element(z.generators().front()));
    std::vector<Element> tgens;
    for (int k = 1; k < n; ++k) tgens.push_back(g->generator(k));
    Subgroup t = closure(*g, tgens);
    CHECK(rho.fixed_dim(t) == static_cast<std::size_t>(n - 1));
    CHECK(rho.j_exponent(t) == n - 2);
    CHECK(rho.is_quadratic_subgroup(t));
  }
  CHECK_THROWS_AS(Representation::natural_unitriangular(make_group(Family::wreath, 3, 4)), HypothesisViolation);
}

TEST_CASE("property: fixed spaces match a brute-force vector scan") {
  std::mt19937_64 rng(10);
  std::vector<Representation> mods{Representation::natural_unitriangular(heisenberg3()),
                                   Representation::natural_affine(make_group(Family::wreath, 3, 4)),
                                   Representation::natural_affine(make_group(Family::padic, 3, 3)),
                                   Representation::permutation(heisenberg3(), sub(*heisenberg3(), {}))};
  for (const auto& rho : mods) {
    const auto& g = rho.group();
    if (rho.dim() > 6) continue;
    for (int t = 0; t < 25; ++t) {
      Subgroup h = sub(g, {random_element(g, rng), random_element(g, rng)});
      CHECK(pow_size(rho.p(), rho.fixed_space(h).dim()) == brute_fixed_count(rho, h));
    }
  }
}

TEST_CASE("property: monotonicity, quadratic criterion, minpoly bound") {
  std::mt19937_64 rng(11);
  std::vector<Representation> mods{Representation::natural_unitriangular(heisenberg3()),
                                   Representation::natural_affine(make_group(Family::wreath, 3, 4)),
                                   Representation::regular(make_group(Family::padic, 3, 4))};
  for (const auto& rho : mods) {
    const auto& g = rho.group();
    CHECK(rho.j_exponent(Subgroup{}) == 0);
    for (int t = 0; t < 25; ++t) {
      Element x = random_element(g, rng);
      Subgroup h = sub(g, {x});
      Subgroup k = sub(g, {x, random_element(g, rng)});
      CHECK(rho.fixed_space(h).contains(rho.fixed_space(k)));
      CHECK(rho.commutator_space(k).contains(rho.commutator_space(h)));
      if (is_abelian(g, k))
        CHECK(rho.fixed_space(k).contains(rho.commutator_space(k)) == rho.is_quadratic_subgroup(k));
      CHECK(rho.unipotent_minpoly_degree(x) <= rho.dim());
      if (rho.is_faithful() && rho.is_quadratic_element(x)) CHECK(g.order_of(x) == g.p());
    }
  }
}

TEST_CASE("mat format") {
  auto g = heisenberg3();
  auto rho = Representation::natural_unitriangular(g);
  auto text = write_mat(rho.to_mat());
  auto mat = parse_mat(text);
  CHECK(mat.p == 3);
  CHECK(mat.d == 3);
  REQUIRE(mat.matrices.size() == 3);
  Representation back(g, mat);
  for (int i = 0; i < 3; ++i) CHECK(back.generator_matrix(i) == rho.generator_matrix(i));

  CHECK_THROWS_AS(parse_mat("3 2 1\n1 0\n"), InputError);
  CHECK_THROWS_AS(parse_mat("3 2 1\n1 0\n0 5\n"), ParseError);
  CHECK_THROWS_AS(parse_mat("4 2 1\n1 0\n0 1\n"), ParseError);
  auto five = parse_mat("5 3 3\n1 0 0\n0 1 0\n0 0 1\n1 0 0\n0 1 0\n0 0 1\n1 0 0\n0 1 0\n0 0 1\n");
  CHECK_THROWS_AS(Representation(g, five), InputError);

  // g1 -> I + E12, g2 -> I + E23, g3 -> I breaks [g2, g1] = g3
  MatFile wrong = rho.to_mat();
  wrong.matrices[2] = Matrix::identity(3, 3);
  CHECK_THROWS_AS(Representation(g, wrong), RelationViolation);
  MatFile singular = rho.to_mat();
  singular.matrices[0] = Matrix(3, 3, 3);
  CHECK_THROWS_AS(Representation(g, singular), RelationViolation);
}
