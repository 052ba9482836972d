#pragma once
// Modules over GF(p): column vectors, left action, [v, g] = rho(g) v - v.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pquad/gfp.hpp"
#include "pquad/pcgroup.hpp"
#include "pquad/subgroup.hpp"

namespace pquad {

/// Contents of a .mat file: one d x d matrix per pc generator.
struct MatFile {
  Scalar p = 0;
  std::size_t d = 0;
  std::vector<Matrix> matrices;
};

MatFile parse_mat(std::string_view text);
std::string write_mat(const MatFile& mat);

/// A point permutation: perm[i] is the image of point i.
using Permutation = std::vector<std::uint32_t>;

class Representation {
 public:
  /// Checks invertibility and every power/commutator relation; throws
  /// RelationViolation naming the first failing relation.
  Representation(GroupPtr group, std::vector<Matrix> generators);
  Representation(GroupPtr group, const MatFile& mat);

  /// Left multiplication on the group elements.
  static Representation regular(GroupPtr group);
  /// Action on the left cosets xH.
  static Representation permutation(GroupPtr group, const Subgroup& h);
  /// Homogeneous affine module for s acting on exponent-p translations x^0..x^(m-1)
  /// by 1 + x (wreath(p), padic(p, n) with n <= p). Dimension n.
  static Representation natural_affine(GroupPtr group);
  /// g1 -> I + E12, g2 -> I + E23 on a group of order p^3.
  static Representation natural_unitriangular(GroupPtr group);
  /// Contragredient module: g -> rho(g^-1)^T.
  static Representation dual(const Representation& rho);

  const PcGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  Scalar p() const { return group_->p(); }
  std::size_t dim() const { return dim_; }
  Matrix generator_matrix(int i) const;
  MatFile to_mat() const;

  /// True when every generator acts by a permutation matrix.
  bool is_permutation() const { return !perms_.empty(); }

  Matrix matrix(Element x) const;
  Vector apply(Element x, std::span<const Scalar> v) const;
  bool acts_trivially(Element x) const;

  bool is_faithful() const;

  /// C_V(H)
  Subspace fixed_space(const Subgroup& h) const;
  std::size_t fixed_dim(const Subgroup& h) const;
  /// [V, H, ..., H] with k copies of H.
  Subspace commutator_space(const Subgroup& h, int k = 1) const;
  /// log_p |H| + dim C_V(H) - dim V
  int j_exponent(const Subgroup& h) const;

  /// Least k >= 1 with (rho(x) - I)^k = 0; throws InternalInconsistency when
  /// rho(x) is not unipotent.
  std::size_t unipotent_minpoly_degree(Element x) const;
  bool is_quadratic_element(Element x) const;
  bool is_quadratic_subgroup(const Subgroup& h) const;

 private:
  Representation(GroupPtr group, std::size_t dim, std::vector<Permutation> perms);
  void validate() const;
  Permutation permutation_of(Element x) const;
  /// Orbits of H on points, each sorted, listed by least point.
  std::vector<std::vector<std::uint32_t>> orbits(const Subgroup& h) const;

  Matrix word_matrix(const Exponents& e) const;
  Permutation word_permutation(const Exponents& e) const;

  GroupPtr group_;
  std::size_t dim_ = 0;
  // Dense matrices are kept only for non-permutation modules.
  std::vector<Matrix> gens_;
  std::vector<Permutation> perms_;
};

}  // namespace pquad
