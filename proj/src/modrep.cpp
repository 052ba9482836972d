#include "pquad/modrep.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "pquad/errors.hpp"
#include "text.hpp"

namespace pquad {

namespace {

std::string relation_name(int i, int j) {
  if (j < 0) return "pow " + std::to_string(i + 1);
  return "comm " + std::to_string(i + 1) + " " + std::to_string(j + 1);
}

Permutation compose(const Permutation& a, const Permutation& b) {
  // (a o b)(i) = a(b(i))
  Permutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

Permutation invert(const Permutation& a) {
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<std::uint32_t>(i);
  return out;
}

Permutation perm_power(const Permutation& a, std::uint64_t k) {
  Permutation out(a.size());
  std::iota(out.begin(), out.end(), 0u);
  for (std::uint64_t t = 0; t < k; ++t) out = compose(a, out);
  return out;
}

std::optional<Permutation> as_permutation(const Matrix& m) {
  const std::size_t d = m.rows();
  Permutation perm(d);
  std::vector<bool> hit(d, false);
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t ones = 0;
    for (std::size_t r = 0; r < d; ++r) {
      Scalar v = m(r, c);
      if (v == 0) continue;
      if (v != 1 || ones++ > 0) return std::nullopt;
      perm[c] = static_cast<std::uint32_t>(r);
    }
    if (ones != 1 || hit[perm[c]]) return std::nullopt;
    hit[perm[c]] = true;
  }
  return perm;
}

Matrix permutation_matrix(Scalar p, const Permutation& perm) {
  Matrix m(p, perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) m(perm[i], i) = 1;
  return m;
}

std::vector<Matrix> checked_matrices(const PcGroup& g, const MatFile& mat) {
  if (mat.p != g.p())
    throw InputError("module is over GF(" + std::to_string(mat.p) + "), group is a " + std::to_string(g.p()) +
                     "-group");
  return mat.matrices;
}

}  // namespace

MatFile parse_mat(std::string_view text) {
  MatFile mat;
  bool have_header = false;
  std::size_t m = 0;
  Matrix current;
  std::size_t row = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = detail::split_ws(line);
    if (tokens.empty()) continue;
    if (!have_header) {
      if (tokens.size() != 3) throw ParseError(line_no, "header must be 'p d m'");
      auto p = detail::parse_int(tokens[0], line_no);
      auto d = detail::parse_int(tokens[1], line_no);
      auto count = detail::parse_int(tokens[2], line_no);
      if (p < 3 || p > 65521 || !is_prime(static_cast<std::uint64_t>(p)))
        throw ParseError(line_no, std::to_string(p) + " is not an odd prime");
      if (d < 1 || d > 100000) throw ParseError(line_no, "dimension out of range");
      if (count < 0 || count > 64) throw ParseError(line_no, "matrix count out of range");
      mat.p = static_cast<Scalar>(p);
      mat.d = static_cast<std::size_t>(d);
      m = static_cast<std::size_t>(count);
      current = Matrix(mat.p, mat.d, mat.d);
      have_header = true;
      continue;
    }
    if (mat.matrices.size() == m) throw ParseError(line_no, "more rows than the header announces");
    if (tokens.size() != mat.d)
      throw ParseError(line_no, "expected " + std::to_string(mat.d) + " entries, got " + std::to_string(tokens.size()));
    for (std::size_t c = 0; c < mat.d; ++c) {
      auto v = detail::parse_int(tokens[c], line_no);
      if (v < 0 || v >= static_cast<long long>(mat.p))
        throw ParseError(line_no, "entry " + std::to_string(v) + " out of range [0," + std::to_string(mat.p) + ")");
      current(row, c) = static_cast<Scalar>(v);
    }
    if (++row == mat.d) {
      mat.matrices.push_back(current);
      current = Matrix(mat.p, mat.d, mat.d);
      row = 0;
    }
  }
  if (!have_header) throw InputError("empty module file");
  if (mat.matrices.size() != m)
    throw InputError("module file ends early: expected " + std::to_string(m) + " matrices, got " +
                     std::to_string(mat.matrices.size()));
  return mat;
}

std::string write_mat(const MatFile& mat) {
  std::ostringstream out;
  out << mat.p << ' ' << mat.d << ' ' << mat.matrices.size() << '\n';
  for (std::size_t k = 0; k < mat.matrices.size(); ++k) {
    out << "# g" << k + 1 << '\n';
    const auto& a = mat.matrices[k];
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < a.cols(); ++c) out << (c ? " " : "") << a(r, c);
      out << '\n';
    }
  }
  return out.str();
}

Representation::Representation(GroupPtr group, std::vector<Matrix> generators) : group_(std::move(group)) {
  const auto& g = *group_;
  if (generators.size() != static_cast<std::size_t>(g.n()))
    throw InputError("module has " + std::to_string(generators.size()) + " matrices, group has " +
                     std::to_string(g.n()) + " generators");
  if (generators.empty()) throw InputError("module has no matrices");
  dim_ = generators[0].rows();
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto& a = generators[k];
    if (a.prime() != g.p())
      throw InputError("module is over GF(" + std::to_string(a.prime()) + "), group is a " + std::to_string(g.p()) +
                       "-group");
    if (a.rows() != dim_ || a.cols() != dim_) throw InputError("module matrices must all be square of one size");
  }
  std::vector<Permutation> perms;
  for (const auto& a : generators) {
    auto perm = as_permutation(a);
    if (!perm) break;
    perms.push_back(std::move(*perm));
  }
  if (perms.size() == generators.size()) {
    perms_ = std::move(perms);
  } else {
    for (std::size_t k = 0; k < generators.size(); ++k)
      if (!inverse(generators[k]))
        throw RelationViolation("matrix for g" + std::to_string(k + 1) + " is not invertible");
    gens_ = std::move(generators);
  }
  validate();
}

Representation::Representation(GroupPtr group, const MatFile& mat)
    : Representation(group, checked_matrices(*group, mat)) {}

Representation::Representation(GroupPtr group, std::size_t dim, std::vector<Permutation> perms)
    : group_(std::move(group)), dim_(dim), perms_(std::move(perms)) {
  validate();
}

Matrix Representation::word_matrix(const Exponents& e) const {
  Matrix out = Matrix::identity(p(), dim_);
  for (std::size_t k = 0; k < e.size(); ++k)
    if (e[k]) out = out * gens_[k].pow(e[k]);
  return out;
}

Permutation Representation::word_permutation(const Exponents& e) const {
  Permutation out(dim_);
  std::iota(out.begin(), out.end(), 0u);
  for (std::size_t k = 0; k < e.size(); ++k)
    if (e[k]) out = compose(out, perm_power(perms_[k], e[k]));
  return out;
}

void Representation::validate() const {
  const auto& pres = group_->presentation();
  const int n = pres.n;
  auto fail = [&](int i, int j) {
    throw RelationViolation("module violates relation " + relation_name(i, j));
  };
  if (is_permutation()) {
    std::vector<Permutation> inv(n);
    for (int i = 0; i < n; ++i) inv[i] = invert(perms_[i]);
    for (int i = 0; i < n; ++i) {
      if (perm_power(perms_[i], pres.p) != word_permutation(pres.power[i])) fail(i, -1);
      for (int j = 0; j < i; ++j) {
        auto lhs = compose(compose(inv[i], inv[j]), compose(perms_[i], perms_[j]));
        if (lhs != word_permutation(pres.comm(i, j))) fail(i, j);
      }
    }
    return;
  }
  std::vector<Matrix> inv(n);
  for (int i = 0; i < n; ++i) inv[i] = *inverse(gens_[i]);
  for (int i = 0; i < n; ++i) {
    if (gens_[i].pow(pres.p) != word_matrix(pres.power[i])) fail(i, -1);
    for (int j = 0; j < i; ++j)
      if (inv[i] * inv[j] * gens_[i] * gens_[j] != word_matrix(pres.comm(i, j))) fail(i, j);
  }
}

Representation Representation::regular(GroupPtr group) { return permutation(std::move(group), Subgroup{}); }

Representation Representation::permutation(GroupPtr group, const Subgroup& h) {
  const auto& g = *group;
  g.require_enumerable("permutation module");
  const auto order = static_cast<std::size_t>(g.order());
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> label(order, unset);
  std::uint32_t points = 0;
  for (std::uint32_t y = 0; y < order; ++y) {
    if (label[y] != unset) continue;
    for (Element x : h.elements()) label[g.multiply(Element{y}, x).id] = points;
    ++points;
  }
  // The least element of each coset is its representative; labels follow that order.
  std::vector<std::uint32_t> rep(points);
  for (std::uint32_t y = order; y-- > 0;) rep[label[y]] = y;
  std::vector<Permutation> perms(g.n(), Permutation(points));
  for (int k = 0; k < g.n(); ++k)
    for (std::uint32_t pt = 0; pt < points; ++pt)
      perms[k][pt] = label[g.multiply(g.generator(k), Element{rep[pt]}).id];
  return Representation(std::move(group), points, std::move(perms));
}

Representation Representation::natural_affine(GroupPtr group) {
  const auto& g = *group;
  const int n = g.n();
  const Scalar p = g.p();
  if (n < 2 || n > static_cast<int>(p) + 1)
    throw HypothesisViolation("natural affine module needs 2 <= n <= p + 1");
  const std::size_t m = n - 1;
  std::vector<Matrix> mats;
  // s acts by the inverse of multiplication by 1 + x, i.e. by sum (-x)^t.
  Matrix s = Matrix::identity(p, n);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t t = 1; k + t < m; ++t) s(k + t, k) = t % 2 ? p - 1 : 1;
  mats.push_back(s);
  for (std::size_t k = 0; k < m; ++k) {
    Matrix t = Matrix::identity(p, n);
    t(k, m) = 1;
    mats.push_back(t);
  }
  try {
    return Representation(std::move(group), std::move(mats));
  } catch (const RelationViolation& e) {
    throw HypothesisViolation(std::string("group is not an extension of exponent-p translations: ") + e.what());
  }
}

Representation Representation::natural_unitriangular(GroupPtr group) {
  const auto& g = *group;
  if (g.n() != 3) throw HypothesisViolation("natural unitriangular module needs a group of order p^3");
  const Scalar p = g.p();
  Matrix a = Matrix::identity(p, 3), b = Matrix::identity(p, 3);
  a(0, 1) = 1;
  b(1, 2) = 1;
  Matrix c = *inverse(b) * *inverse(a) * b * a;
  try {
    return Representation(std::move(group), std::vector<Matrix>{a, b, c});
  } catch (const RelationViolation& e) {
    throw HypothesisViolation(std::string("group does not match the unitriangular model: ") + e.what());
  }
}

Representation Representation::dual(const Representation& rho) {
  if (rho.is_permutation()) {
    // permutation matrices are orthogonal
    return Representation(rho.group_, rho.dim_, rho.perms_);
  }
  std::vector<Matrix> mats;
  for (const auto& a : rho.gens_) mats.push_back(inverse(a)->transpose());
  return Representation(rho.group_, std::move(mats));
}

Matrix Representation::generator_matrix(int i) const {
  return is_permutation() ? permutation_matrix(p(), perms_[i]) : gens_[i];
}

MatFile Representation::to_mat() const {
  MatFile mat{p(), dim_, {}};
  for (int i = 0; i < group_->n(); ++i) mat.matrices.push_back(generator_matrix(i));
  return mat;
}

Permutation Representation::permutation_of(Element x) const { return word_permutation(group_->exponents(x)); }

Matrix Representation::matrix(Element x) const {
  if (is_permutation()) return permutation_matrix(p(), permutation_of(x));
  return word_matrix(group_->exponents(x));
}

Vector Representation::apply(Element x, std::span<const Scalar> v) const {
  if (!is_permutation()) return matrix(x).apply(v);
  auto perm = permutation_of(x);
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[perm[i]] = v[i];
  return out;
}

bool Representation::acts_trivially(Element x) const {
  if (!is_permutation()) return matrix(x).is_identity();
  auto perm = permutation_of(x);
  for (std::size_t i = 0; i < dim_; ++i)
    if (perm[i] != i) return false;
  return true;
}

bool Representation::is_faithful() const {
  const auto& g = *group_;
  Subgroup z = omega1(g, center(g));
  return std::none_of(z.elements().begin() + 1, z.elements().end(), [&](Element x) { return acts_trivially(x); });
}

std::vector<std::vector<std::uint32_t>> Representation::orbits(const Subgroup& h) const {
  std::vector<Permutation> gens;
  for (Element x : h.generators()) gens.push_back(permutation_of(x));
  std::vector<bool> seen(dim_, false);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t start = 0; start < dim_; ++start) {
    if (seen[start]) continue;
    std::vector<std::uint32_t> orbit{start};
    seen[start] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& perm : gens) {
        auto y = perm[orbit[k]];
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

Subspace Representation::fixed_space(const Subgroup& h) const {
  if (h.generators().empty()) return Subspace::whole(p(), dim_);
  if (is_permutation()) {
    auto orbs = orbits(h);
    Matrix rows(p(), orbs.size(), dim_);
    for (std::size_t k = 0; k < orbs.size(); ++k)
      for (auto y : orbs[k]) rows(k, y) = 1;
    return Subspace::span(std::move(rows));
  }
  Matrix stacked(p(), 0, dim_);
  const Matrix id = Matrix::identity(p(), dim_);
  for (Element x : h.generators()) stacked.append_rows(matrix(x) - id);
  return Subspace::kernel(std::move(stacked));
}

std::size_t Representation::fixed_dim(const Subgroup& h) const {
  if (is_permutation()) return orbits(h).size();
  return fixed_space(h).dim();
}

Subspace Representation::commutator_space(const Subgroup& h, int k) const {
  if (h.generators().empty() || k <= 0) return k <= 0 ? Subspace::whole(p(), dim_) : Subspace::zero(p(), dim_);
  Subspace current;
  if (is_permutation()) {
    Matrix rows(p(), 0, dim_);
    for (const auto& orbit : orbits(h)) {
      for (std::size_t t = 1; t < orbit.size(); ++t) {
        Vector v(dim_, 0);
        v[orbit[t]] = 1;
        v[orbit[0]] = p() - 1;
        rows.append_row(v);
      }
    }
    current = Subspace::span(std::move(rows));
  } else {
    Matrix rows(p(), 0, dim_);
    const Matrix id = Matrix::identity(p(), dim_);
    for (Element x : h.generators()) rows.append_rows((matrix(x) - id).transpose());
    current = Subspace::span(std::move(rows));
  }
  for (int step = 1; step < k && !current.is_zero(); ++step) {
    Matrix rows(p(), 0, dim_);
    for (Element x : h.generators()) {
      for (std::size_t r = 0; r < current.dim(); ++r) {
        auto w = current.basis().row(r);
        auto image = apply(x, w);
        for (std::size_t c = 0; c < dim_; ++c) image[c] = reduce_mod(std::int64_t(image[c]) - w[c], p());
        rows.append_row(image);
      }
    }
    current = Subspace::span(std::move(rows));
  }
  return current;
}

int Representation::j_exponent(const Subgroup& h) const {
  return h.rank_of_order(p()) + static_cast<int>(fixed_dim(h)) - static_cast<int>(dim_);
}

std::size_t Representation::unipotent_minpoly_degree(Element x) const {
  if (is_permutation()) {
    // A cycle of length L = p^k contributes (X - 1)^L.
    auto perm = permutation_of(x);
    std::vector<bool> seen(dim_, false);
    std::size_t best = 1;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t y = i; !seen[y]; y = perm[y]) {
        seen[y] = true;
        ++len;
      }
      best = std::max(best, len);
    }
    return best;
  }
  const Matrix nil = matrix(x) - Matrix::identity(p(), dim_);
  Matrix power = nil;
  std::size_t k = 1;
  while (!power.is_zero()) {
    if (k >= dim_) throw InternalInconsistency("element " + group_->format(x) + " does not act unipotently");
    power = power * nil;
    ++k;
  }
  return k;
}

bool Representation::is_quadratic_element(Element x) const {
  return !acts_trivially(x) && unipotent_minpoly_degree(x) <= 2;
}

bool Representation::is_quadratic_subgroup(const Subgroup& h) const {
  if (is_permutation()) {
    // For odd p a nontrivially acting element has a cycle of length >= p >= 3.
    return std::all_of(h.generators().begin(), h.generators().end(), [&](Element x) { return acts_trivially(x); });
  }
  return commutator_space(h, 2).is_zero();
}

}  // namespace pquad
