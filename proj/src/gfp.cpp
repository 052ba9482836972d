#include "pquad/gfp.hpp"

#include <cassert>
#include <algorithm>
#include <stdexcept>
#include <utility>

namespace pquad {

Scalar inverse_mod(Scalar a, Scalar p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  if (new_r == 0) throw std::domain_error("inverse of zero in GF(p)");
  while (new_r != 0) {
    auto q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return reduce_mod(t, p);
}

Matrix Matrix::identity(Scalar p, std::size_t d) {
  Matrix m(p, d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  assert(cols_ == rhs.rows_);
  Matrix out(p_, rows_, rhs.cols_);
  std::vector<std::uint64_t> acc(rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      auto a = (*this)(i, k);
      if (a == 0) continue;
      auto r = rhs.row(k);
      for (std::size_t j = 0; j < rhs.cols_; ++j) acc[j] += std::uint64_t{a} * r[j];
    }
    for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) = static_cast<Scalar>(acc[j] % p_);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = (data_[i] + rhs.data_[i]) % p_;
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = (data_[i] + p_ - rhs.data_[i]) % p_;
  return out;
}

Matrix Matrix::scaled(Scalar s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x = static_cast<Scalar>(std::uint64_t{x} * (s % p_) % p_);
  return out;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  assert(v.size() == cols_);
  Vector out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    auto r = row(i);
    for (std::size_t j = 0; j < cols_; ++j) acc += std::uint64_t{r[j]} * v[j];
    out[i] = static_cast<Scalar>(acc % p_);
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Matrix Matrix::pow(std::uint64_t k) const {
  assert(rows_ == cols_);
  Matrix result = identity(p_, rows_);
  Matrix base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

bool Matrix::is_zero() const {
  for (auto x : data_)
    if (x != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

void Matrix::append_rows(const Matrix& other) {
  if (rows_ == 0 && cols_ == 0) {
    *this = other;
    return;
  }
  assert(other.cols_ == cols_);
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

void Matrix::append_row(std::span<const Scalar> v) {
  assert(v.size() == cols_);
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

std::vector<std::size_t> rref(Matrix& m) {
  const Scalar p = m.prime();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t sel = lead;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != lead) {
      auto a = m.row(sel), b = m.row(lead);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto pivot_row = m.row(lead);
    Scalar scale = inverse_mod(pivot_row[col], p);
    for (auto& x : pivot_row) x = static_cast<Scalar>(std::uint64_t{x} * scale % p);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead) continue;
      Scalar f = m(r, col);
      if (f == 0) continue;
      auto target = m.row(r);
      Scalar neg = p - f;
      for (std::size_t j = col; j < m.cols(); ++j)
        target[j] = static_cast<Scalar>((target[j] + std::uint64_t{neg} * pivot_row[j]) % p);
    }
    pivots.push_back(col);
    ++lead;
  }
  Matrix trimmed(p, pivots.size(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    auto src = m.row(r);
    std::copy(src.begin(), src.end(), trimmed.row(r).begin());
  }
  m = std::move(trimmed);
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t d = m.rows();
  Matrix aug(m.prime(), d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) aug(i, j) = m(i, j);
    aug(i, d + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < d || pivots[d - 1] != d - 1) return std::nullopt;
  Matrix out(m.prime(), d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out(i, j) = aug(i, d + j);
  return out;
}

Subspace Subspace::zero(Scalar p, std::size_t ambient) {
  return Subspace(Matrix(p, 0, ambient), {});
}

Subspace Subspace::whole(Scalar p, std::size_t ambient) {
  std::vector<std::size_t> pivots(ambient);
  for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
  return Subspace(Matrix::identity(p, ambient), std::move(pivots));
}

Subspace Subspace::span(Matrix rows) {
  auto pivots = rref(rows);
  return Subspace(std::move(rows), std::move(pivots));
}

Subspace Subspace::kernel(Matrix m) {
  const Scalar p = m.prime();
  const std::size_t d = m.cols();
  auto pivots = rref(m);
  std::vector<bool> is_pivot(d, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis(p, 0, d);
  Vector v(d);
  for (std::size_t free = 0; free < d; ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - m(r, free)) % p;
    basis.append_row(v);
  }
  return span(std::move(basis));
}

bool Subspace::contains(std::span<const Scalar> v) const {
  assert(v.size() == ambient_dim());
  const Scalar p = prime();
  Vector w(v.begin(), v.end());
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    Scalar f = w[pivots_[r]];
    if (f == 0) continue;
    auto b = basis_.row(r);
    Scalar neg = p - f;
    for (std::size_t j = pivots_[r]; j < w.size(); ++j)
      w[j] = static_cast<Scalar>((w[j] + std::uint64_t{neg} * b[j]) % p);
  }
  for (auto x : w)
    if (x != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  Matrix rows = basis_;
  rows.append_rows(other.basis_);
  return span(std::move(rows));
}

Subspace Subspace::perp() const {
  if (dim() == 0) return whole(prime(), ambient_dim());
  return kernel(basis_);
}

Subspace Subspace::intersect(const Subspace& other) const {
  return (perp() + other.perp()).perp();
}

Subspace Subspace::image(const Matrix& m) const {
  Matrix rows(prime(), 0, m.rows());
  for (std::size_t r = 0; r < dim(); ++r) rows.append_row(m.apply(basis_.row(r)));
  return span(std::move(rows));
}

}  // namespace pquad
