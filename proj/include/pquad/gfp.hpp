#pragma once

// Dense linear algebra over the prime field GF(p).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pquad {

using Scalar = std::uint32_t;
using Vector = std::vector<Scalar>;

Scalar inverse_mod(Scalar a, Scalar p);

inline Scalar reduce_mod(std::int64_t a, Scalar p) {
  auto r = a % static_cast<std::int64_t>(p);
  return static_cast<Scalar>(r < 0 ? r + p : r);
}

class Matrix {
 public:
  Matrix() = default;
  Matrix(Scalar p, std::size_t rows, std::size_t cols)
      : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(Scalar p, std::size_t d);

  Scalar prime() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(Scalar s) const;
  Vector apply(std::span<const Scalar> v) const;
  Matrix transpose() const;
  Matrix pow(std::uint64_t k) const;

  bool is_zero() const;
  bool is_identity() const;

  /// Rows stacked below this matrix; column counts must agree.
  void append_rows(const Matrix& other);
  void append_row(std::span<const Scalar> v);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Scalar p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// In-place reduced row echelon form. Zero rows are dropped; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);

/// A subspace of GF(p)^d, stored as the rows of its reduced echelon basis.
/// The echelon basis is canonical, so equality is basis equality.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(Scalar p, std::size_t ambient);
  static Subspace whole(Scalar p, std::size_t ambient);
  static Subspace span(Matrix rows);
  /// {x : m x = 0}
  static Subspace kernel(Matrix m);

  Scalar prime() const { return basis_.prime(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  bool is_zero() const { return dim() == 0; }

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// Orthogonal complement under the standard dot product.
  Subspace perp() const;
  /// {m w : w in this}
  Subspace image(const Matrix& m) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  explicit Subspace(Matrix echelon, std::vector<std::size_t> pivots)
      : basis_(std::move(echelon)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace pquad
