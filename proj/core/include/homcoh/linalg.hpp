#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "homcoh/scalar.hpp"

namespace homcoh {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);
Vector scaled(const Scalar& c, const Vector& v);
// a += c * b
void axpy(Vector& a, const Scalar& c, const Vector& b);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::initializer_list<std::initializer_list<Scalar>> rows);
  // Builds a matrix whose j-th column is cols[j]; every column needs length `rows`.
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Scalar>& entries() const { return data_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  Vector apply(const Vector& v) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix transpose() const;
  Matrix power(unsigned m) const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

// Leftmost-pivot, top-down Gauss-Jordan elimination.
RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);

// A subspace of K^ambient_dim, stored as the nonzero rows of a reduced
// row-echelon matrix.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  explicit SubspaceBasis(std::size_t ambient_dim) : ambient_(ambient_dim) {}
  static SubspaceBasis span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static SubspaceBasis full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  const std::vector<Vector>& vectors() const { return vectors_; }
  const Vector& operator[](std::size_t i) const { return vectors_[i]; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  // Coordinates of v with respect to vectors(), if v lies in the subspace.
  std::optional<Vector> coordinates(const Vector& v) const;
  Vector combine(const Vector& coeffs) const;

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> vectors_;
  std::vector<std::size_t> pivots_;
};

SubspaceBasis kernel(const Matrix& m);
SubspaceBasis image(const Matrix& m);
// Particular solution with free variables set to zero, or nullopt when
// the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);

struct QuotientResult {
  std::size_t dim = 0;
  std::vector<Vector> representatives;
};

// dim z/b together with z-vectors whose cosets form a basis of z/b.
QuotientResult quotient_dim(const SubspaceBasis& z, const SubspaceBasis& b);

}  // namespace homcoh
