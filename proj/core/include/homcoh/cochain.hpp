#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "homcoh/linalg.hpp"
#include "homcoh/scalar.hpp"

namespace homcoh {

using Indices = std::vector<std::size_t>;

// An n-linear map A^n -> A on a d-dimensional space, stored densely.
// Coordinate (i_0, ..., i_{n-1}; k) lives at ((i_0 d + i_1) d + ...) d + k.
class Cochain {
 public:
  Cochain() = default;
  Cochain(std::size_t arity, std::size_t dim);
  static Cochain from_coordinates(std::size_t arity, std::size_t dim, Vector coords);
  static Cochain identity(std::size_t dim);
  // Unary cochain x -> m x.
  static Cochain from_matrix(const Matrix& m);

  std::size_t arity() const { return arity_; }
  std::size_t dim() const { return dim_; }
  // Degree in the graded Lie algebra of multilinear maps.
  int graded_degree() const { return static_cast<int>(arity_) - 1; }
  std::size_t input_count() const { return inputs_; }
  const Vector& coordinates() const { return coeffs_; }

  std::size_t flat_input(std::span<const std::size_t> args) const;
  Scalar& at(std::span<const std::size_t> args, std::size_t k);
  const Scalar& at(std::span<const std::size_t> args, std::size_t k) const;
  Scalar& at_flat(std::size_t input, std::size_t k) { return coeffs_[input * dim_ + k]; }
  const Scalar& at_flat(std::size_t input, std::size_t k) const { return coeffs_[input * dim_ + k]; }

  // Value on basis vectors e_{args[0]}, ..., e_{args[n-1]}.
  Vector on_basis(std::span<const std::size_t> args) const;
  // Multilinear extension to arbitrary vectors.
  Vector evaluate(std::span<const Vector> args) const;

  bool is_zero() const { return homcoh::is_zero(coeffs_); }
  bool is_alternating() const;
  bool is_skew_symmetric() const { return is_alternating(); }

  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  Cochain& operator*=(const Scalar& c);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const Scalar& c, Cochain a) { return a *= c; }
  Cochain operator-() const {
    Cochain r = *this;
    r *= Scalar(-1);
    return r;
  }
  friend bool operator==(const Cochain& a, const Cochain& b) = default;

 private:
  void require_same_shape(const Cochain& o) const;

  std::size_t arity_ = 0;
  std::size_t dim_ = 0;
  std::size_t inputs_ = 0;
  Vector coeffs_;
};

// Fills an arity-n cochain by evaluating f on every basis tuple in
// row-major order; f must return a vector of length dim.
Cochain tabulate(std::size_t arity, std::size_t dim,
                 const std::function<Vector(std::span<const std::size_t>)>& f);

// Calls f on every index tuple of the given length over {0..dim-1}.
void for_each_tuple(std::size_t length, std::size_t dim,
                    const std::function<void(std::span<const std::size_t>)>& f);

std::size_t ipow(std::size_t base, std::size_t exp);

// Structure constants c[i][j][k]: product(e_i, e_j) = sum_k c[i][j][k] e_k.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : tensor_(2, dim) {}
  explicit StructureConstants(Cochain bilinear);

  std::size_t dim() const { return tensor_.dim(); }
  Scalar& at(std::size_t i, std::size_t j, std::size_t k);
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const;
  Vector on_basis(std::size_t i, std::size_t j) const;
  Vector product(const Vector& x, const Vector& y) const;
  const Cochain& as_cochain() const { return tensor_; }

  friend bool operator==(const StructureConstants& a, const StructureConstants& b) = default;

 private:
  Cochain tensor_;
};

// Linear map alpha: A -> A; column j of the matrix is alpha(e_j).
class TwistMap {
 public:
  TwistMap() = default;
  explicit TwistMap(Matrix m);
  static TwistMap identity(std::size_t dim) { return TwistMap(Matrix::identity(dim)); }

  std::size_t dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  Vector apply(const Vector& v) const { return m_.apply(v); }
  Vector apply_power(const Vector& v, unsigned p) const;
  // alpha^p(e_j).
  Vector power_column(unsigned p, std::size_t j) const;
  bool is_identity() const { return m_ == Matrix::identity(m_.rows()); }
  // alpha o phi - phi o alpha^{(x)n}.
  Cochain equivariance_defect(const Cochain& phi) const;
  bool is_equivariant(const Cochain& phi) const { return equivariance_defect(phi).is_zero(); }

  friend bool operator==(const TwistMap& a, const TwistMap& b) = default;

 private:
  Matrix m_;
};

// Table of alpha^p(e_j) for p in [0, max_power], for repeated use.
class TwistPowers {
 public:
  TwistPowers(const TwistMap& alpha, unsigned max_power);
  const Vector& operator()(unsigned p, std::size_t j) const { return cols_[p][j]; }

 private:
  std::vector<std::vector<Vector>> cols_;
};

}  // namespace homcoh
