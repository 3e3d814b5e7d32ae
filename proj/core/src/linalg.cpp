#include "homcoh/linalg.hpp"

#include <utility>

#include "homcoh/errors.hpp"

namespace homcoh {

Vector zero_vector(std::size_t n) { return Vector(n); }

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector add: length mismatch");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector subtract(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector subtract: length mismatch");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scaled(const Scalar& c, const Vector& v) {
  Vector r(v.size());
  if (c.is_zero()) return r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r[i] = c * v[i];
  return r;
}

void axpy(Vector& a, const Scalar& c, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("axpy: length mismatch");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i) a[i].add_product(c, b[i]);
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) throw DimensionMismatch("Matrix: entry count != rows * cols");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Scalar> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("Matrix::from_rows: ragged rows");
    data.insert(data.end(), row.begin(), row.end());
  }
  return Matrix(r, c, std::move(data));
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DimensionMismatch("Matrix::from_columns: column length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("Matrix::apply: length mismatch");
  Vector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i].add_product((*this)(i, j), v[j]);
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("Matrix product: inner dimension mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j).add_product(a, o(k, j));
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("Matrix sum: shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("Matrix difference: shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Matrix Matrix::power(unsigned m) const {
  if (rows_ != cols_) throw DimensionMismatch("Matrix::power: not square");
  Matrix r = identity(rows_);
  for (unsigned i = 0; i < m; ++i) r = r * (*this);
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

RrefResult rref(Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> support;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    Scalar inv = Scalar(1) / m(r, c);
    support.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (m(r, j).is_zero()) continue;
      m(r, j) *= inv;
      support.push_back(j);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j : support) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

SubspaceBasis SubspaceBasis::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  SubspaceBasis s(ambient_dim);
  if (vectors.empty()) return s;
  Matrix m(vectors.size(), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient_dim) throw DimensionMismatch("SubspaceBasis::span: vector length");
    for (std::size_t j = 0; j < ambient_dim; ++j) m(i, j) = vectors[i][j];
  }
  auto red = rref(std::move(m));
  for (std::size_t i = 0; i < red.pivots.size(); ++i) s.vectors_.push_back(red.reduced.row(i));
  s.pivots_ = std::move(red.pivots);
  return s;
}

SubspaceBasis SubspaceBasis::full(std::size_t ambient_dim) {
  SubspaceBasis s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    Vector v(ambient_dim);
    v[i] = 1;
    s.vectors_.push_back(std::move(v));
    s.pivots_.push_back(i);
  }
  return s;
}

std::optional<Vector> SubspaceBasis::coordinates(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("SubspaceBasis: vector length");
  Vector coeffs(vectors_.size());
  Vector rest = v;
  for (std::size_t r = 0; r < vectors_.size(); ++r) {
    coeffs[r] = rest[pivots_[r]];
    if (!coeffs[r].is_zero()) axpy(rest, -coeffs[r], vectors_[r]);
  }
  if (!is_zero(rest)) return std::nullopt;
  return coeffs;
}

bool SubspaceBasis::contains(const Vector& v) const { return coordinates(v).has_value(); }

Vector SubspaceBasis::combine(const Vector& coeffs) const {
  if (coeffs.size() != vectors_.size()) throw DimensionMismatch("SubspaceBasis::combine: coefficient count");
  Vector r(ambient_);
  for (std::size_t i = 0; i < coeffs.size(); ++i) axpy(r, coeffs[i], vectors_[i]);
  return r;
}

SubspaceBasis kernel(const Matrix& m) {
  auto red = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < red.pivots.size(); ++r) v[red.pivots[r]] = -red.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return SubspaceBasis::span(cols, basis);
}

SubspaceBasis image(const Matrix& m) {
  std::vector<Vector> cols;
  cols.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return SubspaceBasis::span(m.rows(), cols);
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve: right-hand side length != rows");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto red = rref(std::move(aug));
  if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t r = 0; r < red.pivots.size(); ++r) x[red.pivots[r]] = red.reduced(r, m.cols());
  return x;
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("intersect: ambient dimension mismatch");
  const std::size_t n = a.ambient_dim();
  if (a.empty() || b.empty()) return SubspaceBasis(n);
  std::vector<Vector> cols = a.vectors();
  for (const auto& v : b.vectors()) cols.push_back(scaled(Scalar(-1), v));
  auto rel = kernel(Matrix::from_columns(n, cols));
  std::vector<Vector> common;
  for (const auto& c : rel.vectors()) {
    Vector head(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(a.dim()));
    common.push_back(a.combine(head));
  }
  return SubspaceBasis::span(n, common);
}

QuotientResult quotient_dim(const SubspaceBasis& z, const SubspaceBasis& b) {
  if (z.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("quotient_dim: ambient dimension mismatch");
  for (const auto& v : b.vectors())
    if (!z.contains(v)) throw PreconditionError("quotient_dim: subspace is not contained in the ambient subspace");
  QuotientResult out;
  std::vector<Vector> current = b.vectors();
  SubspaceBasis spanned = b;
  for (const auto& v : z.vectors()) {
    if (spanned.contains(v)) continue;
    out.representatives.push_back(v);
    current.push_back(v);
    spanned = SubspaceBasis::span(z.ambient_dim(), current);
  }
  out.dim = out.representatives.size();
  return out;
}

}  // namespace homcoh
