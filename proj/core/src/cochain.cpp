#include "homcoh/cochain.hpp"

#include <algorithm>
#include <utility>

#include "homcoh/errors.hpp"

namespace homcoh {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

void for_each_tuple(std::size_t length, std::size_t dim,
                    const std::function<void(std::span<const std::size_t>)>& f) {
  Indices idx(length, 0);
  if (dim == 0 && length > 0) return;
  while (true) {
    f(idx);
    std::size_t pos = length;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < dim) break;
      idx[pos] = 0;
      if (pos == 0) return;
    }
    if (length == 0) return;
  }
}

Cochain tabulate(std::size_t arity, std::size_t dim,
                 const std::function<Vector(std::span<const std::size_t>)>& f) {
  Cochain out(arity, dim);
  std::size_t flat = 0;
  for_each_tuple(arity, dim, [&](std::span<const std::size_t> idx) {
    Vector v = f(idx);
    if (v.size() != dim) throw DimensionMismatch("tabulate: value has wrong length");
    for (std::size_t k = 0; k < dim; ++k)
      if (!v[k].is_zero()) out.at_flat(flat, k) = std::move(v[k]);
    ++flat;
  });
  return out;
}

Cochain::Cochain(std::size_t arity, std::size_t dim)
    : arity_(arity), dim_(dim), inputs_(ipow(dim, arity)), coeffs_(inputs_ * dim) {}

Cochain Cochain::from_coordinates(std::size_t arity, std::size_t dim, Vector coords) {
  Cochain c(arity, dim);
  if (coords.size() != c.coeffs_.size())
    throw DimensionMismatch("Cochain::from_coordinates: coordinate count != dim^(arity+1)");
  c.coeffs_ = std::move(coords);
  return c;
}

Cochain Cochain::identity(std::size_t dim) { return from_matrix(Matrix::identity(dim)); }

Cochain Cochain::from_matrix(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("Cochain::from_matrix: not square");
  Cochain c(1, m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t k = 0; k < m.rows(); ++k) c.at_flat(j, k) = m(k, j);
  return c;
}

std::size_t Cochain::flat_input(std::span<const std::size_t> args) const {
  if (args.size() != arity_) throw DimensionMismatch("Cochain: wrong number of arguments");
  std::size_t flat = 0;
  for (auto a : args) {
    if (a >= dim_) throw DimensionMismatch("Cochain: basis index out of range");
    flat = flat * dim_ + a;
  }
  return flat;
}

Scalar& Cochain::at(std::span<const std::size_t> args, std::size_t k) {
  if (k >= dim_) throw DimensionMismatch("Cochain: output index out of range");
  return at_flat(flat_input(args), k);
}

const Scalar& Cochain::at(std::span<const std::size_t> args, std::size_t k) const {
  if (k >= dim_) throw DimensionMismatch("Cochain: output index out of range");
  return at_flat(flat_input(args), k);
}

Vector Cochain::on_basis(std::span<const std::size_t> args) const {
  std::size_t base = flat_input(args) * dim_;
  return Vector(coeffs_.begin() + static_cast<std::ptrdiff_t>(base),
                coeffs_.begin() + static_cast<std::ptrdiff_t>(base + dim_));
}

Vector Cochain::evaluate(std::span<const Vector> args) const {
  if (args.size() != arity_) throw DimensionMismatch("Cochain::evaluate: wrong number of arguments");
  std::vector<std::vector<std::size_t>> support(arity_);
  for (std::size_t a = 0; a < arity_; ++a) {
    if (args[a].size() != dim_) throw DimensionMismatch("Cochain::evaluate: argument length");
    for (std::size_t i = 0; i < dim_; ++i)
      if (!args[a][i].is_zero()) support[a].push_back(i);
    if (support[a].empty()) return Vector(dim_);
  }
  Vector out(dim_);
  std::vector<Scalar> prefix(arity_ + 1);
  prefix[0] = 1;
  std::vector<std::size_t> flat(arity_ + 1, 0);
  std::vector<std::size_t> pos(arity_, 0);
  std::size_t level = 0;
  // Iterative depth-first walk over the product of supports.
  while (true) {
    if (level == arity_) {
      const std::size_t base = flat[arity_] * dim_;
      for (std::size_t k = 0; k < dim_; ++k) out[k].add_product(prefix[arity_], coeffs_[base + k]);
      if (level == 0) break;
      --level;
      ++pos[level];
      continue;
    }
    if (pos[level] == support[level].size()) {
      pos[level] = 0;
      if (level == 0) break;
      --level;
      ++pos[level];
      continue;
    }
    std::size_t i = support[level][pos[level]];
    prefix[level + 1] = prefix[level] * args[level][i];
    flat[level + 1] = flat[level] * dim_ + i;
    ++level;
  }
  return out;
}

bool Cochain::is_alternating() const {
  if (arity_ < 2) return true;
  bool ok = true;
  Indices swapped(arity_);
  for_each_tuple(arity_, dim_, [&](std::span<const std::size_t> idx) {
    if (!ok) return;
    for (std::size_t p = 0; p + 1 < arity_ && ok; ++p) {
      std::copy(idx.begin(), idx.end(), swapped.begin());
      std::swap(swapped[p], swapped[p + 1]);
      std::size_t a = flat_input(idx), b = flat_input(swapped);
      for (std::size_t k = 0; k < dim_; ++k)
        if (at_flat(a, k) != -at_flat(b, k)) {
          ok = false;
          break;
        }
    }
  });
  return ok;
}

void Cochain::require_same_shape(const Cochain& o) const {
  if (arity_ != o.arity_ || dim_ != o.dim_) throw DimensionMismatch("Cochain: shape mismatch");
}

Cochain& Cochain::operator+=(const Cochain& o) {
  require_same_shape(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!o.coeffs_[i].is_zero()) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
  require_same_shape(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!o.coeffs_[i].is_zero()) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Cochain& Cochain::operator*=(const Scalar& c) {
  for (auto& x : coeffs_)
    if (!x.is_zero()) x *= c;
  return *this;
}

StructureConstants::StructureConstants(Cochain bilinear) : tensor_(std::move(bilinear)) {
  if (tensor_.arity() != 2) throw DimensionMismatch("StructureConstants: cochain must be bilinear");
}

Scalar& StructureConstants::at(std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t idx[2] = {i, j};
  return tensor_.at(idx, k);
}

const Scalar& StructureConstants::at(std::size_t i, std::size_t j, std::size_t k) const {
  const std::size_t idx[2] = {i, j};
  return tensor_.at(idx, k);
}

Vector StructureConstants::on_basis(std::size_t i, std::size_t j) const {
  const std::size_t idx[2] = {i, j};
  return tensor_.on_basis(idx);
}

Vector StructureConstants::product(const Vector& x, const Vector& y) const {
  const Vector args[2] = {x, y};
  return tensor_.evaluate(args);
}

TwistMap::TwistMap(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw DimensionMismatch("TwistMap: matrix must be square");
}

Vector TwistMap::apply_power(const Vector& v, unsigned p) const {
  Vector r = v;
  for (unsigned i = 0; i < p; ++i) r = m_.apply(r);
  return r;
}

Vector TwistMap::power_column(unsigned p, std::size_t j) const {
  Vector e(dim());
  e.at(j) = 1;
  return apply_power(e, p);
}

Cochain TwistMap::equivariance_defect(const Cochain& phi) const {
  if (phi.dim() != dim()) throw DimensionMismatch("equivariance_defect: dimension mismatch");
  std::vector<Vector> images(dim());
  for (std::size_t j = 0; j < dim(); ++j) images[j] = m_.column(j);
  std::vector<Vector> args(phi.arity());
  return tabulate(phi.arity(), phi.dim(), [&](std::span<const std::size_t> idx) {
    for (std::size_t a = 0; a < idx.size(); ++a) args[a] = images[idx[a]];
    return subtract(m_.apply(phi.on_basis(idx)), phi.evaluate(args));
  });
}

TwistPowers::TwistPowers(const TwistMap& alpha, unsigned max_power) : cols_(max_power + 1) {
  const std::size_t d = alpha.dim();
  cols_[0].resize(d);
  for (std::size_t j = 0; j < d; ++j) {
    cols_[0][j] = Vector(d);
    cols_[0][j][j] = 1;
  }
  for (unsigned p = 1; p <= max_power; ++p) {
    cols_[p].resize(d);
    for (std::size_t j = 0; j < d; ++j) cols_[p][j] = alpha.apply(cols_[p - 1][j]);
  }
}

}  // namespace homcoh
