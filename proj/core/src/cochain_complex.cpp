#include "homcoh/cochain_complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "homcoh/errors.hpp"

namespace homcoh {

Flavor flavor_for(AlgebraKind kind) { return kind == AlgebraKind::associative ? Flavor::hom_assoc : Flavor::hom_lie; }

CochainSpace::CochainSpace(HomAlgebra algebra, std::size_t arity, Flavor flavor, SubspaceBasis basis)
    : algebra_(std::move(algebra)), arity_(arity), flavor_(flavor), basis_(std::move(basis)) {}

Cochain CochainSpace::element(std::size_t i) const {
  return Cochain::from_coordinates(arity_, algebra_.dim(), basis_[i]);
}

Cochain CochainSpace::combine(const Vector& coeffs) const {
  return Cochain::from_coordinates(arity_, algebra_.dim(), basis_.combine(coeffs));
}

bool CochainSpace::contains(const Cochain& phi) const {
  return phi.arity() == arity_ && phi.dim() == algebra_.dim() && basis_.contains(phi.coordinates());
}

namespace {

int permutation_sign(const Indices& perm) {
  int sign = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

std::string describe(const Witness& w) {
  std::ostringstream os;
  os << "at basis indices (";
  for (std::size_t i = 0; i < w.indices.size(); ++i) os << (i ? "," : "") << w.indices[i];
  os << ")";
  return os.str();
}

void require_kind(const HomAlgebra& a, AlgebraKind kind, const char* what) {
  if (a.kind() != kind)
    throw PreconditionError(std::string(what) + ": algebra must be " + std::string(to_string(kind)));
}

}  // namespace

SubspaceBasis alternating_subspace(std::size_t arity, std::size_t dim) {
  const std::size_t ambient = ipow(dim, arity) * dim;
  std::vector<Vector> vecs;
  if (arity > dim && arity >= 2) return SubspaceBasis(ambient);
  Indices perm(arity);
  Indices args(arity);
  Cochain probe(arity, dim);
  for_each_tuple(arity, dim, [&](std::span<const std::size_t> idx) {
    for (std::size_t p = 1; p < idx.size(); ++p)
      if (idx[p - 1] >= idx[p]) return;
    for (std::size_t k = 0; k < dim; ++k) {
      Vector v(ambient);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        for (std::size_t p = 0; p < arity; ++p) args[p] = idx[perm[p]];
        v[probe.flat_input(args) * dim + k] = permutation_sign(perm);
      } while (std::next_permutation(perm.begin(), perm.end()));
      vecs.push_back(std::move(v));
    }
  });
  return SubspaceBasis::span(ambient, vecs);
}

CochainSpace equivariant_basis(const HomAlgebra& a, std::size_t n, Flavor flavor) {
  if (n < 1) throw PreconditionError("equivariant_basis: arity must be at least 1");
  const std::size_t d = a.dim();
  const std::size_t inputs = ipow(d, n);
  const std::size_t ambient = inputs * d;
  const Matrix& al = a.alpha().matrix();
  SubspaceBasis eq;
  if (a.alpha().is_identity()) {
    eq = SubspaceBasis::full(ambient);
  } else {
    // Column (I,k) is the defect of the elementary cochain e_I -> e_k:
    // delta_{J,I} alpha(m,k) - delta_{m,k} prod_p alpha(I_p, J_p).
    Matrix defect(ambient, ambient);
    Indices in(n), out(n);
    for (std::size_t I = 0; I < inputs; ++I) {
      std::size_t t = I;
      for (std::size_t p = n; p-- > 0;) {
        in[p] = t % d;
        t /= d;
      }
      for (std::size_t k = 0; k < d; ++k) {
        const std::size_t col = I * d + k;
        for (std::size_t m = 0; m < d; ++m)
          if (!al(m, k).is_zero()) defect(I * d + m, col) += al(m, k);
        for (std::size_t J = 0; J < inputs; ++J) {
          std::size_t u = J;
          Scalar prod(1);
          for (std::size_t p = n; p-- > 0;) {
            out[p] = u % d;
            u /= d;
            prod *= al(in[p], out[p]);
            if (prod.is_zero()) break;
          }
          if (!prod.is_zero()) defect(J * d + k, col) -= prod;
        }
      }
    }
    eq = kernel(defect);
  }
  if (flavor == Flavor::hom_lie) eq = intersect(eq, alternating_subspace(n, d));
  return CochainSpace(a, n, flavor, std::move(eq));
}

Cochain delta_hom(const HomAlgebra& a, const Cochain& phi) {
  require_kind(a, AlgebraKind::associative, "delta_hom");
  if (phi.arity() < 1) throw PreconditionError("delta_hom: arity 0 cochains are not in the complex");
  if (phi.dim() != a.dim()) throw DimensionMismatch("delta_hom: dimension mismatch");
  const std::size_t n = phi.arity();
  const std::size_t d = a.dim();
  const auto& mu = a.mu();
  TwistPowers ap(a.alpha(), static_cast<unsigned>(n));
  std::vector<Vector> args(n);
  Indices sub(n);
  return tabulate(n + 1, d, [&](std::span<const std::size_t> x) {
    std::copy(x.begin() + 1, x.end(), sub.begin());
    Vector out = mu.product(ap(static_cast<unsigned>(n - 1), x[0]), phi.on_basis(sub));
    for (std::size_t k = 1; k <= n; ++k) {
      std::size_t slot = 0;
      for (std::size_t p = 0; p <= n; ++p) {
        if (p == k - 1) {
          args[slot++] = mu.on_basis(x[k - 1], x[k]);
          ++p;
        } else {
          args[slot++] = ap(1, x[p]);
        }
      }
      Vector term = phi.evaluate(args);
      axpy(out, Scalar(k % 2 == 0 ? 1 : -1), term);
    }
    std::copy(x.begin(), x.end() - 1, sub.begin());
    Vector tail = mu.product(phi.on_basis(sub), ap(static_cast<unsigned>(n - 1), x[n]));
    axpy(out, Scalar((n + 1) % 2 == 0 ? 1 : -1), tail);
    return out;
  });
}

Cochain delta_hl(const HomAlgebra& a, const Cochain& phi) {
  require_kind(a, AlgebraKind::lie, "delta_hl");
  if (phi.arity() < 1) throw PreconditionError("delta_hl: arity 0 cochains are not in the complex");
  if (phi.dim() != a.dim()) throw DimensionMismatch("delta_hl: dimension mismatch");
  if (!phi.is_alternating()) throw PreconditionError("delta_hl: cochain is not alternating");
  const std::size_t n = phi.arity();
  const std::size_t d = a.dim();
  const auto& br = a.mu();
  TwistPowers ap(a.alpha(), static_cast<unsigned>(n));
  Indices hat(n);
  std::vector<Vector> args(n);
  return tabulate(n + 1, d, [&](std::span<const std::size_t> x) {
    Vector out(d);
    for (std::size_t k = 0; k <= n; ++k) {
      std::size_t s = 0;
      for (std::size_t p = 0; p <= n; ++p)
        if (p != k) hat[s++] = x[p];
      Vector term = br.product(ap(static_cast<unsigned>(n - 1), x[k]), phi.on_basis(hat));
      axpy(out, Scalar(k % 2 == 1 ? 1 : -1), term);
    }
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) {
        args[0] = br.on_basis(x[i], x[j]);
        std::size_t s = 1;
        for (std::size_t p = 0; p <= n; ++p)
          if (p != i && p != j) args[s++] = ap(1, x[p]);
        Vector term = phi.evaluate(args);
        axpy(out, Scalar((i + j) % 2 == 1 ? 1 : -1), term);
      }
    return out;
  });
}

Cochain coboundary(const HomAlgebra& a, const Cochain& phi, Flavor flavor) {
  return flavor == Flavor::hom_assoc ? delta_hom(a, phi) : delta_hl(a, phi);
}

Cochain d_i_operator(const HomAlgebra& a, std::size_t i, const Cochain& phi) {
  require_kind(a, AlgebraKind::associative, "d_i_operator");
  if (phi.arity() < 1) throw PreconditionError("d_i_operator: arity 0 cochains are not in the complex");
  if (phi.dim() != a.dim()) throw DimensionMismatch("d_i_operator: dimension mismatch");
  const std::size_t n = phi.arity();
  const std::size_t d = a.dim();
  if (i >= n) return Cochain(n + 1, d);
  const auto& mu = a.mu();
  TwistPowers ap(a.alpha(), static_cast<unsigned>(n));
  std::vector<Vector> args(n);
  Indices sub(n);
  // phi(alpha x_0, ..., mu(x_i, x_{i+1}), ..., alpha x_n)
  auto inserted = [&](std::span<const std::size_t> x) {
    std::size_t slot = 0;
    for (std::size_t p = 0; p <= n; ++p) {
      if (p == i) {
        args[slot++] = mu.on_basis(x[i], x[i + 1]);
        ++p;
      } else {
        args[slot++] = ap(1, x[p]);
      }
    }
    return phi.evaluate(args);
  };
  return tabulate(n + 1, d, [&](std::span<const std::size_t> x) {
    Vector out = inserted(x);
    if (i == 0) {
      std::copy(x.begin() + 1, x.end(), sub.begin());
      axpy(out, Scalar(-1), mu.product(ap(static_cast<unsigned>(n - 1), x[0]), phi.on_basis(sub)));
    }
    if (i == n - 1) {
      std::copy(x.begin(), x.end() - 1, sub.begin());
      axpy(out, Scalar(-1), mu.product(phi.on_basis(sub), ap(static_cast<unsigned>(n - 1), x[n])));
    }
    return out;
  });
}

CohomologyReport cohomology(const HomAlgebra& a, std::size_t n, Flavor flavor) {
  if (n < 1) throw PreconditionError("cohomology: arity must be at least 1");
  if (flavor_for(a.kind()) != flavor)
    throw PreconditionError("cohomology: flavor does not match the algebra kind");
  if (auto m = check_multiplicative(a); !m)
    throw NonMultiplicativeError("cohomology: twist is not multiplicative " + describe(*m.witness));
  if (flavor == Flavor::hom_assoc) {
    if (auto r = check_hom_associative(a); !r)
      throw PreconditionError("cohomology: product is not Hom-associative " + describe(*r.witness));
  } else {
    if (auto r = check_skew_symmetric(a.mu()); !r)
      throw PreconditionError("cohomology: bracket is not skew-symmetric " + describe(*r.witness));
    if (auto r = check_hom_jacobi(a.mu(), a.alpha()); !r)
      throw PreconditionError("cohomology: bracket violates Hom-Jacobi " + describe(*r.witness));
  }

  const std::size_t d = a.dim();
  auto image_of = [&](const CochainSpace& space) {
    std::vector<Vector> images;
    images.reserve(space.dim());
    for (std::size_t i = 0; i < space.dim(); ++i) {
      Cochain img = coboundary(a, space.element(i), flavor);
      if (!a.alpha().is_equivariant(img))
        throw NonMultiplicativeError("cohomology: coboundary left the equivariant subspace");
      images.push_back(img.coordinates());
    }
    return images;
  };

  CohomologyReport rep;
  rep.arity = n;
  rep.flavor = flavor;
  CochainSpace cn = equivariant_basis(a, n, flavor);
  rep.dimC = cn.dim();

  const std::size_t next_ambient = ipow(d, n + 1) * d;
  auto images = image_of(cn);
  std::vector<Vector> zvecs;
  if (cn.dim() > 0) {
    auto rel = kernel(Matrix::from_columns(next_ambient, images));
    for (const auto& c : rel.vectors()) zvecs.push_back(cn.basis().combine(c));
  }
  rep.cocycles = SubspaceBasis::span(cn.basis().ambient_dim(), zvecs);

  if (n == 1) {
    rep.coboundaries = SubspaceBasis(cn.basis().ambient_dim());
  } else {
    CochainSpace prev = equivariant_basis(a, n - 1, flavor);
    rep.coboundaries = SubspaceBasis::span(cn.basis().ambient_dim(), image_of(prev));
  }

  QuotientResult q;
  try {
    q = quotient_dim(rep.cocycles, rep.coboundaries);
  } catch (const PreconditionError&) {
    throw InternalError("cohomology: coboundaries are not cocycles");
  }
  rep.dimZ = rep.cocycles.dim();
  rep.dimB = rep.coboundaries.dim();
  rep.dimH = q.dim;
  for (auto& v : q.representatives) rep.representatives.push_back(Cochain::from_coordinates(n, d, std::move(v)));
  return rep;
}

CohomologyReport cohomology(const HomAlgebra& a, std::size_t n) { return cohomology(a, n, flavor_for(a.kind())); }

}  // namespace homcoh
