#include "homcoh/brackets.hpp"

#include <algorithm>
#include <numeric>

#include "homcoh/errors.hpp"

namespace homcoh {

namespace {

void require_compatible(const Cochain& phi, const Cochain& psi, const TwistMap& alpha, const char* what) {
  if (phi.dim() != psi.dim() || phi.dim() != alpha.dim())
    throw DimensionMismatch(std::string(what) + ": dimension mismatch");
  if (phi.arity() < 1 || psi.arity() < 1)
    throw PreconditionError(std::string(what) + ": cochains of arity 0 are not supported");
}

int sign_of(const Indices& perm) {
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

Scalar parity(long e) { return Scalar(e % 2 == 0 ? 1 : -1); }

// Tabulates an alternating map from its values on strictly increasing
// basis tuples.
Cochain fill_alternating(std::size_t arity, std::size_t dim,
                         const std::function<Vector(std::span<const std::size_t>)>& on_increasing) {
  Cochain out(arity, dim);
  if (arity >= 2 && arity > dim) return out;
  Indices perm(arity), args(arity);
  for_each_tuple(arity, dim, [&](std::span<const std::size_t> idx) {
    for (std::size_t p = 1; p < idx.size(); ++p)
      if (idx[p - 1] >= idx[p]) return;
    Vector v = on_increasing(idx);
    if (is_zero(v)) return;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (std::size_t p = 0; p < arity; ++p) args[p] = idx[perm[p]];
      const std::size_t flat = out.flat_input(args);
      const bool negate = sign_of(perm) < 0;
      for (std::size_t k = 0; k < dim; ++k)
        if (!v[k].is_zero()) out.at_flat(flat, k) = negate ? -v[k] : v[k];
    } while (std::next_permutation(perm.begin(), perm.end()));
  });
  return out;
}

}  // namespace

Cochain j_insert(const Cochain& phi, const Cochain& psi, const TwistMap& alpha) {
  require_compatible(phi, psi, alpha, "j_insert");
  const std::size_t a = phi.arity() - 1;
  const std::size_t b = psi.arity() - 1;
  const std::size_t d = phi.dim();
  TwistPowers ap(alpha, static_cast<unsigned>(a));
  std::vector<Vector> args(b + 1);
  Indices inner(a + 1);
  return tabulate(a + b + 1, d, [&](std::span<const std::size_t> x) {
    Vector out(d);
    for (std::size_t k = 0; k <= b; ++k) {
      for (std::size_t p = 0; p < k; ++p) args[p] = ap(static_cast<unsigned>(a), x[p]);
      std::copy(x.begin() + static_cast<std::ptrdiff_t>(k), x.begin() + static_cast<std::ptrdiff_t>(k + a + 1),
                inner.begin());
      args[k] = phi.on_basis(inner);
      for (std::size_t p = k + 1; p <= b; ++p) args[p] = ap(static_cast<unsigned>(a), x[p + a]);
      axpy(out, parity(static_cast<long>(a * k)), psi.evaluate(args));
    }
    return out;
  });
}

Cochain gerstenhaber_bracket(const Cochain& phi, const Cochain& psi, const TwistMap& alpha) {
  const long ab = static_cast<long>(phi.graded_degree()) * psi.graded_degree();
  Cochain r = j_insert(phi, psi, alpha);
  Cochain s = j_insert(psi, phi, alpha);
  s *= parity(ab);
  return r -= s;
}

Cochain alternator(const Cochain& phi) {
  const std::size_t n = phi.arity();
  if (n <= 1) return phi;
  const std::size_t d = phi.dim();
  const Scalar norm = Scalar(1) / factorial(static_cast<unsigned>(n));
  Indices perm(n), args(n);
  return fill_alternating(n, d, [&](std::span<const std::size_t> x) {
    Vector out(d);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (std::size_t p = 0; p < n; ++p) args[p] = x[perm[p]];
      axpy(out, Scalar(sign_of(perm)), phi.on_basis(args));
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (auto& v : out) v *= norm;
    return out;
  });
}

Cochain i_insert(const Cochain& phi, const Cochain& psi, const TwistMap& alpha) {
  require_compatible(phi, psi, alpha, "i_insert");
  const unsigned a = static_cast<unsigned>(phi.arity() - 1);
  const unsigned b = static_cast<unsigned>(psi.arity() - 1);
  Scalar coeff = factorial(a + b + 1) / (factorial(a + 1) * factorial(b + 1));
  Cochain r = alternator(j_insert(phi, psi, alpha));
  r *= coeff;
  return r;
}

Cochain i_insert_permutation_sum(const Cochain& phi, const Cochain& psi, const TwistMap& alpha) {
  require_compatible(phi, psi, alpha, "i_insert_permutation_sum");
  const std::size_t a = phi.arity() - 1;
  const std::size_t b = psi.arity() - 1;
  const std::size_t n = a + b + 1;
  const std::size_t d = phi.dim();
  const Scalar norm = Scalar(1) / (factorial(static_cast<unsigned>(b)) * factorial(static_cast<unsigned>(a + 1)));
  TwistPowers ap(alpha, static_cast<unsigned>(a));
  Indices perm(n), inner(a + 1);
  std::vector<Vector> args(b + 1);
  return fill_alternating(n, d, [&](std::span<const std::size_t> x) {
    Vector out(d);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (std::size_t p = 0; p <= a; ++p) inner[p] = x[perm[p]];
      args[0] = phi.on_basis(inner);
      for (std::size_t p = 1; p <= b; ++p) args[p] = ap(static_cast<unsigned>(a), x[perm[a + p]]);
      axpy(out, Scalar(sign_of(perm)), psi.evaluate(args));
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (auto& v : out) v *= norm;
    return out;
  });
}

Cochain nr_bracket(const Cochain& phi, const Cochain& psi, const TwistMap& alpha) {
  if (!phi.is_alternating() || !psi.is_alternating())
    throw PreconditionError("nr_bracket: inputs must be alternating");
  const long ab = static_cast<long>(phi.graded_degree()) * psi.graded_degree();
  Cochain r = i_insert(phi, psi, alpha);
  Cochain s = i_insert(psi, phi, alpha);
  s *= parity(ab);
  return r -= s;
}

Cochain cup(const Cochain& phi, const Cochain& psi, const StructureConstants& mu, const TwistMap& alpha) {
  require_compatible(phi, psi, alpha, "cup");
  if (mu.dim() != phi.dim()) throw DimensionMismatch("cup: dimension mismatch");
  const std::size_t p = phi.arity();
  const std::size_t q = psi.arity();
  const auto a = static_cast<unsigned>(p - 1);
  const auto b = static_cast<unsigned>(q - 1);
  Indices left(p), right(q);
  return tabulate(p + q, phi.dim(), [&](std::span<const std::size_t> x) {
    std::copy(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(p), left.begin());
    std::copy(x.begin() + static_cast<std::ptrdiff_t>(p), x.end(), right.begin());
    return mu.product(alpha.apply_power(phi.on_basis(left), b), alpha.apply_power(psi.on_basis(right), a));
  });
}

Cochain bracket_differential_assoc(const HomAlgebra& a, const Cochain& phi) {
  if (a.kind() != AlgebraKind::associative)
    throw PreconditionError("bracket_differential_assoc: algebra must be hom-associative");
  return gerstenhaber_bracket(a.mu().as_cochain(), phi, a.alpha());
}

Cochain bracket_differential_lie(const HomAlgebra& a, const Cochain& phi) {
  if (a.kind() != AlgebraKind::lie) throw PreconditionError("bracket_differential_lie: algebra must be hom-lie");
  return nr_bracket(a.mu().as_cochain(), phi, a.alpha());
}

GradedBracketResult bracket(BracketKind kind, const Cochain& phi, const Cochain& psi, const TwistMap& alpha) {
  GradedBracketResult r;
  r.left_degree = phi.graded_degree();
  r.right_degree = psi.graded_degree();
  r.value = kind == BracketKind::delta ? gerstenhaber_bracket(phi, psi, alpha) : nr_bracket(phi, psi, alpha);
  return r;
}

}  // namespace homcoh
