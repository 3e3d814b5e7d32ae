#include "homcoh/deformation.hpp"

#include "homcoh/brackets.hpp"
#include "homcoh/errors.hpp"

namespace homcoh {

Deformation::Deformation(HomAlgebra base, std::vector<Cochain> terms)
    : base_(std::move(base)), terms_(std::move(terms)) {
  const bool lie = base_.kind() == AlgebraKind::lie;
  if (lie && !base_.mu().as_cochain().is_skew_symmetric())
    throw PreconditionError("Deformation: base bracket is not skew-symmetric");
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    const std::string name = "Deformation: term " + std::to_string(i + 1);
    if (t.arity() != 2 || t.dim() != base_.dim()) throw PreconditionError(name + " is not a bilinear map on the base");
    if (!base_.alpha().is_equivariant(t)) throw PreconditionError(name + " is not alpha-equivariant");
    if (lie && !t.is_skew_symmetric()) throw PreconditionError(name + " is not skew-symmetric");
  }
}

Deformation Deformation::extended(Cochain next) const {
  auto terms = terms_;
  terms.push_back(std::move(next));
  return Deformation(base_, std::move(terms));
}

Cochain deformation_defect(const Deformation& d, std::size_t s) {
  if (s > d.order()) throw PreconditionError("deformation_defect: order exceeds the deformation");
  const std::size_t dim = d.base().dim();
  TwistPowers ap(d.base().alpha(), 1);
  const bool lie = d.base().kind() == AlgebraKind::lie;
  return tabulate(3, dim, [&](std::span<const std::size_t> x) {
    Vector out(dim);
    for (std::size_t i = 0; i <= s; ++i) {
      const Cochain& outer = d.term(i);
      const Cochain& inner = d.term(s - i);
      const StructureConstants mo(outer);
      const std::size_t a[2] = {x[0], x[1]};
      const std::size_t b[2] = {x[1], x[2]};
      if (!lie) {
        out = add(out, mo.product(inner.on_basis(a), ap(1, x[2])));
        out = subtract(out, mo.product(ap(1, x[0]), inner.on_basis(b)));
      } else {
        const std::size_t c[2] = {x[2], x[0]};
        out = add(out, mo.product(ap(1, x[0]), inner.on_basis(b)));
        out = add(out, mo.product(ap(1, x[1]), inner.on_basis(c)));
        out = add(out, mo.product(ap(1, x[2]), inner.on_basis(a)));
      }
    }
    return out;
  });
}

DeformationCheck check_deformation(const Deformation& d) {
  DeformationCheck rep;
  const std::size_t dim = d.base().dim();
  for (std::size_t s = 0; s <= d.order(); ++s) {
    OrderCheck oc;
    oc.order = s;
    Cochain defect = deformation_defect(d, s);
    for_each_tuple(3, dim, [&](std::span<const std::size_t> x) {
      if (!oc.ok) return;
      Vector v = defect.on_basis(x);
      if (!is_zero(v)) {
        oc.ok = false;
        oc.witness = Witness{Indices(x.begin(), x.end()), v, Vector(dim)};
      }
    });
    if (!oc.ok && !rep.first_failure) rep.first_failure = s;
    rep.orders.push_back(std::move(oc));
  }
  return rep;
}

bool infinitesimal_is_cocycle(const Deformation& d) {
  if (d.order() < 1) throw PreconditionError("infinitesimal_is_cocycle: deformation order must be at least 1");
  auto check = check_deformation(d);
  if (!check.orders[0].ok) throw PreconditionError("infinitesimal_is_cocycle: base structure fails its axiom");
  const Flavor flavor = flavor_for(d.base().kind());
  const bool cocycle = coboundary(d.base(), d.term(1), flavor).is_zero();
  if (cocycle != check.orders[1].ok)
    throw InternalError("infinitesimal_is_cocycle: cocycle test disagrees with the order-1 equation");
  return cocycle;
}

GaugeSeries::GaugeSeries(std::size_t dim, std::vector<Matrix> terms) : dim_(dim), terms_(std::move(terms)) {
  for (const auto& m : terms_)
    if (m.rows() != dim_ || m.cols() != dim_) throw DimensionMismatch("GaugeSeries: term shape mismatch");
}

GaugeSeries GaugeSeries::identity(std::size_t dim, std::size_t order) {
  return GaugeSeries(dim, std::vector<Matrix>(order, Matrix(dim, dim)));
}

Matrix GaugeSeries::coefficient(std::size_t i) const { return i == 0 ? Matrix::identity(dim_) : terms_.at(i - 1); }

GaugeSeries inverse(const GaugeSeries& g) {
  std::vector<Matrix> inv;
  for (std::size_t m = 1; m <= g.order(); ++m) {
    Matrix acc(g.dim(), g.dim());
    for (std::size_t i = 1; i <= m; ++i) {
      Matrix prev = m - i == 0 ? Matrix::identity(g.dim()) : inv[m - i - 1];
      acc = acc - g.coefficient(i) * prev;
    }
    inv.push_back(std::move(acc));
  }
  return GaugeSeries(g.dim(), std::move(inv));
}

GaugeSeries compose(const GaugeSeries& outer, const GaugeSeries& inner) {
  if (outer.dim() != inner.dim() || outer.order() != inner.order())
    throw DimensionMismatch("compose: gauge series shape mismatch");
  std::vector<Matrix> out;
  for (std::size_t m = 1; m <= outer.order(); ++m) {
    Matrix acc(outer.dim(), outer.dim());
    for (std::size_t i = 0; i <= m; ++i) acc = acc + outer.coefficient(i) * inner.coefficient(m - i);
    out.push_back(std::move(acc));
  }
  return GaugeSeries(outer.dim(), std::move(out));
}

Deformation gauge_transform(const Deformation& d, const GaugeSeries& g) {
  const std::size_t dim = d.base().dim();
  const std::size_t k = d.order();
  if (g.dim() != dim) throw DimensionMismatch("gauge_transform: gauge dimension mismatch");
  if (g.order() != k) throw PreconditionError("gauge_transform: gauge order must equal the deformation order");
  const Matrix& al = d.base().alpha().matrix();
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.terms()[i] * al != al * g.terms()[i])
      throw PreconditionError("gauge_transform: gauge term " + std::to_string(i + 1) + " does not commute with alpha");
  GaugeSeries ginv = inverse(g);
  std::vector<StructureConstants> mus;
  for (std::size_t i = 0; i <= k; ++i) mus.emplace_back(d.term(i));
  std::vector<Matrix> phi, psi;
  for (std::size_t i = 0; i <= k; ++i) {
    phi.push_back(g.coefficient(i));
    psi.push_back(ginv.coefficient(i));
  }
  std::vector<Cochain> terms;
  for (std::size_t s = 1; s <= k; ++s) {
    terms.push_back(tabulate(2, dim, [&](std::span<const std::size_t> x) {
      Vector out(dim);
      for (std::size_t c = 0; c <= s; ++c)
        for (std::size_t e = 0; c + e <= s; ++e) {
          Vector X = psi[c].column(x[0]);
          Vector Y = psi[e].column(x[1]);
          if (is_zero(X) || is_zero(Y)) continue;
          for (std::size_t b = 0; b + c + e <= s; ++b) {
            Vector Z = mus[b].product(X, Y);
            if (is_zero(Z)) continue;
            out = add(out, phi[s - b - c - e].apply(Z));
          }
        }
      return out;
    }));
  }
  return Deformation(d.base(), std::move(terms));
}

ObstructionReport obstruction(const Deformation& d) {
  const HomAlgebra& base = d.base();
  const std::size_t k = d.order();
  const bool lie = base.kind() == AlgebraKind::lie;
  const Flavor flavor = flavor_for(base.kind());
  auto check = check_deformation(d);
  if (!check.ok())
    throw PreconditionError("obstruction: deformation equation fails at order " + std::to_string(*check.first_failure));
  if (!check_multiplicative(base)) throw NonMultiplicativeError("obstruction: twist is not multiplicative");

  ObstructionReport rep;
  rep.order = k;
  rep.psi = Cochain(3, base.dim());
  for (std::size_t p = 1; p <= k; ++p) {
    const std::size_t q = k + 1 - p;
    if (q < 1 || q > k) continue;
    rep.psi += lie ? nr_bracket(d.term(p), d.term(q), base.alpha())
                   : gerstenhaber_bracket(d.term(p), d.term(q), base.alpha());
  }
  rep.psi *= Scalar(1, 2);
  rep.is_cocycle = coboundary(base, rep.psi, flavor).is_zero();
  if (!rep.is_cocycle) throw InternalError("obstruction: psi is not a 3-cocycle");

  const Cochain target = lie ? -rep.psi : rep.psi;
  CochainSpace c2 = equivariant_basis(base, 2, flavor);
  std::vector<Vector> images;
  for (std::size_t i = 0; i < c2.dim(); ++i) images.push_back(coboundary(base, c2.element(i), flavor).coordinates());
  const std::size_t ambient3 = target.coordinates().size();
  std::optional<Vector> sol;
  if (c2.dim() == 0) {
    if (target.is_zero()) sol = Vector();
  } else {
    sol = solve(Matrix::from_columns(ambient3, images), target.coordinates());
  }
  if (sol) {
    Cochain ext = c2.dim() == 0 ? Cochain(2, base.dim()) : c2.combine(*sol);
    if (coboundary(base, ext, flavor) != target) throw InternalError("obstruction: extension does not solve the equation");
    rep.is_coboundary = true;
    rep.extension_term = std::move(ext);
    return rep;
  }

  CohomologyReport h3 = cohomology(base, 3, flavor);
  rep.h3_representatives = h3.representatives;
  std::vector<Vector> cols = h3.coboundaries.vectors();
  for (const auto& r : h3.representatives) cols.push_back(r.coordinates());
  auto coords = solve(Matrix::from_columns(ambient3, cols), rep.psi.coordinates());
  if (!coords) throw InternalError("obstruction: psi is not in the span of the cocycle basis");
  Cochain reduced(3, base.dim());
  for (std::size_t i = 0; i < h3.representatives.size(); ++i) {
    const Scalar& c = (*coords)[h3.coboundaries.dim() + i];
    rep.class_coordinates.push_back(c);
    Cochain t = h3.representatives[i];
    t *= c;
    reduced += t;
  }
  rep.class_representative = std::move(reduced);
  return rep;
}

RigidityReport rigidity_report(const HomAlgebra& a) {
  RigidityReport r;
  r.dimH2 = cohomology(a, 2).dimH;
  r.dimH3 = cohomology(a, 3).dimH;
  r.rigid_sufficient = r.dimH2 == 0;
  r.unobstructed_sufficient = r.dimH3 == 0;
  return r;
}

HomPoissonAlgebra poisson_from_deformation(const Deformation& d) {
  const HomAlgebra& base = d.base();
  if (base.kind() != AlgebraKind::associative)
    throw PreconditionError("poisson_from_deformation: base must be hom-associative");
  if (auto c = check_commutative(base.mu()); !c)
    throw PreconditionError("poisson_from_deformation: base product is not commutative");
  if (d.order() < 2) throw PreconditionError("poisson_from_deformation: deformation order must be at least 2");
  auto check = check_deformation(d);
  if (!check.ok())
    throw PreconditionError("poisson_from_deformation: deformation equation fails at order " +
                            std::to_string(*check.first_failure));
  const Cochain& m1 = d.term(1);
  StructureConstants br(base.dim());
  for (std::size_t i = 0; i < base.dim(); ++i)
    for (std::size_t j = 0; j < base.dim(); ++j)
      for (std::size_t k = 0; k < base.dim(); ++k) {
        const std::size_t ij[2] = {i, j};
        const std::size_t ji[2] = {j, i};
        br.at(i, j, k) = m1.at(ij, k) - m1.at(ji, k);
      }
  return HomPoissonAlgebra(base.mu(), std::move(br), base.alpha());
}

}  // namespace homcoh
