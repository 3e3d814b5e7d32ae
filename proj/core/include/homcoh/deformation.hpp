#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "homcoh/cochain.hpp"
#include "homcoh/cochain_complex.hpp"
#include "homcoh/hom_algebra.hpp"

namespace homcoh {

// mu_t = mu_0 + t mu_1 + ... + t^k mu_k truncated at order k, with mu_0 the
// base structure. Terms are bilinear, alpha-equivariant, and skew-symmetric
// for lie-type bases.
class Deformation {
 public:
  Deformation() = default;
  // Validates term shapes; throws PreconditionError on violation.
  Deformation(HomAlgebra base, std::vector<Cochain> terms);

  const HomAlgebra& base() const { return base_; }
  std::size_t order() const { return terms_.size(); }
  const std::vector<Cochain>& terms() const { return terms_; }
  // term(0) is the base structure, term(i) for i >= 1 is mu_i.
  const Cochain& term(std::size_t i) const { return i == 0 ? base_.mu().as_cochain() : terms_.at(i - 1); }
  Deformation extended(Cochain next) const;

  friend bool operator==(const Deformation& a, const Deformation& b) = default;

 private:
  HomAlgebra base_;
  std::vector<Cochain> terms_;
};

struct OrderCheck {
  std::size_t order = 0;
  bool ok = true;
  std::optional<Witness> witness;
};

struct DeformationCheck {
  std::vector<OrderCheck> orders;
  std::optional<std::size_t> first_failure;
  bool ok() const { return !first_failure.has_value(); }
};

// The order-s value of the deformation equation: sum_i mu_i o mu_{s-i}
// (associative) or the cyclic sum of [alpha x, [y,z]_i]_{s-i} (lie).
Cochain deformation_defect(const Deformation& d, std::size_t s);
DeformationCheck check_deformation(const Deformation& d);

bool infinitesimal_is_cocycle(const Deformation& d);

// phi_t = id + t phi_1 + ... + t^k phi_k.
class GaugeSeries {
 public:
  GaugeSeries() = default;
  GaugeSeries(std::size_t dim, std::vector<Matrix> terms);
  static GaugeSeries identity(std::size_t dim, std::size_t order);

  std::size_t dim() const { return dim_; }
  std::size_t order() const { return terms_.size(); }
  const std::vector<Matrix>& terms() const { return terms_; }
  // coefficient(0) is the identity.
  Matrix coefficient(std::size_t i) const;

  friend bool operator==(const GaugeSeries& a, const GaugeSeries& b) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Matrix> terms_;
};

GaugeSeries inverse(const GaugeSeries& g);
// Series product outer * inner, i.e. apply inner first.
GaugeSeries compose(const GaugeSeries& outer, const GaugeSeries& inner);

// mu'_t = phi_t o mu_t o (phi_t^{-1} x phi_t^{-1}) modulo t^{k+1}.
Deformation gauge_transform(const Deformation& d, const GaugeSeries& g);

struct ObstructionReport {
  std::size_t order = 0;
  Cochain psi;
  bool is_cocycle = false;
  bool is_coboundary = false;
  // The next term mu_{k+1}; it solves delta_hom(term) = psi for
  // associative bases and delta_hl(term) = -psi for lie bases.
  std::optional<Cochain> extension_term;
  // When obstructed: coordinates of the class of psi against the H^3
  // representatives, and psi reduced onto their span.
  std::vector<Scalar> class_coordinates;
  std::optional<Cochain> class_representative;
  std::vector<Cochain> h3_representatives;
};

ObstructionReport obstruction(const Deformation& d);

struct RigidityReport {
  std::size_t dimH2 = 0;
  std::size_t dimH3 = 0;
  bool rigid_sufficient = false;
  bool unobstructed_sufficient = false;
};

RigidityReport rigidity_report(const HomAlgebra& a);

// {x, y} = mu_1(x, y) - mu_1(y, x) on a commutative base.
HomPoissonAlgebra poisson_from_deformation(const Deformation& d);

}  // namespace homcoh
