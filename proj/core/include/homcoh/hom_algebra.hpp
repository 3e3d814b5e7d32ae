#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "homcoh/cochain.hpp"
#include "homcoh/linalg.hpp"

namespace homcoh {

enum class AlgebraKind { associative, lie };

std::string_view to_string(AlgebraKind kind);

class HomAlgebra {
 public:
  HomAlgebra() = default;
  HomAlgebra(AlgebraKind kind, StructureConstants mu, TwistMap alpha);

  AlgebraKind kind() const { return kind_; }
  std::size_t dim() const { return mu_.dim(); }
  const StructureConstants& mu() const { return mu_; }
  const TwistMap& alpha() const { return alpha_; }
  Vector product(const Vector& x, const Vector& y) const { return mu_.product(x, y); }
  Vector twist(const Vector& x) const { return alpha_.apply(x); }

  friend bool operator==(const HomAlgebra& a, const HomAlgebra& b) = default;

 private:
  AlgebraKind kind_ = AlgebraKind::associative;
  StructureConstants mu_;
  TwistMap alpha_;
};

class HomPoissonAlgebra {
 public:
  HomPoissonAlgebra() = default;
  HomPoissonAlgebra(StructureConstants mu, StructureConstants bracket, TwistMap alpha);

  std::size_t dim() const { return mu_.dim(); }
  const StructureConstants& mu() const { return mu_; }
  const StructureConstants& bracket() const { return bracket_; }
  const TwistMap& alpha() const { return alpha_; }
  HomAlgebra product_algebra() const { return HomAlgebra(AlgebraKind::associative, mu_, alpha_); }
  HomAlgebra bracket_algebra() const { return HomAlgebra(AlgebraKind::lie, bracket_, alpha_); }

  friend bool operator==(const HomPoissonAlgebra& a, const HomPoissonAlgebra& b) = default;

 private:
  StructureConstants mu_;
  StructureConstants bracket_;
  TwistMap alpha_;
};

// A basis tuple on which an identity fails, with both sides of it.
struct Witness {
  Indices indices;
  Vector lhs;
  Vector rhs;
};

struct CheckResult {
  bool ok = true;
  std::optional<Witness> witness;

  explicit operator bool() const { return ok; }
  static CheckResult pass() { return {}; }
  static CheckResult fail(Witness w) { return {false, std::move(w)}; }
};

Vector evaluate_product(const StructureConstants& mu, const Vector& x, const Vector& y);
Vector evaluate_product(const HomAlgebra& a, const Vector& x, const Vector& y);

CheckResult check_multiplicative(const StructureConstants& mu, const TwistMap& alpha);
CheckResult check_multiplicative(const HomAlgebra& a);
CheckResult check_hom_associative(const StructureConstants& mu, const TwistMap& alpha);
CheckResult check_hom_associative(const HomAlgebra& a);
CheckResult check_commutative(const StructureConstants& mu);
CheckResult check_skew_symmetric(const StructureConstants& bracket);
// Requires kind = lie.
CheckResult check_skew_symmetric(const HomAlgebra& a);
CheckResult check_hom_jacobi(const StructureConstants& bracket, const TwistMap& alpha);
// Requires kind = lie and a skew-symmetric bracket.
CheckResult check_hom_jacobi(const HomAlgebra& a);
CheckResult check_morphism(const HomAlgebra& src, const HomAlgebra& dst, const Matrix& phi);

struct PoissonReport {
  CheckResult commutativity;
  CheckResult hom_associativity;
  CheckResult skew_symmetry;
  CheckResult hom_jacobi;
  CheckResult compatibility;
  CheckResult multiplicativity_mu;
  CheckResult multiplicativity_bracket;

  // The defining axioms; multiplicativity is reported but not required.
  bool ok() const {
    return commutativity.ok && hom_associativity.ok && skew_symmetry.ok && hom_jacobi.ok && compatibility.ok;
  }
};

CheckResult check_poisson_compatibility(const HomPoissonAlgebra& p);
PoissonReport check_hom_poisson(const HomPoissonAlgebra& p);

enum class ExampleName { assoc2dim, sl2, hompoisson3 };

std::optional<ExampleName> parse_example_name(std::string_view name);
std::size_t example_parameter_count(ExampleName name);

using Example = std::variant<HomAlgebra, HomPoissonAlgebra>;

// assoc2dim(lambda, gamma): mu(e1,e1) = e1, mu(e1,e2) = mu(e2,e1) = mu(e2,e2) = e2,
//   alpha(e1) = lambda e1 + gamma e2, alpha(e2) = (lambda + gamma) e2.
// sl2(a..f): basis H, E, F with [H,E] = -2E, [H,F] = 2F, [E,F] = -H and
//   twist matrix rows (a c d), (2d b e), (2c f b).
// hompoisson3(a, b, c, d, l1..l6): mu(x1,x1) = x1, mu(x1,x2) = mu(x2,x1) = x3,
//   {x1,x2} = a x2 + b x3, {x1,x3} = c x2 + d x3,
//   alpha(x1) = l1 x2 + l2 x3, alpha(x2) = l3 x2 + l4 x3, alpha(x3) = l5 x2 + l6 x3.
// No axioms are verified here.
Example build_example(ExampleName name, std::span<const Scalar> params);
Example build_example(std::string_view name, std::span<const Scalar> params);

}  // namespace homcoh
