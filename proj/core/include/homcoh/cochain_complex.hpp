#pragma once

#include <cstddef>
#include <vector>

#include "homcoh/cochain.hpp"
#include "homcoh/hom_algebra.hpp"
#include "homcoh/linalg.hpp"

namespace homcoh {

enum class Flavor { hom_assoc, hom_lie };

Flavor flavor_for(AlgebraKind kind);

// Subspace of alpha-equivariant n-linear maps (alternating as well for
// hom_lie), as coordinates in the d^n * d ambient space.
class CochainSpace {
 public:
  CochainSpace(HomAlgebra algebra, std::size_t arity, Flavor flavor, SubspaceBasis basis);

  const HomAlgebra& algebra() const { return algebra_; }
  std::size_t arity() const { return arity_; }
  Flavor flavor() const { return flavor_; }
  const SubspaceBasis& basis() const { return basis_; }
  std::size_t dim() const { return basis_.dim(); }
  Cochain element(std::size_t i) const;
  Cochain combine(const Vector& coeffs) const;
  bool contains(const Cochain& phi) const;

 private:
  HomAlgebra algebra_;
  std::size_t arity_;
  Flavor flavor_;
  SubspaceBasis basis_;
};

// Linear span of all alternating n-linear maps.
SubspaceBasis alternating_subspace(std::size_t arity, std::size_t dim);

CochainSpace equivariant_basis(const HomAlgebra& a, std::size_t n, Flavor flavor);

Cochain delta_hom(const HomAlgebra& a, const Cochain& phi);
Cochain delta_hl(const HomAlgebra& a, const Cochain& phi);
// delta_hom or delta_hl according to the flavor.
Cochain coboundary(const HomAlgebra& a, const Cochain& phi, Flavor flavor);
// Face-type operators whose alternating sum sum_i (-1)^{i+1} D_i is delta_hom.
Cochain d_i_operator(const HomAlgebra& a, std::size_t i, const Cochain& phi);

struct CohomologyReport {
  std::size_t arity = 0;
  Flavor flavor = Flavor::hom_assoc;
  std::size_t dimC = 0;
  std::size_t dimZ = 0;
  std::size_t dimB = 0;
  std::size_t dimH = 0;
  SubspaceBasis cocycles;
  SubspaceBasis coboundaries;
  std::vector<Cochain> representatives;
};

// Z^n, B^n, H^n = Z^n / B^n of the equivariant complex. B^1 is zero.
// Throws NonMultiplicativeError if alpha is not multiplicative.
CohomologyReport cohomology(const HomAlgebra& a, std::size_t n, Flavor flavor);
CohomologyReport cohomology(const HomAlgebra& a, std::size_t n);

}  // namespace homcoh
