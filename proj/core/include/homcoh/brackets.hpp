#pragma once

#include "homcoh/cochain.hpp"
#include "homcoh/hom_algebra.hpp"

namespace homcoh {

// Degrees below are graded degrees: a = phi.arity() - 1, b = psi.arity() - 1.

// j_phi(psi)(x_0..x_{a+b}) =
//   sum_{k=0}^{b} (-1)^{ak} psi(alpha^a x_0, .., phi(x_k..x_{k+a}), .., alpha^a x_{a+b}).
Cochain j_insert(const Cochain& phi, const Cochain& psi, const TwistMap& alpha);

// [phi, psi] = j_phi(psi) - (-1)^{ab} j_psi(phi).
Cochain gerstenhaber_bracket(const Cochain& phi, const Cochain& psi, const TwistMap& alpha);

// (1/n!) sum_sigma sgn(sigma) phi(x_sigma(0), .., x_sigma(n-1)).
Cochain alternator(const Cochain& phi);

// ((a+b+1)! / ((a+1)! (b+1)!)) alternator(j_phi(psi)).
Cochain i_insert(const Cochain& phi, const Cochain& psi, const TwistMap& alpha);

// (1/(b! (a+1)!)) sum_sigma sgn(sigma)
//   psi(phi(x_sigma(0)..x_sigma(a)), alpha^a x_sigma(a+1), .., alpha^a x_sigma(a+b)).
// Agrees with i_insert when phi and psi are alternating.
Cochain i_insert_permutation_sum(const Cochain& phi, const Cochain& psi, const TwistMap& alpha);

// [phi, psi] = i_phi(psi) - (-1)^{ab} i_psi(phi); inputs must be alternating.
Cochain nr_bracket(const Cochain& phi, const Cochain& psi, const TwistMap& alpha);

// (phi cup psi)(x_0..x_{a+b+1}) =
//   mu(alpha^b phi(x_0..x_a), alpha^a psi(x_{a+1}..x_{a+b+1})).
Cochain cup(const Cochain& phi, const Cochain& psi, const StructureConstants& mu, const TwistMap& alpha);

// [mu, phi] with the Gerstenhaber bracket; equals -delta_hom(a, phi).
Cochain bracket_differential_assoc(const HomAlgebra& a, const Cochain& phi);
// [[.,.], phi] with the Nijenhuis-Richardson bracket; equals delta_hl(a, phi).
Cochain bracket_differential_lie(const HomAlgebra& a, const Cochain& phi);

enum class BracketKind { delta, wedge };

struct GradedBracketResult {
  Cochain value;
  int left_degree = 0;
  int right_degree = 0;
};

GradedBracketResult bracket(BracketKind kind, const Cochain& phi, const Cochain& psi, const TwistMap& alpha);

}  // namespace homcoh
