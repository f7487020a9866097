#pragma once

#include "ahg/ideals.hpp"
#include "ahg/polynomial.hpp"

#include <vector>

namespace ahg {

/// Apolar pairing (q, p) = (q(d) . p)(0) for q in the dual family of p.
Rat apolar_pair(const Polynomial& q, const Polynomial& p);

/// Star action of a coordinate polynomial on a dual-family polynomial:
/// (U star q)(z) = (U(d_z) . q(z)) rewritten back in the dual family. It is
/// the adjoint of multiplication: (m star q, p) = (q, m p).
Polynomial star(const Polynomial& U, const Polynomial& q);

#ifdef AHG_TESTING
/// Test hook: when set, star() flips the sign of first-order terms, used to
/// verify that the verification layer catches a broken adjoint.
extern bool star_mutation_hook;
#endif

/// Finite-dimensional graded subspace of the dual ring, stored as a basis.
struct DualSpace {
  VarFamily fam = VarFamily::DS;
  int nvars = 0;
  std::vector<Polynomial> basis;  // reduced, deterministic order
  bool complete = true;           // false when truncated by a degree cap
};

/// Graded dual space P^perp up to degree `maxdeg`: polynomials annihilated
/// by every generator of P acting via star. When I is Artinian the space is
/// complete once maxdeg reaches the witness degree; `complete` reports this.
DualSpace perp_of_ideal(const HomogeneousIdeal& I, int maxdeg);

/// Annihilator ideal of a star-closed space: all U with U star q = 0 for
/// every basis element. Throws std::domain_error when the space is not
/// closed under the star action of the variables.
HomogeneousIdeal annihilator_of_space(const DualSpace& V, int maxdeg);

/// Ring maps for transporting between the t-variables (n of them) and the
/// s-variables (h of them), induced by a lattice basis B:
///   phi: C[t] -> C[s],   t_j  -> (Bs)_j         (kernel <At>)
///   psi: C[Ds] -> C[Dt], Ds_k -> b^(k) . Dt     (adjoint of phi)
Polynomial phi_map(const Polynomial& f, const IMat& B);
Polynomial psi_map(const Polynomial& q, const IMat& B);

/// Image under phi of a t-ideal, as an s-ideal.
HomogeneousIdeal phi_ideal(const HomogeneousIdeal& I, const IMat& B);

}  // namespace ahg
