#pragma once

#include "ahg/lattice.hpp"
#include "ahg/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace ahg {

/// Raised when the weight vector fails to pick a monomial initial ideal:
/// some reduced Gröbner basis element has a non-monomial initial form.
struct WeightNotGeneric : std::runtime_error {
  Polynomial offending;
  explicit WeightNotGeneric(Polynomial p)
      : std::runtime_error("weight vector is not generic: initial form of " +
                           p.str() + " is not a monomial"),
        offending(std::move(p)) {}
};

/// Remainder of f on division by basis (full reduction of every term).
/// The result is canonical once `basis` is a Groebner basis.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const TermOrder& ord);

/// Reduced Groebner basis (monic, autoreduced, sorted by leading monomial
/// ascending). Pair selection: smallest lcm in the term order (normal
/// strategy); Buchberger's coprime-leading-term criterion applied.
std::vector<Polynomial> buchberger(std::vector<Polynomial> gens,
                                   const TermOrder& ord);

/// True iff f reduces to zero modulo the basis.
bool reduces_to_zero(const Polynomial& f, const std::vector<Polynomial>& basis,
                     const TermOrder& ord);

/// Generators of the toric ideal I_A in the DX ring (n variables), obtained
/// from lattice-basis binomials by saturation at the product of variables.
/// `B` must be a basis of Ker_Z A.
std::vector<Polynomial> toric_ideal(const IMat& B);

/// Reduced Groebner basis of I_A under weight order w (grevlex tie-break)
/// together with the monomial generators of in_w(I_A). Throws
/// WeightNotGeneric when in_w is not a monomial ideal.
struct ToricGB {
  std::vector<Polynomial> basis;          // reduced GB, DX ring
  std::vector<Monomial> initial_gens;     // leading monomials
};
ToricGB toric_groebner(const IMat& B, const QVec& w);

}  // namespace ahg
