#pragma once

#include "ahg/numeric.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace ahg {

struct rank_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct kernel_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct sublattice_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Rank of an integer matrix over the rationals.
int rank_of(const IMat& A);

/// True iff some rational combination of the rows of A equals (1,...,1).
bool check_homogeneous(const IMat& A);

/// Z-basis of Ker_Z A as columns of an n x (n - d) matrix. The basis is
/// saturated: it generates the full kernel lattice. Throws rank_error when
/// rank(A) < number of rows.
IMat kernel_basis(const IMat& A);

/// Validates a user-supplied basis B of Ker_Z A: A*B = 0 (kernel_error),
/// columns independent and spanning the full lattice (sublattice_error).
void validate_basis(const IMat& A, const IMat& B);

/// Result of solving A*v = beta with coordinates off `free_set` pinned.
struct AffineSolution {
  QVec v;
  bool ambiguous = false;
};

/// Solves A*v = beta where v_i = fixed[i] for i not in free_set. Returns
/// nullopt when inconsistent; sets `ambiguous` when the solution is not
/// unique (v is then one solution).
std::optional<AffineSolution> solve_affine(const IMat& A, const QVec& beta,
                                           const std::map<int, Rat>& fixed,
                                           const std::set<int>& free_set);

/// All u = B*z with |z_i| <= radius, lexicographic in z (first coordinate
/// slowest, from -radius to radius). When w and weight_cap are given, only
/// u with w.u <= weight_cap are kept.
std::vector<IVec> enumerate_lattice(const IMat& B, int radius,
                                    const QVec* w = nullptr,
                                    const Rat* weight_cap = nullptr);

/// Coordinates z with B*z = u, if u lies in the lattice spanned by B.
std::optional<IVec> lattice_coordinates(const IMat& B, const IVec& u);

}  // namespace ahg
