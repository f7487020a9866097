#pragma once

#include "ahg/apolarity.hpp"
#include "ahg/ideals.hpp"
#include "ahg/series.hpp"
#include "ahg/support.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ahg {

struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// Product of linear factors (d_{y_nu} + c), kept factored; applying the
/// factors one at a time keeps intermediate results small.
struct POperator {
  int nvars = 0;
  std::vector<std::pair<int, Rat>> factors;  // (variable, constant)

  bool is_unit() const {
    for (auto& [nu, c] : factors)
      if (sgn(c) == 0) return false;
    return true;
  }
  /// Exponent of the pure-derivative monomial part (zero-constant factors).
  Monomial monomial_part() const {
    Monomial m(nvars);
    for (auto& [nu, c] : factors)
      if (sgn(c) == 0) m[nu] += 1;
    return m;
  }
  /// Applies the operator to a polynomial in the y-variables.
  Polynomial apply(const Polynomial& r) const;
  /// Expanded form in the DY family (small operators only).
  Polynomial expand() const;
  /// Sorted factor multiset, for factor-level comparisons.
  std::vector<std::pair<int, Rat>> sorted_factors() const;
};

/// p_{target <- source} from the factor formula
///   prod_nu prod_{mu=1}^{source_nu - target_nu} (d_{y_nu} + source_nu - mu + 1).
/// Requires source - target integral.
POperator p_operator(const QVec& target, const QVec& source);

/// q_i for the family of minimal vectors:
///   prod_nu prod_{mu=1}^{max_l (v^(l)_nu - v^(i)_nu)} (d_{y_nu} + v^(i)_nu + mu).
POperator q_operator(int i, const std::vector<QVec>& minimal_vectors);

/// The five ideals attached to (v, N').
struct FrobeniusIdeals {
  std::set<int> K;             // intersection of the supports in N'
  Monomial m_t;                // t^{I_0 \ K}
  Polynomial m_s;              // (Bs)^{I_0 \ K}
  MonomialIdeal P_t;           // P_{N'}(t)
  HomogeneousIdeal P_s;        // P_{N'} in s
  HomogeneousIdeal Q_t;        // Q_{N'}(t)
  MonomialIdeal PB_t;          // P_{B_{N'}}(t)
  HomogeneousIdeal PB_s;       // P_{B_{N'}} in s
  bool certified = true;       // false when NS carries uncertified classes
};

FrobeniusIdeals build_ideals(const QVec& v, const IMat& A, const IMat& B,
                             const std::vector<std::set<int>>& Nprime,
                             const std::vector<std::set<int>>& NS);

/// Dual space of x^v-coefficients: (Q_{N'}(t) : t^{I_0\K})^perp, together
/// with the colon ideal (the shifted indicial ideal when N' = N_v).
struct CoefficientDual {
  HomogeneousIdeal colon_ideal;  // in t
  DualSpace dual;                // in Dt
};
CoefficientDual coefficient_dual(const FrobeniusIdeals& FI, int degree_cap);

/// Unit-series factorization: t^{I_0\K} a_u(t) = c_u(t) * t^{I_u\(I_0 cap K)}.
struct CUnit {
  TruncatedSeries c;  // unit series, c(0) != 0
  Monomial mono;      // t^{I_u \ (I_0 cap K)}
};
CUnit c_unit_series(const QVec& v, const IVec& u, const std::set<int>& K,
                    int deg);

/// Truncated logarithmic series solution.
struct LogSeries {
  QVec v;                                      // base exponent
  std::vector<std::pair<IVec, Polynomial>> terms;  // (u, r_{v+u}(y))
  Rat weight_cap;                              // W_max
  std::vector<std::set<int>> support;          // N'
};

/// Extended Frobenius method: series from q in Q_{N'}(t)^perp.
LogSeries extract_solution(const QVec& v, const IMat& A, const IMat& B,
                           const QVec& w, const FrobeniusIdeals& FI,
                           const std::vector<std::set<int>>& Nprime,
                           const Polynomial& q, const Rat& W_max, int radius);

/// L-perturbation method: series from q' in P_{N'}^perp (s-variables).
LogSeries l_perturb_solution(const QVec& v, const IMat& A, const IMat& B,
                             const QVec& w, const FrobeniusIdeals& FI,
                             const std::vector<std::set<int>>& Nprime,
                             const Polynomial& qp, const Rat& W_max,
                             int radius);

struct Violation {
  std::string equation;  // rendered description of the failing equation
};

struct VerifyReport {
  int checked = 0;
  int skipped = 0;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Exact verification of the coefficient system: Euler equations, pair
/// transport equations, kill equations against the non-N' classes, and a
/// direct check of the Groebner-basis operators on complete output terms.
VerifyReport verify_series(const LogSeries& s, const IMat& A, const IMat& B,
                           const QVec& w, const std::vector<Polynomial>& gb,
                           const std::vector<std::set<int>>& NS, int radius);

/// Sufficiency tests for the chain I_0 in N' subset N'' subset N_v.
struct SufficiencyReport {
  bool a_phi_colon_eq = false;   // Phi(Q : t^{I0\K}) == P : m
  bool b_colon_is_PB = false;    // P : m == P_B
  bool c_smallest = false;       // N' has a smallest element
  bool d_intersection = false;   // intersection-form colon equality
  std::vector<std::pair<std::set<int>, bool>> e_square;  // per-I square test
  bool e_all = false;
  bool f_chain = false;          // (b) for N'' (chain conclusion)
  bool suffices = false;         // verdict: == a_phi_colon_eq
};
SufficiencyReport sufficiency_check(const QVec& v, const IMat& A,
                                    const IMat& B,
                                    const std::vector<std::set<int>>& Nprime,
                                    const std::vector<std::set<int>>& Nsecond,
                                    const std::vector<std::set<int>>& NS,
                                    int degree_cap);

}  // namespace ahg
