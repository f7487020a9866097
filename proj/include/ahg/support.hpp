#pragma once

#include "ahg/ideals.hpp"
#include "ahg/lattice.hpp"
#include "ahg/simplex.hpp"

#include <set>
#include <stdexcept>
#include <vector>

namespace ahg {

struct exponent_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Indices where v is a negative integer.
std::set<int> nsupp(const QVec& v);

/// Fake exponent: solution of A v = beta pinned to a standard-pair root.
struct FakeExponent {
  QVec v;
  std::vector<StandardPair> pairs;  // all standard pairs producing v
  int cls = -1;                     // L-equivalence class index
};

/// Fake exponents plus the standard pairs whose pinned system had no
/// unique solution (those produce no exponent and are reported).
struct FakeExponentSet {
  std::vector<FakeExponent> exponents;
  std::vector<std::pair<StandardPair, std::string>> failures;
};

/// Fake exponents from the standard pairs of in_w(I_A). Exponents are
/// deduplicated; `cls` labels L-equivalence classes (difference in Z B).
/// Pairs with inconsistent or ambiguous pinned systems are collected in
/// `failures` instead of producing an exponent.
FakeExponentSet fake_exponents_full(const IMat& A, const QVec& beta,
                                    const std::vector<StandardPair>& sps,
                                    const IMat& B);

/// As above but throws exponent_error on any failed pair.
std::vector<FakeExponent> fake_exponents(const IMat& A, const QVec& beta,
                                         const std::vector<StandardPair>& sps,
                                         const IMat& B);

/// One negative-support class of v0 + L.
struct SupportClass {
  std::set<int> I;            // the negative support
  bool in_N = false;          // w-minimum exists over the class
  bool n_certified = false;   // the in_N decision is LP-certified
  bool in_Nv = false;         // every class member has w.u >= 0
  bool nv_certified = false;  // the in_Nv decision is LP-certified
  Rat min_weight;             // enumerated minimal w.u (valid when in_N)
  IVec min_u;                 // w-minimal lattice vector, lex-least z on ties
  bool min_certified = false; // enumerated min matches the LP lower bound
};

/// Negative-support analysis of v0 + L within the enumeration radius.
struct SupportAnalysis {
  std::set<int> I0;                  // nsupp(v0)
  std::vector<SupportClass> classes; // NS, sorted by the support set
  int radius = 0;
};

SupportAnalysis support_classes(const QVec& v0, const IMat& B, const QVec& w,
                                int radius);

/// Certification level of a class after a one-time radius doubling.
enum class Certification { LPCertified, RadiusStable, Uncertified };

/// Analysis at `radius` with per-class certification: LP-certified when all
/// LP decisions and the minimum are certified; otherwise radius-stable when
/// the class data is unchanged at radius 2r; otherwise uncertified.
struct CertifiedAnalysis {
  SupportAnalysis analysis;               // at the requested radius
  std::vector<Certification> certs;       // parallel to analysis.classes
  bool stable = true;                     // no class set changed under 2r
};
CertifiedAnalysis support_classes_certified(const QVec& v0, const IMat& B,
                                            const QVec& w, int radius);

/// K = intersection of the supports in N'.
std::set<int> support_intersection(const std::vector<std::set<int>>& Nprime);

/// True iff no enumerated class member of v's own class has negative
/// relative weight (the minimal-w-weight property of fake exponents).
bool is_minimal_exponent(const QVec& v, const IMat& B, const QVec& w,
                         int radius);

}  // namespace ahg
