#pragma once

#include "ahg/config.hpp"
#include "ahg/polynomial.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ahg {

using Json = nlohmann::ordered_json;

/// Options for the solve / verify drivers.
struct SolveOptions {
  int exponent = -1;                // 1-based fake-exponent index; -1 = every
                                    // class-minimal representative
  std::string method = "extended";  // "extended" | "lperturb"
  std::string q = "spanning";       // "spanning" or a polynomial (Dt / Ds)
  std::string nprime = "nv";        // "nv" | "n" | explicit "1,3;2,4;..."
};

struct SufficiencyOptions {
  int exponent = -1;          // 1-based index; -1 = minimal representative
  std::string nprime = "nv";  // N' selector
  std::string nsecond;        // N'' selector; empty = same as N'
};

struct SearchBounds {
  int max_d = 3;
  int max_n = 6;
  int entry_bound = 2;   // |A entries| for rows past the all-ones row
  int beta_bound = 2;    // |beta entries|
  int count = 20;
  int radius = 6;        // support-analysis radius per instance
};

/// Full analysis: basis, GB, standard pairs, fake exponents, support
/// classes with certification, ideals and indicial data per L-class
/// representative.
Json run_analyze(const ProblemConfig& cfg);

/// Series construction (extended Frobenius or L-perturbation) with exact
/// verification of every emitted series.
Json run_solve(const ProblemConfig& cfg, const SolveOptions& opts);

/// Sufficiency tests for a chain I_0 in N' subset N'' subset N_v.
Json run_check_sufficiency(const ProblemConfig& cfg,
                           const SufficiencyOptions& opts);

/// Deterministic pseudo-random sweep hunting for instances where
/// Phi(Q_{N_v}(t) : t^{I_0\K}) differs from P_{N_v} : m.
Json run_search(std::uint64_t seed, const SearchBounds& bounds);

/// The instance stream used by run_search (exposed for property tests).
std::vector<ProblemConfig> search_instances(std::uint64_t seed,
                                            const SearchBounds& bounds);

/// Property suites over all modules; pass/fail per property.
Json run_selftest(std::uint64_t seed);

/// SVG plot of the rank-2 lattice regions; throws invalid_argument when
/// h != 2.
std::string emit_region_plot(const ProblemConfig& cfg, int exponent = -1);

/// Deterministic human-readable rendering of a structured report.
std::string render_text(const Json& report);

/// Parses a polynomial like "2*Dt1^2*Dt2 - 1/3*Dt3" in the given family.
Polynomial parse_poly(const std::string& text, VarFamily fam, int nvars);

}  // namespace ahg
