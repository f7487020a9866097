#pragma once

#include "ahg/monomial.hpp"
#include "ahg/numeric.hpp"

#include <compare>
#include <stdexcept>

namespace ahg {

enum class Cmp { Less = -1, Equal = 0, Greater = 1 };

/// Weight order with graded reverse lexicographic tie-break.
///
/// When elim_block > 0, the total degree in the first elim_block variables
/// is compared first; this makes the order an elimination order for those
/// variables.
struct TermOrder {
  QVec weight;      // length = nvars; may be zero
  int elim_block = 0;

  int nvars() const { return static_cast<int>(weight.size()); }

  static TermOrder grevlex(int nvars) {
    TermOrder o;
    o.weight = QVec::Zero(nvars);
    return o;
  }

  static TermOrder weighted(const QVec& w) {
    TermOrder o;
    o.weight = w;
    return o;
  }

  /// Elimination order: variables [0, block) dominate; the rest are ordered
  /// by `w` (indexed over all nvars, zeros on the block) with grevlex ties.
  static TermOrder elimination(const QVec& w, int block) {
    TermOrder o;
    o.weight = w;
    o.elim_block = block;
    return o;
  }

  Cmp compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != nvars() || b.nvars() != nvars())
      throw std::invalid_argument("monomial_compare: dimension mismatch");
    if (elim_block > 0) {
      int da = 0, db = 0;
      for (int i = 0; i < elim_block; ++i) {
        da += a[i];
        db += b[i];
      }
      if (da != db) return da < db ? Cmp::Less : Cmp::Greater;
    }
    Rat wa(0), wb(0);
    for (int i = 0; i < nvars(); ++i) {
      if (a[i]) wa += weight[i] * a[i];
      if (b[i]) wb += weight[i] * b[i];
    }
    if (wa != wb) return wa < wb ? Cmp::Less : Cmp::Greater;
    // grevlex: higher total degree wins; ties broken by the last
    // nonvanishing difference, negative difference winning.
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? Cmp::Less : Cmp::Greater;
    for (int i = nvars() - 1; i >= 0; --i) {
      int d = a[i] - b[i];
      if (d != 0) return d < 0 ? Cmp::Greater : Cmp::Less;
    }
    return Cmp::Equal;
  }

  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == Cmp::Less;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == Cmp::Greater;
  }
};

}  // namespace ahg
