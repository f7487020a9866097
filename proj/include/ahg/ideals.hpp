#pragma once

#include "ahg/groebner.hpp"
#include "ahg/polynomial.hpp"

#include <optional>
#include <set>
#include <vector>

namespace ahg {

/// Monomial ideal with minimal generating set.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(int nvars, std::vector<Monomial> gens);

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool contains(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.nvars_ == b.nvars_ && a.gens_ == b.gens_;
  }

 private:
  int nvars_ = 0;
  std::vector<Monomial> gens_;  // minimal, sorted lexicographically
};

/// Standard pair (a, sigma): the set a + N^sigma of standard monomials.
struct StandardPair {
  Monomial root;          // a, supported off sigma
  std::set<int> sigma;    // free directions

  bool contains(const Monomial& m) const {
    for (int i = 0; i < m.nvars(); ++i) {
      if (sigma.count(i)) continue;
      if (m[i] != root[i]) return false;
    }
    return true;
  }
  friend bool operator==(const StandardPair& a, const StandardPair& b) {
    return a.root == b.root && a.sigma == b.sigma;
  }
  friend bool operator<(const StandardPair& a, const StandardPair& b) {
    if (!(a.root == b.root)) return a.root < b.root;
    return a.sigma < b.sigma;
  }
};

/// Standard pairs of a monomial ideal: the unique irredundant cover of the
/// standard monomials by maximal pairs, sorted for determinism.
std::vector<StandardPair> standard_pairs(const MonomialIdeal& I);

/// Homogeneous ideal in a polynomial ring, with a cached reduced Groebner
/// basis under grevlex. Generators need not be homogeneous individually for
/// membership tests, but colon/intersect assume homogeneity of the ideal.
class HomogeneousIdeal {
 public:
  HomogeneousIdeal() = default;
  HomogeneousIdeal(VarFamily fam, int nvars, std::vector<Polynomial> gens);

  static HomogeneousIdeal zero(VarFamily fam, int nvars) {
    return HomogeneousIdeal(fam, nvars, {});
  }

  VarFamily family() const { return fam_; }
  int nvars() const { return nvars_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  const std::vector<Polynomial>& groebner() const { return gb_; }
  const TermOrder& order() const { return ord_; }

  bool contains(const Polynomial& f) const;
  bool is_zero() const { return gb_.empty(); }

  HomogeneousIdeal operator+(const HomogeneousIdeal& o) const;

 private:
  VarFamily fam_ = VarFamily::DS;
  int nvars_ = 0;
  std::vector<Polynomial> gens_;
  std::vector<Polynomial> gb_;
  TermOrder ord_;
};

/// Ideal quotient (I : f) for homogeneous I and homogeneous f, computed via
/// intersect(I, <f>) followed by exact division.
HomogeneousIdeal colon(const HomogeneousIdeal& I, const Polynomial& f);

/// Intersection of two homogeneous ideals (auxiliary-variable elimination).
HomogeneousIdeal intersect(const HomogeneousIdeal& I,
                           const HomogeneousIdeal& J);

/// Product ideal I*J.
HomogeneousIdeal product(const HomogeneousIdeal& I, const HomogeneousIdeal& J);

bool ideal_equal(const HomogeneousIdeal& I, const HomogeneousIdeal& J);

/// Artinian test: every variable has a pure power in the leading-term
/// ideal. On success, *witness_degree (if given) receives the least degree D
/// with no standard monomials of degree D.
bool is_artinian(const HomogeneousIdeal& I, int* witness_degree = nullptr);

/// Basis of the degree-d piece of the quotient ring R/I: the standard
/// monomials of degree d.
std::vector<Monomial> standard_monomials(const HomogeneousIdeal& I, int d);

/// Colon of a monomial ideal by a monomial: generated by g / gcd(g, f).
MonomialIdeal monomial_colon(const MonomialIdeal& I, const Monomial& f);

/// Intersection of monomial ideals: pairwise lcms.
MonomialIdeal monomial_intersect(const MonomialIdeal& I,
                                 const MonomialIdeal& J);

}  // namespace ahg
