#include "ahg/report.hpp"

#include "ahg/apolarity.hpp"
#include "ahg/frobenius.hpp"
#include "ahg/groebner.hpp"
#include "ahg/series.hpp"
#include "ahg/simplex.hpp"

#include <random>
#include <sstream>

namespace ahg {

namespace {

struct Suite {
  std::string name;
  int checks = 0;
  bool passed = true;
  std::string detail;

  void fail(const std::string& d) {
    if (passed) detail = d;
    passed = false;
  }
};

using Rng = std::mt19937_64;

int ri(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Polynomial random_poly(Rng& rng, VarFamily fam, int n, int maxdeg,
                       int nterms) {
  Polynomial p(fam, n);
  for (int t = 0; t < nterms; ++t) {
    Monomial m(n);
    int deg = ri(rng, 0, maxdeg);
    for (int k = 0; k < deg; ++k) m[ri(rng, 0, n - 1)] += 1;
    p.add_term(m, Rat(ri(rng, -5, 5)));
  }
  return p;
}

Suite adjointness_suite(Rng& rng, int count) {
  Suite s{"duality-adjointness"};
  for (int it = 0; it < count; ++it) {
    int n = ri(rng, 1, 3);
    Polynomial U = random_poly(rng, VarFamily::T, n, 3, 3);
    Polynomial p = random_poly(rng, VarFamily::T, n, 3, 3);
    Polynomial q = random_poly(rng, VarFamily::DT, n, 4, 4);
    Rat lhs = apolar_pair(star(U, q), p);
    Rat rhs = apolar_pair(q, U * p);
    ++s.checks;
    if (lhs != rhs)
      s.fail("(U*q, p) != (q, Up) for U=" + U.str() + ", q=" + q.str() +
             ", p=" + p.str());
  }
  return s;
}

Suite double_perp_suite(Rng& rng, int count) {
  Suite s{"double-perp"};
  for (int it = 0; it < count; ++it) {
    int n = ri(rng, 1, 3);
    // Random Artinian monomial ideal: pure powers plus extra monomials.
    std::vector<Polynomial> gens;
    int maxpow = 0;
    for (int i = 0; i < n; ++i) {
      Monomial m(n);
      m[i] = ri(rng, 1, 3);
      maxpow = std::max(maxpow, m[i]);
      gens.push_back(Polynomial::monomial(VarFamily::T, m));
    }
    for (int e = 0; e < 2; ++e) {
      Monomial m(n);
      int deg = ri(rng, 1, 3);
      for (int k = 0; k < deg; ++k) m[ri(rng, 0, n - 1)] += 1;
      gens.push_back(Polynomial::monomial(VarFamily::T, m));
    }
    HomogeneousIdeal I(VarFamily::T, n, gens);
    int wd = 0;
    if (!is_artinian(I, &wd)) {
      s.fail("constructed ideal is not Artinian");
      continue;
    }
    DualSpace V = perp_of_ideal(I, wd);
    HomogeneousIdeal J = annihilator_of_space(V, wd + 1);
    ++s.checks;
    if (!ideal_equal(I, J)) s.fail("double perp differs from the ideal");
  }
  return s;
}

Suite toric_suite(Rng& rng, int count) {
  Suite s{"toric-oracle"};
  for (int it = 0; it < count; ++it) {
    int d = ri(rng, 1, 2);
    int n = ri(rng, d + 1, 4);
    IMat A(d, n);
    for (int j = 0; j < n; ++j) A(0, j) = 1;
    for (int r = 1; r < d; ++r)
      for (int j = 0; j < n; ++j) A(r, j) = Int(ri(rng, -2, 2));
    if (rank_of(A) != d) continue;
    IMat B = kernel_basis(A);
    QVec w(n);
    bool generic = false;
    ToricGB gb;
    for (int t = 0; t < 30 && !generic; ++t) {
      for (int j = 0; j < n; ++j) w[j] = Rat(ri(rng, -30, 30));
      try {
        gb = toric_groebner(B, w);
        generic = true;
      } catch (const WeightNotGeneric&) {
      }
    }
    if (!generic) continue;
    // Every GB element must be A-balanced (binomial u - v with Au = Av).
    for (auto& g : gb.basis) {
      ++s.checks;
      if (g.term_count() != 2) {
        s.fail("GB element is not a binomial: " + g.str());
        continue;
      }
      auto it1 = g.terms().begin();
      auto it2 = std::next(it1);
      for (int r = 0; r < d; ++r) {
        Int lhs = 0, rhs = 0;
        for (int j = 0; j < n; ++j) {
          lhs += A(r, j) * it1->first[j];
          rhs += A(r, j) * it2->first[j];
        }
        if (lhs != rhs) s.fail("GB element not A-balanced: " + g.str());
      }
    }
    // Random balanced binomials reduce to zero.
    TermOrder ord = TermOrder::weighted(w);
    std::vector<IVec> us = enumerate_lattice(B, 2);
    for (int t = 0; t < 5 && !us.empty(); ++t) {
      IVec u = us[ri(rng, 0, static_cast<int>(us.size()) - 1)];
      Monomial plus(n), minus(n);
      for (int j = 0; j < n; ++j) {
        long e = u[j].get_si();
        if (e > 0) plus[j] = static_cast<int>(e);
        if (e < 0) minus[j] = static_cast<int>(-e);
      }
      Polynomial f = Polynomial::monomial(VarFamily::DX, plus) -
                     Polynomial::monomial(VarFamily::DX, minus);
      ++s.checks;
      if (!reduces_to_zero(f, gb.basis, ord))
        s.fail("balanced binomial does not reduce to zero");
    }
  }
  return s;
}

Suite series_suite(Rng& rng, int count) {
  Suite s{"series-inverse"};
  for (int it = 0; it < count; ++it) {
    int n = ri(rng, 1, 3);
    Polynomial p = random_poly(rng, VarFamily::T, n, 3, 4);
    p.add_term(Monomial(n), Rat(ri(rng, 1, 4)));  // force a unit
    if (sgn(p.constant_term()) == 0) continue;
    TruncatedSeries f(p, 5);
    TruncatedSeries g = series_invert_unit(f);
    TruncatedSeries one(Polynomial::constant(VarFamily::T, n, Rat(1)), 5);
    ++s.checks;
    if (!(f * g == one)) s.fail("f * f^{-1} != 1 for f=" + p.str());
  }
  return s;
}

Suite operator_suite(Rng& rng, int count) {
  Suite s{"operator-transitivity"};
  for (int it = 0; it < count; ++it) {
    int n = ri(rng, 1, 4);
    // v <= v' <= v'' componentwise integers; the transport factors must
    // telescope: p_{v<-v'} p_{v'<-v''} = p_{v<-v''} as factor multisets.
    QVec v(n), vp(n), vpp(n);
    for (int j = 0; j < n; ++j) {
      int a = ri(rng, -4, 4), b = ri(rng, 0, 3), c = ri(rng, 0, 3);
      v[j] = Rat(a);
      vp[j] = Rat(a + b);
      vpp[j] = Rat(a + b + c);
    }
    POperator p1 = p_operator(v, vp);
    POperator p2 = p_operator(vp, vpp);
    POperator p3 = p_operator(v, vpp);
    auto f1 = p1.sorted_factors();
    auto f2 = p2.sorted_factors();
    for (auto& f : f2) f1.push_back(f);
    std::sort(f1.begin(), f1.end());
    auto f3 = p3.sorted_factors();
    std::sort(f3.begin(), f3.end());
    ++s.checks;
    if (f1 != f3) s.fail("transport factors do not telescope");
    // And as actual operators on a random polynomial.
    Polynomial r = random_poly(rng, VarFamily::Y, n, 3, 3);
    ++s.checks;
    if (!(p1.apply(p2.apply(r)) == p3.apply(r)))
      s.fail("transport composition disagrees on a polynomial");
  }
  return s;
}

Suite lp_suite(Rng& rng, int count) {
  Suite s{"lp-box-oracle"};
  for (int it = 0; it < count; ++it) {
    int n = ri(rng, 1, 4);
    QVec c(n);
    std::vector<LPConstraint> cons;
    Rat expect(0);
    for (int j = 0; j < n; ++j) {
      int lo = ri(rng, -5, 0), hi = lo + ri(rng, 0, 6);
      c[j] = Rat(ri(rng, -4, 4));
      LPConstraint lc;
      lc.a = QVec::Zero(n);
      lc.a[j] = 1;
      lc.rel = LPRel::GE;
      lc.rhs = Rat(lo);
      cons.push_back(lc);
      lc.rel = LPRel::LE;
      lc.rhs = Rat(hi);
      cons.push_back(lc);
      expect += std::min(c[j] * lo, c[j] * hi);
    }
    LPResult r = lp_minimize(c, cons);
    ++s.checks;
    if (r.status != LPStatus::Optimal || r.value != expect)
      s.fail("box LP minimum mismatch");
  }
  return s;
}

}  // namespace

Json run_selftest(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Suite> suites;
  suites.push_back(adjointness_suite(rng, 100));
  suites.push_back(double_perp_suite(rng, 10));
  suites.push_back(toric_suite(rng, 10));
  suites.push_back(series_suite(rng, 25));
  suites.push_back(operator_suite(rng, 50));
  suites.push_back(lp_suite(rng, 50));
#ifdef AHG_TESTING
  {
    // Injected-fault check: a corrupted star must break adjointness.
    star_mutation_hook = true;
    Rng mrng(seed ^ 0x5eed);
    Suite bad = adjointness_suite(mrng, 50);
    star_mutation_hook = false;
    Suite s{"star-mutation-detected"};
    s.checks = bad.checks;
    if (bad.passed) s.fail("mutated star passed the adjointness suite");
    suites.push_back(s);
  }
#endif

  Json rep;
  rep["format"] = "ahg-report 1";
  rep["command"] = "selftest";
  rep["seed"] = seed;
  bool all = true;
  Json js = Json::array();
  for (auto& s : suites) {
    Json j;
    j["name"] = s.name;
    j["checks"] = s.checks;
    j["passed"] = s.passed;
    if (!s.passed) j["detail"] = s.detail;
    all = all && s.passed;
    js.push_back(std::move(j));
  }
  rep["suites"] = std::move(js);
  rep["passed"] = all;
  return rep;
}

}  // namespace ahg
