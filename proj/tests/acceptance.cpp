// Acceptance gate: runs the twelve primary criteria and prints one
// PASS/FAIL line per criterion. Exit status is nonzero when any fails.

#include "ahg/apolarity.hpp"
#include "ahg/config.hpp"
#include "ahg/frobenius.hpp"
#include "ahg/groebner.hpp"
#include "ahg/ideals.hpp"
#include "ahg/lattice.hpp"
#include "ahg/report.hpp"
#include "ahg/support.hpp"

#include "test_util.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace ahg;

namespace {

int g_failures = 0;

#define REQUIRE_OK(cond)                                             \
  do {                                                               \
    if (!(cond)) {                                                   \
      throw std::runtime_error(std::string("check failed: ") + #cond \
                               + " (line " + std::to_string(__LINE__) + ")"); \
    }                                                                \
  } while (0)

void criterion(int n, const std::string& desc,
               const std::function<void()>& body) {
  try {
    body();
    std::cout << "PASS criterion " << n << ": " << desc << "\n";
  } catch (const std::exception& e) {
    std::cout << "FAIL criterion " << n << ": " << desc << " -- " << e.what()
              << "\n";
    ++g_failures;
  }
  std::cout.flush();
}

struct Fixture {
  ProblemConfig cfg;
  IMat B;
  ToricGB gb;
  std::vector<StandardPair> sps;
  std::vector<FakeExponent> fes;
};

Fixture load(const std::string& name) {
  Fixture f;
  f.cfg = load_config(tu::fixture_path(name));
  f.B = f.cfg.basis ? *f.cfg.basis : kernel_basis(f.cfg.A);
  f.gb = toric_groebner(f.B, f.cfg.w);
  MonomialIdeal in_w(f.cfg.n(), f.gb.initial_gens);
  f.sps = standard_pairs(in_w);
  f.fes = fake_exponents(f.cfg.A, f.cfg.beta, f.sps, f.B);
  return f;
}

std::multiset<std::string> poly_set(const std::vector<Polynomial>& ps) {
  std::multiset<std::string> out;
  for (const auto& p : ps) out.insert(p.str());
  return out;
}

struct Family {
  std::vector<QVec> vs;
  std::vector<std::set<int>> Nv, NS;
  std::set<int> K;
};

Family minimal_family(const QVec& v, const IMat& B, const QVec& w,
                      int radius) {
  Family fam;
  SupportAnalysis sa = support_classes(v, B, w, radius);
  for (const auto& c : sa.classes) {
    fam.NS.push_back(c.I);
    if (!c.in_Nv) continue;
    fam.Nv.push_back(c.I);
    QVec m = v;
    for (int i = 0; i < v.size(); ++i) m[i] += Rat(c.min_u[i]);
    fam.vs.push_back(m);
  }
  fam.K = support_intersection(fam.Nv);
  return fam;
}

Monomial set_monomial(int n, const std::set<int>& I) {
  Monomial m(n);
  for (int i : I) m[i] = 1;
  return m;
}

HomogeneousIdeal random_artinian(std::mt19937_64& rng, int n, int maxexp) {
  std::vector<Polynomial> gens;
  for (int i = 0; i < n; ++i)
    gens.push_back(Polynomial::monomial(
        VarFamily::T,
        Monomial::unit(n, i, 1 + static_cast<int>(rng() % maxexp))));
  int extra = static_cast<int>(rng() % 3);
  for (int k = 0; k < extra; ++k) {
    Monomial m(n);
    int deg = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < deg; ++j) m[static_cast<int>(rng() % n)] += 1;
    gens.push_back(Polynomial::monomial(VarFamily::T, m));
  }
  return HomogeneousIdeal(VarFamily::T, n, gens);
}

/// Factorization and pairing identities for one minimal-vector family.
void check_family(const Family& fam, int n) {
  std::vector<std::set<int>> I;
  for (const auto& v : fam.vs) I.push_back(nsupp(v));
  const std::set<int>& K = fam.K;
  auto diff = [](const std::set<int>& a, const std::set<int>& b) {
    std::set<int> r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(r, r.begin()));
    return r;
  };
  for (size_t j = 0; j < fam.vs.size(); ++j) {
    POperator qj = q_operator(static_cast<int>(j), fam.vs);
    REQUIRE_OK(qj.monomial_part() == set_monomial(n, diff(I[j], K)));
    for (size_t k = j + 1; k < fam.vs.size(); ++k) {
      POperator pkj = p_operator(fam.vs[k], fam.vs[j]);
      POperator pjk = p_operator(fam.vs[j], fam.vs[k]);
      auto a = pkj.sorted_factors(), b = pjk.sorted_factors();
      std::vector<std::pair<int, Rat>> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(common));
      REQUIRE_OK(common.empty());
      REQUIRE_OK(pkj.monomial_part() == set_monomial(n, diff(I[k], I[j])));
      REQUIRE_OK(pjk.monomial_part() == set_monomial(n, diff(I[j], I[k])));
      POperator qk = q_operator(static_cast<int>(k), fam.vs);
      auto fa = pkj.sorted_factors();
      auto fq = qj.sorted_factors();
      fa.insert(fa.end(), fq.begin(), fq.end());
      std::sort(fa.begin(), fa.end());
      auto fb = pjk.sorted_factors();
      auto fq2 = qk.sorted_factors();
      fb.insert(fb.end(), fq2.begin(), fq2.end());
      std::sort(fb.begin(), fb.end());
      REQUIRE_OK(fa == fb);
      std::set<int> uni;
      std::set_union(I[j].begin(), I[j].end(), I[k].begin(), I[k].end(),
                     std::inserter(uni, uni.begin()));
      REQUIRE_OK(pkj.monomial_part() * qj.monomial_part() ==
                 set_monomial(n, diff(uni, K)));
    }
  }
}

}  // namespace

int main() {
  criterion(1, "first-fixture reduced Groebner basis, under one second", [] {
    auto t0 = std::chrono::steady_clock::now();
    Fixture f = load("ex71.cfg");
    auto t1 = std::chrono::steady_clock::now();
    std::multiset<std::string> expect = poly_set({
        parse_poly("Dx2*Dx3 - Dx1*Dx4", VarFamily::DX, 4),
        parse_poly("Dx1*Dx4^2 - Dx3^3", VarFamily::DX, 4),
        parse_poly("Dx2^2 - Dx1*Dx3", VarFamily::DX, 4),
        parse_poly("Dx2*Dx4 - Dx3^2", VarFamily::DX, 4),
    });
    REQUIRE_OK(poly_set(f.gb.basis) == expect);
    double secs = std::chrono::duration<double>(t1 - t0).count();
    REQUIRE_OK(secs < 1.0);
  });

  criterion(2, "first-fixture initial ideal and standard pairs", [] {
    Fixture f = load("ex71.cfg");
    std::set<Monomial> init(f.gb.initial_gens.begin(),
                            f.gb.initial_gens.end());
    std::set<Monomial> expect_init = {
        tu::mono({0, 1, 1, 0}), tu::mono({1, 0, 0, 2}),
        tu::mono({0, 2, 0, 0}), tu::mono({0, 1, 0, 1})};
    REQUIRE_OK(init == expect_init);
    std::set<StandardPair> got(f.sps.begin(), f.sps.end());
    std::set<StandardPair> expect = {
        {tu::mono({0, 0, 0, 0}), tu::iset({2, 3})},
        {tu::mono({0, 0, 0, 0}), tu::iset({0, 2})},
        {tu::mono({0, 0, 0, 1}), tu::iset({0, 2})},
        {tu::mono({0, 1, 0, 0}), tu::iset({0})},
    };
    REQUIRE_OK(got == expect);
  });

  criterion(3, "first-fixture fake exponents and lattice classes", [] {
    Fixture f = load("ex71.cfg");
    REQUIRE_OK(f.fes.size() == 3);
    int cls_v = -1, cls_vp = -1, cls_half = -1;
    for (const auto& fe : f.fes) {
      if (fe.v == tu::qvec({0, 0, -1, 1})) {
        REQUIRE_OK(fe.pairs.size() == 2);
        cls_v = fe.cls;
      } else if (fe.v == tu::qvec({-1, 1, 0, 0})) {
        REQUIRE_OK(fe.pairs.size() == 1);
        cls_vp = fe.cls;
      } else {
        REQUIRE_OK(fe.v == tu::qvec_rat({"-1/2", "0", "1/2", "0"}));
        REQUIRE_OK(fe.pairs.size() == 1);
        cls_half = fe.cls;
      }
    }
    REQUIRE_OK(cls_v >= 0 && cls_vp >= 0 && cls_half >= 0);
    REQUIRE_OK(cls_v == cls_vp);
    REQUIRE_OK(cls_v != cls_half);
  });

  criterion(4, "first-fixture support analysis with certification", [] {
    Fixture f = load("ex71.cfg");
    QVec v = tu::qvec({0, 0, -1, 1});
    CertifiedAnalysis ca = support_classes_certified(v, f.B, f.cfg.w, 10);
    REQUIRE_OK(ca.stable);
    REQUIRE_OK(ca.analysis.I0 == tu::iset({2}));
    std::set<std::set<int>> inN, outN;
    std::vector<std::set<int>> nv;
    for (const auto& c : ca.analysis.classes) {
      (c.in_N ? inN : outN).insert(c.I);
      if (c.in_Nv) nv.push_back(c.I);
    }
    std::set<std::set<int>> expect_in = {
        tu::iset({2}), tu::iset({0}), tu::iset({0, 2}), tu::iset({0, 2, 3})};
    std::set<std::set<int>> expect_out = {
        tu::iset({0, 3}), tu::iset({0, 1, 3}), tu::iset({1, 3}),
        tu::iset({1}), tu::iset({1, 2})};
    REQUIRE_OK(inN == expect_in);
    REQUIRE_OK(outN == expect_out);
    REQUIRE_OK(std::set<std::set<int>>(nv.begin(), nv.end()) == expect_in);
    REQUIRE_OK(support_intersection(nv).empty());
    for (const auto& cert : ca.certs)
      REQUIRE_OK(cert != Certification::Uncertified);
    // The deformation monomial is t3.
    Family fam = minimal_family(v, f.B, f.cfg.w, 10);
    FrobeniusIdeals FI = build_ideals(v, f.cfg.A, f.B, fam.Nv, fam.NS);
    REQUIRE_OK(FI.K.empty());
    REQUIRE_OK(FI.m_t == tu::mono({0, 0, 1, 0}));
  });

  criterion(5, "first-fixture ideal pipeline and duality verdict", [] {
    Fixture f = load("ex71.cfg");
    QVec v = tu::qvec({0, 0, -1, 1});
    Family fam = minimal_family(v, f.B, f.cfg.w, f.cfg.radius);
    FrobeniusIdeals FI = build_ideals(v, f.cfg.A, f.B, fam.Nv, fam.NS);
    std::vector<Polynomial> qg;
    for (int j = 0; j < 4; ++j) {
      qg.push_back(Polynomial::variable(VarFamily::T, 4, 0) *
                   Polynomial::variable(VarFamily::T, 4, j));
      qg.push_back(Polynomial::variable(VarFamily::T, 4, 2) *
                   Polynomial::variable(VarFamily::T, 4, j));
    }
    REQUIRE_OK(ideal_equal(FI.Q_t, HomogeneousIdeal(VarFamily::T, 4, qg)));
    CoefficientDual cd = coefficient_dual(FI, f.cfg.degree_cap);
    std::vector<Polynomial> irr;
    for (int j = 0; j < 4; ++j)
      irr.push_back(Polynomial::variable(VarFamily::T, 4, j));
    REQUIRE_OK(
        ideal_equal(cd.colon_ideal, HomogeneousIdeal(VarFamily::T, 4, irr)));
    REQUIRE_OK(cd.dual.basis.size() == 1);
    HomogeneousIdeal Pm = colon(FI.P_s, FI.m_s);
    std::vector<Polynomial> s12 = {Polynomial::variable(VarFamily::S, 2, 0),
                                   Polynomial::variable(VarFamily::S, 2, 1)};
    REQUIRE_OK(ideal_equal(Pm, HomogeneousIdeal(VarFamily::S, 2, s12)));
    MonomialIdeal expectPB(4,
                           {tu::mono({0, 1, 0, 0}), tu::mono({1, 0, 0, 1})});
    REQUIRE_OK(FI.PB_t == expectPB);
    REQUIRE_OK(!ideal_equal(Pm, FI.PB_s));
    SufficiencyReport sr = sufficiency_check(v, f.cfg.A, f.B, fam.Nv, fam.Nv,
                                             fam.NS, f.cfg.degree_cap);
    REQUIRE_OK(sr.a_phi_colon_eq);
    REQUIRE_OK(sr.suffices);
  });

  criterion(6, "second-fixture pipeline and product-intersection gap", [] {
    Fixture f = load("ex72.cfg");
    REQUIRE_OK(f.gb.basis.size() == 9);
    REQUIRE_OK(f.sps.size() == 8);
    REQUIRE_OK(f.fes.size() == 7);
    std::vector<QVec> expect = {
        tu::qvec({-1, 1, 0, 0, 0, 1}),  tu::qvec({1, -1, 1, 0, 0, 0}),
        tu::qvec({0, 1, -1, 1, 0, 0}),  tu::qvec({0, 0, 1, -1, 1, 0}),
        tu::qvec({0, 0, 0, 1, -1, 1}),  tu::qvec({1, 0, 0, 0, 1, -1}),
        tu::qvec_rat({"0", "0", "1/2", "0", "0", "1/2"})};
    int cls1 = -1, cls7 = -1;
    for (const auto& want : expect) {
      bool found = false;
      for (const auto& fe : f.fes)
        if (fe.v == want) {
          found = true;
          if (want == expect[0]) cls1 = fe.cls;
          if (want == expect[6]) {
            cls7 = fe.cls;
            REQUIRE_OK(fe.pairs.size() == 2);
          } else if (!(want == expect[0])) {
            REQUIRE_OK(fe.cls == (cls1 >= 0 ? cls1 : fe.cls));
          }
        }
      REQUIRE_OK(found);
    }
    REQUIRE_OK(cls1 != cls7);

    QVec v1 = tu::qvec({-1, 1, 0, 0, 0, 1});
    Family fam = minimal_family(v1, f.B, f.cfg.w, f.cfg.radius);
    FrobeniusIdeals FI = build_ideals(v1, f.cfg.A, f.B, fam.Nv, fam.NS);
    // Q(t) is generated by all quadratic monomials.
    std::vector<Polynomial> quad;
    for (int i = 0; i < 6; ++i)
      for (int j = i; j < 6; ++j)
        quad.push_back(Polynomial::variable(VarFamily::T, 6, i) *
                       Polynomial::variable(VarFamily::T, 6, j));
    REQUIRE_OK(ideal_equal(FI.Q_t, HomogeneousIdeal(VarFamily::T, 6, quad)));
    CoefficientDual cd = coefficient_dual(FI, f.cfg.degree_cap);
    std::vector<Polynomial> irr;
    for (int j = 0; j < 6; ++j)
      irr.push_back(Polynomial::variable(VarFamily::T, 6, j));
    REQUIRE_OK(
        ideal_equal(cd.colon_ideal, HomogeneousIdeal(VarFamily::T, 6, irr)));
    REQUIRE_OK(cd.dual.basis.size() == 1);
    HomogeneousIdeal Pm = colon(FI.P_s, FI.m_s);
    std::vector<Polynomial> s123 = {Polynomial::variable(VarFamily::S, 3, 0),
                                    Polynomial::variable(VarFamily::S, 3, 1),
                                    Polynomial::variable(VarFamily::S, 3, 2)};
    REQUIRE_OK(ideal_equal(Pm, HomogeneousIdeal(VarFamily::S, 3, s123)));
    SufficiencyReport sr = sufficiency_check(v1, f.cfg.A, f.B, fam.Nv, fam.Nv,
                                             fam.NS, f.cfg.degree_cap);
    REQUIRE_OK(sr.suffices);

    // <At> * <t_i> differs from <At> n <t_i>.
    std::vector<Polynomial> at;
    for (int r = 0; r < f.cfg.d(); ++r) {
      Polynomial row(VarFamily::T, 6);
      for (int j = 0; j < 6; ++j)
        row += Rat(f.cfg.A(r, j)) * Polynomial::variable(VarFamily::T, 6, j);
      at.push_back(row);
    }
    HomogeneousIdeal At(VarFamily::T, 6, at);
    HomogeneousIdeal Irr(VarFamily::T, 6, irr);
    REQUIRE_OK(!ideal_equal(product(At, Irr), intersect(At, Irr)));
  });

  criterion(7, "duality property suite, 500 randomized checks each", [] {
    std::mt19937_64 rng(1009);
    // Adjointness of the star action.
    for (int t = 0; t < 500; ++t) {
      int n = 2 + static_cast<int>(rng() % 2);
      Polynomial U = tu::random_poly(rng, VarFamily::T, n, 3, 4);
      Polynomial p = tu::random_poly(rng, VarFamily::T, n, 3, 4);
      Polynomial q = tu::random_poly(rng, VarFamily::DT, n, 3, 4);
      REQUIRE_OK(apolar_pair(star(U, q), p) == apolar_pair(q, U * p));
    }
    // Perp membership: generator-wise annihilation extends to the ideal.
    for (int t = 0; t < 500; ++t) {
      int n = 2 + static_cast<int>(rng() % 2);
      HomogeneousIdeal P = random_artinian(rng, n, 3);
      int wd = 0;
      REQUIRE_OK(is_artinian(P, &wd));
      DualSpace V = perp_of_ideal(P, wd);
      for (const auto& q : V.basis)
        for (const auto& g : P.gens()) REQUIRE_OK(star(g, q).is_zero());
      Polynomial p(VarFamily::T, n);
      for (const auto& g : P.gens())
        p += tu::random_poly(rng, VarFamily::T, n, 2, 3) * g;
      Polynomial q(VarFamily::DT, n);
      for (const auto& b : V.basis)
        q += Rat(static_cast<long>(rng() % 7) - 3) * b;
      REQUIRE_OK(star(p, q).is_zero());
    }
    // Double perp recovers the ideal; star transport matches the colon.
    for (int t = 0; t < 500; ++t) {
      int n = 2;
      HomogeneousIdeal P = random_artinian(rng, n, 3);
      int wd = 0;
      REQUIRE_OK(is_artinian(P, &wd));
      DualSpace V = perp_of_ideal(P, wd);
      REQUIRE_OK(ideal_equal(annihilator_of_space(V, wd + 1), P));
      Monomial mm(n);
      mm[static_cast<int>(rng() % n)] = 1;
      Polynomial m = Polynomial::monomial(VarFamily::T, mm);
      std::vector<Polynomial> starred;
      for (const auto& q : V.basis) {
        Polynomial s = star(m, q);
        if (!s.is_zero()) starred.push_back(s);
      }
      HomogeneousIdeal C = colon(P, m);
      int wdc = 0;
      REQUIRE_OK(is_artinian(C, &wdc));
      DualSpace W = perp_of_ideal(C, wdc);
      REQUIRE_OK(tu::same_span(starred, W.basis));
    }
    // Double perp against the graded-nullspace oracle, 3-variable ideals.
    int done = 0;
    while (done < 50) {
      HomogeneousIdeal P = random_artinian(rng, 3, 3);
      int wd = 0;
      REQUIRE_OK(is_artinian(P, &wd));
      if (wd > 4) continue;
      DualSpace V = perp_of_ideal(P, wd);
      std::vector<Polynomial> oracle;
      for (int d = 0; d <= wd; ++d)
        for (const auto& m : standard_monomials(P, d))
          oracle.push_back(Polynomial::monomial(VarFamily::DT, m));
      REQUIRE_OK(tu::same_span(V.basis, oracle));
      REQUIRE_OK(ideal_equal(annihilator_of_space(V, wd + 1), P));
      ++done;
    }
  });

  criterion(8, "operator identities on fixture and random families", [] {
    for (const char* name : {"ex71.cfg", "ex72.cfg"}) {
      Fixture f = load(name);
      for (const auto& fe : f.fes) {
        Family fam = minimal_family(fe.v, f.B, f.cfg.w, 8);
        REQUIRE_OK(!fam.vs.empty());
        check_family(fam, f.cfg.n());
      }
    }
    SearchBounds bounds;
    bounds.max_d = 3;
    bounds.max_n = 4;
    bounds.count = 60;
    bounds.radius = 5;
    int families = 0;
    for (const auto& cfg : search_instances(2026, bounds)) {
      IMat B = kernel_basis(cfg.A);
      ToricGB gb = toric_groebner(B, cfg.w);
      MonomialIdeal in_w(cfg.n(), gb.initial_gens);
      FakeExponentSet fes =
          fake_exponents_full(cfg.A, cfg.beta, standard_pairs(in_w), B);
      for (const auto& fe : fes.exponents) {
        if (families >= 100) break;
        Family fam = minimal_family(fe.v, B, cfg.w, 5);
        if (fam.vs.empty()) continue;
        check_family(fam, cfg.n());
        ++families;
      }
    }
    REQUIRE_OK(families >= 100);
  });

  criterion(9, "series verification with spanning operators and mutation", [] {
    // First fixture at a cap with at least 25 stored lattice terms.
    ProblemConfig cfg1 = load_config(tu::fixture_path("ex71.cfg"));
    cfg1.weight_cap = Rat(12);
    SolveOptions opts;
    Json rep1 = run_solve(cfg1, opts);
    REQUIRE_OK(rep1["violations_total"].get<int>() == 0);
    REQUIRE_OK(!rep1["series"].empty());
    for (const auto& s : rep1["series"]) {
      REQUIRE_OK(s["term_count"].get<int>() >= 25);
      REQUIRE_OK(s["verify"]["violations"].empty());
    }
    // Second fixture, default caps.
    ProblemConfig cfg2 = load_config(tu::fixture_path("ex72.cfg"));
    Json rep2 = run_solve(cfg2, opts);
    REQUIRE_OK(rep2["violations_total"].get<int>() == 0);
    REQUIRE_OK(!rep2["series"].empty());
    // Mutation: corrupting a stored coefficient produces violations.
    Fixture f = load("ex71.cfg");
    QVec v = tu::qvec({0, 0, -1, 1});
    Family fam = minimal_family(v, f.B, f.cfg.w, f.cfg.radius);
    FrobeniusIdeals FI = build_ideals(v, f.cfg.A, f.B, fam.Nv, fam.NS);
    Polynomial q = Polynomial::monomial(VarFamily::DT, FI.m_t);
    LogSeries s = extract_solution(v, f.cfg.A, f.B, f.cfg.w, FI, fam.Nv, q,
                                   f.cfg.weight_cap, f.cfg.radius);
    REQUIRE_OK(verify_series(s, f.cfg.A, f.B, f.cfg.w, f.gb.basis, fam.NS,
                             f.cfg.radius)
                   .ok());
    for (auto& [u, r] : s.terms) {
      if (r.is_zero()) continue;
      r.add_term(r.terms().begin()->first, Rat(1));
      break;
    }
    REQUIRE_OK(verify_series(s, f.cfg.A, f.B, f.cfg.w, f.gb.basis, fam.NS,
                             f.cfg.radius)
                   .violations.size() >= 1);
  });

  criterion(10, "minimal-weight property across fixtures and 200 instances",
            [] {
    for (const char* name : {"ex71.cfg", "ex72.cfg"}) {
      Fixture f = load(name);
      for (const auto& fe : f.fes) {
        REQUIRE_OK(is_minimal_exponent(fe.v, f.B, f.cfg.w, 8));
        REQUIRE_OK(is_minimal_exponent(fe.v, f.B, f.cfg.w, 16));
      }
    }
    SearchBounds bounds;
    bounds.max_d = 3;
    bounds.max_n = 4;
    bounds.count = 200;
    int exponents = 0;
    for (const auto& cfg : search_instances(31337, bounds)) {
      IMat B = kernel_basis(cfg.A);
      ToricGB gb = toric_groebner(B, cfg.w);
      MonomialIdeal in_w(cfg.n(), gb.initial_gens);
      FakeExponentSet fes =
          fake_exponents_full(cfg.A, cfg.beta, standard_pairs(in_w), B);
      for (const auto& fe : fes.exponents) {
        REQUIRE_OK(is_minimal_exponent(fe.v, B, cfg.w, 8));
        REQUIRE_OK(is_minimal_exponent(fe.v, B, cfg.w, 16));
        ++exponents;
      }
    }
    REQUIRE_OK(exponents >= 200);
  });

  criterion(11, "toric oracle on 50 random homogeneous matrices", [] {
    SearchBounds bounds;
    bounds.max_d = 3;
    bounds.max_n = 6;
    bounds.count = 50;
    auto is_balanced = [](const Polynomial& fp, const IMat& A) {
      if (fp.term_count() != 2) return false;
      auto it = fp.terms().begin();
      auto [m1, c1] = *it;
      auto [m2, c2] = *std::next(it);
      if (!((c1 == Rat(1) && c2 == Rat(-1)) ||
            (c1 == Rat(-1) && c2 == Rat(1))))
        return false;
      for (int r = 0; r < A.rows(); ++r) {
        Int s = 0;
        for (int j = 0; j < A.cols(); ++j)
          s += A(r, j) * Int(m1[j] - m2[j]);
        if (s != 0) return false;
      }
      return true;
    };
    for (const auto& cfg : search_instances(8128, bounds)) {
      IMat B = kernel_basis(cfg.A);
      ToricGB gb = toric_groebner(B, cfg.w);
      TermOrder ord = TermOrder::weighted(cfg.w);
      for (const auto& g : gb.basis) REQUIRE_OK(is_balanced(g, cfg.A));
      // Complete enumeration of balanced binomials up to degree 5: group
      // the monomials by their image under A.
      int n = cfg.n();
      std::map<std::vector<std::string>, std::vector<Monomial>> groups;
      for (const auto& m : monomials_up_to_degree(n, 5)) {
        std::vector<std::string> key;
        for (int r = 0; r < cfg.d(); ++r) {
          Int s = 0;
          for (int j = 0; j < n; ++j) s += cfg.A(r, j) * Int(m[j]);
          key.push_back(s.get_str());
        }
        groups[key].push_back(m);
      }
      for (const auto& [key, ms] : groups)
        for (size_t i = 0; i < ms.size(); ++i)
          for (size_t j = i + 1; j < ms.size(); ++j) {
            Polynomial bin = Polynomial::monomial(VarFamily::DX, ms[i]) -
                             Polynomial::monomial(VarFamily::DX, ms[j]);
            REQUIRE_OK(reduces_to_zero(bin, gb.basis, ord));
          }
    }
  });

  criterion(12, "byte-identical reports and a clean default search sweep",
            [] {
    std::vector<std::string> cmds = {
        "analyze " + tu::fixture_path("ex71.cfg") + " --output structured",
        "analyze " + tu::fixture_path("ex72.cfg") + " --output structured",
        "solve " + tu::fixture_path("ex71.cfg") + " --output structured",
        "check-sufficiency " + tu::fixture_path("ex71.cfg") +
            " --output structured",
    };
    for (const auto& c : cmds) {
      tu::CliResult a = tu::run_cli(c);
      tu::CliResult b = tu::run_cli(c);
      REQUIRE_OK(a.exit_code == 0);
      REQUIRE_OK(!a.out.empty());
      REQUIRE_OK(a.out == b.out);
    }
    // The default bounded sweep completes and reports no counterexample.
    SearchBounds bounds;
    Json sweep = run_search(0, bounds);
    REQUIRE_OK(sweep["counterexamples"].empty());
    REQUIRE_OK(sweep["summary"].get<std::string>().find("no counterexample") !=
               std::string::npos);
  });

  if (g_failures == 0) {
    std::cout << "ACCEPTANCE: all 12 criteria passed\n";
    return 0;
  }
  std::cout << "ACCEPTANCE: " << g_failures << " criterion(s) failed\n";
  return 1;
}
