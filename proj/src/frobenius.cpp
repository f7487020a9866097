#include "ahg/frobenius.hpp"

#include <algorithm>
#include <sstream>

namespace ahg {

namespace {

Monomial set_monomial(const std::set<int>& S, int n) {
  Monomial m(n);
  for (int i : S) m[i] = 1;
  return m;
}

std::set<int> set_diff(const std::set<int>& a, const std::set<int>& b) {
  std::set<int> r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(r, r.begin()));
  return r;
}

std::set<int> set_cap(const std::set<int>& a, const std::set<int>& b) {
  std::set<int> r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(r, r.begin()));
  return r;
}

std::string set_str(const std::set<int>& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i : s) {
    if (!first) os << ",";
    os << i + 1;
    first = false;
  }
  os << "}";
  return os.str();
}

std::string vec_str(const IVec& u) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < u.size(); ++i) os << u[i] << (i + 1 < u.size() ? "," : "");
  os << ")";
  return os.str();
}

bool in_family(const std::vector<std::set<int>>& fam, const std::set<int>& I) {
  for (auto& J : fam)
    if (J == I) return true;
  return false;
}

QVec add_u(const QVec& v, const IVec& u) {
  QVec r = v;
  for (int i = 0; i < u.size(); ++i) r[i] += Rat(u[i]);
  return r;
}

Rat weight_of(const QVec& w, const IVec& u) {
  Rat r(0);
  for (int i = 0; i < u.size(); ++i)
    if (sgn(u[i]) != 0) r += w[i] * Rat(u[i]);
  return r;
}

/// (q(d_t) . (g(t) e^{t.y}))|_{t=0} as a polynomial in the y-variables.
Polynomial leibniz_extract(const Polynomial& q, const Polynomial& g,
                           VarFamily yfam) {
  int n = q.nvars();
  Polynomial r(yfam, n);
  for (auto& [alpha, qc] : q.terms()) {
    for (auto& [beta, gc] : g.terms()) {
      bool le = true;
      for (int j = 0; j < n && le; ++j)
        if (beta[j] > alpha[j]) le = false;
      if (!le) continue;
      Rat c = qc * gc;
      Monomial ym(n);
      for (int j = 0; j < n; ++j) {
        c *= binomial(alpha[j], beta[j]) * factorial(beta[j]);
        ym[j] = alpha[j] - beta[j];
      }
      r.add_term(ym, c);
    }
  }
  return r;
}

void check_perp_membership(const std::vector<Polynomial>& gens,
                           const Polynomial& q, const char* what) {
  for (auto& g : gens)
    if (!star(g, q).is_zero())
      throw std::invalid_argument(std::string(what) +
                                  ": q is not in the perp space; failing "
                                  "generator " +
                                  g.str());
}

}  // namespace

Polynomial POperator::apply(const Polynomial& r) const {
  Polynomial out = r;
  for (auto& [nu, c] : factors) out = out.derivative(nu) + c * out;
  return out;
}

Polynomial POperator::expand() const {
  Polynomial out = Polynomial::constant(VarFamily::DY, nvars, Rat(1));
  for (auto& [nu, c] : factors) {
    Polynomial f = Polynomial::variable(VarFamily::DY, nvars, nu) +
                   Polynomial::constant(VarFamily::DY, nvars, c);
    out = out * f;
  }
  return out;
}

std::vector<std::pair<int, Rat>> POperator::sorted_factors() const {
  auto f = factors;
  std::sort(f.begin(), f.end());
  return f;
}

POperator p_operator(const QVec& target, const QVec& source) {
  int n = static_cast<int>(source.size());
  POperator p;
  p.nvars = n;
  for (int nu = 0; nu < n; ++nu) {
    Rat diff = source[nu] - target[nu];
    if (!is_integer(diff))
      throw std::invalid_argument("p_operator: non-integer difference");
    long dd = diff.get_num().get_si();
    for (long mu = 1; mu <= dd; ++mu)
      p.factors.push_back({nu, source[nu] - Rat(mu) + Rat(1)});
  }
  return p;
}

POperator q_operator(int i, const std::vector<QVec>& minimal_vectors) {
  const QVec& vi = minimal_vectors[i];
  int n = static_cast<int>(vi.size());
  POperator q;
  q.nvars = n;
  for (int nu = 0; nu < n; ++nu) {
    Rat mx(0);
    for (auto& vl : minimal_vectors) {
      Rat diff = vl[nu] - vi[nu];
      if (diff > mx) mx = diff;
    }
    if (!is_integer(mx))
      throw std::invalid_argument("q_operator: non-integer difference");
    long dd = mx.get_num().get_si();
    for (long mu = 1; mu <= dd; ++mu)
      q.factors.push_back({nu, vi[nu] + Rat(mu)});
  }
  return q;
}

FrobeniusIdeals build_ideals(const QVec& v, const IMat& A, const IMat& B,
                             const std::vector<std::set<int>>& Nprime,
                             const std::vector<std::set<int>>& NS) {
  int n = static_cast<int>(A.cols());
  int d = static_cast<int>(A.rows());
  std::set<int> I0 = nsupp(v);
  if (!in_family(Nprime, I0))
    throw std::invalid_argument("build_ideals: nsupp(v) is not in N'");

  FrobeniusIdeals FI;
  FI.K = support_intersection(Nprime);
  FI.m_t = set_monomial(set_diff(I0, FI.K), n);
  FI.m_s = phi_map(Polynomial::monomial(VarFamily::T, FI.m_t), B);

  std::vector<std::set<int>> comp;
  for (auto& J : NS)
    if (!in_family(Nprime, J)) comp.push_back(J);

  std::vector<Monomial> pt;
  for (auto& I : Nprime)
    for (auto& J : comp) {
      std::set<int> un = I;
      un.insert(J.begin(), J.end());
      pt.push_back(set_monomial(set_diff(un, FI.K), n));
    }
  FI.P_t = MonomialIdeal(n, pt);

  std::vector<Polynomial> ps;
  for (auto& g : FI.P_t.gens())
    ps.push_back(phi_map(Polynomial::monomial(VarFamily::T, g), B));
  FI.P_s = HomogeneousIdeal(VarFamily::S, static_cast<int>(B.cols()), ps);

  std::vector<Polynomial> qt;
  for (auto& I : Nprime) {
    Monomial tI = set_monomial(set_diff(I, FI.K), n);
    for (int row = 0; row < d; ++row) {
      Polynomial at(VarFamily::T, n);
      for (int j = 0; j < n; ++j)
        if (sgn(A(row, j)) != 0)
          at += Rat(A(row, j)) * Polynomial::variable(VarFamily::T, n, j);
      qt.push_back(at * Polynomial::monomial(VarFamily::T, tI));
    }
  }
  for (auto& g : FI.P_t.gens())
    qt.push_back(Polynomial::monomial(VarFamily::T, g));
  FI.Q_t = HomogeneousIdeal(VarFamily::T, n, qt);

  std::vector<Monomial> pbt;
  for (auto& J : comp) pbt.push_back(set_monomial(set_diff(J, I0), n));
  FI.PB_t = MonomialIdeal(n, pbt);
  std::vector<Polynomial> pbs;
  for (auto& g : FI.PB_t.gens())
    pbs.push_back(phi_map(Polynomial::monomial(VarFamily::T, g), B));
  FI.PB_s = HomogeneousIdeal(VarFamily::S, static_cast<int>(B.cols()), pbs);
  return FI;
}

CoefficientDual coefficient_dual(const FrobeniusIdeals& FI, int degree_cap) {
  CoefficientDual cd;
  cd.colon_ideal =
      colon(FI.Q_t, Polynomial::monomial(VarFamily::T, FI.m_t));
  int maxdeg = degree_cap;
  int wd = 0;
  if (is_artinian(cd.colon_ideal, &wd)) maxdeg = std::min(maxdeg, wd);
  cd.dual = perp_of_ideal(cd.colon_ideal, maxdeg);
  return cd;
}

CUnit c_unit_series(const QVec& v, const IVec& u, const std::set<int>& K,
                    int deg) {
  int n = static_cast<int>(v.size());
  std::set<int> I0 = nsupp(v);
  QVec vu = add_u(v, u);
  std::set<int> Iu = nsupp(vu);

  // Linear-factor lists of [v+t]_{u-} and [v+t+u]_{u+}.
  Monomial mono_num(n), mono_den(n);
  TruncatedSeries unit_num(Polynomial::constant(VarFamily::T, n, Rat(1)), deg);
  TruncatedSeries unit_den(Polynomial::constant(VarFamily::T, n, Rat(1)), deg);
  for (int j = 0; j < n; ++j) {
    long um = 0, up = 0;
    if (sgn(u[j]) < 0) um = Int(-u[j]).get_si();
    else up = Int(u[j]).get_si();
    for (long k = 0; k < um; ++k) {
      Rat c = v[j] - Rat(k);
      if (sgn(c) == 0) {
        mono_num[j] += 1;
      } else {
        Polynomial f = Polynomial::variable(VarFamily::T, n, j) +
                       Polynomial::constant(VarFamily::T, n, c);
        unit_num = unit_num * TruncatedSeries(f, deg);
      }
    }
    for (long k = 0; k < up; ++k) {
      Rat c = vu[j] - Rat(k);
      if (sgn(c) == 0) {
        mono_den[j] += 1;
      } else {
        Polynomial f = Polynomial::variable(VarFamily::T, n, j) +
                       Polynomial::constant(VarFamily::T, n, c);
        unit_den = unit_den * TruncatedSeries(f, deg);
      }
    }
  }
  if (!(mono_num == set_monomial(set_diff(Iu, I0), n)))
    throw internal_error("c_unit_series: numerator monomial mismatch");
  if (!(mono_den == set_monomial(set_diff(I0, Iu), n)))
    throw internal_error("c_unit_series: denominator monomial mismatch");

  CUnit out;
  out.c = unit_num * series_invert_unit(unit_den);
  if (sgn(out.c.poly.constant_term()) == 0)
    throw internal_error("c_unit_series: unit series vanishes at 0");
  // t^{I0\K} * mono_num / mono_den must equal t^{Iu \ (I0 cap K)}.
  Monomial lhs = set_monomial(set_diff(I0, K), n) * mono_num;
  Monomial expect = set_monomial(set_diff(Iu, set_cap(I0, K)), n);
  if (!(lhs == expect * mono_den))
    throw internal_error("c_unit_series: monomial factorization identity failed");
  out.mono = expect;
  return out;
}

namespace {

/// Shared enumeration of the stored support: u = Bz within radius, class in
/// N', w.u <= W_max; deterministic order (lexicographic in z).
std::vector<IVec> series_support(const QVec& v, const IMat& B, const QVec& w,
                                 const std::vector<std::set<int>>& Nprime,
                                 const Rat& W_max, int radius) {
  std::vector<IVec> out;
  for (auto& u : enumerate_lattice(B, radius)) {
    if (weight_of(w, u) > W_max) continue;
    if (!in_family(Nprime, nsupp(add_u(v, u)))) continue;
    out.push_back(u);
  }
  return out;
}

}  // namespace

LogSeries extract_solution(const QVec& v, const IMat& A, const IMat& B,
                           const QVec& w, const FrobeniusIdeals& FI,
                           const std::vector<std::set<int>>& Nprime,
                           const Polynomial& q, const Rat& W_max, int radius) {
  if (q.family() != VarFamily::DT || q.nvars() != static_cast<int>(A.cols()))
    throw std::invalid_argument("extract_solution: q must be in the Dt ring");
  check_perp_membership(FI.Q_t.gens(), q, "extract_solution");
  LogSeries s;
  s.v = v;
  s.weight_cap = W_max;
  s.support = Nprime;
  int deg = std::max(q.total_degree(), 0);
  for (auto& u : series_support(v, B, w, Nprime, W_max, radius)) {
    CUnit cu = c_unit_series(v, u, FI.K, deg);
    TruncatedSeries g =
        cu.c * TruncatedSeries(Polynomial::monomial(VarFamily::T, cu.mono), deg);
    Polynomial r = leibniz_extract(q, g.poly, VarFamily::Y);
    s.terms.push_back({u, r});
  }
  return s;
}

LogSeries l_perturb_solution(const QVec& v, const IMat& A, const IMat& B,
                             const QVec& w, const FrobeniusIdeals& FI,
                             const std::vector<std::set<int>>& Nprime,
                             const Polynomial& qp, const Rat& W_max,
                             int radius) {
  int n = static_cast<int>(A.cols());
  int h = static_cast<int>(B.cols());
  if (qp.family() != VarFamily::DS || qp.nvars() != h)
    throw std::invalid_argument(
        "l_perturb_solution: q' must be in the Ds ring");
  check_perp_membership(FI.P_s.gens(), qp, "l_perturb_solution");
  LogSeries s;
  s.v = v;
  s.weight_cap = W_max;
  s.support = Nprime;
  int deg = std::max(qp.total_degree(), 0);
  // z_k -> sum_j B(j,k) y_j for the final change of log-variables.
  std::vector<Polynomial> zforms;
  for (int k = 0; k < h; ++k) {
    Polynomial f(VarFamily::Y, n);
    for (int j = 0; j < n; ++j)
      if (sgn(B(j, k)) != 0)
        f += Rat(B(j, k)) * Polynomial::variable(VarFamily::Y, n, j);
    zforms.push_back(f);
  }
  for (auto& u : series_support(v, B, w, Nprime, W_max, radius)) {
    CUnit cu = c_unit_series(v, u, FI.K, deg);
    TruncatedSeries g =
        cu.c * TruncatedSeries(Polynomial::monomial(VarFamily::T, cu.mono), deg);
    // m(s) a_u(Bs) = phi(t^{I0\K} a_u) = phi(c_u t^{...}).
    TruncatedSeries gs(phi_map(g.poly, B), deg);
    Polynomial rz = leibniz_extract(qp, gs.poly, VarFamily::S);
    s.terms.push_back({u, rz.substitute(zforms)});
  }
  return s;
}

VerifyReport verify_series(const LogSeries& s, const IMat& A, const IMat& B,
                           const QVec& w, const std::vector<Polynomial>& gb,
                           const std::vector<std::set<int>>& NS, int radius) {
  VerifyReport rep;
  int n = static_cast<int>(A.cols());
  int d = static_cast<int>(A.rows());

  // Index stored terms by u.
  auto key = [&](const IVec& u) {
    std::vector<long> k(u.size());
    for (int i = 0; i < u.size(); ++i) k[i] = u[i].get_si();
    return k;
  };
  std::map<std::vector<long>, const Polynomial*> stored;
  for (auto& [u, r] : s.terms) stored[key(u)] = &r;

  // (i) Euler equations: (A d_y)_nu . r = 0.
  for (auto& [u, r] : s.terms) {
    for (int i = 0; i < d; ++i) {
      Polynomial e(VarFamily::Y, n);
      for (int j = 0; j < n; ++j)
        if (sgn(A(i, j)) != 0) e += Rat(A(i, j)) * r.derivative(j);
      ++rep.checked;
      if (!e.is_zero())
        rep.violations.push_back(
            {"Euler row " + std::to_string(i + 1) + " at u=" + vec_str(u)});
    }
  }

  // (ii) pair equations among stored coefficients.
  for (size_t a = 0; a < s.terms.size(); ++a)
    for (size_t b = a + 1; b < s.terms.size(); ++b) {
      const auto& [u1, r1] = s.terms[a];
      const auto& [u2, r2] = s.terms[b];
      QVec v1 = add_u(s.v, u1), v2 = add_u(s.v, u2);
      Polynomial lhs = p_operator(v1, v2).apply(r2) -
                       p_operator(v2, v1).apply(r1);
      ++rep.checked;
      if (!lhs.is_zero())
        rep.violations.push_back(
            {"pair equation u=" + vec_str(u1) + ", u'=" + vec_str(u2)});
    }

  // (iii) kill equations against the classes outside N'.
  std::vector<std::set<int>> comp;
  for (auto& J : NS)
    if (!in_family(s.support, J)) comp.push_back(J);
  for (auto& [u, r] : s.terms) {
    std::set<int> Iu = nsupp(add_u(s.v, u));
    for (auto& J : comp) {
      Monomial m = set_monomial(set_diff(J, Iu), n);
      Polynomial out = r;
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < m[j]; ++k) out = out.derivative(j);
      ++rep.checked;
      if (!out.is_zero())
        rep.violations.push_back({"kill equation class " + set_str(J) +
                                  " at u=" + vec_str(u)});
    }
  }

  // Terms of the orbit beyond the cap: count the equations we cannot check.
  {
    int unstored = 0;
    for (auto& u : enumerate_lattice(B, radius)) {
      if (!in_family(s.support, nsupp(add_u(s.v, u)))) continue;
      if (!stored.count(key(u))) ++unstored;
    }
    rep.skipped += static_cast<int>(s.terms.size()) * unstored;
  }

  // (iv) direct Groebner-operator check. A binomial sum_m c_m d^m maps the
  // series term r_u x^{v+u} to x^{v+u-m} with coefficient
  // prod_j prod_{k=0}^{m_j-1} (d_{y_j} + (v+u)_j - k) . r_u; outputs whose
  // contributing inputs are not all inside the window are skipped.
  for (auto& P : gb) {
    // Collect candidate output points: u_stored - m.
    std::set<std::vector<long>> outs;
    for (auto& [u, r] : s.terms)
      for (auto& [m, c] : P.terms()) {
        std::vector<long> o = key(u);
        for (int j = 0; j < n; ++j) o[j] -= m[j];
        outs.insert(o);
      }
    for (auto& o : outs) {
      Polynomial acc(VarFamily::Y, n);
      bool complete = true;
      for (auto& [m, c] : P.terms()) {
        std::vector<long> in = o;
        for (int j = 0; j < n; ++j) in[j] += m[j];
        auto it = stored.find(in);
        const Polynomial* r = nullptr;
        if (it != stored.end()) {
          r = it->second;
        } else {
          // Unstored input: zero when its class is outside N' (the series
          // claims no support there); otherwise the output is incomplete.
          IVec uin(n);
          for (int j = 0; j < n; ++j) uin[j] = in[j];
          if (!lattice_coordinates(B, uin) ||
              !in_family(s.support, nsupp(add_u(s.v, uin))))
            continue;  // no such series term: treated as zero
          complete = false;
          break;
        }
        QVec vin(n);
        for (int j = 0; j < n; ++j) vin[j] = s.v[j] + Rat(Int(in[j]));
        POperator op;
        op.nvars = n;
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < m[j]; ++k)
            op.factors.push_back({j, vin[j] - Rat(k)});
        acc += c * op.apply(*r);
      }
      if (!complete) {
        ++rep.skipped;
        continue;
      }
      ++rep.checked;
      if (!acc.is_zero())
        rep.violations.push_back({"GB operator " + P.str() + " at output (" +
                                  [&] {
                                    std::string t;
                                    for (size_t j = 0; j < o.size(); ++j)
                                      t += std::to_string(o[j]) +
                                           (j + 1 < o.size() ? "," : "");
                                    return t;
                                  }() +
                                  ")"});
    }
  }
  return rep;
}

SufficiencyReport sufficiency_check(const QVec& v, const IMat& A,
                                    const IMat& B,
                                    const std::vector<std::set<int>>& Nprime,
                                    const std::vector<std::set<int>>& Nsecond,
                                    const std::vector<std::set<int>>& NS,
                                    int degree_cap) {
  (void)degree_cap;
  int n = static_cast<int>(A.cols());
  std::set<int> I0 = nsupp(v);
  if (!in_family(Nprime, I0))
    throw std::invalid_argument("sufficiency_check: I_0 not in N'");
  for (auto& I : Nprime)
    if (!in_family(Nsecond, I))
      throw std::invalid_argument("sufficiency_check: N' not inside N''");

  FrobeniusIdeals FI = build_ideals(v, A, B, Nprime, NS);
  SufficiencyReport rep;

  Polynomial mt = Polynomial::monomial(VarFamily::T, FI.m_t);
  HomogeneousIdeal Qcolon = colon(FI.Q_t, mt);
  HomogeneousIdeal Pm = colon(FI.P_s, FI.m_s);

  // (a) Phi(Q : t^{I0\K}) == P : m.
  rep.a_phi_colon_eq = ideal_equal(phi_ideal(Qcolon, B), Pm);

  // (b) P : m == P_B.
  rep.b_colon_is_PB = ideal_equal(Pm, FI.PB_s);

  // (c) smallest element of N' (== K in N').
  rep.c_smallest = in_family(Nprime, FI.K);

  // (d) intersection form: (<At> cap <t^{I\K}> + P(t)) : t^{I0\K} equals
  // Q : t^{I0\K}.
  {
    int dd = static_cast<int>(A.rows());
    std::vector<Polynomial> at;
    for (int row = 0; row < dd; ++row) {
      Polynomial f(VarFamily::T, n);
      for (int j = 0; j < n; ++j)
        if (sgn(A(row, j)) != 0)
          f += Rat(A(row, j)) * Polynomial::variable(VarFamily::T, n, j);
      at.push_back(f);
    }
    HomogeneousIdeal At(VarFamily::T, n, at);
    std::vector<Polynomial> tg;
    for (auto& I : Nprime)
      tg.push_back(Polynomial::monomial(
          VarFamily::T, set_monomial(set_diff(I, FI.K), n)));
    HomogeneousIdeal T(VarFamily::T, n, tg);
    std::vector<Polynomial> pg;
    for (auto& g : FI.P_t.gens())
      pg.push_back(Polynomial::monomial(VarFamily::T, g));
    HomogeneousIdeal X =
        intersect(At, T) + HomogeneousIdeal(VarFamily::T, n, pg);
    rep.d_intersection = ideal_equal(colon(X, mt), Qcolon);
  }

  // (e) square test per I in N'.  (Q : t^{I0\K} t^{I\K}) is computed as
  // ((Q : t^{I0\K}) : t^{I\K}) to reuse the cached colon.
  rep.e_all = true;
  for (auto& I : Nprime) {
    Polynomial f = Polynomial::monomial(
        VarFamily::T, set_monomial(set_diff(I, FI.K), n));
    bool eq = ideal_equal(colon(Qcolon, f), Qcolon);
    rep.e_square.push_back({I, eq});
    rep.e_all = rep.e_all && eq;
  }

  // (f) chain conclusion: (b) for N''.
  {
    FrobeniusIdeals FI2 = build_ideals(v, A, B, Nsecond, NS);
    HomogeneousIdeal Pm2 = colon(FI2.P_s, FI2.m_s);
    rep.f_chain = ideal_equal(Pm2, FI2.PB_s);
  }

  rep.suffices = rep.a_phi_colon_eq;
  return rep;
}

}  // namespace ahg
