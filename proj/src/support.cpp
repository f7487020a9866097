#include "ahg/support.hpp"

#include <algorithm>
#include <map>

namespace ahg {

std::set<int> nsupp(const QVec& v) {
  std::set<int> s;
  for (int i = 0; i < v.size(); ++i)
    if (is_negative_integer(v[i])) s.insert(i);
  return s;
}

FakeExponentSet fake_exponents_full(const IMat& A, const QVec& beta,
                                    const std::vector<StandardPair>& sps,
                                    const IMat& B) {
  int n = static_cast<int>(A.cols());
  FakeExponentSet res;
  std::vector<FakeExponent>& out = res.exponents;
  for (auto& sp : sps) {
    std::map<int, Rat> fixed;
    for (int j = 0; j < n; ++j)
      if (!sp.sigma.count(j)) fixed[j] = Rat(sp.root[j]);
    auto sol = solve_affine(A, beta, fixed, sp.sigma);
    if (!sol) {
      res.failures.push_back({sp, "pinned system A v = beta is inconsistent"});
      continue;
    }
    if (sol->ambiguous) {
      res.failures.push_back({sp, "pinned system A v = beta is ambiguous"});
      continue;
    }
    bool found = false;
    for (auto& fe : out)
      if (fe.v == sol->v) {
        fe.pairs.push_back(sp);
        found = true;
        break;
      }
    if (!found) out.push_back({sol->v, {sp}, -1});
  }
  // L-equivalence classes: difference is an integer vector in Z B.
  int next = 0;
  for (size_t i = 0; i < out.size(); ++i) {
    if (out[i].cls >= 0) continue;
    out[i].cls = next;
    for (size_t j = i + 1; j < out.size(); ++j) {
      if (out[j].cls >= 0) continue;
      QVec diff = out[i].v - out[j].v;
      bool integral = true;
      IVec d(diff.size());
      for (int k = 0; k < diff.size(); ++k) {
        if (!is_integer(diff[k])) {
          integral = false;
          break;
        }
        d[k] = diff[k].get_num();
      }
      if (integral && lattice_coordinates(B, d)) out[j].cls = next;
    }
    ++next;
  }
  return res;
}

std::vector<FakeExponent> fake_exponents(const IMat& A, const QVec& beta,
                                         const std::vector<StandardPair>& sps,
                                         const IMat& B) {
  FakeExponentSet res = fake_exponents_full(A, beta, sps, B);
  if (!res.failures.empty())
    throw exponent_error("fake exponent: " + res.failures.front().second);
  return res.exponents;
}

namespace {

/// Recession-cone LP constraints of a class: directions Bz that keep the
/// negative support equal to I (integer coordinates of v0 off I must not
/// drop, coordinates on I must not rise).
std::vector<LPConstraint> cone_constraints(const QVec& v0, const IMat& B,
                                           const std::set<int>& I) {
  int n = static_cast<int>(B.rows());
  int h = static_cast<int>(B.cols());
  std::vector<LPConstraint> cons;
  for (int i = 0; i < n; ++i) {
    bool on = I.count(i) > 0;
    if (!on && !is_integer(v0[i])) continue;
    LPConstraint c;
    c.a = QVec::Zero(h);
    for (int k = 0; k < h; ++k) c.a[k] = Rat(B(i, k));
    c.rel = on ? LPRel::LE : LPRel::GE;
    c.rhs = Rat(0);
    cons.push_back(c);
  }
  return cons;
}

}  // namespace

SupportAnalysis support_classes(const QVec& v0, const IMat& B, const QVec& w,
                                int radius) {
  int n = static_cast<int>(B.rows());
  int h = static_cast<int>(B.cols());
  SupportAnalysis out;
  out.I0 = nsupp(v0);
  out.radius = radius;

  // w.u restricted to the lattice: weights of the basis columns.
  QVec wB = QVec::Zero(h);
  for (int k = 0; k < h; ++k)
    for (int j = 0; j < n; ++j) wB[k] += w[j] * Rat(B(j, k));

  struct Acc {
    Rat min_weight;
    IVec min_u;
    std::vector<int> min_z;
    bool have = false;
  };
  std::map<std::set<int>, Acc> seen;

  std::vector<int> z(h, -radius);
  while (true) {
    IVec u = IVec::Zero(n);
    for (int k = 0; k < h; ++k)
      if (z[k] != 0) u += Int(z[k]) * B.col(k);
    std::set<int> I;
    for (int i = 0; i < n; ++i) {
      if (sgn(u[i]) == 0) {
        if (out.I0.count(i)) I.insert(i);
      } else {
        Rat vi = v0[i] + Rat(u[i]);
        if (is_negative_integer(vi)) I.insert(i);
      }
    }
    Rat wu(0);
    for (int k = 0; k < h; ++k)
      if (z[k] != 0) wu += wB[k] * Rat(z[k]);
    Acc& a = seen[I];
    if (!a.have || wu < a.min_weight ||
        (wu == a.min_weight && z < a.min_z)) {
      a.have = true;
      a.min_weight = wu;
      a.min_u = u;
      a.min_z = z;
    }
    int k = h - 1;
    while (k >= 0 && z[k] == radius) z[k--] = -radius;
    if (k < 0) break;
    ++z[k];
  }

  for (auto& [I, acc] : seen) {
    SupportClass sc;
    sc.I = I;
    sc.min_weight = acc.min_weight;
    sc.min_u = acc.min_u;

    // Decreasing recession direction? Feasible => class unbounded below.
    std::vector<LPConstraint> rec = cone_constraints(v0, B, I);
    {
      LPConstraint c;
      c.a = wB;
      c.rel = LPRel::EQ;
      c.rhs = Rat(-1);
      rec.push_back(c);
    }
    bool decreasing = lp_feasible(rec, h);
    if (decreasing) {
      sc.in_N = false;
      sc.n_certified = true;
      sc.in_Nv = false;
      sc.nv_certified = true;
    } else {
      sc.in_N = true;
      sc.n_certified = true;
      // LP lower bound over the class relaxation: v_i <= -1 on I,
      // v_i >= 0 on integer coordinates off I.
      std::vector<LPConstraint> rel;
      for (int i = 0; i < n; ++i) {
        bool on = I.count(i) > 0;
        if (!on && !is_integer(v0[i])) continue;
        LPConstraint c;
        c.a = QVec::Zero(h);
        for (int k = 0; k < h; ++k) c.a[k] = Rat(B(i, k));
        c.rel = on ? LPRel::LE : LPRel::GE;
        c.rhs = (on ? Rat(-1) : Rat(0)) - v0[i];
        rel.push_back(c);
      }
      LPResult lp = lp_minimize(wB, rel);
      if (lp.status == LPStatus::Optimal) {
        sc.min_certified = (lp.value == sc.min_weight);
        if (sgn(lp.value) >= 0) {
          sc.in_Nv = true;
          sc.nv_certified = true;
        } else if (sgn(sc.min_weight) < 0) {
          sc.in_Nv = false;
          sc.nv_certified = true;
        } else {
          // Relaxation dips below zero but no enumerated member does.
          sc.in_Nv = true;
          sc.nv_certified = false;
        }
      } else {
        // The relaxation cannot be unbounded once no decreasing recession
        // direction exists; treat defensively as uncertified.
        sc.in_Nv = sgn(sc.min_weight) >= 0;
        sc.nv_certified = false;
        sc.min_certified = false;
      }
    }
    out.classes.push_back(sc);
  }
  return out;
}

std::set<int> support_intersection(const std::vector<std::set<int>>& Nprime) {
  std::set<int> K;
  bool first = true;
  for (auto& I : Nprime) {
    if (first) {
      K = I;
      first = false;
    } else {
      std::set<int> tmp;
      std::set_intersection(K.begin(), K.end(), I.begin(), I.end(),
                            std::inserter(tmp, tmp.begin()));
      K = tmp;
    }
  }
  return K;
}

CertifiedAnalysis support_classes_certified(const QVec& v0, const IMat& B,
                                            const QVec& w, int radius) {
  CertifiedAnalysis out;
  out.analysis = support_classes(v0, B, w, radius);
  SupportAnalysis big = support_classes(v0, B, w, 2 * radius);
  std::map<std::set<int>, const SupportClass*> bigmap;
  for (auto& sc : big.classes) bigmap[sc.I] = &sc;
  if (big.classes.size() != out.analysis.classes.size()) out.stable = false;
  for (auto& sc : out.analysis.classes) {
    bool lp = sc.n_certified && sc.nv_certified && (!sc.in_N || sc.min_certified);
    auto it = bigmap.find(sc.I);
    bool same = it != bigmap.end() && it->second->in_N == sc.in_N &&
                it->second->in_Nv == sc.in_Nv &&
                (!sc.in_N || it->second->min_weight == sc.min_weight);
    if (!same) out.stable = false;
    out.certs.push_back(lp ? Certification::LPCertified
                           : same ? Certification::RadiusStable
                                  : Certification::Uncertified);
  }
  return out;
}

bool is_minimal_exponent(const QVec& v, const IMat& B, const QVec& w,
                         int radius) {
  SupportAnalysis sa = support_classes(v, B, w, radius);
  // u = 0 is a class member of weight 0, so the enumerated minimum is <= 0;
  // minimality means no member dips below.
  for (auto& sc : sa.classes)
    if (sc.I == sa.I0) return sgn(sc.min_weight) == 0;
  return false;
}

}  // namespace ahg
