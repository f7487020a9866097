#include "ahg/simplex.hpp"

#include <stdexcept>

namespace ahg {

namespace {

/// Dense simplex tableau for  min c.x  s.t.  M x = b, x >= 0,  b >= 0.
/// Solved in two phases with Bland's anti-cycling rule.
struct Tableau {
  int m, n;                    // constraints, structural variables
  std::vector<std::vector<Rat>> T;  // m rows of n+1 entries (last = rhs)
  std::vector<Rat> obj;        // reduced objective row, n+1 entries
  std::vector<int> basis;      // basic variable per row

  Tableau(int m_, int n_) : m(m_), n(n_) {
    T.assign(m, std::vector<Rat>(n + 1, Rat(0)));
    obj.assign(n + 1, Rat(0));
    basis.assign(m, -1);
  }

  void pivot(int r, int c) {
    Rat p = T[r][c];
    for (int j = 0; j <= n; ++j) T[r][j] /= p;
    for (int i = 0; i < m; ++i) {
      if (i == r || sgn(T[i][c]) == 0) continue;
      Rat f = T[i][c];
      for (int j = 0; j <= n; ++j) T[i][j] -= f * T[r][j];
    }
    if (sgn(obj[c]) != 0) {
      Rat f = obj[c];
      for (int j = 0; j <= n; ++j) obj[j] -= f * T[r][j];
    }
    basis[r] = c;
  }

  /// Runs simplex iterations until optimal or unbounded. Bland's rule:
  /// entering variable is the lowest index with negative reduced cost;
  /// leaving variable is the lowest-index basic variable among the
  /// minimum-ratio rows.
  LPStatus iterate() {
    while (true) {
      int enter = -1;
      for (int j = 0; j < n; ++j)
        if (sgn(obj[j]) < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return LPStatus::Optimal;
      int leave = -1;
      Rat best(0);
      for (int i = 0; i < m; ++i) {
        if (sgn(T[i][enter]) <= 0) continue;
        Rat ratio = T[i][n] / T[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return LPStatus::Unbounded;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LPResult lp_minimize(const QVec& c, const std::vector<LPConstraint>& cons) {
  int nfree = static_cast<int>(c.size());
  int m = static_cast<int>(cons.size());
  // Structural layout: z_k = x_{2k} - x_{2k+1}; then one slack/surplus per
  // inequality; then one artificial per row.
  int nsplit = 2 * nfree;
  int nslack = 0;
  for (auto& con : cons)
    if (con.rel != LPRel::EQ) ++nslack;
  int n = nsplit + nslack + m;
  Tableau tab(m, n);

  int slack = nsplit;
  for (int i = 0; i < m; ++i) {
    const LPConstraint& con = cons[i];
    if (static_cast<int>(con.a.size()) != nfree)
      throw std::invalid_argument("lp_minimize: constraint dimension");
    Rat rhs = con.rhs;
    int sign = 1;
    if (sgn(rhs) < 0) sign = -1;  // normalize so rhs >= 0
    for (int k = 0; k < nfree; ++k) {
      Rat a = Rat(sign) * con.a[k];
      tab.T[i][2 * k] = a;
      tab.T[i][2 * k + 1] = -a;
    }
    tab.T[i][n] = Rat(sign) * rhs;
    LPRel rel = con.rel;
    if (sign < 0) {
      if (rel == LPRel::LE) rel = LPRel::GE;
      else if (rel == LPRel::GE) rel = LPRel::LE;
    }
    if (rel == LPRel::LE) tab.T[i][slack++] = Rat(1);
    else if (rel == LPRel::GE) tab.T[i][slack++] = Rat(-1);
  }

  // Phase one: artificials basic, minimize their sum.
  int art0 = nsplit + nslack;
  for (int i = 0; i < m; ++i) {
    tab.T[i][art0 + i] = Rat(1);
    tab.basis[i] = art0 + i;
    for (int j = 0; j <= n; ++j) tab.obj[j] -= tab.T[i][j];
  }
  for (int i = 0; i < m; ++i) tab.obj[art0 + i] = Rat(0);
  LPStatus st = tab.iterate();
  (void)st;  // phase one is bounded below by zero
  if (sgn(tab.obj[n]) != 0) {
    LPResult r;
    r.status = LPStatus::Infeasible;
    return r;
  }
  // Drive remaining artificials out of the basis (or drop redundant rows by
  // leaving them basic at zero with a blocked column set).
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < art0) continue;
    int c2 = -1;
    for (int j = 0; j < art0; ++j)
      if (sgn(tab.T[i][j]) != 0) {
        c2 = j;
        break;
      }
    if (c2 >= 0) tab.pivot(i, c2);
  }

  // Phase two objective over the split variables; artificials excluded by a
  // prohibitive marker: simply fix their columns to zero and never enter.
  for (int j = 0; j <= n; ++j) tab.obj[j] = Rat(0);
  for (int k = 0; k < nfree; ++k) {
    tab.obj[2 * k] = c[k];
    tab.obj[2 * k + 1] = -c[k];
  }
  // Reduce the objective row against the current basis.
  for (int i = 0; i < m; ++i) {
    int b = tab.basis[i];
    if (b < 0 || sgn(tab.obj[b]) == 0) continue;
    Rat f = tab.obj[b];
    for (int j = 0; j <= n; ++j) tab.obj[j] -= f * tab.T[i][j];
  }
  // Block artificial columns from re-entering; rows that still carry a basic
  // artificial are redundant (the artificial sits at value zero).
  for (int i = 0; i < m; ++i)
    if (tab.basis[i] >= art0) {
      // Redundant row: every non-artificial entry is zero; drop it by
      // zeroing so it can never pivot.
      for (int j = 0; j < art0; ++j) tab.T[i][j] = Rat(0);
    }
  for (int j = art0; j < n; ++j) {
    tab.obj[j] = Rat(1);  // positive reduced cost: never entering
    for (int i = 0; i < m; ++i)
      if (tab.basis[i] != j) tab.T[i][j] = Rat(0);
  }

  st = tab.iterate();
  LPResult r;
  if (st == LPStatus::Unbounded) {
    r.status = LPStatus::Unbounded;
    return r;
  }
  r.status = LPStatus::Optimal;
  std::vector<Rat> x(n, Rat(0));
  for (int i = 0; i < m; ++i)
    if (tab.basis[i] >= 0) x[tab.basis[i]] = tab.T[i][n];
  r.point = QVec::Zero(nfree);
  r.value = Rat(0);
  for (int k = 0; k < nfree; ++k) {
    r.point[k] = x[2 * k] - x[2 * k + 1];
    r.value += c[k] * r.point[k];
  }
  return r;
}

bool lp_feasible(const std::vector<LPConstraint>& cons, int nvars) {
  LPResult r = lp_minimize(QVec::Zero(nvars), cons);
  return r.status != LPStatus::Infeasible;
}

}  // namespace ahg
