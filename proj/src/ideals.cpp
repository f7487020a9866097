#include "ahg/ideals.hpp"

#include <algorithm>

namespace ahg {

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> gens)
    : nvars_(nvars) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end(),
                         [](const Monomial& a, const Monomial& b) {
                           return a == b;
                         }),
             gens.end());
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && gens[j].divides(gens[i]) && !(gens[i] == gens[j] && j > i))
        redundant = true;
    if (!redundant) gens_.push_back(gens[i]);
  }
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (auto& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

std::vector<StandardPair> standard_pairs(const MonomialIdeal& I) {
  int n = I.nvars();
  // Per-coordinate root bound: a_j <= max_g g_j - 1 off sigma. A maximal
  // admissible pair always satisfies the bound, because a pair whose root
  // exceeds it in coordinate j is contained in one with j freed.
  std::vector<int> bound(n, 0);
  for (auto& g : I.gens())
    for (int j = 0; j < n; ++j) bound[j] = std::max(bound[j], g[j]);

  std::vector<StandardPair> admissible;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::set<int> sigma;
    std::vector<int> off;
    for (int j = 0; j < n; ++j) {
      if (mask & (1u << j)) sigma.insert(j);
      else off.push_back(j);
    }
    // Enumerate roots supported on `off` within the bounds.
    Monomial a(n);
    size_t k = off.size();
    std::vector<int> idx(k, 0);
    while (true) {
      for (size_t t = 0; t < k; ++t) a[off[t]] = idx[t];
      bool ok = true;
      for (auto& g : I.gens()) {
        bool escapes = false;
        for (int j : off)
          if (g[j] > a[j]) {
            escapes = true;
            break;
          }
        if (!escapes) {
          ok = false;
          break;
        }
      }
      if (ok) admissible.push_back({a, sigma});
      size_t t = 0;
      while (t < k && idx[t] + 1 >= std::max(bound[off[t]], 1)) idx[t++] = 0;
      if (t == k) break;
      ++idx[t];
    }
  }
  // Keep maximal pairs: (a, s) is contained in (a', s') iff s is a subset of
  // s' and a agrees with a' off s'.
  std::vector<StandardPair> out;
  for (auto& p : admissible) {
    bool maximal = true;
    for (auto& q : admissible) {
      if (&p == &q || !(p.sigma.size() <= q.sigma.size())) continue;
      if (p.root == q.root && p.sigma == q.sigma) continue;
      bool subset = std::includes(q.sigma.begin(), q.sigma.end(),
                                  p.sigma.begin(), p.sigma.end());
      if (!subset) continue;
      bool agrees = true;
      for (int j = 0; j < I.nvars(); ++j) {
        if (q.sigma.count(j)) continue;
        if (p.root[j] != q.root[j]) {
          agrees = false;
          break;
        }
      }
      if (agrees) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

HomogeneousIdeal::HomogeneousIdeal(VarFamily fam, int nvars,
                                   std::vector<Polynomial> gens)
    : fam_(fam), nvars_(nvars), gens_(std::move(gens)),
      ord_(TermOrder::grevlex(nvars)) {
  gb_ = buchberger(gens_, ord_);
}

bool HomogeneousIdeal::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  if (gb_.empty()) return false;
  return reduces_to_zero(f, gb_, ord_);
}

HomogeneousIdeal HomogeneousIdeal::operator+(const HomogeneousIdeal& o) const {
  std::vector<Polynomial> g = gens_;
  g.insert(g.end(), o.gens_.begin(), o.gens_.end());
  return HomogeneousIdeal(fam_, nvars_, std::move(g));
}

HomogeneousIdeal intersect(const HomogeneousIdeal& I,
                           const HomogeneousIdeal& J) {
  int n = I.nvars();
  int N = n + 1;  // auxiliary variable in slot 0
  auto lift = [&](const Polynomial& p, bool with_z) {
    Polynomial r(VarFamily::AUX, N);
    for (auto& [m, c] : p.terms()) {
      Monomial mm(N);
      for (int j = 0; j < n; ++j) mm[j + 1] = m[j];
      r.add_term(mm, c);
    }
    Polynomial z = Polynomial::variable(VarFamily::AUX, N, 0);
    if (with_z) return z * r;
    return (Polynomial::constant(VarFamily::AUX, N, Rat(1)) - z) * r;
  };
  std::vector<Polynomial> gens;
  for (auto& g : I.gens()) gens.push_back(lift(g, true));
  for (auto& g : J.gens()) gens.push_back(lift(g, false));
  TermOrder elim = TermOrder::elimination(QVec::Zero(N), 1);
  std::vector<Polynomial> G = buchberger(gens, elim);
  std::vector<Polynomial> out;
  for (auto& g : G) {
    bool has_z = false;
    for (auto& [m, c] : g.terms())
      if (m[0] != 0) {
        has_z = true;
        break;
      }
    if (has_z) continue;
    Polynomial p(I.family(), n);
    for (auto& [m, c] : g.terms()) {
      Monomial mm(n);
      for (int j = 0; j < n; ++j) mm[j] = m[j + 1];
      p.add_term(mm, c);
    }
    out.push_back(p);
  }
  return HomogeneousIdeal(I.family(), n, std::move(out));
}

HomogeneousIdeal colon(const HomogeneousIdeal& I, const Polynomial& f) {
  if (f.is_zero())
    throw std::domain_error("colon: division by the zero polynomial");
  HomogeneousIdeal F(I.family(), I.nvars(), {f});
  HomogeneousIdeal M = intersect(I, F);
  TermOrder ord = TermOrder::grevlex(I.nvars());
  std::vector<Polynomial> out;
  for (auto& g : M.gens()) {
    // Exact division g / f by long division against {f}.
    Polynomial rem = g;
    Polynomial quot(I.family(), I.nvars());
    auto [fm, fc] = f.leading_term(ord);
    while (!rem.is_zero()) {
      auto [m, c] = rem.leading_term(ord);
      if (!fm.divides(m))
        throw std::logic_error("colon: inexact division");
      Polynomial t = Polynomial::monomial(I.family(), m / fm, c / fc);
      quot += t;
      rem -= t * f;
    }
    out.push_back(quot);
  }
  return HomogeneousIdeal(I.family(), I.nvars(), std::move(out));
}

HomogeneousIdeal product(const HomogeneousIdeal& I,
                         const HomogeneousIdeal& J) {
  std::vector<Polynomial> out;
  for (auto& g : I.gens())
    for (auto& h : J.gens()) out.push_back(g * h);
  return HomogeneousIdeal(I.family(), I.nvars(), std::move(out));
}

bool ideal_equal(const HomogeneousIdeal& I, const HomogeneousIdeal& J) {
  for (auto& g : I.gens())
    if (!J.contains(g)) return false;
  for (auto& g : J.gens())
    if (!I.contains(g)) return false;
  return true;
}

bool is_artinian(const HomogeneousIdeal& I, int* witness_degree) {
  int n = I.nvars();
  TermOrder ord = I.order();
  // The unit ideal has the zero ring as quotient: Artinian, witness 0.
  for (auto& g : I.groebner())
    if (g.leading_term(ord).first.is_one()) {
      if (witness_degree) *witness_degree = 0;
      return true;
    }
  int bound = 1;  // 1 + sum of (pure power degree - 1)
  for (int j = 0; j < n; ++j) {
    int best = -1;
    for (auto& g : I.groebner()) {
      Monomial m = g.leading_term(ord).first;
      bool pure = m[j] > 0;
      for (int k = 0; k < n && pure; ++k)
        if (k != j && m[k] != 0) pure = false;
      if (pure && (best < 0 || m[j] < best)) best = m[j];
    }
    if (best < 0) return false;
    bound += best - 1;
  }
  if (witness_degree) {
    for (int d = 0; d <= bound; ++d)
      if (standard_monomials(I, d).empty()) {
        *witness_degree = d;
        return true;
      }
    *witness_degree = bound;  // unreachable for a correct bound
  }
  return true;
}

std::vector<Monomial> standard_monomials(const HomogeneousIdeal& I, int d) {
  std::vector<Monomial> out;
  TermOrder ord = I.order();
  std::vector<Monomial> lts;
  for (auto& g : I.groebner()) lts.push_back(g.leading_term(ord).first);
  for (auto& m : monomials_of_degree(I.nvars(), d)) {
    bool in = false;
    for (auto& l : lts)
      if (l.divides(m)) {
        in = true;
        break;
      }
    if (!in) out.push_back(m);
  }
  return out;
}

MonomialIdeal monomial_colon(const MonomialIdeal& I, const Monomial& f) {
  std::vector<Monomial> gens;
  for (auto& g : I.gens()) gens.push_back(g / gcd(g, f));
  return MonomialIdeal(I.nvars(), std::move(gens));
}

MonomialIdeal monomial_intersect(const MonomialIdeal& I,
                                 const MonomialIdeal& J) {
  std::vector<Monomial> gens;
  for (auto& g : I.gens())
    for (auto& h : J.gens()) gens.push_back(lcm(g, h));
  return MonomialIdeal(I.nvars(), std::move(gens));
}

}  // namespace ahg
