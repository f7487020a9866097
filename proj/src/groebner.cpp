#include "ahg/groebner.hpp"

#include <algorithm>
#include <set>

namespace ahg {

namespace {

struct LTCache {
  Monomial mono;
  Rat coeff;
};

std::vector<LTCache> leading_terms(const std::vector<Polynomial>& basis,
                                   const TermOrder& ord) {
  std::vector<LTCache> lt;
  lt.reserve(basis.size());
  for (auto& g : basis) {
    auto [m, c] = g.leading_term(ord);
    lt.push_back({m, c});
  }
  return lt;
}

}  // namespace

Polynomial normal_form(const Polynomial& f,
                       const std::vector<Polynomial>& basis,
                       const TermOrder& ord) {
  if (basis.empty()) return f;
  auto lt = leading_terms(basis, ord);
  Polynomial rem(f.family(), f.nvars());
  Polynomial work = f;
  while (!work.is_zero()) {
    auto [m, c] = work.leading_term(ord);
    bool reduced = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      if (!lt[i].mono.divides(m)) continue;
      Monomial q = m / lt[i].mono;
      Rat factor = c / lt[i].coeff;
      work -= Polynomial::monomial(f.family(), q, factor) * basis[i];
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add_term(m, c);
      Polynomial t = Polynomial::monomial(f.family(), m, c);
      work -= t;
    }
  }
  return rem;
}

bool reduces_to_zero(const Polynomial& f, const std::vector<Polynomial>& basis,
                     const TermOrder& ord) {
  return normal_form(f, basis, ord).is_zero();
}

std::vector<Polynomial> buchberger(std::vector<Polynomial> gens,
                                   const TermOrder& ord) {
  std::vector<Polynomial> G;
  for (auto& g : gens)
    if (!g.is_zero()) G.push_back(g);
  if (G.empty()) return G;
  VarFamily fam = G[0].family();

  auto lt = leading_terms(G, ord);
  // Pending S-pairs as index pairs; processed in normal-strategy order
  // (smallest lcm under ord; ties broken by the index pair) for determinism.
  std::set<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < G.size(); ++i)
    for (size_t j = i + 1; j < G.size(); ++j) pairs.insert({i, j});

  while (!pairs.empty()) {
    auto best = pairs.begin();
    Monomial best_lcm = lcm(lt[best->first].mono, lt[best->second].mono);
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      Monomial l = lcm(lt[it->first].mono, lt[it->second].mono);
      if (ord.less(l, best_lcm)) {
        best = it;
        best_lcm = l;
      }
    }
    auto [i, j] = *best;
    pairs.erase(best);
    // Coprime leading terms: the S-polynomial reduces to zero.
    if (gcd(lt[i].mono, lt[j].mono).is_one()) continue;
    Monomial l = lcm(lt[i].mono, lt[j].mono);
    Polynomial spoly =
        Polynomial::monomial(fam, l / lt[i].mono, Rat(1) / lt[i].coeff) * G[i] -
        Polynomial::monomial(fam, l / lt[j].mono, Rat(1) / lt[j].coeff) * G[j];
    Polynomial r = normal_form(spoly, G, ord);
    if (r.is_zero()) continue;
    size_t k = G.size();
    for (size_t t = 0; t < k; ++t) pairs.insert({t, k});
    auto [m, c] = r.leading_term(ord);
    G.push_back(std::move(r));
    lt.push_back({m, c});
  }

  // Minimalize: drop elements whose leading monomial is divisible by
  // another's.
  std::vector<bool> keep(G.size(), true);
  for (size_t i = 0; i < G.size(); ++i)
    for (size_t j = 0; j < G.size(); ++j) {
      if (i == j || !keep[i] || !keep[j]) continue;
      if (lt[j].mono.divides(lt[i].mono) &&
          !(lt[i].mono == lt[j].mono && j > i))
        keep[i] = false;
    }
  std::vector<Polynomial> M;
  for (size_t i = 0; i < G.size(); ++i)
    if (keep[i]) M.push_back(G[i] * (Rat(1) / lt[i].coeff));

  // Autoreduce tails against the rest.
  std::vector<Polynomial> R;
  for (size_t i = 0; i < M.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < M.size(); ++j)
      if (j != i) others.push_back(M[j]);
    Polynomial r = normal_form(M[i], others, ord);
    if (!r.is_zero()) {
      auto [m, c] = r.leading_term(ord);
      R.push_back(r * (Rat(1) / c));
    }
  }
  std::sort(R.begin(), R.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leading_term(ord).first, b.leading_term(ord).first);
  });
  return R;
}

std::vector<Polynomial> toric_ideal(const IMat& B) {
  int n = static_cast<int>(B.rows());
  int h = static_cast<int>(B.cols());
  // Auxiliary ring with the saturation variable z in slot 0 and the partial
  // derivatives in slots 1..n.
  int N = n + 1;
  std::vector<Polynomial> gens;
  for (int k = 0; k < h; ++k) {
    Monomial plus(N), minus(N);
    for (int j = 0; j < n; ++j) {
      Int b = B(j, k);
      if (sgn(b) > 0) plus[j + 1] = static_cast<int>(b.get_si());
      else if (sgn(b) < 0) minus[j + 1] = static_cast<int>(Int(-b).get_si());
    }
    Polynomial g = Polynomial::monomial(VarFamily::AUX, plus) -
                   Polynomial::monomial(VarFamily::AUX, minus);
    gens.push_back(g);
  }
  // z * d1 ... dn - 1 saturates at the product of the variables.
  Monomial all(N);
  all[0] = 1;
  for (int j = 1; j <= n; ++j) all[j] = 1;
  gens.push_back(Polynomial::monomial(VarFamily::AUX, all) -
                 Polynomial::constant(VarFamily::AUX, N, Rat(1)));

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
    Polynomial p(VarFamily::DX, n);
    for (auto& [m, c] : g.terms()) {
      Monomial mm(n);
      for (int j = 0; j < n; ++j) mm[j] = m[j + 1];
      p.add_term(mm, c);
    }
    out.push_back(p);
  }
  return out;
}

ToricGB toric_groebner(const IMat& B, const QVec& w) {
  std::vector<Polynomial> gens = toric_ideal(B);
  TermOrder ord = TermOrder::weighted(w);
  ToricGB r;
  r.basis = buchberger(gens, ord);
  for (auto& g : r.basis) {
    Polynomial in = g.initial_form(w);
    if (!in.is_monomial()) throw WeightNotGeneric(g);
    r.initial_gens.push_back(in.terms().begin()->first);
  }
  return r;
}

}  // namespace ahg
