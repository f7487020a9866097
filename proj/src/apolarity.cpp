#include "ahg/apolarity.hpp"

#include "ahg/linalg.hpp"

#include <stdexcept>

namespace ahg {

#ifdef AHG_TESTING
bool star_mutation_hook = false;
#endif

Rat apolar_pair(const Polynomial& q, const Polynomial& p) {
  if (q.family() != dual_family(p.family()) || q.nvars() != p.nvars())
    throw ring_error("apolar_pair: operand families are not dual");
  // (q, p) = sum_a q_a a! p_a.
  Rat r(0);
  for (auto& [m, qc] : q.terms()) {
    Rat pc = p.coeff(m);
    if (sgn(pc) == 0) continue;
    Rat fact(1);
    for (int i = 0; i < m.nvars(); ++i)
      for (int k = 2; k <= m[i]; ++k) fact *= k;
    r += qc * fact * pc;
  }
  return r;
}

Polynomial star(const Polynomial& U, const Polynomial& q) {
  if (U.family() != dual_family(q.family()) || U.nvars() != q.nvars())
    throw ring_error("star: operand families are not dual");
  // (U star q)(z)|_{z = d}: apply U(d_z) to q read as a coordinate
  // polynomial, then read the result back in the dual family.
  VarFamily coord = U.family();
  VarFamily dual = q.family();
  Polynomial r =
      apply_operator(U.with_family(dual), q.with_family(coord)).with_family(dual);
#ifdef AHG_TESTING
  if (star_mutation_hook) {
    Polynomial bad(r.family(), r.nvars());
    for (auto& [m, c] : r.terms()) bad.add_term(m, m.degree() == 1 ? -c : c);
    return bad;
  }
#endif
  return r;
}

DualSpace perp_of_ideal(const HomogeneousIdeal& I, int maxdeg) {
  DualSpace V;
  V.fam = dual_family(I.family());
  V.nvars = I.nvars();
  int n = I.nvars();
  for (int d = 0; d <= maxdeg; ++d) {
    std::vector<Monomial> mons = monomials_of_degree(n, d);
    int dim = static_cast<int>(mons.size());
    // Rows: coefficient constraints g star q = 0 over all generators g.
    std::vector<std::vector<Rat>> rows;
    for (auto& g : I.gens()) {
      // Column j of the constraint block: g star (dual monomial mons[j]).
      std::vector<Polynomial> images;
      int rdeg = -1;
      for (auto& m : mons) {
        Polynomial img = star(g, Polynomial::monomial(V.fam, m));
        images.push_back(img);
        rdeg = std::max(rdeg, img.total_degree());
      }
      if (rdeg < 0) continue;
      for (auto& rm : monomials_up_to_degree(n, rdeg)) {
        std::vector<Rat> row(dim, Rat(0));
        bool nonzero = false;
        for (int j = 0; j < dim; ++j) {
          row[j] = images[j].coeff(rm);
          if (sgn(row[j]) != 0) nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
    QMat M(static_cast<int>(rows.size()), dim);
    for (size_t r = 0; r < rows.size(); ++r)
      for (int j = 0; j < dim; ++j) M(static_cast<int>(r), j) = rows[r][j];
    for (auto& v : nullspace(M)) {
      Polynomial q(V.fam, n);
      for (int j = 0; j < dim; ++j)
        if (sgn(v[j]) != 0) q.add_term(mons[j], v[j]);
      V.basis.push_back(q);
    }
  }
  int wd = 0;
  V.complete = is_artinian(I, &wd) && maxdeg + 1 >= wd;
  return V;
}

HomogeneousIdeal annihilator_of_space(const DualSpace& V, int maxdeg) {
  int n = V.nvars;
  VarFamily coord = dual_family(V.fam);
  int k = static_cast<int>(V.basis.size());

  // Coordinates of a dual polynomial in the monomial basis up to maxdeg.
  std::vector<Monomial> all = monomials_up_to_degree(n, maxdeg);
  auto coords = [&](const Polynomial& q) {
    QVec v = QVec::Zero(static_cast<int>(all.size()));
    for (size_t j = 0; j < all.size(); ++j) v[j] = q.coeff(all[j]);
    return v;
  };
  QMat Basis(static_cast<int>(all.size()), k);
  for (int j = 0; j < k; ++j) Basis.col(j) = coords(V.basis[j]);

  // Closure precheck: x_i star q must stay in the space.
  for (int i = 0; i < n; ++i)
    for (auto& q : V.basis) {
      Polynomial img = star(Polynomial::variable(coord, n, i), q);
      if (!solve_linear(Basis, coords(img)))
        throw std::domain_error(
            "annihilator_of_space: space is not closed under star");
    }

  std::vector<Polynomial> gens;
  for (int d = 1; d <= maxdeg; ++d) {
    std::vector<Monomial> mons = monomials_of_degree(n, d);
    int dim = static_cast<int>(mons.size());
    // U = sum_j u_j mons[j]; U star q_b = 0 gives linear rows in u.
    std::vector<std::vector<Rat>> rows;
    for (auto& q : V.basis) {
      std::vector<Polynomial> images;
      int rdeg = -1;
      for (auto& m : mons) {
        Polynomial img = star(Polynomial::monomial(coord, m), q);
        images.push_back(img);
        rdeg = std::max(rdeg, img.total_degree());
      }
      for (auto& rm : monomials_up_to_degree(n, std::max(rdeg, 0))) {
        std::vector<Rat> row(dim, Rat(0));
        bool nonzero = false;
        for (int j = 0; j < dim; ++j) {
          row[j] = images[j].coeff(rm);
          if (sgn(row[j]) != 0) nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
    QMat M(static_cast<int>(rows.size()), dim);
    for (size_t r = 0; r < rows.size(); ++r)
      for (int j = 0; j < dim; ++j) M(static_cast<int>(r), j) = rows[r][j];
    HomogeneousIdeal sofar(coord, n, gens);
    for (auto& v : nullspace(M)) {
      Polynomial U(coord, n);
      for (int j = 0; j < dim; ++j)
        if (sgn(v[j]) != 0) U.add_term(mons[j], v[j]);
      if (!sofar.contains(U)) {
        gens.push_back(U);
        sofar = HomogeneousIdeal(coord, n, gens);
      }
    }
  }
  return HomogeneousIdeal(coord, n, std::move(gens));
}

Polynomial phi_map(const Polynomial& f, const IMat& B) {
  int n = static_cast<int>(B.rows());
  int h = static_cast<int>(B.cols());
  if (f.nvars() != n) throw ring_error("phi_map: dimension mismatch");
  std::vector<Polynomial> forms;
  for (int j = 0; j < n; ++j) {
    Polynomial bs(VarFamily::S, h);
    for (int kk = 0; kk < h; ++kk)
      bs += Rat(B(j, kk)) * Polynomial::variable(VarFamily::S, h, kk);
    forms.push_back(bs);
  }
  return f.substitute(forms);
}

Polynomial psi_map(const Polynomial& q, const IMat& B) {
  int n = static_cast<int>(B.rows());
  int h = static_cast<int>(B.cols());
  if (q.nvars() != h) throw ring_error("psi_map: dimension mismatch");
  std::vector<Polynomial> forms;
  for (int kk = 0; kk < h; ++kk) {
    Polynomial bd(VarFamily::DT, n);
    for (int j = 0; j < n; ++j)
      bd += Rat(B(j, kk)) * Polynomial::variable(VarFamily::DT, n, j);
    forms.push_back(bd);
  }
  return q.substitute(forms);
}

HomogeneousIdeal phi_ideal(const HomogeneousIdeal& I, const IMat& B) {
  std::vector<Polynomial> gens;
  for (auto& g : I.gens()) gens.push_back(phi_map(g, B));
  return HomogeneousIdeal(VarFamily::S, static_cast<int>(B.cols()),
                          std::move(gens));
}

}  // namespace ahg
