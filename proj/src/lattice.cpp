#include "ahg/lattice.hpp"

namespace ahg {

namespace {

/// Fraction-free Gaussian elimination; returns the rank and, optionally,
/// the set of pivot columns.
int rational_rank(QMat M, std::vector<int>* pivot_cols = nullptr) {
  int rows = static_cast<int>(M.rows());
  int cols = static_cast<int>(M.cols());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (sgn(M(r, c)) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank) M.row(piv).swap(M.row(rank));
    for (int r = rank + 1; r < rows; ++r) {
      if (sgn(M(r, c)) == 0) continue;
      Rat f = M(r, c) / M(rank, c);
      for (int cc = c; cc < cols; ++cc) M(r, cc) -= f * M(rank, cc);
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++rank;
  }
  return rank;
}

QMat to_rational(const IMat& A) {
  QMat M(A.rows(), A.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) M(i, j) = Rat(A(i, j));
  return M;
}

}  // namespace

int rank_of(const IMat& A) { return rational_rank(to_rational(A)); }

bool check_homogeneous(const IMat& A) {
  // Solvability of A^T y = (1,...,1): compare ranks of A^T and [A^T | 1].
  int d = static_cast<int>(A.rows());
  int n = static_cast<int>(A.cols());
  QMat M(n, d + 1);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < d; ++i) M(j, i) = Rat(A(i, j));
    M(j, d) = Rat(1);
  }
  QMat At = M.leftCols(d);
  return rational_rank(At) == rational_rank(M);
}

IMat kernel_basis(const IMat& A) {
  int d = static_cast<int>(A.rows());
  int n = static_cast<int>(A.cols());
  if (rank_of(A) < d) throw rank_error("kernel_basis: A is rank-deficient");
  // Integer row reduction of [A^T | I_n]: rows whose A^T-part vanishes give
  // a saturated Z-basis of Ker_Z A in the identity part.
  IMat M(n, d + n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < d; ++i) M(j, i) = A(i, j);
    for (int k = 0; k < n; ++k) M(j, d + k) = (j == k) ? 1 : 0;
  }
  int row = 0;
  for (int c = 0; c < d && row < n; ++c) {
    // Euclidean elimination within column c on rows >= row.
    while (true) {
      int piv = -1;
      for (int r = row; r < n; ++r)
        if (sgn(M(r, c)) != 0 &&
            (piv < 0 || abs(M(r, c)) < abs(M(piv, c))))
          piv = r;
      if (piv < 0) break;
      if (piv != row) M.row(piv).swap(M.row(row));
      bool clean = true;
      for (int r = row + 1; r < n; ++r) {
        if (sgn(M(r, c)) == 0) continue;
        Int q = M(r, c) / M(row, c);  // truncated division is fine here
        if (sgn(q) != 0) M.row(r) -= q * M.row(row);
        if (sgn(M(r, c)) != 0) clean = false;
      }
      if (clean) break;
    }
    if (sgn(M(row, c)) != 0) ++row;
  }
  int h = n - row;
  if (h != n - d)
    throw rank_error("kernel_basis: unexpected kernel dimension");
  IMat B(n, h);
  for (int k = 0; k < h; ++k) {
    for (int j = 0; j < n; ++j) B(j, k) = M(row + k, d + j);
    // Normalize sign: make the first nonzero entry positive.
    for (int j = 0; j < n; ++j) {
      if (sgn(B(j, k)) == 0) continue;
      if (sgn(B(j, k)) < 0) B.col(k) = -B.col(k);
      break;
    }
  }
  return B;
}

void validate_basis(const IMat& A, const IMat& B) {
  int n = static_cast<int>(A.cols());
  int h = n - static_cast<int>(A.rows());
  if (B.rows() != n || static_cast<int>(B.cols()) != h)
    throw kernel_error("set_basis: B has wrong shape");
  IMat AB = A * B;
  for (int i = 0; i < AB.rows(); ++i)
    for (int j = 0; j < AB.cols(); ++j)
      if (sgn(AB(i, j)) != 0) throw kernel_error("set_basis: A*B != 0");
  if (rank_of(B) < h)
    throw sublattice_error("set_basis: columns are dependent");
  // Full-lattice test: every column of a saturated kernel basis must have
  // integer coordinates in B.
  IMat K = kernel_basis(A);
  for (int k = 0; k < h; ++k) {
    IVec col = K.col(k);
    auto z = lattice_coordinates(B, col);
    if (!z)
      throw sublattice_error("set_basis: B spans a proper sublattice");
  }
}

std::optional<AffineSolution> solve_affine(const IMat& A, const QVec& beta,
                                           const std::map<int, Rat>& fixed,
                                           const std::set<int>& free_set) {
  int d = static_cast<int>(A.rows());
  int n = static_cast<int>(A.cols());
  std::vector<int> free_idx(free_set.begin(), free_set.end());
  int f = static_cast<int>(free_idx.size());
  // Residual system: sum_{j free} A_ij v_j = beta_i - sum_{fixed} A_ij c_j.
  QMat M(d, f + 1);
  for (int i = 0; i < d; ++i) {
    Rat rhs = beta[i];
    for (auto& [j, c] : fixed) rhs -= Rat(A(i, j)) * c;
    for (int k = 0; k < f; ++k) M(i, k) = Rat(A(i, free_idx[k]));
    M(i, f) = rhs;
  }
  // Gaussian elimination with back substitution.
  std::vector<int> pivots;  // pivot column per pivot row
  int row = 0;
  for (int c = 0; c < f && row < d; ++c) {
    int piv = -1;
    for (int r = row; r < d; ++r)
      if (sgn(M(r, c)) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) M.row(piv).swap(M.row(row));
    Rat lead = M(row, c);
    for (int cc = c; cc <= f; ++cc) M(row, cc) /= lead;
    for (int r = 0; r < d; ++r) {
      if (r == row || sgn(M(r, c)) == 0) continue;
      Rat fac = M(r, c);
      for (int cc = c; cc <= f; ++cc) M(r, cc) -= fac * M(row, cc);
    }
    pivots.push_back(c);
    ++row;
  }
  for (int r = row; r < d; ++r)
    if (sgn(M(r, f)) != 0) return std::nullopt;  // inconsistent
  AffineSolution sol;
  sol.ambiguous = static_cast<int>(pivots.size()) < f;
  sol.v = QVec::Zero(n);
  for (auto& [j, c] : fixed) sol.v[j] = c;
  for (size_t r = 0; r < pivots.size(); ++r)
    sol.v[free_idx[pivots[r]]] = M(static_cast<int>(r), f);
  return sol;
}

std::vector<IVec> enumerate_lattice(const IMat& B, int radius, const QVec* w,
                                    const Rat* weight_cap) {
  int n = static_cast<int>(B.rows());
  int h = static_cast<int>(B.cols());
  std::vector<IVec> out;
  std::vector<int> z(h, -radius);
  if (h == 0) {
    out.push_back(IVec::Zero(n));
    return out;
  }
  while (true) {
    IVec u = IVec::Zero(n);
    for (int k = 0; k < h; ++k)
      if (z[k] != 0) u += Int(z[k]) * B.col(k);
    bool keep = true;
    if (w && weight_cap) {
      Rat wu(0);
      for (int j = 0; j < n; ++j)
        if (sgn(u[j]) != 0) wu += (*w)[j] * Rat(u[j]);
      keep = (wu <= *weight_cap);
    }
    if (keep) out.push_back(u);
    int k = h - 1;
    while (k >= 0 && z[k] == radius) z[k--] = -radius;
    if (k < 0) break;
    ++z[k];
  }
  return out;
}

std::optional<IVec> lattice_coordinates(const IMat& B, const IVec& u) {
  int n = static_cast<int>(B.rows());
  int h = static_cast<int>(B.cols());
  QMat M(n, h + 1);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < h; ++k) M(j, k) = Rat(B(j, k));
    M(j, h) = Rat(u[j]);
  }
  // Solve B z = u over Q, then check integrality.
  int row = 0;
  std::vector<int> pivots;
  for (int c = 0; c < h && row < n; ++c) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (sgn(M(r, c)) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) M.row(piv).swap(M.row(row));
    Rat lead = M(row, c);
    for (int cc = c; cc <= h; ++cc) M(row, cc) /= lead;
    for (int r = 0; r < n; ++r) {
      if (r == row || sgn(M(r, c)) == 0) continue;
      Rat fac = M(r, c);
      for (int cc = c; cc <= h; ++cc) M(r, cc) -= fac * M(row, cc);
    }
    pivots.push_back(c);
    ++row;
  }
  for (int r = row; r < n; ++r)
    if (sgn(M(r, h)) != 0) return std::nullopt;
  if (static_cast<int>(pivots.size()) < h) return std::nullopt;
  IVec z(h);
  for (int k = 0; k < h; ++k) {
    Rat val = M(k, h);
    if (!is_integer(val)) return std::nullopt;
    z[k] = val.get_num();
  }
  return z;
}

}  // namespace ahg
