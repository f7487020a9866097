#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ahg {

/// Exponent vector of a monomial; entries are nonnegative.
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(int nvars) : e(nvars, 0) {}
  Monomial(std::initializer_list<int> init) : e(init) {}

  int nvars() const { return static_cast<int>(e.size()); }
  int operator[](int i) const { return e[i]; }
  int& operator[](int i) { return e[i]; }

  int degree() const { return std::accumulate(e.begin(), e.end(), 0); }

  bool is_one() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
  }

  bool divides(const Monomial& m) const {
    if (e.size() != m.e.size()) return false;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
  }

  /// Exact quotient; caller must ensure b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) {
      r.e[i] = a.e[i] - b.e[i];
      if (r.e[i] < 0) throw std::domain_error("monomial quotient not exact");
    }
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) r.e[i] = std::min(a.e[i], b.e[i]);
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  // Lexicographic; used only as a container key, not as a term order.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.e < b.e;
  }

  static Monomial unit(int nvars, int i, int power = 1) {
    Monomial m(nvars);
    m.e[i] = power;
    return m;
  }
};

/// All monomials in `nvars` variables of total degree exactly `deg`,
/// in lexicographic order.
inline std::vector<Monomial> monomials_of_degree(int nvars, int deg) {
  std::vector<Monomial> out;
  Monomial cur(nvars);
  // Recursive distribution of deg among variables.
  auto rec = [&](auto&& self, int var, int rem) -> void {
    if (var == nvars - 1) {
      cur.e[var] = rem;
      out.push_back(cur);
      return;
    }
    for (int k = rem; k >= 0; --k) {
      cur.e[var] = k;
      self(self, var + 1, rem - k);
    }
    cur.e[var] = 0;
  };
  if (nvars == 0) {
    if (deg == 0) out.push_back(cur);
    return out;
  }
  rec(rec, 0, deg);
  return out;
}

inline std::vector<Monomial> monomials_up_to_degree(int nvars, int deg) {
  std::vector<Monomial> out;
  for (int d = 0; d <= deg; ++d) {
    auto layer = monomials_of_degree(nvars, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace ahg
