#pragma once

#include "ahg/monomial.hpp"
#include "ahg/numeric.hpp"
#include "ahg/order.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ahg {

/// Variable family a polynomial lives in. Families come in dual pairs
/// (coordinates vs. the corresponding constant-coefficient operators).
enum class VarFamily {
  X, DX,   // x_1..x_n and d/dx
  S, DS,   // lattice-perturbation coordinates (h of them)
  T, DT,   // full perturbation coordinates (n of them)
  Y, DY,   // logarithm variables y_j = log x_j
  AUX,     // elimination scratch rings
};

inline VarFamily dual_family(VarFamily f) {
  switch (f) {
    case VarFamily::X: return VarFamily::DX;
    case VarFamily::DX: return VarFamily::X;
    case VarFamily::S: return VarFamily::DS;
    case VarFamily::DS: return VarFamily::S;
    case VarFamily::T: return VarFamily::DT;
    case VarFamily::DT: return VarFamily::T;
    case VarFamily::Y: return VarFamily::DY;
    case VarFamily::DY: return VarFamily::Y;
    case VarFamily::AUX: return VarFamily::AUX;
  }
  throw std::logic_error("dual_family");
}

inline const char* family_symbol(VarFamily f) {
  switch (f) {
    case VarFamily::X: return "x";
    case VarFamily::DX: return "Dx";
    case VarFamily::S: return "s";
    case VarFamily::DS: return "Ds";
    case VarFamily::T: return "t";
    case VarFamily::DT: return "Dt";
    case VarFamily::Y: return "y";
    case VarFamily::DY: return "Dy";
    case VarFamily::AUX: return "z";
  }
  return "?";
}

struct ring_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are keyed lexicographically; no zero coefficients are stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rat>;

  Polynomial() = default;
  Polynomial(VarFamily fam, int nvars) : fam_(fam), nvars_(nvars) {}

  static Polynomial constant(VarFamily fam, int nvars, const Rat& c) {
    Polynomial p(fam, nvars);
    if (sgn(c) != 0) p.terms_[Monomial(nvars)] = c;
    return p;
  }
  static Polynomial variable(VarFamily fam, int nvars, int i) {
    Polynomial p(fam, nvars);
    p.terms_[Monomial::unit(nvars, i)] = 1;
    return p;
  }
  static Polynomial monomial(VarFamily fam, const Monomial& m,
                             const Rat& c = Rat(1)) {
    Polynomial p(fam, m.nvars());
    if (sgn(c) != 0) p.terms_[m] = c;
    return p;
  }

  VarFamily family() const { return fam_; }
  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  Rat coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  Rat constant_term() const { return coeff(Monomial(nvars_)); }

  int total_degree() const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;  // -1 for the zero polynomial
  }

  bool is_homogeneous() const {
    int d = -2;
    for (auto& [m, c] : terms_) {
      if (d == -2) d = m.degree();
      else if (m.degree() != d) return false;
    }
    return true;
  }

  bool is_monomial() const { return terms_.size() == 1; }

  void add_term(const Monomial& m, const Rat& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_ring(o);
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_ring(o);
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Rat& c) {
    if (sgn(c) == 0) {
      terms_.clear();
    } else {
      for (auto& [m, v] : terms_) v *= c;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    a += b;
    return a;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    a -= b;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const Rat& c) {
    a *= c;
    return a;
  }
  friend Polynomial operator*(const Rat& c, Polynomial a) {
    a *= c;
    return a;
  }
  friend Polynomial operator-(Polynomial a) {
    a *= Rat(-1);
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    Polynomial r(a.fam_, a.nvars_);
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.fam_ == b.fam_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Leading term under a term order.
  std::pair<Monomial, Rat> leading_term(const TermOrder& ord) const {
    if (terms_.empty()) throw std::domain_error("leading_term of zero");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (ord.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
  }

  /// Terms of maximal w-weight (the w-initial form).
  Polynomial initial_form(const QVec& w) const {
    Polynomial r(fam_, nvars_);
    bool have = false;
    Rat best(0);
    for (auto& [m, c] : terms_) {
      Rat wm(0);
      for (int i = 0; i < nvars_; ++i)
        if (m[i]) wm += w[i] * m[i];
      if (!have || wm > best) {
        best = wm;
        have = true;
        r.terms_.clear();
        r.terms_[m] = c;
      } else if (wm == best) {
        r.terms_[m] = c;
      }
    }
    return r;
  }

  Polynomial with_family(VarFamily f) const {
    Polynomial r(f, nvars_);
    r.terms_ = terms_;
    return r;
  }

  /// Substitutes variable i by `forms[i]`; the forms live in a common ring.
  Polynomial substitute(const std::vector<Polynomial>& forms) const {
    if (static_cast<int>(forms.size()) != nvars_)
      throw ring_error("substitute: wrong number of forms");
    VarFamily tf = forms.empty() ? fam_ : forms[0].family();
    int tn = forms.empty() ? nvars_ : forms[0].nvars();
    Polynomial r(tf, tn);
    for (auto& [m, c] : terms_) {
      Polynomial term = Polynomial::constant(tf, tn, c);
      for (int i = 0; i < nvars_; ++i)
        for (int k = 0; k < m[i]; ++k) term = term * forms[i];
      r += term;
    }
    return r;
  }

  /// Partial derivative with respect to variable i.
  Polynomial derivative(int i) const {
    Polynomial r(fam_, nvars_);
    for (auto& [m, c] : terms_) {
      if (m[i] == 0) continue;
      Monomial q = m;
      q[i] -= 1;
      r.add_term(q, c * m[i]);
    }
    return r;
  }

  std::string str() const;

 private:
  void check_ring(const Polynomial& o) const {
    if (fam_ != o.fam_ || nvars_ != o.nvars_)
      throw ring_error("polynomial ring mismatch");
  }

  VarFamily fam_ = VarFamily::X;
  int nvars_ = 0;
  TermMap terms_;
};

/// d^alpha applied to a monomial: [beta]_alpha x^{beta-alpha}, zero when
/// some beta_i < alpha_i.
inline Polynomial apply_derivative_monomial(const Monomial& alpha,
                                            const Monomial& beta,
                                            VarFamily coord_fam) {
  int n = alpha.nvars();
  Rat c(1);
  Monomial out(n);
  for (int i = 0; i < n; ++i) {
    if (beta[i] < alpha[i]) return Polynomial(coord_fam, n);
    for (int k = 0; k < alpha[i]; ++k) c *= (beta[i] - k);
    out[i] = beta[i] - alpha[i];
  }
  return Polynomial::monomial(coord_fam, out, c);
}

/// q(d) . f for q over the dual family of f.
inline Polynomial apply_operator(const Polynomial& q, const Polynomial& f) {
  if (q.family() != dual_family(f.family()) || q.nvars() != f.nvars())
    throw ring_error("apply_operator: operand families are not dual");
  Polynomial r(f.family(), f.nvars());
  for (auto& [alpha, qc] : q.terms())
    for (auto& [beta, fc] : f.terms())
      r += qc * fc * apply_derivative_monomial(alpha, beta, f.family());
  return r;
}

/// prod_j prod_{k=0}^{u_j-1} (v_j + T_j - k) as a polynomial in the shift
/// variables T; at T = 0 this is the falling factorial [v]_u.
inline Polynomial falling_factorial(const QVec& v, const Monomial& u,
                                    VarFamily shift_fam) {
  int n = u.nvars();
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument("falling_factorial: dimension mismatch");
  Polynomial r = Polynomial::constant(shift_fam, n, Rat(1));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < u[j]; ++k) {
      Polynomial factor = Polynomial::variable(shift_fam, n, j);
      factor += Polynomial::constant(shift_fam, n, v[j] - k);
      r = r * factor;
    }
  return r;
}

inline Cmp monomial_compare(const TermOrder& ord, const Monomial& a,
                            const Monomial& b) {
  return ord.compare(a, b);
}

inline std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  // Render in descending grevlex for stable, readable output.
  TermOrder ord = TermOrder::grevlex(nvars_);
  std::vector<const TermMap::value_type*> ts;
  for (auto& t : terms_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) {
    return ord.greater(a->first, b->first);
  });
  std::ostringstream os;
  bool first = true;
  for (auto* t : ts) {
    const Rat& c = t->second;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    Rat a = abs(c);
    bool unit_coeff = (a == 1) && !t->first.is_one();
    if (!unit_coeff) os << a.get_str();
    bool printed = !unit_coeff;
    for (int i = 0; i < nvars_; ++i) {
      int e = t->first[i];
      if (e == 0) continue;
      if (printed) os << "*";
      os << family_symbol(fam_) << (i + 1);
      if (e > 1) os << "^" << e;
      printed = true;
    }
  }
  return os.str();
}

}  // namespace ahg
