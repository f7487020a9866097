#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ahg {

using Int = mpz_class;
using Rat = mpq_class;

using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using QMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

inline Rat make_rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "-p" or "p/q" into a canonical rational.
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  Rat q;
  if (slash == std::string::npos) {
    q = Rat(Int(s));
  } else {
    Int den(s.substr(slash + 1));
    if (sgn(den) <= 0)
      throw std::invalid_argument("rational with nonpositive denominator: " +
                                  s);
    q = Rat(Int(s.substr(0, slash)), den);
  }
  q.canonicalize();
  return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// True iff q is a negative integer.
inline bool is_negative_integer(const Rat& q) {
  return is_integer(q) && sgn(q) < 0;
}

inline Rat factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return Rat(f);
}

inline Rat binomial(int n, int k) {
  if (k < 0 || k > n) return Rat(0);
  Int b = 1;
  for (int i = 0; i < k; ++i) {
    b *= (n - i);
    b /= (i + 1);
  }
  return Rat(b);
}

}  // namespace ahg

namespace Eigen {

template <>
struct NumTraits<ahg::Int> : GenericNumTraits<ahg::Int> {
  using Real = ahg::Int;
  using NonInteger = ahg::Rat;
  using Nested = ahg::Int;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 16,
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<ahg::Rat> : GenericNumTraits<ahg::Rat> {
  using Real = ahg::Rat;
  using NonInteger = ahg::Rat;
  using Nested = ahg::Rat;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 32,
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
