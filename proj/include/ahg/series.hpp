#pragma once

#include "ahg/polynomial.hpp"

#include <stdexcept>

namespace ahg {

/// Polynomial truncated at a fixed total degree. Arithmetic drops every
/// term above the truncation degree; mixed-degree operands truncate to the
/// smaller degree.
struct TruncatedSeries {
  Polynomial poly;
  int trunc_deg = 0;

  TruncatedSeries() = default;
  TruncatedSeries(Polynomial p, int deg) : poly(std::move(p)), trunc_deg(deg) {
    chop();
  }

  VarFamily family() const { return poly.family(); }
  int nvars() const { return poly.nvars(); }

  void chop() {
    Polynomial r(poly.family(), poly.nvars());
    for (auto& [m, c] : poly.terms())
      if (m.degree() <= trunc_deg) r.add_term(m, c);
    poly = std::move(r);
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    TruncatedSeries r(a.poly + b.poly, std::min(a.trunc_deg, b.trunc_deg));
    return r;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    TruncatedSeries r(a.poly - b.poly, std::min(a.trunc_deg, b.trunc_deg));
    return r;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    TruncatedSeries r(a.poly * b.poly, std::min(a.trunc_deg, b.trunc_deg));
    return r;
  }
  friend TruncatedSeries operator*(const Rat& c, TruncatedSeries a) {
    a.poly *= c;
    return a;
  }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.trunc_deg == b.trunc_deg && a.poly == b.poly;
  }
};

/// Multiplicative inverse of a unit series (nonzero constant term) modulo
/// terms of degree > trunc_deg.
inline TruncatedSeries series_invert_unit(const TruncatedSeries& f) {
  Rat c0 = f.poly.constant_term();
  if (sgn(c0) == 0)
    throw std::domain_error("series_invert_unit: zero constant term");
  int n = f.nvars();
  VarFamily fam = f.family();
  // g = f/c0 - 1 is nilpotent mod the truncation; invert by the geometric
  // series 1 - g + g^2 - ...
  Polynomial g = f.poly * (Rat(1) / c0) -
                 Polynomial::constant(fam, n, Rat(1));
  TruncatedSeries gs(g, f.trunc_deg);
  TruncatedSeries acc(Polynomial::constant(fam, n, Rat(1)), f.trunc_deg);
  TruncatedSeries power(Polynomial::constant(fam, n, Rat(1)), f.trunc_deg);
  for (int k = 1; k <= f.trunc_deg; ++k) {
    power = power * gs;
    if (power.poly.is_zero()) break;
    acc = (k % 2 == 1) ? acc - power : acc + power;
  }
  return Rat(1) / c0 * acc;
}

}  // namespace ahg
