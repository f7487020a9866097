#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ahg/numeric.hpp"
#include "ahg/order.hpp"
#include "ahg/polynomial.hpp"
#include "ahg/series.hpp"

#include "test_util.hpp"

#include <random>

using namespace ahg;

TEST_CASE("rational parsing") {
  CHECK(parse_rat("3/4") == Rat(3, 4));
  CHECK(parse_rat("-2") == Rat(-2));
  CHECK(parse_rat("6/4") == Rat(3, 2));
  CHECK(parse_rat("0") == Rat(0));
  CHECK(rat_str(Rat(-5, 3)) == "-5/3");
  CHECK_THROWS_AS(parse_rat("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK(is_integer(make_rat(4, 2)));
  CHECK(!is_integer(Rat(1, 2)));
  CHECK(is_negative_integer(Rat(-3)));
  CHECK(!is_negative_integer(Rat(-1, 2)));
  CHECK(!is_negative_integer(Rat(3)));
}

TEST_CASE("binomials and factorials") {
  CHECK(factorial(5) == Rat(120));
  CHECK(binomial(6, 2) == Rat(15));
  CHECK(binomial(4, 7) == Rat(0));
  CHECK(binomial(4, -1) == Rat(0));
}

// Independent statement of graded reverse lexicographic order: higher total
// degree wins; on ties the last nonzero entry of a - b decides, negative
// entry meaning a is greater.
static Cmp grevlex_oracle(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree())
    return a.degree() < b.degree() ? Cmp::Less : Cmp::Greater;
  for (int i = a.nvars() - 1; i >= 0; --i) {
    int d = a[i] - b[i];
    if (d != 0) return d < 0 ? Cmp::Greater : Cmp::Less;
  }
  return Cmp::Equal;
}

TEST_CASE("grevlex against brute-force oracle, all pairs deg <= 4") {
  TermOrder ord = TermOrder::grevlex(3);
  auto ms = monomials_up_to_degree(3, 4);
  for (const auto& a : ms)
    for (const auto& b : ms) {
      CHECK(ord.compare(a, b) == grevlex_oracle(a, b));
      // Antisymmetry.
      Cmp ab = ord.compare(a, b), ba = ord.compare(b, a);
      CHECK(static_cast<int>(ab) == -static_cast<int>(ba));
    }
  // Multiplicativity on a random sample.
  std::mt19937_64 rng(7);
  for (int t = 0; t < 400; ++t) {
    const Monomial& a = ms[rng() % ms.size()];
    const Monomial& b = ms[rng() % ms.size()];
    const Monomial& c = ms[rng() % ms.size()];
    CHECK(ord.compare(a, b) == ord.compare(a * c, b * c));
  }
}

TEST_CASE("weighted order refines the weight, grevlex tie-break") {
  QVec w = tu::qvec({1, 3, 0});
  TermOrder ord = TermOrder::weighted(w);
  auto ms = monomials_up_to_degree(3, 4);
  for (const auto& a : ms)
    for (const auto& b : ms) {
      Rat wa(0), wb(0);
      for (int i = 0; i < 3; ++i) {
        wa += w[i] * a[i];
        wb += w[i] * b[i];
      }
      Cmp c = ord.compare(a, b);
      if (wa > wb) CHECK(c == Cmp::Greater);
      else if (wa < wb) CHECK(c == Cmp::Less);
      else CHECK(c == grevlex_oracle(a, b));
    }
}

TEST_CASE("elimination order: block variables dominate") {
  QVec w = QVec::Zero(4);
  TermOrder ord = TermOrder::elimination(w, 2);
  // Any monomial touching the first two variables beats any avoiding them.
  CHECK(ord.greater(tu::mono({1, 0, 0, 0}), tu::mono({0, 0, 5, 5})));
  CHECK(ord.greater(tu::mono({0, 1, 0, 0}), tu::mono({0, 0, 9, 0})));
  CHECK(ord.less(tu::mono({0, 0, 1, 0}), tu::mono({1, 0, 0, 0})));
  // Within the free block the grevlex tie-break applies.
  CHECK(ord.greater(tu::mono({0, 0, 2, 0}), tu::mono({0, 0, 1, 0})));
}

TEST_CASE("polynomial arithmetic basics") {
  Polynomial x = Polynomial::variable(VarFamily::T, 2, 0);
  Polynomial y = Polynomial::variable(VarFamily::T, 2, 1);
  Polynomial p = (x + y) * (x - y);
  Polynomial q = x * x - y * y;
  CHECK(p == q);
  CHECK(p.total_degree() == 2);
  CHECK(p.is_homogeneous());
  CHECK(!(p + Polynomial::constant(VarFamily::T, 2, Rat(1))).is_homogeneous());
  CHECK((p - p).is_zero());
  Polynomial d = p.derivative(0);
  CHECK(d == Rat(2) * x);
  CHECK_THROWS_AS(x * Polynomial::variable(VarFamily::S, 2, 0), ring_error);
}

TEST_CASE("initial form picks the maximal-weight terms") {
  QVec w = tu::qvec({2, 1});
  Polynomial x = Polynomial::variable(VarFamily::DX, 2, 0);
  Polynomial y = Polynomial::variable(VarFamily::DX, 2, 1);
  Polynomial f = x * y + y * y * y + x * x;  // weights 3, 3, 4
  CHECK(f.initial_form(w) == x * x);
  Polynomial g = x * y + Rat(5) * y * y * y;  // tie at weight 3
  CHECK(g.initial_form(w) == g);
}

TEST_CASE("apply_operator and falling factorial") {
  // Dt1^2 . t1^3 t2 = 6 t1 t2
  Polynomial f = Polynomial::monomial(VarFamily::T, tu::mono({3, 1}));
  Polynomial q = Polynomial::monomial(VarFamily::DT, tu::mono({2, 0}));
  Polynomial r = apply_operator(q, f);
  CHECK(r == Polynomial::monomial(VarFamily::T, tu::mono({1, 1}), Rat(6)));
  // Vanishes when the exponent is too small.
  Polynomial q3 = Polynomial::monomial(VarFamily::DT, tu::mono({0, 2}));
  CHECK(apply_operator(q3, f).is_zero());

  // [v]_u at zero shift equals prod_j v_j (v_j - 1) ... (v_j - u_j + 1).
  QVec v = tu::qvec_rat({"5/2", "-1"});
  Polynomial ff = falling_factorial(v, tu::mono({2, 1}), VarFamily::S);
  Rat expect = Rat(5, 2) * Rat(3, 2) * Rat(-1);
  CHECK(ff.constant_term() == expect);
}

TEST_CASE("series inversion multiplies back to one") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 25; ++t) {
    Polynomial p = tu::random_poly(rng, VarFamily::T, 3, 4, 6);
    // Force a nonzero constant term regardless of what the random draw
    // produced.
    p -= Polynomial::constant(VarFamily::T, 3, p.constant_term());
    p += Polynomial::constant(VarFamily::T, 3, Rat(1 + static_cast<long>(rng() % 5)));
    TruncatedSeries s(p, 5);
    TruncatedSeries inv = series_invert_unit(s);
    TruncatedSeries one(Polynomial::constant(VarFamily::T, 3, Rat(1)), 5);
    CHECK(s * inv == one);
  }
  TruncatedSeries zc(Polynomial::variable(VarFamily::T, 2, 0), 3);
  CHECK_THROWS_AS(series_invert_unit(zc), std::domain_error);
}
