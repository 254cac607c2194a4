#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qchar/qtorus.hpp"

using namespace qchar;

namespace {

WPoly v(int e) { return WPoly::var_power(2 * e); }
NcLaurent Q(int r, int a, int k, int p = 1) { return NcLaurent::generator(r, a, k, p); }
NcLaurent C(int r, const WPoly& c) { return NcLaurent::constant(r, c); }

NcLaurent random_element(std::mt19937& rng, int r) {
  std::uniform_int_distribution<int> e(-2, 2), c(-3, 3), n(1, 4);
  NcLaurent f(r);
  int terms = n(rng);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (int i = 0; i < 2 * r; ++i) m[i] = e(rng);
    f.add_term(m, WPoly(c(rng)) * WPoly::var_power(e(rng)) + WPoly(c(rng)));
  }
  return f;
}

}  // namespace

TEST_CASE("normal ordering") {
  CHECK(nc_mul(Q(1, 1, 1), Q(1, 1, 0)) == v(-1) * nc_mul(Q(1, 1, 0), Q(1, 1, 1)));
  CHECK(nc_mul(Q(2, 1, 1), Q(2, 2, 1)) == nc_mul(Q(2, 2, 1), Q(2, 1, 1)));
  CHECK(nc_mul(Q(2, 1, 0), Q(2, 2, 0)) == nc_mul(Q(2, 2, 0), Q(2, 1, 0)));
  // lambda_12 = 1 for r = 2
  CHECK(nc_mul(Q(2, 2, 1), Q(2, 1, 0)) == v(-1) * nc_mul(Q(2, 1, 0), Q(2, 2, 1)));
  std::mt19937 rng(7);
  NcLaurent f = random_element(rng, 2);
  CHECK(nc_mul(C(2, WPoly(1)), f) == f);
  CHECK(nc_mul(f, C(2, WPoly(1))) == f);
  NcLaurent g = random_element(rng, 2), h = random_element(rng, 2);
  CHECK(nc_mul(nc_mul(f, g), h) == nc_mul(f, nc_mul(g, h)));
  CHECK(Q(1, 1, 1, 2).to_string() == "Q1_1^2");
}

TEST_CASE("division") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    NcLaurent x = random_element(rng, 2), g = random_element(rng, 2);
    if (x.is_zero() || g.is_zero()) continue;
    CHECK(nc_right_div(nc_mul(x, g), g) == x);
    CHECK(nc_left_div(nc_mul(g, x), g) == x);
  }
  NcLaurent one = C(1, WPoly(1));
  CHECK_THROWS_AS(nc_right_div(one, Q(1, 1, 1) + one), NcNotDivisible);
  CHECK_THROWS_AS(nc_right_div(one, C(1, WPoly(2))), NcNotDivisible);
}

TEST_CASE("r=1 recursion") {
  QTable t = q_recursion(1, 3, -1);
  NcLaurent q12 = v(1) * nc_mul(Q(1, 1, 0, -1), Q(1, 1, 1, 2)) - v(-1) * Q(1, 1, 0, -1);
  CHECK(t.at({1, 2}) == q12);
  CHECK(t.at({0, 2}) == C(1, WPoly(1)));
  CHECK(t.at({2, -1}) == C(1, WPoly(1)));
  CHECK(evaluate(q12, EvalMode::Ev) == v(1) * Q(1, 1, 1, 2) - C(1, v(-1)));
  CHECK(evaluate(q12, EvalMode::Ev0) == v(2) * Q(1, 1, 1, 2) - C(1, WPoly(1)));
  CHECK(evaluate(C(1, WPoly(1)), EvalMode::Ev) == C(1, WPoly(1)));
  CHECK(nc_mul(t.at({1, 1}), t.at({1, -1})) == v(-1) * (Q(1, 1, 0, 2) - C(1, WPoly(1))));
  CHECK(check_polynomiality(t, 1, {{1, 2}}));
  CHECK(check_polynomiality(t, 1, {{1, 3}}));
  CHECK(check_polynomiality(t, 1, {{1, 1}}));
  CHECK(!evaluate(t.at({1, 3}), EvalMode::Ev).is_zero());
  CHECK_THROWS_AS(check_polynomiality(t, 1, {{1, 0}}), InvalidArgument);
}

TEST_CASE("recursion relations and commutation window") {
  for (int r = 1; r <= 3; ++r) {
    CAPTURE(r);
    const int kmin = -2, kmax = 6;
    QTable t = q_recursion(r, kmax, kmin);
    const CartanData cd(r);
    for (int k = kmin + 1; k < kmax; ++k)
      for (int a = 1; a <= r; ++a) {
        const NcLaurent& x = t.at({a, k});
        NcLaurent rhs = nc_mul(x, x) - nc_mul(t.at({a + 1, k}), t.at({a - 1, k}));
        CHECK(v(cd.lambda(a, a)) * nc_mul(t.at({a, k + 1}), t.at({a, k - 1})) == rhs);
      }
    for (int a = 1; a <= r; ++a)
      for (int b = 1; b <= r; ++b)
        for (int k = kmin; k <= kmax; ++k)
          for (int k2 = kmin; k2 <= kmax; ++k2) {
            if (std::abs(k - k2) > std::abs(a - b) + 1) continue;
            CHECK(nc_mul(t.at({a, k}), t.at({b, k2})) == v(cd.lambda(a, b) * (k2 - k)) * nc_mul(t.at({b, k2}), t.at({a, k})));
          }
  }
}

TEST_CASE("ev and ev0") {
  std::mt19937 rng(3);
  for (int r = 1; r <= 3; ++r) {
    NcLaurent prod = C(r, WPoly(1));
    for (int b = 1; b <= r; ++b) prod = nc_mul(prod, Q(r, b, 1));
    for (int trial = 0; trial < 10; ++trial) {
      NcLaurent f = random_element(rng, r);
      CHECK(evaluate(nc_mul(prod, f), EvalMode::Ev) == nc_mul(prod, evaluate(f, EvalMode::Ev0)));
      CHECK(evaluate(f, EvalMode::Ev0).is_q1_only());
    }
  }
}

TEST_CASE("polynomiality of short words") {
  for (int r = 1; r <= 2; ++r) {
    QTable t = q_recursion(r, 3, 0);
    std::vector<std::pair<int, int>> gens;
    for (int a = 1; a <= r; ++a)
      for (int k = 1; k <= 3; ++k) gens.emplace_back(a, k);
    for (const auto& g1 : gens)
      for (const auto& g2 : gens) {
        CHECK(check_polynomiality(t, r, {g1, g2}));
        for (const auto& g3 : gens) CHECK(check_polynomiality(t, r, {g1, g2, g3}));
      }
  }
}
