#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qchar/characters.hpp"

using namespace qchar;

namespace {

QLaurent lift(const ZPoly& f) { return lift_integer<QPoly>(f); }
WPoly v(int e) { return WPoly::var_power(2 * e); }
QPoly q(int e) { return QPoly::var_power(e); }

// e_m(z1, z2, z3) restricted to z1 z2 z3 = 1
WLaurent e3c(int m) { return constrain(lift_integer<WPoly>(elementary(m, 3)), 2); }

}  // namespace

TEST_CASE("nvector") {
  NVector n = NVector::parse("1,0;0,1", 2);
  CHECK(n.level() == 2);
  CHECK(n.at(1, 1) == 1);
  CHECK(n.at(2, 2) == 1);
  CHECK(n.sigma() == 2);
  CHECK(n.to_string() == "1,0;0,1");
  CHECK(n.shifted(0, 1, 5) == n);
  CHECK(n.shifted(3, 2, 5) == n);
  CHECK(n.shifted(1, 2, 1).at(1, 2) == 1);
  CHECK(n.by_alpha() == std::vector<std::vector<int>>{{1, 0}, {0, 1}});
  CHECK_THROWS_AS(NVector::parse("1,0,0", 2), InvalidArgument);
  CHECK_THROWS_AS(NVector::parse("1,-1", 2), InvalidArgument);
  CHECK_THROWS_AS(NVector::parse("1,x", 2), InvalidArgument);
  CHECK_THROWS_AS(NVector::parse("1;1", 1, 3), InvalidArgument);
}

TEST_CASE("small characters") {
  CHECK(character_polynomial(NVector::zero(2, 1)) == QLaurent::constant(3, QPoly(1)));
  CHECK(character_polynomial(NVector::level_one(2, {1, 0})) == lift(elementary(1, 3)));
  QLaurent expect11 = lift(schur(Partition({2, 1}), 3)) + q(-1) * lift(schur(Partition({1, 1, 1}), 3));
  CHECK(character_polynomial(NVector::level_one(2, {1, 1})) == expect11);
  QLaurent expect2 = lift(schur(Partition({2}), 2)) + q(-1) * lift(schur(Partition({1, 1}), 2));
  CHECK(character_polynomial(NVector::level_one(1, {2})) == expect2);

  auto m = multiplicities(NVector::level_one(2, {1, 1}));
  CHECK(m.size() == 2);
  CHECK(m.at(Partition::parse("w1+w2", 2)) == QPoly(1));
  CHECK(m.at(Partition()) == q(-1));
  auto m2 = multiplicities(NVector::level_one(1, {2}));
  CHECK(m2.at(Partition({2})) == QPoly(1));
  CHECK(m2.at(Partition()) == q(-1));

  CHECK(top_component(NVector::level_one(2, {1, 1})) == Partition({2, 1}));
  CHECK(top_component(NVector::zero(2, 1)) == Partition());
  CHECK(top_component(NVector(1, 2, {{1}, {1}})) == Partition({3}));
}

TEST_CASE("sl2 level-1 characters follow the three-term recursion") {
  auto chi = oracle::sl2_characters(10);
  for (int n = 0; n <= 10; ++n) CHECK(character_polynomial(NVector::level_one(1, {n})) == chi[static_cast<std::size_t>(n)]);
}

TEST_CASE("r=2 level-1 G values") {
  WLaurent e1 = e3c(1), e2 = e3c(2), one = WLaurent::constant(2, WPoly(1));
  CHECK(g_coefficient(NVector::level_one(2, {1, 0})) == v(-4) * e1);
  CHECK(g_coefficient(NVector::level_one(2, {0, 1})) == v(-4) * e2);
  CHECK(g_coefficient(NVector::level_one(2, {2, 0})) == v(-7) * (v(-3) * (e1 * e1) + (WPoly(1) - v(-3)) * e2));
  CHECK(g_coefficient(NVector::level_one(2, {1, 1})) == v(-6) * (v(-3) * (e1 * e2) + (WPoly(1) - v(-3)) * one));
  CHECK(g_coefficient(NVector::level_one(2, {0, 2})) == v(-7) * (v(-3) * (e2 * e2) + (WPoly(1) - v(-3)) * e1));
}

TEST_CASE("prefactor exponents") {
  CHECK(m_path_q_exponent(NVector::level_one(2, {1, 1})) == -1);
  CHECK(m_path_q_exponent(NVector::level_one(2, {2, 0})) == -1);
  CHECK(m_path_q_exponent(NVector::zero(3, 2)) == 0);
  CHECK(chi_to_g_w_exponent(NVector::level_one(2, {1, 1})) == 18);
  CHECK(chi_to_g_w_exponent(NVector::level_one(2, {1, 0})) == 8);
}

TEST_CASE("character properties") {
  std::vector<NVector> ns = {
      NVector::level_one(2, {2, 1}), NVector::level_one(3, {1, 0, 1}), NVector(1, 2, {{1}, {2}}),
      NVector(2, 2, {{1, 0}, {0, 1}}), NVector(2, 3, {{0, 1}, {1, 0}, {1, 0}}), NVector::level_one(1, {3}),
  };
  for (const auto& n : ns) {
    CAPTURE(n.to_string());
    QLaurent chi = character_polynomial(n);
    for (const auto& [m, c] : chi.terms()) CHECK(c.high() <= 0);
    // q^-1 -> 0 leaves the top component
    QLaurent top = chi.transform_terms([](const Monomial& m, const QPoly& c) { return std::pair<Monomial, QPoly>(m, QPoly(c.coeff(0))); });
    CHECK(top == lift(schur(top_component(n), n.rank() + 1)));
    CHECK(at_q_one(chi) == ungraded_character(n));
    for (const auto& [lam, c] : multiplicities(n))
      for (const auto& [e, x] : c.terms()) CHECK(x > 0);
    // M path and D path agree through the chi/G relation
    QLaurent lhs = constrain(chi, n.rank());
    QLaurent rhs = w_to_q(WPoly::var_power(chi_to_g_w_exponent(n)) * g_coefficient(n), n.rank());
    CHECK(lhs == rhs);
    // order of factors within a level is irrelevant
    std::vector<int> order;
    for (int a = 1; a <= n.rank(); ++a) order.push_back(a);
    CHECK(thread_engine().character_with_order(n, order) == chi);
  }
  CHECK(at_q_one(character_polynomial(NVector::level_one(1, {3}))) == (ZPoly::variable(2, 0) + ZPoly::variable(2, 1)).pow(3));
}
