#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qchar/symfun.hpp"

using namespace qchar;

namespace {
ZPoly z(int n, int i) { return ZPoly::variable(n, i); }
}  // namespace

TEST_CASE("partition parsing and weights") {
  CHECK(Partition::parse("(2,1,0)") == Partition({2, 1}));
  CHECK(Partition::parse("2,1") == Partition({2, 1}));
  CHECK(Partition::parse("()") == Partition());
  CHECK(Partition::parse("w1+w2", 2) == Partition({2, 1}));
  CHECK(Partition::parse("\xCF\x89" "1+\xCF\x89" "2", 2) == Partition({2, 1}));
  CHECK(Partition::parse("2w1", 1) == Partition({2}));
  CHECK(Partition::parse("0", 3) == Partition());
  CHECK_THROWS_AS(Partition::parse("(1,2)"), InvalidArgument);
  CHECK_THROWS_AS(Partition::parse("w4", 2), InvalidArgument);
  CHECK_THROWS_AS(Partition::parse("a,b"), InvalidArgument);
  CHECK(Partition({2, 1}).to_string(3) == "(2,1,0)");
  CHECK(Partition({3, 1, 1}).weight(2) == std::vector<int>{2, 0});
  CHECK(Partition({1, 1, 1}).strip_columns(3) == Partition());
  CHECK(Partition({2, 1}).weight_string(2) == "w1+w2");
  CHECK(Partition({3}).weight_string(1) == "3w1");
  CHECK(Partition({2, 1}).conjugate() == Partition({2, 1}));
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
  CHECK(Partition({2, 1}).dominates(Partition({1, 1, 1})));
  CHECK_FALSE(Partition({1, 1, 1}).dominates(Partition({2, 1})));
}

TEST_CASE("elementary symmetric functions") {
  CHECK(elementary(0, 3) == ZPoly::constant(3, 1));
  CHECK(elementary(1, 3) == z(3, 0) + z(3, 1) + z(3, 2));
  CHECK(elementary(4, 3).is_zero());
  CHECK(elementary(2, 3) == z(3, 0) * z(3, 1) + z(3, 0) * z(3, 2) + z(3, 1) * z(3, 2));
}

TEST_CASE("schur polynomials") {
  CHECK(schur(Partition({1}), 3) == elementary(1, 3));
  CHECK(schur(Partition({1, 1}), 3) == elementary(2, 3));
  ZPoly s21 = schur(Partition({2, 1}), 3);
  CHECK(s21.size() == 7);
  CHECK(s21 == elementary(1, 3) * elementary(2, 3) - elementary(3, 3));
  CHECK(schur(Partition({1, 1, 1, 1}), 3).is_zero());
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 5; ++k)
      for (const auto& p : partitions_of(k, n)) CHECK(schur(p, n) == oracle::schur_ssyt(p, n));
}

TEST_CASE("schur expansion") {
  auto e = schur_expand(schur(Partition({2, 1}), 3));
  CHECK(e.size() == 1);
  CHECK(e.at(Partition({2, 1})) == 1);
  auto p = schur_expand(elementary(1, 3) * elementary(2, 3));
  CHECK(p.size() == 2);
  CHECK(p.at(Partition({2, 1})) == 1);
  CHECK(p.at(Partition({1, 1, 1})) == 1);
  CHECK(p.begin()->first == Partition({2, 1}));
  CHECK_THROWS_AS(schur_expand(z(2, 0) + BigInt(2) * z(2, 1)), NotSymmetric);
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 6; ++k)
      for (const auto& lam : partitions_of(k, n)) {
        auto x = schur_expand(schur(lam, n));
        REQUIRE(x.size() == 1);
        CHECK(x.begin()->first == lam);
        CHECK(x.begin()->second == 1);
      }
}

TEST_CASE("pieri rule") {
  CHECK(pieri_e(Partition(), 2, 3) == std::vector<Partition>{Partition({1, 1})});
  CHECK(pieri_e(Partition({1}), 1, 2) == std::vector<Partition>{Partition({2}), Partition({1, 1})});
  CHECK(pieri_e(Partition({1, 1}), 1, 2) == std::vector<Partition>{Partition({2, 1})});
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k <= 4; ++k)
      for (const auto& lam : partitions_of(k, n))
        for (int m = 0; m <= n; ++m) {
          ZPoly sum(n);
          for (const auto& mu : pieri_e(lam, m, n)) sum += schur(mu, n);
          CHECK(sum == schur(lam, n) * elementary(m, n));
        }
}

TEST_CASE("littlewood-richardson positivity") {
  const int n = 3;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (const auto& la : partitions_of(a, n))
        for (const auto& mu : partitions_of(b, n))
          for (const auto& [nu, c] : schur_expand(schur(la, n) * schur(mu, n))) CHECK(c > 0);
}

TEST_CASE("monomial symmetric functions") {
  CHECK(monomial_symmetric(Partition({1}), 3) == elementary(1, 3));
  CHECK(monomial_symmetric(Partition({2, 1}), 3).size() == 6);
  CHECK(complete_homogeneous(2, 2) == schur(Partition({2}), 2));
  auto dom = dominated_partitions(Partition({2, 1}), 3);
  CHECK(dom == std::vector<Partition>{Partition({2, 1}), Partition({1, 1, 1})});
}
