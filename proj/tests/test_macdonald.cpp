#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qchar/macdonald.hpp"
#include "qchar/qdiff.hpp"

using namespace qchar;

namespace {

QTLaurent lift(const ZPoly& f) { return lift_integer<QTRational>(f); }

// Two-variable P_(2) by hand: m_2 + (1+q)(1-t)/(1-qt) m_11.
QTRational p2_coeff() {
  BiPoly one(QPoly(1)), q(QPoly::var_power(1)), t = BiPoly::t_power(1);
  return QTRational((one + q) * (one - t), one - q * t);
}

}  // namespace

TEST_CASE("small Macdonald polynomials") {
  CHECK(macdonald_poly(Partition({1}), 3).poly == lift(elementary(1, 3)));
  CHECK(macdonald_poly(Partition({1, 1}), 3).poly == lift(elementary(2, 3)));
  auto p2 = macdonald_poly(Partition({2}), 2);
  CHECK(p2.monomial_coeffs.size() == 2);
  CHECK(p2.monomial_coeffs.at(Partition({1, 1})) == p2_coeff());
  CHECK(macdonald_eigenvalue(Partition({2}), 2) == QTRational(QPoly::var_power(2)) * QTRational::t() + QTRational(1));
  CHECK_THROWS_AS(macdonald_poly(Partition({1, 1, 1}), 2), InvalidArgument);
}

TEST_CASE("t = 0 limit reproduces level-one characters") {
  for (int N = 2; N <= 3; ++N)
    for (int size = 0; size <= 4; ++size)
      for (const auto& lam : partitions_of(size, N)) {
        CAPTURE(lam.to_string());
        CAPTURE(N);
        QLaurent w = qwhittaker_specialize(macdonald_poly(lam, N));
        NVector n = level_one_from_partition(lam, N - 1);
        QLaurent en = lift_integer<QPoly>(elementary(N, N)).pow(lam.part(N - 1));
        CHECK(w == en * character_polynomial(n));
      }
  CHECK(qwhittaker_specialize(macdonald_poly(Partition({2, 1}), 3)) == character_polynomial(NVector::level_one(2, {1, 1})));
}

TEST_CASE("degenerate operators have the character as eigenvector") {
  for (const auto& lam : partitions_of(4, 2)) {
    NVector n = level_one_from_partition(lam, 2);
    QLaurent chi = character_polynomial(n);
    for (int a = 1; a <= 2; ++a) {
      int e = 0;
      for (int b = 1; b <= 2; ++b) e += std::min(a, b) * n.at(b, 1);
      CHECK(macdonald_t_limit(a, chi) == QPoly::var_power(e) * chi);
    }
  }
}
