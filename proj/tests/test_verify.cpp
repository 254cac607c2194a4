#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qchar/serialize.hpp"
#include "qchar/verify.hpp"

using namespace qchar;

TEST_CASE("report bookkeeping") {
  CheckReport r;
  CHECK_FALSE(r.passed());
  r.record("a", true);
  CHECK(r.passed());
  r.record("b", false, [] { return std::string("why"); });
  r.record("c", false);
  CHECK_FALSE(r.passed());
  CHECK(r.failures == 2);
  CHECK(*r.counterexample == "b: why");
  auto j = r.to_json(true);
  CHECK(j["points"] == 3);
  CHECK(j["results"].size() == 3);
}

TEST_CASE("difference equations and their negative controls") {
  CHECK(check_difference_equation(1, 1, 6).passed());
  CHECK(check_difference_equation(2, 1, 3).passed());
  CHECK(check_difference_equation(1, 2, 4).passed());
  CHECK(check_difference_equation(2, 2, 5).passed());
  CHECK_FALSE(check_difference_equation(1, 1, 6, 1).passed());
  CHECK_FALSE(check_difference_equation(2, 2, 5, 1).passed());
}

TEST_CASE("sl3 level-2 G relations") {
  CHECK(check_sl3_level2_G(1).passed());
  CHECK_FALSE(check_sl3_level2_G(1, 1).passed());
}

TEST_CASE("dual Q-system, small degree") {
  CHECK(check_dual_qsystem(2, OperatorFamily::M, -1, 1, 3).passed());
  CHECK(check_dual_qsystem(2, OperatorFamily::D, -1, 1, 3).passed());
  CHECK_FALSE(check_dual_qsystem(2, OperatorFamily::M, 0, 1, 2, 1).passed());
  CHECK_FALSE(check_dual_qsystem(2, OperatorFamily::D, 0, 1, 2, 1).passed());
}

TEST_CASE("eigen relations") {
  CHECK(check_eigen(2, 3).passed());
  CHECK_FALSE(check_eigen(2, 3, 1).passed());
}

// The exchange sum at a numeric point, straight from the rational functions.
TEST_CASE("cleared exchange sum matches direct evaluation") {
  std::mt19937 rng(7);
  const mpq_class q(3, 2);
  auto direct = [&](int a, int b, int p, const std::vector<mpq_class>& z) {
    const int N = a + b;
    mpq_class total = 0;
    std::vector<int> pick(static_cast<std::size_t>(N), 0);
    std::fill(pick.begin(), pick.begin() + a, 1);
    do {
      mpq_class t1 = 1, t2 = oracle::qpow(q, static_cast<long>(p) * a);
      for (int j = 0; j < N; ++j)
        if (!pick[static_cast<std::size_t>(j)]) {
          t1 *= oracle::qpow(z[static_cast<std::size_t>(j)], p);
          t2 *= oracle::qpow(z[static_cast<std::size_t>(j)], p);
        }
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          if (!pick[static_cast<std::size_t>(i)] || pick[static_cast<std::size_t>(j)]) continue;
          const mpq_class& x = z[static_cast<std::size_t>(i)];
          const mpq_class& y = z[static_cast<std::size_t>(j)];
          t1 *= x / (x - y) * (y / (y - q * x));
          t2 *= y / (y - x) * (x / (x - q * y));
        }
      total += t1 - t2;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return total;
  };
  for (auto [a, b, p] : {std::tuple{1, 1, 3}, {1, 2, 3}, {1, 2, 1}, {0, 2, 1}}) {
    CAPTURE(a);
    CAPTURE(b);
    CAPTURE(p);
    const int N = a + b;
    auto z = oracle::random_point(rng, N);
    mpq_class clear = 1;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        if (i < j) clear *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
        if (i != j) clear *= z[static_cast<std::size_t>(i)] - q * z[static_cast<std::size_t>(j)];
      }
    CHECK(oracle::eval_at(exchange_lemma_cleared(a, b, p), z, q) == direct(a, b, p, z) * clear);
  }
  CHECK(exchange_lemma_cleared(1, 2, 0).is_zero());
  CHECK_FALSE(exchange_lemma_cleared(1, 2, 3).is_zero());
}

TEST_CASE("lemmas") {
  CHECK(check_lemma_exchange(2).passed());
  CHECK(check_lemma_hook(2).passed());
  CHECK(check_lemma_vanishing(3).passed());
  CHECK(check_d_on_one(3).passed());
  CHECK_FALSE(check_lemma_exchange(2, 1).passed());
  CHECK_FALSE(check_lemma_hook(2, 1).passed());
  CHECK_FALSE(check_lemma_vanishing(3, 1).passed());
}

TEST_CASE("limits, torus, Macdonald, Whittaker") {
  CHECK(check_limits(2, 2, 3).passed());
  CHECK(check_torus_recursion(2, -1, 4).passed());
  CHECK(check_torus_commutation(2, -1, 4).passed());
  CHECK(check_torus_polynomiality(2, 2, 3).passed());
  CHECK(check_torus_equivev(2, 5, 1).passed());
  CHECK(check_macdonald(3, 3).passed());
  CHECK(check_whittaker_toda(3, 8).passed());
  CHECK(check_class_one(3, 8).passed());
}

TEST_CASE("suites") {
  CHECK_THROWS_AS(run_suite("nope"), InvalidArgument);
  SuiteOptions opt;
  opt.rank = 1;
  opt.bound = 3;
  for (const std::string s : {"diffeq", "eigen", "limits"}) {
    CAPTURE(s);
    auto reps = run_suite(s, opt);
    CHECK_FALSE(reps.empty());
    for (const auto& r : reps) CHECK(r.passed());
  }
  auto j = reports_json("eigen", run_suite("eigen", opt));
  CHECK(j["schema"] == 1);
  CHECK(j["pass"] == true);
  CHECK_FALSE(j["reports"][0].contains("seconds"));
}

TEST_CASE("character serialization") {
  auto j = character_json(graded_character(NVector::level_one(2, {1, 1})));
  CHECK(j["schema"] == 1);
  CHECK(j["schur"].dump() == R"j({"(2,1,0)":[[0,1]],"(1,1,1)":[[-1,1]]})j");
  auto j0 = character_json(graded_character(NVector::level_one(2, {0, 0})));
  CHECK(j0["schur"].dump() == R"j({"(0,0,0)":[[0,1]]})j");
  CHECK(qpoly_text(QPoly(1) - QPoly::var_power(-2) * QPoly(3)) == "1 - 3q^-2");
}
