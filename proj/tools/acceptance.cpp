// Runs every acceptance criterion once and prints one PASS/FAIL line each.
// A criterion that passes its checks but exceeds its time limit is a FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "../tests/oracles.hpp"
#include "qchar/verify.hpp"

using namespace qchar;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

Outcome from_reports(const std::vector<CheckReport>& reps) {
  Outcome o;
  std::size_t points = 0;
  for (const auto& r : reps) {
    points += r.points();
    if (!r.passed()) {
      o.ok = false;
      if (o.note.empty()) o.note = r.name + (r.counterexample ? ": " + *r.counterexample : ": no grid points");
    }
  }
  if (o.ok) o.note = std::to_string(points) + " points";
  return o;
}

WPoly v(int e) { return WPoly::var_power(2 * e); }
WLaurent e3c(int m) { return constrain(lift_integer<WPoly>(elementary(m, 3)), 2); }

Outcome sl3_level1_g() {
  const WLaurent e1 = e3c(1), e2 = e3c(2), one = WLaurent::constant(2, WPoly(1));
  const std::vector<std::pair<std::vector<int>, WLaurent>> expect = {
      {{1, 0}, v(-4) * e1},
      {{0, 1}, v(-4) * e2},
      {{2, 0}, v(-7) * (v(-3) * (e1 * e1) + (WPoly(1) - v(-3)) * e2)},
      {{1, 1}, v(-6) * (v(-3) * (e1 * e2) + (WPoly(1) - v(-3)) * one)},
      {{0, 2}, v(-7) * (v(-3) * (e2 * e2) + (WPoly(1) - v(-3)) * e1)},
  };
  for (const auto& [n, g] : expect)
    if (g_coefficient(NVector::level_one(2, n)) != g) return {false, "G_{" + std::to_string(n[0]) + "," + std::to_string(n[1]) + "} differs"};
  return {true, "5 values"};
}

Outcome sl2_recursion() {
  const auto chi = oracle::sl2_characters(10);
  for (int n = 0; n <= 10; ++n)
    if (character_polynomial(NVector::level_one(1, {n})) != chi[static_cast<std::size_t>(n)]) return {false, "chi_" + std::to_string(n) + " differs"};
  return {true, "n <= 10"};
}

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "sl3 level-1 G values", 1, sl3_level1_g},
      {2, "sl2 level-1 recursion", 1, sl2_recursion},
      {3, "sl3 level-2 G relations", 30, [] { return from_reports({check_sl3_level2_G(2)}); }},
      {4, "dual quantum Q-system, M and D forms", 120,
       [] {
         std::vector<CheckReport> r;
         for (int rank : {2, 3})
           for (auto f : {OperatorFamily::M, OperatorFamily::D}) r.push_back(check_dual_qsystem(rank, f, -1, 2, 6));
         return from_reports(r);
       }},
      {5, "difference equations at levels 2 and 3", 120,
       [] {
         std::vector<CheckReport> r;
         for (int rank = 1; rank <= 3; ++rank)
           for (int k = 2; k <= 3; ++k) r.push_back(check_difference_equation(rank, k, rank == 3 ? 6 : 5));
         return from_reports(r);
       }},
      {6, "eigen-relations", 60,
       [] {
         std::vector<CheckReport> r;
         for (int rank = 1; rank <= 3; ++rank) r.push_back(check_eigen(rank, 4));
         return from_reports(r);
       }},
      {7, "t = 0 Macdonald polynomials vs level-1 characters", 120, [] { return from_reports({check_macdonald(4, 3)}); }},
      {8, "subset-sum lemmas and D on 1", 60,
       [] { return from_reports({check_lemma_exchange(3), check_lemma_hook(3), check_lemma_vanishing(4), check_d_on_one(4)}); }},
      {9, "sl2 Whittaker Toda relation and class-one combination", 30,
       [] { return from_reports({check_whittaker_toda(6, 20), check_class_one(4, 20)}); }},
      {10, "quantum torus suite", 120, [] { return from_reports(run_suite("torus")); }},
      {11, "character property suite", 120, [] { return from_reports(run_suite("limits")); }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs >= c.limit_seconds) {
      o.ok = false;
      o.note += ", over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
    }
    all = all && o.ok;
    std::printf("%s %2d %s (%s; %.2f s)\n", o.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), o.note.c_str(), secs);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
