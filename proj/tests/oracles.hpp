#pragma once

// Independent reference computations used only by the tests. None of these
// go through Vandermonde clearing or the library's operator code.

#include <gmpxx.h>

#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "qchar/laurent_poly.hpp"
#include "qchar/symfun.hpp"

namespace oracle {

using qchar::BigInt;
using qchar::Monomial;
using qchar::Partition;
using qchar::QLaurent;
using qchar::QPoly;
using qchar::ZPoly;

// Schur polynomial as a sum over semistandard tableaux with entries 1..n.
inline ZPoly schur_ssyt(const Partition& lam, int n) {
  ZPoly out(n);
  if (lam.length() > n) return out;
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < lam.length(); ++i)
    for (int j = 0; j < lam.part(i); ++j) cells.emplace_back(i, j);
  std::vector<std::vector<int>> t(static_cast<std::size_t>(lam.length()));
  for (int i = 0; i < lam.length(); ++i) t[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(lam.part(i)), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      Monomial m;
      for (const auto& row : t)
        for (int x : row) m[x - 1] += 1;
      out.add_term(m, BigInt(1));
      return;
    }
    auto [i, j] = cells[k];
    int lo = 1;
    if (j > 0) lo = std::max(lo, t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)]);
    if (i > 0) lo = std::max(lo, t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] + 1);
    for (int v = lo; v <= n; ++v) {
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

inline mpq_class qpow(const mpq_class& x, long e) {
  mpq_class r = 1, b = x;
  if (e < 0) {
    b = 1 / x;
    e = -e;
  }
  for (long i = 0; i < e; ++i) r *= b;
  return r;
}

inline mpq_class eval_scalar(const QPoly& c, const mpq_class& q) {
  mpq_class s = 0;
  for (const auto& [e, x] : c.terms()) s += mpq_class(x) * qpow(q, e);
  return s;
}
inline mpq_class eval_scalar(const BigInt& c, const mpq_class&) { return mpq_class(c); }

template <class R>
mpq_class eval_at(const qchar::LaurentPoly<R>& f, const std::vector<mpq_class>& z, const mpq_class& q) {
  mpq_class s = 0;
  for (const auto& [m, c] : f.terms()) {
    mpq_class t = eval_scalar(c, q);
    for (std::size_t i = 0; i < z.size(); ++i) t *= qpow(z[i], m[static_cast<int>(i)]);
    s += t;
  }
  return s;
}

// Distinct small nonzero rationals, so no z_i - z_j or z_i vanishes.
inline std::vector<mpq_class> random_point(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(-40, 40), den(1, 7);
  std::vector<mpq_class> z;
  while (static_cast<int>(z.size()) < n) {
    mpq_class x(num(rng), den(rng));
    x.canonicalize();
    if (x == 0) continue;
    bool dup = false;
    for (const auto& y : z)
      if (y == x) dup = true;
    if (!dup) z.push_back(x);
  }
  return z;
}

// (M_{a,n} f)(z) = sum_{|I|=a} z_I^n prod_{i in I, j not in I} z_i/(z_i - z_j) f(z with z_i -> q z_i, i in I)
inline mpq_class apply_M_at(int a, int n, const QLaurent& f, const std::vector<mpq_class>& z, const mpq_class& q) {
  const int N = static_cast<int>(z.size());
  mpq_class total = 0;
  std::vector<int> pick(static_cast<std::size_t>(N), 0);
  std::fill(pick.end() - a, pick.end(), 1);
  do {
    mpq_class term = 1;
    std::vector<mpq_class> shifted = z;
    for (int i = 0; i < N; ++i) {
      if (!pick[static_cast<std::size_t>(i)]) continue;
      term *= qpow(z[static_cast<std::size_t>(i)], n);
      shifted[static_cast<std::size_t>(i)] *= q;
      for (int j = 0; j < N; ++j)
        if (!pick[static_cast<std::size_t>(j)]) term *= z[static_cast<std::size_t>(i)] / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
    }
    total += term * eval_at(f, shifted, q);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return total;
}

// sl2 level-1 characters from chi_{n+1} = e1 chi_n - (1 - q^-n) e2 chi_{n-1},
// the homogeneous form of the recursion in z = z1 = 1/z2.
inline std::vector<QLaurent> sl2_characters(int nmax) {
  std::vector<QLaurent> chi;
  chi.push_back(QLaurent::constant(2, QPoly(1)));
  QLaurent e1 = QLaurent::variable(2, 0) + QLaurent::variable(2, 1);
  QLaurent e2 = QLaurent::variable(2, 0) * QLaurent::variable(2, 1);
  chi.push_back(e1);
  for (int n = 1; n < nmax; ++n)
    chi.push_back(e1 * chi[static_cast<std::size_t>(n)] -
                  (QPoly(1) - QPoly::var_power(-n)) * (e2 * chi[static_cast<std::size_t>(n - 1)]));
  return chi;
}

}  // namespace oracle
