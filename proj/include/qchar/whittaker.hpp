#pragma once

// sl2 q-Whittaker series in u = 1/q with coefficients in Q(p), and the
// level-one Toda form of the character recursion for general rank.

#include <optional>
#include <string>
#include <vector>

#include "qchar/characters.hpp"
#include "qchar/rational.hpp"

namespace qchar {

// p^(half/2) * sum_{j <= order} c_j u^j, half in {-1, 0, 1}.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(int order, int half = 0);

  static TruncatedSeries constant(int order, const PRational& c, int half = 0);

  int order() const { return order_; }
  int half() const { return half_; }
  const PRational& coeff(int j) const { return c_.at(static_cast<std::size_t>(j)); }
  void set_coeff(int j, const PRational& c) { c_.at(static_cast<std::size_t>(j)) = c; }
  bool is_zero() const;
  // Lowest j with nonzero c_j.
  std::optional<int> valuation() const;
  // Largest j with nonzero c_j.
  std::optional<int> degree() const;

  TruncatedSeries inverse() const;
  TruncatedSeries p_inverted() const;
  TruncatedSeries u_shifted(int k) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const PRational& s, const TruncatedSeries& a);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  std::string to_string() const;

 private:
  int order_ = 0;
  int half_ = 0;
  std::vector<PRational> c_{PRational()};
};

// W'(n) = p^(n - 1/2) sum_a u^(a(n+1)) / prod_{i=1}^a (1 - u^i)(1 - p^2 u^i),
// or its image under p -> 1/p when reflected. Needs n >= 0.
TruncatedSeries w_series(int n, bool reflected, int order);

// lim_{n -> 0} (1 - u^n) W'(n-1) = p^(-3/2) / prod_{i>=1} (1 - u^i)(1 - p^2 u^i),
// the term that survives at n = 0 when n is treated as continuous.
TruncatedSeries w_boundary_term(bool reflected, int order);

// W(n+1) + (1 - u^n) W(n-1) - (p + 1/p) W(n). At n = 0, w_prev is taken to be
// w_boundary_term, already carrying its factor.
TruncatedSeries toda_residual(const TruncatedSeries& w_prev, const TruncatedSeries& w_cur, const TruncatedSeries& w_next, int n);

// Both basis series satisfy the Toda relation to the given order for n in [n_min, n_max].
bool check_toda_eigen(int n_min, int n_max, int order);

// c_lambda, truncated: p^(1/2) / ((1 - p^-2) prod_{i=1}^order (1 - p^-2 u^i)).
TruncatedSeries class_one_coefficient(bool reflected, int order);
TruncatedSeries class_one_series(int n, int order);
// sl2 level-one character with z1 = p, z2 = 1/p, as a series in u.
TruncatedSeries character_series(int n, int order);
bool class_one_combination(int n_min, int n_max, int order);

// Level-one Toda form of the character recursion, checked on z with
// z1...z_{r+1} = 1 for every n with |n| <= sigma_max. Returns the first failure.
std::optional<NVector> level1_toda_failure(int rank, int sigma_max);
bool check_level1_toda(int rank, int sigma_max);

}  // namespace qchar
