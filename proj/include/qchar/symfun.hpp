#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qchar/laurent_poly.hpp"

namespace qchar {

// Weakly decreasing nonnegative parts; trailing zeros are not stored.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // Accepts "(2,1,0)", "2,1", "()" and weight forms such as "w1+w2",
  // "2w1+w3" or "ω1+ω2" (weights need the rank to fix the length).
  static Partition parse(const std::string& text, int rank = 0);
  // Dominant sl(r+1) weight l_a -> partition with lambda_{r+1} = 0.
  static Partition from_weight(const std::vector<int>& ell);

  const std::vector<int>& parts() const { return p_; }
  int length() const { return static_cast<int>(p_.size()); }
  int size() const;
  int part(int i) const { return i < length() ? p_[static_cast<std::size_t>(i)] : 0; }

  // l_a = lambda_a - lambda_{a+1}, a = 1..rank
  std::vector<int> weight(int rank) const;
  // Removes full columns of height n (lambda_n copies of each column).
  Partition strip_columns(int n) const;
  bool dominates(const Partition& o) const;
  Partition conjugate() const;

  // "(2,1,0)" when padded to n parts; n = 0 means no padding.
  std::string to_string(int n = 0) const;
  // "w1+w2", "2w1", "0"
  std::string weight_string(int rank) const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> p_;
};

// Decreasing lexicographic order.
struct PartitionDesc {
  bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

template <class R>
using SchurExpansion = std::map<Partition, R, PartitionDesc>;

ZPoly elementary(int m, int n);
ZPoly complete_homogeneous(int m, int n);
ZPoly monomial_symmetric(const Partition& lambda, int n);
// Alternant a_{lambda+delta} divided by the Vandermonde.
ZPoly schur(const Partition& lambda, int n);
std::vector<Partition> pieri_e(const Partition& lambda, int m, int n);
std::vector<Partition> partitions_of(int size, int max_length);

// Partitions of |lambda| dominated by lambda with at most n parts, listed in
// decreasing lexicographic order.
std::vector<Partition> dominated_partitions(const Partition& lambda, int n);

// Coefficients c with f = sum c_lambda s_lambda. Peels the lex-leading
// monomial, which for a symmetric polynomial is a partition.
template <class R>
SchurExpansion<R> schur_expand(const LaurentPoly<R>& f) {
  if (!f.is_symmetric()) throw NotSymmetric(f.to_string());
  if (!f.is_polynomial()) throw InvalidArgument("schur_expand needs a polynomial, got negative exponents");
  const int n = f.nvars();
  SchurExpansion<R> out;
  LaurentPoly<R> rest = f;
  while (!rest.is_zero()) {
    const auto& [m, c] = rest.leading();
    std::vector<int> parts;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && m[i] > m[i - 1]) throw NonzeroRemainder("leading monomial is not a partition");
      parts.push_back(m[i]);
    }
    Partition lam(parts);
    R coeff = c;
    rest -= coeff * lift_integer<R>(schur(lam, n));
    out.emplace(lam, coeff);
  }
  return out;
}

// sum c_lambda s_lambda
template <class R>
LaurentPoly<R> schur_sum(const SchurExpansion<R>& e, int n) {
  LaurentPoly<R> out(n);
  for (const auto& [lam, c] : e) out += c * lift_integer<R>(schur(lam, n));
  return out;
}

}  // namespace qchar
