#pragma once

// Quantum torus on the initial data {Q_{a,0}, Q_{a,1}}, a = 1..r.
//
// Elements are stored normal ordered: a term is c Q0^a Q1^b with all Q_{.,0}
// to the left. Slots [0, r) of a Monomial hold a, slots [r, 2r) hold b.
// Moving Q1^b left past Q0^c costs v^(-b.Lambda.c), so
//   (Q0^a Q1^b)(Q0^c Q1^d) = v^(-b.Lambda.c) Q0^(a+c) Q1^(b+d).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qchar/cartan.hpp"
#include "qchar/laurent_poly.hpp"

namespace qchar {

class NcLaurent {
 public:
  NcLaurent() = default;
  explicit NcLaurent(int rank) : r_(rank) {}

  static NcLaurent constant(int rank, const WPoly& c);
  // Q_{a,k} for k in {0, 1}
  static NcLaurent generator(int rank, int alpha, int k, int power = 1);
  static NcLaurent monomial(int rank, const Monomial& m, const WPoly& c);

  int rank() const { return r_; }
  const std::map<Monomial, WPoly>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  void add_term(const Monomial& m, const WPoly& c);

  NcLaurent& operator+=(const NcLaurent& o);
  NcLaurent& operator-=(const NcLaurent& o);
  friend NcLaurent operator+(NcLaurent a, const NcLaurent& b) { return a += b; }
  friend NcLaurent operator-(NcLaurent a, const NcLaurent& b) { return a -= b; }
  friend NcLaurent operator*(const WPoly& s, const NcLaurent& f);
  friend bool operator==(const NcLaurent& a, const NcLaurent& b) { return a.t_ == b.t_; }
  friend bool operator!=(const NcLaurent& a, const NcLaurent& b) { return !(a == b); }

  // True when no Q_{b,1} carries a negative exponent.
  bool is_polynomial_in_q1() const;
  // True when no Q_{a,0} occurs.
  bool is_q1_only() const;

  // "v^-1*Q1_0^-1*Q1_1^2" style; Qa_k denotes Q_{a,k}, v-powers may be halves.
  std::string to_string() const;

 private:
  int r_ = 1;
  std::map<Monomial, WPoly> t_;
};

// w-exponent of the normal-ordering factor for (Q^x)(Q^y).
int nc_twist(const CartanData& c, const Monomial& x, const Monomial& y);

NcLaurent nc_mul(const NcLaurent& f, const NcLaurent& g);
// X with X * g = f, resp. Y with g * Y = f. Throw NcNotDivisible.
NcLaurent nc_right_div(const NcLaurent& f, const NcLaurent& g);
NcLaurent nc_left_div(const NcLaurent& f, const NcLaurent& g);

using QTable = std::map<std::pair<int, int>, NcLaurent>;

// Q_{a,k} for a in [0, r+1] and k in [k_min, k_max]; Q_{0,k} = Q_{r+1,k} = 1.
QTable q_recursion(int rank, int k_max, int k_min);

enum class EvalMode { Ev, Ev0 };

// Substitutes Q_{a,0} = 1 (Ev) or Q_{a,0} = v^(-sum_b lambda_ab) (Ev0) in
// the normal-ordered form.
NcLaurent evaluate(const NcLaurent& f, EvalMode mode);

// Word in generators Q_{a,k}, k >= 1, looked up in the table.
NcLaurent word_product(const QTable& table, int rank, const std::vector<std::pair<int, int>>& word);
bool check_polynomiality(const QTable& table, int rank, const std::vector<std::pair<int, int>>& word);

}  // namespace qchar
