#pragma once

// Univariate Laurent polynomials over arbitrary-precision integers.
//
// These are the scalar rings of the library:
//   QPoly  = Z[q, q^-1]
//   WPoly  = Z[w, w^-1]   with w = v^(1/2) and q = v^-(r+1) = w^-2(r+1)
//   PPoly  = Z[p, p^-1]   the sl2 spectral symbol used by the Whittaker series
//
// Storage is dense between the lowest and highest nonzero exponent. The zero
// polynomial has no coefficients; no stored end coefficient is ever zero, so the
// representation of a value is unique.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qchar/errors.hpp"

namespace qchar {

using BigInt = mpz_class;

struct QVar {
  static constexpr const char* name = "q";
};
struct WVar {
  static constexpr const char* name = "w";
};
struct PVar {
  static constexpr const char* name = "p";
};

template <class Var>
class UniLaurent {
 public:
  UniLaurent() = default;
  UniLaurent(long c) {  // NOLINT(google-explicit-constructor): ring literal
    if (c != 0) c_.emplace_back(c);
  }
  UniLaurent(const BigInt& c) {  // NOLINT(google-explicit-constructor)
    if (sgn(c) != 0) c_.push_back(c);
  }

  static UniLaurent monomial(const BigInt& c, int e) {
    UniLaurent r(c);
    r.low_ = r.c_.empty() ? 0 : e;
    return r;
  }
  static UniLaurent var_power(int e) { return monomial(BigInt(1), e); }

  // Builds from (exponent, coefficient) pairs; repeated exponents accumulate.
  static UniLaurent from_terms(const std::vector<std::pair<int, BigInt>>& terms) {
    UniLaurent r;
    for (const auto& [e, c] : terms) r += monomial(c, e);
    return r;
  }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && low_ == 0 && c_[0] == 1; }
  // Lowest / highest exponent carrying a nonzero coefficient (0 for zero).
  int low() const { return low_; }
  int high() const { return c_.empty() ? 0 : low_ + static_cast<int>(c_.size()) - 1; }
  std::size_t num_terms() const {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const BigInt& x) { return sgn(x) != 0; }));
  }

  BigInt coeff(int e) const {
    if (c_.empty() || e < low_ || e > high()) return BigInt(0);
    return c_[static_cast<std::size_t>(e - low_)];
  }
  const BigInt& lead() const { return c_.back(); }
  const BigInt& trail() const { return c_.front(); }

  // Nonzero (exponent, coefficient) pairs in increasing exponent order.
  std::vector<std::pair<int, BigInt>> terms() const {
    std::vector<std::pair<int, BigInt>> out;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (sgn(c_[i]) != 0) out.emplace_back(low_ + static_cast<int>(i), c_[i]);
    return out;
  }

  // Multiplication by var^k.
  UniLaurent shifted(int k) const {
    UniLaurent r = *this;
    if (!r.c_.empty()) r.low_ += k;
    return r;
  }

  // var -> var^-1
  UniLaurent inverted() const {
    UniLaurent r;
    if (c_.empty()) return r;
    r.c_.assign(c_.rbegin(), c_.rend());
    r.low_ = -high();
    return r;
  }

  // var -> var^m  (m != 0)
  UniLaurent substitute_power(int m) const {
    if (m == 0) return UniLaurent(eval_at_one());
    UniLaurent r;
    for (const auto& [e, c] : terms()) r += monomial(c, e * m);
    return r;
  }

  BigInt eval_at_one() const {
    BigInt s = 0;
    for (const auto& c : c_) s += c;
    return s;
  }

  // gcd of the integer coefficients (0 for the zero polynomial).
  BigInt content() const {
    BigInt g = 0;
    for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
  }

  UniLaurent& operator+=(const UniLaurent& o) { return add_scaled(o, 1); }
  UniLaurent& operator-=(const UniLaurent& o) { return add_scaled(o, -1); }
  UniLaurent& operator*=(const UniLaurent& o) {
    *this = *this * o;
    return *this;
  }

  friend UniLaurent operator+(UniLaurent a, const UniLaurent& b) { return a += b; }
  friend UniLaurent operator-(UniLaurent a, const UniLaurent& b) { return a -= b; }
  friend UniLaurent operator-(UniLaurent a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend UniLaurent operator*(const UniLaurent& a, const UniLaurent& b) {
    UniLaurent r;
    if (a.c_.empty() || b.c_.empty()) return r;
    r.low_ = a.low_ + b.low_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (sgn(b.c_[j]) == 0) continue;
        mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
      }
    }
    r.normalize();
    return r;
  }
  friend bool operator==(const UniLaurent& a, const UniLaurent& b) {
    return a.low_ == b.low_ && a.c_ == b.c_;
  }
  friend bool operator!=(const UniLaurent& a, const UniLaurent& b) { return !(a == b); }

  // Coefficient-wise division by an integer; nullopt when inexact.
  std::optional<UniLaurent> divide_integer(const BigInt& d) const {
    UniLaurent r = *this;
    for (auto& c : r.c_) {
      if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    }
    return r;
  }

  // Exact division in Z[x, x^-1]; nullopt when the quotient does not exist.
  std::optional<UniLaurent> divide(const UniLaurent& d) const {
    if (d.is_zero()) throw InvalidArgument("division by zero polynomial");
    if (is_zero()) return UniLaurent();
    if (c_.size() < d.c_.size()) return std::nullopt;
    std::vector<BigInt> rem = c_;
    std::size_t qn = c_.size() - d.c_.size() + 1;
    std::vector<BigInt> quo(qn);
    const BigInt& lc = d.c_.back();
    for (std::size_t k = qn; k-- > 0;) {
      BigInt& top = rem[k + d.c_.size() - 1];
      if (sgn(top) == 0) continue;
      if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
      BigInt f;
      mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
      for (std::size_t j = 0; j < d.c_.size(); ++j) mpz_submul(rem[k + j].get_mpz_t(), f.get_mpz_t(), d.c_[j].get_mpz_t());
      quo[k] = f;
    }
    for (const auto& x : rem)
      if (sgn(x) != 0) return std::nullopt;
    UniLaurent q;
    q.c_ = std::move(quo);
    q.low_ = low_ - d.low_;
    q.normalize();
    return q;
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const BigInt& c = c_[i];
      if (sgn(c) == 0) continue;
      int e = low_ + static_cast<int>(i);
      BigInt mag = abs(c);
      std::string body;
      if (e == 0) {
        body = mag.get_str();
      } else {
        std::string v = Var::name;
        if (e != 1) v += "^" + std::to_string(e);
        body = (mag == 1) ? v : mag.get_str() + "*" + v;
      }
      if (first) {
        out = (sgn(c) < 0 ? "-" : "") + body;
        first = false;
      } else {
        out += (sgn(c) < 0 ? " - " : " + ") + body;
      }
    }
    return out;
  }

 private:
  UniLaurent& add_scaled(const UniLaurent& o, int sign) {
    if (o.c_.empty()) return *this;
    if (c_.empty()) {
      *this = o;
      if (sign < 0)
        for (auto& c : c_) c = -c;
      return *this;
    }
    int lo = std::min(low_, o.low_);
    int hi = std::max(high(), o.high());
    if (lo < low_) {
      c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), BigInt(0));
      low_ = lo;
    }
    if (static_cast<int>(c_.size()) < hi - lo + 1) c_.resize(static_cast<std::size_t>(hi - lo + 1), BigInt(0));
    std::size_t off = static_cast<std::size_t>(o.low_ - low_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
      if (sign > 0)
        c_[off + i] += o.c_[i];
      else
        c_[off + i] -= o.c_[i];
    }
    normalize();
    return *this;
  }

  void normalize() {
    std::size_t b = 0;
    while (b < c_.size() && sgn(c_[b]) == 0) ++b;
    if (b == c_.size()) {
      c_.clear();
      low_ = 0;
      return;
    }
    std::size_t e = c_.size();
    while (sgn(c_[e - 1]) == 0) --e;
    if (b > 0 || e < c_.size()) {
      c_ = std::vector<BigInt>(c_.begin() + static_cast<std::ptrdiff_t>(b), c_.begin() + static_cast<std::ptrdiff_t>(e));
      low_ += static_cast<int>(b);
    }
  }

  int low_ = 0;
  std::vector<BigInt> c_;
};

using QPoly = UniLaurent<QVar>;
using WPoly = UniLaurent<WVar>;
using PPoly = UniLaurent<PVar>;

// Ring glue used by the generic polynomial code.
inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }
template <class Var>
bool is_zero(const UniLaurent<Var>& x) {
  return x.is_zero();
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }
template <class Var>
std::string to_string(const UniLaurent<Var>& x) {
  return x.to_string();
}

inline bool is_atomic(const BigInt&) { return true; }
template <class Var>
bool is_atomic(const UniLaurent<Var>& x) {
  return x.num_terms() <= 1;
}

inline std::optional<BigInt> try_divide(const BigInt& a, const BigInt& b) {
  if (sgn(b) == 0) throw InvalidArgument("integer division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
  BigInt r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}
template <class Var>
std::optional<UniLaurent<Var>> try_divide(const UniLaurent<Var>& a, const UniLaurent<Var>& b) {
  return a.divide(b);
}

// q^m  <->  w^(-2(r+1)m)
inline WPoly q_to_w(const QPoly& c, int rank) {
  WPoly out;
  for (const auto& [e, x] : c.terms()) out += WPoly::monomial(x, -2 * (rank + 1) * e);
  return out;
}

inline QPoly w_to_q(const WPoly& c, int rank) {
  const int unit = 2 * (rank + 1);
  QPoly out;
  for (const auto& [e, x] : c.terms()) {
    if (e % unit != 0)
      throw ExponentNotDivisible("w^" + std::to_string(e) + " is not a power of q for rank " + std::to_string(rank));
    out += QPoly::monomial(x, -e / unit);
  }
  return out;
}

}  // namespace qchar
