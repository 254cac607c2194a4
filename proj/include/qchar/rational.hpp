#pragma once

// Rational functions over Z.
//
//   RationalFunction<Var>  quotient field of Z[x, x^-1], one variable
//   BiPoly                 Z[q, q^-1][t], dense in t
//   QTRational             quotient field of BiPoly, kept gcd-reduced
//
// Canonical forms: numerator and denominator coprime over Z (integer content
// included), denominator normalized so its lowest exponent is 0 and its
// leading coefficient is positive.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qchar/scalar.hpp"

namespace qchar {

// Primitive part with positive leading coefficient and lowest exponent 0.
template <class Var>
UniLaurent<Var> primitive_normal(const UniLaurent<Var>& a) {
  if (a.is_zero()) return a;
  BigInt c = a.content();
  if (sgn(a.lead()) < 0) c = -c;
  return a.divide_integer(c)->shifted(-a.low());
}

// gcd in Z[x, x^-1], normalized as above but carrying the integer gcd of the
// contents. gcd(0, 0) = 0.
template <class Var>
UniLaurent<Var> poly_gcd(const UniLaurent<Var>& a, const UniLaurent<Var>& b) {
  if (a.is_zero()) return b.is_zero() ? b : UniLaurent<Var>(b.content()) * primitive_normal(b);
  if (b.is_zero()) return UniLaurent<Var>(a.content()) * primitive_normal(a);
  BigInt cg;
  BigInt ca = a.content(), cb = b.content();
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  UniLaurent<Var> x = primitive_normal(a), y = primitive_normal(b);
  if (x.high() < y.high()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.high() == 0) {
      x = UniLaurent<Var>(1);
      break;
    }
    // pseudo-remainder of x by y, then primitive part
    UniLaurent<Var> r = x;
    const UniLaurent<Var> ly(y.lead());
    while (!r.is_zero() && r.high() >= y.high()) {
      int d = r.high() - y.high();
      r = ly * r - UniLaurent<Var>::monomial(r.lead(), d) * y;
    }
    x = std::move(y);
    y = primitive_normal(r);
  }
  return UniLaurent<Var>(cg) * x;
}

template <class Var>
class RationalFunction {
 public:
  using Poly = UniLaurent<Var>;

  RationalFunction() : num_(), den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Poly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Poly& n, const Poly& d) : num_(n), den_(d) {
    if (d.is_zero()) throw InvalidArgument("rational function with zero denominator");
    reduce();
  }

  static RationalFunction var_power(int e) { return RationalFunction(Poly::var_power(e)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFunction inverted_var() const { return RationalFunction(num_.inverted(), den_.inverted()); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a) {
    RationalFunction r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction();
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw InvalidArgument("division by zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = Poly(1);
      return;
    }
    if (!den_.is_one()) {
      Poly g = poly_gcd(num_, den_);
      if (!g.is_one()) {
        num_ = *num_.divide(g);
        den_ = *den_.divide(g);
      }
    }
    int s = den_.low();
    if (sgn(den_.lead()) < 0) {
      den_ = -den_;
      num_ = -num_;
    }
    if (s != 0) {
      den_ = den_.shifted(-s);
      num_ = num_.shifted(-s);
    }
  }

  Poly num_;
  Poly den_;
};

using PRational = RationalFunction<PVar>;
using QRational = RationalFunction<QVar>;

template <class Var>
bool is_zero(const RationalFunction<Var>& x) {
  return x.is_zero();
}
template <class Var>
std::string to_string(const RationalFunction<Var>& x) {
  return x.to_string();
}
template <class Var>
bool is_atomic(const RationalFunction<Var>& x) {
  return x.is_polynomial() && x.num().num_terms() <= 1;
}
template <class Var>
std::optional<RationalFunction<Var>> try_divide(const RationalFunction<Var>& a, const RationalFunction<Var>& b) {
  return a / b;
}

// Polynomials in t with Z[q, q^-1] coefficients.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(long c) : BiPoly(QPoly(c)) {}  // NOLINT(google-explicit-constructor)
  BiPoly(const QPoly& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) c_.push_back(c);
  }
  explicit BiPoly(std::vector<QPoly> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static BiPoly t_power(int d, const QPoly& c = QPoly(1));

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  // -1 for the zero polynomial
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const QPoly& lc() const { return c_.back(); }
  QPoly coeff(int d) const {
    return (d < 0 || d > degree()) ? QPoly() : c_[static_cast<std::size_t>(d)];
  }
  const std::vector<QPoly>& coeffs() const { return c_; }

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  BiPoly scaled(const QPoly& s) const;
  BiPoly q_shifted(int k) const;
  // Lowest q-exponent over all coefficients.
  int q_low() const;
  // gcd of all coefficients in Z[q, q^-1].
  QPoly content() const;
  std::optional<BiPoly> divide(const QPoly& d) const;
  std::optional<BiPoly> divide(const BiPoly& d) const;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<QPoly> c_;
};

BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b);

class QTRational {
 public:
  QTRational() : num_(), den_(1) {}
  QTRational(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QTRational(const BigInt& c) : num_(QPoly(c)), den_(1) {}  // NOLINT(google-explicit-constructor)
  QTRational(const QPoly& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QTRational(const BiPoly& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QTRational(const BiPoly& n, const BiPoly& d);

  static QTRational q_pow(int k) { return QTRational(QPoly::var_power(k)); }
  static QTRational t() { return QTRational(BiPoly::t_power(1)); }

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  QTRational q_shifted(int k) const;

  // Value at t = 0 as a Laurent polynomial in q. Throws PoleAtZero when the
  // denominator vanishes at t = 0 and NotDivisible when the value is not a
  // Laurent polynomial.
  QPoly eval_t0() const;

  // Coefficient of t^d of a polynomial value, after checking that no higher
  // power of t occurs. This is lim t^-d * f as t -> infinity.
  QPoly limit_t_infinity(int d) const;

  friend QTRational operator+(const QTRational& a, const QTRational& b);
  friend QTRational operator-(const QTRational& a, const QTRational& b);
  friend QTRational operator-(const QTRational& a);
  friend QTRational operator*(const QTRational& a, const QTRational& b);
  friend QTRational operator/(const QTRational& a, const QTRational& b);
  QTRational& operator+=(const QTRational& o) { return *this = *this + o; }
  QTRational& operator-=(const QTRational& o) { return *this = *this - o; }
  QTRational& operator*=(const QTRational& o) { return *this = *this * o; }

  friend bool operator==(const QTRational& a, const QTRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const QTRational& a, const QTRational& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void reduce();
  BiPoly num_;
  BiPoly den_;
};

inline bool is_zero(const BiPoly& x) { return x.is_zero(); }
inline bool is_zero(const QTRational& x) { return x.is_zero(); }
inline std::string to_string(const BiPoly& x) { return x.to_string(); }
inline std::string to_string(const QTRational& x) { return x.to_string(); }
inline bool is_atomic(const QTRational& x) {
  return x.is_polynomial() && x.num().degree() == 0 && x.num().lc().num_terms() <= 1;
}
inline std::optional<QTRational> try_divide(const QTRational& a, const QTRational& b) { return a / b; }

}  // namespace qchar
