#include "qchar/rational.hpp"

#include <algorithm>
#include <climits>

namespace qchar {

void BiPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly BiPoly::t_power(int d, const QPoly& c) {
  if (d < 0) throw InvalidArgument("negative t power");
  std::vector<QPoly> v(static_cast<std::size_t>(d) + 1);
  v.back() = c;
  return BiPoly(std::move(v));
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  std::vector<QPoly> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return BiPoly(std::move(v));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  std::vector<QPoly> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
  return BiPoly(std::move(v));
}

BiPoly operator-(const BiPoly& a) {
  BiPoly r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return BiPoly();
  std::vector<QPoly> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return BiPoly(std::move(v));
}

BiPoly BiPoly::scaled(const QPoly& s) const {
  std::vector<QPoly> v = c_;
  for (auto& c : v) c *= s;
  return BiPoly(std::move(v));
}

BiPoly BiPoly::q_shifted(int k) const {
  BiPoly r = *this;
  for (auto& c : r.c_) c = c.shifted(k);
  return r;
}

int BiPoly::q_low() const {
  int lo = INT_MAX;
  for (const auto& c : c_)
    if (!c.is_zero()) lo = std::min(lo, c.low());
  return lo == INT_MAX ? 0 : lo;
}

QPoly BiPoly::content() const {
  QPoly g;
  for (const auto& c : c_) {
    g = poly_gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

std::optional<BiPoly> BiPoly::divide(const QPoly& d) const {
  std::vector<QPoly> v;
  v.reserve(c_.size());
  for (const auto& c : c_) {
    auto q = c.divide(d);
    if (!q) return std::nullopt;
    v.push_back(std::move(*q));
  }
  return BiPoly(std::move(v));
}

std::optional<BiPoly> BiPoly::divide(const BiPoly& d) const {
  if (d.is_zero()) throw InvalidArgument("division by zero polynomial");
  if (is_zero()) return BiPoly();
  if (d.degree() == 0) return divide(d.c_[0]);
  if (degree() < d.degree()) return std::nullopt;
  BiPoly r = *this;
  std::vector<QPoly> quo(static_cast<std::size_t>(degree() - d.degree()) + 1);
  while (!r.is_zero() && r.degree() >= d.degree()) {
    auto f = r.lc().divide(d.lc());
    if (!f) return std::nullopt;
    int s = r.degree() - d.degree();
    quo[static_cast<std::size_t>(s)] = *f;
    r = r - BiPoly::t_power(s, *f) * d;
  }
  if (!r.is_zero()) return std::nullopt;
  return BiPoly(std::move(quo));
}

std::string BiPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const QPoly& c = c_[static_cast<std::size_t>(d)];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    std::string term;
    if (d == 0)
      term = c.num_terms() > 1 ? "(" + cs + ")" : cs;
    else {
      std::string tv = d == 1 ? "t" : "t^" + std::to_string(d);
      if (c.is_one())
        term = tv;
      else if (c == QPoly(-1))
        term = "-" + tv;
      else
        term = (c.num_terms() > 1 ? "(" + cs + ")" : cs) + "*" + tv;
    }
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

namespace {

BiPoly primitive_part(const BiPoly& a) {
  if (a.is_zero()) return a;
  return *a.divide(a.content());
}

BiPoly pseudo_remainder(BiPoly r, const BiPoly& d) {
  const BiPoly ld(d.lc());
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int s = r.degree() - d.degree();
    r = ld * r - BiPoly::t_power(s, r.lc()) * d;
  }
  return r;
}

}  // namespace

BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  QPoly cg = poly_gcd(a.content(), b.content());
  BiPoly x = primitive_part(a), y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) {
      x = BiPoly(1);
      break;
    }
    BiPoly r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return x.scaled(cg);
}

QTRational::QTRational(const BiPoly& n, const BiPoly& d) : num_(n), den_(d) {
  if (d.is_zero()) throw InvalidArgument("rational function with zero denominator");
  reduce();
}

void QTRational::reduce() {
  if (num_.is_zero()) {
    den_ = BiPoly(1);
    return;
  }
  if (den_.is_one()) return;
  BiPoly g = bipoly_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = *num_.divide(g);
    den_ = *den_.divide(g);
  }
  int s = den_.q_low();
  if (s != 0) {
    num_ = num_.q_shifted(-s);
    den_ = den_.q_shifted(-s);
  }
  if (sgn(den_.lc().lead()) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

QTRational QTRational::q_shifted(int k) const {
  QTRational r = *this;
  r.num_ = r.num_.q_shifted(k);
  return r;
}

QPoly QTRational::eval_t0() const {
  const QPoly& d0 = den_.coeff(0);
  if (d0.is_zero()) throw PoleAtZero(to_string());
  auto v = num_.coeff(0).divide(d0);
  if (!v) throw NotDivisible("value at t=0 of " + to_string() + " is not a Laurent polynomial in q");
  return *v;
}

QPoly QTRational::limit_t_infinity(int d) const {
  if (!den_.is_one()) throw InvalidArgument("t-limit of a non-polynomial value: " + to_string());
  if (num_.degree() > d) throw NonzeroRemainder("t-degree " + std::to_string(num_.degree()) + " exceeds " + std::to_string(d));
  return num_.coeff(d);
}

QTRational operator+(const QTRational& a, const QTRational& b) {
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) {
      QTRational r;
      r.num_ = a.num_ + b.num_;
      return r;
    }
    return QTRational(a.num_ + b.num_, a.den_);
  }
  return QTRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QTRational operator-(const QTRational& a, const QTRational& b) { return a + (-b); }

QTRational operator-(const QTRational& a) {
  QTRational r = a;
  r.num_ = -r.num_;
  return r;
}

QTRational operator*(const QTRational& a, const QTRational& b) {
  if (a.is_zero() || b.is_zero()) return QTRational();
  if (a.den_.is_one() && b.den_.is_one()) {
    QTRational r;
    r.num_ = a.num_ * b.num_;
    return r;
  }
  return QTRational(a.num_ * b.num_, a.den_ * b.den_);
}

QTRational operator/(const QTRational& a, const QTRational& b) {
  if (b.is_zero()) throw InvalidArgument("division by zero rational function");
  return QTRational(a.num_ * b.den_, a.den_ * b.num_);
}

std::string QTRational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace qchar
