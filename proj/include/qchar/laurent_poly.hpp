#pragma once

// Sparse multivariate Laurent polynomials in z1..zN over a coefficient ring R.
//
// R must provide + - * ==, construction from long, and the free functions
// is_zero, to_string, is_atomic and try_divide (see scalar.hpp / rational.hpp).

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qchar/errors.hpp"
#include "qchar/rational.hpp"
#include "qchar/scalar.hpp"

namespace qchar {

inline constexpr int kMaxVars = 8;

struct Monomial {
  std::array<int32_t, kMaxVars> e{};

  int32_t& operator[](int i) { return e[static_cast<std::size_t>(i)]; }
  int32_t operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
  auto operator<=>(const Monomial&) const = default;

  friend Monomial operator+(Monomial a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i) a[i] += b[i];
    return a;
  }
  friend Monomial operator-(Monomial a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i) a[i] -= b[i];
    return a;
  }
  int64_t degree() const {
    int64_t s = 0;
    for (auto x : e) s += x;
    return s;
  }
  static Monomial unit(int i, int32_t power = 1) {
    Monomial m;
    m[i] = power;
    return m;
  }
  static Monomial from(const std::vector<int>& v) {
    if (v.size() > static_cast<std::size_t>(kMaxVars)) throw InvalidArgument("too many variables");
    Monomial m;
    for (std::size_t i = 0; i < v.size(); ++i) m.e[i] = v[i];
    return m;
  }
};

// Integer division of a coefficient; nullopt when inexact.
inline std::optional<BigInt> divide_integer(const BigInt& a, const BigInt& d) { return try_divide(a, d); }
template <class Var>
std::optional<UniLaurent<Var>> divide_integer(const UniLaurent<Var>& a, const BigInt& d) {
  return a.divide_integer(d);
}
template <class Var>
std::optional<RationalFunction<Var>> divide_integer(const RationalFunction<Var>& a, const BigInt& d) {
  return a / RationalFunction<Var>(UniLaurent<Var>(d));
}
inline std::optional<QTRational> divide_integer(const QTRational& a, const BigInt& d) {
  return a / QTRational(d);
}

template <class R>
class LaurentPoly {
 public:
  using Coeff = R;
  using Map = std::map<Monomial, R>;

  LaurentPoly() = default;
  explicit LaurentPoly(int nvars) : n_(nvars) {
    if (nvars < 0 || nvars > kMaxVars) throw InvalidArgument("variable count out of range");
  }

  static LaurentPoly constant(int nvars, const R& c) { return monomial(nvars, Monomial{}, c); }
  static LaurentPoly monomial(int nvars, const Monomial& m, const R& c) {
    LaurentPoly p(nvars);
    p.add_term(m, c);
    return p;
  }
  static LaurentPoly variable(int nvars, int i, int power = 1) {
    return monomial(nvars, Monomial::unit(i, power), R(1));
  }

  int nvars() const { return n_; }
  const Map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  R coeff(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? R(0) : it->second;
  }

  void add_term(const Monomial& m, const R& c) {
    if (qchar::is_zero(c)) return;
    auto [it, fresh] = t_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (qchar::is_zero(it->second)) t_.erase(it);
    }
  }
  void sub_term(const Monomial& m, const R& c) {
    if (qchar::is_zero(c)) return;
    auto [it, fresh] = t_.try_emplace(m, -c);
    if (!fresh) {
      it->second -= c;
      if (qchar::is_zero(it->second)) t_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    join_vars(o);
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    join_vars(o);
    for (const auto& [m, c] : o.t_) sub_term(m, c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) {
    for (auto& [m, c] : a.t_) c = -c;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r(std::max(a.n_, b.n_));
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) r.add_term(ma + mb, ca * cb);
    return r;
  }
  friend LaurentPoly operator*(const R& s, const LaurentPoly& a) {
    LaurentPoly r(a.n_);
    if (qchar::is_zero(s)) return r;
    for (const auto& [m, c] : a.t_) r.add_term(m, s * c);
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly pow(int k) const {
    if (k < 0) throw InvalidArgument("negative power of a polynomial");
    LaurentPoly r = constant(n_, R(1));
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
  }

  // Exact equality; the variable count is part of the value only through the
  // support, so polynomials over different N compare by their terms.
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // Rewrites every term through fn(monomial, coefficient) -> (monomial, coefficient).
  template <class Fn>
  LaurentPoly transform_terms(Fn&& fn, int nvars = -1) const {
    LaurentPoly r(nvars < 0 ? n_ : nvars);
    for (const auto& [m, c] : t_) {
      auto [m2, c2] = fn(m, c);
      r.add_term(m2, c2);
    }
    return r;
  }

  template <class S, class Fn>
  LaurentPoly<S> map_coeffs(Fn&& fn) const {
    LaurentPoly<S> r(n_);
    for (const auto& [m, c] : t_) r.add_term(m, fn(c));
    return r;
  }

  // New variable i is old variable perm[i].
  LaurentPoly permute_vars(const std::vector<int>& perm) const {
    return transform_terms([&](const Monomial& m, const R& c) {
      Monomial p;
      for (int i = 0; i < n_; ++i) p[i] = m[perm[static_cast<std::size_t>(i)]];
      return std::pair<Monomial, R>(p, c);
    });
  }

  LaurentPoly swap_vars(int i, int j) const {
    std::vector<int> perm(static_cast<std::size_t>(n_));
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    return permute_vars(perm);
  }

  // Adjacent transpositions generate the symmetric group.
  bool is_symmetric() const {
    for (int i = 0; i + 1 < n_; ++i)
      if (swap_vars(i, i + 1) != *this) return false;
    return true;
  }

  bool is_polynomial() const {
    for (const auto& [m, c] : t_)
      for (int i = 0; i < n_; ++i)
        if (m[i] < 0) return false;
    return true;
  }

  // Lowest / highest exponent of variable i over the support.
  std::pair<int, int> exponent_range(int i) const {
    if (t_.empty()) return {0, 0};
    int lo = t_.begin()->first[i], hi = lo;
    for (const auto& [m, c] : t_) {
      lo = std::min(lo, static_cast<int>(m[i]));
      hi = std::max(hi, static_cast<int>(m[i]));
    }
    return {lo, hi};
  }

  const std::pair<const Monomial, R>& leading() const { return *t_.rbegin(); }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      const auto& [m, c] = *it;
      std::string mono;
      for (int i = 0; i < n_; ++i) {
        if (m[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "z" + std::to_string(i + 1);
        if (m[i] != 1) mono += "^" + std::to_string(m[i]);
      }
      std::string cs = qchar::to_string(c);
      bool neg = false;
      std::string term;
      if (qchar::is_atomic(c)) {
        if (cs[0] == '-') {
          neg = true;
          cs = cs.substr(1);
        }
        if (mono.empty())
          term = cs;
        else
          term = (cs == "1") ? mono : cs + "*" + mono;
      } else {
        term = "(" + cs + ")";
        if (!mono.empty()) term += "*" + mono;
      }
      if (out.empty())
        out = (neg ? "-" : "") + term;
      else
        out += (neg ? " - " : " + ") + term;
    }
    return out;
  }

 private:
  void join_vars(const LaurentPoly& o) { n_ = std::max(n_, o.n_); }

  int n_ = 0;
  Map t_;
};

using ZPoly = LaurentPoly<BigInt>;
using QLaurent = LaurentPoly<QPoly>;
using WLaurent = LaurentPoly<WPoly>;
using QTLaurent = LaurentPoly<QTRational>;

// Division by z_i - z_j along lines of constant e_i + e_j. Throws NotDivisible.
template <class R>
LaurentPoly<R> divide_by_difference(const LaurentPoly<R>& f, int i, int j) {
  if (i == j) throw InvalidArgument("divide_by_difference needs distinct variables");
  // Group terms by the monomial with e_i + e_j folded into slot i and slot j zeroed.
  std::map<Monomial, std::vector<std::pair<int, const R*>>> lines;
  for (const auto& [m, c] : f.terms()) {
    Monomial key = m;
    key[i] = m[i] + m[j];
    key[j] = 0;
    lines[key].emplace_back(m[i], &c);
  }
  LaurentPoly<R> h(f.nvars());
  for (auto& [key, pts] : lines) {
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    const int s = key[i];
    R acc(0);
    int cur = pts.front().first;
    std::size_t k = 0;
    // h_{m-1} = sum of p_{m'} for m' >= m; the quotient may be dense along the line.
    while (true) {
      if (k < pts.size() && pts[k].first == cur) {
        acc += *pts[k].second;
        ++k;
      }
      if (k == pts.size()) break;
      if (!qchar::is_zero(acc)) {
        Monomial mm = key;
        mm[i] = cur - 1;
        mm[j] = s - cur;
        h.add_term(mm, acc);
      }
      --cur;
    }
    if (!qchar::is_zero(acc))
      throw NotDivisible("polynomial is not divisible by z" + std::to_string(i + 1) + " - z" + std::to_string(j + 1));
  }
  return h;
}

// Product over i<j of (z_i - z_j).
template <class R = BigInt>
LaurentPoly<R> vandermonde(int n) {
  if (n < 1) throw InvalidArgument("vandermonde needs N >= 1");
  LaurentPoly<R> v = LaurentPoly<R>::constant(n, R(1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) v *= LaurentPoly<R>::variable(n, i) - LaurentPoly<R>::variable(n, j);
  return v;
}

// f / prod_{i<j} (z_i - z_j) over the first n variables (default: all).
template <class R>
LaurentPoly<R> divide_by_vandermonde(const LaurentPoly<R>& f, int n = -1) {
  if (n < 0) n = f.nvars();
  LaurentPoly<R> h = f;
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j > i; --j) h = divide_by_difference(h, i, j);
  return h;
}

// Exact division by greedy leading-term reduction under lex order. Leading
// terms multiply in a Laurent ring over an integral domain, so the quotient
// is found whenever it exists; each quotient exponent is confined to the box
// forced by the supports, which bounds the work when it does not exist.
template <class R>
LaurentPoly<R> exact_div(const LaurentPoly<R>& f, const LaurentPoly<R>& g) {
  if (g.is_zero()) throw InvalidArgument("exact_div by zero");
  const int n = std::max(f.nvars(), g.nvars());
  LaurentPoly<R> h(n), r = f;
  if (f.is_zero()) return h;
  std::vector<std::pair<int, int>> box;
  for (int i = 0; i < n; ++i) {
    auto [flo, fhi] = f.exponent_range(i);
    auto [glo, ghi] = g.exponent_range(i);
    box.emplace_back(flo - glo, fhi - ghi);
  }
  const auto& [gm, gc] = g.leading();
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.leading();
    Monomial qm = rm - gm;
    for (int i = 0; i < n; ++i)
      if (qm[i] < box[static_cast<std::size_t>(i)].first || qm[i] > box[static_cast<std::size_t>(i)].second)
        throw NotDivisible("remainder left after reduction");
    auto qc = try_divide(rc, gc);
    if (!qc) throw NotDivisible("leading coefficient " + qchar::to_string(rc) + " by " + qchar::to_string(gc));
    R c = *qc;
    h.add_term(qm, c);
    for (const auto& [m, x] : g.terms()) r.sub_term(m + qm, c * x);
  }
  return h;
}

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Sum over all permutations of the n variables, weighted by the sign when
// signed is set. This is N! times the normalized (anti)symmetrization.
template <class R>
LaurentPoly<R> permutation_sum(const LaurentPoly<R>& f, bool signed_sum) {
  const int n = f.nvars();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly<R> out(n);
  do {
    int inv = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inv;
    LaurentPoly<R> p = f.permute_vars(perm);
    if (signed_sum && (inv % 2))
      out -= p;
    else
      out += p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

template <class R>
LaurentPoly<R> divide_coeffs(const LaurentPoly<R>& f, const BigInt& d) {
  LaurentPoly<R> out(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    auto q = divide_integer(c, d);
    if (!q) throw NotDivisible("coefficient " + qchar::to_string(c) + " by " + d.get_str());
    out.add_term(m, *q);
  }
  return out;
}

template <class R>
LaurentPoly<R> antisymmetrize_cleared(const LaurentPoly<R>& f) {
  return permutation_sum(f, true);
}
template <class R>
LaurentPoly<R> symmetrize_cleared(const LaurentPoly<R>& f) {
  return permutation_sum(f, false);
}
template <class R>
LaurentPoly<R> antisymmetrize(const LaurentPoly<R>& f) {
  return divide_coeffs(permutation_sum(f, true), factorial(f.nvars()));
}
template <class R>
LaurentPoly<R> symmetrize(const LaurentPoly<R>& f) {
  return divide_coeffs(permutation_sum(f, false), factorial(f.nvars()));
}

// z_N := (z_1 ... z_{N-1})^-1 with N = r + 1; the result has r variables.
template <class R>
LaurentPoly<R> constrain(const LaurentPoly<R>& f, int rank) {
  if (f.nvars() != rank + 1) throw InvalidArgument("constrain expects r+1 variables");
  return f.transform_terms(
      [&](const Monomial& m, const R& c) {
        Monomial p;
        for (int i = 0; i < rank; ++i) p[i] = m[i] - m[rank];
        return std::pair<Monomial, R>(p, c);
      },
      rank);
}

inline QLaurent w_to_q(const WLaurent& f, int rank) {
  return f.map_coeffs<QPoly>([&](const WPoly& c) { return w_to_q(c, rank); });
}
inline WLaurent q_to_w(const QLaurent& f, int rank) {
  return f.map_coeffs<WPoly>([&](const QPoly& c) { return q_to_w(c, rank); });
}

// z -> v z, i.e. each term picks up w^(2 * total degree).
inline WLaurent dilate(const WLaurent& f, int times = 1) {
  return f.transform_terms([&](const Monomial& m, const WPoly& c) {
    return std::pair<Monomial, WPoly>(m, c.shifted(static_cast<int>(2 * times * m.degree())));
  });
}

template <class R>
LaurentPoly<R> lift_integer(const ZPoly& f) {
  return f.map_coeffs<R>([](const BigInt& c) { return R(c); });
}

}  // namespace qchar
