#include "qchar/whittaker.hpp"

#include <algorithm>

namespace qchar {

namespace {

PRational p_pow(int e) { return PRational::var_power(e); }

// Folds p^(h/2) with |h| = 2 into the coefficients.
TruncatedSeries normalize_half(TruncatedSeries s) {
  if (s.half() == 2 || s.half() == -2) {
    TruncatedSeries out(s.order(), 0);
    for (int j = 0; j <= s.order(); ++j) out.set_coeff(j, p_pow(s.half() / 2) * s.coeff(j));
    return out;
  }
  return s;
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order, int half) : order_(order), half_(half), c_(static_cast<std::size_t>(order + 1)) {
  if (order < 0) throw InvalidArgument("series order must be nonnegative");
}

TruncatedSeries TruncatedSeries::constant(int order, const PRational& c, int half) {
  TruncatedSeries s(order, half);
  s.c_[0] = c;
  return s;
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const PRational& x) { return x.is_zero(); });
}

std::optional<int> TruncatedSeries::valuation() const {
  for (int j = 0; j <= order_; ++j)
    if (!coeff(j).is_zero()) return j;
  return std::nullopt;
}

std::optional<int> TruncatedSeries::degree() const {
  for (int j = order_; j >= 0; --j)
    if (!coeff(j).is_zero()) return j;
  return std::nullopt;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (c_[0].is_zero()) throw InvalidArgument("series with zero constant term is not invertible");
  TruncatedSeries out(order_, -half_);
  const PRational inv0 = PRational(1) / c_[0];
  out.c_[0] = inv0;
  for (int j = 1; j <= order_; ++j) {
    PRational s;
    for (int i = 1; i <= j; ++i)
      if (!c_[static_cast<std::size_t>(i)].is_zero()) s += c_[static_cast<std::size_t>(i)] * out.c_[static_cast<std::size_t>(j - i)];
    out.c_[static_cast<std::size_t>(j)] = -(s * inv0);
  }
  return out;
}

TruncatedSeries TruncatedSeries::p_inverted() const {
  TruncatedSeries out(order_, -half_);
  for (int j = 0; j <= order_; ++j) out.c_[static_cast<std::size_t>(j)] = c_[static_cast<std::size_t>(j)].inverted_var();
  return out;
}

TruncatedSeries TruncatedSeries::u_shifted(int k) const {
  TruncatedSeries out(order_, half_);
  for (int j = 0; j + k <= order_; ++j)
    if (j + k >= 0) out.c_[static_cast<std::size_t>(j + k)] = c_[static_cast<std::size_t>(j)];
  return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.half_ != b.half_) throw InvalidArgument("adding series with different half-integer p prefactors");
  TruncatedSeries out(std::min(a.order_, b.order_), a.half_);
  for (int j = 0; j <= out.order_; ++j) out.c_[static_cast<std::size_t>(j)] = a.coeff(j) + b.coeff(j);
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a + PRational(-1) * b;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order_, b.order_), a.half_ + b.half_);
  for (int i = 0; i <= out.order_; ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; i + j <= out.order_; ++j)
      if (!b.coeff(j).is_zero()) out.c_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
  }
  return normalize_half(out);
}

TruncatedSeries operator*(const PRational& s, const TruncatedSeries& a) {
  TruncatedSeries out = a;
  for (auto& c : out.c_) c = s * c;
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.order_ == b.order_ && a.half_ == b.half_ && a.c_ == b.c_;
}

std::string TruncatedSeries::to_string() const {
  std::string out;
  if (half_) out = "p^(" + std::to_string(half_) + "/2)*(";
  bool any = false;
  for (int j = 0; j <= order_; ++j) {
    if (coeff(j).is_zero()) continue;
    if (any) out += " + ";
    any = true;
    out += "(" + coeff(j).to_string() + ")";
    if (j) out += "*u^" + std::to_string(j);
  }
  if (!any) out += "0";
  out += " + O(u^" + std::to_string(order_ + 1) + ")";
  if (half_) out += ")";
  return out;
}

TruncatedSeries w_series(int n, bool reflected, int order) {
  if (n < 0) throw InvalidArgument("w_series needs n >= 0");
  TruncatedSeries sum(order, 0), prod = TruncatedSeries::constant(order, PRational(1));
  sum = sum + prod;
  for (int a = 1; a * (n + 1) <= order; ++a) {
    // (1 - u^a)(1 - p^2 u^a)
    TruncatedSeries g = TruncatedSeries::constant(order, PRational(1));
    if (a <= order) g.set_coeff(a, PRational(-1) - p_pow(2));
    if (2 * a <= order) g.set_coeff(2 * a, p_pow(2));
    prod = prod * g.inverse();
    sum = sum + prod.u_shifted(a * (n + 1));
  }
  TruncatedSeries out = p_pow(n) * sum;
  out = TruncatedSeries::constant(order, PRational(1), -1) * out;
  return reflected ? out.p_inverted() : out;
}

TruncatedSeries toda_residual(const TruncatedSeries& w_prev, const TruncatedSeries& w_cur, const TruncatedSeries& w_next, int n) {
  TruncatedSeries res = w_next - (p_pow(1) + p_pow(-1)) * w_cur;
  return res + (n == 0 ? w_prev : w_prev - w_prev.u_shifted(n));
}

TruncatedSeries w_boundary_term(bool reflected, int order) {
  TruncatedSeries prod = TruncatedSeries::constant(order, PRational(1));
  for (int a = 1; a <= order; ++a) {
    TruncatedSeries g = TruncatedSeries::constant(order, PRational(1));
    g.set_coeff(a, PRational(-1) - p_pow(2));
    if (2 * a <= order) g.set_coeff(2 * a, p_pow(2));
    prod = prod * g;
  }
  TruncatedSeries out = TruncatedSeries::constant(order, p_pow(-1), -1) * prod.inverse();
  return reflected ? out.p_inverted() : out;
}

bool check_toda_eigen(int n_min, int n_max, int order) {
  for (bool refl : {false, true}) {
    std::vector<TruncatedSeries> w;
    const int lo = std::max(0, n_min - 1);
    for (int n = lo; n <= n_max + 1; ++n) w.push_back(w_series(n, refl, order));
    auto at = [&](int n) -> const TruncatedSeries& { return w[static_cast<std::size_t>(n - lo)]; };
    for (int n = std::max(0, n_min); n <= n_max; ++n)
      if (!toda_residual(n > 0 ? at(n - 1) : w_boundary_term(refl, order), at(n), at(n + 1), n).is_zero()) return false;
  }
  return true;
}

TruncatedSeries class_one_coefficient(bool reflected, int order) {
  TruncatedSeries prod = TruncatedSeries::constant(order, PRational(1));
  for (int i = 1; i <= order; ++i) {
    TruncatedSeries f = TruncatedSeries::constant(order, PRational(1));
    f.set_coeff(i, -p_pow(-2));
    prod = prod * f;
  }
  const PRational lead = PRational(1) / (PRational(1) - p_pow(-2));
  TruncatedSeries out = TruncatedSeries::constant(order, lead, 1) * prod.inverse();
  return reflected ? out.p_inverted() : out;
}

TruncatedSeries class_one_series(int n, int order) {
  return class_one_coefficient(false, order) * w_series(n, false, order) + class_one_coefficient(true, order) * w_series(n, true, order);
}

TruncatedSeries character_series(int n, int order) {
  TruncatedSeries out(order, 0);
  const QLaurent chi = character_polynomial(NVector::level_one(1, {n}));
  for (const auto& [m, c] : chi.terms())
    for (const auto& [e, x] : c.terms()) {
      if (e > 0) throw IdentityViolation("positive power of q in a character");
      if (-e > order) continue;
      out.set_coeff(-e, out.coeff(-e) + PRational(PPoly::monomial(x, m[0] - m[1])));
    }
  return out;
}

bool class_one_combination(int n_min, int n_max, int order) {
  for (int n = std::max(0, n_min); n <= n_max; ++n)
    if (!(class_one_series(n, order) == character_series(n, order))) return false;
  return true;
}

std::optional<NVector> level1_toda_failure(int rank, int sigma_max) {
  const QLaurent e1 = lift_integer<QPoly>(elementary(1, rank + 1));
  for (const auto& n : nvectors_up_to(rank, 1, sigma_max)) {
    QLaurent lhs = character_polynomial(n.shifted(1, 1, 1));
    for (int a = 1; a <= rank; ++a) {
      const int na = n.at(a, 1);
      if (na == 0) continue;
      lhs += (QPoly(1) - QPoly::var_power(-na)) * character_polynomial(n.shifted(a, 1, -1).shifted(a + 1, 1, 1));
    }
    if (constrain(lhs, rank) != constrain(e1 * character_polynomial(n), rank)) return n;
  }
  return std::nullopt;
}

bool check_level1_toda(int rank, int sigma_max) { return !level1_toda_failure(rank, sigma_max).has_value(); }

}  // namespace qchar
