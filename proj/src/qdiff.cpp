#include "qchar/qdiff.hpp"

#include <bit>
#include <vector>

namespace qchar {

namespace {

template <class R>
void add_product(LaurentPoly<R>& acc, const LaurentPoly<R>& a, const LaurentPoly<R>& b) {
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) acc.add_term(ma + mb, ca * cb);
}

std::vector<int> members(unsigned mask, int n, bool inside) {
  std::vector<int> v;
  for (int i = 0; i < n; ++i)
    if (static_cast<bool>(mask >> i & 1U) == inside) v.push_back(i);
  return v;
}

// Vandermonde in the listed variables of an n-variable ring.
template <class R>
LaurentPoly<R> partial_vandermonde(int n, const std::vector<int>& vars) {
  LaurentPoly<R> v = LaurentPoly<R>::constant(n, R(1));
  for (std::size_t a = 0; a < vars.size(); ++a)
    for (std::size_t b = a + 1; b < vars.size(); ++b)
      v *= LaurentPoly<R>::variable(n, vars[a]) - LaurentPoly<R>::variable(n, vars[b]);
  return v;
}

int subset_sign(const std::vector<int>& in, const std::vector<int>& out) {
  int inv = 0;
  for (int i : in)
    for (int j : out)
      if (i > j) ++inv;
  return inv % 2 ? -1 : 1;
}

// sum over |I| = alpha of sgn(I) cross(I) Delta_I Delta_{I^c} shift_I(f), divided by Delta.
template <class R, class Cross, class Shift>
LaurentPoly<R> subset_operator(int alpha, const LaurentPoly<R>& f, Cross&& cross, Shift&& shift) {
  const int n = f.nvars();
  LaurentPoly<R> numer(n);
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) != alpha) continue;
    auto in = members(mask, n, true), out = members(mask, n, false);
    LaurentPoly<R> pre = partial_vandermonde<R>(n, in) * partial_vandermonde<R>(n, out) * cross(in, out);
    if (subset_sign(in, out) < 0) pre = -pre;
    LaurentPoly<R> shifted = f.transform_terms([&](const Monomial& m, const R& c) {
      int s = 0;
      for (int i : in) s += m[i];
      return std::pair<Monomial, R>(m, shift(m, c, s));
    });
    add_product(numer, pre, shifted);
  }
  return divide_by_vandermonde(numer);
}

void check_input(int alpha, int nvars, bool symmetric_ok, bool check, const std::string& who) {
  if (nvars < 2 || nvars > kMaxVars) throw InvalidArgument(who + ": variable count must lie in [2, " + std::to_string(kMaxVars) + "]");
  if (alpha < 0 || alpha > nvars) throw InvalidArgument(who + ": alpha out of range");
  if (check && !symmetric_ok) throw NotSymmetric(who + " needs a symmetric input");
}

template <class R>
LaurentPoly<R> z_power_cross(int n, const std::vector<int>& in, int power) {
  Monomial m;
  for (int i : in) m[i] = power;
  return LaurentPoly<R>::monomial(n, m, R(1));
}

}  // namespace

std::string OperatorSpec::to_string() const {
  const char* fam = family == OperatorFamily::M ? "M" : family == OperatorFamily::D ? "D" : "Mqt";
  return std::string(fam) + "_{" + std::to_string(alpha) + "," + std::to_string(n) + "} (r=" + std::to_string(rank) + ")";
}

int d_prefactor_w(const CartanData& c, int alpha, int n) {
  return -c.lambda(alpha, alpha) * n - 2 * c.row_sum(alpha);
}

QLaurent apply_M(int alpha, int n, const QLaurent& f, bool check_symmetric) {
  const int N = f.nvars();
  check_input(alpha, N, !check_symmetric || f.is_symmetric(), check_symmetric, "apply_M");
  if (alpha == 0) return f;
  if (alpha == N) {
    return f.transform_terms([&](const Monomial& m, const QPoly& c) {
      Monomial e = m;
      for (int i = 0; i < N; ++i) e[i] += n;
      return std::pair<Monomial, QPoly>(e, c.shifted(static_cast<int>(m.degree())));
    });
  }
  return subset_operator(
      alpha, f, [&](const std::vector<int>& in, const std::vector<int>&) { return z_power_cross<QPoly>(N, in, n + N - alpha); },
      [](const Monomial&, const QPoly& c, int s) { return c.shifted(s); });
}

WLaurent apply_D(int alpha, int n, const WLaurent& f, bool check_symmetric) {
  const int N = f.nvars();
  check_input(alpha, N, !check_symmetric || f.is_symmetric(), check_symmetric, "apply_D");
  if (alpha == 0) return f;
  const CartanData cd(N - 1);
  const int pref = d_prefactor_w(cd, alpha, n);
  const int qunit = -2 * N;  // q = w^(-2N)
  auto shift = [&](const Monomial& m, const WPoly& c, int s) {
    return c.shifted(pref + 2 * alpha * static_cast<int>(m.degree()) + qunit * s);
  };
  if (alpha == N) {
    return f.transform_terms([&](const Monomial& m, const WPoly& c) {
      Monomial e = m;
      for (int i = 0; i < N; ++i) e[i] += n;
      return std::pair<Monomial, WPoly>(e, shift(m, c, static_cast<int>(m.degree())));
    });
  }
  return subset_operator(
      alpha, f, [&](const std::vector<int>& in, const std::vector<int>&) { return z_power_cross<WPoly>(N, in, n + N - alpha); },
      shift);
}

QTLaurent apply_macdonald_qt(int alpha, const QTLaurent& f, bool check_symmetric) {
  const int N = f.nvars();
  check_input(alpha, N, !check_symmetric || f.is_symmetric(), check_symmetric, "apply_macdonald_qt");
  if (alpha == 0) return f;
  auto shift = [](const Monomial&, const QTRational& c, int s) { return c.q_shifted(s); };
  if (alpha == N)
    return f.transform_terms([&](const Monomial& m, const QTRational& c) {
      return std::pair<Monomial, QTRational>(m, c.q_shifted(static_cast<int>(m.degree())));
    });
  const QTRational t = QTRational::t();
  return subset_operator(
      alpha, f,
      [&](const std::vector<int>& in, const std::vector<int>& out) {
        QTLaurent p = QTLaurent::constant(N, QTRational(1));
        for (int i : in)
          for (int j : out) p *= t * QTLaurent::variable(N, i) - QTLaurent::variable(N, j);
        return p;
      },
      shift);
}

QLaurent macdonald_t_limit(int alpha, const QLaurent& f) {
  const int N = f.nvars();
  QTLaurent g = apply_macdonald_qt(alpha, f.map_coeffs<QTRational>([](const QPoly& c) { return QTRational(c); }));
  const int d = alpha * (N - alpha);
  return g.map_coeffs<QPoly>([&](const QTRational& c) { return c.limit_t_infinity(d); });
}

QLaurent apply(const OperatorSpec& op, const QLaurent& f) {
  switch (op.family) {
    case OperatorFamily::M:
      return apply_M(op.alpha, op.n, f);
    case OperatorFamily::MacdonaldQT:
      return macdonald_t_limit(op.alpha, f);
    case OperatorFamily::D:
      break;
  }
  throw InvalidArgument("D operators act on w-coefficient polynomials");
}

WLaurent apply(const OperatorSpec& op, const WLaurent& f) {
  if (op.family != OperatorFamily::D) throw InvalidArgument("only D operators act on w-coefficient polynomials");
  return apply_D(op.alpha, op.n, f);
}

}  // namespace qchar
