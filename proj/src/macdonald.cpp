#include "qchar/macdonald.hpp"

#include "qchar/qdiff.hpp"

namespace qchar {

namespace {

Monomial exponent_of(const Partition& mu) {
  Monomial m;
  for (int i = 0; i < mu.length(); ++i) m[i] = mu.part(i);
  return m;
}

}  // namespace

QTRational macdonald_eigenvalue(const Partition& lambda, int nvars) {
  BiPoly e;
  for (int i = 1; i <= nvars; ++i) e = e + BiPoly(QPoly::var_power(lambda.part(i - 1))) * BiPoly::t_power(nvars - i);
  return QTRational(e);
}

MacdonaldPoly macdonald_poly(const Partition& lambda, int nvars) {
  if (lambda.length() > nvars) throw InvalidArgument("partition " + lambda.to_string() + " has more than " + std::to_string(nvars) + " parts");
  const auto basis = dominated_partitions(lambda, nvars);
  const QTRational E = macdonald_eigenvalue(lambda, nvars);

  // column mu of the operator matrix: M_1^{q,t} m_mu = sum_nu a_{nu mu} m_nu
  std::vector<QTLaurent> images;
  for (const auto& mu : basis) images.push_back(apply_macdonald_qt(1, lift_integer<QTRational>(monomial_symmetric(mu, nvars)), false));

  MacdonaldPoly out;
  out.lambda = lambda;
  out.nvars = nvars;
  std::vector<QTRational> c(basis.size());
  c[0] = QTRational(1);
  for (std::size_t j = 1; j < basis.size(); ++j) {
    const Monomial target = exponent_of(basis[j]);
    QTRational diag = images[j].coeff(target) - E;
    if (diag.is_zero())
      throw DegenerateEigenvalue(basis[j].to_string() + " and " + lambda.to_string() + " share an eigenvalue");
    QTRational s;
    for (std::size_t i = 0; i < j; ++i)
      if (!c[i].is_zero()) s += c[i] * images[i].coeff(target);
    c[j] = -s / diag;
  }
  out.poly = QTLaurent(nvars);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (c[j].is_zero()) continue;
    out.monomial_coeffs.emplace(basis[j], c[j]);
    out.poly += c[j] * lift_integer<QTRational>(monomial_symmetric(basis[j], nvars));
  }
  if (apply_macdonald_qt(1, out.poly, false) != E * out.poly)
    throw IdentityViolation("eigen-relation fails for P_" + lambda.to_string());
  return out;
}

QLaurent qwhittaker_specialize(const MacdonaldPoly& p) {
  return p.poly.map_coeffs<QPoly>([](const QTRational& c) { return c.eval_t0().inverted(); });
}

NVector level_one_from_partition(const Partition& lambda, int rank) {
  if (lambda.length() > rank + 1) throw InvalidArgument("partition too long for rank " + std::to_string(rank));
  std::vector<int> n;
  for (int a = 1; a <= rank; ++a) n.push_back(lambda.part(a - 1) - lambda.part(a));
  return NVector::level_one(rank, n);
}

}  // namespace qchar
