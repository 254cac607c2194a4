#pragma once

// (q,t)-Macdonald polynomials P_lambda as the eigenvectors of M_1^{q,t}
// that are unitriangular on the monomial basis, and their t = 0 limit.

#include "qchar/characters.hpp"
#include "qchar/laurent_poly.hpp"
#include "qchar/symfun.hpp"

namespace qchar {

struct MacdonaldPoly {
  Partition lambda;
  int nvars = 0;
  // coefficient of m_mu, mu dominated by lambda; the entry for lambda is 1
  SchurExpansion<QTRational> monomial_coeffs;
  QTLaurent poly;
};

// sum_i q^{lambda_i} t^{N-i}
QTRational macdonald_eigenvalue(const Partition& lambda, int nvars);

// Throws DegenerateEigenvalue, and IdentityViolation if the result fails the
// eigen-relation.
MacdonaldPoly macdonald_poly(const Partition& lambda, int nvars);

// t = 0, then q -> 1/q. Throws PoleAtZero.
QLaurent qwhittaker_specialize(const MacdonaldPoly& p);

// Level-one occupation numbers n^a = lambda_a - lambda_{a+1}.
NVector level_one_from_partition(const Partition& lambda, int rank);

}  // namespace qchar
