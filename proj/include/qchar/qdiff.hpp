#pragma once

// q-difference operators on symmetric Laurent polynomials in z1..z_{r+1}.
//
// For a subset I of [1, N], N = r + 1:
//   z_I    = prod_{i in I} z_i
//   a_I    = prod_{i in I, j not in I} z_i / (z_i - z_j)
//   Gamma_I: z_i -> q z_i for i in I
//   D_I    = prod_{i in I} D_i, where D_i dilates every variable by v and z_i by q
//
//   M_{a,n}     = sum_{|I|=a} z_I^n a_I Gamma_I
//   D_{a,n}     = v^(-lambda_aa n / 2 - sum_b lambda_ab) sum_{|I|=a} z_I^n a_I D_I
//   M_a^{q,t}   = sum_{|I|=a} prod_{i in I, j not in I} (t z_i - z_j)/(z_i - z_j) Gamma_I
//
// Each sum is cleared by the Vandermonde determinant Delta:
//   Delta a_I = sgn(I) z_I^(N-a) Delta_I Delta_{I^c}
// where sgn(I) = (-1)^#{i in I, j in I^c : i > j}. The cleared numerator is
// summed over I and divided exactly by Delta.

#include <string>

#include "qchar/cartan.hpp"
#include "qchar/laurent_poly.hpp"

namespace qchar {

enum class OperatorFamily { M, D, MacdonaldQT };

struct OperatorSpec {
  OperatorFamily family = OperatorFamily::M;
  int alpha = 1;
  int n = 0;
  int rank = 1;

  std::string to_string() const;
};

// Symmetry of the input is checked unless check_symmetric is false; the
// character engine passes false since its inputs are symmetric by construction.
QLaurent apply_M(int alpha, int n, const QLaurent& f, bool check_symmetric = true);
WLaurent apply_D(int alpha, int n, const WLaurent& f, bool check_symmetric = true);
QTLaurent apply_macdonald_qt(int alpha, const QTLaurent& f, bool check_symmetric = true);

// lim_{t -> inf} t^(-a(N-a)) M_a^{q,t} f for f with t-free coefficients.
QLaurent macdonald_t_limit(int alpha, const QLaurent& f);

QLaurent apply(const OperatorSpec& op, const QLaurent& f);
WLaurent apply(const OperatorSpec& op, const WLaurent& f);

// Exponent of w in the scalar prefactor of D_{a,n}.
int d_prefactor_w(const CartanData& c, int alpha, int n);

}  // namespace qchar
