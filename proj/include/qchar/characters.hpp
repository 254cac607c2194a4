#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "qchar/cartan.hpp"
#include "qchar/laurent_poly.hpp"
#include "qchar/symfun.hpp"

namespace qchar {

// Occupation numbers n_i^(a), a in [1, r], i in [1, k].
class NVector {
 public:
  NVector() = default;
  // by_level[i-1][a-1] = n_i^(a)
  NVector(int rank, int level, std::vector<std::vector<int>> by_level);
  static NVector zero(int rank, int level);
  static NVector level_one(int rank, const std::vector<int>& n);
  // "1,0;0,1": levels separated by ';', entries a = 1..r separated by ','.
  // An empty level count infers the level from the text.
  static NVector parse(const std::string& text, int rank, int level = 0);

  int rank() const { return r_; }
  int level() const { return k_; }
  int at(int alpha, int i) const;
  // Entry with out-of-range indices treated as the zero boundary.
  int get(int alpha, int i) const;
  int sigma() const;
  bool is_valid() const;

  // n + delta * eps_{alpha,i}; alpha = 0 or r + 1 leaves n unchanged.
  NVector shifted(int alpha, int i, int delta) const;

  const std::vector<std::vector<int>>& by_level() const { return n_; }
  // n[a-1][i-1]
  std::vector<std::vector<int>> by_alpha() const;

  std::string to_string() const;
  auto operator<=>(const NVector&) const = default;

 private:
  int r_ = 1;
  int k_ = 1;
  std::vector<std::vector<int>> n_;
};

enum class CharacterPath { M, D };

struct GradedCharacter {
  NVector n;
  QLaurent chi;  // unconstrained, r+1 variables
  SchurExpansion<QPoly> expansion;
  CharacterPath provenance = CharacterPath::M;
};

// q-exponent of the prefactor in the M-operator formula; always <= 0.
int m_path_q_exponent(const NVector& n);
// w-exponent relating chi and G: chi = w^e G (constrained).
int chi_to_g_w_exponent(const NVector& n);

// Memoized operator products on 1. Each product reuses the product for n
// with its last-applied factor removed. Not safe for concurrent use; the
// free functions below each use a thread-local engine.
class CharacterEngine {
 public:
  // prod_k ... prod_1 M factors applied to 1, without the scalar prefactor
  const QLaurent& raw_m(const NVector& n);
  // prod_k ... prod_1 D factors applied to 1, unconstrained
  const WLaurent& raw_d(const NVector& n);

  QLaurent character(const NVector& n);
  // Raw M product with the factors of each level applied in the given
  // order of alpha values (used for the order-independence property).
  QLaurent character_with_order(const NVector& n, const std::vector<int>& alpha_order);
  WLaurent g_coefficient(const NVector& n);

  void clear();

 private:
  std::map<NVector, QLaurent> m_memo_;
  std::map<NVector, WLaurent> d_memo_;
};

CharacterEngine& thread_engine();

GradedCharacter graded_character(const NVector& n);
QLaurent character_polynomial(const NVector& n);
// G for the D-operator product, constrained to z_{r+1} = (z_1...z_r)^-1.
WLaurent g_coefficient(const NVector& n);
// Schur coefficients keyed by partitions with full columns removed.
SchurExpansion<QPoly> multiplicities(const NVector& n);
Partition top_component(const NVector& n);

// prod_{a,i} s_{(i^a)}^{n_i^(a)}: the character at q = 1.
ZPoly ungraded_character(const NVector& n);
// Substitutes q = 1.
ZPoly at_q_one(const QLaurent& f);

}  // namespace qchar

namespace qchar {

// All n with rank * level nonnegative entries summing to at most sigma_max,
// ordered by sigma and then lexicographically.
std::vector<NVector> nvectors_up_to(int rank, int level, int sigma_max);

}  // namespace qchar
