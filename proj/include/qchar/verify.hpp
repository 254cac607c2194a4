#pragma once

// Exact checks of the identities satisfied by characters, G-functions,
// difference operators, the quantum torus and the Whittaker series.
//
// Every check returns a CheckReport; a report passes when it has at least
// one grid point and no failures. The perturb argument shifts one exponent
// (or swaps one symbol) to make a negative control; 0 means the true identity.

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qchar/characters.hpp"
#include "qchar/qdiff.hpp"

namespace qchar {

struct CheckReport {
  std::string name;
  nlohmann::ordered_json grid = nlohmann::ordered_json::object();
  std::vector<std::pair<std::string, bool>> results;
  std::size_t failures = 0;
  std::optional<std::string> counterexample;
  double seconds = 0;

  std::size_t points() const { return results.size(); }
  bool passed() const { return !results.empty() && failures == 0; }
  void record(const std::string& point, bool ok, const std::function<std::string()>& detail = {});
  nlohmann::ordered_json to_json(bool with_points = false) const;
};

// Times a check body and stores the elapsed seconds.
CheckReport timed(const std::string& name, const std::function<void(CheckReport&)>& body);

// Level k >= 2: the general difference equation on all n with |n| <= sigma_max
// and n_k, n_{k-1} >= 1 in every alpha. Level 1: the level-one form on all n.
CheckReport check_difference_equation(int rank, int level, int sigma_max, int perturb = 0);

// The two sl3 level-2 G relations for level-1 entries (n1, p1) and level-2
// entries (n2, p2) in [1, max_entry], plus e2 G_{1,0} = e1 G_{0,1}.
// perturb != 0 puts e1 in place of e2 in the second relation.
CheckReport check_sl3_level2_G(int max_entry, int perturb = 0);

// Commutation (within |p-n| <= |b-a|+1) and Q-system relations of the M or D
// operators on m_mu, |mu| <= degree_bound, with n, p in [n_lo, n_hi].
CheckReport check_dual_qsystem(int rank, OperatorFamily family, int n_lo, int n_hi, int degree_bound, int perturb = 0);

// M_{a,0} chi_n = q^{sum_b Min(a,b) n^b} chi_n for level-one n, |n| <= sigma_max.
CheckReport check_eigen(int rank, int sigma_max, int perturb = 0);

// Vanishing sums over set partitions, each cleared by the Vandermonde and by
// prod_{i != j} (z_i - q z_j). size_bound bounds b in the first lemma and a in the second.
CheckReport check_lemma_exchange(int size_bound, int perturb = 0);
CheckReport check_lemma_hook(int size_bound, int perturb = 0);
// sum_{|I|=a} z_I^p a_I = [p = 0] for -(N-a) <= p <= 0, all a in [1, r], r <= max_rank.
CheckReport check_lemma_vanishing(int max_rank, int perturb = 0);
// D_{a,-p} 1 = 0 for p in [1, N-a] and D_{a,0} 1 = v^{-sum_b lambda_ab}.
CheckReport check_d_on_one(int max_rank);

// Left side of the exchange lemma for I of size a, J of size b, after clearing.
QLaurent exchange_lemma_cleared(int a, int b, int p);

// q-exponents, top component, q = 1 factorization, factor-order independence
// and agreement of the M and D paths, on all n with |n| <= sigma_max.
CheckReport check_limits(int rank, int level, int sigma_max);

CheckReport check_torus_recursion(int rank, int k_min, int k_max);
CheckReport check_torus_commutation(int rank, int k_min, int k_max);
CheckReport check_torus_polynomiality(int rank, int k_max, int word_length);
CheckReport check_torus_equivev(int rank, int samples, unsigned seed);

CheckReport check_macdonald(int max_size, int max_vars);

CheckReport check_whittaker_toda(int n_max, int order);
CheckReport check_class_one(int n_max, int order);

struct SuiteOptions {
  int rank = 0;    // 0: the default set of ranks
  int bound = 0;   // 0: the default size bound of the suite
  int order = 20;  // series truncation
};

const std::vector<std::string>& suite_names();
// Throws InvalidArgument on an unknown suite.
std::vector<CheckReport> run_suite(const std::string& suite, const SuiteOptions& opt = {});

}  // namespace qchar
