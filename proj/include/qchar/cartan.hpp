#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qchar/errors.hpp"

namespace qchar {

// Inverse Cartan matrix of sl(r+1) scaled by r+1:
//   lambda(a, b) = min(a, b) * (r + 1 - max(a, b)),  a, b in [1, r]
// Indices 0 and r+1 are the boundary nodes and give 0.
class CartanData {
 public:
  explicit CartanData(int rank) : r_(rank) {
    if (rank < 1 || rank > 7) throw InvalidArgument("rank must lie in [1, 7], got " + std::to_string(rank));
  }

  int rank() const { return r_; }
  int n() const { return r_ + 1; }

  int lambda(int a, int b) const {
    if (a <= 0 || b <= 0 || a > r_ || b > r_) return 0;
    return std::min(a, b) * (r_ + 1 - std::max(a, b));
  }

  // sum over b in [1, r] of lambda(a, b)
  int row_sum(int a) const {
    int s = 0;
    for (int b = 1; b <= r_; ++b) s += lambda(a, b);
    return s;
  }

  std::vector<std::vector<int>> matrix() const {
    std::vector<std::vector<int>> m(static_cast<std::size_t>(r_), std::vector<int>(static_cast<std::size_t>(r_)));
    for (int a = 1; a <= r_; ++a)
      for (int b = 1; b <= r_; ++b) m[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = lambda(a, b);
    return m;
  }

 private:
  int r_;
};

}  // namespace qchar
