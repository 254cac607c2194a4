#include "qchar/symfun.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qchar {

Partition::Partition(std::vector<int> parts) : p_(std::move(parts)) {
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (p_[i] < 0) throw InvalidArgument("negative partition part");
    if (i > 0 && p_[i] > p_[i - 1]) throw InvalidArgument("partition parts must be weakly decreasing");
  }
  while (!p_.empty() && p_.back() == 0) p_.pop_back();
}

int Partition::size() const { return std::accumulate(p_.begin(), p_.end(), 0); }

Partition Partition::from_weight(const std::vector<int>& ell) {
  std::vector<int> parts(ell.size() + 1, 0);
  for (std::size_t a = ell.size(); a-- > 0;) {
    if (ell[a] < 0) throw InvalidArgument("weight is not dominant");
    parts[a] = parts[a + 1] + ell[a];
  }
  return Partition(parts);
}

std::vector<int> Partition::weight(int rank) const {
  if (length() > rank + 1) throw InvalidArgument("partition " + to_string() + " has too many parts for rank " + std::to_string(rank));
  std::vector<int> ell;
  for (int a = 0; a < rank; ++a) ell.push_back(part(a) - part(a + 1));
  return ell;
}

Partition Partition::strip_columns(int n) const {
  if (length() > n) throw InvalidArgument("partition longer than variable count");
  int full = part(n - 1);
  std::vector<int> parts;
  for (int x : p_) parts.push_back(x - full);
  return Partition(parts);
}

bool Partition::dominates(const Partition& o) const {
  if (size() != o.size()) return false;
  int a = 0, b = 0;
  for (int i = 0; i < std::max(length(), o.length()); ++i) {
    a += part(i);
    b += o.part(i);
    if (a < b) return false;
  }
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int j = 0; j < part(0); ++j) {
    int h = 0;
    while (part(h) > j) ++h;
    c.push_back(h);
  }
  return Partition(c);
}

std::string Partition::to_string(int n) const {
  std::string s = "(";
  int len = std::max(n, length());
  for (int i = 0; i < len; ++i) {
    if (i) s += ",";
    s += std::to_string(part(i));
  }
  return s + ")";
}

std::string Partition::weight_string(int rank) const {
  std::vector<int> ell = weight(rank);
  std::string s;
  for (int a = 0; a < rank; ++a) {
    int c = ell[static_cast<std::size_t>(a)];
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    if (c != 1) s += std::to_string(c);
    s += "w" + std::to_string(a + 1);
  }
  return s.empty() ? "0" : s;
}

Partition Partition::parse(const std::string& text, int rank) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+03C9 GREEK SMALL LETTER OMEGA
    if (static_cast<unsigned char>(text[i]) == 0xCF && i + 1 < text.size() &&
        static_cast<unsigned char>(text[i + 1]) == 0x89) {
      s += 'w';
      ++i;
    } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      s += text[i];
    }
  }
  if (s.empty()) throw InvalidArgument("empty partition");
  if (s.find('w') != std::string::npos || s == "0") {
    if (rank < 1) throw InvalidArgument("weight form needs a rank");
    std::vector<int> ell(static_cast<std::size_t>(rank), 0);
    if (s == "0") return from_weight(ell);
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, '+')) {
      auto pos = tok.find('w');
      if (pos == std::string::npos) throw InvalidArgument("bad weight term '" + tok + "'");
      int mult = 1;
      try {
        if (pos > 0) mult = std::stoi(tok.substr(0, pos));
        int a = std::stoi(tok.substr(pos + 1));
        if (a < 1 || a > rank) throw InvalidArgument("fundamental weight index out of range in '" + tok + "'");
        ell[static_cast<std::size_t>(a - 1)] += mult;
      } catch (const std::logic_error& e) {
        if (dynamic_cast<const InvalidArgument*>(&e)) throw;
        throw InvalidArgument("bad weight term '" + tok + "'");
      }
    }
    return from_weight(ell);
  }
  if (s.front() == '(') {
    if (s.back() != ')') throw InvalidArgument("unbalanced parentheses in '" + text + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> parts;
  if (!s.empty()) {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw InvalidArgument("bad partition part '" + tok + "'");
        parts.push_back(v);
      } catch (const std::logic_error& e) {
        if (dynamic_cast<const InvalidArgument*>(&e)) throw;
        throw InvalidArgument("bad partition part '" + tok + "'");
      }
    }
  }
  return Partition(parts);
}

ZPoly elementary(int m, int n) {
  ZPoly out(n);
  if (m < 0 || m > n) return out;
  std::vector<int> pick(static_cast<std::size_t>(n), 0);
  std::fill(pick.end() - m, pick.end(), 1);
  do {
    Monomial e;
    for (int i = 0; i < n; ++i) e[i] = pick[static_cast<std::size_t>(i)];
    out.add_term(e, BigInt(1));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

ZPoly monomial_symmetric(const Partition& lambda, int n) {
  if (lambda.length() > n) return ZPoly(n);
  std::vector<int> v;
  for (int i = 0; i < n; ++i) v.push_back(lambda.part(i));
  std::sort(v.begin(), v.end());
  ZPoly out(n);
  do {
    out.add_term(Monomial::from(v), BigInt(1));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

ZPoly complete_homogeneous(int m, int n) {
  ZPoly out(n);
  if (m < 0) return out;
  for (const auto& p : partitions_of(m, n)) out += monomial_symmetric(p, n);
  return out;
}

ZPoly schur(const Partition& lambda, int n) {
  if (lambda.length() > n) return ZPoly(n);
  static std::mutex mu;
  static std::map<std::pair<Partition, int>, ZPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({lambda, n});
    if (it != cache.end()) return it->second;
  }
  Monomial e;
  for (int i = 0; i < n; ++i) e[i] = lambda.part(i) + n - 1 - i;
  ZPoly alt = antisymmetrize_cleared(ZPoly::monomial(n, e, BigInt(1)));
  ZPoly s = divide_by_vandermonde(alt);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(lambda, n), s);
  return s;
}

std::vector<Partition> pieri_e(const Partition& lambda, int m, int n) {
  if (lambda.length() > n) throw InvalidArgument("partition longer than variable count");
  std::vector<Partition> out;
  std::vector<int> add(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      if (left != 0) return;
      std::vector<int> mu;
      for (int j = 0; j < n; ++j) mu.push_back(lambda.part(j) + add[static_cast<std::size_t>(j)]);
      for (int j = 1; j < n; ++j)
        if (mu[static_cast<std::size_t>(j)] > mu[static_cast<std::size_t>(j - 1)]) return;
      out.emplace_back(mu);
      return;
    }
    for (int b = 0; b <= std::min(1, left); ++b) {
      add[static_cast<std::size_t>(i)] = b;
      rec(i + 1, left - b);
    }
    add[static_cast<std::size_t>(i)] = 0;
  };
  rec(0, m);
  std::sort(out.begin(), out.end(), PartitionDesc{});
  return out;
}

std::vector<Partition> partitions_of(int size, int max_length) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_length) return;
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(size, size);
  return out;
}

std::vector<Partition> dominated_partitions(const Partition& lambda, int n) {
  std::vector<Partition> out;
  for (const auto& p : partitions_of(lambda.size(), n))
    if (lambda.dominates(p)) out.push_back(p);
  return out;
}

}  // namespace qchar
