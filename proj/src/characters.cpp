#include "qchar/characters.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "qchar/qdiff.hpp"

namespace qchar {

NVector::NVector(int rank, int level, std::vector<std::vector<int>> by_level) : r_(rank), k_(level), n_(std::move(by_level)) {
  if (rank < 1 || rank + 1 > kMaxVars) throw InvalidArgument("rank out of range");
  if (level < 1) throw InvalidArgument("level must be at least 1");
  if (static_cast<int>(n_.size()) != level) throw InvalidArgument("expected " + std::to_string(level) + " levels of occupation numbers");
  for (const auto& row : n_)
    if (static_cast<int>(row.size()) != rank)
      throw InvalidArgument("expected " + std::to_string(rank) + " entries per level, got " + std::to_string(row.size()));
}

NVector NVector::zero(int rank, int level) {
  return NVector(rank, level, std::vector<std::vector<int>>(static_cast<std::size_t>(level), std::vector<int>(static_cast<std::size_t>(rank), 0)));
}

NVector NVector::level_one(int rank, const std::vector<int>& n) { return NVector(rank, 1, {n}); }

NVector NVector::parse(const std::string& text, int rank, int level) {
  std::vector<std::vector<int>> rows;
  std::stringstream ss(text);
  std::string lev;
  while (std::getline(ss, lev, ';')) {
    std::vector<int> row;
    std::stringstream ls(lev);
    std::string tok;
    while (std::getline(ls, tok, ',')) {
      tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        row.push_back(v);
      } catch (const std::logic_error&) {
        throw InvalidArgument("bad occupation number '" + tok + "'");
      }
    }
    rows.push_back(row);
  }
  if (rows.empty()) throw InvalidArgument("empty occupation numbers");
  if (level == 0) level = static_cast<int>(rows.size());
  NVector n(rank, level, rows);
  if (!n.is_valid()) throw InvalidArgument("occupation numbers must be nonnegative");
  return n;
}

int NVector::at(int alpha, int i) const {
  if (alpha < 1 || alpha > r_ || i < 1 || i > k_) throw InvalidArgument("index out of range");
  return n_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(alpha - 1)];
}

int NVector::get(int alpha, int i) const {
  if (alpha < 1 || alpha > r_ || i < 1 || i > k_) return 0;
  return n_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(alpha - 1)];
}

int NVector::sigma() const {
  int s = 0;
  for (const auto& row : n_)
    for (int x : row) s += x;
  return s;
}

bool NVector::is_valid() const {
  for (const auto& row : n_)
    for (int x : row)
      if (x < 0) return false;
  return true;
}

NVector NVector::shifted(int alpha, int i, int delta) const {
  if (alpha == 0 || alpha == r_ + 1) return *this;
  if (alpha < 0 || alpha > r_ + 1 || i < 1 || i > k_) throw InvalidArgument("shift index out of range");
  NVector out = *this;
  out.n_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(alpha - 1)] += delta;
  return out;
}

std::vector<std::vector<int>> NVector::by_alpha() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(r_), std::vector<int>(static_cast<std::size_t>(k_)));
  for (int i = 0; i < k_; ++i)
    for (int a = 0; a < r_; ++a) out[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] = n_[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)];
  return out;
}

std::string NVector::to_string() const {
  std::string s;
  for (int i = 0; i < k_; ++i) {
    if (i) s += ";";
    for (int a = 0; a < r_; ++a) {
      if (a) s += ",";
      s += std::to_string(n_[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)]);
    }
  }
  return s;
}

int m_path_q_exponent(const NVector& n) {
  long twice = 0;
  for (int i = 1; i <= n.level(); ++i)
    for (int a = 1; a <= n.rank(); ++a) {
      const long x = n.at(a, i);
      if (!x) continue;
      twice += static_cast<long>(i) * a * x;
      for (int j = 1; j <= n.level(); ++j)
        for (int b = 1; b <= n.rank(); ++b) twice -= x * std::min(i, j) * std::min(a, b) * n.at(b, j);
    }
  if (twice % 2 != 0) throw ExponentNotDivisible("prefactor exponent " + std::to_string(twice) + "/2");
  if (twice > 0) throw IdentityViolation("positive prefactor exponent for n = " + n.to_string());
  return static_cast<int>(twice / 2);
}

int chi_to_g_w_exponent(const NVector& n) {
  const CartanData cd(n.rank());
  long e = 0;
  for (int i = 1; i <= n.level(); ++i)
    for (int a = 1; a <= n.rank(); ++a) {
      const long x = n.at(a, i);
      if (!x) continue;
      e += 2 * x * cd.row_sum(a);
      for (int j = 1; j <= n.level(); ++j)
        for (int b = 1; b <= n.rank(); ++b) e += x * std::min(i, j) * cd.lambda(a, b) * n.at(b, j);
    }
  return static_cast<int>(e);
}

namespace {

// The factor applied last in prod_k ... prod_1 (levels ascending, and within
// a level alpha descending): highest nonzero level, lowest nonzero alpha.
bool last_factor(const NVector& n, int& alpha, int& level) {
  for (int i = n.level(); i >= 1; --i)
    for (int a = 1; a <= n.rank(); ++a)
      if (n.at(a, i) > 0) {
        alpha = a;
        level = i;
        return true;
      }
  return false;
}

}  // namespace

const QLaurent& CharacterEngine::raw_m(const NVector& n) {
  auto it = m_memo_.find(n);
  if (it != m_memo_.end()) return it->second;
  int a = 0, i = 0;
  QLaurent val;
  if (!last_factor(n, a, i))
    val = QLaurent::constant(n.rank() + 1, QPoly(1));
  else
    val = apply_M(a, i, raw_m(n.shifted(a, i, -1)), false);
  return m_memo_.emplace(n, std::move(val)).first->second;
}

const WLaurent& CharacterEngine::raw_d(const NVector& n) {
  auto it = d_memo_.find(n);
  if (it != d_memo_.end()) return it->second;
  int a = 0, i = 0;
  WLaurent val;
  if (!last_factor(n, a, i))
    val = WLaurent::constant(n.rank() + 1, WPoly(1));
  else
    val = apply_D(a, i, raw_d(n.shifted(a, i, -1)), false);
  return d_memo_.emplace(n, std::move(val)).first->second;
}

QLaurent CharacterEngine::character(const NVector& n) {
  if (!n.is_valid()) throw InvalidArgument("negative occupation number in " + n.to_string());
  return QPoly::var_power(m_path_q_exponent(n)) * raw_m(n);
}

QLaurent CharacterEngine::character_with_order(const NVector& n, const std::vector<int>& alpha_order) {
  QLaurent f = QLaurent::constant(n.rank() + 1, QPoly(1));
  for (int i = 1; i <= n.level(); ++i)
    for (int a : alpha_order)
      for (int c = 0; c < n.at(a, i); ++c) f = apply_M(a, i, f, false);
  return QPoly::var_power(m_path_q_exponent(n)) * f;
}

WLaurent CharacterEngine::g_coefficient(const NVector& n) {
  if (!n.is_valid()) throw InvalidArgument("negative occupation number in " + n.to_string());
  return constrain(raw_d(n), n.rank());
}

void CharacterEngine::clear() {
  m_memo_.clear();
  d_memo_.clear();
}

CharacterEngine& thread_engine() {
  thread_local CharacterEngine engine;
  return engine;
}

QLaurent character_polynomial(const NVector& n) { return thread_engine().character(n); }

GradedCharacter graded_character(const NVector& n) {
  GradedCharacter g;
  g.n = n;
  g.chi = character_polynomial(n);
  g.expansion = schur_expand(g.chi);
  g.provenance = CharacterPath::M;
  return g;
}

WLaurent g_coefficient(const NVector& n) { return thread_engine().g_coefficient(n); }

SchurExpansion<QPoly> multiplicities(const NVector& n) {
  SchurExpansion<QPoly> out;
  for (const auto& [lam, c] : schur_expand(character_polynomial(n))) {
    auto [it, fresh] = out.emplace(lam.strip_columns(n.rank() + 1), c);
    if (!fresh) it->second += c;
  }
  return out;
}

Partition top_component(const NVector& n) {
  std::vector<int> ell;
  for (int a = 1; a <= n.rank(); ++a) {
    int s = 0;
    for (int i = 1; i <= n.level(); ++i) s += i * n.at(a, i);
    ell.push_back(s);
  }
  return Partition::from_weight(ell);
}

ZPoly ungraded_character(const NVector& n) {
  const int N = n.rank() + 1;
  ZPoly out = ZPoly::constant(N, BigInt(1));
  for (int i = 1; i <= n.level(); ++i)
    for (int a = 1; a <= n.rank(); ++a) {
      if (!n.at(a, i)) continue;
      ZPoly rect = schur(Partition(std::vector<int>(static_cast<std::size_t>(a), i)), N);
      out *= rect.pow(n.at(a, i));
    }
  return out;
}

ZPoly at_q_one(const QLaurent& f) {
  return f.map_coeffs<BigInt>([](const QPoly& c) { return c.eval_at_one(); });
}

}  // namespace qchar

namespace qchar {

std::vector<NVector> nvectors_up_to(int rank, int level, int sigma_max) {
  const int slots = rank * level;
  std::vector<NVector> out;
  std::vector<int> e(static_cast<std::size_t>(slots), 0);
  for (int s = 0; s <= sigma_max; ++s) {
    // compositions of s into slots parts
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == slots - 1) {
        e[static_cast<std::size_t>(i)] = left;
        std::vector<std::vector<int>> rows(static_cast<std::size_t>(level));
        for (int l = 0; l < level; ++l)
          rows[static_cast<std::size_t>(l)].assign(e.begin() + l * rank, e.begin() + (l + 1) * rank);
        out.emplace_back(rank, level, rows);
        return;
      }
      for (int x = left; x >= 0; --x) {
        e[static_cast<std::size_t>(i)] = x;
        rec(i + 1, left - x);
      }
    };
    rec(0, s);
  }
  return out;
}

}  // namespace qchar
