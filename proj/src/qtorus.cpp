#include "qchar/qtorus.hpp"

namespace qchar {

namespace {

std::string v_power_string(int w_exp) {
  if (w_exp % 2 == 0) return "v^" + std::to_string(w_exp / 2);
  return "v^" + std::to_string(w_exp) + "/2";
}

std::string v_poly_string(const WPoly& c) {
  std::string out;
  auto terms = c.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, x] = *it;
    BigInt mag = abs(x);
    std::string body;
    if (e == 0)
      body = mag.get_str();
    else
      body = (mag == 1 ? "" : mag.get_str() + "*") + v_power_string(e);
    if (out.empty())
      out = (sgn(x) < 0 ? "-" : "") + body;
    else
      out += (sgn(x) < 0 ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

struct Box {
  std::vector<std::pair<int, int>> range;
};

Box support_box(const NcLaurent& f, const NcLaurent& g, int nvars) {
  Box b;
  for (int i = 0; i < nvars; ++i) {
    int flo = 0, fhi = 0, glo = 0, ghi = 0;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
      flo = first ? m[i] : std::min(flo, static_cast<int>(m[i]));
      fhi = first ? m[i] : std::max(fhi, static_cast<int>(m[i]));
      first = false;
    }
    first = true;
    for (const auto& [m, c] : g.terms()) {
      glo = first ? m[i] : std::min(glo, static_cast<int>(m[i]));
      ghi = first ? m[i] : std::max(ghi, static_cast<int>(m[i]));
      first = false;
    }
    b.range.emplace_back(flo - glo, fhi - ghi);
  }
  return b;
}

// Greedy leading-term division; right = true solves X * g = f.
NcLaurent nc_divide(const NcLaurent& f, const NcLaurent& g, bool right) {
  if (g.is_zero()) throw InvalidArgument("division by zero torus element");
  const int r = f.rank();
  const CartanData cd(r);
  NcLaurent quo(r), rem = f;
  if (f.is_zero()) return quo;
  const Box box = support_box(f, g, 2 * r);
  const auto& [gm, gc] = *g.terms().rbegin();
  while (!rem.is_zero()) {
    const auto [rm, rc] = *rem.terms().rbegin();
    Monomial xm = rm - gm;
    for (int i = 0; i < 2 * r; ++i)
      if (xm[i] < box.range[static_cast<std::size_t>(i)].first || xm[i] > box.range[static_cast<std::size_t>(i)].second)
        throw NcNotDivisible("quotient leaves the support box");
    const int tw = right ? nc_twist(cd, xm, gm) : nc_twist(cd, gm, xm);
    auto xc = rc.divide(gc.shifted(tw));
    if (!xc) throw NcNotDivisible("leading coefficient " + rc.to_string() + " by " + gc.to_string());
    NcLaurent term = NcLaurent::monomial(r, xm, *xc);
    quo += term;
    rem -= right ? nc_mul(term, g) : nc_mul(g, term);
  }
  return quo;
}

}  // namespace

NcLaurent NcLaurent::constant(int rank, const WPoly& c) { return monomial(rank, Monomial{}, c); }

NcLaurent NcLaurent::generator(int rank, int alpha, int k, int power) {
  if (alpha < 1 || alpha > rank || (k != 0 && k != 1)) throw InvalidArgument("generator index out of range");
  Monomial m;
  m[(k == 0 ? 0 : rank) + alpha - 1] = power;
  return monomial(rank, m, WPoly(1));
}

NcLaurent NcLaurent::monomial(int rank, const Monomial& m, const WPoly& c) {
  if (2 * rank > kMaxVars) throw InvalidArgument("rank too large for the quantum torus");
  NcLaurent f(rank);
  f.add_term(m, c);
  return f;
}

void NcLaurent::add_term(const Monomial& m, const WPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

NcLaurent& NcLaurent::operator+=(const NcLaurent& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

NcLaurent& NcLaurent::operator-=(const NcLaurent& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

NcLaurent operator*(const WPoly& s, const NcLaurent& f) {
  NcLaurent out(f.r_);
  for (const auto& [m, c] : f.t_) out.add_term(m, s * c);
  return out;
}

bool NcLaurent::is_polynomial_in_q1() const {
  for (const auto& [m, c] : t_)
    for (int i = r_; i < 2 * r_; ++i)
      if (m[i] < 0) return false;
  return true;
}

bool NcLaurent::is_q1_only() const {
  for (const auto& [m, c] : t_)
    for (int i = 0; i < r_; ++i)
      if (m[i] != 0) return false;
  return true;
}

std::string NcLaurent::to_string() const {
  if (t_.empty()) return "0";
  std::string out;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (int k = 0; k < 2; ++k)
      for (int a = 1; a <= r_; ++a) {
        int e = m[k * r_ + a - 1];
        if (!e) continue;
        if (!mono.empty()) mono += "*";
        mono += "Q" + std::to_string(a) + "_" + std::to_string(k);
        if (e != 1) mono += "^" + std::to_string(e);
      }
    std::string cs = v_poly_string(c);
    bool neg = false;
    if (c.num_terms() == 1 && cs[0] == '-') {
      neg = true;
      cs = cs.substr(1);
    }
    std::string term;
    if (c.num_terms() > 1)
      term = "(" + cs + ")" + (mono.empty() ? "" : "*" + mono);
    else if (mono.empty())
      term = cs;
    else
      term = cs == "1" ? mono : cs + "*" + mono;
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out;
}

int nc_twist(const CartanData& c, const Monomial& x, const Monomial& y) {
  const int r = c.rank();
  int s = 0;
  for (int b = 1; b <= r; ++b) {
    int xb = x[r + b - 1];
    if (!xb) continue;
    for (int a = 1; a <= r; ++a) s += xb * c.lambda(b, a) * y[a - 1];
  }
  return -2 * s;
}

NcLaurent nc_mul(const NcLaurent& f, const NcLaurent& g) {
  const CartanData cd(f.rank());
  NcLaurent out(f.rank());
  for (const auto& [mf, cf] : f.terms())
    for (const auto& [mg, cg] : g.terms()) out.add_term(mf + mg, (cf * cg).shifted(nc_twist(cd, mf, mg)));
  return out;
}

NcLaurent nc_right_div(const NcLaurent& f, const NcLaurent& g) { return nc_divide(f, g, true); }
NcLaurent nc_left_div(const NcLaurent& f, const NcLaurent& g) { return nc_divide(f, g, false); }

QTable q_recursion(int rank, int k_max, int k_min) {
  if (k_min > 0 || k_max < 1) throw InvalidArgument("q_recursion needs k_min <= 0 <= 1 <= k_max");
  const CartanData cd(rank);
  QTable t;
  const NcLaurent one = NcLaurent::constant(rank, WPoly(1));
  for (int k = k_min; k <= k_max; ++k) {
    t[{0, k}] = one;
    t[{rank + 1, k}] = one;
  }
  for (int a = 1; a <= rank; ++a) {
    t[{a, 0}] = NcLaurent::generator(rank, a, 0);
    t[{a, 1}] = NcLaurent::generator(rank, a, 1);
  }
  auto rhs = [&](int a, int k) {
    const NcLaurent& x = t.at({a, k});
    return WPoly::var_power(-2 * cd.lambda(a, a)) * (nc_mul(x, x) - nc_mul(t.at({a + 1, k}), t.at({a - 1, k})));
  };
  for (int k = 1; k < k_max; ++k)
    for (int a = 1; a <= rank; ++a) t[{a, k + 1}] = nc_right_div(rhs(a, k), t.at({a, k - 1}));
  for (int k = 0; k > k_min; --k)
    for (int a = 1; a <= rank; ++a) t[{a, k - 1}] = nc_left_div(rhs(a, k), t.at({a, k + 1}));
  return t;
}

NcLaurent evaluate(const NcLaurent& f, EvalMode mode) {
  const int r = f.rank();
  const CartanData cd(r);
  NcLaurent out(r);
  for (const auto& [m, c] : f.terms()) {
    int shift = 0;
    Monomial b = m;
    for (int a = 1; a <= r; ++a) {
      if (mode == EvalMode::Ev0) shift -= 2 * cd.row_sum(a) * m[a - 1];
      b[a - 1] = 0;
    }
    out.add_term(b, c.shifted(shift));
  }
  return out;
}

NcLaurent word_product(const QTable& table, int rank, const std::vector<std::pair<int, int>>& word) {
  NcLaurent f = NcLaurent::constant(rank, WPoly(1));
  for (const auto& [a, k] : word) {
    auto it = table.find({a, k});
    if (it == table.end()) throw InvalidArgument("Q_{" + std::to_string(a) + "," + std::to_string(k) + "} not in table");
    f = nc_mul(f, it->second);
  }
  return f;
}

bool check_polynomiality(const QTable& table, int rank, const std::vector<std::pair<int, int>>& word) {
  for (const auto& [a, k] : word)
    if (k < 1) throw InvalidArgument("polynomiality is stated for Q_{a,k} with k >= 1");
  return evaluate(word_product(table, rank, word), EvalMode::Ev0).is_polynomial_in_q1();
}

}  // namespace qchar
