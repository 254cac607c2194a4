#include "qchar/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "qchar/macdonald.hpp"
#include "qchar/qtorus.hpp"
#include "qchar/whittaker.hpp"

namespace qchar {

void CheckReport::record(const std::string& point, bool ok, const std::function<std::string()>& detail) {
  results.emplace_back(point, ok);
  if (ok) return;
  ++failures;
  if (!counterexample) counterexample = detail ? point + ": " + detail() : point;
}

nlohmann::ordered_json CheckReport::to_json(bool with_points) const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["grid"] = grid;
  j["points"] = points();
  j["failures"] = failures;
  j["pass"] = passed();
  j["counterexample"] = counterexample ? nlohmann::ordered_json(*counterexample) : nlohmann::ordered_json(nullptr);
  j["seconds"] = seconds;
  if (with_points) {
    auto& arr = j["results"] = nlohmann::ordered_json::array();
    for (const auto& [p, ok] : results) arr.push_back({{"point", p}, {"pass", ok}});
  }
  return j;
}

CheckReport timed(const std::string& name, const std::function<void(CheckReport&)>& body) {
  CheckReport r;
  r.name = name;
  auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

namespace {

WPoly v(int e) { return WPoly::var_power(2 * e); }
QPoly q(int e) { return QPoly::var_power(e); }

// chi_n, zero when an entry is negative
QLaurent chi(const NVector& n) {
  if (!n.is_valid()) return QLaurent(n.rank() + 1);
  return character_polynomial(n);
}

QLaurent e_sym(int m, int nvars) { return lift_integer<QPoly>(elementary(m, nvars)); }

bool constrained_equal(const QLaurent& a, const QLaurent& b, int rank) { return constrain(a, rank) == constrain(b, rank); }

std::string grid_point(const NVector& n) { return "n=" + n.to_string(); }

}  // namespace

// ---------------------------------------------------------------------------
// difference equations

CheckReport check_difference_equation(int rank, int level, int sigma_max, int perturb) {
  return timed("difference_equation", [&](CheckReport& rep) {
    rep.grid = {{"rank", rank}, {"level", level}, {"sigma_max", sigma_max}};
    if (perturb) rep.grid["perturb"] = perturb;
    const int N = rank + 1;
    const QLaurent e1 = e_sym(1, N);
    for (const auto& n : nvectors_up_to(rank, level, sigma_max)) {
      QLaurent lhs(N);
      if (level == 1) {
        lhs += chi(n.shifted(1, 1, 1));
        for (int a = 1; a <= rank; ++a) {
          const int na = n.at(a, 1);
          if (na == 0) continue;
          lhs += (QPoly(1) - q(-na + perturb)) * chi(n.shifted(a, 1, -1).shifted(a + 1, 1, 1));
        }
      } else {
        bool admissible = true;
        for (int a = 1; a <= rank; ++a)
          if (n.at(a, level) < 1 || n.at(a, level - 1) < 1) admissible = false;
        if (!admissible) continue;
        const int k = level;
        for (int a = 1; a <= N; ++a)
          lhs += chi(n.shifted(a - 1, k - 1, 1).shifted(a, k - 1, -1).shifted(a, k, 1).shifted(a - 1, k, -1));
        for (int a = 1; a <= rank; ++a) {
          int e = k - 1 + perturb;
          for (int i = 1; i <= k; ++i) e -= i * n.at(a, i);
          lhs -= q(e) * chi(n.shifted(a - 1, k - 1, 1).shifted(a, k - 1, -1).shifted(a + 1, k, 1).shifted(a, k, -1));
        }
      }
      const QLaurent rhs = e1 * chi(n);
      rep.record(grid_point(n), constrained_equal(lhs, rhs, rank),
                 [&] { return "lhs - rhs = " + constrain(lhs - rhs, rank).to_string(); });
    }
  });
}

CheckReport check_sl3_level2_G(int max_entry, int perturb) {
  return timed("sl3_level2_G", [&](CheckReport& rep) {
    rep.grid = {{"max_entry", max_entry}};
    if (perturb) rep.grid["perturb"] = perturb;
    const WLaurent e1 = constrain(lift_integer<WPoly>(elementary(1, 3)), 2);
    const WLaurent e2 = constrain(lift_integer<WPoly>(elementary(2, 3)), 2);
    // G_{n1,p1;n2,p2}: (n1, p1) at level 1, (n2, p2) at level 2
    auto G = [](int n1, int p1, int n2, int p2) {
      if (n1 < 0 || p1 < 0 || n2 < 0 || p2 < 0) return WLaurent(2);
      return g_coefficient(NVector(2, 2, {{n1, p1}, {n2, p2}}));
    };
    for (int n1 = 1; n1 <= max_entry; ++n1)
      for (int p1 = 1; p1 <= max_entry; ++p1)
        for (int n2 = 1; n2 <= max_entry; ++n2)
          for (int p2 = 1; p2 <= max_entry; ++p2) {
            const std::string pt = std::to_string(n1) + "," + std::to_string(p1) + ";" + std::to_string(n2) + "," + std::to_string(p2);
            const WLaurent g = G(n1, p1, n2, p2);
            WLaurent c1 = G(n1 - 1, p1, n2 + 1, p2) + v(-3 * n2) * G(n1 + 1, p1 - 1, n2 - 1, p2 + 1) +
                          v(-3 * n2 - 3 * p2) * G(n1, p1 + 1, n2, p2 - 1) - v(-3) * G(n1 - 1, p1, n2 - 1, p2 + 1) -
                          v(-3 - 3 * n2) * G(n1 + 1, p1 - 1, n2, p2 - 1);
            WLaurent r1 = v(-1 - 2 * n2 - p2) * (e1 * g);
            rep.record("C1 " + pt, c1 == r1, [&] { return "lhs - rhs = " + (c1 - r1).to_string(); });
            WLaurent c2 = G(n1, p1 - 1, n2, p2 + 1) + v(-3 * p2) * G(n1 - 1, p1 + 1, n2 + 1, p2 - 1) +
                          v(-3 * n2 - 3 * p2) * G(n1 + 1, p1, n2 - 1, p2) - v(-3) * G(n1, p1 - 1, n2 + 1, p2 - 1) -
                          v(-3 - 3 * p2) * G(n1 - 1, p1 + 1, n2 - 1, p2);
            WLaurent r2 = v(-1 - n2 - 2 * p2) * ((perturb ? e1 : e2) * g);
            rep.record("C2 " + pt, c2 == r2, [&] { return "lhs - rhs = " + (c2 - r2).to_string(); });
          }
    const WLaurent g10 = g_coefficient(NVector::level_one(2, {1, 0}));
    const WLaurent g01 = g_coefficient(NVector::level_one(2, {0, 1}));
    rep.record("e2 G_{1,0} = e1 G_{0,1}", e2 * g10 == e1 * g01);
  });
}

// ---------------------------------------------------------------------------
// operator algebra

namespace {

template <class Poly>
struct OperatorCache {
  OperatorFamily family;
  int N;
  std::map<std::tuple<int, int, std::size_t>, Poly> first;

  Poly apply_op(int a, int n, const Poly& f) const {
    if constexpr (std::is_same_v<Poly, QLaurent>)
      return apply_M(a, n, f, false);
    else
      return apply_D(a, n, f, false);
  }
  const Poly& once(int a, int n, std::size_t idx, const Poly& f) {
    auto key = std::make_tuple(a, n, idx);
    auto it = first.find(key);
    if (it != first.end()) return it->second;
    return first.emplace(key, apply_op(a, n, f)).first->second;
  }
};

template <class Poly, class Scalar>
void dual_qsystem_impl(CheckReport& rep, int rank, OperatorFamily family, int n_lo, int n_hi, int degree_bound,
                       const std::function<Scalar(int, int, int, int)>& comm_factor,
                       const std::function<Scalar(int)>& lhs_factor, const std::function<Scalar(int)>& tail_factor) {
  const int N = rank + 1;
  std::vector<Partition> parts;
  std::vector<Poly> basis;
  for (int s = 0; s <= degree_bound; ++s)
    for (const auto& mu : partitions_of(s, N)) {
      parts.push_back(mu);
      basis.push_back(lift_integer<Scalar>(monomial_symmetric(mu, N)));
    }
  OperatorCache<Poly> cache{family, N, {}};
  const char* sym = family == OperatorFamily::M ? "M" : "D";
  auto label = [&](int a, int n) { return std::string(sym) + "_{" + std::to_string(a) + "," + std::to_string(n) + "}"; };

  for (int a = 0; a <= N; ++a)
    for (int n = n_lo; n <= n_hi; ++n)
      for (int b = a; b <= N; ++b)
        for (int p = n_lo; p <= n_hi; ++p) {
          if (b == a && p <= n) continue;
          if (std::abs(p - n) > std::abs(b - a) + 1) continue;
          const Scalar c = comm_factor(a, n, b, p);
          std::optional<std::size_t> bad;
          for (std::size_t i = 0; i < basis.size() && !bad; ++i) {
            Poly lhs = cache.apply_op(a, n, cache.once(b, p, i, basis[i]));
            Poly rhs = c * cache.apply_op(b, p, cache.once(a, n, i, basis[i]));
            if (lhs != rhs) bad = i;
          }
          rep.record(label(a, n) + label(b, p), !bad, [&] { return "fails on m_" + parts[*bad].to_string(); });
        }
  for (int a = 1; a <= rank; ++a)
    for (int n = n_lo; n <= n_hi; ++n) {
      std::optional<std::size_t> bad;
      for (std::size_t i = 0; i < basis.size() && !bad; ++i) {
        Poly lhs = lhs_factor(a) * cache.apply_op(a, n + 1, cache.once(a, n - 1, i, basis[i]));
        Poly rhs = cache.apply_op(a, n, cache.once(a, n, i, basis[i])) -
                   tail_factor(a) * cache.apply_op(a + 1, n, cache.once(a - 1, n, i, basis[i]));
        if (lhs != rhs) bad = i;
      }
      rep.record("qsystem a=" + std::to_string(a) + " n=" + std::to_string(n), !bad,
                 [&] { return "fails on m_" + parts[*bad].to_string(); });
    }
}

}  // namespace

CheckReport check_dual_qsystem(int rank, OperatorFamily family, int n_lo, int n_hi, int degree_bound, int perturb) {
  const std::string name = family == OperatorFamily::M ? "dual_qsystem_M" : "dual_qsystem_D";
  return timed(name, [&](CheckReport& rep) {
    rep.grid = {{"rank", rank}, {"n_range", {n_lo, n_hi}}, {"degree_bound", degree_bound}};
    if (perturb) rep.grid["perturb"] = perturb;
    const int N = rank + 1;
    const CartanData cd(rank);
    auto lam = [&](int a, int b) { return (a == 0 || b == 0 || a == N || b == N) ? 0 : cd.lambda(a, b); };
    if (family == OperatorFamily::M) {
      dual_qsystem_impl<QLaurent, QPoly>(
          rep, rank, family, n_lo, n_hi, degree_bound,
          [&](int a, int n, int b, int p) { return q(std::min(a, b) * (p - n) + perturb); },
          [&](int a) { return q(a + perturb); }, [](int) { return QPoly(1); });
    } else if (family == OperatorFamily::D) {
      dual_qsystem_impl<WLaurent, WPoly>(
          rep, rank, family, n_lo, n_hi, degree_bound,
          [&](int a, int n, int b, int p) { return v(-lam(a, b) * (p - n) + perturb); },
          [&](int a) { return v(-lam(a, a) + perturb); }, [&](int) { return v(-N); });
    } else {
      throw InvalidArgument("the dual Q-system check takes the M or D family");
    }
  });
}

CheckReport check_eigen(int rank, int sigma_max, int perturb) {
  return timed("eigen", [&](CheckReport& rep) {
    rep.grid = {{"rank", rank}, {"sigma_max", sigma_max}};
    if (perturb) rep.grid["perturb"] = perturb;
    for (const auto& n : nvectors_up_to(rank, 1, sigma_max)) {
      const QLaurent c = chi(n);
      for (int a = 1; a <= rank; ++a) {
        int e = perturb;
        for (int b = 1; b <= rank; ++b) e += std::min(a, b) * n.at(b, 1);
        QLaurent lhs = apply_M(a, 0, c, false);
        rep.record(grid_point(n) + " a=" + std::to_string(a), lhs == q(e) * c,
                   [&] { return "M chi - E chi = " + (lhs - q(e) * c).to_string(); });
      }
    }
  });
}

// ---------------------------------------------------------------------------
// subset-sum lemmas

namespace {

// coeff * z^mono * prod_{(i,j) in apairs} 1/(z_i - z_j) * prod_{(i,j) in qpairs} 1/(z_i - q z_j)
struct RationalTerm {
  QPoly coeff{1};
  Monomial mono;
  std::vector<std::pair<int, int>> apairs, qpairs;
};

QLaurent times_linear(const QLaurent& f, int i, int j, const QPoly& c) {
  QLaurent out(f.nvars());
  for (const auto& [m, x] : f.terms()) {
    Monomial mi = m, mj = m;
    mi[i] += 1;
    mj[j] += 1;
    out.add_term(mi, x);
    out.add_term(mj, -(c * x));
  }
  return out;
}

// The term times Delta = prod_{i<j}(z_i - z_j), and times
// B = prod_{i != j}(z_i - q z_j) when with_b is set.
QLaurent cleared(const RationalTerm& t, int N, bool with_b) {
  std::set<std::pair<int, int>> ap(t.apairs.begin(), t.apairs.end()), qp(t.qpairs.begin(), t.qpairs.end());
  QLaurent f = QLaurent::monomial(N, t.mono, t.coeff);
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      if (ap.count({i, j})) continue;
      if (ap.count({j, i})) {
        f = -f;
        continue;
      }
      f = times_linear(f, i, j, QPoly(1));
    }
  if (with_b)
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        if (i != j && !qp.count({i, j})) f = times_linear(f, i, j, q(1));
  return f;
}

// sum over |I| = a of sgn(s_I) s_I(f), where s_I sends [0, a) onto I and
// [a, N) onto its complement, both increasingly. Because Delta is
// alternating and B symmetric, this is the cleared sum over set splittings.
QLaurent subset_sum(const QLaurent& f, int a, int N) {
  QLaurent out(N);
  std::vector<int> pick(static_cast<std::size_t>(N), 0);
  std::fill(pick.begin(), pick.begin() + a, 1);
  do {
    std::vector<int> sigma;
    for (int i = 0; i < N; ++i)
      if (pick[static_cast<std::size_t>(i)]) sigma.push_back(i);
    for (int i = 0; i < N; ++i)
      if (!pick[static_cast<std::size_t>(i)]) sigma.push_back(i);
    std::vector<int> inv(static_cast<std::size_t>(N));
    int inversions = 0;
    for (int x = 0; x < N; ++x) {
      inv[static_cast<std::size_t>(sigma[static_cast<std::size_t>(x)])] = x;
      for (int y = x + 1; y < N; ++y)
        if (sigma[static_cast<std::size_t>(x)] > sigma[static_cast<std::size_t>(y)]) ++inversions;
    }
    QLaurent g = f.permute_vars(inv);
    if (inversions % 2)
      out -= g;
    else
      out += g;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// a_{X,Y} b_{Y,X} with X = [0, x), Y = [x, N)
RationalTerm ab_term(int x, int N) {
  RationalTerm t;
  for (int i = 0; i < x; ++i)
    for (int j = x; j < N; ++j) {
      t.mono[i] += 1;
      t.mono[j] += 1;
      t.apairs.emplace_back(i, j);
      t.qpairs.emplace_back(j, i);
    }
  return t;
}

}  // namespace

QLaurent exchange_lemma_cleared(int a, int b, int p) {
  return [&] {
    const int N = a + b;
    // z_J^p a_{I,J} b_{J,I}
    RationalTerm t1 = ab_term(a, N);
    // q^{pa} z_J^p a_{J,I} b_{I,J}
    RationalTerm t2;
    for (int i = 0; i < a; ++i)
      for (int j = a; j < N; ++j) {
        t2.mono[i] += 1;
        t2.mono[j] += 1;
        t2.apairs.emplace_back(j, i);
        t2.qpairs.emplace_back(i, j);
      }
    for (int j = a; j < N; ++j) {
      t1.mono[j] += p;
      t2.mono[j] += p;
    }
    t2.coeff = q(p * a);
    return subset_sum(cleared(t1, N, true) - cleared(t2, N, true), a, N);
  }();
}

CheckReport check_lemma_exchange(int size_bound, int perturb) {
  return timed("lemma_exchange", [&](CheckReport& rep) {
    rep.grid = {{"b_max", size_bound}};
    if (perturb) rep.grid["perturb"] = perturb;
    for (int b = 1; b <= size_bound; ++b)
      for (int a = 0; a <= b; ++a)
        for (int p = -(b - a + 1); p <= b - a + 1; ++p) {
          const int pp = p + perturb;
          QLaurent s = exchange_lemma_cleared(a, b, pp);
          rep.record("a=" + std::to_string(a) + " b=" + std::to_string(b) + " p=" + std::to_string(p), s.is_zero(),
                     [&] { return std::to_string(s.size()) + " surviving terms"; });
        }
  });
}

CheckReport check_lemma_hook(int size_bound, int perturb) {
  return timed("lemma_hook", [&](CheckReport& rep) {
    rep.grid = {{"a_max", size_bound}};
    if (perturb) rep.grid["perturb"] = perturb;
    for (int a = 1; a <= size_bound; ++a) {
      const int N = 2 * a;
      RationalTerm t1 = ab_term(a, N);
      // q^a z_I / z_J times the same product
      RationalTerm t2 = t1;
      t2.coeff = q(a + perturb);
      for (int i = 0; i < a; ++i) t2.mono[i] += 1;
      for (int j = a; j < N; ++j) t2.mono[j] -= 1;
      QLaurent lhs = subset_sum(cleared(t1, N, true) - cleared(t2, N, true), a, N);
      QLaurent rhs = subset_sum(cleared(ab_term(a + 1, N), N, true), a + 1, N);
      rep.record("a=" + std::to_string(a), lhs == rhs, [&] { return std::to_string((lhs - rhs).size()) + " surviving terms"; });
    }
  });
}

CheckReport check_lemma_vanishing(int max_rank, int perturb) {
  return timed("lemma_vanishing", [&](CheckReport& rep) {
    rep.grid = {{"max_rank", max_rank}};
    if (perturb) rep.grid["perturb"] = perturb;
    for (int r = 1; r <= max_rank; ++r) {
      const int N = r + 1;
      const QLaurent delta = cleared(RationalTerm{}, N, false);
      for (int a = 1; a <= r; ++a)
        for (int p = a - r - 1; p <= 0; ++p) {
          RationalTerm t;
          for (int i = 0; i < a; ++i) {
            t.mono[i] = p + perturb;
            for (int j = a; j < N; ++j) {
              t.mono[i] += 1;
              t.apairs.emplace_back(i, j);
            }
          }
          QLaurent s = subset_sum(cleared(t, N, false), a, N);
          QLaurent expect = p == 0 ? delta : QLaurent(N);
          rep.record("r=" + std::to_string(r) + " a=" + std::to_string(a) + " p=" + std::to_string(p), s == expect);
        }
    }
  });
}

CheckReport check_d_on_one(int max_rank) {
  return timed("d_on_one", [&](CheckReport& rep) {
    rep.grid = {{"max_rank", max_rank}};
    for (int r = 1; r <= max_rank; ++r) {
      const int N = r + 1;
      const CartanData cd(r);
      const WLaurent one = WLaurent::constant(N, WPoly(1));
      for (int a = 1; a <= r; ++a) {
        for (int p = 1; p <= N - a; ++p)
          rep.record("r=" + std::to_string(r) + " D_{" + std::to_string(a) + "," + std::to_string(-p) + "} 1 = 0",
                     apply_D(a, -p, one).is_zero());
        rep.record("r=" + std::to_string(r) + " D_{" + std::to_string(a) + ",0} 1",
                   apply_D(a, 0, one) == WLaurent::constant(N, v(-cd.row_sum(a))));
      }
    }
  });
}

// ---------------------------------------------------------------------------
// character properties

CheckReport check_limits(int rank, int level, int sigma_max) {
  return timed("limits", [&](CheckReport& rep) {
    rep.grid = {{"rank", rank}, {"level", level}, {"sigma_max", sigma_max}};
    const int N = rank + 1;
    std::vector<int> ascending(static_cast<std::size_t>(rank));
    std::iota(ascending.begin(), ascending.end(), 1);
    for (const auto& n : nvectors_up_to(rank, level, sigma_max)) {
      const QLaurent c = chi(n);
      std::string why;
      for (const auto& [m, x] : c.terms())
        if (x.high() > 0) why = "positive power of q";
      QLaurent top(N);
      for (const auto& [m, x] : c.terms()) top.add_term(m, QPoly(x.coeff(0)));
      if (why.empty() && top != lift_integer<QPoly>(schur(top_component(n), N))) why = "top component differs from s_" + top_component(n).to_string();
      if (why.empty() && at_q_one(c) != ungraded_character(n)) why = "q = 1 value is not the product of rectangles";
      if (why.empty() && thread_engine().character_with_order(n, ascending) != c) why = "depends on the order of factors";
      if (why.empty()) {
        try {
          QLaurent via_g = w_to_q(WPoly::var_power(chi_to_g_w_exponent(n)) * g_coefficient(n), rank);
          if (via_g != constrain(c, rank)) why = "M path and D path disagree";
        } catch (const ExponentNotDivisible& e) {
          why = std::string("D path leaves a fractional q power: ") + e.what();
        }
      }
      if (why.empty())
        for (const auto& [lam, x] : multiplicities(n))
          for (const auto& [e, k] : x.terms())
            if (k < 0) why = "negative multiplicity coefficient for " + lam.to_string();
      rep.record(grid_point(n), why.empty(), [&] { return why; });
    }
  });
}

// ---------------------------------------------------------------------------
// quantum torus

CheckReport check_torus_recursion(int rank, int k_min, int k_max) {
  return timed("torus_recursion", [&](CheckReport& rep) {
    rep.grid = {{"rank", rank}, {"k_range", {k_min, k_max}}};
    QTable t;
    try {
      t = q_recursion(rank, k_max, k_min);
    } catch (const NcNotDivisible& e) {
      rep.record("exact division", false, [&] { return std::string(e.what()); });
      return;
    }
    rep.record("exact division", true);
    const CartanData cd(rank);
    for (int k = k_min + 1; k < k_max; ++k)
      for (int a = 1; a <= rank; ++a) {
        const NcLaurent& x = t.at({a, k});
        NcLaurent rhs = nc_mul(x, x) - nc_mul(t.at({a + 1, k}), t.at({a - 1, k}));
        NcLaurent lhs = v(cd.lambda(a, a)) * nc_mul(t.at({a, k + 1}), t.at({a, k - 1}));
        rep.record("a=" + std::to_string(a) + " k=" + std::to_string(k), lhs == rhs);
      }
  });
}

CheckReport check_torus_commutation(int rank, int k_min, int k_max) {
  return timed("torus_commutation", [&](CheckReport& rep) {
    rep.grid = {{"rank", rank}, {"k_range", {k_min, k_max}}};
    const QTable t = q_recursion(rank, k_max, k_min);
    const CartanData cd(rank);
    for (int a = 1; a <= rank; ++a)
      for (int k = k_min; k <= k_max; ++k)
        for (int b = a; b <= rank; ++b)
          for (int k2 = k_min; k2 <= k_max; ++k2) {
            if (b == a && k2 <= k) continue;
            if (std::abs(k - k2) > std::abs(a - b) + 1) continue;
            const NcLaurent& x = t.at({a, k});
            const NcLaurent& y = t.at({b, k2});
            rep.record("Q_{" + std::to_string(a) + "," + std::to_string(k) + "} Q_{" + std::to_string(b) + "," + std::to_string(k2) + "}",
                       nc_mul(x, y) == v(cd.lambda(a, b) * (k2 - k)) * nc_mul(y, x));
          }
  });
}

CheckReport check_torus_polynomiality(int rank, int k_max, int word_length) {
  return timed("torus_polynomiality", [&](CheckReport& rep) {
    rep.grid = {{"rank", rank}, {"k_max", k_max}, {"word_length", word_length}};
    const QTable t = q_recursion(rank, std::max(k_max, 1), 0);
    std::vector<std::pair<int, int>> gens;
    for (int a = 1; a <= rank; ++a)
      for (int k = 1; k <= k_max; ++k) gens.emplace_back(a, k);
    std::vector<std::pair<int, int>> word;
    std::function<void(const NcLaurent&)> walk = [&](const NcLaurent& f) {
      if (!word.empty()) {
        std::string label;
        for (const auto& [a, k] : word) label += "Q_{" + std::to_string(a) + "," + std::to_string(k) + "}";
        rep.record(label, evaluate(f, EvalMode::Ev0).is_polynomial_in_q1());
      }
      if (static_cast<int>(word.size()) == word_length) return;
      for (const auto& g : gens) {
        word.push_back(g);
        walk(nc_mul(f, t.at(g)));
        word.pop_back();
      }
    };
    walk(NcLaurent::constant(rank, WPoly(1)));
  });
}

CheckReport check_torus_equivev(int rank, int samples, unsigned seed) {
  return timed("torus_equivev", [&](CheckReport& rep) {
    rep.grid = {{"rank", rank}, {"samples", samples}, {"seed", seed}};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> ex(-3, 3), co(-4, 4), nt(1, 5);
    NcLaurent prod = NcLaurent::constant(rank, WPoly(1));
    for (int b = 1; b <= rank; ++b) prod = nc_mul(prod, NcLaurent::generator(rank, b, 1));
    for (int s = 0; s < samples; ++s) {
      NcLaurent f(rank);
      const int terms = nt(rng);
      for (int i = 0; i < terms; ++i) {
        Monomial m;
        for (int j = 0; j < 2 * rank; ++j) m[j] = ex(rng);
        f.add_term(m, WPoly(co(rng)) * WPoly::var_power(ex(rng)) + WPoly(co(rng)));
      }
      rep.record("sample " + std::to_string(s),
                 evaluate(nc_mul(prod, f), EvalMode::Ev) == nc_mul(prod, evaluate(f, EvalMode::Ev0)));
    }
  });
}

// ---------------------------------------------------------------------------
// Macdonald and Whittaker

CheckReport check_macdonald(int max_size, int max_vars) {
  return timed("macdonald", [&](CheckReport& rep) {
    rep.grid = {{"max_size", max_size}, {"max_vars", max_vars}};
    for (int N = 2; N <= max_vars; ++N)
      for (int s = 0; s <= max_size; ++s)
        for (const auto& lam : partitions_of(s, N)) {
          const std::string pt = "N=" + std::to_string(N) + " lambda=" + lam.to_string();
          const NVector n = level_one_from_partition(lam, N - 1);
          const QLaurent c = chi(n);
          const QLaurent w = qwhittaker_specialize(macdonald_poly(lam, N));
          const QLaurent en = e_sym(N, N).pow(lam.part(N - 1));
          rep.record(pt + " t=0", w == en * c, [&] { return "difference " + (w - en * c).to_string(); });
          for (int a = 1; a < N; ++a) {
            int e = 0;
            for (int b = 1; b < N; ++b) e += std::min(a, b) * n.at(b, 1);
            rep.record(pt + " t->inf a=" + std::to_string(a), macdonald_t_limit(a, c) == q(e) * c);
          }
        }
  });
}

CheckReport check_whittaker_toda(int n_max, int order) {
  return timed("whittaker_toda", [&](CheckReport& rep) {
    rep.grid = {{"n_max", n_max}, {"order", order}};
    for (bool refl : {false, true}) {
      std::vector<TruncatedSeries> w;
      for (int n = 0; n <= n_max + 1; ++n) w.push_back(w_series(n, refl, order));
      for (int n = 0; n <= n_max; ++n) {
        const TruncatedSeries prev = n > 0 ? w[static_cast<std::size_t>(n - 1)] : w_boundary_term(refl, order);
        TruncatedSeries res = toda_residual(prev, w[static_cast<std::size_t>(n)], w[static_cast<std::size_t>(n + 1)], n);
        rep.record(std::string(refl ? "reflected" : "fundamental") + " n=" + std::to_string(n), res.is_zero(),
                   [&] { return "residual valuation " + std::to_string(*res.valuation()); });
      }
    }
  });
}

CheckReport check_class_one(int n_max, int order) {
  return timed("class_one", [&](CheckReport& rep) {
    rep.grid = {{"n_max", n_max}, {"order", order}};
    for (int n = 0; n <= n_max; ++n) {
      TruncatedSeries a = class_one_series(n, order), b = character_series(n, order);
      rep.record("n=" + std::to_string(n), a == b, [&] { return "first differing order " + std::to_string(*(a - b).valuation()); });
    }
  });
}

// ---------------------------------------------------------------------------
// suites

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"qsystem", "diffeq", "eigen", "lemmas", "limits", "torus", "macdonald", "whittaker", "all"};
  return names;
}

namespace {

std::vector<int> ranks_or(const SuiteOptions& opt, std::vector<int> dflt) {
  if (opt.rank > 0) return {opt.rank};
  return dflt;
}

int bound_or(const SuiteOptions& opt, int dflt) { return opt.bound > 0 ? opt.bound : dflt; }

}  // namespace

std::vector<CheckReport> run_suite(const std::string& suite, const SuiteOptions& opt) {
  std::vector<CheckReport> out;
  auto add = [&](CheckReport r) { out.push_back(std::move(r)); };
  if (suite == "all") {
    for (const auto& s : suite_names())
      if (s != "all")
        for (auto& r : run_suite(s, opt)) add(std::move(r));
    return out;
  }
  if (suite == "qsystem") {
    for (int r : ranks_or(opt, {2, 3})) {
      add(check_dual_qsystem(r, OperatorFamily::M, -1, 2, bound_or(opt, 6)));
      add(check_dual_qsystem(r, OperatorFamily::D, -1, 2, bound_or(opt, 6)));
    }
  } else if (suite == "diffeq") {
    for (int r : ranks_or(opt, {1, 2, 3})) {
      add(check_difference_equation(r, 1, bound_or(opt, r == 1 ? 10 : 5)));
      for (int k = 2; k <= 3; ++k) add(check_difference_equation(r, k, bound_or(opt, r == 3 ? 6 : 5)));
    }
    if (opt.rank == 0 || opt.rank == 2) add(check_sl3_level2_G(2));
  } else if (suite == "eigen") {
    for (int r : ranks_or(opt, {1, 2, 3})) add(check_eigen(r, bound_or(opt, 4)));
  } else if (suite == "lemmas") {
    add(check_lemma_exchange(bound_or(opt, 3)));
    add(check_lemma_hook(bound_or(opt, 3)));
    add(check_lemma_vanishing(opt.rank > 0 ? opt.rank : 4));
    add(check_d_on_one(opt.rank > 0 ? opt.rank : 4));
  } else if (suite == "limits") {
    for (int r : ranks_or(opt, {1, 2, 3}))
      for (int k = 1; k <= 3; ++k) add(check_limits(r, k, bound_or(opt, r == 3 ? 3 : 4)));
  } else if (suite == "torus") {
    for (int r : ranks_or(opt, {1, 2, 3})) {
      add(check_torus_recursion(r, -2, 6));
      add(check_torus_commutation(r, -2, 6));
      add(check_torus_polynomiality(r, 3, bound_or(opt, 4)));
      add(check_torus_equivev(r, 20, 2024));
    }
  } else if (suite == "macdonald") {
    add(check_macdonald(bound_or(opt, 4), 3));
  } else if (suite == "whittaker") {
    add(check_whittaker_toda(6, opt.order));
    add(check_class_one(bound_or(opt, 4), opt.order));
  } else {
    throw InvalidArgument("unknown suite '" + suite + "'");
  }
  return out;
}

}  // namespace qchar
