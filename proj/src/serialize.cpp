#include "qchar/serialize.hpp"

#include <sstream>

namespace qchar {

nlohmann::ordered_json integer_json(const BigInt& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

nlohmann::ordered_json qpoly_json(const QPoly& c) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& [e, x] : c.terms()) out.push_back({e, integer_json(x)});
  return out;
}

std::string qpoly_text(const QPoly& c) {
  std::string out;
  const auto& t = c.terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    const auto& [e, x] = *it;
    BigInt mag = abs(x);
    std::string body = e == 0 ? mag.get_str() : (mag == 1 ? "" : mag.get_str()) + "q^" + std::to_string(e);
    if (out.empty())
      out = (sgn(x) < 0 ? "-" : "") + body;
    else
      out += (sgn(x) < 0 ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

nlohmann::ordered_json character_json(const GradedCharacter& g) {
  const int N = g.n.rank() + 1;
  nlohmann::ordered_json j;
  j["schema"] = kSchemaVersion;
  j["rank"] = g.n.rank();
  j["level"] = g.n.level();
  j["n"] = g.n.by_alpha();
  j["top"] = top_component(g.n).to_string(N);
  auto& ex = j["schur"] = nlohmann::ordered_json::object();
  for (const auto& [lam, c] : g.expansion) ex[lam.to_string(N)] = qpoly_json(c);
  auto& mult = j["multiplicities"] = nlohmann::ordered_json::object();
  for (const auto& [lam, c] : multiplicities(g.n)) mult[lam.weight_string(g.n.rank())] = qpoly_json(c);
  return j;
}

std::string character_csv(const GradedCharacter& g) {
  const int N = g.n.rank() + 1;
  std::ostringstream os;
  os << "partition,q_exponent,coefficient\n";
  for (const auto& [lam, c] : g.expansion)
    for (const auto& [e, x] : c.terms()) os << '"' << lam.to_string(N) << "\"," << e << ',' << x.get_str() << '\n';
  return os.str();
}

std::string character_text(const GradedCharacter& g) {
  const int N = g.n.rank() + 1;
  std::ostringstream os;
  os << "chi_{" << g.n.to_string() << "} for sl" << N << '\n';
  for (const auto& [lam, c] : g.expansion) os << "  s" << lam.to_string(N) << ": " << qpoly_text(c) << '\n';
  return os.str();
}

nlohmann::ordered_json reports_json(const std::string& suite, const std::vector<CheckReport>& reports) {
  nlohmann::ordered_json j;
  j["schema"] = kSchemaVersion;
  j["suite"] = suite;
  bool all = true;
  auto& arr = j["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    auto rj = r.to_json();
    rj.erase("seconds");
    arr.push_back(rj);
    all = all && r.passed();
  }
  j["pass"] = all;
  return j;
}

std::string reports_csv(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  os << "name,grid,points,failures,pass\n";
  for (const auto& r : reports)
    os << r.name << ",\"" << r.grid.dump() << "\"," << r.points() << ',' << r.failures << ',' << (r.passed() ? "true" : "false") << '\n';
  return os.str();
}

std::string reports_text(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << (r.passed() ? "PASS " : "FAIL ") << r.name << ' ' << r.grid.dump() << ": " << r.points() << " points, " << r.failures
       << " failures\n";
    if (r.counterexample) os << "  counterexample: " << *r.counterexample << '\n';
  }
  return os.str();
}

nlohmann::ordered_json torus_json(int rank, int k, const QTable& table) {
  nlohmann::ordered_json j;
  j["schema"] = kSchemaVersion;
  j["rank"] = rank;
  j["k"] = k;
  auto& q = j["Q"] = nlohmann::ordered_json::object();
  for (int a = 1; a <= rank; ++a) {
    const NcLaurent& f = table.at({a, k});
    q[std::to_string(a)] = {{"terms", f.size()}, {"value", f.to_string()}};
  }
  return j;
}

}  // namespace qchar
