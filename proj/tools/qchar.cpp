#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "qchar/errors.hpp"
#include "qchar/serialize.hpp"
#include "qchar/whittaker.hpp"

using namespace qchar;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kInternal = 3 };

struct Config {
  int rank = 1;
  int level = 1;
  std::string n;
  std::string out;
  std::string suite = "all";
  int bound = 0;
  int order = 20;
  std::string format = "json";
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw InvalidArgument("cannot open " + cfg.out);
  f << text;
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

// the p^(half/2) factor pulled out of every coefficient
std::string prefactor(const TruncatedSeries& s) {
  if (s.half() == 0) return "1";
  return s.half() > 0 ? "p^1/2" : "p^-1/2";
}

int cmd_char(const Config& cfg) {
  const NVector n = NVector::parse(cfg.n, cfg.rank, cfg.level);
  const GradedCharacter g = graded_character(n);
  if (cfg.format == "csv")
    emit(cfg, character_csv(g));
  else if (cfg.format == "text")
    emit(cfg, character_text(g));
  else
    emit(cfg, dump(character_json(g)));
  return kOk;
}

int cmd_verify(const Config& cfg, bool rank_given) {
  SuiteOptions opt;
  opt.rank = rank_given ? cfg.rank : 0;
  opt.bound = cfg.bound;
  opt.order = cfg.order;
  const auto reports = run_suite(cfg.suite, opt);
  bool all = true;
  for (const auto& r : reports) all = all && r.passed();
  if (cfg.format == "csv")
    emit(cfg, reports_csv(reports));
  else if (cfg.format == "text")
    emit(cfg, reports_text(reports));
  else
    emit(cfg, dump(reports_json(cfg.suite, reports)));
  return all ? kOk : kCheckFailed;
}

int cmd_torus(const Config& cfg) {
  const int k = cfg.level;
  const QTable t = q_recursion(cfg.rank, std::max(k, 1), std::min(k, 0));
  if (cfg.format == "json") {
    emit(cfg, dump(torus_json(cfg.rank, k, t)));
    return kOk;
  }
  std::string s = cfg.format == "csv" ? "alpha,k,value\n" : "";
  for (int a = 1; a <= cfg.rank; ++a) {
    const std::string v = t.at({a, k}).to_string();
    s += cfg.format == "csv" ? std::to_string(a) + "," + std::to_string(k) + ",\"" + v + "\"\n"
                             : "Q_{" + std::to_string(a) + "," + std::to_string(k) + "} = " + v + "\n";
  }
  emit(cfg, s);
  return kOk;
}

int cmd_whittaker(const Config& cfg) {
  int n = 0;
  try {
    n = cfg.n.empty() ? 0 : std::stoi(cfg.n);
  } catch (const std::exception&) {
    throw InvalidArgument("--n must be an integer for whittaker");
  }
  if (n < 0) throw InvalidArgument("--n must be nonnegative");
  const TruncatedSeries w = w_series(n, false, cfg.order);
  const TruncatedSeries c = class_one_series(n, cfg.order);
  const TruncatedSeries x = character_series(n, cfg.order);
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = kSchemaVersion;
    j["n"] = n;
    j["order"] = cfg.order;
    j["prefactor"] = {{"W", prefactor(w)}, {"class_one", prefactor(c)}, {"character", prefactor(x)}};
    auto& rows = j["orders"] = nlohmann::ordered_json::array();
    for (int i = 0; i <= cfg.order; ++i)
      rows.push_back({{"u", i},
                      {"W", w.coeff(i).to_string()},
                      {"class_one", c.coeff(i).to_string()},
                      {"character", x.coeff(i).to_string()},
                      {"residual_zero", c.coeff(i) == x.coeff(i)}});
    emit(cfg, dump(j));
  } else {
    std::string s = cfg.format == "csv" ? "u,W,class_one,character\n"
                                        : "prefactors: W " + prefactor(w) + ", class-one " + prefactor(c) + ", chi " + prefactor(x) + "\n";
    for (int i = 0; i <= cfg.order; ++i) {
      if (cfg.format == "csv")
        s += std::to_string(i) + ",\"" + w.coeff(i).to_string() + "\",\"" + c.coeff(i).to_string() + "\",\"" + x.coeff(i).to_string() + "\"\n";
      else
        s += "u^" + std::to_string(i) + ": W " + w.coeff(i).to_string() + " | class-one " + c.coeff(i).to_string() + " | chi " +
             x.coeff(i).to_string() + "\n";
    }
    emit(cfg, s);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded characters of KR-module fusion products and exact identity checks"};
  app.require_subcommand(1);
  Config cfg;
  const std::vector<std::string> formats = {"json", "csv", "text"};

  auto* ch = app.add_subcommand("char", "graded character and its Schur expansion");
  ch->add_option("--rank", cfg.rank, "r for sl(r+1)")->check(CLI::Range(1, 6));
  ch->add_option("--level", cfg.level, "number of levels k")->check(CLI::Range(1, 8));
  ch->add_option("--n", cfg.n, "entries n_i^(a): a = 1..r comma separated, levels separated by ';'")->required();

  auto* ve = app.add_subcommand("verify", "run a verification suite");
  auto* rank_opt = ve->add_option("--rank", cfg.rank, "restrict to one rank")->check(CLI::Range(1, 6));
  ve->add_option("--suite", cfg.suite, "suite name")->check(CLI::IsMember(suite_names()));
  ve->add_option("--bound", cfg.bound, "size bound (0: suite default)")->check(CLI::NonNegativeNumber);
  ve->add_option("--order", cfg.order, "series truncation order")->check(CLI::Range(0, 200));

  auto* to = app.add_subcommand("torus", "Q_{a,k} in the quantum torus of the initial data");
  to->add_option("--rank", cfg.rank, "r")->check(CLI::Range(1, 6));
  to->add_option("--level", cfg.level, "k");

  auto* wh = app.add_subcommand("whittaker", "sl2 Whittaker series coefficients");
  wh->add_option("--n", cfg.n, "n >= 0");
  wh->add_option("--order", cfg.order, "series truncation order")->check(CLI::Range(0, 200));

  for (auto* sub : {ch, ve, to, wh}) {
    sub->add_option("--out", cfg.out, "write to a file instead of stdout");
    sub->add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember(formats));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (ch->parsed()) return cmd_char(cfg);
    if (ve->parsed()) return cmd_verify(cfg, rank_opt->count() > 0);
    if (to->parsed()) return cmd_torus(cfg);
    if (wh->parsed()) return cmd_whittaker(cfg);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IdentityViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
