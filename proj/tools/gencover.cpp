#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gencover/bounds.hpp"
#include "gencover/io.hpp"
#include "gencover/montecarlo.hpp"
#include "gencover/planner.hpp"
#include "gencover/radii.hpp"
#include "gencover/weights.hpp"

using namespace gencover;

namespace {

enum Exit { Ok = 0, Usage = 1, Input = 2, Infeasible = 3, Violation = 4 };

int exit_for(const Error& e) {
  switch (e.code()) {
    case Errc::SyndromeSpaceTooLarge:
    case Errc::SearchTooLarge:
    case Errc::MethodInfeasible:
    case Errc::Infeasible:
      return Infeasible;
    case Errc::PropertyViolation:
      return Violation;
    default:
      return Input;
  }
}

std::uint64_t state_cap() {
  const char* env = std::getenv("GENCOVER_STATE_CAP");
  if (!env) return SearchLimits{}.state_cap;
  const std::string s(env);
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19)
    throw Error(Errc::ParseError, "GENCOVER_STATE_CAP must be a positive integer");
  const auto cap = std::stoull(s);
  if (cap == 0) throw Error(Errc::ParseError, "GENCOVER_STATE_CAP must be a positive integer");
  return cap;
}

LinearCode load_code(const std::string& path) {
  auto code = read_code_file(path);
  if (code.rank_dropped())
    std::cerr << "warning: generator of " << path << " is rank deficient; using k = " << code.k()
              << "\n";
  return code;
}

std::string join(const std::vector<std::size_t>& v, const char* sep = " ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
  return out.str();
}

std::string hierarchy_line(const std::vector<std::size_t>& values, const char* symbol = "R") {
  std::ostringstream out;
  for (std::size_t t = 0; t < values.size(); ++t)
    out << (t ? " " : "") << symbol << "_" << t + 1 << "=" << values[t];
  return out.str();
}

void print_witnesses(const RadiiReport& report) {
  for (const auto& e : report.entries) {
    std::cout << "t=" << e.t << " value=" << e.value << " method=" << method_name(e.method)
              << (e.trivial ? " trivial" : "") << " columns={" << join(e.witness_columns, ",")
              << "} syndromes=";
    for (std::size_t i = 0; i < e.witness_syndromes.size(); ++i) {
      std::cout << (i ? ";" : "") << "(";
      for (std::size_t j = 0; j < e.witness_syndromes[i].size(); ++j)
        std::cout << (j ? "," : "") << e.witness_syndromes[i][j];
      std::cout << ")";
    }
    std::cout << "\n";
  }
}

struct Options {
  std::string code, code2, syndromes, out, method = "lifted", plan_method = "exact", op;
  std::size_t t_max = 1, t = 1, n = 0, k = 0, r = 0, trials = 100;
  std::optional<std::size_t> at, check_radii, t_max_opt;
  std::uint64_t q = 2, seed = 1;
  double rho = 0.5, rho_min = 0, rho_max = 1, step = 0.01;
  bool json = false, xv = false;
};

int cmd_radii(const Options& o) {
  const auto code = load_code(o.code);
  const SearchLimits limits{state_cap()};
  if (o.method != "all") {
    const auto m = parse_method(o.method);
    const auto report = radii_hierarchy(code, o.t_max, *m, limits);
    if (o.json) {
      std::cout << to_json(report).dump(2) << "\n";
    } else {
      std::cout << hierarchy_line(report.values()) << "\n";
      print_witnesses(report);
    }
    return Ok;
  }

  nlohmann::json all = nlohmann::json::object();
  std::optional<std::vector<std::size_t>> reference;
  bool disagree = false, infeasible = false;
  std::ostringstream text;
  for (Method m : {Method::Lifted, Method::SpanCover, Method::BallCover}) {
    try {
      const auto report = radii_hierarchy(code, o.t_max, m, limits);
      all[method_name(m)] = to_json(report);
      text << method_name(m) << ": " << hierarchy_line(report.values()) << "\n";
      if (!reference) reference = report.values();
      else if (*reference != report.values()) disagree = true;
    } catch (const Error& e) {
      if (!e.is_capacity()) throw;
      infeasible = true;
      all[method_name(m)] = nullptr;
      text << method_name(m) << ": infeasible (" << e.what() << ")\n";
    }
  }
  if (o.json) {
    std::cout << all.dump(2) << "\n";
  } else {
    if (reference && !disagree) std::cout << hierarchy_line(*reference) << "\n";
    std::cout << text.str();
  }
  if (disagree) {
    std::cerr << "error: methods disagree\n";
    return Violation;
  }
  if (infeasible) return Infeasible;
  return Ok;
}

int cmd_weights(const Options& o) {
  const auto code = load_code(o.code);
  const WeightLimits limits{state_cap()};
  const std::size_t t_max = o.t_max_opt.value_or(code.k());
  std::vector<std::size_t> d, delta;
  for (std::size_t t = 1; t <= t_max; ++t) {
    d.push_back(generalized_weight(code, t, limits));
    delta.push_back((d.back() - 1) / 2);
  }
  std::cout << hierarchy_line(d, "d") << "\n" << hierarchy_line(delta, "delta") << "\n";
  return Ok;
}

int cmd_ball(const Options& o) {
  std::cout << ball_volume(o.t, o.r, o.n, o.q) << "\n";
  return Ok;
}

int cmd_bounds(const Options& o) {
  const auto points = emit_curve(o.rho_min, o.rho_max, o.step);
  if (o.out.empty()) {
    write_csv(std::cout, points);
    return Ok;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw Error(Errc::ParseError, "cannot write '" + o.out + "'");
  write_csv(file, points);
  return Ok;
}

int cmd_plan(const Options& o) {
  const auto code = load_code(o.code);
  const Matrix& H = code.parity_check();
  const auto syndromes = read_syndrome_file(o.syndromes, H.rows(), code.field()->order());
  BatchPlan plan = o.plan_method == "greedy" ? plan_greedy(H, syndromes)
                                        : plan_exact(H, syndromes, PlanLimits{state_cap()});
  if (!verify_plan(H, syndromes, plan)) throw Error(Errc::PropertyViolation, "plan failed to verify");
  if (o.json) {
    std::cout << to_json(plan).dump(2) << "\n";
    return Ok;
  }
  std::cout << "size=" << plan.size() << " method=" << plan_method_name(plan.method) << " columns={"
            << join(plan.columns, ",") << "}\n";
  for (std::size_t i = 0; i < syndromes.size(); ++i) {
    std::cout << "syndrome " << i << ":";
    for (std::size_t j = 0; j < plan.size(); ++j)
      std::cout << " " << plan.coefficients(i, j) << "*h" << plan.columns[j];
    std::cout << "\n";
  }
  return Ok;
}

int cmd_ops(const Options& o) {
  const auto c1 = load_code(o.code);
  std::optional<LinearCode> c2;
  const bool binary_op = o.op == "uuv" || o.op == "dsum";
  const bool positional = o.op == "puncture" || o.op == "shorten";
  if ((binary_op && o.code2.empty()) || (positional && !o.at)) {
    std::cerr << "error: --op " << o.op << " needs " << (binary_op ? "--code2" : "--at") << "\n";
    return Usage;
  }
  if (binary_op) c2 = load_code(o.code2);

  LinearCode result = [&] {
    if (o.op == "puncture") return puncture(c1, *o.at);
    if (o.op == "shorten") return shorten(c1, *o.at);
    if (o.op == "extend") return extend(c1);
    if (o.op == "uuv") return u_uplusv(c1, *c2);
    return direct_sum(c1, *c2);
  }();

  if (!o.check_radii) {
    write_code(std::cout, result);
    return Ok;
  }
  const std::size_t T = *o.check_radii;
  const SearchLimits limits{state_cap()};
  const auto before = radii_hierarchy(c1, T, Method::Lifted, limits).values();
  const auto after = radii_hierarchy(result, T, Method::Lifted, limits).values();
  std::vector<std::size_t> other;
  if (c2) other = radii_hierarchy(*c2, T, Method::Lifted, limits).values();
  std::cout << (c2 ? "C1: " : "C: ") << hierarchy_line(before) << "\n";
  if (c2) std::cout << "C2: " << hierarchy_line(other) << "\n";
  std::cout << o.op << ": " << hierarchy_line(after) << "\n";

  bool ok = true;
  for (std::size_t i = 0; i < T; ++i) {
    const std::size_t t = i + 1, r = before[i], a = after[i];
    std::string claim;
    bool held = true;
    if (o.op == "puncture") {
      claim = "R_t(C*) in {R_t, R_t-1}";
      held = a == r || a + 1 == r;
    } else if (o.op == "extend") {
      claim = "R_t(ext C) in {R_t, R_t+1}";
      held = a == r || a == r + 1;
    } else if (o.op == "uuv") {
      claim = "R_t((u,u+v)) <= R_t(C1)+R_t(C2)";
      held = a <= r + other[i];
    } else if (o.op == "dsum") {
      claim = "R_t(C1+C2) = R_t(C1)+R_t(C2)";
      held = a == r + other[i];
    } else {
      std::cout << "t=" << t << " shorten: no proposition to check\n";
      continue;
    }
    std::cout << "t=" << t << " " << claim << ": " << (held ? "OK" : "VIOLATED") << "\n";
    ok = ok && held;
  }
  return ok ? Ok : Violation;
}

int cmd_mc(const Options& o) {
  const SearchLimits limits{state_cap()};
  auto summary = estimate_r2_success(o.n, o.k, o.rho, o.trials, o.seed, limits);
  const auto r = static_cast<std::size_t>(std::floor(o.rho * static_cast<double>(o.n) + 1e-9));
  if (o.xv) {
    const Matrix v(Field::create(2), 2, o.n);
    summary.mean_xv = empirical_xv(o.n, o.k, r, v, o.trials, o.seed);
  }
  std::cout.precision(6);
  std::cout << std::fixed << "trials=" << summary.trials << " seed=" << summary.seed << " r=" << r
            << "\nsuccess_fraction=" << summary.success_fraction << "\n";
  if (o.k >= 2)
    std::cout << "exact_expectation=" << summary.exact_expectation
              << "\nebound_low=" << summary.ebound_low << "\nebound_high=" << summary.ebound_high
              << "\n";
  if (o.xv) std::cout << "mean_xv=" << summary.mean_xv << "\n";
  return Ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized covering radii of linear codes"};
  app.require_subcommand(1);
  Options o;

  auto* radii = app.add_subcommand("radii", "Compute R_1..R_T with witnesses");
  radii->add_option("--code", o.code, "Code file")->required();
  radii->add_option("--t-max", o.t_max, "Largest t")->required()->check(CLI::PositiveNumber);
  radii->add_option("--method", o.method, "lifted|span|ball|all")
      ->check(CLI::IsMember({"lifted", "span", "ball", "all"}));
  radii->add_flag("--json", o.json, "JSON output");

  auto* weights = app.add_subcommand("weights", "Generalized Hamming weights and packing radii");
  weights->add_option("--code", o.code, "Code file")->required();
  weights->add_option("--t-max", o.t_max_opt, "Largest t (default k)")->check(CLI::PositiveNumber);

  auto* ball = app.add_subcommand("ball", "Volume of a t-ball");
  ball->add_option("--q", o.q, "Field size")->required()->check(CLI::Range(2, 1 << 30));
  ball->add_option("--t", o.t, "Block height")->required()->check(CLI::PositiveNumber);
  ball->add_option("--n", o.n, "Length")->required();
  ball->add_option("--r", o.r, "Radius")->required();

  auto* bounds = app.add_subcommand("bounds", "Rate bound curves as CSV");
  bounds->add_option("--rho-min", o.rho_min, "Smallest rho");
  bounds->add_option("--rho-max", o.rho_max, "Largest rho");
  bounds->add_option("--step", o.step, "Sampling step");
  bounds->add_option("--out", o.out, "CSV path (default stdout)");

  auto* plan = app.add_subcommand("plan", "Minimal column set covering a syndrome batch");
  plan->add_option("--code", o.code, "Code file")->required();
  plan->add_option("--syndromes", o.syndromes, "Syndrome file")->required();
  plan->add_option("--method", o.plan_method, "exact|greedy")
      ->check(CLI::IsMember({"exact", "greedy"}));
  plan->add_flag("--json", o.json, "JSON output");

  auto* ops = app.add_subcommand("ops", "Apply a code operation");
  ops->add_option("--code", o.code, "Code file")->required();
  ops->add_option("--code2", o.code2, "Second code file (uuv, dsum)");
  ops->add_option("--op", o.op, "puncture|extend|shorten|uuv|dsum")
      ->required()
      ->check(CLI::IsMember({"puncture", "extend", "shorten", "uuv", "dsum"}));
  ops->add_option("--at", o.at, "Coordinate for puncture/shorten (0-based)");
  ops->add_option("--check-radii", o.check_radii, "Check the radius propositions up to T")
      ->check(CLI::PositiveNumber);

  auto* mc = app.add_subcommand("mc", "Random-code experiments");
  mc->add_option("--n", o.n, "Length")->required()->check(CLI::PositiveNumber);
  mc->add_option("--k", o.k, "Dimension")->required()->check(CLI::PositiveNumber);
  mc->add_option("--rho", o.rho, "Normalized radius")->required();
  mc->add_option("--trials", o.trials, "Trials")->check(CLI::PositiveNumber);
  mc->add_option("--seed", o.seed, "Seed");
  mc->add_flag("--xv", o.xv, "Also estimate E[X_v] at v = 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return Usage;
  }

  try {
    if (*radii) return cmd_radii(o);
    if (*weights) return cmd_weights(o);
    if (*ball) return cmd_ball(o);
    if (*bounds) return cmd_bounds(o);
    if (*plan) return cmd_plan(o);
    if (*ops) return cmd_ops(o);
    if (*mc) return cmd_mc(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e);
  }
  return Usage;
}
