#include "hsf/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>

#include "CLI11.hpp"

#include "hsf/report.hpp"

namespace hsf::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertionFailed = 1;
constexpr int kExitUsage = 2;

std::ofstream open_output(const RunConfig& config, const std::string& name) {
  std::filesystem::create_directories(config.out);
  const auto path = std::filesystem::path(config.out) / name;
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path.string());
  return os;
}

const char* status_word(AssertionStatus s) {
  switch (s) {
    case AssertionStatus::pass: return "pass";
    case AssertionStatus::fail: return "FAIL";
    case AssertionStatus::inapplicable: return "inapplicable";
  }
  return "?";
}

/// Prints the assertion lines and the verdict; returns the process code.
int report_verdict(const std::vector<Assertion>& assertions) {
  const Assertion* first_fail = nullptr;
  for (const Assertion& a : assertions) {
    std::cout << status_word(a.status) << "  " << a.field;
    if (!a.detail.empty()) std::cout << "  (" << a.detail << ")";
    std::cout << "\n";
    if (a.status == AssertionStatus::fail && first_fail == nullptr)
      first_fail = &a;
  }
  if (first_fail) {
    std::cout << "FAIL " << first_fail->field << "\n";
    return kExitAssertionFailed;
  }
  std::cout << "ok\n";
  return kExitOk;
}

int run_verify(const RunConfig& config) {
  std::optional<Construction> built;
  if (config.construction == "lp_basis") {
    built = lp_unit_basis_hs(config.dim, Exponent(config.p));
  } else if (config.construction == "haar") {
    built = haar_hs_basis(config.level, Exponent(config.p));
  } else {
    std::cerr << "unknown construction for verify: '" << config.construction
              << "' (expected lp_basis or haar)\n";
    return kExitUsage;
  }
  const Construction& c = *built;

  const EstimateOptions opts{64, 200, config.seed};
  const VerifyReport report = run_battery(c, config.samples, config.seed, opts);
  std::vector<Assertion> assertions = battery_assertions(report, config.tol);

  // local duality: each functional must be recovered by its own expansion
  const Eigen::Index probes = std::min<Eigen::Index>(4, c.op.pair.length());
  double duality_worst = 0.0;
  for (Eigen::Index n = 1; n <= probes; ++n) {
    const auto curve = local_duality_curve(c.op, n);
    duality_worst = std::max(duality_worst, curve.back().second);
  }
  assertions.push_back(
      {"local_duality",
       duality_worst <= config.tol ? AssertionStatus::pass : AssertionStatus::fail,
       "max final defect " + format_float(duality_worst) + " over n <= " +
           std::to_string(probes) + " vs tol " + format_float(config.tol)});

  {
    std::ofstream os = open_output(config, "report.json");
    os << to_json(report);
  }
  {
    const Eigen::Index n_curve = std::min<Eigen::Index>(3, c.op.pair.length());
    std::ofstream os = open_output(config, "local_duality.csv");
    write_curve_csv(os, local_duality_curve(c.op, n_curve), "n", "defect");
  }

  std::cout << to_json(report);
  return report_verdict(assertions);
}

int run_demo_counterexample(const RunConfig& config) {
  const CounterexamplePair ce = l1_counterexample(config.dim);
  std::vector<Assertion> assertions;

  {
    std::ofstream os = open_output(config, "one_expansion.csv");
    os << "n,defect\n";
    bool all_one = true;
    for (long n = 1; n <= ce.length(); ++n) {
      const Dyadic d = one_expansion_defect(ce, n);
      os << n << "," << format_float(d.to_double()) << "\n";
      if (n % 2 == 0 && !(d == Dyadic{1})) all_one = false;
    }
    assertions.push_back({"one_expansion_defect",
                          all_one ? AssertionStatus::pass : AssertionStatus::fail,
                          "defect exactly 1 at every even n <= " +
                              std::to_string(ce.length())});
  }
  {
    std::ofstream os = open_output(config, "reconstruction.csv");
    os << "k,n,defect\n";
    bool all_zero = true;
    for (long k = 1; k <= ce.pairs; ++k)
      for (long n = 1; n <= ce.length(); ++n) {
        const Dyadic d = reconstruction_defect(ce, k, n);
        os << k << "," << n << "," << format_float(d.to_double()) << "\n";
        if (n % 2 == 0 && n >= 2 * k && !d.is_zero()) all_zero = false;
      }
    assertions.push_back({"reconstruction_defect",
                          all_zero ? AssertionStatus::pass : AssertionStatus::fail,
                          "defect exactly 0 at even n >= 2k"});
  }
  return report_verdict(assertions);
}

int run_demo_lq(const RunConfig& config) {
  std::vector<Eigen::Index> ns;
  for (Eigen::Index n = 1; n <= config.dim; n *= 2) ns.push_back(n);
  const EstimateOptions opts{64, 200, config.seed};
  const Exponent q{config.p};
  const auto rows = lq_nonexistence_demo({q}, ns, opts);

  std::ofstream os = open_output(config, "lq_divergence.csv");
  os << "q,N,exact,estimate\n";
  bool formula_ok = true, estimate_ok = true, growing = true;
  double prev = 0.0;
  for (const LqTableRow& row : rows) {
    os << format_float(row.q) << "," << row.n << "," << format_float(row.exact)
       << "," << format_float(row.estimate) << "\n";
    const double closed_form =
        std::pow(static_cast<double>(row.n), q.conjugate().inverse() - q.inverse());
    if (std::abs(row.exact - closed_form) > 1e-10) formula_ok = false;
    if (std::abs(row.estimate - row.exact) > 1e-3 * row.exact) estimate_ok = false;
    if (row.exact < prev) growing = false;
    prev = row.exact;
  }

  std::vector<Assertion> assertions;
  assertions.push_back({"lq_exact_formula",
                        formula_ok ? AssertionStatus::pass : AssertionStatus::fail,
                        "table equals N^(1/p - 1/q) within 1e-10"});
  assertions.push_back({"lq_estimate_agreement",
                        estimate_ok ? AssertionStatus::pass : AssertionStatus::fail,
                        "sphere maximization within 1e-3 relative"});
  assertions.push_back({"lq_growth",
                        growing ? AssertionStatus::pass : AssertionStatus::fail,
                        "norms nondecreasing in N (divergence shadow)"});
  return report_verdict(assertions);
}

int run_demo_embedding(const RunConfig& config) {
  const Exponent p{config.p};
  std::vector<HSfOperator> family;
  for (Eigen::Index n = 2; n <= config.dim; n *= 2)
    family.push_back(lp_unit_basis_hs(n, p).op);
  if (family.empty()) {
    std::cerr << "embedding demo needs --dim >= 2\n";
    return kExitUsage;
  }
  const EstimateOptions opts{64, 200, config.seed};
  const auto curve = hilbert_embedding_diagnostic(family, opts);

  std::ofstream os = open_output(config, "embedding.csv");
  os << "N,lower_bound,reference\n";
  bool positive = true, matches = true, monotone = true, constant_one = true;
  double prev = std::numeric_limits<double>::infinity();
  for (const auto& [n, lb] : curve) {
    // the flat vector minimizes ||x||_2 on the unit p-sphere for p <= 2
    const double reference = std::pow(static_cast<double>(n), 0.5 - p.inverse());
    os << n << "," << format_float(lb) << "," << format_float(reference) << "\n";
    if (!(lb > 0.0)) positive = false;
    if (std::abs(lb - reference) > 1e-3) matches = false;
    if (lb > prev + 1e-9) monotone = false;
    if (std::abs(lb - 1.0) > 1e-9) constant_one = false;
    prev = lb;
  }

  std::vector<Assertion> assertions;
  assertions.push_back({"embedding_positive",
                        positive ? AssertionStatus::pass : AssertionStatus::fail,
                        "lower bounds stay away from zero"});
  assertions.push_back({"embedding_reference",
                        matches ? AssertionStatus::pass : AssertionStatus::fail,
                        "matches the flat-profile value N^(1/2 - 1/p) within 1e-3"});
  assertions.push_back({"embedding_monotone",
                        monotone ? AssertionStatus::pass : AssertionStatus::fail,
                        "nonincreasing in N"});
  if (p.value() == 2.0)
    assertions.push_back({"embedding_isometry",
                          constant_one ? AssertionStatus::pass : AssertionStatus::fail,
                          "curve constantly 1 within 1e-9 at p = 2"});
  return report_verdict(assertions);
}

int run_demo(const RunConfig& config) {
  if (config.construction == "l1_counterexample")
    return run_demo_counterexample(config);
  if (config.construction == "lq_demo") return run_demo_lq(config);
  if (config.construction == "embedding") return run_demo_embedding(config);
  std::cerr << "unknown construction for demo: '" << config.construction
            << "' (expected l1_counterexample, lq_demo or embedding)\n";
  return kExitUsage;
}

void add_common_options(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("construction,--construction", config.construction,
                  "construction id");
  cmd->add_option("--p", config.p, "exponent p (q for lq_demo)");
  cmd->add_option("--dim", config.dim, "truncation N / demo grid limit");
  cmd->add_option("--level", config.level, "dyadic level L");
  cmd->add_option("--seed", config.seed, "random seed");
  cmd->add_option("--tol", config.tol, "defect tolerance");
  cmd->add_option("--samples", config.samples, "random samples per check");
  cmd->add_option("--out", config.out, "output directory");
}

}  // namespace

int cmd_verify(const RunConfig& config) {
  try {
    return run_verify(config);
  } catch (const std::invalid_argument& e) {
    std::cerr << "out of scope: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_demo(const RunConfig& config) {
  try {
    return run_demo(config);
  } catch (const std::invalid_argument& e) {
    std::cerr << "out of scope: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run(const std::vector<std::string>& args) {
  CLI::App app{"numerical diagnostics for sequence-space frame operators"};
  app.require_subcommand(1);

  RunConfig config;
  CLI::App* verify = app.add_subcommand(
      "verify", "run the verification battery on a construction");
  add_common_options(verify, config);
  CLI::App* demo = app.add_subcommand(
      "demo", "emit the counterexample, divergence and embedding curves");
  add_common_options(demo, config);

  std::vector<const char*> argv;
  argv.push_back("hsframes");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  if (const char* env = std::getenv("HSFRAMES_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
      std::cerr << "HSFRAMES_SEED is not an integer: '" << env << "'\n";
      return kExitUsage;
    }
    config.seed = v;
  }

  return verify->parsed() ? cmd_verify(config) : cmd_demo(config);
}

}  // namespace hsf::cli
