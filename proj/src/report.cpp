#include "hsf/report.hpp"

#include <cmath>
#include <cstdio>

#include "hsf/rng.hpp"

namespace hsf {

std::string format_float(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

VerifyReport run_battery(const Construction& c, int samples,
                         std::uint64_t seed, const EstimateOptions& opts) {
  if (samples < 1)
    throw std::invalid_argument("run_battery: samples must be >= 1");
  const HSfOperator& op = c.op;
  VerifyReport r;
  r.construction = c.name;
  r.n = op.pair.dim();
  r.p = op.pair.p;
  r.q = op.pair.q();
  r.defining_defect = op.defining_defect;

  const StructureReport st = check_structure(op, samples, seed);
  r.symmetry_defect = st.symmetry_defect;
  r.min_eigenvalue = st.min_eigenvalue;
  r.sigma_min = st.sigma_min;

  // quadratic-form identity over its own sample stream
  Rng rng(seed, 1);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const SeqVec x{rng.normal_vector(op.pair.dim()), op.pair.p};
    const QuadraticFormSides sides = quadratic_form_identity(op, x);
    const double err = std::abs(sides.lhs - sides.rhs) / (1.0 + std::abs(sides.lhs));
    if (err > worst) worst = err;
  }
  r.eq1_max_relative_error = worst;

  const BesselReport bessel =
      bessel_bound_check(op, samples, seed, c.exact_s_norm, opts);
  r.bessel_max_ratio = bessel.max_ratio;
  r.s_norm_bound = bessel.norm_bound;
  r.s_norm_is_exact = bessel.bound_is_exact;

  r.factorization_defect = factorization_check(op);
  r.analysis_norm_estimate = analysis_norm_estimate(op, opts);
  return r;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}

std::string json_exponent(const Exponent& e) {
  return e.is_infinite() ? "\"inf\"" : format_float(e.value());
}

}  // namespace

std::string to_json(const VerifyReport& r) {
  std::string s;
  s += "{\n";
  s += "  \"construction\": \"" + json_escape(r.construction) + "\",\n";
  s += "  \"N\": " + std::to_string(r.n) + ",\n";
  s += "  \"p\": " + json_exponent(r.p) + ",\n";
  s += "  \"q\": " + json_exponent(r.q) + ",\n";
  s += "  \"defining_defect\": " + format_float(r.defining_defect) + ",\n";
  s += "  \"symmetry_defect\": " + format_float(r.symmetry_defect) + ",\n";
  s += "  \"min_eigenvalue\": " + format_float(r.min_eigenvalue) + ",\n";
  s += "  \"sigma_min\": " + format_float(r.sigma_min) + ",\n";
  s += "  \"eq1_max_relative_error\": " + format_float(r.eq1_max_relative_error) + ",\n";
  s += "  \"bessel_max_ratio\": " + format_float(r.bessel_max_ratio) + ",\n";
  s += "  \"s_norm_bound\": " + format_float(r.s_norm_bound) + ",\n";
  s += "  \"s_norm_is_exact\": " + std::string(r.s_norm_is_exact ? "true" : "false") + ",\n";
  s += "  \"factorization_defect\": " + format_float(r.factorization_defect) + ",\n";
  s += "  \"analysis_norm_estimate\": " + format_float(r.analysis_norm_estimate) + "\n";
  s += "}\n";
  return s;
}

std::vector<Assertion> battery_assertions(const VerifyReport& r, double tol) {
  std::vector<Assertion> out;
  auto check = [&out](const std::string& field, bool ok, const std::string& detail) {
    out.push_back({field, ok ? AssertionStatus::pass : AssertionStatus::fail, detail});
  };

  check("defining_defect", r.defining_defect <= tol,
        format_float(r.defining_defect) + " vs tol " + format_float(tol));
  check("symmetry_defect", r.symmetry_defect <= tol,
        format_float(r.symmetry_defect) + " vs tol " + format_float(tol));
  check("min_eigenvalue", r.min_eigenvalue >= -tol,
        format_float(r.min_eigenvalue) + " vs -tol " + format_float(-tol));
  check("eq1_max_relative_error", r.eq1_max_relative_error <= 1e-9,
        format_float(r.eq1_max_relative_error) + " vs 1e-9");
  check("factorization_defect", r.factorization_defect <= 1e-12,
        format_float(r.factorization_defect) + " vs 1e-12");

  if (r.s_norm_is_exact) {
    // sharp bound: allow evaluation roundoff only
    const bool ok = r.bessel_max_ratio <= r.s_norm_bound * (1.0 + 1e-12);
    check("bessel_max_ratio", ok,
          format_float(r.bessel_max_ratio) + " vs exact bound " +
              format_float(r.s_norm_bound));
  } else {
    out.push_back({"bessel_max_ratio", AssertionStatus::inapplicable,
                   "norm bound " + format_float(r.s_norm_bound) +
                       " is a lower estimate; ratio " +
                       format_float(r.bessel_max_ratio) + " reported, not asserted"});
  }

  check("analysis_norm_estimate",
        r.analysis_norm_estimate <= std::sqrt(r.s_norm_bound) + 1e-6,
        format_float(r.analysis_norm_estimate) + " vs sqrt(s_norm_bound) + 1e-6 = " +
            format_float(std::sqrt(r.s_norm_bound) + 1e-6));
  return out;
}

void write_curve_csv(std::ostream& os,
                     const std::vector<std::pair<Eigen::Index, double>>& curve,
                     const std::string& index_name,
                     const std::string& value_name) {
  os << index_name << "," << value_name << "\n";
  for (const auto& [idx, value] : curve)
    os << idx << "," << format_float(value) << "\n";
}

}  // namespace hsf
