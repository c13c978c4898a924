#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hsf/constructions.hpp"

namespace hsf {

/// Summary of the verification battery for one construction. to_json
/// serializes it with exactly this field order and 17-significant-digit
/// floats, so equal reports are byte-identical.
struct VerifyReport {
  std::string construction;
  Eigen::Index n = 0;
  Exponent p{2.0};
  Exponent q{2.0};
  double defining_defect = 0.0;
  double symmetry_defect = 0.0;
  double min_eigenvalue = 0.0;
  double sigma_min = 0.0;
  double eq1_max_relative_error = 0.0;
  double bessel_max_ratio = 0.0;
  double s_norm_bound = 0.0;
  bool s_norm_is_exact = false;
  double factorization_defect = 0.0;
  double analysis_norm_estimate = 0.0;
};

/// Runs every diagnostic on a construction: structure, the quadratic-form
/// identity over random samples, the Bessel ratio, factorization through l2
/// and the norm estimates. Deterministic in (samples, seed, opts).
VerifyReport run_battery(const Construction& c, int samples,
                         std::uint64_t seed, const EstimateOptions& opts = {});

std::string to_json(const VerifyReport& r);

enum class AssertionStatus { pass, fail, inapplicable };

struct Assertion {
  std::string field;
  AssertionStatus status = AssertionStatus::pass;
  std::string detail;
};

/// The battery's pass/fail lines. `tol` guards the defect fields; identity
/// and bound checks carry their own fixed tolerances. Checks that need an
/// exact norm are reported as inapplicable when only an estimate exists.
std::vector<Assertion> battery_assertions(const VerifyReport& r, double tol);

/// Two-column CSV with header, comma separator and LF line ends.
void write_curve_csv(std::ostream& os,
                     const std::vector<std::pair<Eigen::Index, double>>& curve,
                     const std::string& index_name,
                     const std::string& value_name);

/// Fixed-format float used by every emitter: enough digits to round-trip.
std::string format_float(double v);

}  // namespace hsf
