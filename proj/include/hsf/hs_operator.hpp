#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hsf/frames.hpp"
#include "hsf/norm_estimate.hpp"

namespace hsf {

/// Thrown when a candidate array fails S x_j = f_j at some index.
class DefiningPropertyError : public std::runtime_error {
 public:
  DefiningPropertyError(Eigen::Index index, double defect)
      : std::runtime_error("defining property fails at index " +
                           std::to_string(index) + " with defect " +
                           std::to_string(defect)),
        index_(index),
        defect_(defect) {}

  Eigen::Index index() const { return index_; }
  double defect() const { return defect_; }

 private:
  Eigen::Index index_;
  double defect_;
};

/// A frame pair together with an array S that maps each x_j to f_j within
/// tol in the conjugate norm. make_hsf is the only way to build one, so a
/// constructed value always satisfies the defining property.
struct HSfOperator {
  OperatorArray S;  // N x N, domain p, codomain q
  FramePair pair;
  double tol = 1e-10;
  double defining_defect = 0.0;  // max_j ||S x_j - f_j||_q at acceptance
};

/// Validates max_j ||S x_j - f_j||_q <= tol and returns the operator;
/// throws DefiningPropertyError naming the first offending index otherwise.
/// Only the defining property is checked here: symmetry, positivity and
/// injectivity are consequences probed by check_structure, so deliberately
/// broken arrays can be studied by fitting them to a pair they do satisfy.
HSfOperator make_hsf(FramePair pair, OperatorArray S, double tol = 1e-10);

struct StructureReport {
  double symmetry_defect = 0.0;          // max |S - S^T|
  double sampled_positivity_min = 0.0;   // min over samples of (Sx)(x)/||x||_p^2
  double min_eigenvalue = 0.0;           // of the symmetrized array, exact
  double sigma_min = 0.0;                // smallest singular value
};

/// Symmetry, positivity and injectivity diagnostics at this truncation.
StructureReport check_structure(const HSfOperator& op, int samples,
                                std::uint64_t seed);

struct QuadraticFormSides {
  double lhs = 0.0;  // (Sx)(x)
  double rhs = 0.0;  // sum_j f_j(x)^2
};

/// Both sides of the quadratic-form identity at a single point.
QuadraticFormSides quadratic_form_identity(const HSfOperator& op,
                                           const SeqVec& x);

struct BesselReport {
  double max_ratio = 0.0;   // max over samples of sum_j f_j(x)^2 / ||x||_p^2
  double mean_ratio = 0.0;
  double norm_bound = 0.0;  // ||S||: exact when supplied, else a lower estimate
  bool bound_is_exact = false;
};

/// Samples the Bessel ratio over random x. When no exact norm is supplied
/// the bound reported is max(direct ascent on S, squared analysis-operator
/// ascent); both are suprema of evaluated ratios of the same quantity, so
/// the bound is a certified lower estimate of ||S||.
BesselReport bessel_bound_check(const HSfOperator& op, int samples,
                                std::uint64_t seed,
                                std::optional<double> exact_norm = {},
                                const EstimateOptions& opts = {});

/// Rows are the f_j: maps the exponent-p space into l2 coefficient space.
OperatorArray analysis_operator(const HSfOperator& op);

double analysis_norm_estimate(const HSfOperator& op,
                              const EstimateOptions& opts = {});

/// max elementwise |S - A^T A| with A the analysis operator. Zero to
/// roundoff exactly when S is the operator its own pair generates.
double factorization_check(const HSfOperator& op);

/// Least-squares array with S x_j ~ f_j, via a rank-revealing orthogonal
/// decomposition of the x-side. When the x_j span, this is the unique
/// candidate; the defect of the fit says whether the pair admits an HSf
/// array at all.
OperatorArray hsf_array_from_pair(const FramePair& pair);

struct UniquenessReport {
  bool applicable = false;     // both pairs admit HSf arrays at tol
  bool shares_vectors = false; // true: common x_j; false: common f_j
  double max_partner_defect = 0.0;   // max_j norm of the non-shared side's gap
  double max_operator_defect = 0.0;  // max |S_1 - S_2|
  std::string reason;                // set when inapplicable
};

/// Fits arrays to two pairs that share one side and reports how far the
/// other side, and the arrays themselves, can differ. For genuine HSf pairs
/// sharing their vectors both defects vanish: the operator determines the
/// functionals. Throws on shape mismatch or when neither side is shared.
UniquenessReport uniqueness_probe(const FramePair& a, const FramePair& b,
                                  double tol = 1e-10);

/// Defect curve of the expansion f_n = sum_{j<=m} f_n(x_j) f_j in the
/// conjugate norm, for m = 1..J. n is 1-based.
std::vector<std::pair<Eigen::Index, double>> local_duality_curve(
    const FramePair& pair, Eigen::Index n);
std::vector<std::pair<Eigen::Index, double>> local_duality_curve(
    const HSfOperator& op, Eigen::Index n);

/// (N, min ||Ax||_2 over the unit p-sphere) for each member of a family of
/// operators at growing truncations. Curves bounded away from zero are the
/// finite signature of the analysis operator embedding the space into l2.
std::vector<std::pair<Eigen::Index, double>> hilbert_embedding_diagnostic(
    const std::vector<HSfOperator>& family, const EstimateOptions& opts = {});

}  // namespace hsf
