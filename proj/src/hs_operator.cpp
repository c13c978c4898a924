#include "hsf/hs_operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "hsf/rng.hpp"

namespace hsf {

HSfOperator make_hsf(FramePair pair, OperatorArray S, double tol) {
  if (S.entries.rows() != pair.dim() || S.entries.cols() != pair.dim())
    throw std::invalid_argument("make_hsf: array shape does not match pair");
  if (S.domain != pair.p || S.codomain != pair.q())
    throw std::invalid_argument("make_hsf: array exponents do not match pair");
  if (!(tol >= 0.0))
    throw std::invalid_argument("make_hsf: tol must be nonnegative");
  const Eigen::MatrixXd defect = S.entries * pair.xs - pair.fs;
  double worst = 0.0;
  for (Eigen::Index j = 0; j < pair.length(); ++j) {
    const double d = lp_norm(defect.col(j), pair.q());
    if (d > tol) throw DefiningPropertyError(j + 1, d);
    if (d > worst) worst = d;
  }
  return HSfOperator{std::move(S), std::move(pair), tol, worst};
}

StructureReport check_structure(const HSfOperator& op, int samples,
                                std::uint64_t seed) {
  if (samples < 1)
    throw std::invalid_argument("check_structure: samples must be >= 1");
  const Eigen::MatrixXd& S = op.S.entries;
  StructureReport r;
  r.symmetry_defect = (S - S.transpose()).cwiseAbs().maxCoeff();

  Rng rng(seed);
  double worst = std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    Eigen::VectorXd x = rng.normal_vector(S.cols());
    const double n = lp_norm(x, op.pair.p);
    if (n == 0.0) continue;
    const double ratio = x.dot(S * x) / (n * n);
    if (ratio < worst) worst = ratio;
  }
  r.sampled_positivity_min = worst;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (S + S.transpose()));
  if (eig.info() != Eigen::Success)
    throw std::runtime_error("check_structure: eigendecomposition failed");
  r.min_eigenvalue = eig.eigenvalues().minCoeff();

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(S);
  r.sigma_min = svd.singularValues().minCoeff();
  return r;
}

QuadraticFormSides quadratic_form_identity(const HSfOperator& op,
                                           const SeqVec& x) {
  if (x.exponent != op.pair.p)
    throw std::invalid_argument("quadratic_form_identity: exponent mismatch");
  if (x.coeffs.size() != op.pair.dim())
    throw std::invalid_argument("quadratic_form_identity: length mismatch");
  QuadraticFormSides sides;
  sides.lhs = x.coeffs.dot(op.S.entries * x.coeffs);
  sides.rhs = (op.pair.fs.transpose() * x.coeffs).squaredNorm();
  return sides;
}

BesselReport bessel_bound_check(const HSfOperator& op, int samples,
                                std::uint64_t seed,
                                std::optional<double> exact_norm,
                                const EstimateOptions& opts) {
  if (samples < 1)
    throw std::invalid_argument("bessel_bound_check: samples must be >= 1");
  BesselReport r;
  Rng rng(seed);
  double sum = 0.0;
  int used = 0;
  for (int s = 0; s < samples; ++s) {
    Eigen::VectorXd x = rng.normal_vector(op.pair.dim());
    const double n = lp_norm(x, op.pair.p);
    if (n == 0.0) continue;
    const double ratio =
        (op.pair.fs.transpose() * x).squaredNorm() / (n * n);
    if (ratio > r.max_ratio) r.max_ratio = ratio;
    sum += ratio;
    ++used;
  }
  if (used > 0) r.mean_ratio = sum / used;

  if (exact_norm) {
    r.norm_bound = *exact_norm;
    r.bound_is_exact = true;
  } else {
    const double direct = operator_norm_estimate(op.S, opts);
    const double viaA = analysis_norm_estimate(op, opts);
    r.norm_bound = std::max(direct, viaA * viaA);
    r.bound_is_exact = false;
  }
  return r;
}

OperatorArray analysis_operator(const HSfOperator& op) {
  return OperatorArray{op.pair.fs.transpose(), op.pair.p, Exponent(2.0)};
}

double analysis_norm_estimate(const HSfOperator& op,
                              const EstimateOptions& opts) {
  return operator_norm_estimate(analysis_operator(op), opts);
}

double factorization_check(const HSfOperator& op) {
  const Eigen::MatrixXd A = op.pair.fs.transpose();
  return (op.S.entries - A.transpose() * A).cwiseAbs().maxCoeff();
}

OperatorArray hsf_array_from_pair(const FramePair& pair) {
  // S xs = fs, transposed to xs^T S^T = fs^T so each unknown row solves a
  // least-squares system over the x-side
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(
      pair.xs.transpose());
  const Eigen::MatrixXd St = cod.solve(pair.fs.transpose());
  return OperatorArray{St.transpose(), pair.p, pair.q()};
}

UniquenessReport uniqueness_probe(const FramePair& a, const FramePair& b,
                                  double tol) {
  if (a.dim() != b.dim() || a.length() != b.length())
    throw std::invalid_argument("uniqueness_probe: shape mismatch");
  if (a.p != b.p)
    throw std::invalid_argument("uniqueness_probe: exponent mismatch");

  const double x_gap = (a.xs - b.xs).cwiseAbs().maxCoeff();
  const double f_gap = (a.fs - b.fs).cwiseAbs().maxCoeff();
  UniquenessReport r;
  if (x_gap <= tol) {
    r.shares_vectors = true;
  } else if (f_gap <= tol) {
    r.shares_vectors = false;
  } else {
    throw std::invalid_argument("uniqueness_probe: pairs share neither side");
  }

  const OperatorArray Sa = hsf_array_from_pair(a);
  const OperatorArray Sb = hsf_array_from_pair(b);
  auto fit_defect = [](const OperatorArray& S, const FramePair& p) {
    const Eigen::MatrixXd d = S.entries * p.xs - p.fs;
    double worst = 0.0;
    for (Eigen::Index j = 0; j < p.length(); ++j)
      worst = std::max(worst, lp_norm(d.col(j), p.q()));
    return worst;
  };
  const double da = fit_defect(Sa, a);
  const double db = fit_defect(Sb, b);
  if (da > tol || db > tol) {
    r.reason = "pair admits no HSf array at this tolerance (fit defect " +
               std::to_string(std::max(da, db)) + ")";
    return r;
  }

  r.applicable = true;
  const Eigen::MatrixXd gap = r.shares_vectors ? (a.fs - b.fs).eval()
                                               : (a.xs - b.xs).eval();
  const Exponent gap_norm = r.shares_vectors ? a.q() : a.p;
  for (Eigen::Index j = 0; j < gap.cols(); ++j)
    r.max_partner_defect =
        std::max(r.max_partner_defect, lp_norm(gap.col(j), gap_norm));
  r.max_operator_defect = (Sa.entries - Sb.entries).cwiseAbs().maxCoeff();
  return r;
}

std::vector<std::pair<Eigen::Index, double>> local_duality_curve(
    const FramePair& pair, Eigen::Index n) {
  if (n < 1 || n > pair.length())
    throw std::invalid_argument("local_duality_curve: n out of range");
  const Eigen::VectorXd fn = pair.fs.col(n - 1);
  // coefficients f_n(x_j)
  const Eigen::VectorXd c = pair.xs.transpose() * fn;
  std::vector<std::pair<Eigen::Index, double>> curve;
  curve.reserve(static_cast<std::size_t>(pair.length()));
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(pair.dim());
  for (Eigen::Index m = 0; m < pair.length(); ++m) {
    acc += c[m] * pair.fs.col(m);
    curve.emplace_back(m + 1, lp_norm((fn - acc).eval(), pair.q()));
  }
  return curve;
}

std::vector<std::pair<Eigen::Index, double>> local_duality_curve(
    const HSfOperator& op, Eigen::Index n) {
  return local_duality_curve(op.pair, n);
}

std::vector<std::pair<Eigen::Index, double>> hilbert_embedding_diagnostic(
    const std::vector<HSfOperator>& family, const EstimateOptions& opts) {
  std::vector<std::pair<Eigen::Index, double>> curve;
  curve.reserve(family.size());
  for (const HSfOperator& op : family)
    curve.emplace_back(op.pair.dim(),
                       min_gain_estimate(analysis_operator(op), opts));
  return curve;
}

}  // namespace hsf
