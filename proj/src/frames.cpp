#include "hsf/frames.hpp"

#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace hsf {
namespace {

constexpr double kSingularRel = 1e-12;

}  // namespace

HilbertFrame make_hilbert_frame(const std::vector<Eigen::VectorXd>& vectors) {
  if (vectors.empty())
    throw std::invalid_argument("make_hilbert_frame: empty vector list");
  const Eigen::Index d = vectors.front().size();
  for (const auto& v : vectors)
    if (v.size() != d)
      throw std::invalid_argument("make_hilbert_frame: dimension mismatch");
  HilbertFrame frame;
  frame.vectors.resize(d, static_cast<Eigen::Index>(vectors.size()));
  for (Eigen::Index j = 0; j < frame.vectors.cols(); ++j)
    frame.vectors.col(j) = vectors[static_cast<std::size_t>(j)];
  return frame;
}

OperatorArray frame_operator(const HilbertFrame& frame) {
  return OperatorArray{frame.vectors * frame.vectors.transpose(), Exponent(2.0),
                       Exponent(2.0)};
}

FrameBounds frame_bounds(const HilbertFrame& frame) {
  const OperatorArray S = frame_operator(frame);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(S.entries);
  if (eig.info() != Eigen::Success)
    throw std::runtime_error("frame_bounds: eigendecomposition failed");
  FrameBounds b;
  b.lower = eig.eigenvalues().minCoeff();
  b.upper = eig.eigenvalues().maxCoeff();
  // S = VV^T is PSD; a slightly negative eigenvalue is pure roundoff
  if (b.lower < 0.0 && b.lower > -kSingularRel) b.lower = 0.0;
  if (b.lower <= kSingularRel * std::max(1.0, b.upper)) {
    b.deficient = true;
    b.lower = 0.0;
  }
  return b;
}

Eigen::VectorXd canonical_dual_reconstruct(const HilbertFrame& frame,
                                           const Eigen::VectorXd& x) {
  if (x.size() != frame.dim())
    throw std::invalid_argument("canonical_dual_reconstruct: dimension mismatch");
  const OperatorArray S = frame_operator(frame);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(S.entries);
  if (eig.info() != Eigen::Success)
    throw std::runtime_error("canonical_dual_reconstruct: eigendecomposition failed");
  const auto& lambda = eig.eigenvalues();
  if (lambda.minCoeff() <= kSingularRel * std::max(1.0, lambda.maxCoeff()))
    throw std::domain_error(
        "canonical_dual_reconstruct: deficient frame, operator is singular");
  // sum_j <x,f_j> S^{-1} f_j = S^{-1} (V V^T x), solved in the eigenbasis
  const Eigen::VectorXd coeffs = frame.vectors.transpose() * x;
  const Eigen::VectorXd rhs = frame.vectors * coeffs;
  return eig.eigenvectors() *
         (eig.eigenvectors().transpose() * rhs).cwiseQuotient(lambda);
}

FramePair make_frame_pair(Eigen::MatrixXd xs, Eigen::MatrixXd fs, Exponent p) {
  if (xs.rows() != fs.rows() || xs.cols() != fs.cols())
    throw std::invalid_argument("make_frame_pair: shape mismatch between xs and fs");
  if (xs.cols() == 0)
    throw std::invalid_argument("make_frame_pair: empty pair");
  return FramePair{std::move(xs), std::move(fs), p};
}

SeqVec partial_sum_reconstruct(const FramePair& pair, const SeqVec& x,
                               Eigen::Index n) {
  if (x.exponent != pair.p)
    throw std::invalid_argument("partial_sum_reconstruct: exponent mismatch");
  if (x.coeffs.size() != pair.dim())
    throw std::invalid_argument("partial_sum_reconstruct: length mismatch");
  if (n < 0 || n > pair.length())
    throw std::invalid_argument("partial_sum_reconstruct: n out of range");
  if (n == 0) return SeqVec{Eigen::VectorXd::Zero(pair.dim()), pair.p};
  const Eigen::VectorXd c = pair.fs.leftCols(n).transpose() * x.coeffs;
  return SeqVec{pair.xs.leftCols(n) * c, pair.p};
}

std::vector<std::pair<Eigen::Index, double>> reconstruction_error_curve(
    const FramePair& pair, const SeqVec& x) {
  if (x.exponent != pair.p)
    throw std::invalid_argument("reconstruction_error_curve: exponent mismatch");
  if (x.coeffs.size() != pair.dim())
    throw std::invalid_argument("reconstruction_error_curve: length mismatch");
  std::vector<std::pair<Eigen::Index, double>> curve;
  curve.reserve(static_cast<std::size_t>(pair.length()));
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(pair.dim());
  for (Eigen::Index j = 0; j < pair.length(); ++j) {
    acc += pair.fs.col(j).dot(x.coeffs) * pair.xs.col(j);
    curve.emplace_back(j + 1, lp_norm((x.coeffs - acc).eval(), pair.p));
  }
  return curve;
}

}  // namespace hsf
