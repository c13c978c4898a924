#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "hsf/spaces.hpp"

namespace hsf {

/// Finite frame in R^d: columns are the frame vectors f_1..f_J.
struct HilbertFrame {
  Eigen::MatrixXd vectors;  // d x J

  Eigen::Index dim() const { return vectors.rows(); }
  Eigen::Index length() const { return vectors.cols(); }
};

/// Builds a frame from a vector list, rejecting mismatched dimensions.
HilbertFrame make_hilbert_frame(const std::vector<Eigen::VectorXd>& vectors);

/// S = sum_j f_j f_j^T, tagged (2,2). Symmetric PSD by construction.
OperatorArray frame_operator(const HilbertFrame& frame);

struct FrameBounds {
  double lower = 0.0;      // smallest eigenvalue of S
  double upper = 0.0;      // largest eigenvalue of S
  bool deficient = false;  // vectors fail to span R^d; lower is reported as 0
};

/// Optimal frame bounds via the symmetric eigendecomposition of S.
FrameBounds frame_bounds(const HilbertFrame& frame);

/// sum_j <x, f_j> S^{-1} f_j, evaluated by solving with the
/// eigendecomposition (never by forming an inverse). Throws on a deficient
/// frame, where S is singular.
Eigen::VectorXd canonical_dual_reconstruct(const HilbertFrame& frame,
                                           const Eigen::VectorXd& x);

/// Paired sequences {x_j} and {f_j} at truncation N: columns of xs and fs.
/// The x_j live in the exponent-p space, the f_j carry the conjugate
/// exponent. No spanning or duality is assumed; degenerate pairs are valid
/// inputs whose diagnostics simply come out bad.
struct FramePair {
  Eigen::MatrixXd xs;  // N x J
  Eigen::MatrixXd fs;  // N x J
  Exponent p;

  Eigen::Index dim() const { return xs.rows(); }
  Eigen::Index length() const { return xs.cols(); }
  Exponent q() const { return p.conjugate(); }

  SeqVec x(Eigen::Index j) const { return SeqVec{xs.col(j), p}; }
  DualVec f(Eigen::Index j) const { return DualVec{fs.col(j), q()}; }
};

/// Validates that xs and fs agree in shape.
FramePair make_frame_pair(Eigen::MatrixXd xs, Eigen::MatrixXd fs, Exponent p);

/// sum_{j<=n} f_j(x) x_j. Throws on exponent or length mismatch and on
/// n outside [0, J].
SeqVec partial_sum_reconstruct(const FramePair& pair, const SeqVec& x,
                               Eigen::Index n);

/// Defect curve (n, ||x - sum_{j<=n} f_j(x) x_j||_p) for n = 1..J.
std::vector<std::pair<Eigen::Index, double>> reconstruction_error_curve(
    const FramePair& pair, const SeqVec& x);

}  // namespace hsf
