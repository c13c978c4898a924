#pragma once

#include <Eigen/Core>

namespace hsf::detail {

/// Recursive pairwise (binary-tree) summation. Besides the usual accuracy
/// gain, the reduction tree for a power-of-two length is aligned with dyadic
/// blocks, which makes step-function norms and integrals bit-for-bit
/// invariant under grid refinement; a left-to-right sum is not.
inline double pairwise_sum(const double* data, Eigen::Index n) {
  if (n == 0) return 0.0;
  if (n == 1) return data[0];
  if (n == 2) return data[0] + data[1];
  const Eigen::Index half = n / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

}  // namespace hsf::detail
