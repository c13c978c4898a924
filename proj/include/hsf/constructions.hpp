#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsf/dyadic.hpp"
#include "hsf/haar.hpp"
#include "hsf/hs_operator.hpp"
#include "hsf/tail_vec.hpp"

namespace hsf {

/// A named frame pair with its operator, plus the exact value of ||S|| when
/// the array is diagonal in coordinates whose norms are plain lp norms (then
/// the closed-form diagonal norm applies and reports can assert against it).
struct Construction {
  std::string name;
  HSfOperator op;
  std::optional<double> exact_s_norm;
};

/// Unit vector basis pair {e_n, e_n*} on lp^N with the identity array as the
/// operator lp -> lq. Requires 1 <= p <= 2 and n >= 1.
Construction lp_unit_basis_hs(Eigen::Index n, const Exponent& p);

/// Normalized Haar atoms with their dual atoms on L^p[0,1], 1 < p <= 2,
/// presented in scaled step-value coordinates (scaled_coordinates) so the
/// battery's coordinate norms agree with the function-space norms. The
/// operator is assembled from the analysis side, S = A^T A. rep_level >
/// level embeds the same pair in a finer grid; -1 means rep_level = level.
Construction haar_hs_basis(int level, const Exponent& p, int rep_level = -1);

/// Doubled unit-vector pair on l1 whose flipped version fails local duality:
/// x_{2n-1} = x_{2n} = e_n, with functionals (1-based)
///   f_1 = 1 (the all-ones functional), f_2 = e_1* - 1,
///   f_{2k-1} = e_k* - e_1*/2^k, f_{2k} = e_1*/2^k for k >= 2.
/// Every partial reconstruction identity here is a statement about exact
/// cancellation, so the functionals are held as exact dyadic tail vectors.
struct CounterexamplePair {
  long pairs = 0;  // m distinct basis vectors, 2m frame elements

  long length() const { return 2 * pairs; }
  long vector_index(long j) const;           // x_j = e_{vector_index(j)}, 1-based
  TailVec<Dyadic> functional(long j) const;  // f_j, 1-based
};

CounterexamplePair l1_counterexample(long m);

/// ||e_k - sum_{j<=n} f_j(e_k) x_j||_1 in exact arithmetic. Zero at every
/// even n >= 2k: the paired functionals cancel in blocks.
Dyadic reconstruction_defect(const CounterexamplePair& ce, long k, long n);

/// sum_{j<=n} 1(x_j) f_j: partial sums of the flipped expansion of the
/// all-ones functional. Every coefficient 1(x_j) equals one, so this is the
/// plain partial sum of the f_j.
TailVec<Dyadic> one_expansion_partial_sum(const CounterexamplePair& ce, long n);

/// ||1 - sum_{j<=n} 1(x_j) f_j||_inf, exact. Equals one at every even n:
/// the flipped pair is not locally dual.
Dyadic one_expansion_defect(const CounterexamplePair& ce, long n);

/// Double-precision avatar truncated to m coordinates, for the generic
/// reconstruction machinery. All entries are exactly representable.
FramePair counterexample_frame_pair(const CounterexamplePair& ce);

struct LqTableRow {
  double q = 0.0;
  Eigen::Index n = 0;
  double exact = 0.0;     // N^(1/p - 1/q), norm of the coordinate map lq^N -> lp^N
  double estimate = 0.0;  // sphere-maximization cross-check
};

/// Norms of the candidate operator e_n -> e_n* on lq^N -> lp^N for q > 2
/// (p conjugate). The divergence in N is the finite-truncation shadow of the
/// fact that no bounded operator of this kind exists: the candidate keeps
/// ||S e_n|| away from zero, while boundedness on lq, q > 2, would force
/// S e_n -> 0.
std::vector<LqTableRow> lq_nonexistence_demo(const std::vector<Exponent>& qs,
                                             const std::vector<Eigen::Index>& ns,
                                             const EstimateOptions& opts = {});

}  // namespace hsf
