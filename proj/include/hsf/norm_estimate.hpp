#pragma once

#include <cstdint>

#include "hsf/spaces.hpp"

namespace hsf {

/// Knobs for the projected-gradient norm estimators. `restarts` counts the
/// seeded random starts; the coordinate vectors and the flat vector are
/// always climbed in addition. `iterations` is the number of trial steps per
/// start; the step length doubles after an accepted trial and halves after a
/// rejected one.
struct EstimateOptions {
  int restarts = 64;
  int iterations = 200;
  std::uint64_t seed = 0;
};

/// Lower estimate of ||A|| = sup{ ||Ax||_q : ||x||_p = 1 } by projected
/// gradient ascent on the unit p-sphere. The returned value is the largest
/// ratio over every point evaluated, so it never exceeds the true norm
/// beyond evaluation roundoff. Deterministic for a fixed seed; each restart
/// draws from its own substream, so the max-reduction over restarts is
/// order-independent. Throws on empty or NaN arrays and on restarts < 1.
double operator_norm_estimate(const OperatorArray& A,
                              const EstimateOptions& opts = {});

/// Companion minimizer: inf{ ||Ax||_q : ||x||_p = 1 } from the same
/// machinery, descending instead of ascending. A family of these values
/// staying bounded away from zero as the truncation grows is the numerical
/// signature of an isomorphic embedding.
double min_gain_estimate(const OperatorArray& A,
                         const EstimateOptions& opts = {});

}  // namespace hsf
