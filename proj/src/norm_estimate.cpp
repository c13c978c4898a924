#include "hsf/norm_estimate.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "hsf/rng.hpp"

namespace hsf {
namespace {

// Ascent direction for x -> ||Ax||_q is A^T g with g a subgradient of the
// q-norm at y = Ax. Only the direction matters; the adaptive step absorbs
// the scale, so the usual ||y||^(1-q) factor is dropped.
Eigen::VectorXd norm_subgradient(const Eigen::VectorXd& y, const Exponent& q) {
  Eigen::VectorXd g = Eigen::VectorXd::Zero(y.size());
  if (q.is_infinite()) {
    Eigen::Index imax = 0;
    y.cwiseAbs().maxCoeff(&imax);
    g[imax] = y[imax] >= 0.0 ? 1.0 : -1.0;
    return g;
  }
  const double qv = q.value();
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    const double a = std::abs(y[i]);
    if (a == 0.0) continue;
    g[i] = (qv == 1.0) ? (y[i] > 0.0 ? 1.0 : -1.0)
                       : std::copysign(std::pow(a, qv - 1.0), y[i]);
  }
  return g;
}

// One climb from a given start; sense = +1 maximizes, -1 minimizes. Every
// candidate is normalized to the unit p-sphere before evaluation and the
// best evaluated value is returned, so the result is always achieved by an
// explicit feasible point.
double climb(const Eigen::MatrixXd& A, const Exponent& p, const Exponent& q,
             Eigen::VectorXd x, int iterations, double sense) {
  const double nx = lp_norm(x, p);
  if (!(nx > 0.0) || !std::isfinite(nx))
    return sense > 0 ? 0.0 : std::numeric_limits<double>::infinity();
  x /= nx;
  double best = lp_norm((A * x).eval(), q);
  double step = 1.0;
  for (int it = 0; it < iterations; ++it) {
    Eigen::VectorXd g = A.transpose() * norm_subgradient(A * x, q);
    // drop the component along the sphere normal at x: the raw gradient can
    // point almost radially, and a radial move is undone by the projection
    // back to the sphere, stalling the climb short of the optimum
    const Eigen::VectorXd normal = norm_subgradient(x, p);
    const double nn = normal.squaredNorm();
    if (nn > 0.0) g -= (g.dot(normal) / nn) * normal;
    const double gn = g.norm();
    if (gn == 0.0) break;
    Eigen::VectorXd trial = x + (sense * step / gn) * g;
    const double tn = lp_norm(trial, p);
    if (tn > 0.0 && std::isfinite(tn)) {
      trial /= tn;
      const double ft = lp_norm((A * trial).eval(), q);
      if (sense * (ft - best) > 0.0) {
        x = std::move(trial);
        best = ft;
        step = std::min(step * 2.0, 1e6);
        continue;
      }
    }
    step *= 0.5;
    if (step < 1e-14) break;
  }
  return best;
}

double extremize(const OperatorArray& A, const EstimateOptions& opts,
                 double sense) {
  if (A.entries.size() == 0)
    throw std::invalid_argument("norm estimate: empty array");
  if (A.entries.hasNaN())
    throw std::invalid_argument("norm estimate: NaN entries");
  if (opts.restarts < 1)
    throw std::invalid_argument("norm estimate: restarts must be >= 1");

  const Eigen::Index n = A.entries.cols();
  double best = sense > 0 ? 0.0 : std::numeric_limits<double>::infinity();
  auto consider = [&](Eigen::VectorXd start) {
    const double v =
        climb(A.entries, A.domain, A.codomain, std::move(start), opts.iterations, sense);
    if (sense * (v - best) > 0.0) best = v;
  };

  for (Eigen::Index i = 0; i < n; ++i)
    consider(Eigen::VectorXd::Unit(n, i));
  consider(Eigen::VectorXd::Ones(n));
  for (int r = 0; r < opts.restarts; ++r)
    consider(Rng(opts.seed, static_cast<std::uint64_t>(r)).normal_vector(n));
  return best;
}

}  // namespace

double operator_norm_estimate(const OperatorArray& A,
                              const EstimateOptions& opts) {
  return extremize(A, opts, +1.0);
}

double min_gain_estimate(const OperatorArray& A, const EstimateOptions& opts) {
  return extremize(A, opts, -1.0);
}

}  // namespace hsf
