#pragma once

#include <cmath>
#include <stdexcept>

#include <Eigen/Core>

#include "hsf/exponent.hpp"

namespace hsf {

/// Element of a truncated sequence space: coordinates plus the exponent of
/// the ambient norm.
struct SeqVec {
  Eigen::VectorXd coeffs;
  Exponent exponent;
};

/// Element of the dual space; carries the conjugate exponent.
struct DualVec {
  Eigen::VectorXd coeffs;
  Exponent exponent;
};

/// Dense array of a linear map R^cols -> R^rows, tagged with the exponents
/// of the domain and codomain norms. Rectangular arrays are allowed (an
/// analysis operator is J x N).
struct OperatorArray {
  Eigen::MatrixXd entries;
  Exponent domain;
  Exponent codomain;

  Eigen::Index rows() const { return entries.rows(); }
  Eigen::Index cols() const { return entries.cols(); }
};

/// lp norm of any dense expression: (sum |v_k|^p)^(1/p), max |v_k| for
/// p = inf. Zero exactly when every coordinate is zero.
template <typename Derived>
double lp_norm(const Eigen::MatrixBase<Derived>& v, const Exponent& p) {
  if (v.size() == 0) return 0.0;
  if (p.is_infinite()) return v.derived().cwiseAbs().maxCoeff();
  const double pv = p.value();
  if (pv == 1.0) return v.derived().cwiseAbs().sum();
  const double direct =
      pv == 2.0 ? v.derived().norm()
                : std::pow(v.derived().array().abs().pow(pv).sum(), 1.0 / pv);
  if (direct > 0.0 && std::isfinite(direct)) return direct;
  // p-th powers of entries far outside [1e-154, 1e154] underflow or
  // overflow; rescaling by the largest entry keeps the value representable
  const double m = v.derived().cwiseAbs().maxCoeff();
  if (m == 0.0 || !std::isfinite(m)) return m;
  if (pv == 2.0) return m * (v.derived() / m).norm();
  return m * std::pow((v.derived().cwiseAbs() / m).array().pow(pv).sum(), 1.0 / pv);
}

inline double lp_norm(const SeqVec& v) { return lp_norm(v.coeffs, v.exponent); }
inline double lq_norm(const DualVec& f) { return lp_norm(f.coeffs, f.exponent); }

/// Duality pairing f(x) = sum_k f_k x_k.
inline double pair(const DualVec& f, const SeqVec& x) {
  if (f.coeffs.size() != x.coeffs.size())
    throw std::invalid_argument("pair: length mismatch");
  return f.coeffs.dot(x.coeffs);
}

inline Eigen::VectorXd apply(const OperatorArray& A, const Eigen::VectorXd& x) {
  if (A.entries.cols() != x.size())
    throw std::invalid_argument("apply: dimension mismatch");
  return A.entries * x;
}

inline DualVec apply(const OperatorArray& A, const SeqVec& x) {
  if (A.domain != x.exponent)
    throw std::invalid_argument("apply: domain exponent mismatch");
  return DualVec{apply(A, x.coeffs), A.codomain};
}

/// Exact operator norm of the diagonal map lp^N -> lq^N with diagonal d:
/// max |d_i| when p <= q (Hölder turns the spike into the maximizer), and
/// ||d||_r with 1/r = 1/q - 1/p when p > q (maximizer weighted toward the
/// large entries). Throws on an empty diagonal.
double diag_operator_norm(const Eigen::VectorXd& d, const Exponent& p,
                          const Exponent& q);

}  // namespace hsf
