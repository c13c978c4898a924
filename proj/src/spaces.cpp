#include "hsf/spaces.hpp"

namespace hsf {

double diag_operator_norm(const Eigen::VectorXd& d, const Exponent& p,
                          const Exponent& q) {
  if (d.size() == 0)
    throw std::invalid_argument("diag_operator_norm: empty diagonal");
  const double inv_r = q.inverse() - p.inverse();
  if (inv_r <= 0.0) return d.cwiseAbs().maxCoeff();  // p <= q
  return lp_norm(d, Exponent(1.0 / inv_r));
}

}  // namespace hsf
