#include "hsf/constructions.hpp"

#include <cmath>
#include <stdexcept>

namespace hsf {

Construction lp_unit_basis_hs(Eigen::Index n, const Exponent& p) {
  if (n < 1) throw std::invalid_argument("lp_unit_basis_hs: n must be >= 1");
  if (p.is_infinite() || p.value() > 2.0)
    throw std::invalid_argument("lp_unit_basis_hs: requires 1 <= p <= 2");
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  FramePair pair = make_frame_pair(id, id, p);
  OperatorArray S{id, p, p.conjugate()};
  const double exact =
      diag_operator_norm(Eigen::VectorXd::Ones(n), p, p.conjugate());
  Construction c{"lp_basis", make_hsf(std::move(pair), std::move(S)), exact};
  return c;
}

Construction haar_hs_basis(int level, const Exponent& p, int rep_level) {
  if (p.is_infinite() || p.value() <= 1.0 || p.value() > 2.0)
    throw std::invalid_argument("haar_hs_basis: requires 1 < p <= 2");
  const Exponent q = p.conjugate();
  const Eigen::MatrixXd xs = scaled_normalized_atoms(level, p, rep_level);
  const Eigen::MatrixXd fs = scaled_normalized_atoms(level, q, rep_level);
  const Eigen::MatrixXd A = fs.transpose();
  OperatorArray S{A.transpose() * A, p, q};
  FramePair pair = make_frame_pair(xs, fs, p);
  return Construction{"haar", make_hsf(std::move(pair), std::move(S)), {}};
}

long CounterexamplePair::vector_index(long j) const {
  if (j < 1 || j > length())
    throw std::invalid_argument("CounterexamplePair: index out of range");
  return (j + 1) / 2;
}

TailVec<Dyadic> CounterexamplePair::functional(long j) const {
  if (j < 1 || j > length())
    throw std::invalid_argument("CounterexamplePair: index out of range");
  const TailVec<Dyadic> ones = TailVec<Dyadic>::constant(Dyadic{1});
  if (j == 1) return ones;
  if (j == 2) return TailVec<Dyadic>::unit(0) - ones;
  const long k = (j + 1) / 2;  // k >= 2 here
  const Dyadic half_pow = Dyadic::scaled(1, static_cast<int>(k));
  const TailVec<Dyadic> spike = half_pow * TailVec<Dyadic>::unit(0);
  if (j % 2 == 1) return TailVec<Dyadic>::unit(static_cast<std::size_t>(k - 1)) - spike;
  return spike;
}

CounterexamplePair l1_counterexample(long m) {
  if (m < 1 || m > 60)
    throw std::invalid_argument("l1_counterexample: m out of range [1, 60]");
  return CounterexamplePair{m};
}

Dyadic reconstruction_defect(const CounterexamplePair& ce, long k, long n) {
  if (k < 1 || k > ce.pairs)
    throw std::invalid_argument("reconstruction_defect: k out of range");
  if (n < 0 || n > ce.length())
    throw std::invalid_argument("reconstruction_defect: n out of range");
  // coordinates of sum_{j<=n} f_j(e_k) x_j; x_j hits only coordinate
  // vector_index(j), so at most ceil(n/2) coordinates are touched
  std::vector<Dyadic> acc(static_cast<std::size_t>((n + 1) / 2));
  for (long j = 1; j <= n; ++j) {
    const Dyadic c = ce.functional(j).coord(static_cast<std::size_t>(k - 1));
    acc[static_cast<std::size_t>(ce.vector_index(j) - 1)] += c;
  }
  Dyadic defect;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    const Dyadic target = (static_cast<long>(i) == k - 1) ? Dyadic{1} : Dyadic{0};
    defect += (acc[i] - target).abs();
  }
  if (static_cast<long>(acc.size()) < k) defect += Dyadic{1};
  return defect;
}

TailVec<Dyadic> one_expansion_partial_sum(const CounterexamplePair& ce, long n) {
  if (n < 0 || n > ce.length())
    throw std::invalid_argument("one_expansion_partial_sum: n out of range");
  TailVec<Dyadic> acc;
  for (long j = 1; j <= n; ++j) acc = acc + ce.functional(j);
  return acc;
}

Dyadic one_expansion_defect(const CounterexamplePair& ce, long n) {
  const TailVec<Dyadic> ones = TailVec<Dyadic>::constant(Dyadic{1});
  return sup_norm(ones - one_expansion_partial_sum(ce, n));
}

FramePair counterexample_frame_pair(const CounterexamplePair& ce) {
  const Eigen::Index dim = ce.pairs;
  const Eigen::Index len = ce.length();
  Eigen::MatrixXd xs = Eigen::MatrixXd::Zero(dim, len);
  Eigen::MatrixXd fs(dim, len);
  for (Eigen::Index j = 0; j < len; ++j) {
    xs(ce.vector_index(j + 1) - 1, j) = 1.0;
    const TailVec<Dyadic> f = ce.functional(j + 1);
    for (Eigen::Index i = 0; i < dim; ++i)
      fs(i, j) = f.coord(static_cast<std::size_t>(i)).to_double();
  }
  return make_frame_pair(std::move(xs), std::move(fs), Exponent(1.0));
}

std::vector<LqTableRow> lq_nonexistence_demo(
    const std::vector<Exponent>& qs, const std::vector<Eigen::Index>& ns,
    const EstimateOptions& opts) {
  std::vector<LqTableRow> rows;
  for (const Exponent& q : qs) {
    if (q.is_infinite() || q.value() <= 2.0)
      throw std::invalid_argument("lq_nonexistence_demo: requires 2 < q < inf");
    const Exponent p = q.conjugate();
    for (Eigen::Index n : ns) {
      if (n < 1)
        throw std::invalid_argument("lq_nonexistence_demo: N must be >= 1");
      LqTableRow row;
      row.q = q.value();
      row.n = n;
      row.exact = diag_operator_norm(Eigen::VectorXd::Ones(n), q, p);
      row.estimate = operator_norm_estimate(
          OperatorArray{Eigen::MatrixXd::Identity(n, n), q, p}, opts);
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace hsf
