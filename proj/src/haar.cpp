#include "hsf/haar.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hsf/detail/pairwise.hpp"

namespace hsf {
namespace {

void check_level(int level) {
  if (level < 0 || level > kMaxHaarLevel)
    throw std::invalid_argument("haar: level out of range [0, " +
                                std::to_string(kMaxHaarLevel) + "]");
}

void check_operator_level(int level) {
  if (level < 0 || level > kMaxHaarOperatorLevel)
    throw std::invalid_argument("haar: dense operator level out of range [0, " +
                                std::to_string(kMaxHaarOperatorLevel) + "]");
}

Eigen::Index cells(int level) { return Eigen::Index{1} << level; }

}  // namespace

HaarIndex::HaarIndex(long n_) : n(n_) {
  if (n < 1) throw std::invalid_argument("HaarIndex: n must be >= 1");
  if (n > (long{1} << kMaxHaarLevel))
    throw std::invalid_argument("HaarIndex: n exceeds the level cap");
  if (n == 1) {
    generation = 0;
    offset = 0;
    return;
  }
  int k = 0;
  while ((long{1} << (k + 1)) <= n - 1) ++k;
  generation = k;
  offset = n - 1 - (long{1} << k);
}

double HaarIndex::support_length() const { return std::exp2(-generation); }
double HaarIndex::support_left() const {
  return static_cast<double>(offset) * support_length();
}
int HaarIndex::min_level() const { return is_constant() ? 0 : generation + 1; }

StepFunction haar_atom(const HaarIndex& idx, int level) {
  check_level(level);
  if (level < idx.min_level())
    throw std::invalid_argument("haar_atom: level too coarse for atom " +
                                std::to_string(idx.n));
  StepFunction f{level, Eigen::VectorXd::Zero(cells(level))};
  if (idx.is_constant()) {
    f.values.setOnes();
    return f;
  }
  const Eigen::Index width = cells(level - idx.generation);
  const Eigen::Index start = idx.offset * width;
  f.values.segment(start, width / 2).setConstant(1.0);
  f.values.segment(start + width / 2, width / 2).setConstant(-1.0);
  return f;
}

StepFunction haar_atom(long n, int level) { return haar_atom(HaarIndex(n), level); }

StepFunction normalized_atom(const HaarIndex& idx, const Exponent& p, int level) {
  StepFunction f = haar_atom(idx, level);
  f.values *= std::exp2(idx.generation * p.inverse());
  return f;
}

StepFunction normalized_atom(long n, const Exponent& p, int level) {
  return normalized_atom(HaarIndex(n), p, level);
}

StepFunction refine(const StepFunction& f, int level) {
  check_level(f.level);
  check_level(level);
  if (level < f.level)
    throw std::invalid_argument("refine: target level coarser than source");
  if (level == f.level) return f;
  const Eigen::Index rep = cells(level - f.level);
  StepFunction g{level, Eigen::VectorXd(cells(level))};
  for (Eigen::Index i = 0; i < f.values.size(); ++i)
    g.values.segment(i * rep, rep).setConstant(f.values[i]);
  return g;
}

StepFunction coarsen(const StepFunction& f, int level) {
  check_level(f.level);
  check_level(level);
  if (level > f.level)
    throw std::invalid_argument("coarsen: target level finer than source");
  if (level == f.level) return f;
  const Eigen::Index block = cells(f.level - level);
  StepFunction g{level, Eigen::VectorXd(cells(level))};
  for (Eigen::Index i = 0; i < g.values.size(); ++i) {
    const double v = f.values[i * block];
    for (Eigen::Index r = 1; r < block; ++r)
      if (f.values[i * block + r] != v)
        throw std::invalid_argument("coarsen: values not constant on merged block");
    g.values[i] = v;
  }
  return g;
}

double lp_norm(const StepFunction& f, const Exponent& p) {
  check_level(f.level);
  if (f.values.size() != cells(f.level))
    throw std::invalid_argument("StepFunction: value count does not match level");
  if (p.is_infinite())
    return f.values.size() == 0 ? 0.0 : f.values.cwiseAbs().maxCoeff();
  const double pv = p.value();
  Eigen::VectorXd powed(f.values.size());
  for (Eigen::Index i = 0; i < f.values.size(); ++i) {
    const double a = std::abs(f.values[i]);
    powed[i] = pv == 1.0 ? a : (pv == 2.0 ? a * a : std::pow(a, pv));
  }
  const double mass =
      detail::pairwise_sum(powed.data(), powed.size()) * std::exp2(-f.level);
  return pv == 1.0 ? mass : (pv == 2.0 ? std::sqrt(mass) : std::pow(mass, 1.0 / pv));
}

double integral(const StepFunction& f) {
  check_level(f.level);
  return detail::pairwise_sum(f.values.data(), f.values.size()) *
         std::exp2(-f.level);
}

double integral_product(const StepFunction& f, const StepFunction& g) {
  const int level = f.level > g.level ? f.level : g.level;
  const StepFunction fr = refine(f, level);
  const StepFunction gr = refine(g, level);
  Eigen::VectorXd prod = fr.values.cwiseProduct(gr.values);
  return detail::pairwise_sum(prod.data(), prod.size()) * std::exp2(-level);
}

double haar_dual_coefficient(const StepFunction& f, long n) {
  const HaarIndex idx(n);
  const int level = f.level > idx.min_level() ? f.level : idx.min_level();
  const StepFunction atom = haar_atom(idx, level);
  // 1/|I_n| = 2^generation, an exact scaling
  return integral_product(f, atom) * std::exp2(idx.generation);
}

StepFunction haar_partial_sum(const StepFunction& f, long m) {
  check_level(f.level);
  if (m < 1 || m > static_cast<long>(cells(f.level)))
    throw std::invalid_argument("haar_partial_sum: m out of range [1, 2^level]");
  StepFunction acc{f.level, Eigen::VectorXd::Zero(cells(f.level))};
  for (long n = 1; n <= m; ++n) {
    const double c = haar_dual_coefficient(f, n);
    acc.values += c * haar_atom(n, f.level).values;
  }
  return acc;
}

Eigen::MatrixXd haar_matrix(int level) {
  check_operator_level(level);
  const Eigen::Index n = cells(level);
  Eigen::MatrixXd H(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    H.col(j) = haar_atom(static_cast<long>(j) + 1, level).values;
  return H;
}

OperatorArray haar_hs_operator(int level, const Exponent& p) {
  check_operator_level(level);
  if (p.is_infinite() || p.value() <= 1.0 || p.value() > 2.0)
    throw std::invalid_argument("haar_hs_operator: requires 1 < p <= 2");
  const Exponent q = p.conjugate();
  const double gap = p.inverse() - q.inverse();
  const Eigen::Index n = cells(level);
  Eigen::VectorXd d(n);
  for (Eigen::Index i = 0; i < n; ++i)
    d[i] = std::exp2(-HaarIndex(static_cast<long>(i) + 1).generation * gap);
  return OperatorArray{Eigen::MatrixXd(d.asDiagonal()), p, q};
}

Eigen::VectorXd scaled_coordinates(const StepFunction& f, const Exponent& p) {
  check_level(f.level);
  return f.values * std::exp2(-f.level * p.inverse());
}

Eigen::MatrixXd scaled_normalized_atoms(int level, const Exponent& p,
                                        int rep_level) {
  check_operator_level(level);
  if (rep_level < 0) rep_level = level;
  check_operator_level(rep_level);
  if (rep_level < level)
    throw std::invalid_argument(
        "scaled_normalized_atoms: representation level coarser than system");
  const Eigen::Index n = cells(level);
  Eigen::MatrixXd M(cells(rep_level), n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const HaarIndex idx(static_cast<long>(j) + 1);
    M.col(j) = haar_atom(idx, rep_level).values *
               std::exp2((idx.generation - rep_level) * p.inverse());
  }
  return M;
}

double haar_hs_operator_norm_estimate(int level, const Exponent& p,
                                      const EstimateOptions& opts) {
  if (p.is_infinite() || p.value() <= 1.0 || p.value() > 2.0)
    throw std::invalid_argument(
        "haar_hs_operator_norm_estimate: requires 1 < p <= 2");
  const Exponent q = p.conjugate();
  const Eigen::MatrixXd F = scaled_normalized_atoms(level, q);
  return operator_norm_estimate(OperatorArray{F * F.transpose(), p, q}, opts);
}

}  // namespace hsf
