#pragma once

#include <Eigen/Core>

#include "hsf/exponent.hpp"
#include "hsf/norm_estimate.hpp"
#include "hsf/spaces.hpp"

namespace hsf {

/// Finest dyadic grid the step-function machinery accepts (2^20 cells).
inline constexpr int kMaxHaarLevel = 20;

/// Dense operator builders allocate 2^L x 2^L arrays, so they stop earlier.
inline constexpr int kMaxHaarOperatorLevel = 10;

/// Right-continuous step function on [0,1): value values[i] on the cell
/// [i*2^-L, (i+1)*2^-L). All arithmetic on these is exact as long as the
/// values are exact, because cell boundaries are dyadic and the grid only
/// ever refines by powers of two.
struct StepFunction {
  int level = 0;
  Eigen::VectorXd values;
};

/// Index n >= 1 of the Haar system: n = 1 is the constant function, and
/// n = 2^k + j + 1 with 0 <= j < 2^k oscillates on I_n = [j*2^-k, (j+1)*2^-k),
/// +1 on the left half and -1 on the right. The constant atom is treated as
/// generation 0 with |I_1| = 1, which makes every |I_n| = 2^-generation.
struct HaarIndex {
  explicit HaarIndex(long n);

  long n;
  int generation;  // k
  long offset;     // j

  bool is_constant() const { return n == 1; }
  double support_length() const;  // |I_n| = 2^-generation
  double support_left() const;    // j * 2^-generation
  int min_level() const;          // coarsest grid representing the atom
};

StepFunction haar_atom(const HaarIndex& idx, int level);
StepFunction haar_atom(long n, int level);

/// |I_n|^(-1/p) times the atom: the unit-norm version in L^p.
StepFunction normalized_atom(const HaarIndex& idx, const Exponent& p, int level);
StepFunction normalized_atom(long n, const Exponent& p, int level);

/// Re-express on a finer grid (exact) or merge back to a coarser one
/// (requires the values to be constant on merged blocks; throws otherwise).
StepFunction refine(const StepFunction& f, int level);
StepFunction coarsen(const StepFunction& f, int level);

/// L^p norm on [0,1): (2^-L sum |v_i|^p)^(1/p), max for p = inf. Pairwise
/// summation keeps the value bit-identical under refinement.
double lp_norm(const StepFunction& f, const Exponent& p);

double integral(const StepFunction& f);
double integral_product(const StepFunction& f, const StepFunction& g);

/// Coefficient of f against the dual atom h_n* = |I_n|^(-1) h_n, computed by
/// exact dyadic integration. Refines f internally when the atom needs a
/// finer grid.
double haar_dual_coefficient(const StepFunction& f, long n);

/// sum_{n<=m} h_n*(f) h_n on f's grid. Requires 1 <= m <= 2^level so every
/// atom involved is representable. At m = 2^level this recovers f exactly
/// (bitwise for dyadic-rational values).
StepFunction haar_partial_sum(const StepFunction& f, long m);

/// Columns 0..2^L-1 hold the atom values h_1..h_{2^L} on the level-L grid.
Eigen::MatrixXd haar_matrix(int level);

/// The operator sending each normalized atom |I_n|^(-1/p) h_n to its dual
/// partner |I_n|^(-1/q) h_n: diagonal with entries |I_n|^(1/p - 1/q) in Haar
/// coefficient coordinates. Note the coordinate norms here are not the plain
/// lp norms of the coefficient vector; see scaled_coordinates for the frame
/// that makes them so. Requires 1 < p <= 2.
OperatorArray haar_hs_operator(int level, const Exponent& p);

/// Step values rescaled so function-space norms become coordinate norms:
/// with u = 2^(-L/p) * values, ||f||_{L^p} = ||u||_p, and the integral of
/// f*g is the plain dot product of the p- and q-scaled coordinates.
Eigen::VectorXd scaled_coordinates(const StepFunction& f, const Exponent& p);

/// Columns are the scaled coordinates of the normalized atoms for exponent
/// p, represented on the level rep_level grid (rep_level = -1 means level).
Eigen::MatrixXd scaled_normalized_atoms(int level, const Exponent& p,
                                        int rep_level = -1);

/// Norm estimate of the atom-to-dual operator as a map L^p -> L^q, run in
/// scaled coordinates where the sphere is the plain lp sphere.
double haar_hs_operator_norm_estimate(int level, const Exponent& p,
                                      const EstimateOptions& opts = {});

}  // namespace hsf
