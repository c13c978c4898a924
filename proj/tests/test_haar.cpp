#include "doctest.h"

#include <cmath>

#include "hsf/haar.hpp"
#include "hsf/rng.hpp"
#include "oracles.hpp"

using hsf::Exponent;
using hsf::HaarIndex;
using hsf::StepFunction;

namespace {

// f(t) = t sampled as its cell averages: exact dyadic values (2i+1)/2^(L+1)
StepFunction ramp(int level) {
  const Eigen::Index n = Eigen::Index{1} << level;
  StepFunction f{level, Eigen::VectorXd(n)};
  for (Eigen::Index i = 0; i < n; ++i)
    f.values[i] = (2.0 * static_cast<double>(i) + 1.0) /
                  static_cast<double>(2 * n);
  return f;
}

StepFunction random_step(hsf::Rng& rng, int level) {
  const Eigen::Index n = Eigen::Index{1} << level;
  return StepFunction{level, rng.normal_vector(n)};
}

// random step function whose values are dyadic rationals with denominator 2^10
StepFunction random_dyadic_step(hsf::Rng& rng, int level) {
  StepFunction f = random_step(rng, level);
  for (Eigen::Index i = 0; i < f.values.size(); ++i)
    f.values[i] = std::floor(f.values[i] * 1024.0) / 1024.0;
  return f;
}

}  // namespace

TEST_CASE("haar index decomposition") {
  const HaarIndex one(1);
  CHECK(one.is_constant());
  CHECK(one.generation == 0);
  CHECK(one.support_length() == 1.0);
  CHECK(one.min_level() == 0);

  const HaarIndex two(2);
  CHECK(two.generation == 0);
  CHECK(two.offset == 0);
  CHECK(two.min_level() == 1);

  const HaarIndex three(3);
  CHECK(three.generation == 1);
  CHECK(three.offset == 0);
  CHECK(three.support_length() == 0.5);

  const HaarIndex eight(8);
  CHECK(eight.generation == 2);
  CHECK(eight.offset == 3);
  CHECK(eight.support_left() == 0.75);
  CHECK(eight.min_level() == 3);

  CHECK_THROWS_AS(HaarIndex(0), std::invalid_argument);
  CHECK_THROWS_AS(HaarIndex(-2), std::invalid_argument);
}

TEST_CASE("atoms take the right step values") {
  const StepFunction h1 = hsf::haar_atom(1, 0);
  CHECK(h1.values.size() == 1);
  CHECK(h1.values[0] == 1.0);

  const StepFunction h2 = hsf::haar_atom(2, 1);
  CHECK(h2.values[0] == 1.0);
  CHECK(h2.values[1] == -1.0);

  const StepFunction h3 = hsf::haar_atom(3, 2);
  CHECK(h3.values[0] == 1.0);
  CHECK(h3.values[1] == -1.0);
  CHECK(h3.values[2] == 0.0);
  CHECK(h3.values[3] == 0.0);

  CHECK_THROWS_AS(hsf::haar_atom(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(hsf::haar_atom(1, hsf::kMaxHaarLevel + 1),
                  std::invalid_argument);
}

TEST_CASE("oscillating atoms integrate to zero exactly") {
  for (long n = 2; n <= 16; ++n)
    CHECK(hsf::integral(hsf::haar_atom(n, 4)) == 0.0);
  CHECK(hsf::integral(hsf::haar_atom(1, 4)) == 1.0);
}

TEST_CASE("normalized atoms are unit vectors in their own norm") {
  for (double pv : {1.0, 1.25, 1.5, 2.0}) {
    const Exponent p(pv);
    for (long n : {1L, 2L, 3L, 5L, 8L, 13L}) {
      const StepFunction a = hsf::normalized_atom(n, p, 4);
      CHECK(hsf::lp_norm(a, p) == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("norms and integrals are bitwise invariant under refinement") {
  hsf::Rng rng(3);
  for (int rep = 0; rep < 10; ++rep) {
    const StepFunction f = random_step(rng, 5);
    const StepFunction g = random_step(rng, 5);
    for (int finer = 6; finer <= 9; ++finer) {
      const StepFunction fr = hsf::refine(f, finer);
      CHECK(hsf::integral(fr) == hsf::integral(f));
      for (double pv : {1.0, 1.5, 2.0}) {
        CHECK(hsf::lp_norm(fr, Exponent(pv)) == hsf::lp_norm(f, Exponent(pv)));
      }
      CHECK(hsf::lp_norm(fr, Exponent::infinity()) ==
            hsf::lp_norm(f, Exponent::infinity()));
      CHECK(hsf::integral_product(fr, g) == hsf::integral_product(f, g));
    }
  }
}

TEST_CASE("integral_product agrees with a long-double oracle") {
  hsf::Rng rng(4);
  for (int rep = 0; rep < 10; ++rep) {
    const StepFunction f = random_step(rng, 4);
    const StepFunction g = random_step(rng, 6);
    const StepFunction fr = hsf::refine(f, 6);
    const double ref =
        static_cast<double>(oracle::grid_integral(fr.values, g.values));
    CHECK(hsf::integral_product(f, g) == doctest::Approx(ref).epsilon(1e-14));
  }
}

TEST_CASE("refine and coarsen are inverse on step functions") {
  hsf::Rng rng(5);
  const StepFunction f = random_step(rng, 4);
  const StepFunction fine = hsf::refine(f, 7);
  const StepFunction back = hsf::coarsen(fine, 4);
  CHECK(back.values == f.values);

  StepFunction broken = fine;
  broken.values[1] += 0.5;
  CHECK_THROWS_AS(hsf::coarsen(broken, 4), std::invalid_argument);
  CHECK_THROWS_AS(hsf::refine(f, 3), std::invalid_argument);
  CHECK_THROWS_AS(hsf::coarsen(f, 5), std::invalid_argument);
}

TEST_CASE("dual coefficients are exactly biorthogonal up to level 6") {
  for (int level = 1; level <= 6; ++level) {
    const long count = 1L << level;
    for (long m = 1; m <= count; ++m) {
      const StepFunction atom = hsf::haar_atom(m, level);
      for (long n = 1; n <= count; ++n) {
        const double c = hsf::haar_dual_coefficient(atom, n);
        CHECK(c == (m == n ? 1.0 : 0.0));
      }
    }
  }
}

TEST_CASE("dual coefficients of the ramp are exact dyadics") {
  const StepFunction t = ramp(3);
  CHECK(hsf::haar_dual_coefficient(t, 1) == 0.5);
  CHECK(hsf::haar_dual_coefficient(t, 2) == -0.25);
  // generation-1 atoms see the ramp at slope 1 over width 1/2
  CHECK(hsf::haar_dual_coefficient(t, 3) == -0.125);
  CHECK(hsf::haar_dual_coefficient(t, 4) == -0.125);
}

TEST_CASE("partial sums recover dyadic data bitwise at m = 2^L") {
  hsf::Rng rng(6);
  for (int level : {1, 2, 3, 4, 5, 6}) {
    const StepFunction t = ramp(level);
    const StepFunction rec = hsf::haar_partial_sum(t, 1L << level);
    CHECK(rec.values == t.values);

    const StepFunction d = random_dyadic_step(rng, level);
    const StepFunction drec = hsf::haar_partial_sum(d, 1L << level);
    CHECK(drec.values == d.values);
  }
}

TEST_CASE("partial sums converge for arbitrary data") {
  hsf::Rng rng(7);
  const StepFunction f = random_step(rng, 5);
  const StepFunction full = hsf::haar_partial_sum(f, 32);
  CHECK((full.values - f.values).cwiseAbs().maxCoeff() <= 1e-13);

  const StepFunction first = hsf::haar_partial_sum(f, 1);
  CHECK(first.values.minCoeff() == first.values.maxCoeff());
  CHECK(first.values[0] == doctest::Approx(hsf::integral(f)).epsilon(1e-14));

  CHECK_THROWS_AS(hsf::haar_partial_sum(f, 0), std::invalid_argument);
  CHECK_THROWS_AS(hsf::haar_partial_sum(f, 33), std::invalid_argument);
}

TEST_CASE("basis constant ratio curve is reported") {
  // the partial-sum operators are uniformly bounded on L^p; the constants
  // themselves are not asserted, only reported for inspection
  hsf::Rng rng(8);
  const Exponent p(1.5);
  double worst = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const StepFunction f = random_step(rng, 4);
    const double full_norm = hsf::lp_norm(f, p);
    if (full_norm == 0.0) continue;
    for (long m = 1; m <= 16; ++m) {
      const double r = hsf::lp_norm(hsf::haar_partial_sum(f, m), p) / full_norm;
      worst = std::max(worst, r);
    }
  }
  MESSAGE("largest partial-sum ratio observed at level 4, p = 1.5: ", worst);
  CHECK(std::isfinite(worst));
  CHECK(worst >= 1.0 - 1e-12);
}

TEST_CASE("haar matrix at level 2") {
  const Eigen::MatrixXd H = hsf::haar_matrix(2);
  Eigen::MatrixXd expected(4, 4);
  expected << 1, 1, 1, 0,
              1, 1, -1, 0,
              1, -1, 0, 1,
              1, -1, 0, -1;
  CHECK(H == expected);
  CHECK_THROWS_AS(hsf::haar_matrix(hsf::kMaxHaarOperatorLevel + 1),
                  std::invalid_argument);
}

TEST_CASE("atom-to-dual operator is diagonal with the interval powers") {
  const Exponent p(1.5);
  const hsf::OperatorArray S = hsf::haar_hs_operator(2, p);
  CHECK(S.domain == p);
  CHECK(S.codomain == Exponent(3.0));
  Eigen::VectorXd d = S.entries.diagonal();
  CHECK(d[0] == 1.0);
  CHECK(d[1] == 1.0);
  CHECK(d[2] == doctest::Approx(0.79370052598409979).epsilon(1e-15));
  CHECK(d[3] == d[2]);
  CHECK((S.entries - Eigen::MatrixXd(d.asDiagonal())).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(hsf::haar_hs_operator(2, Exponent(1.0)), std::invalid_argument);
  CHECK_THROWS_AS(hsf::haar_hs_operator(2, Exponent(2.5)), std::invalid_argument);
  CHECK_THROWS_AS(hsf::haar_hs_operator(2, Exponent::infinity()),
                  std::invalid_argument);
}

TEST_CASE("scaled coordinates turn function norms into plain lp norms") {
  hsf::Rng rng(9);
  for (double pv : {1.25, 1.5, 2.0}) {
    const Exponent p(pv);
    const Exponent q = p.conjugate();
    for (int rep = 0; rep < 10; ++rep) {
      const StepFunction f = random_step(rng, 4);
      const StepFunction g = random_step(rng, 4);
      const Eigen::VectorXd u = hsf::scaled_coordinates(f, p);
      const Eigen::VectorXd w = hsf::scaled_coordinates(g, q);
      CHECK(hsf::lp_norm(u, p) ==
            doctest::Approx(hsf::lp_norm(f, p)).epsilon(1e-14));
      CHECK(u.dot(w) ==
            doctest::Approx(hsf::integral_product(f, g)).epsilon(1e-13));
    }
  }
}

TEST_CASE("scaled atom systems are biorthogonal unit systems") {
  const Exponent p(1.5);
  const Exponent q = p.conjugate();
  const Eigen::MatrixXd X = hsf::scaled_normalized_atoms(3, p);
  const Eigen::MatrixXd F = hsf::scaled_normalized_atoms(3, q);
  CHECK((F.transpose() * X - Eigen::MatrixXd::Identity(8, 8))
            .cwiseAbs()
            .maxCoeff() <= 1e-14);
  for (Eigen::Index j = 0; j < X.cols(); ++j) {
    CHECK(hsf::lp_norm(X.col(j), p) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(hsf::lp_norm(F.col(j), q) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("scaled operator route agrees with the conjugated diagonal route") {
  const Exponent p(1.5);
  const Exponent q = p.conjugate();
  const int level = 3;
  const Eigen::MatrixXd F = hsf::scaled_normalized_atoms(level, q);
  const Eigen::MatrixXd Su = F * F.transpose();

  const Eigen::MatrixXd H = hsf::haar_matrix(level);
  const Eigen::MatrixXd D = hsf::haar_hs_operator(level, p).entries;
  const double gap = p.inverse() - q.inverse();
  const Eigen::MatrixXd conjugated =
      std::exp2(level * gap) * H * D * H.inverse();
  CHECK((Su - conjugated).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("operator norm estimate in scaled coordinates") {
  // p = 2 the operator is the identity on l2
  CHECK(hsf::haar_hs_operator_norm_estimate(3, Exponent(2.0)) ==
        doctest::Approx(1.0).epsilon(1e-9));
  const double v = hsf::haar_hs_operator_norm_estimate(3, Exponent(1.5));
  CHECK(v >= 1.0 - 1e-9);
  CHECK(v <= 8.0);
  CHECK(v == hsf::haar_hs_operator_norm_estimate(3, Exponent(1.5)));
}
