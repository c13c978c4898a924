#include "doctest.h"

#include <cstdint>
#include <limits>
#include <stdexcept>

#include "hsf/constructions.hpp"

using hsf::Construction;
using hsf::CounterexamplePair;
using hsf::Dyadic;
using hsf::Exponent;
using hsf::TailVec;

TEST_CASE("dyadic rationals: construction and normalization") {
  CHECK(Dyadic{}.is_zero());
  CHECK(Dyadic{3}.numerator() == 3);
  CHECK(Dyadic{3}.log2_denominator() == 0);
  CHECK(Dyadic::scaled(4, 2) == Dyadic{1});
  CHECK(Dyadic::scaled(6, 1).numerator() == 3);
  CHECK(Dyadic::scaled(6, 1).log2_denominator() == 0);
  CHECK(Dyadic::scaled(0, 5).log2_denominator() == 0);
  CHECK(Dyadic::scaled(2, 3) == Dyadic::scaled(1, 2));
  CHECK_THROWS_AS(Dyadic::scaled(1, 63), std::invalid_argument);
  CHECK_THROWS_AS(Dyadic::scaled(1, -1), std::invalid_argument);
}

TEST_CASE("dyadic rationals: exact arithmetic and order") {
  const Dyadic quarter = Dyadic::scaled(1, 2);
  CHECK(quarter + quarter == Dyadic::scaled(1, 1));
  CHECK(quarter - quarter == Dyadic{0});
  CHECK(quarter * Dyadic::scaled(1, 3) == Dyadic::scaled(1, 5));
  CHECK((-quarter).abs() == quarter);
  CHECK(quarter < Dyadic::scaled(1, 1));
  CHECK(quarter <= quarter);
  CHECK(Dyadic{2} > Dyadic::scaled(7, 2));
  CHECK(Dyadic{-1} < Dyadic{0});
  CHECK(Dyadic::scaled(3, 2).to_double() == 0.75);
  CHECK(Dyadic{-5}.to_double() == -5.0);

  const Dyadic big{std::numeric_limits<std::int64_t>::max()};
  CHECK_THROWS_AS(big + big, std::overflow_error);
  CHECK_THROWS_AS(big * Dyadic{2}, std::overflow_error);
  CHECK_THROWS_AS(Dyadic::scaled(1, 62) * Dyadic::scaled(1, 1),
                  std::overflow_error);
  CHECK_THROWS_AS(Dyadic{3} + Dyadic::scaled(1, 62), std::overflow_error);
}

TEST_CASE("tail vectors carry a constant tail exactly") {
  const TailVec<Dyadic> ones = TailVec<Dyadic>::constant(Dyadic{1});
  CHECK(ones.coord(0) == Dyadic{1});
  CHECK(ones.coord(1000) == Dyadic{1});
  CHECK(ones.head.empty());

  const TailVec<Dyadic> e2 = TailVec<Dyadic>::unit(2);
  CHECK(e2.head.size() == 3);
  CHECK(e2.coord(2) == Dyadic{1});
  CHECK(e2.coord(1) == Dyadic{0});
  CHECK(e2.coord(7) == Dyadic{0});

  const TailVec<Dyadic> diff = ones - e2;
  CHECK(diff.coord(2) == Dyadic{0});
  CHECK(diff.coord(0) == Dyadic{1});
  CHECK(diff.tail == Dyadic{1});
  CHECK(sup_norm(diff) == Dyadic{1});

  const TailVec<Dyadic> scaled = Dyadic::scaled(1, 1) * ones;
  CHECK(scaled.coord(42) == Dyadic::scaled(1, 1));
  CHECK(sup_norm(TailVec<Dyadic>::constant(Dyadic{-2})) == Dyadic{2});

  const TailVec<double> v{{0.5, -3.0}, 1.0};
  CHECK(v.coord(1) == -3.0);
  CHECK(v.coord(9) == 1.0);
  CHECK(sup_norm(v) == 3.0);
  CHECK(sup_norm(v + v) == 6.0);
}

TEST_CASE("unit basis construction") {
  const Construction c = hsf::lp_unit_basis_hs(6, Exponent(1.5));
  CHECK(c.name == "lp_basis");
  CHECK(c.op.pair.dim() == 6);
  CHECK(c.op.pair.length() == 6);
  CHECK(c.op.S.entries == Eigen::MatrixXd::Identity(6, 6));
  CHECK(c.op.S.domain == Exponent(1.5));
  CHECK(c.op.S.codomain == Exponent(3.0));
  CHECK(c.op.defining_defect == 0.0);
  REQUIRE(c.exact_s_norm.has_value());
  CHECK(*c.exact_s_norm == 1.0);

  // the coordinate map into the conjugate space never expands a basis pair
  CHECK(*hsf::lp_unit_basis_hs(9, Exponent(1.0)).exact_s_norm == 1.0);
  CHECK(*hsf::lp_unit_basis_hs(9, Exponent(2.0)).exact_s_norm == 1.0);

  CHECK_THROWS_AS(hsf::lp_unit_basis_hs(0, Exponent(1.5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(hsf::lp_unit_basis_hs(4, Exponent(2.5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(hsf::lp_unit_basis_hs(4, Exponent::infinity()),
                  std::invalid_argument);
}

TEST_CASE("scaled atom construction") {
  const Construction c = hsf::haar_hs_basis(3, Exponent(1.5));
  CHECK(c.name == "haar");
  CHECK(c.op.pair.dim() == 8);
  CHECK(c.op.pair.length() == 8);
  CHECK_FALSE(c.exact_s_norm.has_value());
  CHECK(c.op.defining_defect <= 1e-13);
  CHECK(hsf::factorization_check(c.op) == 0.0);

  // spectrum of the scaled operator: 2^((L-k)(1/p-1/q)), minimal at the
  // finest generation regardless of the level
  const hsf::StructureReport r = hsf::check_structure(c.op, 100, 3);
  CHECK(r.symmetry_defect <= 1e-15);
  CHECK(r.min_eigenvalue == doctest::Approx(1.2599210498948732).epsilon(1e-10));
  CHECK(r.sigma_min == doctest::Approx(1.2599210498948732).epsilon(1e-10));
  CHECK(r.sampled_positivity_min > 0.0);

  const Construction embedded = hsf::haar_hs_basis(2, Exponent(1.5), 4);
  CHECK(embedded.op.pair.dim() == 16);
  CHECK(embedded.op.pair.length() == 4);
  CHECK(embedded.op.defining_defect <= 1e-13);
  CHECK(hsf::factorization_check(embedded.op) == 0.0);

  CHECK_THROWS_AS(hsf::haar_hs_basis(3, Exponent(1.0)), std::invalid_argument);
  CHECK_THROWS_AS(hsf::haar_hs_basis(3, Exponent(2.5)), std::invalid_argument);
  CHECK_THROWS_AS(hsf::haar_hs_basis(4, Exponent(1.5), 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(hsf::haar_hs_basis(hsf::kMaxHaarOperatorLevel + 1,
                                     Exponent(1.5)),
                  std::invalid_argument);
}

TEST_CASE("doubled basis pair: exact functionals") {
  const CounterexamplePair ce = hsf::l1_counterexample(8);
  CHECK(ce.length() == 16);
  CHECK(ce.vector_index(1) == 1);
  CHECK(ce.vector_index(2) == 1);
  CHECK(ce.vector_index(3) == 2);
  CHECK(ce.vector_index(4) == 2);
  CHECK(ce.vector_index(7) == 4);
  CHECK_THROWS_AS(ce.vector_index(0), std::invalid_argument);
  CHECK_THROWS_AS(ce.vector_index(17), std::invalid_argument);

  const TailVec<Dyadic> f1 = ce.functional(1);
  CHECK(f1.coord(5) == Dyadic{1});
  CHECK(f1.tail == Dyadic{1});

  const TailVec<Dyadic> f2 = ce.functional(2);
  CHECK(f2.coord(0) == Dyadic{0});
  CHECK(f2.coord(3) == Dyadic{-1});
  CHECK(f2.tail == Dyadic{-1});

  const TailVec<Dyadic> f3 = ce.functional(3);
  CHECK(f3.coord(0) == Dyadic::scaled(-1, 2));
  CHECK(f3.coord(1) == Dyadic{1});
  CHECK(f3.coord(2) == Dyadic{0});
  CHECK(f3.tail == Dyadic{0});

  const TailVec<Dyadic> f4 = ce.functional(4);
  CHECK(f4.coord(0) == Dyadic::scaled(1, 2));
  CHECK(f4.coord(1) == Dyadic{0});
  CHECK(f4.tail == Dyadic{0});

  CHECK(ce.functional(9).coord(0) == Dyadic::scaled(-1, 5));
  CHECK(ce.functional(9).coord(4) == Dyadic{1});
  CHECK(ce.functional(10).coord(0) == Dyadic::scaled(1, 5));

  // each block sums to a plain coordinate functional
  for (long k = 2; k <= 8; ++k) {
    const TailVec<Dyadic> block =
        ce.functional(2 * k - 1) + ce.functional(2 * k);
    const TailVec<Dyadic> ek = TailVec<Dyadic>::unit(static_cast<std::size_t>(k - 1));
    CHECK(sup_norm(block - ek) == Dyadic{0});
  }

  CHECK_THROWS_AS(ce.functional(0), std::invalid_argument);
  CHECK_THROWS_AS(ce.functional(17), std::invalid_argument);
  CHECK_THROWS_AS(hsf::l1_counterexample(0), std::invalid_argument);
  CHECK_THROWS_AS(hsf::l1_counterexample(61), std::invalid_argument);
}

TEST_CASE("doubled basis pair: coordinate reconstruction is exact in blocks") {
  const CounterexamplePair ce = hsf::l1_counterexample(8);

  CHECK(hsf::reconstruction_defect(ce, 1, 1) == Dyadic{0});
  CHECK(hsf::reconstruction_defect(ce, 1, 2) == Dyadic{0});
  CHECK(hsf::reconstruction_defect(ce, 1, 3) == Dyadic::scaled(1, 2));
  CHECK(hsf::reconstruction_defect(ce, 2, 2) == Dyadic{1});
  CHECK(hsf::reconstruction_defect(ce, 2, 4) == Dyadic{0});

  for (long k = 1; k <= 8; ++k) {
    for (long n = 2 * k; n <= ce.length(); n += 2)
      CHECK(hsf::reconstruction_defect(ce, k, n) == Dyadic{0});
    if (k >= 2)
      CHECK(hsf::reconstruction_defect(ce, k, 2 * k - 2) == Dyadic{1});
  }

  CHECK_THROWS_AS(hsf::reconstruction_defect(ce, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(hsf::reconstruction_defect(ce, 9, 2), std::invalid_argument);
  CHECK_THROWS_AS(hsf::reconstruction_defect(ce, 1, 17), std::invalid_argument);
}

TEST_CASE("doubled basis pair: the flipped expansion never settles") {
  const CounterexamplePair ce = hsf::l1_counterexample(8);

  const TailVec<Dyadic> s4 = hsf::one_expansion_partial_sum(ce, 4);
  CHECK(s4.coord(0) == Dyadic{1});
  CHECK(s4.coord(1) == Dyadic{1});
  CHECK(s4.coord(2) == Dyadic{0});
  CHECK(s4.tail == Dyadic{0});

  CHECK(hsf::one_expansion_defect(ce, 0) == Dyadic{1});
  CHECK(hsf::one_expansion_defect(ce, 1) == Dyadic{0});
  for (long n = 2; n <= ce.length(); ++n)
    CHECK(hsf::one_expansion_defect(ce, n) == Dyadic{1});

  CHECK_THROWS_AS(hsf::one_expansion_partial_sum(ce, 17),
                  std::invalid_argument);
  CHECK_THROWS_AS(hsf::one_expansion_defect(ce, -1), std::invalid_argument);
}

TEST_CASE("doubled basis pair: double avatar matches the exact columns") {
  const CounterexamplePair ce = hsf::l1_counterexample(3);
  const hsf::FramePair pair = hsf::counterexample_frame_pair(ce);
  CHECK(pair.dim() == 3);
  CHECK(pair.length() == 6);
  CHECK(pair.p == Exponent(1.0));
  CHECK(pair.q().is_infinite());

  CHECK(pair.xs(0, 0) == 1.0);
  CHECK(pair.xs(0, 1) == 1.0);
  CHECK(pair.xs(1, 2) == 1.0);
  CHECK(pair.xs(2, 5) == 1.0);
  CHECK(pair.xs.col(2).sum() == 1.0);

  CHECK(pair.fs(0, 0) == 1.0);
  CHECK(pair.fs(2, 0) == 1.0);
  CHECK(pair.fs(0, 1) == 0.0);
  CHECK(pair.fs(1, 1) == -1.0);
  CHECK(pair.fs(0, 2) == -0.25);
  CHECK(pair.fs(1, 2) == 1.0);
  CHECK(pair.fs(0, 3) == 0.25);
  CHECK(pair.fs(0, 4) == -0.125);
  CHECK(pair.fs(2, 4) == 1.0);
  CHECK(pair.fs(0, 5) == 0.125);
}

TEST_CASE("coordinate map table for q beyond the conjugate range") {
  using hsf::LqTableRow;
  const std::vector<LqTableRow> rows = hsf::lq_nonexistence_demo(
      {Exponent(3.0), Exponent(4.0)}, {2, 8, 16});
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].q == 3.0);
  CHECK(rows[0].n == 2);
  CHECK(rows[3].q == 4.0);

  // ||id: lq^N -> lp^N|| = N^(1/p - 1/q) = N^(1 - 2/q)
  CHECK(rows[1].n == 8);
  CHECK(rows[1].exact == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(rows[5].n == 16);
  CHECK(rows[5].exact == 4.0);

  for (const LqTableRow& row : rows) {
    CHECK(row.estimate >= row.exact * (1.0 - 1e-3));
    CHECK(row.estimate <= row.exact * (1.0 + 1e-12));
  }
  // growth in N at fixed q is the divergence the table demonstrates
  CHECK(rows[0].exact < rows[1].exact);
  CHECK(rows[1].exact < rows[2].exact);
  CHECK(rows[3].exact < rows[4].exact);

  CHECK_THROWS_AS(hsf::lq_nonexistence_demo({Exponent(2.0)}, {4}),
                  std::invalid_argument);
  CHECK_THROWS_AS(hsf::lq_nonexistence_demo({Exponent::infinity()}, {4}),
                  std::invalid_argument);
  CHECK_THROWS_AS(hsf::lq_nonexistence_demo({Exponent(3.0)}, {0}),
                  std::invalid_argument);
}
