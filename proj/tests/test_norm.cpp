#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracle_helpers.hpp"
#include "rvbent/covering.hpp"
#include "rvbent/lattice.hpp"
#include "rvbent/oracle.hpp"
#include "rvbent/transition.hpp"

using namespace rvbent;

TEST_CASE("loop decomposition on the single square") {
  const Lattice lat = build_lattice(2, 2);
  const auto coverings = enumerate_coverings(lat, HoleConfig{});
  REQUIRE(coverings.size() == 2);

  const TransitionGraph same = superpose(coverings[0], coverings[0]);
  const LoopDecomposition same_loops = loop_decompose(same);
  CHECK(same_loops.degenerate == 2);
  CHECK(same_loops.nondegenerate == 0);
  CHECK(same_loops.lengths.empty());
  CHECK(same_loops.total_loops() == 2);

  const TransitionGraph cross = superpose(coverings[0], coverings[1]);
  const LoopDecomposition cross_loops = loop_decompose(cross);
  CHECK(cross_loops.degenerate == 0);
  CHECK(cross_loops.nondegenerate == 1);
  CHECK(cross_loops.lengths == std::vector<int>{4});

  CHECK(overlap(coverings[0], coverings[0]) == BigRational(1));
  CHECK(overlap(coverings[0], coverings[1]) == BigRational(1, 2));
  CHECK(overlap(coverings[1], coverings[0]) == BigRational(1, 2));
}

TEST_CASE("superposition requires matching occupied sets") {
  const Lattice lat = build_lattice(2, 3);
  const auto full = enumerate_coverings(lat, HoleConfig{});
  const auto holed =
      enumerate_coverings(lat, make_hole_config(lat, {0, 1}));
  REQUIRE_FALSE(full.empty());
  REQUIRE_FALSE(holed.empty());
  CHECK_THROWS_AS(superpose(full[0], holed[0]), std::invalid_argument);
  CHECK_THROWS_AS(norm_value({full[0], holed[0]}), std::invalid_argument);
  CHECK_THROWS_AS(norm_value({}), std::invalid_argument);
}

TEST_CASE("pair sums on small lattices") {
  const Lattice square = build_lattice(2, 2);
  const auto sq = enumerate_coverings(square, HoleConfig{});
  const NormValue nv_sq = norm_value(sq);
  // The two weightings already disagree here: the single nondegenerate
  // 4-loop counts 2 in one and 4 in the other.
  CHECK(nv_sq.kohmoto_sum == 12);
  CHECK(nv_sq.quad_loop_sum == 16);
  CHECK(norm_squared(nv_sq, 2) == BigRational(3));

  const Lattice lat23 = build_lattice(2, 3);
  const auto c23 = enumerate_coverings(lat23, HoleConfig{});
  REQUIRE(c23.size() == 3);
  const NormValue nv23 = norm_value(c23);
  CHECK(nv23.kohmoto_sum == 44);
  CHECK(norm_squared(nv23, 3) == BigRational(11, 2));

  // A single dimer has no nondegenerate loops, so the weightings agree.
  const Lattice pair = build_lattice(1, 2);
  const NormValue nv_pair = norm_value(enumerate_coverings(pair, HoleConfig{}));
  CHECK(nv_pair.kohmoto_sum == 2);
  CHECK(nv_pair.quad_loop_sum == 2);
  CHECK(norm_squared(nv_pair, 1) == BigRational(1));
}

TEST_CASE("pair sum equals the direct double loop over ordered pairs") {
  const Lattice lat = build_lattice(4, 4);
  for (const auto& holes :
       {HoleConfig{}, make_hole_config(lat, {0, 1}),
        make_hole_config(lat, {5, 6, 9, 10})}) {
    const auto coverings = enumerate_coverings(lat, holes);
    REQUIRE_FALSE(coverings.empty());
    BigInt direct = 0;
    for (const auto& c1 : coverings) {
      for (const auto& c2 : coverings) {
        const LoopDecomposition loops = loop_decompose(superpose(c1, c2));
        direct += pow2(static_cast<unsigned>(loops.total_loops()));
      }
    }
    CHECK(direct == norm_value(coverings).kohmoto_sum);
  }
}

TEST_CASE("overlap is symmetric, positive and bounded by one") {
  const Lattice lat = build_lattice(2, 4);
  const auto coverings = enumerate_coverings(lat, HoleConfig{});
  for (const auto& c1 : coverings) {
    for (const auto& c2 : coverings) {
      const BigRational o = overlap(c1, c2);
      CHECK(o > 0);
      CHECK(o <= 1);
      CHECK(o == overlap(c2, c1));
      if (&c1 == &c2) CHECK(o == 1);
    }
  }
}

TEST_CASE("state-vector oracle certifies norms, amplitudes and signs") {
  const int shapes[][2] = {{1, 2}, {2, 2}, {2, 3}, {2, 4}, {3, 4}, {2, 6}, {4, 4}};
  for (const auto& shape : shapes) {
    const Lattice lat = build_lattice(shape[0], shape[1]);
    for (int num_holes = 0; num_holes <= 4; num_holes += 2) {
      if (num_holes > lat.num_sites()) continue;
      for (std::uint32_t seed = 0; seed < 4; ++seed) {
        const HoleConfig cfg = rvbent_test::random_config(
            lat, num_holes, 77u * seed + static_cast<std::uint32_t>(num_holes));
        if (!is_coverable(lat, cfg)) continue;
        const auto coverings = enumerate_coverings(lat, cfg);
        const int m = static_cast<int>(coverings.front().dimers.size());
        const NormValue nv = norm_value(coverings);
        const double exact = norm_squared(nv, m).convert_to<double>();
        const OracleRecord rec = statevector_oracle(lat, cfg);
        CHECK(rec.norm * rec.norm ==
              doctest::Approx(exact).epsilon(1e-12));
        // Every covering hits the alternating pattern with the same positive
        // weight, so its amplitude is the covering count times 2^(-m/2) and
        // no other basis amplitude can exceed it.
        const double af = coverings.size() * std::exp2(-0.5 * m);
        CHECK(rec.af_amplitude == doctest::Approx(af).epsilon(1e-12));
        CHECK(rec.basis_max_amplitude == doctest::Approx(af).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("oracle rejects oversized and stateless configurations") {
  const Lattice big = build_lattice(4, 6);
  CHECK_THROWS_AS(statevector_oracle(big, HoleConfig{}), std::domain_error);

  const Lattice lat = build_lattice(4, 4);
  const HoleConfig fenced = make_hole_config(lat, {0, 5, 8, 13, 3, 6, 11, 14});
  CHECK_THROWS_AS(statevector_oracle(lat, fenced), std::invalid_argument);
}

TEST_CASE("squared norm is bounded below by the covering count") {
  const Lattice lat = build_lattice(3, 4);
  for (std::uint32_t seed = 0; seed < 10; ++seed) {
    const HoleConfig cfg = rvbent_test::random_config(lat, 2, seed);
    const auto coverings = enumerate_coverings(lat, cfg);
    if (coverings.empty()) continue;
    const int m = static_cast<int>(coverings.front().dimers.size());
    CHECK(norm_squared(norm_value(coverings), m) >=
          BigRational(BigInt(coverings.size())));
  }
}

TEST_CASE("transition matrix marks shared dimers") {
  const Lattice lat = build_lattice(1, 4);
  const auto coverings = enumerate_coverings(lat, HoleConfig{});
  REQUIRE(coverings.size() == 1);
  const std::string rendered =
      format_transition_matrix(lat, coverings[0], coverings[0]);
  CHECK(rendered ==
        "0 2 0 0\n"
        "2 0 0 0\n"
        "0 0 0 2\n"
        "0 0 2 0\n");
}
