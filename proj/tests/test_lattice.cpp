#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "rvbent/lattice.hpp"

using namespace rvbent;

TEST_CASE("lattice geometry and sublattices") {
  const Lattice lat = build_lattice(2, 3);
  CHECK(lat.rows() == 2);
  CHECK(lat.cols() == 3);
  CHECK(lat.num_sites() == 6);
  CHECK(lat.half_sites() == 3);
  CHECK(lat.boundary() == Boundary::open);
  CHECK(lat.spec_string() == "2x3:open");
  CHECK(lat.site(1, 2) == 5);
  CHECK(lat.row_of(5) == 1);
  CHECK(lat.col_of(5) == 2);

  CHECK(lat.sublattice_a() == std::vector<int>{0, 2, 4});
  CHECK(lat.sublattice_b() == std::vector<int>{1, 3, 5});
  CHECK(lat.neighbors(0) == std::vector<int>{1, 3});
  CHECK(lat.neighbors(1) == std::vector<int>{0, 2, 4});
  CHECK(lat.neighbors(4) == std::vector<int>{1, 3, 5});
}

TEST_CASE("periodic lattice wraps both directions") {
  const Lattice lat = build_lattice(4, 4, Boundary::periodic);
  CHECK(lat.neighbors(0) == std::vector<int>{1, 3, 4, 12});
  CHECK(lat.neighbors(5) == std::vector<int>{1, 4, 6, 9});
  for (int s = 0; s < lat.num_sites(); ++s)
    CHECK(lat.neighbors(s).size() == 4);
  // Every edge joins the two sublattices.
  for (int s = 0; s < lat.num_sites(); ++s)
    for (int t : lat.neighbors(s))
      CHECK(lat.is_sublattice_a(s) != lat.is_sublattice_a(t));
}

TEST_CASE("lattice construction rejects bad shapes") {
  CHECK_THROWS_AS(build_lattice(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_lattice(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_lattice(10, 10), std::invalid_argument);
  CHECK_THROWS_AS(build_lattice(2, 4, Boundary::periodic),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_lattice(4, 5, Boundary::periodic),
                  std::invalid_argument);
  CHECK_NOTHROW(build_lattice(4, 6, Boundary::periodic));
  CHECK_NOTHROW(build_lattice(8, 8));
  CHECK_THROWS_AS(boundary_from_string("twisted"), std::invalid_argument);
}

TEST_CASE("hole configurations stay balanced and canonical") {
  const Lattice lat = build_lattice(4, 4);
  const HoleConfig cfg = make_hole_config(lat, {3, 0, 5, 6});
  CHECK(cfg.holes_a == std::vector<int>{0, 5});
  CHECK(cfg.holes_b == std::vector<int>{3, 6});
  CHECK(cfg.pairs() == 2);
  CHECK(cfg.num_holes() == 4);
  CHECK(cfg.all_sites() == std::vector<int>{0, 3, 5, 6});
  CHECK_NOTHROW(validate_hole_config(lat, cfg));

  CHECK_THROWS_AS(make_hole_config(lat, {0}), std::invalid_argument);
  CHECK_THROWS_AS(make_hole_config(lat, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(make_hole_config(lat, {0, 16}), std::invalid_argument);
  CHECK_THROWS_AS(make_hole_config(lat, {-1, 1}), std::invalid_argument);

  HoleConfig scrambled;
  scrambled.holes_a = {5, 0};
  scrambled.holes_b = {3, 6};
  CHECK_THROWS_AS(validate_hole_config(lat, scrambled), std::invalid_argument);

  // Emptying one whole sublattice is maximally unbalanced and rejected.
  CHECK_THROWS_AS(make_hole_config(lat, lat.sublattice_a()),
                  std::invalid_argument);
}

TEST_CASE("occupied sites complement the holes") {
  const Lattice lat = build_lattice(2, 3);
  const HoleConfig cfg = make_hole_config(lat, {0, 1});
  CHECK(occupied_sites(lat, cfg) == std::vector<int>{2, 3, 4, 5});
  CHECK(occupied_sites(lat, HoleConfig{}) ==
        std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("configuration counting and enumeration agree") {
  const Lattice lat = build_lattice(4, 6);
  CHECK(hole_config_count(lat, 0) == 1);
  CHECK(hole_config_count(lat, 2) == 144);
  CHECK(hole_config_count(lat, 4) == 4356);
  CHECK(hole_config_count(lat, 24) == 1);
  CHECK(hole_config_count(lat, 26) == 0);
  CHECK_THROWS_AS(hole_config_count(lat, 3), std::invalid_argument);
  CHECK_THROWS_AS(hole_config_count(lat, -2), std::invalid_argument);

  const Lattice small = build_lattice(2, 3);
  const auto configs = enumerate_hole_configs(small, 2);
  CHECK(configs.size() == 9);
  CHECK(configs.front().holes_a == std::vector<int>{0});
  CHECK(configs.front().holes_b == std::vector<int>{1});
  CHECK(configs.back().holes_a == std::vector<int>{4});
  CHECK(configs.back().holes_b == std::vector<int>{5});
  for (std::size_t i = 0; i < configs.size(); ++i) {
    CHECK(hole_config_at(small, 2, i) == configs[i]);
    CHECK_NOTHROW(validate_hole_config(small, configs[i]));
  }
  CHECK_THROWS_AS(hole_config_at(small, 2, 9), std::out_of_range);

  // The guard refuses to materialize beyond the limit.
  const Lattice big = build_lattice(8, 8);
  CHECK_THROWS_AS(enumerate_hole_configs(big, 16), std::invalid_argument);
}

TEST_CASE("coverability matches hand-built fence patterns") {
  const Lattice lat = build_lattice(4, 4);
  CHECK(is_coverable(lat, HoleConfig{}));

  // Holes at 3, 6, 11, 14 fence off sites 7 and 15 together with the edge.
  const HoleConfig fenced = make_hole_config(lat, {0, 5, 8, 13, 3, 6, 11, 14});
  CHECK_FALSE(is_coverable(lat, fenced));

  const HoleConfig open_pair = make_hole_config(lat, {0, 1});
  CHECK(is_coverable(lat, open_pair));

  const Lattice ladder = build_lattice(2, 4);
  // B-holes next to the corner, A-holes elsewhere: corner 0 is fenced.
  const HoleConfig corner = make_hole_config(ladder, {1, 4, 5, 7});
  CHECK_FALSE(is_coverable(ladder, corner));
  CHECK(is_coverable(ladder, make_hole_config(ladder, {0, 1})));

  // A fully holed lattice is trivially coverable by the empty covering.
  std::vector<int> all(static_cast<std::size_t>(lat.num_sites()));
  for (int s = 0; s < lat.num_sites(); ++s) all[static_cast<std::size_t>(s)] = s;
  CHECK(is_coverable(lat, make_hole_config(lat, all)));
}

TEST_CASE("closed-form pathological fraction") {
  // m = 8 slots per sublattice: 4*(C(7,2)-1)/C(8,2)^2 = 80/784 = 5/49.
  CHECK(pathological_probability_estimate(4, 4) == BigRational(5, 49));
  // m = 4: 4*(C(3,2)-1)/C(4,2)^2 = 8/36 = 2/9.
  CHECK(pathological_probability_estimate(2, 4) == BigRational(2, 9));
  // m = 12: 4*(C(11,2)-1)/C(12,2)^2 = 216/4356 = 6/121.
  CHECK(pathological_probability_estimate(4, 6) == BigRational(6, 121));
  CHECK_THROWS_AS(pathological_probability_estimate(2, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(pathological_probability_estimate(3, 3),
                  std::invalid_argument);
}
