#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "rvbent/entanglement.hpp"
#include "rvbent/lattice.hpp"
#include "rvbent/oracle.hpp"

using namespace rvbent;

TEST_CASE("entanglement of small closed-form cases") {
  // One singlet: E = -2 log2(1/sqrt 2) = 1.
  const EntanglementValue one = geometric_entanglement(build_lattice(1, 2), {});
  CHECK(one.value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(one.coverings == 1);
  CHECK(one.kohmoto_sum == 2);

  // Single square: log2(12) - 2 log2(2) = log2 3.
  const EntanglementValue square =
      geometric_entanglement(build_lattice(2, 2), {});
  CHECK(square.value == doctest::Approx(std::log2(3.0)).epsilon(1e-14));

  // 2x3: log2(44 / 9).
  const EntanglementValue rect = geometric_entanglement(build_lattice(2, 3), {});
  CHECK(rect.value == doctest::Approx(std::log2(44.0 / 9.0)).epsilon(1e-14));

  // A unique covering of 2m sites gives exactly one bit per dimer.
  const EntanglementValue path = geometric_entanglement(build_lattice(1, 6), {});
  CHECK(path.coverings == 1);
  CHECK(path.value == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("entanglement matches the state-vector oracle identity") {
  const Lattice lat = build_lattice(4, 4);
  for (const auto& holes :
       {HoleConfig{}, make_hole_config(lat, {0, 1}),
        make_hole_config(lat, {2, 7, 9, 12})}) {
    if (!is_coverable(lat, holes)) continue;
    const EntanglementValue ev = geometric_entanglement(lat, holes);
    const OracleRecord rec = statevector_oracle(lat, holes);
    const double from_oracle = -2.0 * std::log2(rec.af_amplitude / rec.norm);
    CHECK(ev.value == doctest::Approx(from_oracle).epsilon(1e-12));
  }
}

TEST_CASE("non-coverable configurations carry no state") {
  const Lattice lat = build_lattice(4, 4);
  const HoleConfig fenced = make_hole_config(lat, {0, 5, 8, 13, 3, 6, 11, 14});
  CHECK_THROWS_AS(geometric_entanglement(lat, fenced), std::invalid_argument);
}

TEST_CASE("averages over the single square") {
  const Lattice lat = build_lattice(2, 2);
  const AverageResult none = average_entanglement(lat, 0);
  CHECK(none.average == doctest::Approx(std::log2(3.0)));
  CHECK(none.config_count == 1);
  CHECK(none.excluded_count == 0);

  // Every one-pair configuration leaves one adjacent pair: a lone singlet.
  const AverageResult pair = average_entanglement(lat, 2);
  CHECK(pair.average == doctest::Approx(1.0));
  CHECK(pair.config_count == 4);
  CHECK(pair.excluded_count == 0);

  // Fully holed: no state, nothing averaged.
  const AverageResult empty = average_entanglement(lat, 4);
  CHECK(empty.average == 0.0);
  CHECK(empty.config_count == 0);
  CHECK(empty.excluded_count == 1);
}

TEST_CASE("averaging non-coverable configurations as zeros rescales") {
  const Lattice lat = build_lattice(2, 4);
  const AverageResult dropped = average_entanglement(lat, 4);
  CHECK(dropped.config_count == 26);
  CHECK(dropped.excluded_count == 10);

  SweepOptions opts;
  opts.include_noncoverable_as_zero = true;
  const AverageResult zeros = average_entanglement(lat, 4, opts);
  CHECK(zeros.config_count == 36);
  CHECK(zeros.excluded_count == 0);
  CHECK(zeros.average ==
        doctest::Approx(dropped.average * 26.0 / 36.0).epsilon(1e-13));
}

TEST_CASE("sweep points, densities and peak location") {
  const Lattice lat = build_lattice(2, 2);
  const EntanglementCurve curve = sweep(lat, 4);
  REQUIRE(curve.points.size() == 3);
  CHECK(curve.distribution == "uniform-coverable");
  CHECK(curve.points[0].num_holes == 0);
  CHECK(curve.points[1].num_holes == 2);
  CHECK(curve.points[2].num_holes == 4);
  CHECK(curve.points[0].density == 0.0);
  CHECK(curve.points[1].density == doctest::Approx(0.5));
  CHECK(curve.points[2].density == doctest::Approx(1.0));
  // log2 3 at zero holes beats the lone-singlet average.
  CHECK(curve.peak_index() == 0);

  CHECK_THROWS_AS(sweep(lat, 3), std::invalid_argument);
  CHECK_THROWS_AS(sweep(lat, 6), std::invalid_argument);
  CHECK_THROWS_AS(sweep(lat, -2), std::invalid_argument);
}

TEST_CASE("sweeps are bit-identical for any worker count") {
  const Lattice lat = build_lattice(3, 4);
  SweepOptions serial;
  serial.workers = 1;
  SweepOptions wide;
  wide.workers = 5;
  const EntanglementCurve a = sweep(lat, 12, serial);
  const EntanglementCurve b = sweep(lat, 12, wide);
  REQUIRE(a.points.size() == b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    CHECK(a.points[i].avg_entanglement == b.points[i].avg_entanglement);
    CHECK(a.points[i].config_count == b.points[i].config_count);
    CHECK(a.points[i].excluded_count == b.points[i].excluded_count);
  }
}

TEST_CASE("collected details match per-configuration recomputation") {
  const Lattice lat = build_lattice(2, 3);
  SweepOptions opts;
  opts.collect_details = true;
  const AverageResult avg = average_entanglement(lat, 2, opts);
  REQUIRE(avg.details.size() == 9);
  for (std::uint64_t i = 0; i < avg.details.size(); ++i) {
    const ConfigDetail& det = avg.details[i];
    CHECK(det.holes == hole_config_at(lat, 2, i));
    CHECK(det.coverable == is_coverable(lat, det.holes));
    if (det.coverable) {
      const EntanglementValue ev = geometric_entanglement(lat, det.holes);
      CHECK(det.coverings == ev.coverings);
      CHECK(det.kohmoto_sum == ev.kohmoto_sum);
      CHECK(det.entanglement == ev.value);
    }
  }
}

TEST_CASE("average guard refuses runaway enumerations") {
  const Lattice lat = build_lattice(6, 6);
  CHECK_THROWS_AS(average_entanglement(lat, 18), std::invalid_argument);
}

TEST_CASE("worker resolution prefers explicit requests, then environment") {
  CHECK(resolve_worker_count(3) == 3);
  setenv("RVBENT_WORKERS", "2", 1);
  CHECK(resolve_worker_count(0) == 2);
  CHECK(resolve_worker_count(7) == 7);
  unsetenv("RVBENT_WORKERS");
  CHECK(resolve_worker_count(0) >= 1);
}

TEST_CASE("separable probe reaches the known optima") {
  // A lone singlet has maximal product overlap 1/sqrt 2.
  const double lone = separable_maximizer_probe(build_lattice(1, 2), {}, 4);
  CHECK(lone == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));

  // A unique covering factorizes, so the product bound 2^(-m/2) is exact.
  const double path = separable_maximizer_probe(build_lattice(1, 4), {}, 4);
  CHECK(path == doctest::Approx(0.5).epsilon(1e-9));

  // Single square: the alternating pattern gives 2/sqrt 12 and the ascent
  // must never fall below that basis overlap.
  const Lattice square = build_lattice(2, 2);
  const double probe = separable_maximizer_probe(square, {}, 8);
  const double basis = 2.0 / std::sqrt(12.0);
  CHECK(probe >= basis - 1e-12);
  CHECK(probe <= 1.0 + 1e-12);

  // Probe lower bound against exact entanglement across 2x4 configurations.
  const Lattice ladder = build_lattice(2, 4);
  for (int i = 0; i < 16; i += 3) {
    const HoleConfig cfg = hole_config_at(ladder, 2, static_cast<std::uint64_t>(i));
    if (!is_coverable(ladder, cfg)) continue;
    const double value = geometric_entanglement(ladder, cfg).value;
    const double p = separable_maximizer_probe(ladder, cfg, 6);
    CHECK(p >= std::exp2(-0.5 * value) - 1e-9);
    CHECK(p <= 1.0 + 1e-9);
  }

  CHECK_THROWS_AS(separable_maximizer_probe(build_lattice(4, 4), {}, 2),
                  std::domain_error);
}
