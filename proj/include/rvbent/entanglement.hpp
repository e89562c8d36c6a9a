#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rvbent/bigint.hpp"
#include "rvbent/lattice.hpp"
#include "rvbent/transition.hpp"

namespace rvbent {

// Geometric entanglement of one holed state, in bits:
// value = log2(kohmoto_sum) - 2 log2(coverings), equal to
// -2 log2(af_amplitude / norm) of the state-vector oracle.
struct EntanglementValue {
  double value = 0.0;
  BigInt coverings;
  BigInt kohmoto_sum;
};

// Throws std::invalid_argument for non-coverable configurations (no state).
EntanglementValue geometric_entanglement(const Lattice& lat,
                                         const HoleConfig& holes);

struct SweepOptions {
  int workers = 0;  // <= 0: RVBENT_WORKERS env var, else hardware threads
  // Count non-coverable configurations as zero entanglement in the average
  // denominator instead of dropping them.
  bool include_noncoverable_as_zero = false;
  bool collect_details = false;
};

struct ConfigDetail {
  HoleConfig holes;
  bool coverable = false;
  BigInt coverings;
  BigInt kohmoto_sum;
  double entanglement = 0.0;
};

struct AverageResult {
  double average = 0.0;
  std::uint64_t config_count = 0;    // coverable configurations averaged
  std::uint64_t excluded_count = 0;  // non-coverable (and fully holed) ones
  std::vector<ConfigDetail> details;  // only with collect_details
};

// Uniform average of geometric_entanglement over coverable balanced
// configurations, in enumeration order. Fully holed configurations carry no
// state and count as excluded. Never throws on empty averages: zero
// config_count yields average 0.
AverageResult average_entanglement(const Lattice& lat, int num_holes,
                                   const SweepOptions& opts = {});

struct CurvePoint {
  int num_holes = 0;
  double density = 0.0;  // n / L
  double avg_entanglement = 0.0;
  std::uint64_t config_count = 0;
  std::uint64_t excluded_count = 0;
  std::vector<ConfigDetail> details;
};

struct EntanglementCurve {
  int rows = 0;
  int cols = 0;
  Boundary boundary = Boundary::open;
  std::string distribution;
  std::vector<CurvePoint> points;  // ordered by num_holes

  // Index of the maximizing point; ties break toward fewer holes.
  std::size_t peak_index() const;
};

// One point per even hole count 0..max_holes. Deterministic for any worker
// count: per-config values are written into index-ordered slots and folded
// sequentially.
EntanglementCurve sweep(const Lattice& lat, int max_holes,
                        const SweepOptions& opts = {});

// Best overlap of the normalized state with a fully separable product state
// found by multi-start alternating ascent over per-site qubit states. The
// first start is the alternating basis pattern, so the result is never below
// the basis-state overlap. Limited to 12 occupied sites.
double separable_maximizer_probe(const Lattice& lat, const HoleConfig& holes,
                                 int restarts = 16);

int resolve_worker_count(int requested);

}  // namespace rvbent
