#include "rvbent/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <thread>

#include "rvbent/covering.hpp"
#include "rvbent/oracle.hpp"

namespace rvbent {

EntanglementValue geometric_entanglement(const Lattice& lat,
                                         const HoleConfig& holes) {
  const std::vector<DimerCovering> coverings = enumerate_coverings(lat, holes);
  if (coverings.empty())
    throw std::invalid_argument(
        "configuration is not coverable, so it carries no state");
  EntanglementValue ev;
  ev.coverings = BigInt(coverings.size());
  ev.kohmoto_sum = norm_value(coverings).kohmoto_sum;
  ev.value = log2_bigint(ev.kohmoto_sum) - 2.0 * log2_bigint(ev.coverings);
  return ev;
}

int resolve_worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("RVBENT_WORKERS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace {

constexpr std::uint64_t kMaxConfigsPerAverage = 20'000'000;
constexpr std::uint64_t kMaxConfigsWithDetails = 1'000'000;

// Walks the lexicographic configuration order without per-step index
// arithmetic: positions of the holes inside each sublattice list, advanced
// like an odometer (B fast, A slow).
struct ConfigCursor {
  const Lattice* lat = nullptr;
  std::vector<int> pos_a;
  std::vector<int> pos_b;

  void init(const Lattice& lattice, int num_holes, std::uint64_t index) {
    lat = &lattice;
    const HoleConfig cfg = hole_config_at(lattice, num_holes, index);
    pos_a = to_positions(lattice.sublattice_a(), cfg.holes_a);
    pos_b = to_positions(lattice.sublattice_b(), cfg.holes_b);
  }

  HoleConfig config() const {
    HoleConfig cfg;
    cfg.holes_a = to_sites(lat->sublattice_a(), pos_a);
    cfg.holes_b = to_sites(lat->sublattice_b(), pos_b);
    return cfg;
  }

  void next() {
    if (!advance(pos_b, lat->half_sites())) {
      reset_first(pos_b);
      advance(pos_a, lat->half_sites());
    }
  }

 private:
  static std::vector<int> to_positions(const std::vector<int>& pool,
                                       const std::vector<int>& sites) {
    std::vector<int> out;
    out.reserve(sites.size());
    for (int s : sites)
      out.push_back(static_cast<int>(
          std::lower_bound(pool.begin(), pool.end(), s) - pool.begin()));
    return out;
  }

  static std::vector<int> to_sites(const std::vector<int>& pool,
                                   const std::vector<int>& positions) {
    std::vector<int> out;
    out.reserve(positions.size());
    for (int p : positions) out.push_back(pool[static_cast<std::size_t>(p)]);
    return out;
  }

  static bool advance(std::vector<int>& positions, int pool_size) {
    const int k = static_cast<int>(positions.size());
    for (int i = k - 1; i >= 0; --i) {
      if (positions[static_cast<std::size_t>(i)] < pool_size - k + i) {
        ++positions[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
          positions[static_cast<std::size_t>(j)] =
              positions[static_cast<std::size_t>(j - 1)] + 1;
        return true;
      }
    }
    return false;
  }

  static void reset_first(std::vector<int>& positions) {
    for (std::size_t i = 0; i < positions.size(); ++i)
      positions[i] = static_cast<int>(i);
  }
};

enum class ConfigStatus : std::uint8_t { coverable, noncoverable, vacuous };

struct ConfigRecord {
  double entanglement = 0.0;
  ConfigStatus status = ConfigStatus::coverable;
};

}  // namespace

AverageResult average_entanglement(const Lattice& lat, int num_holes,
                                   const SweepOptions& opts) {
  const BigInt total_big = hole_config_count(lat, num_holes);
  if (total_big > BigInt(kMaxConfigsPerAverage))
    throw std::invalid_argument(
        to_string(total_big) +
        " configurations is above the exact-average limit of " +
        std::to_string(kMaxConfigsPerAverage));
  const std::uint64_t total = total_big.convert_to<std::uint64_t>();
  if (opts.collect_details && total > kMaxConfigsWithDetails)
    throw std::invalid_argument(
        "collect_details is limited to " +
        std::to_string(kMaxConfigsWithDetails) + " configurations");

  AverageResult result;
  if (total == 0) return result;

  std::vector<ConfigRecord> records(total);
  std::vector<ConfigDetail> details;
  if (opts.collect_details) details.resize(total);
  const bool vacuous = num_holes == lat.num_sites();

  auto run_block = [&](std::uint64_t begin, std::uint64_t end) {
    ConfigCursor cursor;
    cursor.init(lat, num_holes, begin);
    for (std::uint64_t idx = begin; idx < end; ++idx, cursor.next()) {
      const HoleConfig cfg = cursor.config();
      ConfigRecord& rec = records[idx];
      BigInt coverings = 0;
      BigInt kohmoto = 0;
      if (vacuous) {
        rec.status = ConfigStatus::vacuous;
        coverings = 1;
        kohmoto = 1;
      } else {
        const std::vector<DimerCovering> covs = enumerate_coverings(lat, cfg);
        if (covs.empty()) {
          rec.status = ConfigStatus::noncoverable;
        } else {
          rec.status = ConfigStatus::coverable;
          coverings = BigInt(covs.size());
          kohmoto = norm_value(covs).kohmoto_sum;
          rec.entanglement =
              log2_bigint(kohmoto) - 2.0 * log2_bigint(coverings);
        }
      }
      if (opts.collect_details) {
        ConfigDetail& det = details[idx];
        det.holes = cfg;
        det.coverable = rec.status != ConfigStatus::noncoverable;
        det.coverings = std::move(coverings);
        det.kohmoto_sum = std::move(kohmoto);
        det.entanglement = rec.entanglement;
      }
    }
  };

  const int workers = static_cast<int>(std::min<std::uint64_t>(
      static_cast<std::uint64_t>(resolve_worker_count(opts.workers)), total));
  if (workers <= 1 || total < 128) {
    run_block(0, total);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));
    const std::uint64_t chunk =
        (total + static_cast<std::uint64_t>(workers) - 1) /
        static_cast<std::uint64_t>(workers);
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t begin = chunk * static_cast<std::uint64_t>(w);
      const std::uint64_t end = std::min(total, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&, w, begin, end] {
        try {
          run_block(begin, end);
        } catch (...) {
          failures[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& failure : failures)
      if (failure) std::rethrow_exception(failure);
  }

  // Sequential fold in configuration order keeps the result bit-identical
  // for any worker count.
  double sum = 0.0;
  for (const ConfigRecord& rec : records) {
    switch (rec.status) {
      case ConfigStatus::coverable:
        sum += rec.entanglement;
        ++result.config_count;
        break;
      case ConfigStatus::noncoverable:
        if (opts.include_noncoverable_as_zero)
          ++result.config_count;
        else
          ++result.excluded_count;
        break;
      case ConfigStatus::vacuous:
        ++result.excluded_count;
        break;
    }
  }
  result.average = result.config_count
                       ? sum / static_cast<double>(result.config_count)
                       : 0.0;
  result.details = std::move(details);
  return result;
}

std::size_t EntanglementCurve::peak_index() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < points.size(); ++i)
    if (points[i].avg_entanglement > points[best].avg_entanglement) best = i;
  return best;
}

EntanglementCurve sweep(const Lattice& lat, int max_holes,
                        const SweepOptions& opts) {
  if (max_holes < 0 || max_holes > lat.num_sites())
    throw std::invalid_argument("max_holes must lie in [0, num_sites]");
  if (max_holes % 2 != 0)
    throw std::invalid_argument("max_holes must be even");
  EntanglementCurve curve;
  curve.rows = lat.rows();
  curve.cols = lat.cols();
  curve.boundary = lat.boundary();
  curve.distribution = opts.include_noncoverable_as_zero
                           ? "uniform-noncoverable-as-zero"
                           : "uniform-coverable";
  for (int nh = 0; nh <= max_holes; nh += 2) {
    AverageResult avg = average_entanglement(lat, nh, opts);
    CurvePoint point;
    point.num_holes = nh;
    point.density = static_cast<double>(nh) / lat.num_sites();
    point.avg_entanglement = avg.average;
    point.config_count = avg.config_count;
    point.excluded_count = avg.excluded_count;
    point.details = std::move(avg.details);
    curve.points.push_back(std::move(point));
  }
  return curve;
}

double separable_maximizer_probe(const Lattice& lat, const HoleConfig& holes,
                                 int restarts) {
  constexpr int kProbeMaxOccupied = 12;
  const std::vector<int> occupied = occupied_sites(lat, holes);
  const int p = static_cast<int>(occupied.size());
  if (p > kProbeMaxOccupied)
    throw std::domain_error("separable probe limited to " +
                            std::to_string(kProbeMaxOccupied) +
                            " occupied sites, got " + std::to_string(p));
  const std::vector<double> amps = state_amplitudes(lat, holes);
  double norm_sq = 0.0;
  for (double a : amps) norm_sq += a * a;
  const double norm = std::sqrt(norm_sq);
  if (p == 0) return 1.0;

  const std::size_t dim = amps.size();
  std::vector<double> up(static_cast<std::size_t>(p));
  std::vector<double> down(static_cast<std::size_t>(p));
  double best = 0.0;

  for (int r = 0; r < std::max(restarts, 1); ++r) {
    if (r == 0) {
      // The alternating pattern, so the probe never lands below the
      // basis-state overlap.
      for (int i = 0; i < p; ++i) {
        const bool on_a = lat.is_sublattice_a(occupied[static_cast<std::size_t>(i)]);
        up[static_cast<std::size_t>(i)] = on_a ? 1.0 : 0.0;
        down[static_cast<std::size_t>(i)] = on_a ? 0.0 : 1.0;
      }
    } else {
      std::mt19937 rng(20240803u + static_cast<unsigned>(r));
      std::normal_distribution<double> gauss;
      for (int i = 0; i < p; ++i) {
        double u = gauss(rng);
        double d = gauss(rng);
        double len = std::hypot(u, d);
        while (len < 1e-6) {
          u = gauss(rng);
          d = gauss(rng);
          len = std::hypot(u, d);
        }
        up[static_cast<std::size_t>(i)] = u / len;
        down[static_cast<std::size_t>(i)] = d / len;
      }
    }

    // Coordinate ascent: the overlap is linear in each site's qubit, so the
    // optimal update is the normalized linear coefficient pair.
    double value = 0.0;
    for (int pass = 0; pass < 200; ++pass) {
      double pass_value = value;
      for (int i = 0; i < p; ++i) {
        double coeff_up = 0.0;
        double coeff_down = 0.0;
        for (std::size_t x = 0; x < dim; ++x) {
          if (amps[x] == 0.0) continue;
          double prod = amps[x];
          for (int t = 0; t < p; ++t) {
            if (t == i) continue;
            prod *= ((x >> t) & 1) ? down[static_cast<std::size_t>(t)]
                                   : up[static_cast<std::size_t>(t)];
          }
          if ((x >> i) & 1)
            coeff_down += prod;
          else
            coeff_up += prod;
        }
        const double len = std::hypot(coeff_up, coeff_down);
        if (len < 1e-300) continue;
        up[static_cast<std::size_t>(i)] = coeff_up / len;
        down[static_cast<std::size_t>(i)] = coeff_down / len;
        pass_value = len;
      }
      if (pass_value - value <= 1e-14 * std::max(1.0, std::fabs(pass_value))) {
        value = pass_value;
        break;
      }
      value = pass_value;
    }
    best = std::max(best, value);
  }
  return best / norm;
}

}  // namespace rvbent
