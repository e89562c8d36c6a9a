#include "rvbent/oracle.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace rvbent {

std::vector<double> state_amplitudes(const Lattice& lat,
                                     const HoleConfig& holes) {
  const std::vector<int> occupied = occupied_sites(lat, holes);
  const int p = static_cast<int>(occupied.size());
  if (p > kOracleMaxOccupied)
    throw std::domain_error("state-vector oracle limited to " +
                            std::to_string(kOracleMaxOccupied) +
                            " occupied sites, got " + std::to_string(p));
  const std::vector<DimerCovering> coverings = enumerate_coverings(lat, holes);
  if (coverings.empty())
    throw std::invalid_argument(
        "configuration is not coverable, so the state is empty");

  std::vector<int> pos(static_cast<std::size_t>(lat.num_sites()), -1);
  for (int i = 0; i < p; ++i)
    pos[static_cast<std::size_t>(occupied[static_cast<std::size_t>(i)])] = i;

  std::vector<double> amps(std::size_t(1) << p, 0.0);
  for (const DimerCovering& cov : coverings) {
    const int m = static_cast<int>(cov.dimers.size());
    const double coeff = std::pow(0.5, 0.5 * m);
    // Expand the singlet product (|01> - |10>)/sqrt(2) per dimer; choice bit
    // 1 picks the |10> branch and flips the sign.
    for (std::uint32_t choice = 0; choice < (std::uint32_t(1) << m); ++choice) {
      std::size_t index = 0;
      for (int d = 0; d < m; ++d) {
        const auto [a, b] = cov.dimers[static_cast<std::size_t>(d)];
        const int down_site = ((choice >> d) & 1) ? a : b;
        index |= std::size_t(1) << pos[static_cast<std::size_t>(down_site)];
      }
      const double sign = (__builtin_popcount(choice) & 1) ? -1.0 : 1.0;
      amps[index] += sign * coeff;
    }
  }
  return amps;
}

OracleRecord statevector_oracle(const Lattice& lat, const HoleConfig& holes) {
  const std::vector<double> amps = state_amplitudes(lat, holes);
  const std::vector<int> occupied = occupied_sites(lat, holes);

  std::size_t af_index = 0;
  for (std::size_t i = 0; i < occupied.size(); ++i)
    if (!lat.is_sublattice_a(occupied[i])) af_index |= std::size_t(1) << i;

  OracleRecord rec;
  double norm_sq = 0.0;
  for (double a : amps) {
    norm_sq += a * a;
    rec.basis_max_amplitude = std::max(rec.basis_max_amplitude, std::fabs(a));
  }
  rec.norm = std::sqrt(norm_sq);
  rec.af_amplitude = amps[af_index];
  return rec;
}

}  // namespace rvbent
