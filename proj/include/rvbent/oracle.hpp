#pragma once

#include "rvbent/covering.hpp"
#include "rvbent/lattice.hpp"

namespace rvbent {

// Ground truth from the explicit amplitude vector of the unnormalized sum of
// covering product states, singlets taken A-site first.
struct OracleRecord {
  double norm = 0.0;                 // ||sum of covering states||
  double af_amplitude = 0.0;         // amplitude on the alternating pattern
                                     // (A sites 0, B sites 1)
  double basis_max_amplitude = 0.0;  // max |amplitude| over basis states
};

inline constexpr int kOracleMaxOccupied = 16;

// Throws std::domain_error when more than kOracleMaxOccupied sites are
// occupied and std::invalid_argument when the configuration is not coverable.
OracleRecord statevector_oracle(const Lattice& lat, const HoleConfig& holes);

// Raw amplitudes of the unnormalized covering sum, indexed by basis bitmask
// in sorted occupied-site position order (bit i = spin-down on the i-th
// occupied site). Same limits and errors as statevector_oracle.
std::vector<double> state_amplitudes(const Lattice& lat,
                                     const HoleConfig& holes);

}  // namespace rvbent
