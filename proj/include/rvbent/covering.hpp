#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rvbent/bigint.hpp"
#include "rvbent/lattice.hpp"

namespace rvbent {

// A perfect matching of the occupied sites by nearest-neighbour dimers.
// Dimers are stored A-site first and sorted by A-site index.
struct DimerCovering {
  std::vector<std::pair<int, int>> dimers;

  bool operator==(const DimerCovering&) const = default;
};

// All coverings of the occupied sublattice, complete and duplicate-free, in
// the deterministic order produced by lowest-uncovered-site-first
// backtracking. Empty when the configuration is not coverable. A fully holed
// lattice has exactly one covering, the empty one.
std::vector<DimerCovering> enumerate_coverings(const Lattice& lat,
                                               const HoleConfig& holes);

// Covering count by the same backtracking, without materializing coverings.
BigInt count_coverings(const Lattice& lat, const HoleConfig& holes);

// Independent count: permanent of the occupied biadjacency matrix by the
// Ryser inclusion-exclusion formula with Gray-code row-sum updates. Oracle
// for count_coverings; limited to 31 dimer slots.
BigInt permanent_count(const Lattice& lat, const HoleConfig& holes);

// Closed-form open-boundary dimer count: the double product over Brillouin
// indices of (4cos^2(pi j/(rows+1)) + 4cos^2(pi k/(cols+1))), taken to the
// 1/4 power. Evaluated in extended precision, rounded, and verified integral
// to 1e-6 relative tolerance (std::runtime_error on failure).
BigInt fisher_count(int rows, int cols);

// Catalan's constant by direct series summation, remainder below 1e-12.
double catalan_constant();

// Periodic-boundary covering-count growth estimate (e^(2G/pi))^L.
double periodic_entropy_estimate(int half_sites);

// True iff the covering is a valid nearest-neighbour perfect matching of the
// occupied sites, A-site first in every dimer.
bool covering_is_valid(const Lattice& lat, const HoleConfig& holes,
                       const DimerCovering& covering);

// 0/1 adjacency matrix of a covering over all sites, one row per line.
std::string format_adjacency_matrix(const Lattice& lat,
                                    const DimerCovering& covering);

}  // namespace rvbent
