#pragma once

#include <string>
#include <vector>

#include "rvbent/bigint.hpp"
#include "rvbent/covering.hpp"

namespace rvbent {

// Superposition of two coverings over the same occupied set: every occupied
// site carries one partner from each covering, so the multigraph has degree
// exactly two and decomposes into loops. Doubled edges are 2-cycles.
struct TransitionGraph {
  std::vector<int> occupied;  // increasing
  // Partner maps indexed by site; -1 on holes.
  std::vector<int> partner1;
  std::vector<int> partner2;
};

// Throws std::invalid_argument when the coverings span different occupied
// sets.
TransitionGraph superpose(const DimerCovering& c1, const DimerCovering& c2);

struct LoopDecomposition {
  int degenerate = 0;     // shared dimers (doubled edges)
  int nondegenerate = 0;  // loops of length >= 4
  std::vector<int> lengths;  // nondegenerate loop lengths in sites, sorted

  int total_loops() const { return degenerate + nondegenerate; }
};

// Exact cycle census. Throws std::logic_error if the partner maps are not an
// involution over the occupied set (degree violation).
LoopDecomposition loop_decompose(const TransitionGraph& tg);

// <c1|c2> = 2^(dl + ndl - dimers) as an exact dyadic rational; strictly
// positive under the A-site-first sign convention.
BigRational overlap(const DimerCovering& c1, const DimerCovering& c2);

// Pair sums over all ordered covering pairs. kohmoto_sum weights every loop
// by 2 and reproduces the state norm; quad_loop_sum weights nondegenerate
// loops by 4 instead and is reported for comparison (the two disagree
// already on the two coverings of a single square: 12 vs 16).
struct NormValue {
  BigInt kohmoto_sum;
  BigInt quad_loop_sum;
};

// Throws std::invalid_argument on an empty list or mismatched occupied sets.
NormValue norm_value(const std::vector<DimerCovering>& coverings);

// Squared norm of the equal-amplitude superposition: kohmoto_sum / 2^dimers.
BigRational norm_squared(const NormValue& nv, int num_dimers);

// Matrix of a superposition in the same 0/1 layout as
// format_adjacency_matrix, with shared dimers printed as 2.
std::string format_transition_matrix(const Lattice& lat,
                                     const DimerCovering& c1,
                                     const DimerCovering& c2);

}  // namespace rvbent
