#pragma once

#include <vector>

namespace rvbent {

// Hopcroft-Karp maximum matching. adj[u] lists the right-side vertices of
// left vertex u; returns the matching size.
int max_bipartite_matching(int num_left, int num_right,
                           const std::vector<std::vector<int>>& adj);

}  // namespace rvbent
