#include "rvbent/matching.hpp"

#include <limits>
#include <queue>

namespace rvbent {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

struct HopcroftKarp {
  const std::vector<std::vector<int>>& adj;
  std::vector<int> match_left, match_right, dist;

  HopcroftKarp(int num_left, int num_right,
               const std::vector<std::vector<int>>& adjacency)
      : adj(adjacency),
        match_left(static_cast<std::size_t>(num_left), -1),
        match_right(static_cast<std::size_t>(num_right), -1),
        dist(static_cast<std::size_t>(num_left), 0) {}

  bool bfs() {
    std::queue<int> q;
    for (std::size_t u = 0; u < match_left.size(); ++u) {
      if (match_left[u] == -1) {
        dist[u] = 0;
        q.push(static_cast<int>(u));
      } else {
        dist[u] = kInf;
      }
    }
    bool found_free = false;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        const int w = match_right[static_cast<std::size_t>(v)];
        if (w == -1) {
          found_free = true;
        } else if (dist[static_cast<std::size_t>(w)] == kInf) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          q.push(w);
        }
      }
    }
    return found_free;
  }

  bool dfs(int u) {
    for (int v : adj[static_cast<std::size_t>(u)]) {
      const int w = match_right[static_cast<std::size_t>(v)];
      if (w == -1 || (dist[static_cast<std::size_t>(w)] ==
                          dist[static_cast<std::size_t>(u)] + 1 &&
                      dfs(w))) {
        match_left[static_cast<std::size_t>(u)] = v;
        match_right[static_cast<std::size_t>(v)] = u;
        return true;
      }
    }
    dist[static_cast<std::size_t>(u)] = kInf;
    return false;
  }

  int run() {
    int matched = 0;
    while (bfs()) {
      for (std::size_t u = 0; u < match_left.size(); ++u)
        if (match_left[u] == -1 && dfs(static_cast<int>(u))) ++matched;
    }
    return matched;
  }
};

}  // namespace

int max_bipartite_matching(int num_left, int num_right,
                           const std::vector<std::vector<int>>& adj) {
  if (num_left == 0 || num_right == 0) return 0;
  HopcroftKarp hk(num_left, num_right, adj);
  return hk.run();
}

}  // namespace rvbent
