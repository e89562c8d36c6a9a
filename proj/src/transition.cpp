#include "rvbent/transition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rvbent {

namespace {

void fill_partners(const DimerCovering& c, std::vector<int>& partner) {
  for (auto [a, b] : c.dimers) {
    partner[static_cast<std::size_t>(a)] = b;
    partner[static_cast<std::size_t>(b)] = a;
  }
}

std::vector<int> covering_sites(const DimerCovering& c) {
  std::vector<int> sites;
  sites.reserve(c.dimers.size() * 2);
  for (auto [a, b] : c.dimers) {
    sites.push_back(a);
    sites.push_back(b);
  }
  std::sort(sites.begin(), sites.end());
  return sites;
}

}  // namespace

TransitionGraph superpose(const DimerCovering& c1, const DimerCovering& c2) {
  TransitionGraph tg;
  tg.occupied = covering_sites(c1);
  if (covering_sites(c2) != tg.occupied)
    throw std::invalid_argument(
        "cannot superpose coverings over different occupied sets");
  const int size = tg.occupied.empty() ? 0 : tg.occupied.back() + 1;
  tg.partner1.assign(static_cast<std::size_t>(size), -1);
  tg.partner2.assign(static_cast<std::size_t>(size), -1);
  fill_partners(c1, tg.partner1);
  fill_partners(c2, tg.partner2);
  return tg;
}

LoopDecomposition loop_decompose(const TransitionGraph& tg) {
  for (int s : tg.occupied) {
    const int p1 = tg.partner1[static_cast<std::size_t>(s)];
    const int p2 = tg.partner2[static_cast<std::size_t>(s)];
    if (p1 < 0 || p2 < 0 ||
        tg.partner1[static_cast<std::size_t>(p1)] != s ||
        tg.partner2[static_cast<std::size_t>(p2)] != s)
      throw std::logic_error(
          "transition graph partner maps are not involutions on the occupied "
          "set");
  }
  LoopDecomposition out;
  const int size =
      static_cast<int>(std::max(tg.partner1.size(), tg.partner2.size()));
  std::vector<char> visited(static_cast<std::size_t>(size), 0);
  for (int start : tg.occupied) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    // Walk the cycle alternating the two partner maps.
    int length = 0;
    int site = start;
    bool use_first = true;
    do {
      visited[static_cast<std::size_t>(site)] = 1;
      ++length;
      site = use_first ? tg.partner1[static_cast<std::size_t>(site)]
                       : tg.partner2[static_cast<std::size_t>(site)];
      use_first = !use_first;
    } while (site != start);
    if (length == 2)
      ++out.degenerate;
    else {
      ++out.nondegenerate;
      out.lengths.push_back(length);
    }
  }
  std::sort(out.lengths.begin(), out.lengths.end());
  return out;
}

BigRational overlap(const DimerCovering& c1, const DimerCovering& c2) {
  const LoopDecomposition loops = loop_decompose(superpose(c1, c2));
  const long exponent = loops.total_loops() -
                        static_cast<long>(c1.dimers.size());
  return dyadic_pow(exponent);
}

NormValue norm_value(const std::vector<DimerCovering>& coverings) {
  if (coverings.empty())
    throw std::invalid_argument("norm of an empty covering list is undefined");
  const std::vector<int> occupied = covering_sites(coverings.front());
  for (const auto& c : coverings)
    if (covering_sites(c) != occupied)
      throw std::invalid_argument(
          "norm needs all coverings over the same occupied set");

  const int m = static_cast<int>(coverings.front().dimers.size());
  // Histogram over (degenerate, nondegenerate) loop counts across ordered
  // pairs; the pair sums then reduce to a few exact power-of-two terms. The
  // decomposition is symmetric in the pair, so each unordered pair counts
  // twice and the diagonal lands on (m, 0).
  std::vector<std::uint64_t> hist(
      static_cast<std::size_t>(m + 1) * static_cast<std::size_t>(m + 1), 0);
  const std::size_t n = coverings.size();
  std::vector<std::vector<int>> partners(n);
  const int size = occupied.empty() ? 0 : occupied.back() + 1;
  for (std::size_t i = 0; i < n; ++i) {
    partners[i].assign(static_cast<std::size_t>(size), -1);
    fill_partners(coverings[i], partners[i]);
  }
  std::vector<char> visited(static_cast<std::size_t>(size), 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      int dl = 0;
      int ndl = 0;
      std::fill(visited.begin(), visited.end(), 0);
      for (int start : occupied) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        int length = 0;
        int site = start;
        bool use_first = true;
        do {
          visited[static_cast<std::size_t>(site)] = 1;
          ++length;
          site = use_first ? partners[i][static_cast<std::size_t>(site)]
                           : partners[j][static_cast<std::size_t>(site)];
          use_first = !use_first;
        } while (site != start);
        if (length == 2)
          ++dl;
        else
          ++ndl;
      }
      hist[static_cast<std::size_t>(dl) * (m + 1) + ndl] += 2;
    }
  }
  hist[static_cast<std::size_t>(m) * (m + 1) + 0] +=
      static_cast<std::uint64_t>(n);

  NormValue nv;
  for (int dl = 0; dl <= m; ++dl) {
    for (int ndl = 0; ndl <= m; ++ndl) {
      const std::uint64_t count =
          hist[static_cast<std::size_t>(dl) * (m + 1) + ndl];
      if (!count) continue;
      nv.kohmoto_sum += BigInt(count) * pow2(static_cast<unsigned>(dl + ndl));
      nv.quad_loop_sum +=
          BigInt(count) * pow2(static_cast<unsigned>(dl + 2 * ndl));
    }
  }
  return nv;
}

BigRational norm_squared(const NormValue& nv, int num_dimers) {
  return BigRational(nv.kohmoto_sum) *
         dyadic_pow(-static_cast<long>(num_dimers));
}

std::string format_transition_matrix(const Lattice& lat,
                                     const DimerCovering& c1,
                                     const DimerCovering& c2) {
  const int n = lat.num_sites();
  std::vector<char> m(static_cast<std::size_t>(n) * n, '0');
  auto add = [&](const DimerCovering& c) {
    for (auto [a, b] : c.dimers) {
      ++m[static_cast<std::size_t>(a) * n + b];
      ++m[static_cast<std::size_t>(b) * n + a];
    }
  };
  add(c1);
  add(c2);
  std::string out;
  out.reserve(static_cast<std::size_t>(n) * (2 * n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (c) out.push_back(' ');
      out.push_back(m[static_cast<std::size_t>(r) * n + c]);
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace rvbent
