#include "rvbent/covering.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rvbent {

namespace {

// Backtracking over pairings of the lowest uncovered site. Visits every
// covering exactly once; `from` is a scan hint (everything below it is
// covered for the whole subtree).
template <class Visitor>
void search_coverings(const Lattice& lat, std::vector<char>& covered, int from,
                      int num_uncovered,
                      std::vector<std::pair<int, int>>& acc, Visitor&& visit) {
  if (num_uncovered == 0) {
    visit(acc);
    return;
  }
  int s = from;
  while (covered[static_cast<std::size_t>(s)]) ++s;
  covered[static_cast<std::size_t>(s)] = 1;
  for (int t : lat.neighbors(s)) {
    if (covered[static_cast<std::size_t>(t)]) continue;
    covered[static_cast<std::size_t>(t)] = 1;
    acc.emplace_back(s, t);
    search_coverings(lat, covered, s + 1, num_uncovered - 2, acc, visit);
    acc.pop_back();
    covered[static_cast<std::size_t>(t)] = 0;
  }
  covered[static_cast<std::size_t>(s)] = 0;
}

template <class Visitor>
void for_each_covering(const Lattice& lat, const HoleConfig& holes,
                       Visitor&& visit) {
  std::vector<char> covered(static_cast<std::size_t>(lat.num_sites()), 0);
  for (int s : holes.holes_a) covered[static_cast<std::size_t>(s)] = 1;
  for (int s : holes.holes_b) covered[static_cast<std::size_t>(s)] = 1;
  const int occupied = lat.num_sites() - holes.num_holes();
  std::vector<std::pair<int, int>> acc;
  acc.reserve(static_cast<std::size_t>(occupied / 2));
  search_coverings(lat, covered, 0, occupied, acc, visit);
}

}  // namespace

std::vector<DimerCovering> enumerate_coverings(const Lattice& lat,
                                               const HoleConfig& holes) {
  std::vector<DimerCovering> out;
  for_each_covering(lat, holes, [&](const std::vector<std::pair<int, int>>& acc) {
    DimerCovering cov;
    cov.dimers.reserve(acc.size());
    for (auto [s, t] : acc) {
      if (lat.is_sublattice_a(s))
        cov.dimers.emplace_back(s, t);
      else
        cov.dimers.emplace_back(t, s);
    }
    std::sort(cov.dimers.begin(), cov.dimers.end());
    out.push_back(std::move(cov));
  });
  return out;
}

BigInt count_coverings(const Lattice& lat, const HoleConfig& holes) {
  std::uint64_t low = 0;
  BigInt high = 0;
  for_each_covering(lat, holes, [&](const std::vector<std::pair<int, int>>&) {
    if (++low == (std::uint64_t(1) << 62)) {
      high += low;
      low = 0;
    }
  });
  return high + low;
}

BigInt permanent_count(const Lattice& lat, const HoleConfig& holes) {
  std::vector<int> col_index(static_cast<std::size_t>(lat.num_sites()), -1);
  std::vector<int> rows_sites;
  int num_cols = 0;
  for (int s : occupied_sites(lat, holes)) {
    if (lat.is_sublattice_a(s))
      rows_sites.push_back(s);
    else
      col_index[static_cast<std::size_t>(s)] = num_cols++;
  }
  const int p = static_cast<int>(rows_sites.size());
  if (p != num_cols) return 0;
  if (p == 0) return 1;
  if (p > 31)
    throw std::domain_error("permanent oracle limited to 31 dimer slots, got " +
                            std::to_string(p));

  // Column bitmasks per row of the occupied biadjacency matrix.
  std::vector<std::uint32_t> row_mask(static_cast<std::size_t>(p), 0);
  for (int i = 0; i < p; ++i) {
    for (int t : lat.neighbors(rows_sites[static_cast<std::size_t>(i)])) {
      const int j = col_index[static_cast<std::size_t>(t)];
      if (j >= 0) row_mask[static_cast<std::size_t>(i)] |= std::uint32_t(1) << j;
    }
  }

  // Ryser: perm = (-1)^p sum over column subsets S of (-1)^|S| prod_i |S
  // cap row_i|. Gray-code order updates one column per step, so the row sums
  // stay incremental. Row sums are at most 4, so the product fits easily in
  // 128 bits.
  std::vector<int> row_sum(static_cast<std::size_t>(p), 0);
  __int128 total = 0;
  const std::uint32_t subsets = std::uint32_t(1) << p;
  std::uint32_t prev = 0;
  int popcount = 0;
  for (std::uint32_t k = 1; k < subsets; ++k) {
    const std::uint32_t gray = k ^ (k >> 1);
    const std::uint32_t flipped = gray ^ prev;
    const int delta = (gray & flipped) ? 1 : -1;
    popcount += delta;
    for (int i = 0; i < p; ++i)
      if (row_mask[static_cast<std::size_t>(i)] & flipped)
        row_sum[static_cast<std::size_t>(i)] += delta;
    __int128 prod = 1;
    for (int i = 0; i < p; ++i) {
      prod *= row_sum[static_cast<std::size_t>(i)];
      if (prod == 0) break;
    }
    total += (popcount & 1) ? -prod : prod;
    prev = gray;
  }
  if (p & 1) total = -total;

  const bool negative = total < 0;
  unsigned __int128 mag =
      negative ? static_cast<unsigned __int128>(-total)
               : static_cast<unsigned __int128>(total);
  BigInt result = static_cast<std::uint64_t>(mag >> 64);
  result <<= 64;
  result += static_cast<std::uint64_t>(mag);
  return negative ? -result : result;
}

BigInt fisher_count(int rows, int cols) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("dimensions must be positive");
  if ((rows % 2) && (cols % 2)) return 0;
  const long double pi = std::acos(-1.0L);
  long double log_sum = 0.0L;
  for (int j = 1; j <= rows; ++j) {
    const long double cj = std::cos(pi * j / (rows + 1));
    for (int k = 1; k <= cols; ++k) {
      const long double ck = std::cos(pi * k / (cols + 1));
      log_sum += std::log(4.0L * cj * cj + 4.0L * ck * ck);
    }
  }
  const long double value = std::exp(0.25L * log_sum);
  if (value > 1.0e18L)
    throw std::runtime_error(
        "closed-form count too large to verify integrality");
  const long double rounded = std::floor(value + 0.5L);
  const long double tol = 1e-6L * std::max(1.0L, rounded);
  if (std::fabs(value - rounded) > tol) {
    std::ostringstream os;
    os << "closed-form count " << static_cast<double>(value)
       << " is not integral within tolerance";
    throw std::runtime_error(os.str());
  }
  return BigInt(static_cast<std::uint64_t>(rounded));
}

double catalan_constant() {
  // Alternating sum 1/1^2 - 1/3^2 + 1/5^2 - ..., accumulated smallest terms
  // first; the truncation error is below the last term, 1/(4e6+3)^2 < 1e-13.
  static const double value = [] {
    constexpr long k_max = 2'000'000;
    long double sum = 0.0L;
    for (long k = k_max; k >= 0; --k) {
      const long double term = 1.0L / ((2.0L * k + 1.0L) * (2.0L * k + 1.0L));
      sum += (k & 1) ? -term : term;
    }
    return static_cast<double>(sum);
  }();
  return value;
}

double periodic_entropy_estimate(int half_sites) {
  if (half_sites < 0)
    throw std::invalid_argument("half_sites must be non-negative");
  const double pi = std::acos(-1.0);
  const double per_dimer = std::exp(2.0 * catalan_constant() / pi);
  return std::pow(per_dimer, half_sites);
}

bool covering_is_valid(const Lattice& lat, const HoleConfig& holes,
                       const DimerCovering& covering) {
  const std::vector<int> occupied = occupied_sites(lat, holes);
  if (covering.dimers.size() * 2 != occupied.size()) return false;
  std::vector<char> seen(static_cast<std::size_t>(lat.num_sites()), 0);
  for (auto [a, b] : covering.dimers) {
    if (a < 0 || a >= lat.num_sites() || b < 0 || b >= lat.num_sites())
      return false;
    if (!lat.is_sublattice_a(a) || lat.is_sublattice_a(b)) return false;
    const auto& nbrs = lat.neighbors(a);
    if (!std::binary_search(nbrs.begin(), nbrs.end(), b)) return false;
    if (seen[static_cast<std::size_t>(a)] || seen[static_cast<std::size_t>(b)])
      return false;
    seen[static_cast<std::size_t>(a)] = seen[static_cast<std::size_t>(b)] = 1;
  }
  for (int s : occupied)
    if (!seen[static_cast<std::size_t>(s)]) return false;
  return true;
}

std::string format_adjacency_matrix(const Lattice& lat,
                                    const DimerCovering& covering) {
  const int n = lat.num_sites();
  std::vector<char> m(static_cast<std::size_t>(n) * n, '0');
  for (auto [a, b] : covering.dimers) {
    m[static_cast<std::size_t>(a) * n + b] = '1';
    m[static_cast<std::size_t>(b) * n + a] = '1';
  }
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
