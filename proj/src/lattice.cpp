#include "rvbent/lattice.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "rvbent/matching.hpp"

namespace rvbent {

const char* to_string(Boundary b) {
  return b == Boundary::open ? "open" : "periodic";
}

Boundary boundary_from_string(const std::string& s) {
  if (s == "open") return Boundary::open;
  if (s == "periodic") return Boundary::periodic;
  throw std::invalid_argument("unknown boundary '" + s +
                              "' (expected open or periodic)");
}

std::string Lattice::spec_string() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << ":" << rvbent::to_string(boundary_);
  return os.str();
}

Lattice build_lattice(int rows, int cols, Boundary boundary, int max_sites) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("lattice dimensions must be positive");
  const long long total = static_cast<long long>(rows) * cols;
  if (total > max_sites) {
    std::ostringstream os;
    os << "lattice has " << total << " sites, above the limit of " << max_sites;
    throw std::invalid_argument(os.str());
  }
  if (total % 2 != 0)
    throw std::invalid_argument(
        "lattice needs an even number of sites for balanced sublattices");
  if (boundary == Boundary::periodic) {
    if (rows % 2 != 0 || cols % 2 != 0)
      throw std::invalid_argument(
          "periodic lattices need even rows and cols to stay bipartite");
    if (rows < 4 || cols < 4)
      throw std::invalid_argument(
          "periodic lattices need rows and cols of at least 4 to avoid "
          "doubled bonds");
  }

  Lattice lat;
  lat.rows_ = rows;
  lat.cols_ = cols;
  lat.boundary_ = boundary;
  lat.adjacency_.resize(static_cast<std::size_t>(total));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int s = lat.site(r, c);
      auto& nbrs = lat.adjacency_[static_cast<std::size_t>(s)];
      auto push = [&](int rr, int cc) {
        if (boundary == Boundary::periodic) {
          rr = (rr + rows) % rows;
          cc = (cc + cols) % cols;
        } else if (rr < 0 || rr >= rows || cc < 0 || cc >= cols) {
          return;
        }
        nbrs.push_back(lat.site(rr, cc));
      };
      push(r - 1, c);
      push(r + 1, c);
      push(r, c - 1);
      push(r, c + 1);
      std::sort(nbrs.begin(), nbrs.end());
      if (lat.is_sublattice_a(s))
        lat.sites_a_.push_back(s);
      else
        lat.sites_b_.push_back(s);
    }
  }
  return lat;
}

std::vector<int> HoleConfig::all_sites() const {
  std::vector<int> out;
  out.reserve(holes_a.size() + holes_b.size());
  out.insert(out.end(), holes_a.begin(), holes_a.end());
  out.insert(out.end(), holes_b.begin(), holes_b.end());
  std::sort(out.begin(), out.end());
  return out;
}

HoleConfig make_hole_config(const Lattice& lat, const std::vector<int>& sites) {
  HoleConfig cfg;
  std::vector<int> seen(static_cast<std::size_t>(lat.num_sites()), 0);
  for (int s : sites) {
    if (s < 0 || s >= lat.num_sites())
      throw std::invalid_argument("hole site " + std::to_string(s) +
                                  " is outside the lattice");
    if (seen[static_cast<std::size_t>(s)]++)
      throw std::invalid_argument("hole site " + std::to_string(s) +
                                  " listed twice");
    (lat.is_sublattice_a(s) ? cfg.holes_a : cfg.holes_b).push_back(s);
  }
  if (cfg.holes_a.size() != cfg.holes_b.size()) {
    std::ostringstream os;
    os << "holes must balance the sublattices: got " << cfg.holes_a.size()
       << " on A and " << cfg.holes_b.size() << " on B";
    throw std::invalid_argument(os.str());
  }
  std::sort(cfg.holes_a.begin(), cfg.holes_a.end());
  std::sort(cfg.holes_b.begin(), cfg.holes_b.end());
  return cfg;
}

void validate_hole_config(const Lattice& lat, const HoleConfig& holes) {
  std::vector<int> flat = holes.holes_a;
  flat.insert(flat.end(), holes.holes_b.begin(), holes.holes_b.end());
  const HoleConfig rebuilt = make_hole_config(lat, flat);
  if (!(rebuilt == holes))
    throw std::invalid_argument(
        "hole configuration is not in canonical sorted A/B form");
}

std::vector<int> occupied_sites(const Lattice& lat, const HoleConfig& holes) {
  std::vector<char> holed(static_cast<std::size_t>(lat.num_sites()), 0);
  for (int s : holes.holes_a) holed[static_cast<std::size_t>(s)] = 1;
  for (int s : holes.holes_b) holed[static_cast<std::size_t>(s)] = 1;
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(lat.num_sites()) - holes.holes_a.size() -
              holes.holes_b.size());
  for (int s = 0; s < lat.num_sites(); ++s)
    if (!holed[static_cast<std::size_t>(s)]) out.push_back(s);
  return out;
}

BigInt hole_config_count(const Lattice& lat, int num_holes) {
  if (num_holes < 0 || num_holes % 2 != 0)
    throw std::invalid_argument("num_holes must be even and non-negative");
  const int per_side = num_holes / 2;
  if (per_side > lat.half_sites()) return 0;
  const BigInt per = binomial(static_cast<unsigned>(lat.half_sites()),
                              static_cast<unsigned>(per_side));
  return per * per;
}

namespace {

// Size-k subsets of pool, lexicographic by position.
void subsets_of(const std::vector<int>& pool, int k,
                const std::function<void(const std::vector<int>&)>& emit) {
  const int n = static_cast<int>(pool.size());
  if (k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::vector<int> chosen(static_cast<std::size_t>(k));
  while (true) {
    for (int i = 0; i < k; ++i)
      chosen[static_cast<std::size_t>(i)] =
          pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    emit(chosen);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] =
          idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// The index-th size-k subset in the same lexicographic order.
std::vector<int> subset_at(const std::vector<int>& pool, int k, BigInt index) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k));
  const int n = static_cast<int>(pool.size());
  int pos = 0;
  for (int need = k; need > 0; --need) {
    while (true) {
      const BigInt with_here = binomial(static_cast<unsigned>(n - pos - 1),
                                        static_cast<unsigned>(need - 1));
      if (index < with_here) break;
      index -= with_here;
      ++pos;
    }
    out.push_back(pool[static_cast<std::size_t>(pos)]);
    ++pos;
  }
  return out;
}

}  // namespace

std::vector<HoleConfig> enumerate_hole_configs(const Lattice& lat,
                                               int num_holes) {
  const BigInt total = hole_config_count(lat, num_holes);
  if (total > BigInt(10'000'000))
    throw std::invalid_argument(
        "refusing to materialize " + to_string(total) +
        " hole configurations; use hole_config_at for streaming access");
  const int per_side = num_holes / 2;
  std::vector<HoleConfig> out;
  out.reserve(total.convert_to<std::size_t>());
  subsets_of(lat.sublattice_a(), per_side, [&](const std::vector<int>& ha) {
    subsets_of(lat.sublattice_b(), per_side, [&](const std::vector<int>& hb) {
      HoleConfig cfg;
      cfg.holes_a = ha;
      cfg.holes_b = hb;
      out.push_back(std::move(cfg));
    });
  });
  return out;
}

HoleConfig hole_config_at(const Lattice& lat, int num_holes,
                          std::uint64_t index) {
  const BigInt total = hole_config_count(lat, num_holes);
  if (BigInt(index) >= total)
    throw std::out_of_range("hole configuration index out of range");
  const int per_side = num_holes / 2;
  const BigInt per = binomial(static_cast<unsigned>(lat.half_sites()),
                              static_cast<unsigned>(per_side));
  HoleConfig cfg;
  cfg.holes_a = subset_at(lat.sublattice_a(), per_side, BigInt(index) / per);
  cfg.holes_b = subset_at(lat.sublattice_b(), per_side, BigInt(index) % per);
  return cfg;
}

bool is_coverable(const Lattice& lat, const HoleConfig& holes) {
  const std::vector<int> occupied = occupied_sites(lat, holes);
  if (occupied.empty()) return true;
  std::vector<int> left_index(static_cast<std::size_t>(lat.num_sites()), -1);
  std::vector<int> right_index(static_cast<std::size_t>(lat.num_sites()), -1);
  int num_left = 0;
  int num_right = 0;
  for (int s : occupied) {
    if (lat.is_sublattice_a(s))
      left_index[static_cast<std::size_t>(s)] = num_left++;
    else
      right_index[static_cast<std::size_t>(s)] = num_right++;
  }
  if (num_left != num_right) return false;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(num_left));
  for (int s : occupied) {
    const int li = left_index[static_cast<std::size_t>(s)];
    if (li < 0) continue;
    for (int t : lat.neighbors(s)) {
      const int ri = right_index[static_cast<std::size_t>(t)];
      if (ri >= 0) adj[static_cast<std::size_t>(li)].push_back(ri);
    }
  }
  return max_bipartite_matching(num_left, num_right, adj) == num_left;
}

BigRational pathological_probability_estimate(int rows, int cols) {
  if (rows < 1 || cols < 1 || (rows * cols) % 2 != 0)
    throw std::invalid_argument("estimate needs an even-sized lattice");
  const unsigned half = static_cast<unsigned>(rows * cols / 2);
  if (half < 3)
    throw std::invalid_argument(
        "estimate needs at least 3 sites per sublattice");
  const BigInt all_pairs = binomial(half, 2);
  const BigInt corner_fixed = binomial(half - 1, 2);
  const BigRational numerator =
      BigRational(4) * (BigRational(corner_fixed) - 1);
  return numerator / (BigRational(all_pairs) * BigRational(all_pairs));
}

}  // namespace rvbent
