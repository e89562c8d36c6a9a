#pragma once

#include <cstdint>
#include <vector>

#include "rvbent/bigint.hpp"

namespace rvbent {

enum class Boundary { open, periodic };

const char* to_string(Boundary b);
Boundary boundary_from_string(const std::string& s);

inline constexpr int kDefaultMaxSites = 64;

// Rectangular grid with checkerboard sublattices. Sites are indexed row-major,
// site = row*cols + col; sublattice A is even (row+col) parity. Immutable
// after construction.
class Lattice {
 public:
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Boundary boundary() const { return boundary_; }
  int num_sites() const { return rows_ * cols_; }
  int half_sites() const { return num_sites() / 2; }

  int site(int row, int col) const { return row * cols_ + col; }
  int row_of(int site) const { return site / cols_; }
  int col_of(int site) const { return site % cols_; }

  bool is_sublattice_a(int site) const {
    return ((row_of(site) + col_of(site)) & 1) == 0;
  }

  // Sorted neighbour list of a site.
  const std::vector<int>& neighbors(int site) const { return adjacency_[site]; }

  // Sites of each sublattice in increasing index order; both have size L.
  const std::vector<int>& sublattice_a() const { return sites_a_; }
  const std::vector<int>& sublattice_b() const { return sites_b_; }

  std::string spec_string() const;

 private:
  friend Lattice build_lattice(int, int, Boundary, int);
  Lattice() = default;

  int rows_ = 0;
  int cols_ = 0;
  Boundary boundary_ = Boundary::open;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> sites_a_;
  std::vector<int> sites_b_;
};

// Throws std::invalid_argument for odd site counts, sizes over max_sites, and
// periodic requests whose wrap would create duplicate edges or odd cycles
// (either dimension < 4 or odd).
Lattice build_lattice(int rows, int cols, Boundary boundary = Boundary::open,
                      int max_sites = kDefaultMaxSites);

// Balanced set of vacant sites: n holes on each sublattice, sorted.
struct HoleConfig {
  std::vector<int> holes_a;
  std::vector<int> holes_b;

  int pairs() const { return static_cast<int>(holes_a.size()); }
  int num_holes() const { return pairs() * 2; }
  // Merged sorted site list, the serialization form.
  std::vector<int> all_sites() const;

  bool operator==(const HoleConfig&) const = default;
};

// Splits a flat site list by sublattice and validates balance, range and
// uniqueness. Throws std::invalid_argument on violation.
HoleConfig make_hole_config(const Lattice& lat, const std::vector<int>& sites);

void validate_hole_config(const Lattice& lat, const HoleConfig& holes);

// Occupied (non-hole) sites in increasing order.
std::vector<int> occupied_sites(const Lattice& lat, const HoleConfig& holes);

// Number of balanced configurations with num_holes holes: C(L,n)^2.
BigInt hole_config_count(const Lattice& lat, int num_holes);

// All C(L,n)^2 balanced configurations in lexicographic order (outer loop over
// the A-sublattice choice, inner over B). No coverability filtering. Guarded:
// throws std::invalid_argument when the count exceeds 10^7 configurations.
std::vector<HoleConfig> enumerate_hole_configs(const Lattice& lat,
                                               int num_holes);

// Random access into the same ordering as enumerate_hole_configs.
HoleConfig hole_config_at(const Lattice& lat, int num_holes,
                          std::uint64_t index);

// True iff the occupied sites admit a perfect matching by nearest-neighbour
// dimers. Augmenting-path bipartite matching; independent of the covering
// enumerator.
bool is_coverable(const Lattice& lat, const HoleConfig& holes);

// Closed-form estimate of the fraction of four-hole configurations that fence
// off a corner site: 4*(C(m-1,2)-1)/C(m,2)^2 with m = rows*cols/2. Exact
// enumeration can differ on small lattices, where not all corner pairs can be
// fenced simultaneously; compare against a direct is_coverable count.
BigRational pathological_probability_estimate(int rows, int cols);

}  // namespace rvbent
