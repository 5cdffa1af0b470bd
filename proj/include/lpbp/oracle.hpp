#pragma once

// Brute-force ground truth. Everything here counts by dynamic programming
// over the grid or by walking explicit paths; nothing calls a closed form.

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include "lpbp/bigint.hpp"
#include "lpbp/composition.hpp"
#include "lpbp/lattice.hpp"

namespace lpbp {

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// Lattice path boundary pair (P, (a, j)): good iff P is dominated by the
/// j-th cyclic shift of a.
struct Lpbp {
  LatticePath path;
  Composition composition;
  int shift_index = 0;

  Lpbp(LatticePath p, Composition a, int j);

  Composition boundary() const { return shift_composition(composition, shift_index); }
  bool is_good() const;

  friend bool operator==(const Lpbp&, const Lpbp&) = default;
};

struct CountReport {
  Point terminus;
  BigCount all;
  BigCount bad;
  BigCount good;

  friend bool operator==(const CountReport&, const CountReport&) = default;
};

/// Number of paths (0,0) -> t whose every point satisfies x >= boundary_x(a, y).
/// Throws DomainError unless 0 <= t.x <= n and 0 <= t.y <= m.
BigCount count_dominated(const Composition& a, Point t);

/// Counts all, bad and good LPBPs ending at t. `all` is m times the number of
/// unconstrained paths (counted by DP, not by a binomial).
CountReport count_lpbp(const Composition& a, Point t);

/// Histogram over c of good LPBPs ending at t whose path has c up-right
/// (respectively right-up, with the virtual leading corner) corners.
std::vector<BigCount> good_upright_corner_histogram(const Composition& a, Point t,
                                                    std::size_t cap = kDefaultEnumerationCap);
std::vector<BigCount> good_rightup_corner_histogram(const Composition& a, Point t,
                                                    std::size_t cap = kDefaultEnumerationCap);

BigCount count_good_by_upright_corners(const Composition& a, Point t, int c,
                                       std::size_t cap = kDefaultEnumerationCap);
BigCount count_good_by_rightup_corners(const Composition& a, Point t, int c,
                                       std::size_t cap = kDefaultEnumerationCap);

/// Entry i counts the bad LPBPs ending at t whose first bad step lands in
/// B_i; size is n. Throws std::logic_error if some landing point fails to
/// identify a unique bucket.
std::vector<BigCount> bad_bucket_histogram(const Composition& a, Point t,
                                           std::size_t cap = kDefaultEnumerationCap);

/// Requires n >= 1 and 0 <= i < n.
BigCount count_bad_by_bucket(const Composition& a, Point t, int i,
                             std::size_t cap = kDefaultEnumerationCap);

/// Every path (0,0) -> t dominated by a, in lexicographic order with R < U.
/// Throws EnumerationCapExceeded when C(t.x + t.y, t.y) exceeds `cap`.
std::vector<LatticePath> enumerate_dominated_paths(const Composition& a, Point t,
                                                   std::size_t cap = kDefaultEnumerationCap);

/// Every path from -> to, lexicographic with R < U, subject to the same cap.
std::vector<LatticePath> enumerate_paths(Point from, Point to,
                                         std::size_t cap = kDefaultEnumerationCap);

/// Paths from -> to using only points accepted by `allowed` (both ends included).
BigCount count_paths_through(Point from, Point to, const std::function<bool(Point)>& allowed);

/// Turns a boundary word such as "URRUURR" into the composition whose
/// dominated region is the region weakly under that staircase. Part 0 is the
/// run of R's before the first U and part y the run between the y-th and
/// (y+1)-th U; the trailing run of R's is appended as one extra part so the
/// whole staircase fits inside the grid.
Composition composition_from_staircase(std::string_view boundary_word);

}  // namespace lpbp
