#pragma once

#include <optional>

#include "lpbp/composition.hpp"
#include "lpbp/lattice.hpp"

namespace lpbp {

/// True iff p lies weakly right of the boundary of a: p.x >= boundary_x(a, p.y).
/// Throws DomainError unless 0 <= p.y <= m.
bool point_dominated(const Composition& a, Point p);

/// True iff p is dominated by every cyclic shift of a.
bool point_dominated_by_all_shifts(const Composition& a, Point p);

/// True iff every point of `path` (which must start at the origin) satisfies
/// x >= boundary_x(a, y). Throws DomainError when the path has more than m
/// up steps or does not start at (0, 0).
bool dominates(const Composition& a, const LatticePath& path);

struct BadStep {
  std::size_t index = 0;  ///< position of the offending step in the path
  Point landing;          ///< where that step lands

  friend bool operator==(const BadStep&, const BadStep&) = default;
};

/// First step whose landing point lies strictly left of the boundary;
/// empty when the path is dominated. The step is always an up step.
std::optional<BadStep> first_bad_step(const Composition& a, const LatticePath& path);

/// The j-th shift of p relative to a:
///   (p.x + a_{-1} + ... + a_{-j} mod n, p.y + j mod m)
/// with representatives in {0..n-1} and {1..m}. j may be any integer; it
/// acts through j mod m. Throws DomainError when n == 0 or p is outside
/// 0 <= x < n, 1 <= y <= m.
Point point_shift(const Composition& a, Point p, long j);

/// Reduces x into {0, ..., n-1}.
int reduce_column(long x, int n);
/// Reduces y into {1, ..., m}.
int reduce_row(long y, int m);

}  // namespace lpbp
