#include "lpbp/dominance.hpp"

#include "lpbp/errors.hpp"

namespace lpbp {

namespace {

void require_from_origin(const Composition& a, const LatticePath& path) {
  if (path.origin() != Point{0, 0}) {
    throw DomainError("domination is defined for paths starting at (0,0), got " +
                      path.origin().to_string());
  }
  if (path.up_count() > a.parts_count()) {
    throw DomainError("path has " + std::to_string(path.up_count()) + " up steps but the boundary only " +
                      std::to_string(a.parts_count()) + " rows");
  }
}

}  // namespace

bool point_dominated(const Composition& a, Point p) { return p.x >= boundary_x(a, p.y); }

bool point_dominated_by_all_shifts(const Composition& a, Point p) {
  for (int j = 0; j < a.parts_count(); ++j) {
    if (!point_dominated(shift_composition(a, j), p)) return false;
  }
  return true;
}

std::optional<BadStep> first_bad_step(const Composition& a, const LatticePath& path) {
  require_from_origin(a, path);
  // Prefix sums are incremental: each up step moves one row higher.
  Point p{0, 0};
  int row_start = 0;  // boundary_x(a, p.y)
  const auto& steps = path.steps();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == Step::Right) {
      ++p.x;
      continue;
    }
    row_start += a.at(p.y);
    ++p.y;
    if (p.x < row_start) return BadStep{i, p};
  }
  return std::nullopt;
}

bool dominates(const Composition& a, const LatticePath& path) { return !first_bad_step(a, path); }

int reduce_column(long x, int n) {
  const long r = x % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

int reduce_row(long y, int m) {
  const long r = (y - 1) % m;
  return static_cast<int>((r < 0 ? r + m : r) + 1);
}

Point point_shift(const Composition& a, Point p, long j) {
  const int n = a.total();
  const int m = a.parts_count();
  if (n == 0) throw DomainError("point_shift needs n >= 1: the composition has no interior columns");
  if (p.x < 0 || p.x >= n || p.y < 1 || p.y > m) {
    throw DomainError("point_shift: " + p.to_string() + " outside 0 <= x < " + std::to_string(n) +
                      ", 1 <= y <= " + std::to_string(m));
  }
  // A full turn of m shifts adds n to x, which vanishes mod n.
  const long turns = ((j % m) + m) % m;
  long dx = 0;
  for (long r = 1; r <= turns; ++r) dx += a.at(-r);
  return {reduce_column(p.x + dx, n), reduce_row(p.y + j, m)};
}

}  // namespace lpbp
