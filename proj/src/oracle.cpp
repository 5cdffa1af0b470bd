#include "lpbp/oracle.hpp"

#include <stdexcept>

#include "lpbp/bijections.hpp"
#include "lpbp/combinatorics.hpp"
#include "lpbp/dominance.hpp"
#include "lpbp/errors.hpp"

namespace lpbp {

namespace {

void require_in_grid(const Composition& a, Point t) {
  if (t.x < 0 || t.x > a.total() || t.y < 0 || t.y > a.parts_count()) {
    throw DomainError("terminus " + t.to_string() + " outside the grid [0," + std::to_string(a.total()) +
                      "]x[0," + std::to_string(a.parts_count()) + "]");
  }
}

void require_under_cap(Point from, Point to, std::size_t cap) {
  if (binomial(to.x - from.x + to.y - from.y, to.y - from.y) > BigCount(static_cast<std::int64_t>(cap))) {
    throw EnumerationCapExceeded("enumerating paths " + from.to_string() + " -> " + to.to_string() +
                                 " exceeds the cap of " + std::to_string(cap) + " paths");
  }
}

template <class Accept>
void collect_paths(Point from, Point to, Accept&& accept, std::vector<LatticePath>& out) {
  std::vector<Step> steps;
  Point cur = from;
  auto rec = [&](auto&& self) -> void {
    if (cur == to) {
      out.emplace_back(from, steps);
      return;
    }
    if (cur.x < to.x) {
      ++cur.x;
      if (accept(cur)) {
        steps.push_back(Step::Right);
        self(self);
        steps.pop_back();
      }
      --cur.x;
    }
    if (cur.y < to.y) {
      ++cur.y;
      if (accept(cur)) {
        steps.push_back(Step::Up);
        self(self);
        steps.pop_back();
      }
      --cur.y;
    }
  };
  if (accept(cur)) rec(rec);
}

std::vector<BigCount> to_histogram(const std::vector<std::size_t>& counts) {
  std::vector<BigCount> out;
  out.reserve(counts.size());
  for (auto c : counts) out.emplace_back(static_cast<std::int64_t>(c));
  return out;
}

template <class Statistic>
std::vector<BigCount> good_corner_histogram(const Composition& a, Point t, std::size_t cap,
                                            Statistic&& stat) {
  require_in_grid(a, t);
  std::vector<std::size_t> counts(static_cast<std::size_t>(std::min(t.x, t.y) + 2), 0);
  for (int j = 0; j < a.parts_count(); ++j) {
    for (const auto& p : enumerate_dominated_paths(shift_composition(a, j), t, cap)) {
      ++counts.at(static_cast<std::size_t>(stat(p)));
    }
  }
  return to_histogram(counts);
}

BigCount histogram_entry(const std::vector<BigCount>& h, int c) {
  if (c < 0) throw DomainError("corner count must be nonnegative");
  return static_cast<std::size_t>(c) < h.size() ? h[static_cast<std::size_t>(c)] : BigCount(0);
}

}  // namespace

Lpbp::Lpbp(LatticePath p, Composition a, int j)
    : path(std::move(p)), composition(std::move(a)), shift_index(j) {
  if (j < 0 || j >= composition.parts_count()) {
    throw DomainError("shift index " + std::to_string(j) + " outside [0, " +
                      std::to_string(composition.parts_count()) + ")");
  }
}

bool Lpbp::is_good() const { return dominates(boundary(), path); }

BigCount count_paths_through(Point from, Point to, const std::function<bool(Point)>& allowed) {
  if (to.x < from.x || to.y < from.y) return BigCount(0);
  const int w = to.x - from.x + 1;
  const int h = to.y - from.y + 1;
  std::vector<BigCount> row(static_cast<std::size_t>(w));
  for (int dy = 0; dy < h; ++dy) {
    for (int dx = 0; dx < w; ++dx) {
      const Point p{from.x + dx, from.y + dy};
      auto& cell = row[static_cast<std::size_t>(dx)];
      if (!allowed(p)) {
        cell = BigCount(0);
      } else if (dx == 0 && dy == 0) {
        cell = BigCount(1);
      } else {
        // cell still holds the count from the row below
        if (dx > 0) cell += row[static_cast<std::size_t>(dx - 1)];
      }
    }
  }
  return row.back();
}

BigCount count_dominated(const Composition& a, Point t) {
  require_in_grid(a, t);
  std::vector<int> row_start(static_cast<std::size_t>(t.y + 1));
  for (int y = 0; y <= t.y; ++y) row_start[static_cast<std::size_t>(y)] = boundary_x(a, y);
  return count_paths_through({0, 0}, t, [&](Point p) { return p.x >= row_start[static_cast<std::size_t>(p.y)]; });
}

CountReport count_lpbp(const Composition& a, Point t) {
  require_in_grid(a, t);
  const BigCount paths = count_paths_through({0, 0}, t, [](Point) { return true; });
  CountReport r{t, paths * BigCount(a.parts_count()), BigCount(0), BigCount(0)};
  for (int j = 0; j < a.parts_count(); ++j) r.good += count_dominated(shift_composition(a, j), t);
  r.bad = r.all - r.good;
  return r;
}

std::vector<BigCount> good_upright_corner_histogram(const Composition& a, Point t, std::size_t cap) {
  return good_corner_histogram(a, t, cap, [](const LatticePath& p) { return upright_corners(p); });
}

std::vector<BigCount> good_rightup_corner_histogram(const Composition& a, Point t, std::size_t cap) {
  return good_corner_histogram(a, t, cap, [](const LatticePath& p) { return rightup_corners(p); });
}

BigCount count_good_by_upright_corners(const Composition& a, Point t, int c, std::size_t cap) {
  return histogram_entry(good_upright_corner_histogram(a, t, cap), c);
}

BigCount count_good_by_rightup_corners(const Composition& a, Point t, int c, std::size_t cap) {
  return histogram_entry(good_rightup_corner_histogram(a, t, cap), c);
}

std::vector<BigCount> bad_bucket_histogram(const Composition& a, Point t, std::size_t cap) {
  require_in_grid(a, t);
  std::vector<std::size_t> counts(static_cast<std::size_t>(a.total()), 0);
  for (const auto& p : enumerate_paths({0, 0}, t, cap)) {
    for (int j = 0; j < a.parts_count(); ++j) {
      const Lpbp pair(p, a, j);
      if (pair.is_good()) continue;
      ++counts.at(static_cast<std::size_t>(locate_bad_step(pair).column));
    }
  }
  return to_histogram(counts);
}

BigCount count_bad_by_bucket(const Composition& a, Point t, int i, std::size_t cap) {
  if (a.total() < 1) throw DomainError("bucket index requires n >= 1");
  if (i < 0 || i >= a.total()) {
    throw DomainError("bucket " + std::to_string(i) + " outside [0, " + std::to_string(a.total()) + ")");
  }
  return bad_bucket_histogram(a, t, cap)[static_cast<std::size_t>(i)];
}

std::vector<LatticePath> enumerate_paths(Point from, Point to, std::size_t cap) {
  require_under_cap(from, to, cap);
  std::vector<LatticePath> out;
  collect_paths(from, to, [](Point) { return true; }, out);
  return out;
}

std::vector<LatticePath> enumerate_dominated_paths(const Composition& a, Point t, std::size_t cap) {
  require_in_grid(a, t);
  require_under_cap({0, 0}, t, cap);
  std::vector<LatticePath> out;
  collect_paths({0, 0}, t, [&](Point p) { return p.x >= boundary_x(a, p.y); }, out);
  return out;
}

Composition composition_from_staircase(std::string_view boundary_word) {
  std::vector<int> parts{0};
  for (char ch : boundary_word) {
    if (ch == 'R') {
      ++parts.back();
    } else if (ch == 'U') {
      parts.push_back(0);
    } else {
      throw DomainError("staircase words use only 'R' and 'U'");
    }
  }
  return Composition(std::move(parts));
}

}  // namespace lpbp
