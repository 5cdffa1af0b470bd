#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace lpbp {

/// Integer lattice point. Coordinates may be negative: reflected paths
/// start at (-1, 1) and b_i^{-1} can sit left of the y-axis.
struct Point {
  int x = 0;
  int y = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;  // lexicographic, for containers

  /// Parses "x,y". Throws DomainError on malformed input.
  static Point parse(const std::string& text);
  std::string to_string() const;
};

// The three partial orders used by the reflection construction.
inline bool weakly_below_left(Point p, Point q) { return p.x <= q.x && p.y <= q.y; }   // p <= q
inline bool left_and_strictly_below(Point p, Point q) { return p.x <= q.x && p.y < q.y; }  // p ≲ q
inline bool strictly_below_left(Point p, Point q) { return p.x < q.x && p.y < q.y; }  // p < q

enum class Step : char { Right = 'R', Up = 'U' };

/// Monotone lattice path: an origin followed by unit right/up steps.
class LatticePath {
 public:
  LatticePath() = default;
  LatticePath(Point origin, std::vector<Step> steps) : origin_(origin), steps_(std::move(steps)) {}

  /// Builds a path from a word over {R, U}. Throws DomainError on any other letter.
  static LatticePath from_word(std::string_view word, Point origin = {0, 0});

  Point origin() const { return origin_; }
  const std::vector<Step>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }

  Point terminus() const;
  int right_count() const;
  int up_count() const;
  std::string word() const;
  /// Visited points, origin first; size() + 1 entries.
  std::vector<Point> points() const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
  friend auto operator<=>(const LatticePath& a, const LatticePath& b) {
    if (auto c = a.origin_ <=> b.origin_; c != 0) return c;
    return a.word() <=> b.word();
  }

 private:
  Point origin_{};
  std::vector<Step> steps_;
};

/// Points where an up step is immediately followed by a right step.
int upright_corners(const LatticePath& p);

/// Points where a right step is immediately followed by an up step; a
/// leading up step counts as one extra (virtual) corner.
int rightup_corners(const LatticePath& p);

}  // namespace lpbp
