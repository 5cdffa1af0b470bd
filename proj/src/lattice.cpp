#include "lpbp/lattice.hpp"

#include <algorithm>
#include <charconv>

#include "lpbp/errors.hpp"

namespace lpbp {

Point Point::parse(const std::string& text) {
  const auto comma = text.find(',');
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw DomainError("expected a point 'x,y', got '" + text + "'");
    }
    return v;
  };
  if (comma == std::string::npos) throw DomainError("expected a point 'x,y', got '" + text + "'");
  const std::string_view view = text;
  return Point{parse_int(view.substr(0, comma)), parse_int(view.substr(comma + 1))};
}

std::string Point::to_string() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

LatticePath LatticePath::from_word(std::string_view word, Point origin) {
  std::vector<Step> steps;
  steps.reserve(word.size());
  for (char ch : word) {
    if (ch == 'R') {
      steps.push_back(Step::Right);
    } else if (ch == 'U') {
      steps.push_back(Step::Up);
    } else {
      throw DomainError("path words use only 'R' and 'U', got '" + std::string(word) + "'");
    }
  }
  return LatticePath(origin, std::move(steps));
}

int LatticePath::right_count() const {
  return static_cast<int>(std::count(steps_.begin(), steps_.end(), Step::Right));
}

int LatticePath::up_count() const { return static_cast<int>(steps_.size()) - right_count(); }

Point LatticePath::terminus() const { return {origin_.x + right_count(), origin_.y + up_count()}; }

std::string LatticePath::word() const {
  std::string w;
  w.reserve(steps_.size());
  for (Step s : steps_) w.push_back(static_cast<char>(s));
  return w;
}

std::vector<Point> LatticePath::points() const {
  std::vector<Point> pts;
  pts.reserve(steps_.size() + 1);
  Point p = origin_;
  pts.push_back(p);
  for (Step s : steps_) {
    (s == Step::Right ? p.x : p.y) += 1;
    pts.push_back(p);
  }
  return pts;
}

int upright_corners(const LatticePath& p) {
  const auto& s = p.steps();
  int c = 0;
  for (std::size_t i = 1; i < s.size(); ++i) c += (s[i - 1] == Step::Up && s[i] == Step::Right);
  return c;
}

int rightup_corners(const LatticePath& p) {
  const auto& s = p.steps();
  int c = (!s.empty() && s.front() == Step::Up) ? 1 : 0;
  for (std::size_t i = 1; i < s.size(); ++i) c += (s[i - 1] == Step::Right && s[i] == Step::Up);
  return c;
}

}  // namespace lpbp
