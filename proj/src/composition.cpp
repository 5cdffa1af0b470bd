#include "lpbp/composition.hpp"

#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "lpbp/errors.hpp"

namespace lpbp {

namespace {

int parse_nonnegative(std::string_view field, const std::string& whole) {
  int v = 0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (field.empty() || ec != std::errc{} || ptr != last || v < 0) {
    throw DomainError("expected comma-separated nonnegative integers, got '" + whole + "'");
  }
  return v;
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw DomainError("a composition needs at least one part");
  for (int p : parts_) {
    if (p < 0) throw DomainError("composition parts must be nonnegative");
  }
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::parse(const std::string& text) {
  std::vector<int> parts;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    parts.push_back(parse_nonnegative(rest.substr(0, comma), text));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return Composition(std::move(parts));
}

int Composition::at(long j) const {
  const long m = parts_count();
  return parts_[static_cast<std::size_t>(((j % m) + m) % m)];
}

std::string Composition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  return os.str();
}

Composition shift_composition(const Composition& a, long j) {
  const int m = a.parts_count();
  std::vector<int> parts(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) parts[static_cast<std::size_t>(i)] = a.at(i - j);
  return Composition(std::move(parts));
}

int composition_period(const Composition& a) {
  const int m = a.parts_count();
  for (int d = 1; d < m; ++d) {
    if (m % d == 0 && shift_composition(a, d) == a) return d;
  }
  return m;
}

int boundary_x(const Composition& a, int y) {
  if (y < 0 || y > a.parts_count()) {
    throw DomainError("boundary height " + std::to_string(y) + " outside [0, " +
                      std::to_string(a.parts_count()) + "]");
  }
  return std::accumulate(a.parts().begin(), a.parts().begin() + y, 0);
}

std::vector<Composition> weak_compositions(int n, int m) {
  if (m < 1 || n < 0) throw DomainError("weak_compositions: need n >= 0 and m >= 1");
  std::vector<Composition> out;
  std::vector<int> parts(static_cast<std::size_t>(m), 0);
  std::function<void(int, int)> fill = [&](int idx, int left) {
    if (idx == m - 1) {
      parts[static_cast<std::size_t>(idx)] = left;
      out.emplace_back(parts);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      parts[static_cast<std::size_t>(idx)] = v;
      fill(idx + 1, left - v);
    }
  };
  fill(0, n);
  return out;
}

}  // namespace lpbp
