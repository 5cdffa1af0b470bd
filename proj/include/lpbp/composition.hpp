#pragma once

#include <string>
#include <vector>

namespace lpbp {

/// Weak composition (a_0, ..., a_{m-1}) of n: m >= 1 nonnegative parts.
///
/// Indexing is cyclic: `at(j)` resolves to a_{j mod m} for any integer j,
/// negative j included, so a_{-1} is the last part.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  /// Parses "1,2,3". Throws DomainError on malformed input.
  static Composition parse(const std::string& text);

  int parts_count() const { return static_cast<int>(parts_.size()); }
  int total() const { return total_; }
  const std::vector<int>& parts() const { return parts_; }
  int at(long j) const;

  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// The j-th cyclic shift (a_{-j}, a_{-j+1}, ..., a_{-j+m-1}).
Composition shift_composition(const Composition& a, long j);

/// Least d >= 1 with shift_composition(a, d) == a; always divides m.
int composition_period(const Composition& a);

/// x-coordinate of the boundary at integer height y, i.e. a_0 + ... + a_{y-1}.
/// Throws DomainError unless 0 <= y <= m.
int boundary_x(const Composition& a, int y);

/// All weak compositions of n into m parts, in lexicographic order.
std::vector<Composition> weak_compositions(int n, int m);

}  // namespace lpbp
