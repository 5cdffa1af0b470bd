#pragma once

// Independent reference computations shared by the test binaries. Nothing
// here calls the library's counting code: paths are generated directly and
// checked point by point.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lpbp/bigint.hpp"
#include "lpbp/composition.hpp"
#include "lpbp/lattice.hpp"

namespace lpbp::testing {

inline std::vector<std::string> all_words(int rights, int ups) {
  std::vector<std::string> out;
  std::string cur;
  std::function<void(int, int)> rec = [&](int r, int u) {
    if (r == 0 && u == 0) {
      out.push_back(cur);
      return;
    }
    if (r > 0) {
      cur.push_back('R');
      rec(r - 1, u);
      cur.pop_back();
    }
    if (u > 0) {
      cur.push_back('U');
      rec(r, u - 1);
      cur.pop_back();
    }
  };
  rec(rights, ups);
  return out;
}

inline int prefix_sum(const Composition& a, int y) {
  int s = 0;
  for (int i = 0; i < y; ++i) s += a.parts()[static_cast<std::size_t>(i)];
  return s;
}

/// Right steps before each up step, read straight off the word.
inline bool word_dominated(const Composition& a, const std::string& w) {
  int rights = 0;
  int ups = 0;
  for (char ch : w) {
    if (ch == 'R') {
      ++rights;
    } else {
      ++ups;
      if (ups > a.parts_count() || rights < prefix_sum(a, ups)) return false;
    }
  }
  return true;
}

inline std::int64_t brute_dominated(const Composition& a, Point t) {
  std::int64_t c = 0;
  for (const auto& w : all_words(t.x, t.y)) c += word_dominated(a, w) ? 1 : 0;
  return c;
}

/// Counts words from (0,0) to t whose every visited point passes `ok`.
inline std::int64_t brute_region(Point t, const std::function<bool(Point)>& ok) {
  std::int64_t c = 0;
  for (const auto& w : all_words(t.x, t.y)) {
    Point p{0, 0};
    bool good = ok(p);
    for (char ch : w) {
      if (!good) break;
      (ch == 'R' ? p.x : p.y) += 1;
      good = ok(p);
    }
    c += good ? 1 : 0;
  }
  return c;
}

/// Pascal's triangle with 64-bit entries; enough for the sizes used in tests.
inline std::int64_t pascal(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::vector<std::int64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::int64_t> next(static_cast<std::size_t>(i + 1), 1);
    for (int j = 1; j < i; ++j) next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

/// Catalan numbers from C_{n+1} = sum C_i C_{n-i}.
inline std::vector<BigInt> catalan_by_recurrence(int upto) {
  std::vector<BigInt> c{BigInt(1)};
  for (int n = 0; n < upto; ++n) {
    BigInt s(0);
    for (int i = 0; i <= n; ++i) s += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(n - i)];
    c.push_back(s);
  }
  return c;
}

inline std::string repeat(const std::string& s, int times) {
  std::string out;
  for (int i = 0; i < times; ++i) out += s;
  return out;
}

inline BigInt big(std::int64_t v) { return BigInt(v); }

}  // namespace lpbp::testing
