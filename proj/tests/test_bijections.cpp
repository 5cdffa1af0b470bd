#include <doctest.h>

#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "lpbp/bijections.hpp"
#include "lpbp/closed_forms.hpp"
#include "lpbp/combinatorics.hpp"
#include "lpbp/dominance.hpp"
#include "lpbp/errors.hpp"
#include "support.hpp"

using namespace lpbp;
using lpbp::testing::big;

namespace {

std::string key(const Lpbp& pair) { return pair.path.word() + "/" + std::to_string(pair.shift_index); }

void increasing_subsets(int lo, int hi, int size, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int v = from; v <= hi; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(lo);
}

// The worked example: a = (1,3,0,2,4,0,2), l = 4, blocks R | RRUR | - | RR | RRURR | - | UURR.
const Composition kExampleA({1, 3, 0, 2, 4, 0, 2});
const std::string kExampleWord = "RRRURRRRRURRUURR";

}  // namespace

TEST_CASE("bad_step_context") {
  const Composition a({1, 2, 3, 2});
  auto ctx = bad_step_context(a, 1);
  CHECK(ctx.base == Point{1, 2});
  CHECK(ctx.offset == 3);
  ctx = bad_step_context(a, 4);
  CHECK(ctx.base == Point{4, 3});
  CHECK(ctx.offset == 2);
  CHECK(ctx.b[0] == Point{1, 1});
  CHECK(ctx.b_minus1 == Point{-2, 0});
  ctx = bad_step_context(Composition({1, 1}), 0);
  CHECK(ctx.base == Point{0, 1});
  CHECK(ctx.offset == 2);
  REQUIRE(ctx.b.size() == 2);
  CHECK(ctx.b[0] == Point{0, 1});
  CHECK(ctx.b[1] == Point{1, 2});
  CHECK_THROWS_AS(bad_step_context(a, 8), DomainError);
  CHECK_THROWS_AS(bad_step_context(a, -1), DomainError);
  CHECK_THROWS_AS(bad_step_context(Composition({0, 0}), 0), DomainError);
}

TEST_CASE("bad_step_context invariants") {
  for (int m = 1; m <= 5; ++m) {
    for (int n = 1; n + m <= 9; ++n) {
      for (const auto& a : weak_compositions(n, m)) {
        for (int i = 0; i < n; ++i) {
          const auto ctx = bad_step_context(a, i);
          // p_i is the lowest point of column i strictly left of the boundary.
          CHECK(ctx.base.x < boundary_x(a, ctx.base.y));
          CHECK(ctx.base.x >= boundary_x(a, ctx.base.y - 1));
          std::set<Point> as_set(ctx.b.begin(), ctx.b.end());
          std::set<Point> shifts;
          for (int j = 0; j < m; ++j) shifts.insert(point_shift(a, ctx.base, j));
          CHECK(as_set == shifts);
          for (int j = 0; j < m; ++j) {
            CHECK(ctx.b[static_cast<std::size_t>(j)].y == j + 1);
            if (j > 0) CHECK(left_and_strictly_below(ctx.b[static_cast<std::size_t>(j - 1)], ctx.b[static_cast<std::size_t>(j)]));
            // b_i^j sits strictly left of the shifted boundary, one row above a dominated point.
            const Composition shifted = shift_composition(a, ctx.offset + j);
            const Point b = ctx.b[static_cast<std::size_t>(j)];
            CHECK(b.x < boundary_x(shifted, b.y));
            CHECK(b.x >= boundary_x(shifted, b.y - 1));
          }
          CHECK(ctx.b_minus1.y == 0);
          CHECK(ctx.b_minus1.x <= ctx.b[0].x);
        }
      }
    }
  }
}

TEST_CASE("completeness") {
  const Composition a({1, 2, 3, 2});
  CHECK(is_complete(bad_step_context(a, 1), {3, 3}));
  CHECK_FALSE(is_complete(bad_step_context(a, 4), {3, 3}));
  CHECK(is_complete(bad_step_context(a, 4), {8, 4}));
  const auto ctx1 = bad_step_context(a, 1);
  CHECK(is_strongly_complete(ctx1, {3, 3}) == (ctx1.b[2].x < 3));
  CHECK(is_strongly_complete(bad_step_context(a, 4), {0, 0}));
  CHECK(is_strongly_complete(bad_step_context(Composition({1, 1}), 0), {2, 2}));
  CHECK_THROWS_AS(is_complete(ctx1, {3, 5}), DomainError);

  for (int m = 1; m <= 5; ++m) {
    for (int n = 1; n + m <= 9; ++n) {
      for (const auto& c : weak_compositions(n, m)) {
        for (int k = 0; k <= n; ++k) {
          for (int l = 0; l <= m; ++l) {
            const bool weak = lpbp_hypothesis_holds(c, {k, l});
            const bool strong = corner_hypothesis_holds(c, {k, l});
            for (int i = 0; i < n; ++i) {
              const auto ctx = bad_step_context(c, i);
              if (weak) CHECK(is_complete(ctx, {k, l}));
              if (strong) CHECK(is_strongly_complete(ctx, {k, l}));
              if (is_strongly_complete(ctx, {k, l})) CHECK(is_complete(ctx, {k, l}));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("locate_bad_step") {
  const Lpbp pair(LatticePath::from_word("UURR"), Composition({1, 1}), 0);
  const auto loc = locate_bad_step(pair);
  CHECK(loc.step_index == 0);
  CHECK(loc.landing == Point{0, 1});
  CHECK(loc.column == 0);
  CHECK(loc.level == 0);
  CHECK_THROWS_AS(locate_bad_step(Lpbp(LatticePath::from_word("RURU"), Composition({1, 1}), 0)), DomainError);
  // A case where undoing the shift coordinatewise would pick the wrong column.
  const auto other = locate_bad_step(Lpbp(LatticePath::from_word("UURRR"), Composition({1, 2}), 1));
  CHECK(other.landing == Point{0, 1});
  CHECK(other.column == 1);
  CHECK(other.level == 0);
}

TEST_CASE("psi and phi examples") {
  const Composition a({1, 1});
  const Lpbp pair(LatticePath::from_word("UURR"), a, 0);
  const LatticePath image = psi(pair, {2, 2});
  CHECK(image.origin() == Point{-1, 1});
  CHECK(image.word() == "RURR");
  CHECK(phi(image, a, 0, 0, {2, 2}) == pair);

  const Lpbp second(LatticePath::from_word("URRU"), a, 0);
  const auto trace = psi_trace(second, {2, 2});
  CHECK(trace.location.step_index == 0);
  CHECK(trace.before.word().empty());
  CHECK(trace.after.word() == "RRU");
  CHECK(trace.result.word() == "RRRU");
  CHECK(phi(trace.result, a, trace.location.column, trace.location.level, {2, 2}) == second);

  CHECK_THROWS_AS(psi(Lpbp(LatticePath::from_word("RURU"), a, 0), {2, 2}), DomainError);
  CHECK_THROWS_AS(psi(pair, {2, 1}), DomainError);
  CHECK_THROWS_AS(phi(LatticePath::from_word("RURR"), a, 0, 0, {2, 2}), DomainError);        // wrong origin
  CHECK_THROWS_AS(phi(LatticePath::from_word("RURR", {-1, 1}), a, 0, 1, {2, 2}), DomainError);  // meets b^0 first
  CHECK_THROWS_AS(phi(LatticePath::from_word("URRR", {-1, 1}), a, 0, 0, {2, 2}), DomainError);  // misses b^0
  CHECK_THROWS_AS(phi(LatticePath::from_word("RURR", {-1, 1}), a, 0, 0, {2, 1}), DomainError);  // wrong terminus
}

TEST_CASE("psi/phi round trip and bucket sizes") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n + m <= 7; ++n) {
      for (const auto& a : weak_compositions(n, m)) {
        for (int k = 0; k <= n; ++k) {
          for (int l = 0; l <= m; ++l) {
            const Point t{k, l};
            std::map<int, std::int64_t> per_bucket;
            for (const auto& p : enumerate_paths({0, 0}, t)) {
              for (int j = 0; j < m; ++j) {
                const Lpbp pair(p, a, j);
                if (pair.is_good()) continue;
                const auto tr = psi_trace(pair, t);
                const auto& ctx = bad_step_context(a, tr.location.column);
                const auto pts = tr.result.points();
                // Enters b^j horizontally and avoids the lower levels.
                const Point target = ctx.b[static_cast<std::size_t>(tr.location.level)];
                const auto hit = std::find(pts.begin(), pts.end(), target);
                REQUIRE(hit != pts.end());
                CHECK(tr.result.steps()[static_cast<std::size_t>(hit - pts.begin() - 1)] == Step::Right);
                for (int lv = 0; lv < tr.location.level; ++lv) {
                  CHECK(std::find(pts.begin(), hit, ctx.b[static_cast<std::size_t>(lv)]) == hit);
                }
                CHECK(phi(tr.result, a, tr.location.column, tr.location.level, t) == pair);
                ++per_bucket[tr.location.column];
              }
            }
            for (int i = 0; i < n; ++i) {
              if (!is_complete(bad_step_context(a, i), t)) continue;
              CHECK(big(per_bucket[i]) == binomial(k + l, l - 1));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("phi accepts exactly the images of psi") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n + m <= 6; ++n) {
      for (const auto& a : weak_compositions(n, m)) {
        const Point t{n, m};
        std::set<std::string> images;
        for (const auto& p : enumerate_paths({0, 0}, t)) {
          for (int j = 0; j < m; ++j) {
            const Lpbp pair(p, a, j);
            if (pair.is_good()) continue;
            const auto loc = locate_bad_step(pair);
            images.insert(std::to_string(loc.column) + ":" + std::to_string(loc.level) + ":" + psi(pair, t).word());
          }
        }
        for (int i = 0; i < n; ++i) {
          for (int lv = 0; lv < m; ++lv) {
            for (const auto& p : enumerate_paths({-1, 1}, t)) {
              const std::string id = std::to_string(i) + ":" + std::to_string(lv) + ":" + p.word();
              bool accepted = true;
              try {
                phi(p, a, i, lv, t);
              } catch (const DomainError&) {
                accepted = false;
              }
              CHECK(accepted == (images.count(id) == 1));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("corner data encoding, examples and errors") {
  const Composition a({1, 1});
  std::set<std::string> seen;
  for (const auto& ys : std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}}) {
    const auto pair = corner_data_to_bad_lpbp(a, 0, {2, 2}, {1}, ys);
    CHECK_FALSE(pair.is_good());
    CHECK(upright_corners(pair.path) == 1);
    CHECK(locate_bad_step(pair).column == 0);
    seen.insert(key(pair));
  }
  CHECK(seen.size() == 3);

  CHECK_THROWS_AS(corner_data_to_bad_lpbp(a, 0, {2, 2}, {}, {1}), DomainError);
  CHECK_THROWS_AS(corner_data_to_bad_lpbp(a, 0, {2, 2}, {0}, {1, 2}), DomainError);     // X_c != k-1
  CHECK_THROWS_AS(corner_data_to_bad_lpbp(a, 0, {2, 2}, {1}, {2, 2}), DomainError);     // Y not increasing
  CHECK_THROWS_AS(corner_data_to_bad_lpbp(a, 0, {2, 2}, {1}, {1, 4}), DomainError);     // Y past l+1
  CHECK_THROWS_AS(corner_data_to_bad_lpbp(a, 0, {2, 2}, {1}, {1, 2, 3}), DomainError);  // wrong length
  CHECK_THROWS_AS(corner_data_to_bad_lpbp(Composition({1, 2, 3, 2}), 4, {3, 3}, {2}, {1, 2}), DomainError);
}

TEST_CASE("corner data encoding is a bijection onto each refined bucket") {
  int cases = 0;
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n + m <= 7; ++n) {
      for (const auto& a : weak_compositions(n, m)) {
        for (int k = 1; k <= n; ++k) {
          for (int l = 0; l <= m; ++l) {
            const Point t{k, l};
            std::map<std::pair<int, int>, std::set<std::string>> buckets;  // (i, c) -> pairs
            for (const auto& p : enumerate_paths({0, 0}, t)) {
              for (int j = 0; j < m; ++j) {
                const Lpbp pair(p, a, j);
                if (pair.is_good()) continue;
                buckets[{locate_bad_step(pair).column, upright_corners(p)}].insert(key(pair));
              }
            }
            for (int i = 0; i < n; ++i) {
              if (!is_strongly_complete(bad_step_context(a, i), t)) continue;
              for (int c = 1; c <= std::min(k, l + 1); ++c) {
                ++cases;
                std::vector<std::vector<int>> xs_all, ys_all;
                increasing_subsets(0, k - 2, c - 1, xs_all);
                increasing_subsets(1, l + 1, c + 1, ys_all);
                std::set<std::string> image;
                std::int64_t encoded = 0;
                for (auto xs : xs_all) {
                  xs.push_back(k - 1);
                  for (const auto& ys : ys_all) {
                    image.insert(key(corner_data_to_bad_lpbp(a, i, t, xs, ys)));
                    ++encoded;
                  }
                }
                CHECK(static_cast<std::int64_t>(image.size()) == encoded);
                CHECK(image == buckets[{i, c}]);
                CHECK(big(encoded) == binomial(k - 1, c - 1) * binomial(l + 1, c + 1));
              }
            }
          }
        }
      }
    }
  }
  CHECK(cases > 1000);
}

TEST_CASE("full image check for (1,2) at (3,2)") {
  const Composition a({1, 2});
  const Point t{3, 2};
  std::set<std::string> bad_pairs;
  for (const auto& p : enumerate_paths({0, 0}, t)) {
    for (int j = 0; j < 2; ++j) {
      if (!Lpbp(p, a, j).is_good()) bad_pairs.insert(key(Lpbp(p, a, j)));
    }
  }
  std::set<std::string> image;
  for (int i = 0; i < 3; ++i) {
    REQUIRE(is_strongly_complete(bad_step_context(a, i), t));
    for (int c = 1; c <= 3; ++c) {
      std::vector<std::vector<int>> xs_all, ys_all;
      increasing_subsets(0, 1, c - 1, xs_all);
      increasing_subsets(1, 3, c + 1, ys_all);
      for (auto xs : xs_all) {
        xs.push_back(2);
        for (const auto& ys : ys_all) image.insert(key(corner_data_to_bad_lpbp(a, i, t, xs, ys)));
      }
    }
  }
  CHECK(image.size() == 15);  // n C(5,1)
  CHECK(image == bad_pairs);
}

TEST_CASE("positive_shifts") {
  const std::vector<int> example{1, 0, 1, -1, 1, 0, 1, 0, 1, -1, 1, 0, 1, -2};
  CHECK(positive_shifts(example) == std::vector<std::size_t>{0, 4, 6});
  CHECK(positive_shifts({1}) == std::vector<std::size_t>{0});
  CHECK(positive_shifts({1, -1, 1, 0}) == std::vector<std::size_t>{2});
  CHECK_THROWS_AS(positive_shifts({1, -1}), DomainError);
  CHECK_THROWS_AS(positive_shifts({2, -1}), DomainError);
  CHECK_THROWS_AS(positive_shifts({}), DomainError);

  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> len(1, 14), entry(-5, 1);
  int tested = 0;
  while (tested < 10000) {
    std::vector<int> u(static_cast<std::size_t>(len(rng)));
    for (auto& v : u) v = entry(rng);
    const long sum = std::accumulate(u.begin(), u.end(), 0L);
    if (sum < 1) continue;
    ++tested;
    CHECK(static_cast<long>(positive_shifts(u).size()) == sum);
  }
}

TEST_CASE("factor_word and cycle_vector") {
  const auto blocks = factor_word(kExampleA, kExampleWord);
  CHECK(blocks == std::vector<std::string>{"R", "RRUR", "", "RR", "RRURR", "", "UURR"});
  CHECK(cycle_vector(blocks) == std::vector<int>{1, 0, 1, -1, 1, 0, 1, 0, 1, -1, 1, 0, 1, -2});
  CHECK_THROWS_AS(factor_word(Composition({1, 1}), "RRR"), DomainError);
  CHECK_THROWS_AS(factor_word(Composition({1, 1}), "RRU"), DomainError);
  CHECK(factor_word(Composition({0, 2}), "URR") == std::vector<std::string>{"", "URR"});
}

TEST_CASE("omega on the worked example") {
  const auto tr = omega_trace(kExampleA, kExampleWord, 3);
  CHECK(tr.good_starts == std::vector<int>{0, 2, 3});
  CHECK(tr.start == 3);
  CHECK(tr.result.boundary() == Composition({2, 4, 0, 2, 1, 3, 0}));
  CHECK(tr.result.shift_index == 4);
  CHECK(tr.result.path.word() == "RRRRURRUURRRRRUR");
  CHECK(tr.result.is_good());
  CHECK(tr.result.path.terminus() == Point{12, 4});
  CHECK(omega_inverse(tr.result) == OmegaPreimage{kExampleWord, 3});
}

TEST_CASE("omega small examples and errors") {
  const Composition a({1, 1});
  auto pair = omega(a, "RUR", 1);
  CHECK(pair.path.word() == "RUR");
  CHECK(pair.shift_index == 0);
  pair = omega(a, "URR", 1);
  CHECK(pair.path.word() == "RUR");
  CHECK(pair.shift_index == 1);
  CHECK(omega_inverse(Lpbp(LatticePath::from_word("RUR"), a, 0)) == OmegaPreimage{"RUR", 1});

  CHECK_THROWS_AS(omega(a, "RRU", 1), DomainError);   // ends with U
  CHECK_THROWS_AS(omega(a, "RUUR", 1), DomainError);  // l = m
  CHECK_THROWS_AS(omega(a, "RUR", 2), DomainError);   // k > m - l
  CHECK_THROWS_AS(omega(a, "RUR", 0), DomainError);
  CHECK_THROWS_AS(omega(a, "RURR", 1), DomainError);  // too many R
  CHECK_THROWS_AS(omega_inverse(Lpbp(LatticePath::from_word("URR"), a, 0)), DomainError);  // bad pair
  CHECK_THROWS_AS(omega_inverse(Lpbp(LatticePath::from_word("RU"), a, 0)), DomainError);   // off the right edge
  CHECK_THROWS_AS(omega_inverse(Lpbp(LatticePath::from_word("RRU"), a, 0)), DomainError);  // last step up
}

TEST_CASE("omega round trip and image count") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 5; ++n) {
      for (const auto& a : weak_compositions(n, m)) {
        for (int l = 0; l < m; ++l) {
          std::set<std::string> image;
          for (const auto& w : lpbp::testing::all_words(n - 1, l)) {
            const std::string word = w + "R";
            for (int k = 1; k <= m - l; ++k) {
              const Lpbp pair = omega(a, word, k);
              CHECK(pair.is_good());
              CHECK(pair.path.terminus() == Point{n, l});
              CHECK(pair.path.steps().back() == Step::Right);
              CHECK(omega_inverse(pair) == OmegaPreimage{word, k});
              image.insert(key(pair));
            }
          }
          CHECK(big(static_cast<std::int64_t>(image.size())) == gstar_count(n, m, l));
          // Every good pair ending with a right step is hit.
          std::int64_t targets = 0;
          for (int j = 0; j < m; ++j) {
            for (const auto& p : enumerate_dominated_paths(shift_composition(a, j), {n, l})) {
              if (!p.empty() && p.steps().back() == Step::Right) ++targets;
            }
          }
          CHECK(static_cast<std::int64_t>(image.size()) == targets);
        }
      }
    }
  }
}
