#include "lpbp/bijections.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lpbp/dominance.hpp"
#include "lpbp/errors.hpp"

namespace lpbp {

namespace {

void append(std::vector<Step>& out, Step s, int count) {
  if (count < 0) throw std::logic_error("negative run length while building a path");
  out.insert(out.end(), static_cast<std::size_t>(count), s);
}

const Point kReflectedOrigin{-1, 1};

int positive_mod(long v, int m) { return static_cast<int>(((v % m) + m) % m); }

}  // namespace

BadStepContext bad_step_context(const Composition& a, int column) {
  const int n = a.total();
  const int m = a.parts_count();
  if (n < 1) throw DomainError("B_i is only defined when n >= 1");
  if (column < 0 || column >= n) {
    throw DomainError("column " + std::to_string(column) + " outside [0, " + std::to_string(n) + ")");
  }
  BadStepContext ctx;
  ctx.column = column;
  int y = 1;
  while (boundary_x(a, y) <= column) ++y;  // terminates: boundary_x(a, m) = n > column
  ctx.base = {column, y};
  ctx.offset = m + 1 - y;
  ctx.b.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) ctx.b.push_back(point_shift(a, ctx.base, ctx.offset + j));

  long sum = 0;
  for (int r = 1; r <= ctx.offset; ++r) sum += a.at(-r);
  ctx.b_minus1 = {-a.at(-ctx.offset) + reduce_column(column + sum, n), 0};
  return ctx;
}

namespace {

const Point* height_representative(const BadStepContext& ctx, Point t) {
  const int m = static_cast<int>(ctx.b.size());
  if (t.y < 0 || t.y > m) throw DomainError("terminus height outside [0, m]");
  return t.y == 0 ? nullptr : &ctx.b[static_cast<std::size_t>(t.y - 1)];
}

}  // namespace

bool is_complete(const BadStepContext& ctx, Point t) {
  const Point* rep = height_representative(ctx, t);
  return rep == nullptr || rep->x <= t.x;
}

bool is_strongly_complete(const BadStepContext& ctx, Point t) {
  const Point* rep = height_representative(ctx, t);
  return rep == nullptr || rep->x < t.x;
}

BadStepLocation locate_bad_step(const Lpbp& pair) {
  const auto bad = first_bad_step(pair.boundary(), pair.path);
  if (!bad) throw DomainError("pair is good: its path is dominated by shift " + std::to_string(pair.shift_index));
  const Composition& a = pair.composition;
  const int m = a.parts_count();

  // Point shifts reduce each coordinate separately, so they cannot simply be
  // undone; scan the columns instead.
  const int level = bad->landing.y - 1;
  int column = -1;
  for (int i = 0; i < a.total(); ++i) {
    const BadStepContext ctx = bad_step_context(a, i);
    if (ctx.b[static_cast<std::size_t>(level)] != bad->landing) continue;
    if (positive_mod(ctx.offset + level, m) != pair.shift_index) continue;
    if (column >= 0) {
      throw std::logic_error("bad step landing " + bad->landing.to_string() + " lies in two buckets");
    }
    column = i;
  }
  if (column < 0) {
    throw std::logic_error("bad step landing " + bad->landing.to_string() + " lies in no bucket");
  }
  return {bad->index, bad->landing, column, level};
}

PsiTrace psi_trace(const Lpbp& pair, Point t) {
  if (pair.path.terminus() != t) {
    throw DomainError("path ends at " + pair.path.terminus().to_string() + ", not " + t.to_string());
  }
  PsiTrace tr;
  tr.location = locate_bad_step(pair);
  const auto& steps = pair.path.steps();
  const auto cut = steps.begin() + static_cast<std::ptrdiff_t>(tr.location.step_index);

  std::vector<Step> before(steps.begin(), cut);
  std::vector<Step> after(cut + 1, steps.end());
  // A half-turn of a monotone path reverses its word and keeps every letter.
  std::vector<Step> reflected(before.rbegin(), before.rend());

  tr.before = LatticePath({0, 0}, before);
  tr.after = LatticePath(tr.location.landing, after);
  tr.reflected = LatticePath(kReflectedOrigin, reflected);

  std::vector<Step> joined = std::move(reflected);
  joined.push_back(Step::Right);
  joined.insert(joined.end(), after.begin(), after.end());
  tr.result = LatticePath(kReflectedOrigin, std::move(joined));
  return tr;
}

LatticePath psi(const Lpbp& pair, Point t) { return psi_trace(pair, t).result; }

Lpbp phi(const LatticePath& path, const Composition& a, int column, int j, Point t) {
  if (path.origin() != kReflectedOrigin) throw DomainError("phi expects a path starting at (-1,1)");
  if (path.terminus() != t) throw DomainError("path does not end at " + t.to_string());
  const BadStepContext ctx = bad_step_context(a, column);
  const int m = a.parts_count();
  if (j < 0 || j >= m) throw DomainError("level j outside [0, m)");

  const auto pts = path.points();
  std::size_t hit = 0;
  int hit_level = -1;
  for (std::size_t q = 0; q < pts.size() && hit_level < 0; ++q) {
    for (int r = 0; r <= j; ++r) {
      if (pts[q] == ctx.b[static_cast<std::size_t>(r)]) {
        hit = q;
        hit_level = r;
        break;
      }
    }
  }
  if (hit_level < 0) throw DomainError("path misses b_i^" + std::to_string(j));
  if (hit_level != j) {
    throw DomainError("path meets b_i^" + std::to_string(hit_level) + " before b_i^" + std::to_string(j));
  }
  const auto& steps = path.steps();
  if (steps[hit - 1] != Step::Right) throw DomainError("path enters b_i^j with an up step");

  std::vector<Step> word(steps.rend() - static_cast<std::ptrdiff_t>(hit - 1), steps.rend());
  word.push_back(Step::Up);
  word.insert(word.end(), steps.begin() + static_cast<std::ptrdiff_t>(hit), steps.end());

  Lpbp out(LatticePath({0, 0}, std::move(word)), a, positive_mod(ctx.offset + j, m));
  const auto loc = locate_bad_step(out);
  if (loc.column != column || loc.level != j) {
    throw std::logic_error("phi produced a pair whose first bad step is not at b_i^j");
  }
  return out;
}

Lpbp corner_data_to_bad_lpbp(const Composition& a, int column, Point t, const std::vector<int>& xs,
                             const std::vector<int>& ys) {
  const int c = static_cast<int>(xs.size());
  const int k = t.x;
  const int l = t.y;
  if (c < 1) throw DomainError("corner data needs c >= 1");
  if (static_cast<int>(ys.size()) != c + 1) throw DomainError("Y must have exactly c + 1 entries");
  if (xs.front() < 0 || xs.back() != k - 1 ||
      std::adjacent_find(xs.begin(), xs.end(), std::greater_equal<>{}) != xs.end()) {
    throw DomainError("X must satisfy 0 <= X_1 < ... < X_c = k - 1");
  }
  if (ys.front() < 1 || ys.back() > l + 1 ||
      std::adjacent_find(ys.begin(), ys.end(), std::greater_equal<>{}) != ys.end()) {
    throw DomainError("Y must satisfy 1 <= Y_1 < ... < Y_{c+1} <= l + 1");
  }
  const BadStepContext ctx = bad_step_context(a, column);
  if (!is_strongly_complete(ctx, t)) throw DomainError("B_i is not strongly complete with respect to t");

  auto X = [&](int s) { return xs[static_cast<std::size_t>(s - 1)]; };  // 1-based, as in the sequences
  auto Y = [&](int s) { return ys[static_cast<std::size_t>(s - 1)]; };
  auto bx = [&](int level) { return ctx.b[static_cast<std::size_t>(level)].x; };

  // r is the first corner whose level already lies weakly left of X_r; it
  // exists because Y_c - 1 <= l - 1 and b^{l-1}.x <= k - 1 = X_c.
  int r = 1;
  while (bx(Y(r) - 1) > X(r)) ++r;
  const int j = Y(r) - 1;
  const int xb = bx(j);

  // Left of b^j: right-up corners at (X_s, Y_s) for s < r, entering b^j horizontally.
  std::vector<Step> steps;
  append(steps, Step::Up, Y(1) - 1);
  int x = -1;
  int y = Y(1);
  for (int s = 1; s < r; ++s) {
    append(steps, Step::Right, X(s) - x);
    append(steps, Step::Up, Y(s + 1) - Y(s));
    x = X(s);
    y = Y(s + 1);
  }
  append(steps, Step::Right, xb - x);
  x = xb;
  // Right of b^j: climb to (xb, Y_{r+1} - 1), then up-right corners at
  // (X_{s-1} + 1, Y_{s+1} - 1) for s = r + 1 .. c.
  append(steps, Step::Up, Y(r + 1) - 1 - y);
  y = Y(r + 1) - 1;
  for (int s = r + 1; s <= c; ++s) {
    append(steps, Step::Right, X(s - 1) + 1 - x);
    append(steps, Step::Up, Y(s + 1) - 1 - y);
    x = X(s - 1) + 1;
    y = Y(s + 1) - 1;
  }
  append(steps, Step::Right, k - x);
  append(steps, Step::Up, l - y);

  Lpbp out = phi(LatticePath(kReflectedOrigin, std::move(steps)), a, column, j, t);
  if (upright_corners(out.path) != c) {
    throw std::logic_error("corner encoding produced " + std::to_string(upright_corners(out.path)) +
                           " up-right corners instead of " + std::to_string(c));
  }
  return out;
}

std::vector<std::size_t> positive_shifts(const std::vector<int>& u) {
  if (u.empty()) throw DomainError("positive_shifts needs a nonempty sequence");
  if (std::any_of(u.begin(), u.end(), [](int v) { return v > 1; })) {
    throw DomainError("positive_shifts needs every entry <= 1");
  }
  const long total = std::accumulate(u.begin(), u.end(), 0L);
  if (total < 1) throw DomainError("positive_shifts needs a positive sum, got " + std::to_string(total));

  std::vector<std::size_t> out;
  const std::size_t len = u.size();
  for (std::size_t r = 0; r < len; ++r) {
    long partial = 0;
    bool positive = true;
    for (std::size_t i = 0; i < len && positive; ++i) {
      partial += u[(r + i) % len];
      positive = partial >= 1;
    }
    if (positive) out.push_back(r);
  }
  if (static_cast<long>(out.size()) != total) {
    throw std::logic_error("cycle lemma violated: " + std::to_string(out.size()) + " positive shifts for sum " +
                           std::to_string(total));
  }
  return out;
}

std::vector<std::string> factor_word(const Composition& a, const std::string& word) {
  std::vector<std::string> blocks;
  blocks.reserve(static_cast<std::size_t>(a.parts_count()));
  std::size_t pos = 0;
  for (int part : a.parts()) {
    std::string block;
    for (int rights = 0; rights < part;) {
      if (pos == word.size()) throw DomainError("word '" + word + "' has too few R's for " + a.to_string());
      const char ch = word[pos++];
      if (ch != 'R' && ch != 'U') throw DomainError("words use only 'R' and 'U'");
      block.push_back(ch);
      rights += (ch == 'R');
    }
    blocks.push_back(std::move(block));
  }
  if (pos != word.size()) {
    throw DomainError("word '" + word + "' has letters after its last block for " + a.to_string());
  }
  return blocks;
}

std::vector<int> cycle_vector(const std::vector<std::string>& blocks) {
  std::vector<int> u;
  u.reserve(2 * blocks.size());
  for (const auto& b : blocks) {
    u.push_back(1);
    u.push_back(-static_cast<int>(std::count(b.begin(), b.end(), 'U')));
  }
  return u;
}

namespace {

std::vector<int> good_block_starts(const std::vector<int>& u) {
  std::vector<int> starts;
  for (std::size_t r : positive_shifts(u)) {
    if (r % 2 != 0) throw std::logic_error("a positive shift of u started at a -u_i entry");
    starts.push_back(static_cast<int>(r / 2));
  }
  return starts;
}

}  // namespace

OmegaTrace omega_trace(const Composition& a, const std::string& word, int k) {
  const int n = a.total();
  const int m = a.parts_count();
  const auto rights = static_cast<int>(std::count(word.begin(), word.end(), 'R'));
  const auto ups = static_cast<int>(std::count(word.begin(), word.end(), 'U'));
  if (rights + ups != static_cast<int>(word.size())) throw DomainError("words use only 'R' and 'U'");
  if (rights != n) throw DomainError("word must contain exactly n = " + std::to_string(n) + " R's");
  if (ups >= m) throw DomainError("word must contain fewer than m = " + std::to_string(m) + " U's");
  if (word.empty() || word.back() != 'R') throw DomainError("word must end with R");
  if (k < 1 || k > m - ups) {
    throw DomainError("rank k = " + std::to_string(k) + " outside [1, " + std::to_string(m - ups) + "]");
  }

  auto blocks = factor_word(a, word);
  auto u = cycle_vector(blocks);
  auto starts = good_block_starts(u);
  const int j = starts[static_cast<std::size_t>(k - 1)];

  std::string rotated;
  for (int d = 0; d < m; ++d) rotated += blocks[static_cast<std::size_t>((j + d) % m)];
  Lpbp pair(LatticePath::from_word(rotated), a, positive_mod(-j, m));
  if (!pair.is_good()) throw std::logic_error("omega produced a bad pair");
  return OmegaTrace{std::move(blocks), std::move(u), std::move(starts), j, std::move(pair)};
}

Lpbp omega(const Composition& a, const std::string& word, int k) { return omega_trace(a, word, k).result; }

OmegaPreimage omega_inverse(const Lpbp& pair) {
  const Composition& a = pair.composition;
  const int m = a.parts_count();
  const Point end = pair.path.terminus();
  if (pair.path.origin() != Point{0, 0}) throw DomainError("omega_inverse expects a path from the origin");
  if (end.x != a.total()) throw DomainError("path must end on the right edge x = n");
  if (end.y >= m) throw DomainError("path must end below height m");
  if (pair.path.empty() || pair.path.steps().back() != Step::Right) {
    throw DomainError("path must end with a right step");
  }
  if (!pair.is_good()) throw DomainError("omega_inverse expects a good pair");

  const int j = positive_mod(-pair.shift_index, m);
  const auto rotated = factor_word(pair.boundary(), pair.path.word());
  std::vector<std::string> blocks(static_cast<std::size_t>(m));
  for (int d = 0; d < m; ++d) blocks[static_cast<std::size_t>((j + d) % m)] = rotated[static_cast<std::size_t>(d)];

  const auto starts = good_block_starts(cycle_vector(blocks));
  const auto it = std::find(starts.begin(), starts.end(), j);
  if (it == starts.end()) throw std::logic_error("start block is not a positive shift of u");
  return {std::accumulate(blocks.begin(), blocks.end(), std::string{}), static_cast<int>(it - starts.begin()) + 1};
}

}  // namespace lpbp
