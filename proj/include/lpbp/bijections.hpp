#pragma once

// Constructive bijections behind the bad-pair count:
//
//  * the reflection map psi (and its inverse phi) between bad pairs whose
//    first bad step lands in B_i and paths from (-1, 1) to the terminus;
//  * the corner-data encoding of bad pairs with a given number of up-right
//    corners;
//  * the cycle-lemma map omega between words with a final R and good pairs
//    ending on the right edge.

#include <cstddef>
#include <string>
#include <vector>

#include "lpbp/composition.hpp"
#include "lpbp/lattice.hpp"
#include "lpbp/oracle.hpp"

namespace lpbp {

/// The point set B_i for column i of a, relabelled by height.
///
/// p_i = (i, y_i) is the lowest point of column i strictly left of the
/// boundary; b[j] = point_shift(a, p_i, s_i + j) sits at height j + 1, and
/// b[0].x <= b[1].x <= ... <= b[m-1].x.
struct BadStepContext {
  int column = 0;  ///< i
  Point base;      ///< p_i
  int offset = 0;  ///< s_i = m + 1 - y_i
  std::vector<Point> b;
  Point b_minus1;  ///< anchor at height 0; x may be negative
};

/// Throws DomainError unless n >= 1 and 0 <= column < n.
BadStepContext bad_step_context(const Composition& a, int column);

/// b^{l-1}.x <= t.x; vacuously true for t.y == 0. Throws DomainError for t.y
/// outside [0, m].
bool is_complete(const BadStepContext& ctx, Point t);
/// b^{l-1}.x < t.x; vacuously true for t.y == 0.
bool is_strongly_complete(const BadStepContext& ctx, Point t);

/// Where a bad pair's first bad step lands, in bucket coordinates: the
/// landing point equals b_i^j of bucket i = `column`, with j = `level`.
struct BadStepLocation {
  std::size_t step_index = 0;
  Point landing;
  int column = 0;
  int level = 0;
};

/// Throws DomainError for a good pair. Throws std::logic_error if the
/// landing point is not the image of a unique p_i (never expected).
BadStepLocation locate_bad_step(const Lpbp& pair);

struct PsiTrace {
  BadStepLocation location;
  LatticePath before;     ///< P_1, origin (0, 0)
  LatticePath after;      ///< P_2, starts at b_i^j
  LatticePath reflected;  ///< P_1 rotated and moved to start at (-1, 1)
  LatticePath result;     ///< the image path, (-1, 1) -> t
};

/// The reflection map on a bad pair ending at t. Throws DomainError for a
/// good pair or when the path does not end at t.
PsiTrace psi_trace(const Lpbp& pair, Point t);
LatticePath psi(const Lpbp& pair, Point t);

/// Inverse of psi for bucket `column` and level j. Throws DomainError when
/// `path` does not run (-1, 1) -> t or does not meet b_i^j before any of
/// b_i^0, ..., b_i^{j-1}.
Lpbp phi(const LatticePath& path, const Composition& a, int column, int j, Point t);

/// Encodes a bad pair with c >= 1 up-right corners from sequences
///   0 <= X_1 < ... < X_c = k - 1,   1 <= Y_1 < ... < Y_{c+1} <= l + 1.
/// Requires B_column to be strongly complete with respect to t.
Lpbp corner_data_to_bad_lpbp(const Composition& a, int column, Point t,
                             const std::vector<int>& xs, const std::vector<int>& ys);

/// Rotation offsets r (0 <= r < size) for which u_r, u_{r+1}, ... (indices
/// mod size) has every prefix sum >= 1. Requires every entry <= 1 and a
/// positive total; the result has exactly `total` entries.
std::vector<std::size_t> positive_shifts(const std::vector<int>& u);

/// Greedy block factorisation w = w_0 ... w_{m-1}: w_i is empty when
/// a_i = 0, otherwise it ends at its a_i-th R. Throws DomainError when the
/// word does not factor (wrong number of R's or letters after the last block).
std::vector<std::string> factor_word(const Composition& a, const std::string& word);

/// u = (1, -u_0, 1, -u_1, ..., 1, -u_{m-1}), u_i the number of U's in block i.
std::vector<int> cycle_vector(const std::vector<std::string>& blocks);

struct OmegaTrace {
  std::vector<std::string> blocks;
  std::vector<int> u;
  std::vector<int> good_starts;  ///< s_1 < ... < s_{m-l}
  int start = 0;                 ///< j = s_k
  Lpbp result;
};

/// The cycle-lemma map. `word` has n R's, l < m U's and ends with R;
/// 1 <= k <= m - l. The result is a good pair ending at (n, l) with a right step.
OmegaTrace omega_trace(const Composition& a, const std::string& word, int k);
Lpbp omega(const Composition& a, const std::string& word, int k);

struct OmegaPreimage {
  std::string word;
  int rank = 0;

  friend bool operator==(const OmegaPreimage&, const OmegaPreimage&) = default;
};

/// Inverse of omega. Throws DomainError for bad pairs, termini off the right
/// edge, l >= m, or paths whose last step is not a right step.
OmegaPreimage omega_inverse(const Lpbp& pair);

}  // namespace lpbp
