#pragma once

// Closed-form counts for paths under cyclically shifted boundaries. Every
// evaluator checks the hypothesis under which its formula holds and throws
// DomainError outside it; every division is exact or throws std::logic_error.

#include <optional>

#include "lpbp/bigint.hpp"
#include "lpbp/composition.hpp"
#include "lpbp/lattice.hpp"
#include "lpbp/oracle.hpp"

namespace lpbp {

/// (k+1, l) lies weakly right of every shifted boundary, with t in the grid.
bool lpbp_hypothesis_holds(const Composition& a, Point t);

/// The weaker check against the unshifted boundary only. It is not
/// sufficient for lpbp_counts_formula: a = (0,2), t = (0,1) passes it while
/// the bad-pair count is 1, not n*C(1,0) = 2.
bool lpbp_hypothesis_holds_unshifted(const Composition& a, Point t);

/// t itself is dominated by every shifted boundary, with t in the grid.
bool corner_hypothesis_holds(const Composition& a, Point t);

/// all = m C(k+l, l), bad = n C(k+l, l-1), good = (m(k+1) - nl)/(k+1) C(k+l, l).
CountReport lpbp_counts_formula(const Composition& a, Point t);

/// C(n+m, m-1): the number of (path, shift) pairs ending at (n, m) that are good.
BigCount total_over_shifts_formula(int n, int m);

/// Paths (0,0) -> (k,l) with x >= slope*y throughout: (k - slope*l + 1)/(k+1) C(k+l, l).
BigCount ballot_formula(int slope, int k, int l);

/// Paths under the constant composition (a)^m: C((a+1)m+1, m) / ((a+1)m+1).
BigCount generalized_catalan(int a, int m);

/// Good pairs ending at t with exactly c up-right corners.
BigCount upright_corners_formula(const Composition& a, Point t, int c);

/// Good pairs ending at t with exactly c right-up corners (leading up step
/// counted as a corner).
BigCount rightup_corners_formula(const Composition& a, Point t, int c);

/// C(n, c-1) C(m, c): good pairs ending at (n, m) with c right-up, equivalently
/// c-1 up-right, corners.
BigCount corners_at_full_terminus(int n, int m, int c);

/// m C(n+l, l) - n C(n+l, l-1): good pairs ending at (n, l). Cross-checked
/// internally against good_at_right_edge_sum.
BigCount good_at_right_edge(const Composition& a, int l);

/// sum_{i=0}^{l} (m - i) C(n+i-1, i).
BigCount good_at_right_edge_sum(int n, int m, int l);

/// C(n+l-1, l)(m - l): good pairs ending at (n, l) whose last step is R.
BigCount gstar_count(int n, int m, int l);

/// Two-periodic boundaries (a, b, a, b, ...) with 0 <= a < b.
struct PeriodicSpec {
  int a = 0;
  int b = 1;
  int n = 0;

  PeriodicSpec(int a_, int b_, int n_);

  int c() const { return a + b; }
  /// p_n = (cn + b - a - 1, 2n)
  Point p() const { return {c() * n + b - a - 1, 2 * n}; }
  /// q_n = (cn + b - 1, 2n + 1)
  Point q() const { return {c() * n + b - 1, 2 * n + 1}; }
  /// (a, b)^{n+1}, whose dominated paths are those under the (a, b) boundary.
  Composition lower() const;
  /// (b, a)^{n+1}
  Composition upper() const;
};

struct PeriodicMN {
  BigCount m;  ///< (b-a)/(cn+b) C((c+2)n+b, 2n+1); always an integer
  Rational n;  ///< (b-a)/(cn+b-a) C((c+2)n+b-a-1, 2n); a half-integer when the sum of counts is odd
};

PeriodicMN periodic_MN(const PeriodicSpec& spec);

struct PeriodicCounts {
  BigCount q_ab;  ///< paths to q_n under (a, b)
  BigCount q_ba;  ///< paths to q_n under (b, a); always zero
  BigCount p_ab;  ///< paths to p_n under (a, b)
  BigCount p_ba;  ///< paths to p_n under (b, a)
};

PeriodicCounts periodic_counts(const PeriodicSpec& spec);

/// Paths (0,0) -> (cn, 2n) dominated by the alternating ((c+1)/2, (c-1)/2)
/// boundary, i.e. staying weakly right of the line 2x = cy. Requires c odd.
BigCount half_slope_formula(int c, int n);

struct CatalanStaircaseCounts {
  BigCount to_odd;                     ///< 2 C_{2n+1}: paths to (2n+1, 2n+1) under U(RRUU)^n R
  BigCount to_even;                    ///< 2^{2n+1} C_n - C_{2n+1}: paths to (2n, 2n) or (2n, 2n±1)
  std::optional<BigCount> under_uurr;  ///< same value, paths to (2n-1, 2n) under (UURR)^n; n >= 1 only
};

CatalanStaircaseCounts catalan_staircase_counts(int n);

/// sum_{i<n} C_{2i+1} C_{2n-2i-1} == C_{2n+1} - 4^n C_n, evaluated exactly.
bool convolution_identity_check(int n);

/// C((s+t)n - 2, tn - 1)/n: paths to (sn-1, tn-1) under U^{t-1}(R^s U^t)^{n-1} R^{s-1}.
BigCount staircase_theorem_formula(int s, int t, int n);

/// k C_{nk-1}.
BigCount k_catalan_formula(int n, int k);

/// C((s+t)n, tn - 1)/n: paths (0,0) -> (sn+1, tn) strictly below the
/// staircase (R^s U^t)^n raised to start at (0, t).
BigCount staircase_avoidance_count(int s, int t, int n);

/// t C(sn, c-1) C(tn, c-1) - s C(sn-1, c-2) C(tn+1, c): the same paths
/// refined by up-right corners, where a leading right step counts as a corner.
BigCount staircase_avoidance_corners(int s, int t, int n, int c);

}  // namespace lpbp
