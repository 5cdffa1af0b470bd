#include "lpbp/closed_forms.hpp"

#include <stdexcept>

#include "lpbp/combinatorics.hpp"
#include "lpbp/dominance.hpp"
#include "lpbp/errors.hpp"

namespace lpbp {

namespace {

bool in_grid(const Composition& a, Point t) {
  return t.x >= 0 && t.x <= a.total() && t.y >= 0 && t.y <= a.parts_count();
}

BigInt big(long v) { return BigInt(static_cast<std::int64_t>(v)); }

BigCount nonnegative(BigInt v, const char* what) {
  if (v.is_negative()) throw std::logic_error(std::string(what) + " evaluated to a negative count");
  return v;
}

void require_positive(long v, const char* name) {
  if (v < 1) throw DomainError(std::string(name) + " must be >= 1");
}

BigInt power_of_two(long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return BigInt(std::move(r));
}

// sum_{i=0}^{n-1} M_i M_{n-1-i}
BigInt self_convolution(const std::vector<BigInt>& seq, int n) {
  BigInt sum(0);
  for (int i = 0; i < n; ++i) sum += seq[static_cast<std::size_t>(i)] * seq[static_cast<std::size_t>(n - 1 - i)];
  return sum;
}

}  // namespace

bool lpbp_hypothesis_holds(const Composition& a, Point t) {
  return in_grid(a, t) && point_dominated_by_all_shifts(a, {t.x + 1, t.y});
}

bool lpbp_hypothesis_holds_unshifted(const Composition& a, Point t) {
  return in_grid(a, t) && point_dominated(a, {t.x + 1, t.y});
}

bool corner_hypothesis_holds(const Composition& a, Point t) {
  return in_grid(a, t) && point_dominated_by_all_shifts(a, t);
}

CountReport lpbp_counts_formula(const Composition& a, Point t) {
  if (!lpbp_hypothesis_holds(a, t)) {
    throw DomainError("(k+1, l) = " + Point{t.x + 1, t.y}.to_string() +
                      " is not weakly right of every shift of " + a.to_string());
  }
  const long m = a.parts_count();
  const long n = a.total();
  const long k = t.x;
  const long l = t.y;
  CountReport r{t, big(m) * binomial(k + l, l), big(n) * binomial(k + l, l - 1), BigCount(0)};
  r.good = nonnegative((big(m * (k + 1) - n * l) * binomial(k + l, l)).exact_div(big(k + 1)), "good-pair formula");
  if (r.good != r.all - r.bad) throw std::logic_error("good-pair closed form disagrees with all - bad");
  return r;
}

BigCount total_over_shifts_formula(int n, int m) {
  if (n < 0) throw DomainError("n must be >= 0");
  require_positive(m, "m");
  return binomial(n + m, m - 1);
}

BigCount ballot_formula(int slope, int k, int l) {
  if (slope < 0 || l < 0) throw DomainError("ballot formula needs slope >= 0 and l >= 0");
  if (static_cast<long>(k) < static_cast<long>(slope) * l) {
    throw DomainError("ballot formula needs k >= slope * l");
  }
  return (big(k - static_cast<long>(slope) * l + 1) * binomial(k + l, l)).exact_div(big(k + 1));
}

BigCount generalized_catalan(int a, int m) {
  if (a < 0) throw DomainError("a must be >= 0");
  require_positive(m, "m");
  const long top = static_cast<long>(a + 1) * m + 1;
  return binomial(top, m).exact_div(big(top));
}

BigCount upright_corners_formula(const Composition& a, Point t, int c) {
  if (!corner_hypothesis_holds(a, t)) {
    throw DomainError(t.to_string() + " is not dominated by every shift of " + a.to_string());
  }
  if (c < 0) throw DomainError("corner count must be >= 0");
  const long m = a.parts_count();
  const long n = a.total();
  const long k = t.x;
  const long l = t.y;
  return nonnegative(big(m) * binomial(k, c) * binomial(l, c) - big(n) * binomial(k - 1, c - 1) * binomial(l + 1, c + 1),
                     "up-right corner formula");
}

BigCount rightup_corners_formula(const Composition& a, Point t, int c) {
  if (!corner_hypothesis_holds(a, t)) {
    throw DomainError(t.to_string() + " is not dominated by every shift of " + a.to_string());
  }
  if (c < 0) throw DomainError("corner count must be >= 0");
  const long m = a.parts_count();
  const long n = a.total();
  const long k = t.x;
  const long l = t.y;
  // On the bottom row the only path is R^k, with no right-up corner; the
  // general expression would need C(-1, -1) = 1 there.
  if (l == 0) return c == 0 ? big(m) : BigCount(0);
  return nonnegative(big(m) * binomial(k + 1, c) * binomial(l - 1, c - 1) - big(n) * binomial(k, c - 1) * binomial(l, c),
                     "right-up corner formula");
}

BigCount corners_at_full_terminus(int n, int m, int c) {
  require_positive(n, "n");
  require_positive(m, "m");
  require_positive(c, "c");
  return binomial(n, c - 1) * binomial(m, c);
}

BigCount good_at_right_edge_sum(int n, int m, int l) {
  if (n < 0 || m < 1 || l < 0 || l > m) throw DomainError("need n >= 0, m >= 1 and 0 <= l <= m");
  // C(n-1, 0) is the empty product even when n = 0.
  BigInt sum = big(m);
  for (long i = 1; i <= l; ++i) sum += big(m - i) * binomial(n + i - 1, i);
  return sum;
}

BigCount good_at_right_edge(const Composition& a, int l) {
  const long m = a.parts_count();
  const long n = a.total();
  if (l < 0 || l > m) throw DomainError("need 0 <= l <= m");
  BigCount diff = big(m) * binomial(n + l, l) - big(n) * binomial(n + l, l - 1);
  if (diff != good_at_right_edge_sum(static_cast<int>(n), static_cast<int>(m), l)) {
    throw std::logic_error("right-edge difference and summation forms disagree");
  }
  return nonnegative(diff, "right-edge formula");
}

BigCount gstar_count(int n, int m, int l) {
  require_positive(n, "n");
  if (l < 0 || l >= m) throw DomainError("need 0 <= l < m");
  return binomial(n + l - 1, l) * big(m - l);
}

PeriodicSpec::PeriodicSpec(int a_, int b_, int n_) : a(a_), b(b_), n(n_) {
  if (a < 0 || b <= a) throw DomainError("periodic boundary needs 0 <= a < b");
  if (n < 0) throw DomainError("periodic index n must be >= 0");
}

Composition PeriodicSpec::lower() const {
  std::vector<int> parts;
  for (int i = 0; i <= n; ++i) parts.insert(parts.end(), {a, b});
  return Composition(std::move(parts));
}

Composition PeriodicSpec::upper() const {
  std::vector<int> parts;
  for (int i = 0; i <= n; ++i) parts.insert(parts.end(), {b, a});
  return Composition(std::move(parts));
}

namespace {

BigInt periodic_M(long a, long b, long n) {
  const long c = a + b;
  return (big(b - a) * binomial((c + 2) * n + b, 2 * n + 1)).exact_div(big(c * n + b));
}

// 2 N_n; always an integer since it counts paths to p_n under both boundaries.
BigInt periodic_twice_N(long a, long b, long n) {
  const long c = a + b;
  return (big(2 * (b - a)) * binomial((c + 2) * n + b - a - 1, 2 * n)).exact_div(big(c * n + b - a));
}

}  // namespace

PeriodicMN periodic_MN(const PeriodicSpec& spec) {
  return {periodic_M(spec.a, spec.b, spec.n), Rational(periodic_twice_N(spec.a, spec.b, spec.n), BigInt(2))};
}

PeriodicCounts periodic_counts(const PeriodicSpec& spec) {
  std::vector<BigInt> ms;
  for (int i = 0; i < spec.n; ++i) ms.push_back(periodic_M(spec.a, spec.b, i));
  const BigInt conv = self_convolution(ms, spec.n);
  const BigInt twice_n = periodic_twice_N(spec.a, spec.b, spec.n);
  return {periodic_M(spec.a, spec.b, spec.n), BigCount(0),
          nonnegative((twice_n + conv).exact_div(BigInt(2)), "P^{a,b}"),
          nonnegative((twice_n - conv).exact_div(BigInt(2)), "P^{b,a}")};
}

BigCount half_slope_formula(int c, int n) {
  if (c < 1 || c % 2 == 0) throw DomainError("half-slope formula needs an odd c >= 1");
  if (n < 0) throw DomainError("n must be >= 0");
  std::vector<BigInt> ms;
  for (long i = 0; i < n; ++i) ms.push_back(binomial((c + 2) * i + (c + 1) / 2, 2 * i).exact_div(big(2 * i + 1)));
  const BigInt conv = self_convolution(ms, n);
  const long denom = static_cast<long>(c) * n + 1;
  // (C/denom - conv/2) over the common denominator 2*denom
  const BigInt numer = big(2) * binomial(static_cast<long>(c + 2) * n, 2L * n) - big(denom) * conv;
  return nonnegative(numer.exact_div(big(2 * denom)), "half-slope formula");
}

CatalanStaircaseCounts catalan_staircase_counts(int n) {
  if (n < 0) throw DomainError("n must be >= 0");
  const BigInt odd = catalan(2L * n + 1);
  const BigInt even = power_of_two(2L * n + 1) * catalan(n) - odd;
  CatalanStaircaseCounts out{big(2) * odd, even, std::nullopt};
  if (n >= 1) out.under_uurr = even;
  return out;
}

bool convolution_identity_check(int n) {
  require_positive(n, "n");
  BigInt lhs(0);
  for (long i = 0; i < n; ++i) lhs += catalan(2 * i + 1) * catalan(2L * n - (2 * i + 1));
  return lhs == catalan(2L * n + 1) - power_of_two(2L * n) * catalan(n);
}

BigCount staircase_theorem_formula(int s, int t, int n) {
  require_positive(s, "s");
  require_positive(t, "t");
  require_positive(n, "n");
  return binomial(static_cast<long>(s + t) * n - 2, static_cast<long>(t) * n - 1).exact_div(big(n));
}

BigCount k_catalan_formula(int n, int k) {
  require_positive(n, "n");
  require_positive(k, "k");
  return big(k) * catalan(static_cast<long>(n) * k - 1);
}

BigCount staircase_avoidance_count(int s, int t, int n) {
  require_positive(s, "s");
  require_positive(t, "t");
  require_positive(n, "n");
  return binomial(static_cast<long>(s + t) * n, static_cast<long>(t) * n - 1).exact_div(big(n));
}

BigCount staircase_avoidance_corners(int s, int t, int n, int c) {
  require_positive(s, "s");
  require_positive(t, "t");
  require_positive(n, "n");
  require_positive(c, "c");
  const long sn = static_cast<long>(s) * n;
  const long tn = static_cast<long>(t) * n;
  return nonnegative(big(t) * binomial(sn, c - 1) * binomial(tn, c - 1) - big(s) * binomial(sn - 1, c - 2) * binomial(tn + 1, c),
                     "staircase corner formula");
}

}  // namespace lpbp
