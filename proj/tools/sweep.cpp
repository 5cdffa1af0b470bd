#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "lpbp/bijections.hpp"
#include "lpbp/closed_forms.hpp"
#include "lpbp/combinatorics.hpp"
#include "lpbp/errors.hpp"

namespace lpbp::cli {

namespace {

template <class Result, class Work>
std::vector<Result> run_parallel(const std::vector<Composition>& items, unsigned threads, Work work) {
  std::vector<Result> results(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) results[i] = work(items[i]);
  };
  const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(items.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

std::string tag(const Composition& a, Point t) { return "a=(" + a.to_string() + ") t=" + t.to_string(); }

BigCount entry(const std::vector<BigCount>& h, int c) {
  return static_cast<std::size_t>(c) < h.size() ? h[static_cast<std::size_t>(c)] : BigCount(0);
}

struct PartialReport {
  std::map<std::string, long> checks;
  std::vector<std::string> failures;

  void expect(const char* identity, bool ok, const std::string& where) {
    ++checks[identity];
    if (!ok) failures.push_back(std::string(identity) + ": " + where);
  }
};

PartialReport verify_one(const Composition& a, std::size_t cap) {
  PartialReport r;
  const int n = a.total();
  const int m = a.parts_count();
  BigCount shift_total(0);
  for (int j = 0; j < m; ++j) shift_total += count_dominated(shift_composition(a, j), {n, m});
  r.expect("total-over-shifts", shift_total == total_over_shifts_formula(n, m), tag(a, {n, m}));

  for (int l = 0; l <= m; ++l) {
    r.expect("right-edge", good_at_right_edge(a, l) == count_lpbp(a, {n, l}).good, tag(a, {n, l}));
  }

  for (int k = 0; k <= n; ++k) {
    for (int l = 0; l <= m; ++l) {
      const Point t{k, l};
      const CountReport oracle = count_lpbp(a, t);
      if (lpbp_hypothesis_holds(a, t)) {
        const CountReport f = lpbp_counts_formula(a, t);
        r.expect("theorem1", f.all == oracle.all && f.bad == oracle.bad && f.good == oracle.good, tag(a, t));
        if (k + 1 <= n && lpbp_hypothesis_holds(a, {k + 1, l}) && l >= 1) {
          r.expect("recursion",
                   count_lpbp(a, {k + 1, l}).good == oracle.good + count_lpbp(a, {k + 1, l - 1}).good, tag(a, {k + 1, l}));
        }
      }
      if (corner_hypothesis_holds(a, t)) {
        const auto up = good_upright_corner_histogram(a, t, cap);
        const auto ru = good_rightup_corner_histogram(a, t, cap);
        for (int c = 0; c <= std::min(k, l) + 1; ++c) {
          r.expect("corners", upright_corners_formula(a, t, c) == entry(up, c) && rightup_corners_formula(a, t, c) == entry(ru, c),
                   tag(a, t) + " c=" + std::to_string(c));
        }
      }
      if (n >= 1) {
        const auto buckets = bad_bucket_histogram(a, t, cap);
        BigCount sum(0);
        for (int i = 0; i < n; ++i) {
          sum += buckets[static_cast<std::size_t>(i)];
          if (is_complete(bad_step_context(a, i), t)) {
            r.expect("bucket-size", buckets[static_cast<std::size_t>(i)] == binomial(k + l, l - 1),
                     tag(a, t) + " i=" + std::to_string(i));
          }
        }
        r.expect("bucket-partition", sum == oracle.bad, tag(a, t));
      }
    }
  }
  return r;
}

}  // namespace

std::vector<Composition> sweep_compositions(const SweepOptions& opt) {
  if (opt.max_n < 0 || opt.max_m < 1) throw DomainError("sweep needs --max-n >= 0 and --max-m >= 1");
  std::vector<Composition> all;
  for (int m = 1; m <= opt.max_m; ++m) {
    for (int n = 0; n <= opt.max_n; ++n) {
      for (auto& a : weak_compositions(n, m)) all.push_back(std::move(a));
    }
  }
  if (opt.sample && *opt.sample < all.size()) {
    std::mt19937 rng(opt.seed);
    std::vector<std::size_t> idx(all.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(*opt.sample);
    std::sort(idx.begin(), idx.end());
    std::vector<Composition> picked;
    for (auto i : idx) picked.push_back(all[i]);
    all = std::move(picked);
  }
  return all;
}

std::vector<SweepRow> sweep_counts(const SweepOptions& opt) {
  const auto comps = sweep_compositions(opt);
  const auto parts = run_parallel<std::vector<SweepRow>>(comps, opt.threads, [](const Composition& a) {
    std::vector<SweepRow> rows;
    for (int k = 0; k <= a.total(); ++k) {
      for (int l = 0; l <= a.parts_count(); ++l) {
        SweepRow row{a, {k, l}, count_lpbp(a, {k, l}), lpbp_hypothesis_holds(a, {k, l}), true};
        if (row.applicable) {
          const auto f = lpbp_counts_formula(a, {k, l});
          row.match = f.all == row.oracle.all && f.bad == row.oracle.bad && f.good == row.oracle.good;
        }
        rows.push_back(std::move(row));
      }
    }
    return rows;
  });
  std::vector<SweepRow> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

VerifyReport verify_identities(const SweepOptions& opt) {
  const auto comps = sweep_compositions(opt);
  const auto parts =
      run_parallel<PartialReport>(comps, opt.threads, [&](const Composition& a) { return verify_one(a, opt.cap); });
  VerifyReport out;
  out.compositions = comps.size();
  for (const auto& p : parts) {
    for (const auto& [name, count] : p.checks) out.checks[name] += count;
    out.failures.insert(out.failures.end(), p.failures.begin(), p.failures.end());
  }
  std::sort(out.failures.begin(), out.failures.end());
  return out;
}

}  // namespace lpbp::cli
