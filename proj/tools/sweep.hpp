#pragma once

// Oracle-versus-formula sweeps over every weak composition up to a size
// bound. Work is split across threads by composition; results are gathered
// by index so output never depends on scheduling.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpbp/oracle.hpp"

namespace lpbp::cli {

struct SweepOptions {
  int max_n = 5;
  int max_m = 3;
  unsigned threads = 1;
  std::optional<std::size_t> sample;  ///< check a random subset of this many compositions
  unsigned seed = 0;
  std::size_t cap = kDefaultEnumerationCap;
};

/// The compositions a sweep visits, in canonical order (m, then n, then
/// lexicographic), after optional seeded sampling.
std::vector<Composition> sweep_compositions(const SweepOptions& opt);

struct SweepRow {
  Composition composition;
  Point terminus;
  CountReport oracle;
  bool applicable = false;  ///< the closed form's hypothesis holds here
  bool match = true;        ///< formula equals oracle (vacuous when not applicable)
};

std::vector<SweepRow> sweep_counts(const SweepOptions& opt);

struct VerifyReport {
  std::map<std::string, long> checks;  ///< identity name -> number of instances checked
  std::vector<std::string> failures;   ///< sorted
  std::size_t compositions = 0;
};

VerifyReport verify_identities(const SweepOptions& opt);

}  // namespace lpbp::cli
