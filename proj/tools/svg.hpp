#pragma once

#include <string>
#include <vector>

#include "lpbp/composition.hpp"
#include "lpbp/lattice.hpp"

namespace lpbp::cli {

inline constexpr int kUnitPx = 40;
inline constexpr int kMarginPx = 20;

/// Standalone SVG of the grid [0,n]x[0,m], the boundary of `a` (all distinct
/// cyclic shifts when `all_shifts`), and `paths` on top. y points up.
/// Throws DomainError when a path leaves the grid.
std::string render_svg(const Composition& a, bool all_shifts, const std::vector<LatticePath>& paths);

}  // namespace lpbp::cli
