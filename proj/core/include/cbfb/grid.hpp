#pragma once

#include <cstddef>
#include <vector>

#include "cbfb/model.hpp"

namespace cbfb {

enum class SpacingKind {
  Uniform,
  GeometricRight,  // cells shrink geometrically toward x = K/gamma
};

/// Space/time mesh over (0, K/gamma) x (0, T). Nodes are strictly
/// increasing with x.front()==0, x.back()==K/gamma, t.front()==0,
/// t.back()==T. Time spacing is always uniform.
struct Grid {
  std::vector<double> x;
  std::vector<double> t;
  SpacingKind spacing = SpacingKind::Uniform;

  std::size_t nx() const { return x.size(); }
  std::size_t nt() const { return t.size(); }
  double x_max() const { return x.back(); }
  double horizon() const { return t.back(); }
  double dt() const { return t[1] - t[0]; }

  /// Largest spatial cell (the coarse end for refined grids).
  double dx_max() const;
  /// Smallest spatial cell.
  double dx_min() const;
};

constexpr std::size_t kMinGridNodes = 16;

/// Builds a grid with nx spatial and nt temporal nodes (both >= 16).
/// GeometricRight clusters nodes near x = K/gamma with the cell ratio chosen
/// so the finest cell is 1/8 of the coarsest.
Grid build_grid(const ModelParams& params, std::size_t nx, std::size_t nt,
                SpacingKind spacing = SpacingKind::Uniform);

}  // namespace cbfb
