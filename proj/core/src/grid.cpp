#include "cbfb/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cbfb {

double Grid::dx_max() const {
  double h = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) h = std::max(h, x[i + 1] - x[i]);
  return h;
}

double Grid::dx_min() const {
  double h = x[1] - x[0];
  for (std::size_t i = 1; i + 1 < x.size(); ++i) h = std::min(h, x[i + 1] - x[i]);
  return h;
}

Grid build_grid(const ModelParams& params, std::size_t nx, std::size_t nt,
                SpacingKind spacing) {
  if (nx < kMinGridNodes || nt < kMinGridNodes) {
    std::ostringstream msg;
    msg << "grid needs at least " << kMinGridNodes << " nodes per axis, got nx="
        << nx << " nt=" << nt;
    throw Error(ErrorCode::InvalidGrid, msg.str());
  }

  Grid g;
  g.spacing = spacing;
  g.x.resize(nx);
  g.t.resize(nt);

  const double x_max = params.x_max();
  const double T = params.maturity;

  if (spacing == SpacingKind::Uniform) {
    for (std::size_t i = 0; i < nx; ++i)
      g.x[i] = x_max * static_cast<double>(i) / static_cast<double>(nx - 1);
  } else {
    // Geometric cells h_k = h0 * rho^k with rho^(ncells-1) = 1/8, so the
    // finest cell (at the right edge) is 1/8 of the coarsest (at x=0).
    const std::size_t ncells = nx - 1;
    const double rho = std::pow(0.125, 1.0 / static_cast<double>(ncells - 1));
    const double h0 = x_max * (1.0 - rho) / (1.0 - std::pow(rho, ncells));
    g.x[0] = 0.0;
    double h = h0;
    for (std::size_t i = 1; i < nx; ++i) {
      g.x[i] = g.x[i - 1] + h;
      h *= rho;
    }
  }
  g.x[0] = 0.0;
  g.x[nx - 1] = x_max;

  for (std::size_t n = 0; n < nt; ++n)
    g.t[n] = T * static_cast<double>(n) / static_cast<double>(nt - 1);
  g.t[0] = 0.0;
  g.t[nt - 1] = T;

  return g;
}

}  // namespace cbfb
