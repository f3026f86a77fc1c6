#pragma once

#include <span>
#include <vector>

#include "cbfb/grid.hpp"
#include "cbfb/model.hpp"

namespace cbfb {

/// Tridiagonal form of the spatial part A of the backward pricing operator,
///   L V = -dV/dt + A V,   A V = -1/2*sigma^2*(x^2+eps)*V_xx - (r-q)*x*V_x + r*V,
/// discretized with second-order central differences and an automatic
/// one-sided (upwind) switch for the convection term at any node where the
/// central coefficients would break the sign pattern sub<=0, super<=0.
///
/// Row i: (A v)_i = sub[i]*v[i-1] + diag[i]*v[i] + super[i]*v[i+1].
///
/// Node 0 is degenerate for eps=0: diffusion and convection vanish and the
/// row is pure reaction (0, r, 0) — the value there follows the ODE
/// dV/dt = r*V - c and no boundary data can be assigned. For eps>0 the even
/// symmetry of the regularized problem gives a zero-Neumann condition at
/// x=0, imposed by ghost-node elimination.
///
/// The last row belongs to the pinned boundary V(K/gamma,t)=K and is unused.
struct OperatorStencil {
  std::vector<double> sub;
  std::vector<double> diag;
  std::vector<double> super;
  double epsilon = 0.0;
  std::size_t upwinded_nodes = 0;

  std::size_t size() const { return diag.size(); }
};

OperatorStencil assemble_operator(const ModelParams& params, const Grid& grid,
                                  double epsilon = 0.0);

/// av[i] = (A v)_i for i in [0, nx-2]; av[nx-1] is set to 0 (Dirichlet row).
void apply_operator(const OperatorStencil& st, std::span<const double> v,
                    std::span<double> av);

/// True when every row satisfies sub<=0, super<=0 and diag >= r (so the
/// implicit step matrix I + w*A is strictly diagonally dominant with
/// nonpositive off-diagonals for any w >= 0).
bool is_monotone_stencil(const OperatorStencil& st, const ModelParams& params);

}  // namespace cbfb
