#include "cbfb/operator_stencil.hpp"

#include <cassert>
#include <stdexcept>

namespace cbfb {

OperatorStencil assemble_operator(const ModelParams& params, const Grid& grid,
                                  double epsilon) {
  if (epsilon < 0.0) {
    throw std::invalid_argument("assemble_operator: epsilon must be >= 0");
  }
  const std::size_t nx = grid.nx();
  OperatorStencil st;
  st.epsilon = epsilon;
  st.sub.assign(nx, 0.0);
  st.diag.assign(nx, 0.0);
  st.super.assign(nx, 0.0);

  const double sigma2 = params.sigma * params.sigma;
  const double drift = params.r - params.q;

  // x = 0 row.
  if (epsilon == 0.0) {
    st.diag[0] = params.r;  // pure reaction: the degenerate ODE row
  } else {
    const double d0 = 0.5 * sigma2 * epsilon;
    const double h0 = grid.x[1] - grid.x[0];
    st.diag[0] = 2.0 * d0 / (h0 * h0) + params.r;
    st.super[0] = -2.0 * d0 / (h0 * h0);
  }

  for (std::size_t i = 1; i + 1 < nx; ++i) {
    const double x = grid.x[i];
    const double hm = grid.x[i] - grid.x[i - 1];
    const double hp = grid.x[i + 1] - grid.x[i];
    const double dcoef = 0.5 * sigma2 * (x * x + epsilon);
    const double b = drift * x;

    // Central second difference (exact on quadratics for any hm, hp).
    const double cm = 2.0 / (hm * (hm + hp));
    const double c0 = -2.0 / (hm * hp);
    const double cp = 2.0 / (hp * (hm + hp));

    // Central first difference.
    const double dm = -hp / (hm * (hm + hp));
    const double d0 = (hp - hm) / (hm * hp);
    const double dp = hm / (hp * (hm + hp));

    double sub = -dcoef * cm - b * dm;
    double dia = -dcoef * c0 - b * d0 + params.r;
    double sup = -dcoef * cp - b * dp;

    if (sub > 0.0 || sup > 0.0) {
      // One-sided convection restores the M-matrix sign pattern.
      sub = -dcoef * cm;
      dia = -dcoef * c0 + params.r;
      sup = -dcoef * cp;
      if (b > 0.0) {
        dia += b / hp;
        sup -= b / hp;
      } else if (b < 0.0) {
        dia -= b / hm;
        sub += b / hm;
      }
      ++st.upwinded_nodes;
    }

    st.sub[i] = sub;
    st.diag[i] = dia;
    st.super[i] = sup;
  }

  // Right edge V(K/gamma,t)=K is pinned; row stays zero and unused.
  assert(is_monotone_stencil(st, params));
  return st;
}

void apply_operator(const OperatorStencil& st, std::span<const double> v,
                    std::span<double> av) {
  const std::size_t nx = st.size();
  assert(v.size() == nx && av.size() == nx);
  av[0] = st.diag[0] * v[0] + st.super[0] * v[1];
  for (std::size_t i = 1; i + 1 < nx; ++i) {
    av[i] = st.sub[i] * v[i - 1] + st.diag[i] * v[i] + st.super[i] * v[i + 1];
  }
  av[nx - 1] = 0.0;
}

bool is_monotone_stencil(const OperatorStencil& st, const ModelParams& params) {
  const double slack = 1e-12 * params.r;
  for (std::size_t i = 0; i + 1 < st.size(); ++i) {
    if (st.sub[i] > 0.0 || st.super[i] > 0.0) return false;
    if (st.diag[i] < params.r - slack) return false;
  }
  return true;
}

}  // namespace cbfb
