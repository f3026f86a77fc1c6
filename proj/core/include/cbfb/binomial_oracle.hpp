#pragma once

#include <cstddef>

#include "cbfb/model.hpp"

namespace cbfb {

/// CRR-style lattice spec for the game-option value of the bond: the holder
/// may convert (floor gamma*s), the issuer's call caps the value at K.
struct TreeSpec {
  ModelParams params;
  double anchor_spot = 0.0;  // initial stock level, >= 0
  std::size_t steps = 2000;  // >= 64
};

/// Deterministic backward induction with drift r-q and continuous coupon
/// accrual c*dt added to the continuation value before the constraints:
///   terminal:  V = max(gamma*s, K)
///   interior:  V = max(gamma*s, min(disc*(p*Vu + (1-p)*Vd) + c*dt, K))
/// (holder's max outside the issuer's min). Every node satisfies
/// gamma*s <= V <= max(K, gamma*s); violations indicate a bug and throw.
/// Throws ProbabilityOutOfRange when the risk-neutral p falls outside (0,1).
double tree_price(const TreeSpec& spec);

}  // namespace cbfb
