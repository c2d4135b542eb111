#pragma once

#include <vector>

#include "dqw/channel.hpp"
#include "dqw/coin.hpp"
#include "dqw/pauli.hpp"

namespace dqw {

struct Moments {
    double mean = 0.0;           // sites
    double second_moment = 0.0;  // sites^2
};

// Shifted uniform grid over [-pi, pi): k_j = -pi + (j + 1/2) 2 pi / n.
// The rectangle rule on it is exact for trigonometric polynomials of
// degree below n, and no node hits the degenerate points of the transfer
// matrix spectrum.
std::vector<double> momentum_grid(int k_points);

// Exact finite-t position moments from the momentum-space picture: the
// transfer matrix is powered on the Bloch vector at every grid node and
// the finite step sums are carried out in full, with no large-t
// approximation.  Pass k_points = 0 to size the grid automatically.
//
// Requires a validated pure-shift channel (MixedShiftOpError otherwise)
// and k_points even, >= 64 and >= 4t + 4 (GridTooCoarseError otherwise).
Moments spectral_moment_oracle(const CoinOperator& coin, const HomogeneousChannel& channel,
                               const BlochVector& r, int t, int k_points = 0);

}  // namespace dqw
