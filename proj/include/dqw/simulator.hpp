#pragma once

#include <optional>
#include <vector>

#include "dqw/channel.hpp"
#include "dqw/coin.hpp"
#include "dqw/pauli.hpp"

namespace dqw {

// Dense coin (x) position density matrix on a truncated lattice.  Basis
// index is 2*(x - x_min) + c with the coin fastest, c = 0 for |L> and
// c = 1 for |R>.  The lattice is sized up front from t_max so that
// probability stays clear of the boundary while stepping is allowed.
struct WalkState {
    Eigen::MatrixXcd rho;
    int x_min = 0;
    int x_max = 0;
    int t = 0;
    int t_max = 0;
    int d_max = 0;

    int sites() const { return x_max - x_min + 1; }
    int index(int x, int c) const { return 2 * (x - x_min) + c; }
    double site_probability(int x) const;
    double trace() const;
};

// Product state |0><0| (x) rho_coin on N = 2 (1 + d_max) t_max + 1 sites
// centered at the origin.
WalkState init_state(const Eigen::Vector2cd& psi_coin, int t_max,
                     const HomogeneousChannel& channel);
WalkState init_state(const BlochVector& coin_state, int t_max,
                     const HomogeneousChannel& channel);

// One step: the coin is applied, then the conditioned shift, then the
// position channel's Kraus sum.  Throws BoundaryBreachError when t = t_max
// or when probability has reached the boundary margin.
void step(WalkState& state, const CoinOperator& coin, const HomogeneousChannel& channel);

struct WalkObservables {
    int t = 0;
    int x_min = 0;                     // site of distribution[0]
    std::vector<double> distribution;  // site probabilities, x_min..x_max
    double mean = 0.0;
    double second_moment = 0.0;
    double variance = 0.0;
    std::optional<double> negativity;
};

WalkObservables observables(const WalkState& state, bool with_negativity = false);

// Sum of |negative eigenvalues| of the partial transpose over the coin,
// i.e. (trace norm - 1) / 2.  Expects the coin-fastest layout used by
// WalkState.
double negativity(const Eigen::MatrixXcd& rho);

struct RunConfig {
    CoinOperator coin = CoinOperator::hadamard();
    HomogeneousChannel channel = HomogeneousChannel::coherent();
    BlochVector initial;
    int t_max = 0;
    int stride = 1;
    bool with_negativity = false;
};

// Steps from 0 to t_max, recording observables every `stride` steps and at
// the final step.  Deterministic.
std::vector<WalkObservables> run(const RunConfig& config);

}  // namespace dqw
