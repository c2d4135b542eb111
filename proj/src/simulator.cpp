#include "dqw/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dqw/errors.hpp"

namespace dqw {

double WalkState::site_probability(int x) const {
    const int i = index(x, 0);
    return rho(i, i).real() + rho(i + 1, i + 1).real();
}

double WalkState::trace() const {
    return rho.diagonal().real().sum();
}

namespace {

WalkState make_state(const Matrix2c& rho_coin, int t_max, const HomogeneousChannel& channel) {
    if (t_max < 0) {
        throw DomainError("t_max must be nonnegative");
    }
    WalkState st;
    st.d_max = channel.max_shift();
    st.t_max = t_max;
    const int radius = (1 + st.d_max) * t_max;
    st.x_min = -radius;
    st.x_max = radius;
    const int dim = 2 * st.sites();
    st.rho = Eigen::MatrixXcd::Zero(dim, dim);
    const int i0 = st.index(0, 0);
    st.rho.block<2, 2>(i0, i0) = rho_coin;
    return st;
}

// dst(2x+c, 2y+cp) += w * src(2(x-dr)+c, 2(y-dc)+cp) over in-range sites.
void accumulate_shifted(Eigen::MatrixXcd& dst, const Eigen::MatrixXcd& src, int n,
                        int c, int cp, int dr, int dc, Complex w) {
    const int x0 = std::max(0, dr);
    const int x1 = n + std::min(0, dr);
    const int y0 = std::max(0, dc);
    const int y1 = n + std::min(0, dc);
    for (int y = y0; y < y1; ++y) {
        Complex* d = dst.col(2 * y + cp).data();
        const Complex* s = src.col(2 * (y - dc) + cp).data();
        for (int x = x0; x < x1; ++x) {
            d[2 * x + c] += w * s[2 * (x - dr) + c];
        }
    }
}

}  // namespace

WalkState init_state(const Eigen::Vector2cd& psi_coin, int t_max,
                     const HomogeneousChannel& channel) {
    if (std::abs(psi_coin.squaredNorm() - 1.0) > 1e-12) {
        throw NotNormalizedError("coin amplitudes are not normalized");
    }
    return make_state(psi_coin * psi_coin.adjoint(), t_max, channel);
}

WalkState init_state(const BlochVector& coin_state, int t_max,
                     const HomogeneousChannel& channel) {
    if (!coin_state.physical()) {
        throw UnphysicalStateError("initial Bloch vector is not a physical coin state");
    }
    return make_state(density_from_bloch(coin_state), t_max, channel);
}

void step(WalkState& st, const CoinOperator& coin, const HomogeneousChannel& channel) {
    if (st.t >= st.t_max) {
        throw BoundaryBreachError("lattice was sized for " + std::to_string(st.t_max) +
                                  " steps; no further step is possible");
    }
    if (channel.max_shift() > st.d_max) {
        throw BoundaryBreachError("channel shift range exceeds the lattice margin");
    }
    const int n = st.sites();
    const int margin = 1 + st.d_max;
    for (int x = st.x_min; x < st.x_min + margin; ++x) {
        if (st.site_probability(x) > 1e-12 || st.site_probability(-x) > 1e-12) {
            throw BoundaryBreachError("probability reached the boundary margin");
        }
    }

    // Coin: rho <- (I (x) U_c) rho (I (x) U_c)^dag, blockwise.
    const Matrix2c u = coin.matrix();
    const Matrix2c udag = u.adjoint();
    for (int bx = 0; bx < n; ++bx) {
        st.rho.middleRows(2 * bx, 2) = u * st.rho.middleRows(2 * bx, 2);
    }
    for (int by = 0; by < n; ++by) {
        st.rho.middleCols(2 * by, 2) = st.rho.middleCols(2 * by, 2) * udag;
    }

    // Conditioned shift fused with the channel's Kraus sum: every term pair
    // becomes one index-shifted block accumulation.
    static constexpr int kCoinShift[2] = {-1, +1};
    Eigen::MatrixXcd next = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    for (const auto& op : channel.ops()) {
        for (const auto& ti : op.terms) {
            for (const auto& tj : op.terms) {
                const Complex w = ti.amp * std::conj(tj.amp);
                for (int c = 0; c < 2; ++c) {
                    for (int cp = 0; cp < 2; ++cp) {
                        accumulate_shifted(next, st.rho, n, c, cp,
                                           kCoinShift[c] + ti.shift,
                                           kCoinShift[cp] + tj.shift, w);
                    }
                }
            }
        }
    }
    st.rho.swap(next);
    ++st.t;
}

double negativity(const Eigen::MatrixXcd& rho) {
    const int dim = static_cast<int>(rho.rows());
    const int n = dim / 2;
    Eigen::MatrixXcd pt(dim, dim);
    for (int y = 0; y < n; ++y) {
        for (int cp = 0; cp < 2; ++cp) {
            for (int x = 0; x < n; ++x) {
                for (int c = 0; c < 2; ++c) {
                    pt(2 * x + c, 2 * y + cp) = rho(2 * x + cp, 2 * y + c);
                }
            }
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(pt, Eigen::EigenvaluesOnly);
    double neg = 0.0;
    for (int i = 0; i < dim; ++i) {
        neg += std::max(0.0, -es.eigenvalues()[i]);
    }
    return neg;
}

WalkObservables observables(const WalkState& st, bool with_negativity) {
    WalkObservables obs;
    obs.t = st.t;
    obs.x_min = st.x_min;
    const int n = st.sites();
    obs.distribution.resize(n);
    double mean = 0.0;
    double m2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = st.x_min + i;
        const double p = st.rho(2 * i, 2 * i).real() + st.rho(2 * i + 1, 2 * i + 1).real();
        obs.distribution[i] = p;
        mean += x * p;
        m2 += x * x * p;
    }
    obs.mean = mean;
    obs.second_moment = m2;
    obs.variance = m2 - mean * mean;
    if (with_negativity) {
        obs.negativity = negativity(st.rho);
    }
    return obs;
}

std::vector<WalkObservables> run(const RunConfig& config) {
    if (config.stride < 1) {
        throw DomainError("stride must be >= 1");
    }
    WalkState st = init_state(config.initial, config.t_max, config.channel);
    std::vector<WalkObservables> series;
    series.push_back(observables(st, config.with_negativity));
    for (int t = 1; t <= config.t_max; ++t) {
        step(st, config.coin, config.channel);
        if (t % config.stride == 0 || t == config.t_max) {
            series.push_back(observables(st, config.with_negativity));
        }
    }
    return series;
}

}  // namespace dqw
