#pragma once

// Shared test oracles.  Everything here is independent of the library
// internals it is used to check: the golden transfer matrix is typed in
// from its closed form, the pure-state walker evolves amplitudes instead
// of density matrices, and the quadrature helpers integrate numerically
// constructed transfer matrices.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "dqw/channel.hpp"
#include "dqw/coin.hpp"
#include "dqw/pauli.hpp"
#include "dqw/transfer.hpp"

namespace dqw::test {

// Closed form of the Hadamard-coin transfer matrix.
inline Eigen::Matrix4d printed_hadamard_walk_matrix(double k) {
    const double s = std::sin(2.0 * k);
    const double c = std::cos(2.0 * k);
    Eigen::Matrix4d m;
    m << 1, 0, 0, 0,
         0, 0, s, c,
         0, 0, -c, s,
         0, 1, 0, 0;
    return m;
}

// Coherent walk on a state vector: coin then conditioned shift.  Gives an
// independent route to distributions and to the density matrix (as an
// outer product) for the decoherence-free limit.
class PureWalker {
  public:
    PureWalker(const Eigen::Vector2cd& psi_coin, int t_max)
        : radius_(t_max), amp_(Eigen::VectorXcd::Zero(2 * (2 * t_max + 1))) {
        amp_[index(0, 0)] = psi_coin[0];
        amp_[index(0, 1)] = psi_coin[1];
    }

    void step(const CoinOperator& coin) {
        const Matrix2c u = coin.matrix();
        Eigen::VectorXcd next = Eigen::VectorXcd::Zero(amp_.size());
        for (int x = -radius_; x <= radius_; ++x) {
            const Complex l = amp_[index(x, 0)];
            const Complex r = amp_[index(x, 1)];
            const Complex cl = u(0, 0) * l + u(0, 1) * r;
            const Complex cr = u(1, 0) * l + u(1, 1) * r;
            if (x - 1 >= -radius_) next[index(x - 1, 0)] += cl;
            if (x + 1 <= radius_) next[index(x + 1, 1)] += cr;
        }
        amp_.swap(next);
    }

    std::vector<double> distribution() const {
        std::vector<double> p(2 * radius_ + 1);
        for (int x = -radius_; x <= radius_; ++x) {
            p[x + radius_] = std::norm(amp_[index(x, 0)]) + std::norm(amp_[index(x, 1)]);
        }
        return p;
    }

    double mean() const {
        double m = 0.0;
        const auto p = distribution();
        for (int x = -radius_; x <= radius_; ++x) m += x * p[x + radius_];
        return m;
    }

    double second_moment() const {
        double m = 0.0;
        const auto p = distribution();
        for (int x = -radius_; x <= radius_; ++x) m += double(x) * x * p[x + radius_];
        return m;
    }

    Eigen::MatrixXcd density() const { return amp_ * amp_.adjoint(); }

    int radius() const { return radius_; }

  private:
    int index(int x, int c) const { return 2 * (x + radius_) + c; }

    int radius_;
    Eigen::VectorXcd amp_;
};

// Momentum averages of the raw power sums sum_{m<=t} W^m,
// sum_m (m-1) W^m and sum_{m'<t} (t-m') W^{m'} for every t <= t_max,
// by direct powering on a grid sized for the largest t.
struct PowerSumQuadrature {
    std::vector<Eigen::Matrix4d> gamma1, gamma2, gamma2p;
};

inline PowerSumQuadrature quad_power_sums(int t_max) {
    const int n = 4 * t_max + 8;
    PowerSumQuadrature q;
    q.gamma1.assign(t_max + 1, Eigen::Matrix4d::Zero());
    q.gamma2.assign(t_max + 1, Eigen::Matrix4d::Zero());
    q.gamma2p.assign(t_max + 1, Eigen::Matrix4d::Zero());
    std::vector<Eigen::Matrix4d> prefix(t_max + 1), weighted(t_max + 1);
    for (int j = 0; j < n; ++j) {
        const double k = -std::numbers::pi + (j + 0.5) * 2.0 * std::numbers::pi / n;
        const Eigen::Matrix4d w = printed_hadamard_walk_matrix(k);
        Eigen::Matrix4d power = Eigen::Matrix4d::Identity();
        prefix[0].setZero();
        weighted[0].setZero();
        for (int m = 1; m <= t_max; ++m) {
            power = (power * w).eval();
            prefix[m] = prefix[m - 1] + power;
            weighted[m] = weighted[m - 1] + m * power;
        }
        for (int t = 1; t <= t_max; ++t) {
            q.gamma1[t] += prefix[t];
            q.gamma2[t] += weighted[t] - prefix[t];
            // sum_{m'=1}^{t-1} (t - m') W^{m'}
            q.gamma2p[t] += t * prefix[t - 1] - weighted[t - 1];
        }
    }
    for (int t = 0; t <= t_max; ++t) {
        q.gamma1[t] /= n;
        q.gamma2[t] /= n;
        q.gamma2p[t] /= n;
    }
    return q;
}

// Quadrature of the constant matrices behind the asymptotic forms, from
// the spectral structure of numerically built transfer matrices: the
// unit-eigenvalue projector P1 = (W^2 + 2 cos(theta) W + 1) / (2 + 2 cos
// theta) with cos(theta) = cos^2 k, and the oscillatory projector pair
// P3/P4 on the complement.  The geometric sums are closed per momentum
// with their decaying tails dropped.
struct GammaConstantsQuadrature {
    Eigen::Matrix4d A, B, C;
};

inline GammaConstantsQuadrature quad_gamma_constants(int n = 4096) {
    GammaConstantsQuadrature out;
    out.A.setZero();
    out.B.setZero();
    out.C.setZero();
    for (int j = 0; j < n; ++j) {
        const double k = -std::numbers::pi + (j + 0.5) * 2.0 * std::numbers::pi / n;
        const Eigen::Matrix4d w = printed_hadamard_walk_matrix(k);
        const double cth = std::cos(k) * std::cos(k);
        const Eigen::Matrix4d p1 =
            (w * w + 2.0 * cth * w + Eigen::Matrix4d::Identity()) / (2.0 + 2.0 * cth);
        out.A += p1;
        const double th = std::acos(cth);
        const std::complex<double> lam3 = -std::polar(1.0, th);
        const std::complex<double> lam4 = std::conj(lam3);
        if (std::abs(lam3 - lam4) < 1e-9) {
            continue;  // measure-zero degeneracy; midpoint grid avoids it
        }
        const Eigen::Matrix4cd q = (Eigen::Matrix4d::Identity() - p1).cast<std::complex<double>>();
        const Eigen::Matrix4cd p3 =
            q * (w.cast<std::complex<double>>() - lam4 * Eigen::Matrix4cd::Identity()) /
            (lam3 - lam4);
        out.B += (-2.0 * (lam3 / (1.0 - lam3) * p3).real());
        out.C += (-2.0 * (lam3 / ((1.0 - lam3) * (1.0 - lam3)) * p3).real());
    }
    out.A /= n;
    out.B /= n;
    out.C /= n;
    return out;
}

// Deterministic random inputs for property tests.

inline CoinOperator random_coin(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const double theta = 0.5 * angle(rng);
    const double a = angle(rng), b = angle(rng), g = angle(rng);
    Matrix2c u;
    u(0, 0) = std::polar(std::cos(theta), a);
    u(0, 1) = std::polar(std::sin(theta), b);
    u(1, 0) = -std::polar(std::sin(theta), g - b);
    u(1, 1) = std::polar(std::cos(theta), g - a);
    return CoinOperator(u);
}

inline HomogeneousChannel random_pure_shift_channel(std::mt19937_64& rng, int max_shift = 2) {
    std::uniform_int_distribution<int> count(1, 3);
    std::uniform_real_distribution<double> weight(0.1, 1.0);
    const int n_ops = count(rng);
    std::vector<int> shifts;
    for (int l = -max_shift; l <= max_shift; ++l) shifts.push_back(l);
    std::shuffle(shifts.begin(), shifts.end(), rng);
    std::vector<double> w(n_ops);
    double total = 0.0;
    for (double& v : w) total += (v = weight(rng));
    std::vector<ShiftKrausOp> ops;
    for (int i = 0; i < n_ops; ++i) {
        ops.push_back({{ShiftTerm{shifts[i], Complex(std::sqrt(w[i] / total), 0)}}});
    }
    return HomogeneousChannel(std::move(ops));
}

inline Eigen::Vector2cd random_pure_state(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Eigen::Vector2cd psi(Complex(gauss(rng), gauss(rng)), Complex(gauss(rng), gauss(rng)));
    psi /= psi.norm();
    return psi;
}

inline BlochVector random_bloch(std::mt19937_64& rng, bool allow_mixed = true) {
    if (!allow_mixed) {
        const auto psi = random_pure_state(rng);
        return bloch_from_amplitudes(psi[0], psi[1]);
    }
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> radius(0.0, 0.5);
    Eigen::Vector3d dir(gauss(rng), gauss(rng), gauss(rng));
    dir.normalize();
    dir *= 0.5 * radius(rng);
    return BlochVector{0.5, dir[0], dir[1], dir[2]};
}

}  // namespace dqw::test
