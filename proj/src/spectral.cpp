#include "dqw/spectral.hpp"

#include <numbers>
#include <string>

#include "dqw/errors.hpp"
#include "dqw/transfer.hpp"

namespace dqw {

std::vector<double> momentum_grid(int k_points) {
    std::vector<double> ks(k_points);
    const double h = 2.0 * std::numbers::pi / k_points;
    for (int j = 0; j < k_points; ++j) {
        ks[j] = -std::numbers::pi + (j + 0.5) * h;
    }
    return ks;
}

// Momentum-space moment sums, written out for the row vectors picked by the
// trace.  With f = <F|Fdot> = i*mu under the conventions in pauli.hpp,
//   <x>_t   = mu t - 2 avg_k sum_m [W_k^m r]_3
//   <x^2>_t = (s+1) t + mu^2 t(t-1) - 4 mu t avg_k sum_m [W_k^m r]_3
//             + 2 avg_k sum_{p=1}^{t-1} (t-p) [W_k^p]_33
// Both are exact at finite t; the grid integrates the trigonometric
// polynomials exactly.
Moments spectral_moment_oracle(const CoinOperator& coin, const HomogeneousChannel& channel,
                               const BlochVector& r, int t, int k_points) {
    if (t < 0) {
        throw DomainError("step count must be nonnegative");
    }
    if (!channel.pure_shift()) {
        throw MixedShiftOpError("spectral oracle needs a pure-shift channel");
    }
    const ChannelInvariants inv = channel_invariants(channel);

    if (k_points == 0) {
        k_points = std::max(64, 4 * t + 8);
    }
    if (k_points < 64 || k_points % 2 != 0 || k_points < 4 * t + 4) {
        throw GridTooCoarseError("k_points must be even, >= 64 and >= 4t + 4 (got " +
                                 std::to_string(k_points) + " for t = " + std::to_string(t) + ")");
    }
    if (t == 0) {
        return {};
    }

    double s1_sum = 0.0;  // avg_k sum_m [W^m r]_3
    double s3_sum = 0.0;  // avg_k sum_p (t-p) [W^p]_33
    for (const double k : momentum_grid(k_points)) {
        const TransferMatrix w = walk_transfer_matrix(coin, k);
        Vector4r v = r.vec();
        Vector4r e3(0, 0, 0, 1);
        double s1 = 0.0;
        double s3 = 0.0;
        for (int m = 1; m <= t; ++m) {
            v = w * v;
            s1 += v[3];
            if (m < t) {
                e3 = w * e3;
                s3 += (t - m) * e3[3];
            }
        }
        s1_sum += s1;
        s3_sum += s3;
    }
    const double s1 = s1_sum / k_points;
    const double s3 = s3_sum / k_points;

    const double td = t;
    Moments out;
    out.mean = inv.mu * td - 2.0 * s1;
    out.second_moment = (inv.s + 1.0) * td + inv.mu * inv.mu * td * (td - 1.0) -
                        4.0 * inv.mu * td * s1 + 2.0 * s3;
    return out;
}

}  // namespace dqw
