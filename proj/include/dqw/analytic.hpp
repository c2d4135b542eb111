#pragma once

#include "dqw/channel.hpp"
#include "dqw/pauli.hpp"

namespace dqw {

using Matrix4r = Eigen::Matrix4d;

// alpha = 1 - sqrt(2)/2, the ballistic coefficient of the Hadamard walk.
double walk_alpha();

// Constant matrices of the asymptotic momentum integrals for the Hadamard
// coin.  A collects the unit-eigenvalue projectors of the transfer matrix,
// B and C the stationary parts of the oscillatory geometric sums.
struct GammaMatrices {
    Matrix4r A;
    Matrix4r B;
    Matrix4r C;
    double alpha;
};

const GammaMatrices& gamma_constants();

// Asymptotic momentum averages of transfer-matrix power sums
// (Hadamard coin):
//   gamma1(t)       ~ avg_k sum_{m=1..t} W_k^m            = t A - B
//   gamma2(t)       ~ avg_k sum_m sum_{m'<m} W_k^m        = t(t-1)/2 A + B - C
//   gamma2_prime(t) ~ avg_k sum_m sum_{m'<m} W_k^{m'}     = t(t-1)/2 A - t B + C
// The closed forms drop oscillatory integrals that decay with t; at t = 0
// they evaluate the printed polynomials, not the (empty) sums.
Matrix4r gamma1(long t);
Matrix4r gamma2(long t);
Matrix4r gamma2_prime(long t);

// Asymptotic variance sigma^2(t) = a t^2 + b t + c of the Hadamard walk
// with a homogeneous position channel, plus the asymptotic mean slope.
struct VarianceModel {
    double a = 0.0;        // sites^2 / step^2
    double b = 0.0;        // sites^2 / step
    double c = 0.0;        // sites^2
    double mu_drift = 0.0; // sites / step
};

//   a = alpha - 4 alpha^2 (r3 + r1)^2
//   b = 2 sqrt(2) alpha (r3^2 - r1^2) + g
//   c = -(r3 - r1)^2 / 2 + 3 sqrt(2) / 8
//   mu_drift = mu - 2 alpha (r1 + r3)
// The drift sign is fixed by the shift convention (see pauli.hpp) and is
// checked against the exact finite-t moments in the tests.
VarianceModel variance_model(const BlochVector& r, const ChannelInvariants& inv);

double variance_at(const VarianceModel& model, double t);

// Dispersion relation of the Hadamard walk: theta(k) = arccos(cos^2 k).
double hadamard_dispersion(double k);

}  // namespace dqw
