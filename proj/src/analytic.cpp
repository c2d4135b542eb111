#include "dqw/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dqw/errors.hpp"

namespace dqw {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kAlpha = 1.0 - kSqrt2 / 2.0;

GammaMatrices make_constants() {
    GammaMatrices g;
    g.alpha = kAlpha;

    g.A.setZero();
    g.A(0, 0) = 1.0;
    g.A(1, 1) = g.A(1, 3) = g.A(3, 1) = g.A(3, 3) = kAlpha;
    g.A(2, 2) = 1.0 - 2.0 * kAlpha;

    g.B.setZero();
    g.B(1, 1) = kSqrt2 / 4.0;
    g.B(1, 3) = 3.0 * kSqrt2 / 4.0 - 1.0;
    g.B(2, 2) = kAlpha;
    g.B(3, 1) = -kSqrt2 / 4.0;
    g.B(3, 3) = kSqrt2 / 4.0;

    g.C.setZero();
    g.C(1, 1) = 3.0 * kSqrt2 / 16.0;
    g.C(1, 3) = -kSqrt2 / 16.0;
    g.C(2, 2) = kSqrt2 / 8.0;
    g.C(3, 1) = -kSqrt2 / 16.0;
    g.C(3, 3) = 3.0 * kSqrt2 / 16.0;
    return g;
}

}  // namespace

double walk_alpha() { return kAlpha; }

const GammaMatrices& gamma_constants() {
    static const GammaMatrices g = make_constants();
    return g;
}

Matrix4r gamma1(long t) {
    const auto& g = gamma_constants();
    return static_cast<double>(t) * g.A - g.B;
}

Matrix4r gamma2(long t) {
    const auto& g = gamma_constants();
    return 0.5 * static_cast<double>(t) * static_cast<double>(t - 1) * g.A + g.B - g.C;
}

Matrix4r gamma2_prime(long t) {
    const auto& g = gamma_constants();
    return 0.5 * static_cast<double>(t) * static_cast<double>(t - 1) * g.A -
           static_cast<double>(t) * g.B + g.C;
}

VarianceModel variance_model(const BlochVector& r, const ChannelInvariants& inv) {
    if (!r.physical()) {
        throw UnphysicalStateError("Bloch vector is not a physical coin state");
    }
    const double sum = r.r3 + r.r1;
    const double diff = r.r3 - r.r1;
    VarianceModel m;
    m.a = kAlpha - 4.0 * kAlpha * kAlpha * sum * sum;
    m.b = 2.0 * kSqrt2 * kAlpha * (r.r3 * r.r3 - r.r1 * r.r1) + inv.g;
    m.c = -0.5 * diff * diff + 3.0 * kSqrt2 / 8.0;
    m.mu_drift = inv.mu - 2.0 * kAlpha * sum;
    return m;
}

double variance_at(const VarianceModel& model, double t) {
    return (model.a * t + model.b) * t + model.c;
}

double hadamard_dispersion(double k) {
    const double c = std::cos(k);
    return std::acos(std::clamp(c * c, -1.0, 1.0));
}

}  // namespace dqw
