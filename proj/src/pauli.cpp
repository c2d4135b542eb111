#include "dqw/pauli.hpp"

#include <cmath>

#include "dqw/errors.hpp"

namespace dqw {

const std::array<Matrix2c, 4>& pauli_matrices() {
    static const std::array<Matrix2c, 4> sigma = [] {
        std::array<Matrix2c, 4> s;
        s[0] << 1, 0, 0, 1;
        s[1] << 0, 1, 1, 0;
        s[2] << 0, Complex(0, -1), Complex(0, 1), 0;
        s[3] << 1, 0, 0, -1;
        return s;
    }();
    return sigma;
}

bool BlochVector::physical(double tol) const {
    return std::abs(r0 - 0.5) <= tol &&
           r1 * r1 + r2 * r2 + r3 * r3 <= 0.25 + tol;
}

BlochVector bloch_from_density(const Matrix2c& rho) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        throw NonHermitianError("density matrix is not hermitian");
    }
    if (std::abs(rho.trace().real() - 1.0) > 1e-10 || std::abs(rho.trace().imag()) > 1e-10) {
        throw BadTraceError("density matrix trace is not 1");
    }
    Eigen::SelfAdjointEigenSolver<Matrix2c> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10) {
        throw UnphysicalStateError("density matrix is not positive semidefinite");
    }
    const auto& sigma = pauli_matrices();
    BlochVector r;
    r.r0 = 0.5 * (rho * sigma[0]).trace().real();
    r.r1 = 0.5 * (rho * sigma[1]).trace().real();
    r.r2 = 0.5 * (rho * sigma[2]).trace().real();
    r.r3 = 0.5 * (rho * sigma[3]).trace().real();
    return r;
}

Matrix2c density_from_bloch(const BlochVector& r) {
    const auto& sigma = pauli_matrices();
    return r.r0 * sigma[0] + r.r1 * sigma[1] + r.r2 * sigma[2] + r.r3 * sigma[3];
}

BlochVector bloch_from_amplitudes(const Complex& a, const Complex& b) {
    const double norm2 = std::norm(a) + std::norm(b);
    if (std::abs(norm2 - 1.0) > 1e-12) {
        throw NotNormalizedError("coin amplitudes are not normalized");
    }
    Eigen::Vector2cd psi(a, b);
    return bloch_from_density(psi * psi.adjoint());
}

}  // namespace dqw
