#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

// Conventions used throughout the library.  Every sign-sensitive result
// follows from these; nothing else in the code base redefines them.
//
//   * coin basis ordered (|L>, |R>), sigma_z = diag(1, -1),
//     Pauli order (sigma_0, sigma_x, sigma_y, sigma_z)
//   * the conditioned shift moves |R> one site right (+1) and |L> one left (-1)
//   * momentum states |k> = sum_x e^{-ikx} |x>, so a bare shift by l sites
//     multiplies |k> by e^{+ilk} and one walk step acts on the coin as
//     U(k) = diag(e^{-ik}, e^{+ik}) U_c
//   * Bloch components r_i = Tr(O sigma_i) / 2, so a coin density matrix
//     maps to the column (1/2, r1, r2, r3)

namespace dqw {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Vector4r = Eigen::Vector4d;

// sigma_0 .. sigma_3 in the order above.
const std::array<Matrix2c, 4>& pauli_matrices();

struct BlochVector {
    double r0 = 0.0;
    double r1 = 0.0;
    double r2 = 0.0;
    double r3 = 0.0;

    Vector4r vec() const { return Vector4r(r0, r1, r2, r3); }
    static BlochVector from_vec(const Vector4r& v) { return {v[0], v[1], v[2], v[3]}; }

    // A physical coin state has r0 = 1/2 and r1^2 + r2^2 + r3^2 <= 1/4.
    bool physical(double tol = 1e-12) const;
};

// r_i = Tr(rho sigma_i) / 2.  rho must be hermitian, unit trace and
// positive semidefinite (tolerance 1e-10).
BlochVector bloch_from_density(const Matrix2c& rho);

// sum_i r_i sigma_i; inverse of bloch_from_density.
Matrix2c density_from_bloch(const BlochVector& r);

// Bloch vector of the pure state a|L> + b|R>.  Throws NotNormalizedError.
BlochVector bloch_from_amplitudes(const Complex& a, const Complex& b);

}  // namespace dqw
