#include "dqw/transfer.hpp"

namespace dqw {

TransferMatrix walk_transfer_matrix(const CoinOperator& coin, double k) {
    const Matrix2c u = momentum_coin(coin, k);
    const Matrix2c udag = u.adjoint();
    const auto& sigma = pauli_matrices();
    TransferMatrix m;
    for (int j = 0; j < 4; ++j) {
        const Matrix2c conj = u * sigma[j] * udag;
        for (int i = 0; i < 4; ++i) {
            m(i, j) = 0.5 * (sigma[i] * conj).trace().real();
        }
    }
    return m;
}

std::pair<Eigen::Matrix4cd, Eigen::Matrix4cd> zl_zr_matrices() {
    Eigen::Matrix4cd zr = Eigen::Matrix4cd::Zero();
    zr(0, 3) = 1;
    zr(1, 2) = Complex(0, 1);
    zr(2, 1) = Complex(0, -1);
    zr(3, 0) = 1;
    return {zr.conjugate(), zr};
}

}  // namespace dqw
