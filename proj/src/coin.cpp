#include "dqw/coin.hpp"

#include <cmath>

#include "dqw/errors.hpp"

namespace dqw {

CoinOperator::CoinOperator(const Matrix2c& entries, double tol) : u_(entries) {
    const Matrix2c dev = u_.adjoint() * u_ - Matrix2c::Identity();
    if (dev.cwiseAbs().maxCoeff() > tol) {
        throw NotUnitaryError("coin operator is not unitary");
    }
}

CoinOperator CoinOperator::hadamard() {
    const double h = 1.0 / std::sqrt(2.0);
    Matrix2c m;
    m << h, h, h, -h;
    return CoinOperator(m);
}

CoinOperator CoinOperator::identity() {
    return CoinOperator(Matrix2c::Identity());
}

Matrix2c momentum_coin(const CoinOperator& coin, double k) {
    Matrix2c d = Matrix2c::Zero();
    d(0, 0) = std::polar(1.0, -k);
    d(1, 1) = std::polar(1.0, k);
    return d * coin.matrix();
}

}  // namespace dqw
