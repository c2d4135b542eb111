#pragma once

#include "dqw/pauli.hpp"

namespace dqw {

// A 2x2 unitary coin.  Construction rejects non-unitary input.
class CoinOperator {
  public:
    explicit CoinOperator(const Matrix2c& entries, double tol = 1e-12);

    static CoinOperator hadamard();
    static CoinOperator identity();

    const Matrix2c& matrix() const { return u_; }

  private:
    Matrix2c u_;
};

// Momentum-space step U(k) = diag(e^{-ik}, e^{+ik}) * U_c.
Matrix2c momentum_coin(const CoinOperator& coin, double k);

}  // namespace dqw
