#pragma once

#include <utility>

#include "dqw/coin.hpp"
#include "dqw/pauli.hpp"

namespace dqw {

// Bloch-space transfer matrix of conjugation by U(k).  Conjugation by a
// unitary is a rotation of the (r1,r2,r3) block and fixes r0, so the
// matrix is real with first row (1,0,0,0).
using TransferMatrix = Eigen::Matrix4d;

// Adjoint representation M(i,j) = Re Tr(sigma_i U(k) sigma_j U(k)^dag) / 2.
TransferMatrix walk_transfer_matrix(const CoinOperator& coin, double k);

// Bloch-space matrices of left and right multiplication by sigma_z:
// Z_L O = sigma_z O and Z_R O = O sigma_z.  Z_L is the complex conjugate
// of Z_R; their sum has exactly two nonzero entries, both 2, at (0,3)
// and (3,0).
std::pair<Eigen::Matrix4cd, Eigen::Matrix4cd> zl_zr_matrices();

}  // namespace dqw
