#pragma once

#include <complex>
#include <vector>

#include "dqw/pauli.hpp"

namespace dqw {

struct ShiftTerm {
    int shift = 0;       // lattice sites
    Complex amp{1, 0};   // dimensionless amplitude
};

// One Kraus operator acting on the position register: a finite sum of
// pure translations, sum_l amp_l * Shift(l), with distinct shifts.
struct ShiftKrausOp {
    std::vector<ShiftTerm> terms;

    bool pure_shift() const { return terms.size() == 1; }
};

// A translation-invariant position channel rho -> sum_n P_n rho P_n^dag.
class HomogeneousChannel {
  public:
    explicit HomogeneousChannel(std::vector<ShiftKrausOp> ops);

    // The identity channel: a single unit-amplitude zero-shift operator.
    static HomogeneousChannel coherent();

    const std::vector<ShiftKrausOp>& ops() const { return ops_; }
    int max_shift() const { return max_shift_; }

    // True when every Kraus operator is a single translation.
    bool pure_shift() const;

  private:
    std::vector<ShiftKrausOp> ops_;
    int max_shift_ = 0;
};

// Checks the completeness sum in coefficient space: for every relative
// shift m, sum_n sum_l conj(p_l) p_{l+m} must be delta_{m,0} within 1e-12,
// plus a redundant 128-point momentum-grid check of sum_n |F_n(k)|^2.
// Throws IncompleteChannelError.
void validate(const HomogeneousChannel& channel);

// Walker that tunnels to up to d-th neighbors: moves right with
// probability p and left with probability q per sub-step.  Kraus family is
// one zero-shift operator with amplitude sqrt(1-(p+q)^d) plus, for
// j = 0..d, a shift by d-2j with amplitude sqrt(binom(d,j) p^{d-j} q^j).
// Zero-amplitude operators are dropped.
HomogeneousChannel tunneling_channel(int d, double p, double q);

// Shift moments of a pure-shift channel.
struct ChannelInvariants {
    double mu = 0.0;  // mean shift per step, sites
    double s = 0.0;   // second shift moment, sites^2
    double g = 0.0;   // variance boost s - mu^2, sites^2
};

// Requires every operator to be a single translation; the closed-form
// moments are momentum-independent only in that case.  Throws
// MixedShiftOpError otherwise.
ChannelInvariants channel_invariants(const HomogeneousChannel& channel);

// Closed-form variance boost of the tunneling family,
//   G(beta, d, P) = d P^d (d (2 beta - 1)^2 (1 - P^d) + 4 beta (1 - beta)),
// with p = beta P and q = (1 - beta) P.
double g_function(double beta, int d, double P);

}  // namespace dqw
