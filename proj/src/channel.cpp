#include "dqw/channel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "dqw/errors.hpp"

namespace dqw {

HomogeneousChannel::HomogeneousChannel(std::vector<ShiftKrausOp> ops) : ops_(std::move(ops)) {
    if (ops_.empty()) {
        throw DomainError("channel needs at least one Kraus operator");
    }
    for (const auto& op : ops_) {
        if (op.terms.empty()) {
            throw DomainError("Kraus operator has no shift terms");
        }
        std::set<int> seen;
        for (const auto& term : op.terms) {
            if (!seen.insert(term.shift).second) {
                throw DomainError("duplicate shift inside one Kraus operator");
            }
            max_shift_ = std::max(max_shift_, std::abs(term.shift));
        }
    }
}

HomogeneousChannel HomogeneousChannel::coherent() {
    return HomogeneousChannel({ShiftKrausOp{{ShiftTerm{0, Complex(1, 0)}}}});
}

bool HomogeneousChannel::pure_shift() const {
    return std::all_of(ops_.begin(), ops_.end(),
                       [](const ShiftKrausOp& op) { return op.pure_shift(); });
}

void validate(const HomogeneousChannel& channel) {
    constexpr double kTol = 1e-12;

    std::map<int, Complex> acc;
    for (const auto& op : channel.ops()) {
        for (const auto& ti : op.terms) {
            for (const auto& tj : op.terms) {
                acc[tj.shift - ti.shift] += std::conj(ti.amp) * tj.amp;
            }
        }
    }
    double worst = 0.0;
    int worst_shift = 0;
    for (const auto& [m, sum] : acc) {
        const double dev = std::abs(sum - (m == 0 ? Complex(1, 0) : Complex(0, 0)));
        if (dev > worst) {
            worst = dev;
            worst_shift = m;
        }
    }
    if (worst > kTol) {
        throw IncompleteChannelError(worst, worst_shift);
    }

    // Redundant check of sum_n |F_n(k)|^2 on a momentum grid.
    constexpr int kGrid = 128;
    for (int i = 0; i < kGrid; ++i) {
        const double k = -std::numbers::pi + (i + 0.5) * 2.0 * std::numbers::pi / kGrid;
        double total = 0.0;
        for (const auto& op : channel.ops()) {
            Complex f(0, 0);
            for (const auto& term : op.terms) {
                f += term.amp * std::polar(1.0, term.shift * k);
            }
            total += std::norm(f);
        }
        if (std::abs(total - 1.0) > kTol) {
            throw IncompleteChannelError(std::abs(total - 1.0), 0);
        }
    }
}

namespace {

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) {
        r *= static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return r;
}

}  // namespace

HomogeneousChannel tunneling_channel(int d, double p, double q) {
    if (d < 1) {
        throw DomainError("tunneling range d must be >= 1");
    }
    if (p < 0.0 || q < 0.0 || p + q > 1.0) {
        throw BadProbabilityError("tunneling probabilities need p, q >= 0 and p + q <= 1");
    }
    std::vector<ShiftKrausOp> ops;
    const double stay = 1.0 - std::pow(p + q, d);
    if (stay > 0.0) {
        ops.push_back({{ShiftTerm{0, Complex(std::sqrt(stay), 0)}}});
    }
    for (int j = 0; j <= d; ++j) {
        const double amp2 = binomial(d, j) * std::pow(p, d - j) * std::pow(q, j);
        if (amp2 > 0.0) {
            ops.push_back({{ShiftTerm{d - 2 * j, Complex(std::sqrt(amp2), 0)}}});
        }
    }
    return HomogeneousChannel(std::move(ops));
}

ChannelInvariants channel_invariants(const HomogeneousChannel& channel) {
    if (!channel.pure_shift()) {
        throw MixedShiftOpError(
            "channel has a multi-translation Kraus operator; "
            "shift moments would be momentum-dependent");
    }
    validate(channel);
    ChannelInvariants inv;
    for (const auto& op : channel.ops()) {
        const double w = std::norm(op.terms.front().amp);
        const double l = op.terms.front().shift;
        inv.mu += w * l;
        inv.s += w * l * l;
    }
    inv.g = inv.s - inv.mu * inv.mu;
    return inv;
}

double g_function(double beta, int d, double P) {
    if (!(beta >= 0.0 && beta <= 1.0) || !(P >= 0.0 && P <= 1.0)) {
        throw DomainError("g_function needs beta and P in [0, 1]");
    }
    if (d < 1) {
        throw DomainError("g_function needs d >= 1");
    }
    const double pd = std::pow(P, d);
    const double db = 2.0 * beta - 1.0;
    return d * pd * (d * db * db * (1.0 - pd) + 4.0 * beta * (1.0 - beta));
}

}  // namespace dqw
