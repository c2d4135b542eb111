#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dqw/channel.hpp"
#include "dqw/coin.hpp"
#include "dqw/pauli.hpp"

namespace dqw {

// Channel specs:
//   {"type": "tunneling", "d": 2, "p": 0.375, "q": 0.375}
//   {"type": "kraus", "ops": [[{"l": 0, "re": 1.0, "im": 0.0}, ...], ...]}
HomogeneousChannel channel_from_json(const nlohmann::json& j);
nlohmann::json channel_to_json(const HomogeneousChannel& channel);

struct OutputFlags {
    bool distribution = false;
    bool moments = true;
    bool negativity = false;
    bool analytic = false;
};

// One experiment: coin, initial coin state, channel and run controls.
// Exactly one of amplitudes / Bloch initial state must be present.
struct ExperimentConfig {
    CoinOperator coin = CoinOperator::hadamard();
    std::optional<Eigen::Vector2cd> amplitudes;
    std::optional<BlochVector> bloch;
    HomogeneousChannel channel = HomogeneousChannel::coherent();
    int t_max = 1;
    int stride = 1;
    int k_points = 0;  // 0 = automatic grid size
    OutputFlags outputs;
    nlohmann::json echo;  // original document, for provenance comments

    BlochVector initial_bloch() const;
};

ExperimentConfig parse_config(const nlohmann::json& j);

// Grid specification for `sweep`: base experiment fields plus a "sweep"
// object with axes over d, beta and exactly one of P / P_t.  Axes are
// arrays, scalars, or {"from": a, "to": b, "steps": n}.
struct SweepSpec {
    ExperimentConfig base;
    std::vector<int> d_values;
    std::vector<double> beta_values;
    std::vector<double> p_values;  // interpreted via use_total_probability
    bool use_total_probability = false;
};

SweepSpec parse_sweep(const nlohmann::json& j);

nlohmann::json load_json(std::istream& in, const std::string& origin);

}  // namespace dqw
