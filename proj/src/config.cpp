#include "dqw/config.hpp"

#include <istream>

#include "dqw/errors.hpp"

namespace dqw {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ConfigError("config." + path + ": " + what);
}

const json& require(const json& j, const std::string& path, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        fail(path.empty() ? key : path + "." + key, "missing field");
    }
    return j.at(key);
}

double as_number(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

int as_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<int>();
}

Complex as_complex(const json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im")) {
        fail(path, "expected {\"re\": ..., \"im\": ...}");
    }
    return {as_number(j.at("re"), path + ".re"), as_number(j.at("im"), path + ".im")};
}

}  // namespace

HomogeneousChannel channel_from_json(const json& j) {
    const std::string type = require(j, "channel", "type").get<std::string>();
    if (type == "tunneling") {
        return tunneling_channel(as_int(require(j, "channel", "d"), "channel.d"),
                                 as_number(require(j, "channel", "p"), "channel.p"),
                                 as_number(require(j, "channel", "q"), "channel.q"));
    }
    if (type == "kraus") {
        const json& jops = require(j, "channel", "ops");
        if (!jops.is_array() || jops.empty()) fail("channel.ops", "expected a nonempty array");
        std::vector<ShiftKrausOp> ops;
        for (size_t n = 0; n < jops.size(); ++n) {
            const std::string path = "channel.ops[" + std::to_string(n) + "]";
            const json& jop = jops[n];
            if (!jop.is_array() || jop.empty()) fail(path, "expected a nonempty array of terms");
            ShiftKrausOp op;
            for (size_t i = 0; i < jop.size(); ++i) {
                const std::string tpath = path + "[" + std::to_string(i) + "]";
                const json& jt = jop[i];
                ShiftTerm term;
                term.shift = as_int(require(jt, tpath, "l"), tpath + ".l");
                term.amp = as_complex(jt, tpath);
                op.terms.push_back(term);
            }
            ops.push_back(std::move(op));
        }
        return HomogeneousChannel(std::move(ops));
    }
    fail("channel.type", "unknown type '" + type + "' (expected 'tunneling' or 'kraus')");
}

json channel_to_json(const HomogeneousChannel& channel) {
    json jops = json::array();
    for (const auto& op : channel.ops()) {
        json jop = json::array();
        for (const auto& term : op.terms) {
            jop.push_back({{"l", term.shift}, {"re", term.amp.real()}, {"im", term.amp.imag()}});
        }
        jops.push_back(std::move(jop));
    }
    return {{"type", "kraus"}, {"ops", std::move(jops)}};
}

BlochVector ExperimentConfig::initial_bloch() const {
    if (bloch) {
        return *bloch;
    }
    return bloch_from_amplitudes((*amplitudes)[0], (*amplitudes)[1]);
}

namespace {

CoinOperator parse_coin(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "hadamard") {
            return CoinOperator::hadamard();
        }
        fail("coin", "unknown named coin '" + j.get<std::string>() + "'");
    }
    const json& rows = require(j, "coin", "entries");
    if (!rows.is_array() || rows.size() != 2) fail("coin.entries", "expected 2 rows");
    Matrix2c m;
    for (int r = 0; r < 2; ++r) {
        if (!rows[r].is_array() || rows[r].size() != 2) {
            fail("coin.entries", "each row needs 2 complex entries");
        }
        for (int c = 0; c < 2; ++c) {
            m(r, c) = as_complex(rows[r][c], "coin.entries");
        }
    }
    try {
        return CoinOperator(m);
    } catch (const NotUnitaryError& e) {
        fail("coin.entries", e.what());
    }
}

void parse_initial(const json& j, ExperimentConfig& cfg) {
    const bool has_amp = j.contains("amplitudes");
    const bool has_bloch = j.contains("bloch");
    if (has_amp == has_bloch) {
        fail("initial", "exactly one of 'amplitudes' or 'bloch' must be given");
    }
    if (has_amp) {
        const json& a = j.at("amplitudes");
        if (!a.is_array() || a.size() != 2) fail("initial.amplitudes", "expected 2 complex numbers");
        Eigen::Vector2cd psi(as_complex(a[0], "initial.amplitudes[0]"),
                             as_complex(a[1], "initial.amplitudes[1]"));
        if (std::abs(psi.squaredNorm() - 1.0) > 1e-12) {
            fail("initial.amplitudes", "amplitudes are not normalized");
        }
        cfg.amplitudes = psi;
        return;
    }
    const json& b = j.at("bloch");
    if (!b.is_array() || (b.size() != 3 && b.size() != 4)) {
        fail("initial.bloch", "expected [r1,r2,r3] or [r0,r1,r2,r3]");
    }
    BlochVector r;
    if (b.size() == 4) {
        r.r0 = as_number(b[0], "initial.bloch[0]");
        r.r1 = as_number(b[1], "initial.bloch[1]");
        r.r2 = as_number(b[2], "initial.bloch[2]");
        r.r3 = as_number(b[3], "initial.bloch[3]");
    } else {
        r.r0 = 0.5;
        r.r1 = as_number(b[0], "initial.bloch[0]");
        r.r2 = as_number(b[1], "initial.bloch[1]");
        r.r3 = as_number(b[2], "initial.bloch[2]");
    }
    if (!r.physical()) {
        fail("initial.bloch", "not a physical coin state (needs r0 = 1/2, |r| <= 1/2)");
    }
    cfg.bloch = r;
}

OutputFlags parse_outputs(const json& j) {
    OutputFlags f;
    if (!j.is_object()) fail("outputs", "expected an object of boolean flags");
    for (const auto& [key, value] : j.items()) {
        if (!value.is_boolean()) fail("outputs." + key, "expected a boolean");
        if (key == "distribution") f.distribution = value.get<bool>();
        else if (key == "moments") f.moments = value.get<bool>();
        else if (key == "negativity") f.negativity = value.get<bool>();
        else if (key == "analytic") f.analytic = value.get<bool>();
        else fail("outputs." + key, "unknown flag");
    }
    return f;
}

}  // namespace

ExperimentConfig parse_config(const json& j) {
    if (!j.is_object()) {
        throw ConfigError("config: expected a JSON object");
    }
    ExperimentConfig cfg;
    cfg.echo = j;
    if (j.contains("coin")) {
        cfg.coin = parse_coin(j.at("coin"));
    }
    parse_initial(require(j, "", "initial"), cfg);
    if (j.contains("channel")) {
        cfg.channel = channel_from_json(j.at("channel"));
        try {
            validate(cfg.channel);
        } catch (const IncompleteChannelError& e) {
            fail("channel", e.what());
        }
    }
    cfg.t_max = as_int(require(j, "", "t_max"), "t_max");
    if (cfg.t_max < 0) fail("t_max", "must be >= 0");
    if (j.contains("stride")) {
        cfg.stride = as_int(j.at("stride"), "stride");
        if (cfg.stride < 1) fail("stride", "must be >= 1");
    }
    if (j.contains("k_points")) {
        cfg.k_points = as_int(j.at("k_points"), "k_points");
        if (cfg.k_points != 0 && (cfg.k_points < 64 || cfg.k_points % 2 != 0)) {
            fail("k_points", "must be 0 (automatic) or an even number >= 64");
        }
    }
    if (j.contains("outputs")) {
        cfg.outputs = parse_outputs(j.at("outputs"));
    }
    return cfg;
}

namespace {

std::vector<double> parse_axis(const json& j, const std::string& path) {
    std::vector<double> values;
    if (j.is_number()) {
        values.push_back(j.get<double>());
    } else if (j.is_array()) {
        for (size_t i = 0; i < j.size(); ++i) {
            values.push_back(as_number(j[i], path + "[" + std::to_string(i) + "]"));
        }
    } else if (j.is_object()) {
        const double from = as_number(require(j, path, "from"), path + ".from");
        const double to = as_number(require(j, path, "to"), path + ".to");
        const int steps = as_int(require(j, path, "steps"), path + ".steps");
        if (steps < 1) fail(path + ".steps", "must be >= 1");
        for (int i = 0; i < steps; ++i) {
            values.push_back(steps == 1 ? from : from + (to - from) * i / (steps - 1));
        }
    } else {
        fail(path, "expected a number, array, or {from,to,steps}");
    }
    if (values.empty()) fail(path, "empty grid");
    return values;
}

}  // namespace

SweepSpec parse_sweep(const json& j) {
    SweepSpec spec;
    spec.base = parse_config(j);
    const json& js = require(j, "", "sweep");
    if (!js.is_object()) fail("sweep", "expected an object");

    if (js.contains("d")) {
        for (double v : parse_axis(js.at("d"), "sweep.d")) {
            const int d = static_cast<int>(v);
            if (d < 1 || d != v) fail("sweep.d", "entries must be integers >= 1");
            spec.d_values.push_back(d);
        }
    } else {
        spec.d_values = {1};
    }
    spec.beta_values = js.contains("beta") ? parse_axis(js.at("beta"), "sweep.beta")
                                           : std::vector<double>{0.5};
    const bool has_p = js.contains("P");
    const bool has_pt = js.contains("P_t");
    if (has_p == has_pt) {
        fail("sweep", "exactly one of 'P' or 'P_t' must be given");
    }
    spec.use_total_probability = has_pt;
    spec.p_values = parse_axis(js.at(has_p ? "P" : "P_t"), has_p ? "sweep.P" : "sweep.P_t");
    for (const auto& [key, value] : js.items()) {
        (void)value;
        if (key != "d" && key != "beta" && key != "P" && key != "P_t") {
            fail("sweep." + key, "unknown axis");
        }
    }
    return spec;
}

json load_json(std::istream& in, const std::string& origin) {
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(origin + ": " + e.what());
    }
}

}  // namespace dqw
