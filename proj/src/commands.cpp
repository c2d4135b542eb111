#include "dqw/commands.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <vector>

#include "dqw/analytic.hpp"
#include "dqw/csv.hpp"
#include "dqw/errors.hpp"
#include "dqw/parallel.hpp"
#include "dqw/simulator.hpp"

namespace dqw {

namespace {

void preamble(CsvWriter& w, const char* command, const ExperimentConfig& cfg) {
    w.comment(std::string(kCsvSchemaVersion) + " " + command);
    w.comment("config " + cfg.echo.dump());
}

std::vector<int> record_steps(int t_max, int stride) {
    std::vector<int> ts{0};
    for (int t = stride; t <= t_max; t += stride) {
        ts.push_back(t);
    }
    if (ts.back() != t_max) {
        ts.push_back(t_max);
    }
    return ts;
}

}  // namespace

int cmd_simulate(const ExperimentConfig& cfg, std::ostream& out) {
    if (!cfg.outputs.moments && !cfg.outputs.distribution) {
        throw ConfigError("config.outputs: simulate needs at least 'moments' or 'distribution'");
    }
    RunConfig rc;
    rc.coin = cfg.coin;
    rc.channel = cfg.channel;
    rc.initial = cfg.initial_bloch();
    rc.t_max = cfg.t_max;
    rc.stride = cfg.stride;
    rc.with_negativity = cfg.outputs.negativity;
    const auto series = run(rc);

    CsvWriter w(out);
    preamble(w, "simulate", cfg);
    if (cfg.outputs.moments) {
        std::vector<std::string> head{"t", "mean", "m2", "variance"};
        if (cfg.outputs.negativity) {
            head.push_back("negativity");
        }
        w.header(head);
        for (const auto& obs : series) {
            std::vector<std::string> row{format_int(obs.t), format_double(obs.mean),
                                         format_double(obs.second_moment),
                                         format_double(obs.variance)};
            if (cfg.outputs.negativity) {
                row.push_back(format_double(*obs.negativity));
            }
            w.row(row);
        }
    }
    if (cfg.outputs.distribution) {
        w.comment("section distribution");
        w.header({"t", "x", "p"});
        for (const auto& obs : series) {
            for (std::size_t i = 0; i < obs.distribution.size(); ++i) {
                w.row({format_int(obs.t), format_int(obs.x_min + static_cast<long>(i)),
                       format_double(obs.distribution[i])});
            }
        }
    }
    return 0;
}

int cmd_analytic(const ExperimentConfig& cfg, std::ostream& out) {
    ChannelInvariants inv;
    try {
        inv = channel_invariants(cfg.channel);
    } catch (const MixedShiftOpError& e) {
        throw ConfigError(std::string("config.channel: ") + e.what());
    }
    const VarianceModel model = variance_model(cfg.initial_bloch(), inv);

    CsvWriter w(out);
    preamble(w, "analytic", cfg);
    w.header({"a", "b", "c", "mu_drift", "mu", "s", "g"});
    w.row({format_double(model.a), format_double(model.b), format_double(model.c),
           format_double(model.mu_drift), format_double(inv.mu), format_double(inv.s),
           format_double(inv.g)});
    if (cfg.outputs.analytic) {
        w.comment("section variance");
        w.header({"t", "variance"});
        for (int t : record_steps(cfg.t_max, cfg.stride)) {
            w.row({format_int(t), format_double(variance_at(model, t))});
        }
    }
    return 0;
}

int cmd_compare(const ExperimentConfig& cfg, double tolerance, int t_min, std::ostream& out) {
    if (t_min < 1) {
        throw ConfigError("--t-min must be >= 1");
    }
    if (!(tolerance > 0.0)) {
        throw ConfigError("--tolerance must be positive");
    }
    ChannelInvariants inv;
    try {
        inv = channel_invariants(cfg.channel);
    } catch (const MixedShiftOpError& e) {
        throw ConfigError(std::string("config.channel: ") + e.what());
    }
    const BlochVector r = cfg.initial_bloch();
    const VarianceModel model = variance_model(r, inv);

    RunConfig rc;
    rc.coin = cfg.coin;
    rc.channel = cfg.channel;
    rc.initial = r;
    rc.t_max = cfg.t_max;
    rc.stride = 1;
    const auto series = run(rc);

    CsvWriter w(out);
    preamble(w, "compare", cfg);
    w.header({"t", "variance_sim", "variance_analytic", "rel_error"});
    double max_rel = 0.0;
    for (const auto& obs : series) {
        const double predicted = variance_at(model, obs.t);
        const double rel = obs.variance > 0.0
                               ? std::abs(obs.variance - predicted) / obs.variance
                               : std::numeric_limits<double>::infinity();
        if (obs.t >= t_min) {
            max_rel = std::max(max_rel, rel);
        }
        w.row({format_int(obs.t), format_double(obs.variance), format_double(predicted),
               format_double(rel)});
    }
    w.comment("summary max_rel_error " + format_double(max_rel) + " t_min " + format_int(t_min) +
              " tolerance " + format_double(tolerance));

    // Variance-boost report against the coherent walk at the usual marks.
    if (inv.g > 0.0 && cfg.t_max >= 20) {
        RunConfig coh = rc;
        coh.channel = HomogeneousChannel::coherent();
        const auto base = run(coh);
        const VarianceModel coh_model = variance_model(r, ChannelInvariants{});
        for (int mark : {20, 30}) {
            if (mark > cfg.t_max) {
                continue;
            }
            const double sim_ratio = series[mark].variance / base[mark].variance - 1.0;
            const double ana_ratio =
                variance_at(model, mark) / variance_at(coh_model, mark) - 1.0;
            w.comment("boost t=" + format_int(mark) + " sim " + format_double(sim_ratio) +
                      " analytic " + format_double(ana_ratio));
        }
    }
    return max_rel <= tolerance ? 0 : 1;
}

namespace {

struct SweepRow {
    int d = 0;
    double beta = 0.0;
    double p = 0.0;
    double p_total = 0.0;
    double g = 0.0;
    double variance = 0.0;
    double neg = 0.0;
};

}  // namespace

int cmd_sweep(const SweepSpec& spec, std::ostream& out) {
    const auto& cfg = spec.base;
    const bool want_variance = cfg.outputs.moments;
    const bool want_negativity = cfg.outputs.negativity;
    const bool needs_simulation = want_variance || want_negativity;

    std::vector<SweepRow> rows;
    for (int d : spec.d_values) {
        for (double beta : spec.beta_values) {
            for (double pv : spec.p_values) {
                SweepRow row;
                row.d = d;
                row.beta = beta;
                row.p = spec.use_total_probability ? std::pow(pv, 1.0 / d) : pv;
                row.p_total = std::pow(row.p, d);
                rows.push_back(row);
            }
        }
    }
    if (rows.empty()) {
        throw ConfigError("config.sweep: empty grid");
    }

    const BlochVector r = cfg.initial_bloch();
    parallel_for(rows.size(), [&](std::size_t i) {
        SweepRow& row = rows[i];
        row.g = g_function(row.beta, row.d, row.p);
        if (!needs_simulation) {
            return;
        }
        const HomogeneousChannel channel =
            tunneling_channel(row.d, row.beta * row.p, (1.0 - row.beta) * row.p);
        WalkState st = init_state(r, cfg.t_max, channel);
        for (int t = 0; t < cfg.t_max; ++t) {
            step(st, cfg.coin, channel);
        }
        const WalkObservables obs = observables(st, want_negativity);
        row.variance = obs.variance;
        if (want_negativity) {
            row.neg = *obs.negativity;
        }
    });

    CsvWriter w(out);
    preamble(w, "sweep", cfg);
    std::vector<std::string> head{"d", "beta", "P", "P_t", "g"};
    if (want_variance) {
        head.push_back("variance");
    }
    if (want_negativity) {
        head.push_back("negativity");
    }
    w.header(head);
    for (const auto& row : rows) {
        std::vector<std::string> cells{format_int(row.d), format_double(row.beta),
                                       format_double(row.p), format_double(row.p_total),
                                       format_double(row.g)};
        if (want_variance) {
            cells.push_back(format_double(row.variance));
        }
        if (want_negativity) {
            cells.push_back(format_double(row.neg));
        }
        w.row(cells);
    }
    return 0;
}

}  // namespace dqw
