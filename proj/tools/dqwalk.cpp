#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "dqw/commands.hpp"
#include "dqw/errors.hpp"

namespace {

nlohmann::json read_config(const std::string& path) {
    if (path == "-") {
        return dqw::load_json(std::cin, "stdin");
    }
    std::ifstream in(path);
    if (!in) {
        throw dqw::ConfigError("cannot open config file '" + path + "'");
    }
    return dqw::load_json(in, path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"simulate and analyze one-dimensional quantum walks with position decoherence"};
    app.require_subcommand(1);

    std::string config_path = "-";
    std::string out_path = "-";
    double tolerance = 0.005;
    int t_min = 10;

    CLI::App* simulate = app.add_subcommand("simulate", "exact density-matrix run, CSV time series");
    CLI::App* analytic = app.add_subcommand("analytic", "asymptotic variance coefficients, CSV");
    CLI::App* compare = app.add_subcommand("compare", "simulated vs analytic variance, CSV report");
    CLI::App* sweep = app.add_subcommand("sweep", "parameter grid, one CSV row per point");

    for (CLI::App* sub : {simulate, analytic, compare, sweep}) {
        sub->add_option("--config", config_path, "JSON config file; '-' reads stdin");
        sub->add_option("--out", out_path, "output CSV file; '-' writes stdout");
    }
    compare->add_option("--tolerance", tolerance, "max relative error accepted for exit code 0");
    compare->add_option("--t-min", t_min, "first step counted in the error summary");

    CLI11_PARSE(app, argc, argv);

    try {
        const nlohmann::json doc = read_config(config_path);

        std::ofstream file;
        if (out_path != "-") {
            file.open(out_path);
            if (!file) {
                throw dqw::ConfigError("cannot open output file '" + out_path + "'");
            }
        }
        std::ostream& out = out_path == "-" ? std::cout : file;

        if (simulate->parsed()) {
            return dqw::cmd_simulate(dqw::parse_config(doc), out);
        }
        if (analytic->parsed()) {
            return dqw::cmd_analytic(dqw::parse_config(doc), out);
        }
        if (compare->parsed()) {
            return dqw::cmd_compare(dqw::parse_config(doc), tolerance, t_min, out);
        }
        return dqw::cmd_sweep(dqw::parse_sweep(doc), out);
    } catch (const dqw::Error& e) {
        std::cerr << "dqwalk: " << e.what() << '\n';
        return 2;
    }
}
