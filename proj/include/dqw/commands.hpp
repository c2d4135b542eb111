#pragma once

#include <iosfwd>

#include "dqw/config.hpp"

namespace dqw {

// CSV-emitting entry points behind the CLI.  Each returns the process
// exit code: 0 on success, 1 when `compare` exceeds its tolerance.
// Configuration problems are thrown as ConfigError.

int cmd_simulate(const ExperimentConfig& cfg, std::ostream& out);
int cmd_analytic(const ExperimentConfig& cfg, std::ostream& out);
int cmd_compare(const ExperimentConfig& cfg, double tolerance, int t_min, std::ostream& out);
int cmd_sweep(const SweepSpec& spec, std::ostream& out);

}  // namespace dqw
