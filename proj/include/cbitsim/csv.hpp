#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "cbitsim/complex_canonical.hpp"
#include "cbitsim/experiments.hpp"

namespace cbitsim::io {

struct RunConfig {
    std::string experiment;
    std::string backend = "both";
    int points = 256;
    Mode phase_arm = Mode::L;
    double g = 1.0;
    double dt = 1e-2;
    double t_max = 20.0;
    int fock_dim = 8;
    int trials = 100;
    std::uint64_t seed = 1;
    std::string out_path;       // empty means stdout
    std::string format = "csv";
};

// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

// Header plus one line per record; LF endings; schema-validated against
// the experiment's declared observable set.
void write_csv(std::ostream& os, const std::string& experiment,
               const std::vector<experiments::ExperimentRecord>& records);

// Aligned summary with the pass/fail verdict of the experiment's claim.
void write_text(std::ostream& os, const RunConfig& config,
                const std::vector<experiments::ExperimentRecord>& records);

// Dispatches on config.format and config.out_path. Throws on I/O failure
// with the path in the message.
void write_records(const std::vector<experiments::ExperimentRecord>& records,
                   const RunConfig& config);

}  // namespace cbitsim::io
