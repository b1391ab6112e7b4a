#include "cbitsim/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <stdexcept>

namespace cbitsim::io {

namespace {

const char* verdict(bool ok) {
    return ok ? "[PASS]" : "[FAIL]";
}

void write_line(std::ostream& os, const std::string& label, const std::string& value,
                const std::string& note = "") {
    os << "  " << std::left << std::setw(38) << label << " " << value;
    if (!note.empty()) {
        os << "  " << note;
    }
    os << "\n";
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof(buf), value);
    if (result.ec != std::errc()) {
        throw std::runtime_error("format_double: conversion failed");
    }
    return std::string(buf, result.ptr);
}

void write_csv(std::ostream& os, const std::string& experiment,
               const std::vector<experiments::ExperimentRecord>& records) {
    const auto& schema = experiments::observable_schema(experiment);
    const auto& param = experiments::sweep_param_name(experiment);

    os << param << ",backend";
    for (const auto& name : schema) {
        os << "," << name;
    }
    os << "\n";

    for (const auto& record : records) {
        if (record.experiment != experiment) {
            throw std::invalid_argument("write_csv: record from experiment '" +
                                        record.experiment + "' in '" + experiment + "' output");
        }
        if (record.observables.size() != schema.size()) {
            throw std::invalid_argument("write_csv: record observable count does not match schema");
        }
        os << format_double(record.param_value) << "," << experiments::to_string(record.backend);
        for (std::size_t i = 0; i < schema.size(); ++i) {
            if (record.observables[i].first != schema[i]) {
                throw std::invalid_argument("write_csv: observable '" +
                                            record.observables[i].first + "' out of schema order");
            }
            if (!std::isfinite(record.observables[i].second)) {
                throw std::invalid_argument("write_csv: non-finite observable " + schema[i]);
            }
            os << "," << format_double(record.observables[i].second);
        }
        os << "\n";
    }
}

namespace {

void write_mz_text(std::ostream& os, const RunConfig& config,
                   const std::vector<experiments::ExperimentRecord>& records) {
    const auto summary = experiments::summarize_mz(records);
    os << "mz-sweep: two-beamsplitter interference, " << config.points << " phase points, arm "
       << (config.phase_arm == Mode::L ? "L" : "R") << "\n";
    write_line(os, "i_L at phi = 0", format_double(summary.i_l_at_zero),
               std::string(verdict(summary.phi0_ok)) + " photon returns to the input arm");
    if (summary.has_both_backends) {
        write_line(os, "max |classical - quantum|", format_double(summary.max_abs_diff),
                   std::string(verdict(summary.equivalence_ok)) +
                       " backends agree row-wise (< 1e-10)");
    } else {
        write_line(os, "backends compared", "no (single backend run)");
    }
}

void write_sharpness_text(std::ostream& os, const RunConfig& config,
                          const std::vector<experiments::ExperimentRecord>& records) {
    const auto summary = experiments::summarize_sharpness(records);
    os << "sharpness: " << config.trials << " random states per backend, seed " << config.seed
       << "\n";
    write_line(os, "c-bit max |x^2+y^2+z^2 - 1|", format_double(summary.classical_max_residual));
    write_line(os, "c-bit max component variance", format_double(summary.classical_max_variance),
               std::string(verdict(summary.classical_sharp_ok)) +
                   " all three components sharp simultaneously");
    write_line(os, "qubit max |Var X+Var Y+Var Z - 2|",
               format_double(summary.quantum_max_residual),
               std::string(verdict(summary.quantum_uncertain_ok)) +
                   " qubit variance sum pinned to 2");
}

void write_swap_text(std::ostream& os, const RunConfig& config,
                     const std::vector<experiments::ExperimentRecord>& records) {
    const auto summary = experiments::summarize_swap(records);
    os << "swap-test: " << summary.trials << " random pairs, g = " << format_double(config.g)
       << ", dt = " << format_double(config.dt) << ", t_end = " << format_double(config.t_max)
       << ", seed " << config.seed << "\n";
    write_line(os, "quantum SWAP fidelity min", format_double(summary.quantum_fidelity_min),
               std::string(verdict(summary.quantum_fidelity_min > 1.0 - 1e-10)) +
                   " reference swap is exact");
    write_line(os, "hybrid best fidelity min", format_double(summary.hybrid_best_fidelity_min));
    write_line(os, "hybrid best fidelity median",
               format_double(summary.hybrid_best_fidelity_median),
               std::string(verdict(summary.hybrid_best_fidelity_median <
                                   1.0 - experiments::kSwapBestFidelityDelta)) +
                   " stays below 1 - " + format_double(experiments::kSwapBestFidelityDelta));
    write_line(os, "hybrid best fidelity max", format_double(summary.hybrid_best_fidelity_max));
    write_line(os, "one-way variant median", format_double(summary.one_way_best_fidelity_median));
    write_line(os, "ehrenfest variant median",
               format_double(summary.ehrenfest_best_fidelity_median));
    write_line(os, "hybrid max entanglement entropy",
               format_double(summary.hybrid_max_entropy),
               std::string(verdict(summary.hybrid_max_entropy == 0.0)) +
                   " no entanglement anywhere in any trajectory");
    write_line(os, "integrator failures", std::to_string(summary.integrator_failures));
}

void write_jc_text(std::ostream& os, const RunConfig& config,
                   const std::vector<experiments::ExperimentRecord>& records) {
    const auto summary = experiments::summarize_jc(records, config.g);
    os << "jc-compare: resonant vacuum Rabi, g = " << format_double(config.g) << ", fock_dim = "
       << config.fock_dim << "\n";
    write_line(os, "quantum max |P_e - cos^2(gt)|", format_double(summary.max_p_dev_from_cos2),
               std::string(verdict(summary.rabi_ok)) + " vacuum Rabi oscillation");
    write_line(os, "quantum entropy at gt = pi/4",
               format_double(summary.entropy_at_quarter) + " nats (" +
                   format_double(summary.entropy_at_quarter / std::numbers::ln2) + " bits)",
               std::string(verdict(summary.entropy_ok)) + " reaches ln 2");
    write_line(os, "semiclassical max entropy",
               format_double(summary.semiclassical_max_entropy),
               std::string(verdict(summary.semiclassical_flat_ok)) +
                   " classical mode never entangles");
}

void write_convergence_text(std::ostream& os,
                            const std::vector<experiments::ExperimentRecord>& records) {
    const auto summary = experiments::summarize_convergence(records);
    os << "convergence: implicit midpoint order and mean-field conservation\n";
    for (const auto& r : records) {
        if (r.backend == experiments::Backend::classical_cbit) {
            write_line(os, "oscillator error at dt = " + format_double(r.param_value),
                       format_double(r.observables.at(0).second));
        }
    }
    write_line(os, "fitted slope", format_double(summary.fitted_slope),
               std::string(verdict(summary.slope_ok)) + " second order (2.0 +/- 0.2)");
    write_line(os, "ehrenfest drift at dt = 0.001", format_double(summary.drift_fine),
               std::string(verdict(summary.drift_ok)) + " below 1e-8");
    write_line(os, "drift ratio dt -> dt/2", format_double(summary.drift_ratio),
               std::string(verdict(summary.ratio_ok)) + " shrinks ~4x (within [2.5, 6])");
}

}  // namespace

void write_text(std::ostream& os, const RunConfig& config,
                const std::vector<experiments::ExperimentRecord>& records) {
    if (config.experiment == "mz-sweep") {
        write_mz_text(os, config, records);
    } else if (config.experiment == "sharpness") {
        write_sharpness_text(os, config, records);
    } else if (config.experiment == "swap-test") {
        write_swap_text(os, config, records);
    } else if (config.experiment == "jc-compare") {
        write_jc_text(os, config, records);
    } else if (config.experiment == "convergence") {
        write_convergence_text(os, records);
    } else {
        throw std::invalid_argument("write_text: no renderer for " + config.experiment);
    }
}

void write_records(const std::vector<experiments::ExperimentRecord>& records,
                   const RunConfig& config) {
    const auto emit = [&](std::ostream& os) {
        if (config.format == "csv") {
            write_csv(os, config.experiment, records);
        } else {
            write_text(os, config, records);
        }
    };
    if (config.out_path.empty()) {
        emit(std::cout);
        if (!std::cout.good()) {
            throw std::runtime_error("write_records: failed writing to stdout");
        }
        return;
    }
    std::ofstream file(config.out_path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("write_records: cannot open '" + config.out_path +
                                 "' for writing");
    }
    emit(file);
    file.flush();
    if (!file.good()) {
        throw std::runtime_error("write_records: failed writing '" + config.out_path + "'");
    }
}

}  // namespace cbitsim::io
