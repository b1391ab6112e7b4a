#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "cbitsim/csv.hpp"
#include "cbitsim/experiments.hpp"
#include "cbitsim/hybrid.hpp"

namespace {

using cbitsim::Mode;
using cbitsim::experiments::Backend;
using cbitsim::experiments::ExperimentRecord;

std::vector<ExperimentRecord> run_experiment(const cbitsim::io::RunConfig& config) {
    namespace experiments = cbitsim::experiments;
    if (config.experiment == "mz-sweep") {
        if (config.backend == "both") {
            const auto classical =
                experiments::run_mz_sweep(Backend::classical_cbit, config.points,
                                          config.phase_arm);
            const auto quantum =
                experiments::run_mz_sweep(Backend::quantum, config.points, config.phase_arm);
            std::vector<ExperimentRecord> records;
            records.reserve(classical.size() + quantum.size());
            for (std::size_t i = 0; i < classical.size(); ++i) {
                records.push_back(classical[i]);
                records.push_back(quantum[i]);
            }
            return records;
        }
        return experiments::run_mz_sweep(experiments::backend_from_string(config.backend),
                                         config.points, config.phase_arm);
    }
    if (config.experiment == "sharpness") {
        return experiments::run_sharpness_report(config.trials, config.seed);
    }
    if (config.experiment == "swap-test") {
        cbitsim::hybrid::CouplingSpec spec;
        spec.g = config.g;
        return experiments::run_swap_experiment(config.trials, spec, config.seed, config.dt,
                                                config.t_max)
            .records;
    }
    if (config.experiment == "jc-compare") {
        return experiments::run_jc_compare(config.g, config.t_max, config.points,
                                           config.fock_dim);
    }
    return experiments::run_convergence_study();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classical complex-bit vs quantum-bit experiment runner"};
    app.require_subcommand(1);

    cbitsim::io::RunConfig config;
    std::string phase_arm = "L";

    const auto add_output_flags = [&](CLI::App* cmd) {
        cmd->add_option("--out", config.out_path, "Output path (default: stdout)");
        cmd->add_option("--format", config.format, "Output format")
            ->check(CLI::IsMember({"csv", "text"}))
            ->capture_default_str();
    };

    CLI::App* mz = app.add_subcommand(
        "mz-sweep", "Interferometer phase sweep; classical and quantum backends agree row-wise");
    mz->add_option("--backend", config.backend, "classical_cbit, quantum, or both")
        ->check(CLI::IsMember({"classical_cbit", "quantum", "both"}))
        ->capture_default_str();
    mz->add_option("--points", config.points, "Phase grid size, endpoints included")
        ->check(CLI::Range(2, 1 << 20))
        ->capture_default_str();
    mz->add_option("--phase-arm", phase_arm, "Arm carrying the phase shifter")
        ->check(CLI::IsMember({"L", "R"}))
        ->capture_default_str();
    add_output_flags(mz);

    CLI::App* sharp = app.add_subcommand(
        "sharpness", "Classical point-valued triples vs qubit variance sum of 2");
    sharp->add_option("--trials", config.trials, "Random states per backend")
        ->check(CLI::Range(1, 1 << 24))
        ->capture_default_str();
    sharp->add_option("--seed", config.seed, "RNG seed")->capture_default_str();
    add_output_flags(sharp);

    CLI::App* swap = app.add_subcommand(
        "swap-test", "Attempted c-bit/qubit swap under both hybrid couplings vs quantum SWAP");
    swap->add_option("--trials", config.trials, "Random state pairs")
        ->check(CLI::Range(1, 1 << 20))
        ->capture_default_str();
    swap->add_option("--g", config.g, "Coupling strength")
        ->check(CLI::Number)
        ->capture_default_str();
    swap->add_option("--dt", config.dt, "Integrator step")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    swap->add_option("--t-max", config.t_max, "Evolution horizon")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    swap->add_option("--seed", config.seed, "RNG seed")->capture_default_str();
    add_output_flags(swap);

    CLI::App* jc = app.add_subcommand(
        "jc-compare", "Resonant vacuum Rabi: quantum qubit-mode vs classically driven qubit");
    config.t_max = std::numbers::pi;  // re-defaulted below for swap-test
    jc->add_option("--g", config.g, "Qubit-mode coupling")
        ->check(CLI::Number)
        ->capture_default_str();
    jc->add_option("--t-max", config.t_max, "Evolution horizon")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    jc->add_option("--points", config.points, "Number of sample intervals")
        ->check(CLI::Range(1, 1 << 20))
        ->capture_default_str();
    jc->add_option("--fock-dim", config.fock_dim, "Fock truncation (at least 2)")
        ->check(CLI::Range(2, 512))
        ->capture_default_str();
    add_output_flags(jc);

    CLI::App* conv = app.add_subcommand(
        "convergence", "Implicit-midpoint order check and mean-field energy conservation");
    add_output_flags(conv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    config.phase_arm = (phase_arm == "L") ? Mode::L : Mode::R;
    CLI::App* chosen = app.get_subcommands().front();
    config.experiment = chosen->get_name();
    if (config.experiment == "swap-test" && !swap->count("--t-max")) {
        config.t_max = 20.0;
    }

    try {
        const auto records = run_experiment(config);
        cbitsim::io::write_records(records, config);
        if (!config.out_path.empty()) {
            std::cerr << "wrote " << records.size() << " records to " << config.out_path << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
