#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cbitsim/complex_canonical.hpp"
#include "cbitsim/hybrid.hpp"

namespace cbitsim::experiments {

enum class Backend { classical_cbit, quantum, hybrid_one_way, hybrid_ehrenfest };

std::string to_string(Backend backend);
Backend backend_from_string(const std::string& name);

struct ExperimentRecord {
    std::string experiment;
    Backend backend;
    std::string param_name;
    double param_value;
    std::vector<std::pair<std::string, double>> observables;
    std::uint64_t seed = 0;
};

// Fixed column schemas; every record of an experiment carries exactly
// these observables, in this order.
const std::vector<std::string>& observable_schema(const std::string& experiment);
const std::string& sweep_param_name(const std::string& experiment);

// Median of the hybrid (both variants pooled) best-over-time swap
// fidelities must stay below 1 - kSwapBestFidelityDelta. The margin is
// calibrated against a dense-grid reference scan of the swap dynamics;
// see the swap experiment tests.
inline constexpr double kSwapBestFidelityDelta = 0.01;

// Phase sweep of the two-beamsplitter interferometer on [0, 2pi], both
// endpoints included. backend must be classical_cbit or quantum.
std::vector<ExperimentRecord> run_mz_sweep(Backend backend, int n_points, Mode phase_arm);

// Random c-bit states (exact observable triples, zero dispersion) and
// random pure qubit states (Pauli variances summing to 2).
std::vector<ExperimentRecord> run_sharpness_report(int n_samples, std::uint64_t seed);

struct SwapSummary {
    int trials = 0;
    int integrator_failures = 0;
    double quantum_fidelity_min = 0.0;
    double hybrid_best_fidelity_min = 0.0;
    double hybrid_best_fidelity_median = 0.0;
    double hybrid_best_fidelity_max = 0.0;
    double one_way_best_fidelity_median = 0.0;
    double ehrenfest_best_fidelity_median = 0.0;
    double hybrid_max_entropy = 0.0;
};

struct SwapExperimentResult {
    std::vector<ExperimentRecord> records;
    SwapSummary summary;
};

// Per trial: a random c-bit / qubit pair, attempted swap under both
// hybrid variants, and the fully quantum SWAP reference on the same pair
// encoded as two qubits. spec.back_reaction is ignored (both variants
// run).
SwapExperimentResult run_swap_experiment(int n_trials, const hybrid::CouplingSpec& spec,
                                         std::uint64_t seed, double dt = 1e-2,
                                         double t_end = 20.0);

// Resonant vacuum-Rabi comparison from |e, 0>: the quantum qubit-mode
// evolution against the qubit driven by a classical mode amplitude from
// matched (vacuum) initial conditions. Raises an error if the quantum
// branch is truncation-sensitive (fock_dim vs fock_dim + 4 occupation
// disagreement above 1e-6).
std::vector<ExperimentRecord> run_jc_compare(double g, double t_max, int n_steps, int fock_dim);

// Integrator-order study: midpoint global error against the exact
// two-mode oscillator flow, plus mean-field energy drift of the standard
// Ehrenfest conservation benchmark at dt = 1e-3 and 5e-4.
std::vector<ExperimentRecord> run_convergence_study();

// The fixed configuration used for energy-conservation benchmarks: both
// parties tilted away from every symmetry axis so the integrator error
// shows its generic second-order behaviour.
hybrid::HybridState standard_conservation_state();

// Max relative mean-field energy deviation along a trajectory.
double max_energy_drift(const std::vector<hybrid::HybridState>& trajectory,
                        const hybrid::CouplingSpec& spec);

struct MzSummary {
    bool has_both_backends = false;
    double max_abs_diff = 0.0;       // row-wise classical vs quantum
    double i_l_at_zero = 0.0;
    bool equivalence_ok = false;
    bool phi0_ok = false;
};
MzSummary summarize_mz(const std::vector<ExperimentRecord>& records);

struct SharpnessSummary {
    double classical_max_residual = 0.0;
    double classical_max_variance = 0.0;
    double quantum_max_residual = 0.0;
    bool classical_sharp_ok = false;
    bool quantum_uncertain_ok = false;
};
SharpnessSummary summarize_sharpness(const std::vector<ExperimentRecord>& records);

struct JcSummary {
    double max_p_dev_from_cos2 = 0.0;   // quantum branch vs cos^2(gt)
    double entropy_at_quarter = 0.0;    // quantum entropy at gt closest to pi/4
    double semiclassical_max_entropy = 0.0;
    bool rabi_ok = false;
    bool entropy_ok = false;
    bool semiclassical_flat_ok = false;
};
JcSummary summarize_jc(const std::vector<ExperimentRecord>& records, double g);

struct ConvergenceSummary {
    double fitted_slope = 0.0;
    double drift_fine = 0.0;      // dt = 1e-3
    double drift_finer = 0.0;     // dt = 5e-4
    double drift_ratio = 0.0;
    bool slope_ok = false;
    bool drift_ok = false;
    bool ratio_ok = false;
};
ConvergenceSummary summarize_convergence(const std::vector<ExperimentRecord>& records);

SwapSummary summarize_swap(const std::vector<ExperimentRecord>& records);

}  // namespace cbitsim::experiments
