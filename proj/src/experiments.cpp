#include "cbitsim/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

#include "cbitsim/integrators.hpp"
#include "cbitsim/random.hpp"

namespace cbitsim::experiments {

namespace quantum = cbitsim::quantum;
namespace hybrid = cbitsim::hybrid;

namespace {

constexpr const char* kMz = "mz-sweep";
constexpr const char* kSharpness = "sharpness";
constexpr const char* kSwap = "swap-test";
constexpr const char* kJc = "jc-compare";
constexpr const char* kConvergence = "convergence";

double median_of(std::vector<double> values) {
    if (values.empty()) {
        return 0.0;
    }
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return (n % 2 == 1) ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

std::string to_string(Backend backend) {
    switch (backend) {
        case Backend::classical_cbit:
            return "classical_cbit";
        case Backend::quantum:
            return "quantum";
        case Backend::hybrid_one_way:
            return "hybrid_one_way";
        case Backend::hybrid_ehrenfest:
            return "hybrid_ehrenfest";
    }
    throw std::logic_error("unreachable backend");
}

Backend backend_from_string(const std::string& name) {
    if (name == "classical_cbit") return Backend::classical_cbit;
    if (name == "quantum") return Backend::quantum;
    if (name == "hybrid_one_way") return Backend::hybrid_one_way;
    if (name == "hybrid_ehrenfest") return Backend::hybrid_ehrenfest;
    throw std::invalid_argument("unknown backend: " + name);
}

const std::vector<std::string>& observable_schema(const std::string& experiment) {
    static const std::map<std::string, std::vector<std::string>> schemas = {
        {kMz, {"i_L", "i_R"}},
        {kSharpness, {"x", "y", "z", "var_x", "var_y", "var_z", "residual"}},
        {kSwap, {"fidelity_final", "fidelity_best", "max_entropy", "target_distance"}},
        {kJc, {"p_excited", "entropy"}},
        {kConvergence, {"error"}},
    };
    const auto it = schemas.find(experiment);
    if (it == schemas.end()) {
        throw std::invalid_argument("unknown experiment: " + experiment);
    }
    return it->second;
}

const std::string& sweep_param_name(const std::string& experiment) {
    static const std::map<std::string, std::string> params = {
        {kMz, "phi"},         {kSharpness, "sample"}, {kSwap, "trial"},
        {kJc, "t"},           {kConvergence, "dt"},
    };
    const auto it = params.find(experiment);
    if (it == params.end()) {
        throw std::invalid_argument("unknown experiment: " + experiment);
    }
    return it->second;
}

std::vector<ExperimentRecord> run_mz_sweep(Backend backend, int n_points, Mode phase_arm) {
    if (backend != Backend::classical_cbit && backend != Backend::quantum) {
        throw std::invalid_argument("run_mz_sweep: backend must be classical_cbit or quantum");
    }
    if (n_points < 2) {
        throw std::invalid_argument("run_mz_sweep: need at least 2 points");
    }
    std::vector<ExperimentRecord> records;
    records.reserve(static_cast<std::size_t>(n_points));
    for (int k = 0; k < n_points; ++k) {
        const double phi =
            2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_points - 1);
        double i_l = 0.0;
        double i_r = 0.0;
        if (backend == Backend::classical_cbit) {
            const CBitState out =
                hadamard(phase_gate(hadamard(CBitState(1.0, 0.0)), phi, phase_arm));
            i_l = std::norm(out.left());
            i_r = std::norm(out.right());
        } else {
            const quantum::PureState out = quantum::mz_quantum(phi, phase_arm);
            i_l = std::norm(out.amplitude(0));
            i_r = std::norm(out.amplitude(1));
        }
        records.push_back({kMz, backend, "phi", phi, {{"i_L", i_l}, {"i_R", i_r}}, 0});
    }
    return records;
}

std::vector<ExperimentRecord> run_sharpness_report(int n_samples, std::uint64_t seed) {
    if (n_samples < 1) {
        throw std::invalid_argument("run_sharpness_report: need at least 1 sample");
    }
    Rng rng(seed);
    std::vector<ExperimentRecord> records;
    records.reserve(2 * static_cast<std::size_t>(n_samples));

    for (int i = 0; i < n_samples; ++i) {
        const CBitState state = rng.cbit_state();
        const BlochTriple b = bilinears(state);
        const double residual = std::abs(b.x * b.x + b.y * b.y + b.z * b.z - 1.0);
        records.push_back({kSharpness,
                           Backend::classical_cbit,
                           "sample",
                           static_cast<double>(i),
                           {{"x", b.x},
                            {"y", b.y},
                            {"z", b.z},
                            {"var_x", 0.0},
                            {"var_y", 0.0},
                            {"var_z", 0.0},
                            {"residual", residual}},
                           seed});
    }

    const quantum::Operator sx = quantum::pauli(quantum::Axis::X);
    const quantum::Operator sy = quantum::pauli(quantum::Axis::Y);
    const quantum::Operator sz = quantum::pauli(quantum::Axis::Z);
    for (int i = 0; i < n_samples; ++i) {
        const quantum::PureState psi = rng.qubit_state();
        const double vx = quantum::variance(sx, psi);
        const double vy = quantum::variance(sy, psi);
        const double vz = quantum::variance(sz, psi);
        const double residual = std::abs(vx + vy + vz - 2.0);
        records.push_back({kSharpness,
                           Backend::quantum,
                           "sample",
                           static_cast<double>(i),
                           {{"x", quantum::expectation(sx, psi)},
                            {"y", quantum::expectation(sy, psi)},
                            {"z", quantum::expectation(sz, psi)},
                            {"var_x", vx},
                            {"var_y", vy},
                            {"var_z", vz},
                            {"residual", residual}},
                           seed});
    }
    return records;
}

namespace {

// Bloch distance of the kept subsystem of a product state from a target
// triple, via the reduced density matrix.
double reduced_bloch_distance(const quantum::PureState& joint, quantum::Subsystem keep,
                              const BlochTriple& target) {
    const quantum::DensityMatrix reduced =
        quantum::partial_trace(quantum::DensityMatrix::from_pure(joint), 2, 2, keep);
    const double bx = quantum::expectation(quantum::pauli(quantum::Axis::X), reduced);
    const double by = quantum::expectation(quantum::pauli(quantum::Axis::Y), reduced);
    const double bz = quantum::expectation(quantum::pauli(quantum::Axis::Z), reduced);
    const double dx = bx - target.x;
    const double dy = by - target.y;
    const double dz = bz - target.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

}  // namespace

SwapExperimentResult run_swap_experiment(int n_trials, const hybrid::CouplingSpec& spec,
                                         std::uint64_t seed, double dt, double t_end) {
    if (n_trials < 1) {
        throw std::invalid_argument("run_swap_experiment: need at least 1 trial");
    }
    Rng rng(seed);
    SwapExperimentResult result;
    result.records.reserve(3 * static_cast<std::size_t>(n_trials));

    for (int trial = 0; trial < n_trials; ++trial) {
        const CBitState cbit0 = rng.cbit_state();
        const quantum::PureState qubit0 = rng.qubit_state();

        for (const auto variant : {hybrid::BackReaction::one_way, hybrid::BackReaction::ehrenfest}) {
            hybrid::CouplingSpec variant_spec = spec;
            variant_spec.back_reaction = variant;
            const Backend backend = (variant == hybrid::BackReaction::one_way)
                                        ? Backend::hybrid_one_way
                                        : Backend::hybrid_ehrenfest;
            try {
                const hybrid::SwapReport report =
                    hybrid::attempt_swap(cbit0, qubit0, variant_spec, dt, t_end);
                result.records.push_back({kSwap,
                                          backend,
                                          "trial",
                                          static_cast<double>(trial),
                                          {{"fidelity_final", report.qubit_fidelity_final},
                                           {"fidelity_best", report.qubit_fidelity_best},
                                           {"max_entropy", report.max_entanglement_entropy},
                                           {"target_distance", report.cbit_target_distance}},
                                          seed});
            } catch (const std::runtime_error&) {
                // Counted in the summary; the batch keeps going.
            }
        }

        // Fully quantum reference: encode the c-bit as a qubit and swap.
        const BlochTriple c = bilinears(cbit0);
        const double n = cbit0.norm_squared();
        const quantum::PureState party_a =
            quantum::pure_from_bloch(BlochTriple{c.x / n, c.y / n, c.z / n});
        const quantum::PureState swapped =
            quantum::apply(quantum::swap_gate(), quantum::tensor(party_a, qubit0));
        const quantum::PureState target = quantum::tensor(qubit0, party_a);
        result.records.push_back({kSwap,
                                  Backend::quantum,
                                  "trial",
                                  static_cast<double>(trial),
                                  {{"fidelity_final", quantum::fidelity(swapped, target)},
                                   {"fidelity_best", quantum::fidelity(swapped, target)},
                                   {"max_entropy", quantum::entanglement_entropy(swapped, 2, 2)},
                                   {"target_distance",
                                    reduced_bloch_distance(swapped, quantum::Subsystem::A,
                                                           quantum::bloch_vector(qubit0))}},
                                  seed});
    }
    result.summary = summarize_swap(result.records);
    return result;
}

SwapSummary summarize_swap(const std::vector<ExperimentRecord>& records) {
    SwapSummary summary;
    summary.quantum_fidelity_min = 1.0;
    summary.hybrid_best_fidelity_min = 1.0;
    std::vector<double> pooled_best;
    std::vector<double> one_way_best;
    std::vector<double> ehrenfest_best;
    int hybrid_rows = 0;
    for (const auto& r : records) {
        const double fidelity_best = r.observables.at(1).second;
        if (r.backend == Backend::quantum) {
            ++summary.trials;
            summary.quantum_fidelity_min =
                std::min(summary.quantum_fidelity_min, r.observables.at(0).second);
        } else {
            ++hybrid_rows;
            pooled_best.push_back(fidelity_best);
            (r.backend == Backend::hybrid_one_way ? one_way_best : ehrenfest_best)
                .push_back(fidelity_best);
            summary.hybrid_max_entropy =
                std::max(summary.hybrid_max_entropy, r.observables.at(2).second);
        }
    }
    if (!pooled_best.empty()) {
        const auto minmax = std::minmax_element(pooled_best.begin(), pooled_best.end());
        summary.hybrid_best_fidelity_min = *minmax.first;
        summary.hybrid_best_fidelity_max = *minmax.second;
        summary.hybrid_best_fidelity_median = median_of(pooled_best);
    }
    summary.one_way_best_fidelity_median = median_of(one_way_best);
    summary.ehrenfest_best_fidelity_median = median_of(ehrenfest_best);
    summary.integrator_failures = 2 * summary.trials - hybrid_rows;
    return summary;
}

namespace {

double excited_probability(const quantum::PureState& psi, int fock_dim) {
    double p = 0.0;
    for (int n = 0; n < fock_dim; ++n) {
        p += std::norm(psi.amplitude(n));
    }
    return p;
}

std::vector<double> jc_occupation_curve(double g, double t_max, int n_steps, int fock_dim) {
    const quantum::Operator h = quantum::jaynes_cummings_hamiltonian(1.0, 1.0, g, fock_dim);
    const quantum::UnitaryEvolver evolver(h);
    const quantum::PureState psi0 = quantum::PureState::basis(2 * fock_dim, 0);
    std::vector<double> curve;
    curve.reserve(static_cast<std::size_t>(n_steps) + 1);
    for (int k = 0; k <= n_steps; ++k) {
        const double t = t_max * static_cast<double>(k) / static_cast<double>(n_steps);
        curve.push_back(excited_probability(evolver.at(psi0, t), fock_dim));
    }
    return curve;
}

}  // namespace

std::vector<ExperimentRecord> run_jc_compare(double g, double t_max, int n_steps, int fock_dim) {
    if (fock_dim < 2) {
        throw std::invalid_argument("run_jc_compare: fock_dim must be >= 2");
    }
    if (n_steps < 1 || !(t_max > 0.0) || !std::isfinite(g)) {
        throw std::invalid_argument("run_jc_compare: invalid sweep parameters");
    }

    const std::vector<double> occupation = jc_occupation_curve(g, t_max, n_steps, fock_dim);
    const std::vector<double> occupation_wider =
        jc_occupation_curve(g, t_max, n_steps, fock_dim + 4);
    double truncation_dev = 0.0;
    for (int k = 0; k <= n_steps; ++k) {
        truncation_dev = std::max(truncation_dev,
                                  std::abs(occupation[static_cast<std::size_t>(k)] -
                                           occupation_wider[static_cast<std::size_t>(k)]));
    }
    if (truncation_dev > 1e-6) {
        throw std::runtime_error("run_jc_compare: occupation is truncation-sensitive (dev " +
                                 std::to_string(truncation_dev) + "); increase fock_dim");
    }

    std::vector<ExperimentRecord> records;
    records.reserve(2 * (static_cast<std::size_t>(n_steps) + 1));

    const quantum::Operator h = quantum::jaynes_cummings_hamiltonian(1.0, 1.0, g, fock_dim);
    const quantum::UnitaryEvolver evolver(h);
    const quantum::PureState psi0 = quantum::PureState::basis(2 * fock_dim, 0);
    for (int k = 0; k <= n_steps; ++k) {
        const double t = t_max * static_cast<double>(k) / static_cast<double>(n_steps);
        const quantum::PureState psi = evolver.at(psi0, t);
        records.push_back({kJc,
                           Backend::quantum,
                           "t",
                           t,
                           {{"p_excited", excited_probability(psi, fock_dim)},
                            {"entropy", quantum::entanglement_entropy(psi, 2, fock_dim)}},
                           0});
    }

    // Semiclassical branch: the qubit driven by one classical mode
    // amplitude, mean-field back-reaction, matched (vacuum) initial data.
    const double sample_dt = t_max / static_cast<double>(n_steps);
    const int substeps = std::max(1, static_cast<int>(std::ceil(sample_dt / 1e-2)));
    integrators::StepperConfig config;
    config.dt = sample_dt / static_cast<double>(substeps);
    const double omega = 1.0;
    const double nu = 1.0;
    const auto field = [g, omega, nu](const integrators::StateVector& v) {
        const Complex z = v(0), p0 = v(1), p1 = v(2);
        const Complex minus_i(0.0, -1.0);
        integrators::StateVector d(3);
        d(0) = minus_i * (nu * z + g * std::conj(p1) * p0);
        d(1) = minus_i * (0.5 * omega * p0 + g * z * p1);
        d(2) = minus_i * (-0.5 * omega * p1 + g * std::conj(z) * p0);
        return d;
    };
    integrators::StateVector v(3);
    v << Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(0.0, 0.0);
    for (int k = 0; k <= n_steps; ++k) {
        const double t = t_max * static_cast<double>(k) / static_cast<double>(n_steps);
        const double p_exc = std::norm(v(1)) / (std::norm(v(1)) + std::norm(v(2)));
        records.push_back(
            {kJc, Backend::hybrid_ehrenfest, "t", t, {{"p_excited", p_exc}, {"entropy", 0.0}}, 0});
        if (k < n_steps) {
            for (int s = 0; s < substeps; ++s) {
                v = integrators::implicit_midpoint_step(v, field, config);
            }
        }
    }
    return records;
}

hybrid::HybridState standard_conservation_state() {
    const double a = std::numbers::pi / 12.0;
    const double b = std::numbers::pi / 8.0;
    quantum::Vector q(2);
    q << Complex(std::cos(b), 0.0), std::polar(std::sin(b), std::numbers::pi / 5.0);
    return hybrid::HybridState{CBitState(std::cos(a), std::sin(a)),
                               quantum::PureState(std::move(q)), 0.0};
}

double max_energy_drift(const std::vector<hybrid::HybridState>& trajectory,
                        const hybrid::CouplingSpec& spec) {
    if (trajectory.empty()) {
        throw std::invalid_argument("max_energy_drift: empty trajectory");
    }
    const double e0 = hybrid::mean_field_energy(trajectory.front(), spec);
    double drift = 0.0;
    for (const hybrid::HybridState& sample : trajectory) {
        drift = std::max(drift, std::abs(hybrid::mean_field_energy(sample, spec) - e0));
    }
    return drift / std::abs(e0);
}

std::vector<ExperimentRecord> run_convergence_study() {
    std::vector<ExperimentRecord> records;

    // Midpoint global error against the exact two-mode oscillator flow.
    integrators::FlowProblem oscillator;
    integrators::StateVector v0(2);
    v0 << Complex(0.6, 0.0), Complex(0.0, 0.8);
    oscillator.initial = v0;
    oscillator.field = [](const integrators::StateVector& v) {
        return integrators::StateVector(Complex(0.0, -1.0) * v);
    };
    oscillator.exact = [v0](double t) {
        return integrators::StateVector(std::polar(1.0, -t) * v0);
    };
    const std::vector<double> dts = {0.08, 0.04, 0.02, 0.01, 0.005};
    const integrators::ConvergenceTable table =
        integrators::convergence_report(oscillator, 1.0, dts);
    for (const auto& row : table.rows) {
        records.push_back(
            {kConvergence, Backend::classical_cbit, "dt", row.dt, {{"error", row.error}}, 0});
    }

    // Mean-field energy drift of the standard Ehrenfest benchmark.
    hybrid::CouplingSpec spec;
    spec.back_reaction = hybrid::BackReaction::ehrenfest;
    const hybrid::HybridState s0 = standard_conservation_state();
    for (const double dt : {1e-3, 5e-4}) {
        const auto trajectory = hybrid::evolve_hybrid(s0, spec, dt, 20.0);
        records.push_back({kConvergence,
                           Backend::hybrid_ehrenfest,
                           "dt",
                           dt,
                           {{"error", max_energy_drift(trajectory, spec)}},
                           0});
    }
    return records;
}

MzSummary summarize_mz(const std::vector<ExperimentRecord>& records) {
    MzSummary summary;
    std::map<double, std::pair<double, double>> classical;
    std::map<double, std::pair<double, double>> quant;
    for (const auto& r : records) {
        const double i_l = r.observables.at(0).second;
        const double i_r = r.observables.at(1).second;
        if (r.backend == Backend::classical_cbit) {
            classical[r.param_value] = {i_l, i_r};
        } else if (r.backend == Backend::quantum) {
            quant[r.param_value] = {i_l, i_r};
        }
        if (r.param_value == 0.0) {
            summary.i_l_at_zero = i_l;
        }
    }
    summary.has_both_backends = !classical.empty() && !quant.empty();
    if (summary.has_both_backends) {
        for (const auto& [phi, c] : classical) {
            const auto it = quant.find(phi);
            if (it == quant.end()) {
                continue;
            }
            summary.max_abs_diff = std::max(summary.max_abs_diff,
                                            std::abs(c.first - it->second.first));
            summary.max_abs_diff = std::max(summary.max_abs_diff,
                                            std::abs(c.second - it->second.second));
        }
        summary.equivalence_ok = summary.max_abs_diff < 1e-10;
    }
    summary.phi0_ok = std::abs(summary.i_l_at_zero - 1.0) < 1e-12;
    return summary;
}

SharpnessSummary summarize_sharpness(const std::vector<ExperimentRecord>& records) {
    SharpnessSummary summary;
    for (const auto& r : records) {
        const double residual = r.observables.back().second;
        if (r.backend == Backend::classical_cbit) {
            summary.classical_max_residual = std::max(summary.classical_max_residual, residual);
            for (int k = 3; k < 6; ++k) {
                summary.classical_max_variance =
                    std::max(summary.classical_max_variance, std::abs(r.observables.at(k).second));
            }
        } else {
            summary.quantum_max_residual = std::max(summary.quantum_max_residual, residual);
        }
    }
    summary.classical_sharp_ok =
        summary.classical_max_residual < 1e-10 && summary.classical_max_variance == 0.0;
    summary.quantum_uncertain_ok = summary.quantum_max_residual < 1e-10;
    return summary;
}

JcSummary summarize_jc(const std::vector<ExperimentRecord>& records, double g) {
    JcSummary summary;
    const double quarter = 0.25 * std::numbers::pi / g;
    double best_gap = std::numeric_limits<double>::infinity();
    for (const auto& r : records) {
        const double p = r.observables.at(0).second;
        const double entropy = r.observables.at(1).second;
        if (r.backend == Backend::quantum) {
            const double c = std::cos(g * r.param_value);
            summary.max_p_dev_from_cos2 =
                std::max(summary.max_p_dev_from_cos2, std::abs(p - c * c));
            const double gap = std::abs(r.param_value - quarter);
            if (gap < best_gap) {
                best_gap = gap;
                summary.entropy_at_quarter = entropy;
            }
        } else {
            summary.semiclassical_max_entropy =
                std::max(summary.semiclassical_max_entropy, entropy);
        }
    }
    summary.rabi_ok = summary.max_p_dev_from_cos2 < 1e-8;
    summary.entropy_ok = std::abs(summary.entropy_at_quarter - std::numbers::ln2) < 1e-6;
    summary.semiclassical_flat_ok = summary.semiclassical_max_entropy == 0.0;
    return summary;
}

ConvergenceSummary summarize_convergence(const std::vector<ExperimentRecord>& records) {
    ConvergenceSummary summary;
    double sum_lx = 0.0, sum_ly = 0.0, sum_lxx = 0.0, sum_lxy = 0.0;
    int n = 0;
    for (const auto& r : records) {
        const double error = r.observables.at(0).second;
        if (r.backend == Backend::classical_cbit) {
            const double lx = std::log(r.param_value);
            const double ly = std::log(std::max(error, 1e-300));
            sum_lx += lx;
            sum_ly += ly;
            sum_lxx += lx * lx;
            sum_lxy += lx * ly;
            ++n;
        } else if (r.backend == Backend::hybrid_ehrenfest) {
            if (r.param_value == 1e-3) {
                summary.drift_fine = error;
            } else if (r.param_value == 5e-4) {
                summary.drift_finer = error;
            }
        }
    }
    if (n >= 2) {
        const double dn = static_cast<double>(n);
        summary.fitted_slope =
            (dn * sum_lxy - sum_lx * sum_ly) / (dn * sum_lxx - sum_lx * sum_lx);
    }
    if (summary.drift_finer > 0.0) {
        summary.drift_ratio = summary.drift_fine / summary.drift_finer;
    }
    summary.slope_ok = std::abs(summary.fitted_slope - 2.0) <= 0.2;
    summary.drift_ok = summary.drift_fine < 1e-8;
    summary.ratio_ok = summary.drift_ratio >= 2.5 && summary.drift_ratio <= 6.0;
    return summary;
}

}  // namespace cbitsim::experiments
