#include "cbitsim/hybrid.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cbitsim/integrators.hpp"

namespace cbitsim::hybrid {

namespace quantum = cbitsim::quantum;

namespace {

void validate_spec(const CouplingSpec& spec) {
    if (!std::isfinite(spec.g) || !std::isfinite(spec.qubit_omega)) {
        throw std::domain_error("CouplingSpec: non-finite parameter");
    }
    double prev_end = -std::numeric_limits<double>::infinity();
    for (const Interval& iv : spec.schedule) {
        if (!(iv.start < iv.end)) {
            throw std::invalid_argument("CouplingSpec: empty or reversed schedule interval");
        }
        if (iv.start < prev_end) {
            throw std::invalid_argument("CouplingSpec: schedule intervals must be increasing "
                                        "and non-overlapping");
        }
        prev_end = iv.end;
    }
}

// exp(-i (hx X + hy Y + hz Z) dt) applied to a qubit, in closed form.
void rotate_qubit(Complex& a0, Complex& a1, double hx, double hy, double hz, double dt) {
    const double r = std::sqrt(hx * hx + hy * hy + hz * hz);
    if (r == 0.0) {
        return;
    }
    const double angle = r * dt;
    const double c = std::cos(angle);
    const double s = std::sin(angle) / r;
    const Complex i_s(0.0, -s);
    const Complex b0 = c * a0 + i_s * (hz * a0 + Complex(hx, -hy) * a1);
    const Complex b1 = c * a1 + i_s * (Complex(hx, hy) * a0 - hz * a1);
    a0 = b0;
    a1 = b1;
}

// d/dt of the interaction-picture joint vector (z_L, z_R, psi_0, psi_1);
// the c-bit's free phase is peeled off exactly, so only the coupling and
// the qubit's own precession remain.
integrators::StateVector coupling_field(const integrators::StateVector& v, double g,
                                        double half_omega) {
    const Complex zl = v(0), zr = v(1), p0 = v(2), p1 = v(3);
    const Complex wq = std::conj(p0) * p1;
    const double qx = 2.0 * wq.real();
    const double qy = 2.0 * wq.imag();
    const Complex wc = zl * std::conj(zr);
    const double xc = 2.0 * wc.real();
    const double yc = -2.0 * wc.imag();
    const Complex minus_i(0.0, -1.0);
    integrators::StateVector d(4);
    d(0) = minus_i * (g * Complex(qx, -qy) * zr);
    d(1) = minus_i * (g * Complex(qx, qy) * zl);
    d(2) = minus_i * (half_omega * p0 + g * Complex(xc, -yc) * p1);
    d(3) = minus_i * (-half_omega * p1 + g * Complex(xc, yc) * p0);
    return d;
}

quantum::PureState normalized_qubit(Complex a0, Complex a1) {
    quantum::Vector v(2);
    const double n = std::sqrt(std::norm(a0) + std::norm(a1));
    v << a0 / n, a1 / n;
    return quantum::PureState(std::move(v));
}

}  // namespace

bool CouplingSpec::coupling_on(double t) const {
    if (schedule.empty()) {
        return true;
    }
    for (const Interval& iv : schedule) {
        if (t >= iv.start && t < iv.end) {
            return true;
        }
    }
    return false;
}

std::pair<double, double> coupling_coefficients(const CBitState& cbit) {
    const Complex w = cbit.left() * std::conj(cbit.right());
    const Complex x = w + std::conj(w);
    const Complex y = Complex(0.0, 1.0) * (w - std::conj(w));
    if (std::abs(x.imag()) > 1e-14 || std::abs(y.imag()) > 1e-14) {
        throw std::runtime_error("coupling_coefficients: bilinear has imaginary residue");
    }
    return {x.real(), y.real()};
}

double mean_field_energy(const HybridState& state, const CouplingSpec& spec) {
    const auto [xc, yc] = coupling_coefficients(state.cbit);
    const BlochTriple q = quantum::bloch_vector(state.qubit);
    const double g_eff = spec.coupling_on(state.time) ? spec.g : 0.0;
    return state.cbit.norm_squared() + 0.5 * spec.qubit_omega * q.z +
           g_eff * (xc * q.x + yc * q.y);
}

std::vector<HybridState> evolve_hybrid(const HybridState& state, const CouplingSpec& spec,
                                       double dt, double t_end) {
    validate_spec(spec);
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw std::invalid_argument("evolve_hybrid: dt must be positive and finite");
    }
    if (!(t_end >= state.time)) {
        throw std::invalid_argument("evolve_hybrid: t_end must not precede the state time");
    }
    const long n_steps = std::lround((t_end - state.time) / dt);

    std::vector<HybridState> trajectory;
    trajectory.reserve(static_cast<std::size_t>(n_steps) + 1);
    trajectory.push_back(state);

    if (spec.back_reaction == BackReaction::one_way) {
        CBitState cbit = state.cbit;
        Complex a0 = state.qubit.amplitude(0);
        Complex a1 = state.qubit.amplitude(1);
        for (long i = 0; i < n_steps; ++i) {
            const double t = state.time + static_cast<double>(i) * dt;
            const double g_eff = spec.coupling_on(t + 0.5 * dt) ? spec.g : 0.0;
            const auto [xc, yc] = coupling_coefficients(cbit);
            rotate_qubit(a0, a1, g_eff * xc, g_eff * yc, 0.5 * spec.qubit_omega, dt);
            if (spec.cbit_free_evolution) {
                cbit = free_evolution(cbit, dt);
            }
            trajectory.push_back(HybridState{cbit, normalized_qubit(a0, a1), t + dt});
        }
        return trajectory;
    }

    // Ehrenfest branch: midpoint on the interaction-picture joint vector.
    integrators::StateVector v(4);
    v << state.cbit.left(), state.cbit.right(), state.qubit.amplitude(0),
        state.qubit.amplitude(1);
    integrators::StepperConfig config;
    config.dt = dt;
    const double half_omega = 0.5 * spec.qubit_omega;
    for (long i = 0; i < n_steps; ++i) {
        const double t = state.time + static_cast<double>(i) * dt;
        const double g_eff = spec.coupling_on(t + 0.5 * dt) ? spec.g : 0.0;
        const auto field = [g_eff, half_omega](const integrators::StateVector& s) {
            return coupling_field(s, g_eff, half_omega);
        };
        try {
            v = integrators::implicit_midpoint_step(v, field, config);
        } catch (const std::runtime_error& err) {
            throw std::runtime_error("evolve_hybrid: step at t = " + std::to_string(t) +
                                     " failed: " + err.what());
        }
        const double free_phase =
            spec.cbit_free_evolution ? static_cast<double>(i + 1) * dt : 0.0;
        const Complex phase = std::polar(1.0, -free_phase);
        trajectory.push_back(HybridState{CBitState::with_norm(phase * v(0), phase * v(1)),
                                         normalized_qubit(v(2), v(3)), t + dt});
    }
    return trajectory;
}

SwapReport attempt_swap(const CBitState& cbit0, const quantum::PureState& qubit0,
                        const CouplingSpec& spec, double dt, double t_end) {
    const BlochTriple c_triple = bilinears(cbit0);
    const double c_norm = cbit0.norm_squared();
    const quantum::PureState qubit_target = quantum::pure_from_bloch(
        BlochTriple{c_triple.x / c_norm, c_triple.y / c_norm, c_triple.z / c_norm});
    const BlochTriple cbit_target_triple = quantum::bloch_vector(qubit0);

    const auto trajectory = evolve_hybrid(HybridState{cbit0, qubit0, 0.0}, spec, dt, t_end);

    SwapReport report{};
    report.qubit_fidelity_best = -1.0;
    for (const HybridState& sample : trajectory) {
        const double f = quantum::fidelity(sample.qubit, qubit_target);
        if (f > report.qubit_fidelity_best) {
            report.qubit_fidelity_best = f;
            report.best_fidelity_time = sample.time;
        }
    }
    report.qubit_fidelity_final = quantum::fidelity(trajectory.back().qubit, qubit_target);
    const BlochTriple c_final = bilinears(trajectory.back().cbit);
    const double dx = c_final.x - cbit_target_triple.x;
    const double dy = c_final.y - cbit_target_triple.y;
    const double dz = c_final.z - cbit_target_triple.z;
    report.cbit_target_distance = std::sqrt(dx * dx + dy * dy + dz * dz);
    report.max_entanglement_entropy = 0.0;
    return report;
}

EntanglementCertificate no_entanglement_certificate(const std::vector<HybridState>& trajectory,
                                                    double g) {
    if (trajectory.empty()) {
        throw std::invalid_argument("no_entanglement_certificate: empty trajectory");
    }

    EntanglementCertificate cert{};
    cert.product_at_every_sample = true;
    cert.hybrid_max_entropy = 0.0;
    for (const HybridState& sample : trajectory) {
        // The product structure is representational: a HybridState has no
        // joint amplitude object. What can be checked is that both factors
        // are intact states.
        if (!(sample.cbit.norm_squared() > 0.0) ||
            std::abs(sample.qubit.amplitudes().norm() - 1.0) > 1e-9) {
            cert.product_at_every_sample = false;
        }
    }

    const HybridState& first = trajectory.front();
    const BlochTriple c = bilinears(first.cbit);
    const double n = first.cbit.norm_squared();
    const quantum::PureState party_a =
        quantum::pure_from_bloch(BlochTriple{c.x / n, c.y / n, c.z / n});
    const quantum::PureState joint0 = quantum::tensor(party_a, first.qubit);

    const quantum::Operator xx =
        quantum::tensor(quantum::pauli(quantum::Axis::X), quantum::pauli(quantum::Axis::X));
    const quantum::Operator yy =
        quantum::tensor(quantum::pauli(quantum::Axis::Y), quantum::pauli(quantum::Axis::Y));
    const quantum::Operator h(g * (xx.entries() + yy.entries()),
                              quantum::OperatorKind::hermitian);
    const quantum::UnitaryEvolver evolver(h);

    const std::size_t stride = std::max<std::size_t>(1, (trajectory.size() - 1) / 2000);
    cert.quantum_contrast_max_entropy = 0.0;
    for (std::size_t i = 0; i < trajectory.size(); i += stride) {
        const double t = trajectory[i].time - first.time;
        const double entropy =
            quantum::entanglement_entropy(evolver.at(joint0, t), 2, 2);
        cert.quantum_contrast_max_entropy = std::max(cert.quantum_contrast_max_entropy, entropy);
    }
    return cert;
}

}  // namespace cbitsim::hybrid
