#pragma once

#include <utility>
#include <vector>

#include "cbitsim/complex_canonical.hpp"
#include "cbitsim/quantum.hpp"

namespace cbitsim::hybrid {

enum class BackReaction { one_way, ehrenfest };

// Half-open interval [start, end) during which the coupling is switched on.
struct Interval {
    double start;
    double end;
};

struct CouplingSpec {
    double g = 1.0;
    BackReaction back_reaction = BackReaction::one_way;
    // Empty schedule means always on. Intervals must be increasing and
    // non-overlapping.
    std::vector<Interval> schedule;
    // When false, the c-bit is frozen instead of following its own free
    // Hamiltonian. The free flow is a global phase, so the coupling
    // coefficients are identical either way; the flag exists to make that
    // explicit in experiments.
    bool cbit_free_evolution = true;
    // Optional qubit free precession (omega/2) Z.
    double qubit_omega = 0.0;

    bool coupling_on(double t) const;
};

// A classical complex bit and a qubit, a product at all times. There is
// no joint amplitude object anywhere in the hybrid dynamics.
struct HybridState {
    CBitState cbit;
    quantum::PureState qubit;
    double time = 0.0;
};

// The x and y bilinears of the c-bit, i.e. the real coefficients that
// multiply the qubit's X and Y operators in the coupling Hamiltonian.
// Computed as complex bilinears; the imaginary residue is checked against
// 1e-14 and dropped.
std::pair<double, double> coupling_coefficients(const CBitState& cbit);

// Evolves the hybrid under H_q(t) = g (x_c X + y_c Y) + (omega/2) Z.
//
// one_way: the coefficients (x_c, y_c) follow the c-bit's own free flow
// (they are constants of that flow); the qubit is advanced by the exact
// per-step unitary.
//
// ehrenfest: the c-bit additionally feels the mean-field back-reaction
// i dz/dt = dH/dz* with H = H_free(z) + g (x_c <X> + y_c <Y>). The free
// mode phase is applied as the exact quadratic map and the coupling field
// is integrated with the implicit midpoint rule, which keeps both norms
// and the mean-field energy tight over long horizons.
//
// The trajectory is sampled every dt, including the initial state; t_end
// is rounded to the nearest whole number of steps.
std::vector<HybridState> evolve_hybrid(const HybridState& state, const CouplingSpec& spec,
                                       double dt, double t_end);

// Total mean-field energy of a hybrid state under the given spec:
// H_free + (omega/2) <Z> + g_on(t) (x_c <X> + y_c <Y>).
double mean_field_energy(const HybridState& state, const CouplingSpec& spec);

struct SwapReport {
    double qubit_fidelity_final;
    double qubit_fidelity_best;
    double best_fidelity_time;
    // Euclidean distance between the final c-bit bilinears and the triple
    // they would have to reach for a successful swap.
    double cbit_target_distance;
    // Identically zero: the hybrid is a product at every sample.
    double max_entanglement_entropy;
};

// Attempts to swap the c-bit and qubit states under the coupling. The
// swap targets are defined by Bloch-triple matching: the qubit target is
// the pure state whose Bloch vector equals the initial c-bit's normalized
// bilinear triple, and the c-bit target triple is the initial qubit's
// Bloch vector.
SwapReport attempt_swap(const CBitState& cbit0, const quantum::PureState& qubit0,
                        const CouplingSpec& spec, double dt, double t_end);

struct EntanglementCertificate {
    // True by construction; asserted over the whole trajectory.
    bool product_at_every_sample;
    double hybrid_max_entropy;
    // Max entanglement entropy of the matched fully quantum two-qubit run
    // under H = g (X x X + Y x Y), same horizon and initial data.
    double quantum_contrast_max_entropy;
};

// Certifies that a hybrid trajectory carries no entanglement, and
// contrasts it with the genuinely quantum two-qubit evolution started
// from the same initial data. The contrast entropy is sampled at most
// ~2000 times across the horizon.
EntanglementCertificate no_entanglement_certificate(const std::vector<HybridState>& trajectory,
                                                    double g);

}  // namespace cbitsim::hybrid
