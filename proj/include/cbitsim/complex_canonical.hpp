#pragma once

#include <complex>

namespace cbitsim {

using Complex = std::complex<double>;

// Selects one of the two interferometer arms / mode amplitudes.
enum class Mode { L, R };

struct RealCanonicalPair {
    double q;
    double p;
};

// Real observable triple built from the mode bilinears
//   x = z_L z_R* + z_R z_L*,  y = i(z_L z_R* - z_R z_L*),  z = |z_L|^2 - |z_R|^2.
// For any state, x^2 + y^2 + z^2 = (|z_L|^2 + |z_R|^2)^2.
struct BlochTriple {
    double x;
    double y;
    double z;

    double norm() const;
};

// The classical complex bit: two mode amplitudes (z_L, z_R) evolving under
// Hamiltonian mechanics in complex canonical coordinates. Conjugates are
// never stored; they are derived wherever an equation needs them.
class CBitState {
  public:
    // Single-photon convention: |z_L|^2 + |z_R|^2 = 1 within 1e-12.
    CBitState(Complex z_left, Complex z_right);

    // Relaxed construction: any finite, strictly positive norm.
    static CBitState with_norm(Complex z_left, Complex z_right);

    Complex left() const { return z_l_; }
    Complex right() const { return z_r_; }

    // |z_L|^2 + |z_R|^2
    double norm_squared() const;

  private:
    struct Unchecked {};
    CBitState(Complex l, Complex r, Unchecked) : z_l_(l), z_r_(r) {}

    Complex z_l_;
    Complex z_r_;
};

// z = (q + ip)/sqrt(2). Throws std::domain_error on non-finite input.
Complex from_real_canonical(double q, double p);

// Inverse map: q = sqrt(2) Re z, p = sqrt(2) Im z.
RealCanonicalPair to_real_canonical(Complex z);

// H = z_L z_L* + z_R z_R*, equal to (q^2 + p^2)/2 summed over both modes.
double oscillator_energy(const CBitState& state);

// Flow of the free Hamiltonian for time t: every mode picks up e^{-it}.
// The phase is global, so all bilinears are invariant.
CBitState free_evolution(const CBitState& state, double t);

// z_L -> (z_L + z_R)/sqrt(2), z_R -> (z_L - z_R)/sqrt(2). An involution;
// exchanges the z and x bilinears.
CBitState hadamard(const CBitState& state);

// Multiplies the selected mode amplitude by e^{i theta}. Leaves z and
// x^2 + y^2 invariant; a phase on L rotates the (x, y) pair by -theta,
// a phase on R rotates it by +theta.
CBitState phase_gate(const CBitState& state, double theta, Mode mode);

// All three components at once, as exact reals.
BlochTriple bilinears(const CBitState& state);

// Inverse of bilinears on unit triples: the state (unique up to a global
// phase) whose bilinears equal the given triple. Requires |triple| = 1
// within 1e-9.
CBitState cbit_from_bloch(const BlochTriple& triple);

}  // namespace cbitsim
