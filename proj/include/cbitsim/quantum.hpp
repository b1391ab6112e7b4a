#pragma once

#include <Eigen/Dense>

#include "cbitsim/complex_canonical.hpp"

namespace cbitsim::quantum {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Kronecker products refuse to build anything larger than this.
inline constexpr int kTensorDimCap = 4096;

enum class Axis { X, Y, Z };
enum class Subsystem { A, B };
enum class OperatorKind { unitary, hermitian, general };

// Normalized state vector of a finite-dimensional system.
class PureState {
  public:
    explicit PureState(Vector amplitudes);  // unit norm within 1e-12
    static PureState basis(int dim, int index);

    int dim() const { return static_cast<int>(amps_.size()); }
    const Vector& amplitudes() const { return amps_; }
    Complex amplitude(int i) const { return amps_(i); }

  private:
    Vector amps_;
};

// Hermitian, trace-one, positive-semidefinite (within tolerance) matrix.
class DensityMatrix {
  public:
    explicit DensityMatrix(Matrix entries);
    static DensityMatrix from_pure(const PureState& psi);

    int dim() const { return static_cast<int>(m_.rows()); }
    const Matrix& entries() const { return m_; }

  private:
    Matrix m_;
};

// Square matrix with a declared kind that is validated at construction
// (U U^dag = I for unitary, A = A^dag for hermitian, both within 1e-10).
class Operator {
  public:
    Operator(Matrix entries, OperatorKind kind);

    int dim() const { return static_cast<int>(m_.rows()); }
    const Matrix& entries() const { return m_; }
    OperatorKind kind() const { return kind_; }

    bool is_unitary(double tol = 1e-10) const;
    bool is_hermitian(double tol = 1e-10) const;

  private:
    Matrix m_;
    OperatorKind kind_;
};

// Truncated bosonic mode: annihilation operator on the first `truncation`
// Fock levels. a^dag a is diagonal with entries 0..truncation-1; the
// commutator [a, a^dag] equals the identity except for the last diagonal
// entry, which is -(truncation - 1).
struct FockMode {
    int truncation;
    Operator annihilation;
};
FockMode fock_mode(int truncation);

Operator pauli(Axis axis);
Operator identity_operator(int dim);
Operator hadamard_gate();

// diag(e^{i theta}, 1) for arm L, diag(1, e^{i theta}) for arm R.
Operator arm_phase_gate(double theta, Mode arm);

// Two-qubit SWAP, subsystem-A-major index convention.
Operator swap_gate();

// gate * state, renormalized. Requires a numerically unitary gate.
PureState apply(const Operator& gate, const PureState& state);

// Mach-Zehnder on the arm basis {|L> = |0>, |R> = |1>}: Hadamard, phase
// e^{i phi} on the chosen arm, Hadamard, applied to |L>. Occupation
// probabilities are P_L = cos^2(phi/2), P_R = sin^2(phi/2).
PureState mz_quantum(double phi, Mode phase_arm);

double expectation(const Operator& op, const PureState& state);
double expectation(const Operator& op, const DensityMatrix& rho);
double variance(const Operator& op, const PureState& state);
double variance(const Operator& op, const DensityMatrix& rho);

// Kronecker composite, subsystem A major: index = i_A * dim_B + i_B.
PureState tensor(const PureState& a, const PureState& b);
Operator tensor(const Operator& a, const Operator& b);

DensityMatrix partial_trace(const DensityMatrix& rho, int dim_a, int dim_b, Subsystem keep);

// Von Neumann entropy (nats) of the reduced state of a bipartite pure
// state, via the Schmidt decomposition. Schmidt weights below 1e-12 are
// treated as exact zeros.
double entanglement_entropy(const PureState& psi, int dim_a, int dim_b);

// Von Neumann entropy (nats) of a density matrix. Eigenvalues in
// [-1e-10, 0) are clipped to zero; more negative ones are an error.
double vn_entropy(const DensityMatrix& rho);

double purity(const DensityMatrix& rho);

// |<a|b>|^2
double fidelity(const PureState& a, const PureState& b);

// H = (omega/2) Z x I + nu I x a^dag a + g (sigma+ x a + sigma- x a^dag)
// on the (qubit x mode) product space, qubit major, excited state |0>.
Operator jaynes_cummings_hamiltonian(double omega, double nu, double g, int fock_truncation);

// exp(-i H t) |psi> via Hermitian eigendecomposition.
PureState evolve_unitary(const Operator& hamiltonian, const PureState& state, double t);

// Precomputed eigendecomposition of a Hermitian generator, for sampling
// one evolution at many times.
class UnitaryEvolver {
  public:
    explicit UnitaryEvolver(const Operator& hamiltonian);
    PureState at(const PureState& initial, double t) const;

  private:
    Eigen::VectorXd eigenvalues_;
    Matrix eigenvectors_;
};

// (<X>, <Y>, <Z>) of a qubit state.
BlochTriple bloch_vector(const PureState& qubit);

// Pure qubit state with the given unit Bloch vector.
PureState pure_from_bloch(const BlochTriple& r);

}  // namespace cbitsim::quantum
