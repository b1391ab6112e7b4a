#include "cbitsim/quantum.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cbitsim::quantum {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_finite_matrix(const Matrix& m, const char* name) {
    if (!m.allFinite()) {
        throw std::domain_error(std::string(name) + ": non-finite entries");
    }
}

void require_dims_match(int a, int b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

}  // namespace

PureState::PureState(Vector amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.size() < 1) {
        throw std::invalid_argument("PureState: dimension must be positive");
    }
    if (!amps_.allFinite()) {
        throw std::domain_error("PureState: non-finite amplitude");
    }
    if (std::abs(amps_.norm() - 1.0) > 1e-12) {
        throw std::invalid_argument("PureState: norm " + std::to_string(amps_.norm()) +
                                    ", expected 1");
    }
}

PureState PureState::basis(int dim, int index) {
    if (dim < 1 || index < 0 || index >= dim) {
        throw std::invalid_argument("PureState::basis: index out of range");
    }
    Vector v = Vector::Zero(dim);
    v(index) = 1.0;
    return PureState(std::move(v));
}

DensityMatrix::DensityMatrix(Matrix entries) : m_(std::move(entries)) {
    if (m_.rows() != m_.cols() || m_.rows() < 1) {
        throw std::invalid_argument("DensityMatrix: must be square and nonempty");
    }
    require_finite_matrix(m_, "DensityMatrix");
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("DensityMatrix: not Hermitian");
    }
    if (std::abs(m_.trace().real() - 1.0) > 1e-12 || std::abs(m_.trace().imag()) > 1e-12) {
        throw std::invalid_argument("DensityMatrix: trace != 1");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(m_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10) {
        throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                    std::to_string(es.eigenvalues().minCoeff()));
    }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
    return DensityMatrix(psi.amplitudes() * psi.amplitudes().adjoint());
}

Operator::Operator(Matrix entries, OperatorKind kind) : m_(std::move(entries)), kind_(kind) {
    if (m_.rows() != m_.cols() || m_.rows() < 1) {
        throw std::invalid_argument("Operator: must be square and nonempty");
    }
    require_finite_matrix(m_, "Operator");
    if (kind_ == OperatorKind::unitary && !is_unitary()) {
        throw std::invalid_argument("Operator: declared unitary but U^dag U != I");
    }
    if (kind_ == OperatorKind::hermitian && !is_hermitian()) {
        throw std::invalid_argument("Operator: declared hermitian but A != A^dag");
    }
}

bool Operator::is_unitary(double tol) const {
    const Matrix gram = m_.adjoint() * m_;
    return (gram - Matrix::Identity(dim(), dim())).cwiseAbs().maxCoeff() <= tol;
}

bool Operator::is_hermitian(double tol) const {
    return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

FockMode fock_mode(int truncation) {
    if (truncation < 1) {
        throw std::invalid_argument("fock_mode: truncation must be at least 1");
    }
    Matrix a = Matrix::Zero(truncation, truncation);
    for (int n = 1; n < truncation; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return FockMode{truncation, Operator(std::move(a), OperatorKind::general)};
}

Operator pauli(Axis axis) {
    Matrix m(2, 2);
    switch (axis) {
        case Axis::X:
            m << 0, 1, 1, 0;
            break;
        case Axis::Y:
            m << 0, -kI, kI, 0;
            break;
        case Axis::Z:
            m << 1, 0, 0, -1;
            break;
    }
    return Operator(std::move(m), OperatorKind::hermitian);
}

Operator identity_operator(int dim) {
    return Operator(Matrix::Identity(dim, dim), OperatorKind::unitary);
}

Operator hadamard_gate() {
    const double s = std::numbers::sqrt2 / 2.0;
    Matrix m(2, 2);
    m << s, s, s, -s;
    return Operator(std::move(m), OperatorKind::unitary);
}

Operator arm_phase_gate(double theta, Mode arm) {
    if (!std::isfinite(theta)) {
        throw std::domain_error("arm_phase_gate: theta is not finite");
    }
    Matrix m = Matrix::Identity(2, 2);
    m(arm == Mode::L ? 0 : 1, arm == Mode::L ? 0 : 1) = std::polar(1.0, theta);
    return Operator(std::move(m), OperatorKind::unitary);
}

Operator swap_gate() {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1;
    m(1, 2) = 1;
    m(2, 1) = 1;
    m(3, 3) = 1;
    return Operator(std::move(m), OperatorKind::unitary);
}

PureState apply(const Operator& gate, const PureState& state) {
    require_dims_match(gate.dim(), state.dim(), "apply");
    if (!gate.is_unitary()) {
        throw std::invalid_argument("apply: gate is not unitary");
    }
    Vector out = gate.entries() * state.amplitudes();
    out /= out.norm();
    return PureState(std::move(out));
}

PureState mz_quantum(double phi, Mode phase_arm) {
    const Operator h = hadamard_gate();
    return apply(h, apply(arm_phase_gate(phi, phase_arm), apply(h, PureState::basis(2, 0))));
}

namespace {

double real_expectation(Complex value, const char* what) {
    if (std::abs(value.imag()) > 1e-12) {
        throw std::runtime_error(std::string(what) + ": imaginary residue " +
                                 std::to_string(value.imag()));
    }
    return value.real();
}

}  // namespace

double expectation(const Operator& op, const PureState& state) {
    require_dims_match(op.dim(), state.dim(), "expectation");
    if (!op.is_hermitian()) {
        throw std::invalid_argument("expectation: operator is not Hermitian");
    }
    const Complex v = state.amplitudes().dot(op.entries() * state.amplitudes());
    return real_expectation(v, "expectation");
}

double expectation(const Operator& op, const DensityMatrix& rho) {
    require_dims_match(op.dim(), rho.dim(), "expectation");
    if (!op.is_hermitian()) {
        throw std::invalid_argument("expectation: operator is not Hermitian");
    }
    return real_expectation((rho.entries() * op.entries()).trace(), "expectation");
}

double variance(const Operator& op, const PureState& state) {
    require_dims_match(op.dim(), state.dim(), "variance");
    if (!op.is_hermitian()) {
        throw std::invalid_argument("variance: operator is not Hermitian");
    }
    const Vector applied = op.entries() * state.amplitudes();
    const double second = applied.squaredNorm();  // <A^2> for Hermitian A
    const double first = real_expectation(state.amplitudes().dot(applied), "variance");
    return second - first * first;
}

double variance(const Operator& op, const DensityMatrix& rho) {
    const Operator squared(op.entries() * op.entries(), OperatorKind::general);
    const double second = real_expectation((rho.entries() * squared.entries()).trace(), "variance");
    const double first = expectation(op, rho);
    return second - first * first;
}

namespace {

void check_tensor_cap(int dim_a, int dim_b) {
    if (static_cast<long>(dim_a) * static_cast<long>(dim_b) > kTensorDimCap) {
        throw std::invalid_argument("tensor: composite dimension exceeds cap " +
                                    std::to_string(kTensorDimCap));
    }
}

}  // namespace

PureState tensor(const PureState& a, const PureState& b) {
    check_tensor_cap(a.dim(), b.dim());
    Vector out(static_cast<Eigen::Index>(a.dim()) * b.dim());
    for (int i = 0; i < a.dim(); ++i) {
        out.segment(static_cast<Eigen::Index>(i) * b.dim(), b.dim()) =
            a.amplitude(i) * b.amplitudes();
    }
    return PureState(std::move(out));
}

Operator tensor(const Operator& a, const Operator& b) {
    check_tensor_cap(a.dim(), b.dim());
    Matrix out = Eigen::kroneckerProduct(a.entries(), b.entries());
    const OperatorKind kind =
        (a.kind() == b.kind()) ? a.kind() : OperatorKind::general;
    return Operator(std::move(out), kind);
}

DensityMatrix partial_trace(const DensityMatrix& rho, int dim_a, int dim_b, Subsystem keep) {
    if (dim_a < 1 || dim_b < 1 || rho.dim() != dim_a * dim_b) {
        throw std::invalid_argument("partial_trace: dimension factorization mismatch");
    }
    const Matrix& m = rho.entries();
    if (keep == Subsystem::A) {
        Matrix out = Matrix::Zero(dim_a, dim_a);
        for (int i = 0; i < dim_a; ++i) {
            for (int j = 0; j < dim_a; ++j) {
                for (int k = 0; k < dim_b; ++k) {
                    out(i, j) += m(i * dim_b + k, j * dim_b + k);
                }
            }
        }
        return DensityMatrix(std::move(out));
    }
    Matrix out = Matrix::Zero(dim_b, dim_b);
    for (int k = 0; k < dim_b; ++k) {
        for (int l = 0; l < dim_b; ++l) {
            for (int i = 0; i < dim_a; ++i) {
                out(k, l) += m(i * dim_b + k, i * dim_b + l);
            }
        }
    }
    return DensityMatrix(std::move(out));
}

namespace {

double entropy_of_weights(const Eigen::ArrayXd& weights) {
    double h = 0.0;
    for (Eigen::Index i = 0; i < weights.size(); ++i) {
        const double lam = weights(i);
        if (lam >= 1e-12) {
            h -= lam * std::log(lam);
        }
    }
    return h;
}

}  // namespace

double entanglement_entropy(const PureState& psi, int dim_a, int dim_b) {
    if (dim_a < 1 || dim_b < 1 || psi.dim() != dim_a * dim_b) {
        throw std::invalid_argument("entanglement_entropy: dimension factorization mismatch");
    }
    const Eigen::Map<const Matrix> coeff(psi.amplitudes().data(), dim_b, dim_a);
    Eigen::JacobiSVD<Matrix> svd(coeff);
    const Eigen::ArrayXd schmidt = svd.singularValues().array().square();
    return entropy_of_weights(schmidt);
}

double vn_entropy(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho.entries(), Eigen::EigenvaluesOnly);
    Eigen::ArrayXd lam = es.eigenvalues().array();
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        if (lam(i) < -1e-10) {
            throw std::domain_error("vn_entropy: eigenvalue " + std::to_string(lam(i)) +
                                    " below -1e-10");
        }
        if (lam(i) < 0.0) {
            lam(i) = 0.0;
        }
    }
    return entropy_of_weights(lam);
}

double purity(const DensityMatrix& rho) {
    return (rho.entries() * rho.entries()).trace().real();
}

double fidelity(const PureState& a, const PureState& b) {
    require_dims_match(a.dim(), b.dim(), "fidelity");
    return std::norm(a.amplitudes().dot(b.amplitudes()));
}

Operator jaynes_cummings_hamiltonian(double omega, double nu, double g, int fock_truncation) {
    if (fock_truncation < 2) {
        throw std::invalid_argument("jaynes_cummings_hamiltonian: fock truncation must be >= 2");
    }
    if (!std::isfinite(omega) || !std::isfinite(nu) || !std::isfinite(g)) {
        throw std::domain_error("jaynes_cummings_hamiltonian: non-finite parameter");
    }
    const FockMode mode = fock_mode(fock_truncation);
    const Matrix& a = mode.annihilation.entries();
    const Matrix number = a.adjoint() * a;
    Matrix sigma_plus(2, 2);
    sigma_plus << 0, 1, 0, 0;

    const Matrix id2 = Matrix::Identity(2, 2);
    const Matrix idn = Matrix::Identity(fock_truncation, fock_truncation);
    Matrix h = 0.5 * omega * Eigen::kroneckerProduct(pauli(Axis::Z).entries(), idn);
    h += nu * Eigen::kroneckerProduct(id2, number);
    const Matrix interaction = Eigen::kroneckerProduct(sigma_plus, a);
    h += g * (interaction + interaction.adjoint());
    return Operator(std::move(h), OperatorKind::hermitian);
}

UnitaryEvolver::UnitaryEvolver(const Operator& hamiltonian) {
    if (!hamiltonian.is_hermitian()) {
        throw std::invalid_argument("UnitaryEvolver: Hamiltonian is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(hamiltonian.entries());
    eigenvalues_ = es.eigenvalues();
    eigenvectors_ = es.eigenvectors();
}

PureState UnitaryEvolver::at(const PureState& initial, double t) const {
    if (!std::isfinite(t)) {
        throw std::domain_error("UnitaryEvolver: t is not finite");
    }
    require_dims_match(static_cast<int>(eigenvalues_.size()), initial.dim(), "UnitaryEvolver");
    const Eigen::ArrayXcd phases =
        (Complex(0.0, -t) * eigenvalues_.cast<Complex>().array()).exp();
    Vector out = eigenvectors_ *
                 (phases.matrix().asDiagonal() * (eigenvectors_.adjoint() * initial.amplitudes()));
    out /= out.norm();
    return PureState(std::move(out));
}

PureState evolve_unitary(const Operator& hamiltonian, const PureState& state, double t) {
    return UnitaryEvolver(hamiltonian).at(state, t);
}

BlochTriple bloch_vector(const PureState& qubit) {
    require_dims_match(qubit.dim(), 2, "bloch_vector");
    const Complex w = std::conj(qubit.amplitude(0)) * qubit.amplitude(1);
    return BlochTriple{2.0 * w.real(), 2.0 * w.imag(),
                       std::norm(qubit.amplitude(0)) - std::norm(qubit.amplitude(1))};
}

PureState pure_from_bloch(const BlochTriple& r) {
    if (std::abs(r.norm() - 1.0) > 1e-9) {
        throw std::invalid_argument("pure_from_bloch: Bloch vector norm " +
                                    std::to_string(r.norm()) + ", expected 1");
    }
    const double theta = std::acos(std::clamp(r.z, -1.0, 1.0));
    const double phi = std::atan2(r.y, r.x);
    Vector v(2);
    v << Complex(std::cos(theta / 2.0), 0.0), std::polar(std::sin(theta / 2.0), phi);
    return PureState(std::move(v));
}

}  // namespace cbitsim::quantum
