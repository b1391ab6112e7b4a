#include "cbitsim/complex_canonical.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cbitsim {

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;
constexpr double kUnitNormTol = 1e-12;

void require_finite(Complex z, const char* name) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw std::domain_error(std::string(name) + " is not finite");
    }
}

void require_finite(double x, const char* name) {
    if (!std::isfinite(x)) {
        throw std::domain_error(std::string(name) + " is not finite");
    }
}

}  // namespace

double BlochTriple::norm() const {
    return std::sqrt(x * x + y * y + z * z);
}

CBitState::CBitState(Complex z_left, Complex z_right) : z_l_(z_left), z_r_(z_right) {
    require_finite(z_l_, "z_L");
    require_finite(z_r_, "z_R");
    const double n = norm_squared();
    if (std::abs(n - 1.0) > kUnitNormTol) {
        throw std::invalid_argument("CBitState: |z_L|^2 + |z_R|^2 = " + std::to_string(n) +
                                    ", expected 1 (use with_norm for unnormalized states)");
    }
}

CBitState CBitState::with_norm(Complex z_left, Complex z_right) {
    require_finite(z_left, "z_L");
    require_finite(z_right, "z_R");
    const double n = std::norm(z_left) + std::norm(z_right);
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw std::invalid_argument("CBitState: norm must be finite and strictly positive");
    }
    return CBitState(z_left, z_right, Unchecked{});
}

double CBitState::norm_squared() const {
    return std::norm(z_l_) + std::norm(z_r_);
}

Complex from_real_canonical(double q, double p) {
    require_finite(q, "q");
    require_finite(p, "p");
    return Complex(q * kInvSqrt2, p * kInvSqrt2);
}

RealCanonicalPair to_real_canonical(Complex z) {
    require_finite(z, "z");
    return RealCanonicalPair{z.real() * std::numbers::sqrt2, z.imag() * std::numbers::sqrt2};
}

double oscillator_energy(const CBitState& state) {
    return state.norm_squared();
}

CBitState free_evolution(const CBitState& state, double t) {
    require_finite(t, "t");
    const Complex phase = std::polar(1.0, -t);
    return CBitState::with_norm(phase * state.left(), phase * state.right());
}

CBitState hadamard(const CBitState& state) {
    return CBitState::with_norm((state.left() + state.right()) * kInvSqrt2,
                                (state.left() - state.right()) * kInvSqrt2);
}

CBitState phase_gate(const CBitState& state, double theta, Mode mode) {
    require_finite(theta, "theta");
    const Complex phase = std::polar(1.0, theta);
    if (mode == Mode::L) {
        return CBitState::with_norm(phase * state.left(), state.right());
    }
    return CBitState::with_norm(state.left(), phase * state.right());
}

BlochTriple bilinears(const CBitState& state) {
    const Complex w = state.left() * std::conj(state.right());
    return BlochTriple{2.0 * w.real(), -2.0 * w.imag(),
                       std::norm(state.left()) - std::norm(state.right())};
}

CBitState cbit_from_bloch(const BlochTriple& triple) {
    require_finite(triple.x, "x");
    require_finite(triple.y, "y");
    require_finite(triple.z, "z");
    const double r = triple.norm();
    if (std::abs(r - 1.0) > 1e-9) {
        throw std::invalid_argument("cbit_from_bloch: triple norm " + std::to_string(r) +
                                    ", expected 1");
    }
    const double theta = std::acos(std::clamp(triple.z, -1.0, 1.0));
    const double phi = std::atan2(triple.y, triple.x);
    return CBitState::with_norm(Complex(std::cos(theta / 2.0), 0.0),
                                std::polar(std::sin(theta / 2.0), phi));
}

}  // namespace cbitsim
