#include "cbitsim/random.hpp"

#include <cmath>
#include <numbers>

namespace cbitsim {

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::gauss() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 == 0.0) {
        u1 = uniform();
    }
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

quantum::PureState Rng::qubit_state() {
    quantum::Vector v(2);
    v << Complex(gauss(), gauss()), Complex(gauss(), gauss());
    v /= v.norm();
    return quantum::PureState(std::move(v));
}

CBitState Rng::cbit_state() {
    const Complex a(gauss(), gauss());
    const Complex b(gauss(), gauss());
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    return CBitState(a / n, b / n);
}

}  // namespace cbitsim
