#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "cbitsim/complex_canonical.hpp"
#include "cbitsim/integrators.hpp"

using namespace cbitsim;
using namespace cbitsim::integrators;

namespace {

FlowProblem oscillator_problem() {
    FlowProblem p;
    StateVector v0(2);
    v0 << Complex(0.6, 0.0), Complex(0.0, 0.8);
    p.initial = v0;
    p.field = [](const StateVector& v) { return StateVector(Complex(0.0, -1.0) * v); };
    p.exact = [v0](double t) { return StateVector(std::polar(1.0, -t) * v0); };
    p.invariants = {{"norm", [](const StateVector& v) { return v.squaredNorm(); }}};
    return p;
}

}  // namespace

TEST_CASE("exact quadratic step") {
    StateVector v(2);
    v << Complex(0.6, 0.0), Complex(0.0, 0.8);
    const Eigen::MatrixXcd gen = Eigen::MatrixXcd::Identity(2, 2);

    const StateVector same = exact_quadratic_step(v, gen, 0.0);
    CHECK((same - v).cwiseAbs().maxCoeff() < 1e-15);

    const StateVector period = exact_quadratic_step(v, gen, 2.0 * std::numbers::pi);
    CHECK((period - v).cwiseAbs().maxCoeff() < 1e-12);

    // Semigroup property: many small steps match one big one.
    StateVector walked = v;
    for (int i = 0; i < 10000; ++i) {
        walked = exact_quadratic_step(walked, gen, 1e-3);
    }
    const StateVector direct = exact_quadratic_step(v, gen, 10.0);
    CHECK((walked - direct).cwiseAbs().maxCoeff() < 1e-10);

    Eigen::MatrixXcd skew(2, 2);
    skew << 0.0, Complex(0.0, 1.0), Complex(0.0, 1.0), 0.0;
    CHECK_THROWS_AS(exact_quadratic_step(v, skew, 1.0), std::invalid_argument);

    CHECK_THROWS_AS(exact_quadratic_step(v, gen, std::nan("")), std::domain_error);
    StateVector poisoned(2);
    poisoned << Complex(std::nan(""), 0.0), Complex(0.0, 0.0);
    CHECK_THROWS_AS(exact_quadratic_step(poisoned, gen, 1.0), std::domain_error);
    CHECK_THROWS_AS(exact_quadratic_step(v, Eigen::MatrixXcd::Identity(3, 3), 1.0),
                    std::invalid_argument);
}

TEST_CASE("implicit midpoint basics") {
    const FlowProblem p = oscillator_problem();
    StepperConfig config;
    config.dt = 1e-2;

    // Zero field is an exact fixed point.
    const auto zero_field = [](const StateVector& v) { return StateVector(0.0 * v); };
    const StateVector frozen = implicit_midpoint_step(p.initial, zero_field, config);
    CHECK((frozen - p.initial).cwiseAbs().maxCoeff() == 0.0);

    // One oscillator period at dt = 1e-2 keeps the norm pinned.
    StateVector s = p.initial;
    const int steps = static_cast<int>(std::lround(2.0 * std::numbers::pi / config.dt));
    for (int i = 0; i < steps; ++i) {
        s = implicit_midpoint_step(s, p.field, config);
    }
    CHECK(std::abs(s.squaredNorm() - p.initial.squaredNorm()) < 1e-10);

    StepperConfig bad;
    bad.dt = -1.0;
    CHECK_THROWS_AS(implicit_midpoint_step(p.initial, p.field, bad), std::invalid_argument);
}

TEST_CASE("implicit midpoint is second order") {
    const FlowProblem p = oscillator_problem();
    const auto error_at = [&](double dt) {
        StateVector s = p.initial;
        StepperConfig config;
        config.dt = dt;
        const int steps = static_cast<int>(std::lround(1.0 / dt));
        for (int i = 0; i < steps; ++i) {
            s = implicit_midpoint_step(s, p.field, config);
        }
        return (s - p.exact(1.0)).norm();
    };
    const double e1 = error_at(1e-2);
    const double e2 = error_at(5e-3);
    const double ratio = e1 / e2;
    CHECK(ratio > 3.5);
    CHECK(ratio < 4.5);
}

TEST_CASE("fixed point diverges loudly on a too-stiff step") {
    const auto stiff = [](const StateVector& v) { return StateVector(Complex(0.0, -1e3) * v); };
    StateVector v(1);
    v << Complex(1.0, 0.0);
    StepperConfig config;
    config.dt = 1.0;
    CHECK_THROWS_AS(implicit_midpoint_step(v, stiff, config), std::runtime_error);
}

TEST_CASE("time reversibility") {
    const FlowProblem p = oscillator_problem();
    const auto reversed = [&p](const StateVector& v) { return StateVector(-p.field(v)); };
    StepperConfig config;
    config.dt = 5e-2;
    StateVector s = p.initial;
    for (int i = 0; i < 100; ++i) {
        s = implicit_midpoint_step(s, p.field, config);
    }
    for (int i = 0; i < 100; ++i) {
        s = implicit_midpoint_step(s, reversed, config);
    }
    CHECK((s - p.initial).cwiseAbs().maxCoeff() < 10.0 * config.fixed_point_tol * 200.0);
}

TEST_CASE("quadratic invariant drift is bounded by the iteration budget") {
    const FlowProblem p = oscillator_problem();
    StepperConfig config;
    config.dt = 1e-2;
    const int steps = 5000;
    StateVector s = p.initial;
    for (int i = 0; i < steps; ++i) {
        s = implicit_midpoint_step(s, p.field, config);
    }
    CHECK(std::abs(s.squaredNorm() - p.initial.squaredNorm()) <
          static_cast<double>(steps) * config.fixed_point_tol * 10.0);
}

TEST_CASE("identical inputs give bit-identical trajectories") {
    const FlowProblem p = oscillator_problem();
    StepperConfig config;
    config.dt = 1e-2;
    StateVector a = p.initial;
    StateVector b = p.initial;
    for (int i = 0; i < 500; ++i) {
        a = implicit_midpoint_step(a, p.field, config);
        b = implicit_midpoint_step(b, p.field, config);
    }
    CHECK(a(0) == b(0));
    CHECK(a(1) == b(1));
}

TEST_CASE("convergence report fits slope 2 on the oscillator") {
    const FlowProblem p = oscillator_problem();
    const ConvergenceTable table = convergence_report(p, 1.0, {0.08, 0.04, 0.02, 0.01, 0.005});
    CHECK(table.fitted_slope == doctest::Approx(2.0).epsilon(0.1));
    for (std::size_t i = 1; i < table.rows.size(); ++i) {
        CHECK(table.rows[i].error < table.rows[i - 1].error);
    }

    CHECK_THROWS_AS(convergence_report(p, 1.0, {0.1, 0.05}), std::invalid_argument);
    CHECK_THROWS_AS(convergence_report(p, 1.0, {0.1, 0.2, 0.05}), std::invalid_argument);
}

TEST_CASE("convergence report falls back to a fine reference run") {
    FlowProblem p = oscillator_problem();
    p.exact = nullptr;
    const ConvergenceTable table = convergence_report(p, 1.0, {0.08, 0.04, 0.02});
    CHECK(table.fitted_slope == doctest::Approx(2.0).epsilon(0.15));
}
