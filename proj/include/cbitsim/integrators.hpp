#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

namespace cbitsim::integrators {

using StateVector = Eigen::VectorXcd;
using VectorField = std::function<StateVector(const StateVector&)>;

struct InvariantFunctional {
    std::string name;
    std::function<double(const StateVector&)> eval;
};

// Autonomous first-order complex ODE  d(state)/dt = field(state).
struct FlowProblem {
    StateVector initial;
    VectorField field;
    std::vector<InvariantFunctional> invariants;
    // Closed-form solution at time t when one exists; used as the
    // convergence reference.
    std::function<StateVector(double)> exact;
};

struct StepperConfig {
    double dt = 1e-3;
    double fixed_point_tol = 1e-13;
    int max_iterations = 50;
};

// One application of the exact flow of i dz/dt = G z for a Hermitian
// generator G, i.e. state -> exp(-i G t) state.
StateVector exact_quadratic_step(const StateVector& state, const Eigen::MatrixXcd& generator,
                                 double t);

// Implicit midpoint: solves s' = s + dt f((s + s')/2) by fixed-point
// iteration on the midpoint. Second order, time reversible, conserves
// quadratic invariants up to the iteration tolerance. Throws
// std::runtime_error carrying the last residual if the iteration has not
// met tolerance after max_iterations.
StateVector implicit_midpoint_step(const StateVector& state, const VectorField& field,
                                   const StepperConfig& config);

struct ConvergenceRow {
    double dt;
    double error;
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;
    double fitted_slope;  // least-squares slope of log(error) vs log(dt)
};

// Global midpoint error at t_end for each step size, measured against
// problem.exact when present, otherwise against a run at the smallest
// dt / 16. Requires at least 3 strictly decreasing step sizes.
ConvergenceTable convergence_report(const FlowProblem& problem, double t_end,
                                    const std::vector<double>& dts);

}  // namespace cbitsim::integrators
