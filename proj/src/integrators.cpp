#include "cbitsim/integrators.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace cbitsim::integrators {

namespace {

void validate_config(const StepperConfig& config) {
    if (!(config.dt > 0.0) || !std::isfinite(config.dt)) {
        throw std::invalid_argument("StepperConfig: dt must be positive and finite");
    }
    if (!(config.fixed_point_tol > 0.0)) {
        throw std::invalid_argument("StepperConfig: fixed_point_tol must be positive");
    }
    if (config.max_iterations < 1) {
        throw std::invalid_argument("StepperConfig: max_iterations must be at least 1");
    }
}

StateVector run_midpoint(const FlowProblem& problem, double t_end, double dt) {
    StateVector s = problem.initial;
    const long n = std::lround(t_end / dt);
    const double dt_eff = t_end / static_cast<double>(n);
    StepperConfig config;
    config.dt = dt_eff;
    for (long i = 0; i < n; ++i) {
        s = implicit_midpoint_step(s, problem.field, config);
    }
    return s;
}

}  // namespace

StateVector exact_quadratic_step(const StateVector& state, const Eigen::MatrixXcd& generator,
                                 double t) {
    if (!std::isfinite(t)) {
        throw std::domain_error("exact_quadratic_step: t is not finite");
    }
    if (!state.allFinite() || !generator.allFinite()) {
        throw std::domain_error("exact_quadratic_step: non-finite input");
    }
    if (generator.rows() != generator.cols() || generator.rows() != state.size()) {
        throw std::invalid_argument("exact_quadratic_step: generator/state dimension mismatch");
    }
    const double herm = (generator - generator.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-10) {
        throw std::invalid_argument("exact_quadratic_step: generator is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(generator);
    const Eigen::ArrayXcd phases =
        (std::complex<double>(0.0, -t) * es.eigenvalues().cast<std::complex<double>>().array())
            .exp();
    return es.eigenvectors() *
           (phases.matrix().asDiagonal() * (es.eigenvectors().adjoint() * state));
}

StateVector implicit_midpoint_step(const StateVector& state, const VectorField& field,
                                   const StepperConfig& config) {
    validate_config(config);
    const double half = 0.5 * config.dt;
    StateVector mid = state + half * field(state);
    double residual = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < config.max_iterations; ++iter) {
        StateVector next = state + half * field(mid);
        residual = (next - mid).cwiseAbs().maxCoeff();
        mid = std::move(next);
        if (residual <= config.fixed_point_tol) {
            return 2.0 * mid - state;
        }
    }
    std::ostringstream msg;
    msg << "implicit_midpoint_step: fixed-point iteration did not reach tol "
        << config.fixed_point_tol << " in " << config.max_iterations
        << " iterations (last residual " << residual << "); reduce dt";
    throw std::runtime_error(msg.str());
}

ConvergenceTable convergence_report(const FlowProblem& problem, double t_end,
                                    const std::vector<double>& dts) {
    if (dts.size() < 3) {
        throw std::invalid_argument("convergence_report: need at least 3 step sizes");
    }
    for (std::size_t i = 0; i < dts.size(); ++i) {
        if (!(dts[i] > 0.0)) {
            throw std::invalid_argument("convergence_report: step sizes must be positive");
        }
        if (i > 0 && !(dts[i] < dts[i - 1])) {
            throw std::invalid_argument("convergence_report: step sizes must be decreasing");
        }
    }

    StateVector reference;
    if (problem.exact) {
        reference = problem.exact(t_end);
    } else {
        reference = run_midpoint(problem, t_end, dts.back() / 16.0);
    }

    ConvergenceTable table;
    double sum_lx = 0.0, sum_ly = 0.0, sum_lxx = 0.0, sum_lxy = 0.0;
    for (double dt : dts) {
        const long n = std::lround(t_end / dt);
        const double dt_eff = t_end / static_cast<double>(n);
        const StateVector final_state = run_midpoint(problem, t_end, dt_eff);
        const double error = (final_state - reference).norm();
        table.rows.push_back({dt_eff, error});
        const double lx = std::log(dt_eff);
        const double ly = std::log(std::max(error, 1e-300));
        sum_lx += lx;
        sum_ly += ly;
        sum_lxx += lx * lx;
        sum_lxy += lx * ly;
    }
    const double n = static_cast<double>(dts.size());
    table.fitted_slope = (n * sum_lxy - sum_lx * sum_ly) / (n * sum_lxx - sum_lx * sum_lx);
    return table;
}

}  // namespace cbitsim::integrators
