// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cbitsim/csv.hpp"
#include "cbitsim/experiments.hpp"
#include "cbitsim/hybrid.hpp"
#include "cbitsim/random.hpp"

using namespace cbitsim;
namespace exps = cbitsim::experiments;
namespace q = cbitsim::quantum;

namespace {

int g_failures = 0;

class Criterion {
  public:
    explicit Criterion(std::string name) : name_(std::move(name)) {}

    void check(bool ok, const std::string& detail) {
        ok_ = ok_ && ok;
        details_.push_back((ok ? "ok: " : "FAILED: ") + detail);
    }

    ~Criterion() {
        std::cout << (ok_ ? "[PASS] " : "[FAIL] ") << name_ << "\n";
        for (const auto& d : details_) {
            std::cout << "       " << d << "\n";
        }
        if (!ok_) {
            ++g_failures;
        }
    }

  private:
    std::string name_;
    bool ok_ = true;
    std::vector<std::string> details_;
};

std::string num(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

constexpr double kSqrt2Inv = 0.7071067811865476;

void criterion_1_mz_equivalence() {
    Criterion c("1. MZ sweep: classical and quantum rows agree");
    const auto start = std::chrono::steady_clock::now();
    const auto classical = exps::run_mz_sweep(exps::Backend::classical_cbit, 256, Mode::L);
    const auto quantum = exps::run_mz_sweep(exps::Backend::quantum, 256, Mode::L);
    double max_diff = 0.0;
    for (std::size_t i = 0; i < classical.size(); ++i) {
        for (std::size_t k = 0; k < 2; ++k) {
            max_diff = std::max(max_diff, std::abs(classical[i].observables[k].second -
                                                   quantum[i].observables[k].second));
        }
    }
    const double elapsed = seconds_since(start);
    c.check(max_diff < 1e-10, "row-wise max |classical - quantum| = " + num(max_diff) +
                                  " (< 1e-10)");
    c.check(std::abs(classical.front().observables[0].second - 1.0) < 1e-12 &&
                std::abs(quantum.front().observables[0].second - 1.0) < 1e-12,
            "phi = 0 returns the photon to arm L with i_L = 1 (within 1e-12)");
    c.check(elapsed < 1.0, "runtime " + num(elapsed) + " s (< 1 s)");
}

void criterion_2_hadamard_sequence() {
    Criterion c("2. Hadamard sequence (1,0) -> (1/sqrt2,1/sqrt2) -> (1,0)");
    const CBitState mid = hadamard(CBitState(1.0, 0.0));
    c.check(std::abs(mid.left() - Complex(kSqrt2Inv, 0.0)) < 1e-12 &&
                std::abs(mid.right() - Complex(kSqrt2Inv, 0.0)) < 1e-12,
            "first beamsplitter gives the equal superposition");
    const CBitState back = hadamard(mid);
    c.check(std::abs(back.left() - Complex(1.0, 0.0)) < 1e-12 &&
                std::abs(back.right()) < 1e-12,
            "second beamsplitter restores (1, 0)");
}

void criterion_3_bloch_identity() {
    Criterion c("3. Bloch identity and Hadamard Z<->X exchange, 1000 random states");
    Rng rng(301);
    double worst_identity = 0.0;
    double worst_exchange = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const CBitState s = rng.cbit_state();
        const BlochTriple b = bilinears(s);
        const double n2 = s.norm_squared() * s.norm_squared();
        worst_identity =
            std::max(worst_identity, std::abs(b.x * b.x + b.y * b.y + b.z * b.z - n2));
        const BlochTriple hb = bilinears(hadamard(s));
        worst_exchange = std::max({worst_exchange, std::abs(hb.z - b.x), std::abs(hb.x - b.z)});
    }
    c.check(worst_identity < 1e-10,
            "max |x^2+y^2+z^2 - norm^2| = " + num(worst_identity) + " (< 1e-10)");
    c.check(worst_exchange < 1e-12,
            "max Z<->X exchange residual = " + num(worst_exchange) + " (< 1e-12)");
}

void criterion_4_sharpness_contrast() {
    Criterion c("4. Sharpness contrast: classical point values vs qubit variance sum 2");
    const auto start = std::chrono::steady_clock::now();
    const auto records = exps::run_sharpness_report(1000, 401);
    const auto summary = exps::summarize_sharpness(records);
    const double elapsed = seconds_since(start);
    c.check(summary.classical_max_variance == 0.0,
            "classical triples carry zero dispersion (exact)");
    c.check(summary.classical_max_residual < 1e-10,
            "classical identity residual max = " + num(summary.classical_max_residual) +
                " (< 1e-10)");
    c.check(summary.quantum_max_residual < 1e-10,
            "qubit |Var X + Var Y + Var Z - 2| max = " + num(summary.quantum_max_residual) +
                " (< 1e-10)");
    c.check(elapsed < 2.0, "runtime " + num(elapsed) + " s (< 2 s)");
}

void criterion_5_no_entanglement() {
    Criterion c("5. No entanglement in 1000 hybrid trajectories; quantum contrast entangles");
    const auto start = std::chrono::steady_clock::now();
    Rng rng(501);
    int contrast_hits = 0;
    double hybrid_max = 0.0;
    bool products = true;
    const int trials = 1000;
    for (int i = 0; i < trials; ++i) {
        const CBitState cbit0 = rng.cbit_state();
        const q::PureState qubit0 = rng.qubit_state();
        double contrast = 0.0;
        for (const auto variant :
             {hybrid::BackReaction::one_way, hybrid::BackReaction::ehrenfest}) {
            hybrid::CouplingSpec spec;
            spec.back_reaction = variant;
            const auto trajectory =
                hybrid::evolve_hybrid(hybrid::HybridState{cbit0, qubit0, 0.0}, spec, 1e-2, 20.0);
            const auto cert = hybrid::no_entanglement_certificate(trajectory, spec.g);
            products = products && cert.product_at_every_sample;
            hybrid_max = std::max(hybrid_max, cert.hybrid_max_entropy);
            contrast = std::max(contrast, cert.quantum_contrast_max_entropy);
        }
        if (contrast > 1e-3) {
            ++contrast_hits;
        }
    }
    const double elapsed = seconds_since(start);
    c.check(products, "product structure held at every sample of every trajectory");
    c.check(hybrid_max == 0.0, "hybrid entanglement entropy identically 0");
    c.check(contrast_hits > trials * 99 / 100,
            std::to_string(contrast_hits) + "/1000 quantum contrasts exceed 1e-3 nats (> 990)");
    c.check(elapsed < 60.0, "runtime " + num(elapsed) + " s (< 60 s)");
}

void criterion_6_swap_failure() {
    Criterion c("6. Swap: quantum reference exact, hybrid best-time fidelity falls short");
    hybrid::CouplingSpec spec;
    const auto result = exps::run_swap_experiment(200, spec, 601, 1e-2, 20.0);
    const auto& s = result.summary;
    c.check(s.quantum_fidelity_min > 1.0 - 1e-10,
            "quantum SWAP fidelity min = " + num(s.quantum_fidelity_min) + " (= 1 within 1e-10)");
    c.check(s.hybrid_best_fidelity_median < 1.0 - exps::kSwapBestFidelityDelta,
            "hybrid pooled best-fidelity median = " + num(s.hybrid_best_fidelity_median) +
                " (< 1 - " + num(exps::kSwapBestFidelityDelta) + ")");
    c.check(s.integrator_failures == 0, "no integrator failures across 200 trials");

    hybrid::CouplingSpec frozen;
    const auto report =
        hybrid::attempt_swap(CBitState(1.0, 0.0), q::PureState::basis(2, 1), frozen, 1e-2, 5.0);
    c.check(report.qubit_fidelity_best == 0.0 && report.qubit_fidelity_final == 0.0,
            "vanishing-coefficient pair shows zero dynamics exactly");
}

void criterion_7_jc_contrast() {
    Criterion c("7. Jaynes-Cummings contrast: vacuum Rabi and ln 2 entropy vs flat zero");
    const auto start = std::chrono::steady_clock::now();
    const double g = 1.0;
    const auto records = exps::run_jc_compare(g, std::numbers::pi, 256, 8);
    const auto summary = exps::summarize_jc(records, g);
    c.check(summary.max_p_dev_from_cos2 < 1e-8,
            "quantum max |P_e - cos^2(gt)| = " + num(summary.max_p_dev_from_cos2) + " (< 1e-8)");

    // Truncation agreement at 8 vs 12 on the occupation curve.
    double truncation_dev = 0.0;
    {
        const q::UnitaryEvolver coarse(q::jaynes_cummings_hamiltonian(1.0, 1.0, g, 8));
        const q::UnitaryEvolver fine(q::jaynes_cummings_hamiltonian(1.0, 1.0, g, 12));
        const q::PureState psi8 = q::PureState::basis(16, 0);
        const q::PureState psi12 = q::PureState::basis(24, 0);
        for (int k = 0; k <= 256; ++k) {
            const double t = std::numbers::pi * k / 256.0;
            double p8 = 0.0, p12 = 0.0;
            const q::PureState a = coarse.at(psi8, t);
            const q::PureState b = fine.at(psi12, t);
            for (int n = 0; n < 8; ++n) {
                p8 += std::norm(a.amplitude(n));
            }
            for (int n = 0; n < 12; ++n) {
                p12 += std::norm(b.amplitude(n));
            }
            truncation_dev = std::max(truncation_dev, std::abs(p8 - p12));
        }
    }
    c.check(truncation_dev < 1e-8,
            "fock_dim 8 vs 12 occupation agreement = " + num(truncation_dev) + " (< 1e-8)");
    c.check(std::abs(summary.entropy_at_quarter - std::numbers::ln2) < 1e-6,
            "entropy at gt = pi/4 within 1e-6 of ln 2 (got " +
                num(summary.entropy_at_quarter) + ")");
    c.check(summary.semiclassical_max_entropy == 0.0, "semiclassical entropy identically 0");
    const double elapsed = seconds_since(start);
    c.check(elapsed < 5.0, "runtime " + num(elapsed) + " s (< 5 s)");
}

void criterion_8_integrator_order() {
    Criterion c("8. Integrator order 2 and mean-field energy conservation");
    const auto records = exps::run_convergence_study();
    const auto summary = exps::summarize_convergence(records);
    c.check(std::abs(summary.fitted_slope - 2.0) <= 0.2,
            "fitted midpoint slope = " + num(summary.fitted_slope) + " (2.0 +/- 0.2)");
    c.check(summary.drift_fine < 1e-8,
            "relative energy drift at dt = 1e-3 over t = 20: " + num(summary.drift_fine) +
                " (< 1e-8)");
    c.check(summary.drift_ratio >= 2.5 && summary.drift_ratio <= 6.0,
            "drift shrink factor for dt -> dt/2: " + num(summary.drift_ratio) + " (in [2.5, 6])");
}

void criterion_9_determinism() {
    Criterion c("9. Determinism: same seed, byte-identical CSV");
    const auto render = [](std::uint64_t seed) {
        std::ostringstream os;
        io::write_csv(os, "sharpness", exps::run_sharpness_report(200, seed));
        return os.str();
    };
    c.check(render(901) == render(901), "sharpness CSV identical across reruns (seed 901)");

    const auto render_swap = [](std::uint64_t seed) {
        hybrid::CouplingSpec spec;
        std::ostringstream os;
        io::write_csv(os, "swap-test",
                      exps::run_swap_experiment(10, spec, seed, 2e-2, 10.0).records);
        return os.str();
    };
    c.check(render_swap(902) == render_swap(902),
            "swap-test CSV identical across reruns (seed 902)");
    c.check(render(901) != render(903), "different seeds give different records");
}

}  // namespace

int main() {
    criterion_1_mz_equivalence();
    criterion_2_hadamard_sequence();
    criterion_3_bloch_identity();
    criterion_4_sharpness_contrast();
    criterion_5_no_entanglement();
    criterion_6_swap_failure();
    criterion_7_jc_contrast();
    criterion_8_integrator_order();
    criterion_9_determinism();

    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
