#pragma once

#include <cstdint>
#include <random>

#include "cbitsim/complex_canonical.hpp"
#include "cbitsim/quantum.hpp"

namespace cbitsim {

// Deterministic sample stream: mt19937_64 uniforms fed through a
// hand-rolled Box-Muller transform, so the stream is reproducible across
// standard libraries given the same seed.
class Rng {
  public:
    static constexpr const char* kAlgorithm = "mt19937_64/box-muller";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1).
    double uniform();

    // Standard normal.
    double gauss();

    // One standard normal per component, then normalized: uniform on the
    // Bloch sphere up to global phase.
    quantum::PureState qubit_state();
    CBitState cbit_state();

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace cbitsim
