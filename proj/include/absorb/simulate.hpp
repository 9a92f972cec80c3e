#pragma once

#include <cstdint>

#include "absorb/game.hpp"
#include "absorb/rational.hpp"

namespace absorb {

// Floating point by design: the simulator is a statistical cross-check
// and its output is never consumed by the exact modules.
struct PlayoutConfig {
    Rational lambda;
    double tail_epsilon = 1e-9;  // truncation: horizon T with (1-lambda)^T < eps
    long samples = 100000;
    std::uint64_t seed = 1;
};

// One discounted playout under stationary strategies (x, y). Stage
// payoffs accrue with weight lambda*(1-lambda)^(t-1); on absorption the
// tail (1-lambda)^t * w is added in closed form and the run stops.
// Deterministic given (config.seed, sample_index).
double playout(const AbsorbingGame& game, const StationaryStrategy& x, const StationaryStrategy& y,
               const PlayoutConfig& config, long sample_index = 0);

struct GammaEstimate {
    double mean = 0;
    double stderr = 0;
};

// Sample mean and standard error over independent playouts, seeded
// per-sample by counter so the result is order-independent.
GammaEstimate estimate_gamma(const AbsorbingGame& game, const StationaryStrategy& x,
                             const StationaryStrategy& y, const Rational& lambda, long samples,
                             std::uint64_t seed);

}  // namespace absorb
