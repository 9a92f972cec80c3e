#include "absorb/simulate.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace absorb {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double uniform01(std::uint64_t& state) { return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53; }

struct Tables {
    int m, n;
    std::vector<double> cx, cy;  // cumulative strategy masses
    std::vector<double> g, q, w;
    double lambda;
    long horizon;

    Tables(const AbsorbingGame& game, const StationaryStrategy& x, const StationaryStrategy& y,
           const PlayoutConfig& config) {
        if (config.lambda <= 0 || config.lambda >= 1)
            throw std::domain_error("playout: lambda must lie strictly inside (0,1)");
        if (config.tail_epsilon <= 0) throw std::domain_error("playout: tail epsilon must be positive");
        if (x.owner != Player::one || y.owner != Player::two)
            throw std::invalid_argument("playout: pass (row strategy, column strategy)");
        if (x.probs.size() != static_cast<size_t>(game.m) || y.probs.size() != static_cast<size_t>(game.n))
            throw std::invalid_argument("playout: strategy length mismatch");

        m = game.m;
        n = game.n;
        lambda = to_double(config.lambda);
        double acc = 0;
        for (const auto& p : x.probs) cx.push_back(acc += to_double(p));
        acc = 0;
        for (const auto& p : y.probs) cy.push_back(acc += to_double(p));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) {
                g.push_back(to_double(game.g[i][j]));
                q.push_back(to_double(game.q[i][j]));
                w.push_back(to_double(game.w[i][j]));
            }
        horizon = static_cast<long>(std::ceil(std::log(config.tail_epsilon) / std::log1p(-lambda))) + 1;
    }

    int draw(const std::vector<double>& cum, double u) const {
        for (size_t k = 0; k + 1 < cum.size(); ++k)
            if (u < cum[k]) return static_cast<int>(k);
        return static_cast<int>(cum.size()) - 1;
    }
};

double run_playout(const Tables& t, std::uint64_t seed, long index) {
    std::uint64_t state = seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(index + 1);
    splitmix64(state);  // decorrelate nearby counters

    double payoff = 0;
    double disc = 1;  // (1-lambda)^(t-1)
    for (long stage = 0; stage < t.horizon; ++stage) {
        int i = t.draw(t.cx, uniform01(state));
        int j = t.draw(t.cy, uniform01(state));
        size_t e = static_cast<size_t>(i) * static_cast<size_t>(t.n) + static_cast<size_t>(j);
        payoff += t.lambda * disc * t.g[e];
        double qe = t.q[e];
        if (qe > 0 && (qe >= 1 || uniform01(state) < qe)) {
            payoff += disc * (1 - t.lambda) * t.w[e];
            return payoff;
        }
        disc *= 1 - t.lambda;
    }
    return payoff;
}

}  // namespace

double playout(const AbsorbingGame& game, const StationaryStrategy& x, const StationaryStrategy& y,
               const PlayoutConfig& config, long sample_index) {
    Tables t(game, x, y, config);
    return run_playout(t, config.seed, sample_index);
}

GammaEstimate estimate_gamma(const AbsorbingGame& game, const StationaryStrategy& x,
                             const StationaryStrategy& y, const Rational& lambda, long samples,
                             std::uint64_t seed) {
    if (samples < 1) throw std::domain_error("estimate_gamma: need at least one sample");
    PlayoutConfig config;
    config.lambda = lambda;
    config.seed = seed;
    config.samples = samples;
    Tables t(game, x, y, config);

    double sum = 0, sumsq = 0;
    for (long k = 0; k < samples; ++k) {
        double v = run_playout(t, seed, k);
        sum += v;
        sumsq += v * v;
    }
    GammaEstimate est;
    est.mean = sum / static_cast<double>(samples);
    if (samples > 1) {
        double var = (sumsq - sum * sum / static_cast<double>(samples)) / static_cast<double>(samples - 1);
        est.stderr = std::sqrt(std::max(var, 0.0) / static_cast<double>(samples));
    }
    return est;
}

}  // namespace absorb
