#include "absorb/solver.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "absorb/lp.hpp"

namespace absorb {

namespace {

constexpr int kMaxEnumeratedActions = 10;

void require_valid(const AbsorbingGame& game) {
    auto violations = validate(game);
    if (!violations.empty()) throw std::invalid_argument("absorbing game invalid: " + violations.front());
}

void require_interior_lambda(const Rational& lambda) {
    if (lambda <= 0 || lambda >= 1) throw std::domain_error("lambda must lie strictly inside (0,1)");
}

void require_strategy(const AbsorbingGame& game, const StationaryStrategy& s) {
    size_t len = s.owner == Player::one ? static_cast<size_t>(game.m) : static_cast<size_t>(game.n);
    if (s.probs.size() != len) throw std::invalid_argument("strategy length mismatch");
    Rational sum(0);
    for (const auto& p : s.probs) {
        if (p < 0) throw std::invalid_argument("strategy has negative mass");
        sum += p;
    }
    if (sum != 1) throw std::invalid_argument("strategy mass must sum to 1");
}

}  // namespace

WMatrix build_w_symbolic(const AbsorbingGame& game) {
    require_valid(game);
    WMatrix w;
    w.m = game.m;
    w.n = game.n;
    w.entries.assign(static_cast<size_t>(game.m), std::vector<BiPoly>(static_cast<size_t>(game.n)));
    for (int i = 0; i < game.m; ++i)
        for (int j = 0; j < game.n; ++j) {
            const Rational& g = game.g[i][j];
            const Rational& q = game.q[i][j];
            const Rational& wv = game.w[i][j];
            Rational qw = q > 0 ? q * wv : Rational(0);
            BiPoly e = BiPoly::term(0, 0, qw) + BiPoly::term(1, 0, g - qw) + BiPoly::term(0, 1, -q) +
                       BiPoly::term(1, 1, q - 1);
            w.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] = e;
        }
    return w;
}

RationalMatrix build_w_numeric(const AbsorbingGame& game, const Rational& lambda, const Rational& z) {
    require_valid(game);
    require_interior_lambda(lambda);
    RationalMatrix out(static_cast<size_t>(game.m), std::vector<Rational>(static_cast<size_t>(game.n)));
    for (int i = 0; i < game.m; ++i)
        for (int j = 0; j < game.n; ++j) {
            const Rational& q = game.q[i][j];
            Rational qw = q > 0 ? q * game.w[i][j] : Rational(0);
            out[i][j] = lambda * game.g[i][j] + (1 - lambda) * qw - z * (lambda + (1 - lambda) * q);
        }
    return out;
}

Interval discounted_value(const AbsorbingGame& game, const Rational& lambda, const Rational& width) {
    require_valid(game);
    require_interior_lambda(lambda);
    if (width <= 0) throw std::domain_error("discounted_value: width must be positive");

    Rational lo = game.payoff_min() - 1;
    Rational hi = game.payoff_max() + 1;
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        Sign s = value_sign(build_w_numeric(game, lambda, mid));
        if (s == Sign::zero) return {mid, mid};
        if (s == Sign::positive)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

std::pair<StationaryStrategy, StationaryStrategy> discounted_optimal(const AbsorbingGame& game,
                                                                     const Rational& lambda,
                                                                     const Rational& width) {
    Interval iv = discounted_value(game, lambda, width);
    MatrixGameSolution sol = solve_matrix_game(build_w_numeric(game, lambda, iv.midpoint()));
    return {sol.x_opt, sol.y_opt};
}

Rational gamma_value(const AbsorbingGame& game, const StationaryStrategy& x,
                     const StationaryStrategy& y, const Rational& lambda) {
    require_valid(game);
    require_interior_lambda(lambda);
    require_strategy(game, x);
    require_strategy(game, y);
    if (x.owner != Player::one || y.owner != Player::two)
        throw std::invalid_argument("gamma_value: pass (row strategy, column strategy)");

    Rational stage(0), absorb_mass(0), absorb_payoff(0);
    for (int i = 0; i < game.m; ++i)
        for (int j = 0; j < game.n; ++j) {
            Rational pij = x.probs[static_cast<size_t>(i)] * y.probs[static_cast<size_t>(j)];
            if (pij == 0) continue;
            stage += pij * game.g[i][j];
            if (game.q[i][j] > 0) {
                absorb_mass += pij * game.q[i][j];
                absorb_payoff += pij * game.q[i][j] * game.w[i][j];
            }
        }
    return (lambda * stage + (1 - lambda) * absorb_payoff) / (lambda + (1 - lambda) * absorb_mass);
}

Rational limit_payoff(const AbsorbingGame& game, const StationaryStrategy& x, int column) {
    require_valid(game);
    require_strategy(game, x);
    if (x.owner != Player::one) throw std::invalid_argument("limit_payoff: row strategy expected");
    if (column < 0 || column >= game.n) throw std::invalid_argument("limit_payoff: column out of range");

    Rational mass(0), payoff(0);
    for (int i = 0; i < game.m; ++i) {
        const Rational& xi = x.probs[static_cast<size_t>(i)];
        if (xi == 0 || game.q[i][column] == 0) continue;
        mass += xi * game.q[i][column];
        payoff += xi * game.q[i][column] * game.w[i][column];
    }
    if (mass > 0) return payoff / mass;
    Rational stage(0);
    for (int i = 0; i < game.m; ++i) stage += x.probs[static_cast<size_t>(i)] * game.g[i][column];
    return stage;
}

namespace {

// Is there a strategy with full mass on S, every coordinate >= t for
// some t > 0, whose limit payoff is >= z against every column? The
// max-t LP keeps the witness strictly inside the stratum, so absorbing
// columns reachable from S really absorb.
struct SupportProbe {
    bool feasible = false;
    std::vector<Rational> witness;
};

SupportProbe probe_support(const AbsorbingGame& game, const std::vector<int>& support, const Rational& z) {
    size_t s = support.size();
    size_t vars = s + 1;  // x over the support, then t
    std::vector<std::vector<Rational>> lhs;
    std::vector<Rational> rhs;

    // sum x = 1 as a pair of inequalities
    std::vector<Rational> row(vars, Rational(0));
    for (size_t i = 0; i < s; ++i) row[i] = 1;
    lhs.push_back(row);
    rhs.push_back(Rational(1));
    for (size_t i = 0; i < s; ++i) row[i] = -1;
    row[s] = 0;
    lhs.push_back(row);
    rhs.push_back(Rational(-1));

    // t <= x_i
    for (size_t i = 0; i < s; ++i) {
        std::vector<Rational> r(vars, Rational(0));
        r[i] = -1;
        r[s] = 1;
        lhs.push_back(r);
        rhs.push_back(Rational(0));
    }

    for (int j = 0; j < game.n; ++j) {
        bool reachable = false;
        for (int i : support)
            if (game.q[i][j] > 0) reachable = true;
        std::vector<Rational> r(vars, Rational(0));
        if (reachable) {
            // sum_i x_i q_ij (w_ij - z) >= 0
            for (size_t i = 0; i < s; ++i)
                r[i] = -game.q[support[i]][j] * (game.w[support[i]][j] - z);
            lhs.push_back(r);
            rhs.push_back(Rational(0));
        } else {
            // sum_i x_i g_ij >= z
            for (size_t i = 0; i < s; ++i) r[i] = -game.g[support[i]][j];
            lhs.push_back(r);
            rhs.push_back(-z);
        }
    }

    std::vector<Rational> obj(vars, Rational(0));
    obj[s] = 1;
    lp::Result res = lp::maximize(obj, lhs, rhs);

    SupportProbe probe;
    if (res.status == lp::Status::optimal && res.objective > 0) {
        probe.feasible = true;
        probe.witness.assign(res.x.begin(), res.x.begin() + static_cast<long>(s));
    }
    return probe;
}

}  // namespace

GuaranteeResult stationary_guarantee(const AbsorbingGame& game, Player player, const Rational& width) {
    require_valid(game);
    if (width <= 0) throw std::domain_error("stationary_guarantee: width must be positive");
    if (player == Player::two) {
        GuaranteeResult dual = stationary_guarantee(dual_game(game), Player::one, width);
        GuaranteeResult out;
        out.value = {-dual.value.hi, -dual.value.lo};
        out.strategy = {Player::two, dual.strategy.probs};
        out.support = dual.support;
        return out;
    }
    if (game.m > kMaxEnumeratedActions)
        throw std::domain_error("stationary_guarantee: support enumeration capped at 10 actions");

    Rational pay_lo = game.payoff_min() - 1;
    Rational pay_hi = game.payoff_max() + 1;

    bool have_best = false;
    GuaranteeResult best;
    for (std::uint32_t mask = 1; mask < (1u << game.m); ++mask) {
        std::vector<int> support;
        for (int i = 0; i < game.m; ++i)
            if (mask & (1u << i)) support.push_back(i);

        Rational lo = pay_lo, hi = pay_hi;
        SupportProbe at_lo = probe_support(game, support, lo);
        if (!at_lo.feasible) throw std::logic_error("stationary_guarantee: padded bracket must be feasible");
        std::vector<Rational> witness = at_lo.witness;
        while (hi - lo > width) {
            Rational mid = (lo + hi) / 2;
            SupportProbe probe = probe_support(game, support, mid);
            if (probe.feasible) {
                lo = mid;
                witness = probe.witness;
            } else {
                hi = mid;
            }
        }

        if (!have_best || lo > best.value.lo) {
            have_best = true;
            best.value = {lo, hi};
            best.support = support;
            std::vector<Rational> full(static_cast<size_t>(game.m), Rational(0));
            for (size_t i = 0; i < support.size(); ++i) full[static_cast<size_t>(support[i])] = witness[i];
            best.strategy = {Player::one, full};
        }
    }
    return best;
}

std::vector<LimitCandidate> limit_candidates(const AbsorbingGame& game) {
    require_valid(game);
    if (game.m > kMaxEnumeratedActions || game.n > kMaxEnumeratedActions)
        throw std::domain_error("limit_candidates: kernel enumeration capped at 10 actions");

    WMatrix w = build_w_symbolic(game);
    std::unordered_map<std::uint64_t, BiPoly> memo;

    std::vector<LimitCandidate> out;
    std::map<std::vector<Rational>, size_t> seen;  // coeff vector -> index in out

    int mn = std::min(game.m, game.n);
    for (int r = 1; r <= mn; ++r) {
        for (std::uint32_t rows = 0; rows < (1u << game.m); ++rows) {
            if (std::popcount(rows) != r) continue;
            for (std::uint32_t cols = 0; cols < (1u << game.n); ++cols) {
                if (std::popcount(cols) != r) continue;
                BiPoly det = detail::det_masked(w.entries, rows, cols, memo);
                if (det.is_zero()) continue;
                UniPoly normalized = lambda_normalize(det);
                if (normalized.degree() < 1) continue;
                UniPoly key = normalized.squarefree_part();

                std::vector<int> row_set, col_set;
                for (int i = 0; i < game.m; ++i)
                    if (rows & (1u << i)) row_set.push_back(i);
                for (int j = 0; j < game.n; ++j)
                    if (cols & (1u << j)) col_set.push_back(j);

                auto it = seen.find(key.coeffs());
                if (it == seen.end()) {
                    seen.emplace(key.coeffs(), out.size());
                    out.push_back({key, {{row_set, col_set}}});
                } else {
                    out[it->second].kernels.emplace_back(row_set, col_set);
                }
            }
        }
    }
    return out;
}

std::vector<Rational> default_lambda_schedule() {
    std::vector<Rational> schedule;
    for (int e = 1; e <= 7; ++e) schedule.push_back(pow10(-e));
    return schedule;
}

namespace {

struct PoolRoot {
    AlgebraicNumber alg;
};

// Exact distance between the root enclosure and a value enclosure;
// zero when they overlap.
Rational interval_distance(const Interval& a, const Interval& b) {
    Rational d = std::max(Rational(a.lo - b.hi), Rational(b.lo - a.hi));
    return d > 0 ? d : Rational(0);
}

}  // namespace

LimitResult limit_value(const AbsorbingGame& game, const Rational& tol, const std::vector<Rational>& schedule) {
    require_valid(game);
    if (tol <= 0) throw std::domain_error("limit_value: tol must be positive");
    if (schedule.empty()) throw std::domain_error("limit_value: empty lambda schedule");
    for (size_t k = 0; k < schedule.size(); ++k) {
        require_interior_lambda(schedule[k]);
        if (k > 0 && schedule[k] >= schedule[k - 1])
            throw std::domain_error("limit_value: schedule must be strictly decreasing");
    }

    LimitResult result;
    result.candidates = limit_candidates(game);

    // Distinct real roots of all candidates, each as a refined
    // algebraic number.
    Rational pool_width = pow10(-12);
    std::vector<PoolRoot> pool;
    for (const auto& cand : result.candidates) {
        for (const Interval& iv : isolate_real_roots(cand.poly)) {
            AlgebraicNumber alg = minimal_poly_candidate(cand.poly, iv);
            if (!alg.is_rational()) alg.interval = refine_root(alg.poly, alg.interval, pool_width);
            bool duplicate = false;
            for (const PoolRoot& existing : pool) {
                if (existing.alg.poly != alg.poly) continue;
                Interval hull{std::min(existing.alg.interval.lo, alg.interval.lo),
                              std::max(existing.alg.interval.hi, alg.interval.hi)};
                int roots_at_lo = existing.alg.poly.sign_at(hull.lo) == 0 ? 1 : 0;
                if (roots_at_lo + count_distinct_roots(existing.alg.poly, hull.lo, hull.hi) == 1) {
                    duplicate = true;
                    break;
                }
            }
            if (!duplicate) pool.push_back({alg});
        }
    }

    Rational sweep_width = pow10(-10);
    for (const Rational& lambda : schedule)
        result.lambda_trace.emplace_back(lambda, discounted_value(game, lambda, sweep_width));

    if (pool.empty()) return result;

    const Interval& final_iv = result.lambda_trace.back().second;
    size_t best = 0;
    bool tie = false;
    Rational best_dist;
    for (size_t i = 0; i < pool.size(); ++i) {
        Rational d = interval_distance(pool[i].alg.interval, final_iv);
        if (i == 0 || d < best_dist) {
            best = i;
            best_dist = d;
            tie = false;
        } else if (d == best_dist) {
            tie = true;
        }
    }

    // Certification: final distance within tol, no exact tie, and the
    // tail of the sweep approaches the root monotonically (up to the
    // enclosure widths).
    bool certified = !tie && best_dist <= tol;
    if (certified) {
        const AlgebraicNumber& root = pool[best].alg;
        size_t window = std::min<size_t>(4, result.lambda_trace.size());
        size_t start = result.lambda_trace.size() - window;
        for (size_t k = start; k + 1 < result.lambda_trace.size(); ++k) {
            const Interval& a = result.lambda_trace[k].second;
            const Interval& b = result.lambda_trace[k + 1].second;
            Rational slack = a.width() + b.width() + root.interval.width();
            if (interval_distance(root.interval, b) > interval_distance(root.interval, a) + slack) {
                certified = false;
                break;
            }
        }
    }

    if (certified) {
        result.certified = true;
        result.value = pool[best].alg;
        if (!result.value.is_rational())
            result.value.interval = refine_root(result.value.poly, result.value.interval, pow10(-13));
    }
    return result;
}

Theorem1Result check_theorem1(const AbsorbingGame& game) {
    require_valid(game);
    Theorem1Result out;
    if (!game.deterministic_transitions() || std::min(game.m, game.n) >= 3) return out;
    out.applicable = true;
    LimitResult limit = limit_value(game);
    if (!limit.certified)
        throw std::logic_error("check_theorem1: limit certification failed on an applicable game");
    if (!limit.is_rational())
        throw std::logic_error("check_theorem1: certified an irrational value on an applicable game");
    out.value = limit.rational_value();
    return out;
}

}  // namespace absorb
