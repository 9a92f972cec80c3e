#include "absorb/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "absorb/roots.hpp"
#include "absorb/simulate.hpp"
#include "absorb/solver.hpp"

namespace absorb {

bool VerifyReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace oracle {

namespace {

// Exact Gaussian elimination; nullopt when singular.
std::optional<std::vector<Rational>> solve_linear(RationalMatrix m, std::vector<Rational> rhs) {
    size_t n = m.size();
    for (size_t k = 0; k < n; ++k) {
        size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(m[k], m[pivot]);
        std::swap(rhs[k], rhs[pivot]);
        for (size_t i = 0; i < n; ++i) {
            if (i == k || m[i][k] == 0) continue;
            Rational f = m[i][k] / m[k][k];
            for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
            rhs[i] -= f * rhs[k];
        }
    }
    std::vector<Rational> x(n);
    for (size_t k = 0; k < n; ++k) x[k] = rhs[k] / m[k][k];
    return x;
}

void subsets(int n, int r, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= n - (r - static_cast<int>(cur.size())); ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

// Equalizing strategy of the row player on supports (S, T): rows in S
// mix to make every column of T pay exactly v. Returns (x over S, v).
std::optional<std::pair<std::vector<Rational>, Rational>> equalizer(
    const RationalMatrix& a, const std::vector<int>& srows, const std::vector<int>& scols) {
    size_t r = srows.size();
    RationalMatrix sys(r + 1, std::vector<Rational>(r + 1, Rational(0)));
    std::vector<Rational> rhs(r + 1, Rational(0));
    for (size_t jj = 0; jj < r; ++jj) {
        for (size_t ii = 0; ii < r; ++ii)
            sys[jj][ii] = a[static_cast<size_t>(srows[ii])][static_cast<size_t>(scols[jj])];
        sys[jj][r] = -1;  // minus v
    }
    for (size_t ii = 0; ii < r; ++ii) sys[r][ii] = 1;
    rhs[r] = 1;
    auto sol = solve_linear(sys, rhs);
    if (!sol) return std::nullopt;
    std::vector<Rational> x(sol->begin(), sol->begin() + static_cast<long>(r));
    return std::make_pair(x, (*sol)[r]);
}

}  // namespace

std::optional<Rational> matrix_game_value_by_enumeration(const RationalMatrix& a) {
    int m = static_cast<int>(a.size());
    int n = static_cast<int>(a[0].size());
    RationalMatrix at(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) at[static_cast<size_t>(j)][static_cast<size_t>(i)] = a[static_cast<size_t>(i)][static_cast<size_t>(j)];

    for (int r = 1; r <= std::min(m, n); ++r) {
        std::vector<std::vector<int>> row_sets, col_sets;
        subsets(m, r, row_sets);
        subsets(n, r, col_sets);
        for (const auto& srows : row_sets)
            for (const auto& scols : col_sets) {
                auto ex = equalizer(a, srows, scols);
                if (!ex) continue;
                auto& [xs, v] = *ex;
                bool ok = true;
                for (const auto& xi : xs)
                    if (xi < 0) ok = false;
                // x must guarantee >= v against every column
                for (int j = 0; ok && j < n; ++j) {
                    Rational p(0);
                    for (size_t ii = 0; ii < xs.size(); ++ii)
                        p += xs[ii] * a[static_cast<size_t>(srows[ii])][static_cast<size_t>(j)];
                    if (p < v) ok = false;
                }
                if (!ok) continue;

                // column player equalizes the transposed game on (T, S)
                auto ey = equalizer(at, scols, srows);
                if (!ey) continue;
                auto& [ys, u] = *ey;
                if (u != v) continue;
                for (const auto& yj : ys)
                    if (yj < 0) ok = false;
                for (int i = 0; ok && i < m; ++i) {
                    Rational p(0);
                    for (size_t jj = 0; jj < ys.size(); ++jj)
                        p += ys[jj] * a[static_cast<size_t>(i)][static_cast<size_t>(scols[jj])];
                    if (p > v) ok = false;
                }
                if (ok) return v;
            }
    }
    return std::nullopt;
}

}  // namespace oracle

namespace {

using Clock = std::chrono::steady_clock;

long rand_between(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

struct CheckRun {
    std::string computed;
    bool pass = true;
    int failures = 0;

    void require(bool ok, const std::string& detail) {
        if (ok) return;
        pass = false;
        if (++failures <= 3) {
            if (!computed.empty()) computed += "; ";
            computed += detail;
        }
    }
    std::string summary(const std::string& ok_text) const { return pass ? ok_text : computed; }
};

VerifyCheck finish(const std::string& name, const std::string& expected, CheckRun& run,
                   const std::string& ok_text, Clock::time_point start, double budget_seconds) {
    double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    run.require(elapsed < budget_seconds,
                "runtime " + fmt_double(elapsed) + " s exceeded budget " + fmt_double(budget_seconds) + " s");
    VerifyCheck check;
    check.name = name;
    check.expected = expected;
    check.computed = run.summary(ok_text);
    check.pass = run.pass;
    check.seconds = elapsed;
    return check;
}

Rational interval_gap(const Interval& a, const Interval& b) {
    Rational d = std::max(Rational(a.lo - b.hi), Rational(b.lo - a.hi));
    return d > 0 ? d : Rational(0);
}

StationaryStrategy row_strategy(std::vector<Rational> probs) {
    return {Player::one, std::move(probs)};
}
StationaryStrategy col_strategy(std::vector<Rational> probs) {
    return {Player::two, std::move(probs)};
}

// --- criterion 1: big-match discounted values ---------------------------

VerifyCheck check_big_match_discounted() {
    auto start = Clock::now();
    CheckRun run;
    AbsorbingGame game = builtin_game(BuiltinGame::big_match);
    Rational half = make_rational(1, 2);
    for (long den : {2L, 10L, 100L, 1000L}) {
        Rational lambda = make_rational(1, den);
        Interval iv = discounted_value(game, lambda, pow10(-9));
        run.require(iv.lo <= half && half <= iv.hi,
                    "lambda=1/" + std::to_string(den) + ": interval misses 1/2");
        Sign s = value_sign(build_w_numeric(game, lambda, half));
        run.require(s == Sign::zero, "lambda=1/" + std::to_string(den) + ": val(W(1/2)) not zero");
    }
    return finish("big-match: v_lambda = 1/2 and val(W_lambda(1/2)) = 0",
                  "interval contains 1/2 and sign is exactly zero for lambda in {1/2,1/10,1/100,1/1000}",
                  run, "all 4 lambdas exact", start, 1.0);
}

// --- criterion 2: theorem2 certified cubic -------------------------------

VerifyCheck check_theorem2_limit() {
    auto start = Clock::now();
    CheckRun run;
    AbsorbingGame game = builtin_game(BuiltinGame::theorem2);
    LimitResult res = limit_value(game);
    run.require(res.certified, "limit not certified");
    UniPoly cubic({-7, 10, -5, 1});
    if (res.certified) {
        run.require(res.value.poly == cubic, "minimal polynomial is " + res.value.poly.to_string());
        run.require(res.value.minimality_certified && res.value.poly.degree() == 3,
                    "degree-3 minimality not certified");
        Rational mid = res.value.interval.midpoint();
        run.require(mid >= make_rational(14301, 10000) && mid <= make_rational(14303, 10000),
                    "root approximation " + decimal_string(mid) + " outside [1.4301, 1.4303]");

        // distance sweep: shrinking along the schedule, small at 1e-6
        Rational prev(-1);
        for (const auto& [lambda, iv] : res.lambda_trace) {
            Rational d = interval_gap(res.value.interval, iv);
            if (prev >= 0)
                run.require(d <= prev + iv.width() * 2,
                            "distance not decreasing at lambda=" + to_fraction_string(lambda));
            prev = d;
            if (lambda == pow10(-6))
                run.require(d <= pow10(-2), "v_lambda at 1e-6 is " + decimal_string(d) + " from the root");
        }
    }
    return finish("theorem2: certified root of z^3-5z^2+10z-7",
                  "certified degree-3 value ~1.4302 with shrinking v_lambda distances", run,
                  "certified, root ~" + (res.certified ? decimal_string(res.value.interval.midpoint(), 6) : ""),
                  start, 30.0);
}

// --- criterion 3: theorem2 guarantees ------------------------------------

VerifyCheck check_theorem2_guarantee() {
    auto start = Clock::now();
    CheckRun run;
    AbsorbingGame game = builtin_game(BuiltinGame::theorem2);
    LimitResult res = limit_value(game);
    run.require(res.certified, "limit not certified");
    Rational root = res.certified ? res.value.interval.midpoint() : Rational(0);

    Rational width = pow10(-8);
    GuaranteeResult p1 = stationary_guarantee(game, Player::one, width);
    GuaranteeResult p2 = stationary_guarantee(game, Player::two, width);
    run.require(abs(p1.value.midpoint() - root) <= pow10(-6),
                "player-1 guarantee " + decimal_string(p1.value.midpoint()) + " differs from the limit");
    run.require(abs(p2.value.midpoint() - root) <= pow10(-6),
                "player-2 guarantee " + decimal_string(p2.value.midpoint()) + " differs from the limit");
    run.require(p1.support == std::vector<int>({0, 1, 2}), "player-1 support not full");
    run.require(p2.support == std::vector<int>({0, 1, 2}), "player-2 support not full");

    Rational third = make_rational(1, 3);
    Rational lp = limit_payoff(game, row_strategy({third, third, third}), 0);
    run.require(lp == make_rational(4, 3), "uniform limit payoff vs column 1 is " + to_fraction_string(lp));

    // alpha solves alpha^2 + alpha = v - 1; equalizer (a, 1-2a-a^2, a+a^2)
    double v = to_double(root);
    double alpha = (-1 + std::sqrt(4 * v - 3)) / 2;
    double expect[3] = {alpha, 1 - 2 * alpha - alpha * alpha, alpha + alpha * alpha};
    for (int i = 0; i < 3; ++i) {
        double got = to_double(p1.strategy.probs[static_cast<size_t>(i)]);
        run.require(std::abs(got - expect[i]) <= 1e-4,
                    "strategy coordinate " + std::to_string(i + 1) + " = " + fmt_double(got) +
                        " vs " + fmt_double(expect[i]));
    }
    return finish("theorem2: equalizing guarantees match the limit",
                  "both players guarantee the certified value with the full-support equalizer;"
                  " uniform vs column 1 pays exactly 4/3",
                  run, "guarantees and equalizer match", start, 10.0);
}

// --- criterion 4: sqrt-k family ------------------------------------------

VerifyCheck check_sqrt_k_family() {
    auto start = Clock::now();
    CheckRun run;
    for (long k : {2L, 3L, 5L, 7L, 10L}) {
        AbsorbingGame game = builtin_game(BuiltinGame::sqrt_k, k);
        LimitResult res = limit_value(game);
        run.require(res.certified, "k=" + std::to_string(k) + ": not certified");
        if (!res.certified) continue;
        UniPoly expect(std::vector<Rational>{Rational(-k), Rational(0), Rational(1)});
        run.require(res.value.poly == expect,
                    "k=" + std::to_string(k) + ": poly " + res.value.poly.to_string());
        Rational mid = res.value.interval.midpoint();
        run.require(abs(mid * mid - Rational(k)) <= pow10(-10),
                    "k=" + std::to_string(k) + ": |mid^2 - k| too large");
    }
    for (long k : {1L, 4L, 9L}) {
        AbsorbingGame game = builtin_game(BuiltinGame::sqrt_k, k);
        LimitResult res = limit_value(game);
        run.require(res.certified && res.is_rational(),
                    "k=" + std::to_string(k) + ": expected exact rational");
        if (res.certified && res.is_rational()) {
            long root = k == 1 ? 1 : (k == 4 ? 2 : 3);
            run.require(res.rational_value() == root,
                        "k=" + std::to_string(k) + ": value " + to_fraction_string(res.rational_value()));
        }
    }
    for (long k : {2L, 3L, 4L, 5L, 7L, 9L, 10L}) {
        AbsorbingGame game = builtin_game(BuiltinGame::sqrt_k, k);
        GuaranteeResult g = stationary_guarantee(game, Player::one, pow10(-8));
        double rk = std::sqrt(static_cast<double>(k));
        // The unique equalizer puts (k - sqrt k)/(k-1) on the stochastic
        // row and (sqrt k - 1)/(k-1) on the sure row, paying sqrt(k)
        // against both columns.
        double x0 = (static_cast<double>(k) - rk) / (static_cast<double>(k) - 1);
        double got0 = to_double(g.strategy.probs[0]);
        double got1 = to_double(g.strategy.probs[1]);
        run.require(std::abs(got0 - x0) <= 1e-6 && std::abs(got1 - (1 - x0)) <= 1e-6,
                    "k=" + std::to_string(k) + ": guarantee strategy (" + fmt_double(got0) + ", " +
                        fmt_double(got1) + ")");
        for (int col = 0; col < 2; ++col) {
            double pay = to_double(limit_payoff(game, g.strategy, col));
            run.require(std::abs(pay - rk) <= 1e-6,
                        "k=" + std::to_string(k) + ": column " + std::to_string(col + 1) +
                            " limit payoff " + fmt_double(pay) + " not equalized at sqrt(k)");
        }
    }
    return finish("sqrt-k family: certified sqrt(k) limits",
                  "z^2-k certified for k in {2,3,5,7,10}; exact rational for k in {1,4,9};"
                  " the guarantee strategy equalizes both columns at sqrt(k)",
                  run, "all k certified", start, 80.0);
}

// --- criterion 5: rational limits for deterministic thin games -----------

AbsorbingGame random_star_game(std::mt19937_64& rng, int m, int n) {
    std::vector<std::vector<StarCell>> cells(static_cast<size_t>(m), std::vector<StarCell>(static_cast<size_t>(n)));
    for (auto& row : cells)
        for (auto& cell : row) {
            cell.value = Rational(rand_between(rng, -5, 5));
            cell.starred = rng() % 2 == 0;
        }
    return from_star_matrix(cells);
}

VerifyCheck check_theorem1_property() {
    auto start = Clock::now();
    CheckRun run;
    std::mt19937_64 rng(20230701);
    const int shapes[3][2] = {{2, 2}, {2, 3}, {3, 2}};
    int certified = 0;
    for (int t = 0; t < 200; ++t) {
        const int* shape = shapes[t % 3];
        AbsorbingGame game = random_star_game(rng, shape[0], shape[1]);
        try {
            Theorem1Result res = check_theorem1(game);
            run.require(res.applicable, "game " + std::to_string(t) + " unexpectedly not applicable");
            if (res.applicable) ++certified;
        } catch (const std::exception& e) {
            run.require(false, "game " + std::to_string(t) + ": " + e.what());
        }
    }
    return finish("thin deterministic games: rational limit values",
                  "200 random star games of shapes 2x2/2x3/3x2 certify rational limits", run,
                  std::to_string(certified) + "/200 rational limits certified", start, 300.0);
}

// --- criterion 6: quadratic representation -------------------------------

VerifyCheck check_quadratic_representation() {
    auto start = Clock::now();
    CheckRun run;
    std::mt19937_64 rng(424242);
    const long nonsquare[] = {2, 3, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15};
    for (int t = 0; t < 20; ++t) {
        QuadraticTarget target;
        target.p = make_rational(rand_between(rng, -9, 9), rand_between(rng, 1, 4));
        do {
            target.qcoef = make_rational(rand_between(rng, -9, 9), rand_between(rng, 1, 4));
        } while (target.qcoef == 0);
        target.k = nonsquare[rng() % 12];

        AbsorbingGame game = represent_quadratic(target);
        LimitResult res = limit_value(game);
        std::string tag = "case " + std::to_string(t) + " (p=" + to_fraction_string(target.p) +
                          ", q=" + to_fraction_string(target.qcoef) + ", k=" + std::to_string(target.k) + ")";
        run.require(res.certified, tag + ": not certified");
        if (!res.certified) continue;

        // (z - p)^2 - q^2 k annihilates p + q sqrt(k)
        UniPoly annihilator(std::vector<Rational>{target.p * target.p - target.qcoef * target.qcoef * target.k,
                                                  -2 * target.p, Rational(1)});
        run.require(res.value.poly == annihilator.primitive_part(),
                    tag + ": minimal poly " + res.value.poly.to_string());
        double expect = to_double(target.p) + to_double(target.qcoef) * std::sqrt(static_cast<double>(target.k));
        double got = to_double(res.value.interval.midpoint());
        run.require(std::abs(got - expect) <= 1e-8, tag + ": value " + fmt_double(got));
    }
    return finish("quadratic targets: limit p + q*sqrt(k)",
                  "20 random degree-2 targets realized by 2x2 games, certified annihilating polynomials",
                  run, "20/20 targets certified", start, 120.0);
}

// --- criterion 7: matrix game oracle equivalence --------------------------

VerifyCheck check_matrix_game_oracle() {
    auto start = Clock::now();
    CheckRun run;
    std::mt19937_64 rng(777);
    for (int t = 0; t < 500; ++t) {
        int m = static_cast<int>(rand_between(rng, 1, 4));
        int n = static_cast<int>(rand_between(rng, 1, 4));
        RationalMatrix a(static_cast<size_t>(m), std::vector<Rational>(static_cast<size_t>(n)));
        for (auto& row : a)
            for (auto& v : row) v = Rational(rand_between(rng, -9, 9));

        MatrixGameSolution sol = solve_matrix_game(a);
        auto ov = oracle::matrix_game_value_by_enumeration(a);
        run.require(ov.has_value(), "matrix " + std::to_string(t) + ": oracle found no support");
        if (ov) run.require(*ov == sol.value, "matrix " + std::to_string(t) + ": simplex " +
                                                  to_fraction_string(sol.value) + " vs oracle " +
                                                  to_fraction_string(*ov));
        bool kernel_hit = false;
        for (const KernelInfo& k : enumerate_kernels(a))
            if (k.verified && k.candidate_value && *k.candidate_value == sol.value) kernel_hit = true;
        run.require(kernel_hit, "matrix " + std::to_string(t) + ": no kernel candidate equals the value");
    }
    return finish("matrix games: simplex vs support-enumeration oracle",
                  "500 random matrices up to 4x4 agree exactly; a verified kernel attains the value",
                  run, "500/500 exact matches", start, 120.0);
}

// --- criterion 8: simulation consistency ----------------------------------

VerifyCheck check_simulation() {
    auto start = Clock::now();
    CheckRun run;
    AbsorbingGame big_match = builtin_game(BuiltinGame::big_match);
    AbsorbingGame sqrt4 = builtin_game(BuiltinGame::sqrt_k, 4);
    AbsorbingGame sqrt2 = builtin_game(BuiltinGame::sqrt_k, 2);
    AbsorbingGame sqrt9 = builtin_game(BuiltinGame::sqrt_k, 9);
    AbsorbingGame t2 = builtin_game(BuiltinGame::theorem2);
    AbsorbingGame rep = represent_quadratic({Rational(1), Rational(1), 2});

    struct Fixture {
        const AbsorbingGame* game;
        StationaryStrategy x, y;
        Rational lambda;
    };
    Rational half = make_rational(1, 2), third = make_rational(1, 3);
    std::vector<Fixture> fixtures = {
        {&big_match, row_strategy({make_rational(1, 11), make_rational(10, 11)}),
         col_strategy({half, half}), make_rational(1, 10)},
        {&big_match, row_strategy({half, half}), col_strategy({third, 2 * third}), make_rational(1, 5)},
        {&big_match, row_strategy({make_rational(1, 4), make_rational(3, 4)}),
         col_strategy({make_rational(2, 3), third}), third},
        {&sqrt4, row_strategy({third, 2 * third}), col_strategy({Rational(1), Rational(0)}),
         make_rational(1, 100)},
        {&sqrt2, row_strategy({half, half}), col_strategy({half, half}), make_rational(1, 10)},
        {&sqrt9, row_strategy({make_rational(1, 4), make_rational(3, 4)}),
         col_strategy({third, 2 * third}), make_rational(1, 20)},
        {&t2, row_strategy({third, third, third}), col_strategy({third, third, third}),
         make_rational(1, 10)},
        {&t2, row_strategy({half, make_rational(1, 4), make_rational(1, 4)}),
         col_strategy({make_rational(1, 4), make_rational(1, 4), half}), make_rational(1, 7)},
        {&rep, row_strategy({half, half}), col_strategy({half, half}), make_rational(1, 10)},
        {&sqrt2, row_strategy({make_rational(2, 3), third}), col_strategy({make_rational(1, 4), make_rational(3, 4)}),
         make_rational(1, 6)},
    };

    int within = 0;
    for (size_t f = 0; f < fixtures.size(); ++f) {
        const Fixture& fx = fixtures[f];
        GammaEstimate est = estimate_gamma(*fx.game, fx.x, fx.y, fx.lambda, 100000,
                                           0xC0FFEEull + static_cast<std::uint64_t>(f));
        double exact = to_double(gamma_value(*fx.game, fx.x, fx.y, fx.lambda));
        run.require(est.stderr > 0, "fixture " + std::to_string(f) + ": degenerate stderr");
        if (std::abs(est.mean - exact) <= 4 * est.stderr) ++within;
    }
    run.require(within >= 9, "only " + std::to_string(within) + "/10 fixtures within 4 standard errors");
    return finish("simulation: playout means match closed-form payoffs",
                  ">= 9 of 10 fixtures within 4 standard errors at N = 1e5", run,
                  std::to_string(within) + "/10 fixtures within 4 standard errors", start, 60.0);
}

// --- criterion 9: transform equivariance -----------------------------------

AbsorbingGame random_general_game(std::mt19937_64& rng) {
    AbsorbingGame game;
    game.m = static_cast<int>(rand_between(rng, 1, 3));
    game.n = static_cast<int>(rand_between(rng, 1, 3));
    game.g.assign(static_cast<size_t>(game.m), std::vector<Rational>(static_cast<size_t>(game.n)));
    game.q = game.g;
    game.w = game.g;
    for (int i = 0; i < game.m; ++i)
        for (int j = 0; j < game.n; ++j) {
            game.g[i][j] = Rational(rand_between(rng, -5, 5));
            long den = rand_between(rng, 1, 4);
            game.q[i][j] = make_rational(rand_between(rng, 0, den), den);
            game.w[i][j] = game.q[i][j] > 0 ? Rational(rand_between(rng, -5, 5)) : Rational(0);
        }
    return game;
}

VerifyCheck check_transform_equivariance() {
    auto start = Clock::now();
    CheckRun run;
    std::mt19937_64 rng(90210);
    Rational lambda = make_rational(1, 7);
    Rational width = pow10(-9);
    for (int t = 0; t < 50; ++t) {
        AbsorbingGame game = random_general_game(rng);
        Rational a = make_rational(rand_between(rng, 1, 6), 2);
        Rational b = Rational(rand_between(rng, -3, 3));

        Interval v = discounted_value(game, lambda, width);
        Interval va = discounted_value(affine_transform(game, a, b), lambda, width);
        run.require(abs(va.midpoint() - (a * v.midpoint() + b)) <= 2 * width,
                    "game " + std::to_string(t) + ": affine value drifted");

        Interval vd = discounted_value(dual_game(game), lambda, width);
        run.require(abs(vd.midpoint() + v.midpoint()) <= 2 * width,
                    "game " + std::to_string(t) + ": dual value drifted");
    }
    return finish("transforms: affine and dual equivariance",
                  "50 random games at lambda = 1/7: v(aG+b) = a v + b and v(dual) = -v within 2x width",
                  run, "50/50 games equivariant", start, 120.0);
}

}  // namespace

VerifyReport run_verification_suite(std::ostream* progress) {
    VerifyReport report;
    auto add = [&](VerifyCheck check) {
        if (progress) {
            (*progress) << (check.pass ? "PASS" : "FAIL") << "  " << check.name << "  ["
                        << fmt_double(check.seconds) << " s]\n";
            if (!check.pass) (*progress) << "      " << check.computed << "\n";
            progress->flush();
        }
        report.checks.push_back(std::move(check));
    };
    add(check_big_match_discounted());
    add(check_theorem2_limit());
    add(check_theorem2_guarantee());
    add(check_sqrt_k_family());
    add(check_theorem1_property());
    add(check_quadratic_representation());
    add(check_matrix_game_oracle());
    add(check_simulation());
    add(check_transform_equivariance());
    return report;
}

void print_report(const VerifyReport& report, std::ostream& os) {
    int passed = 0;
    for (const auto& c : report.checks) {
        os << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "\n";
        os << "      expected: " << c.expected << "\n";
        os << "      computed: " << c.computed << "  [" << fmt_double(c.seconds) << " s]\n";
        if (c.pass) ++passed;
    }
    os << passed << "/" << report.checks.size() << " checks passed\n";
}

}  // namespace absorb
