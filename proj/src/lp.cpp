#include "absorb/lp.hpp"

#include <stdexcept>

namespace absorb::lp {

namespace {

struct Tableau {
    std::vector<std::vector<Rational>> rows;  // m x total_cols
    std::vector<Rational> rhs;                // >= 0 throughout
    std::vector<int> basis;                   // basic variable per row

    void pivot(size_t r, size_t c) {
        Rational p = rows[r][c];
        for (auto& v : rows[r]) v /= p;
        rhs[r] /= p;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            Rational f = rows[i][c];
            if (f == 0) continue;
            for (size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
            rhs[i] -= f * rhs[r];
        }
        basis[r] = static_cast<int>(c);
    }
};

// Runs simplex to optimality for max obj . vars over the current basis.
// Returns false on unboundedness. Bland's rule: smallest eligible
// entering column, smallest basic variable on ratio ties.
bool run_simplex(Tableau& t, const std::vector<Rational>& obj, size_t usable_cols) {
    for (;;) {
        int entering = -1;
        for (size_t j = 0; j < usable_cols; ++j) {
            bool is_basic = false;
            for (int b : t.basis)
                if (b == static_cast<int>(j)) {
                    is_basic = true;
                    break;
                }
            if (is_basic) continue;
            Rational rc = obj[j];
            for (size_t i = 0; i < t.rows.size(); ++i) rc -= obj[static_cast<size_t>(t.basis[i])] * t.rows[i][j];
            if (rc > 0) {
                entering = static_cast<int>(j);
                break;
            }
        }
        if (entering < 0) return true;

        int leaving = -1;
        Rational best_ratio;
        for (size_t i = 0; i < t.rows.size(); ++i) {
            const Rational& a = t.rows[i][static_cast<size_t>(entering)];
            if (a <= 0) continue;
            Rational ratio = t.rhs[i] / a;
            if (leaving < 0 || ratio < best_ratio ||
                (ratio == best_ratio && t.basis[i] < t.basis[static_cast<size_t>(leaving)])) {
                best_ratio = ratio;
                leaving = static_cast<int>(i);
            }
        }
        if (leaving < 0) return false;
        t.pivot(static_cast<size_t>(leaving), static_cast<size_t>(entering));
    }
}

}  // namespace

Result maximize(const std::vector<Rational>& objective, const std::vector<std::vector<Rational>>& lhs,
                const std::vector<Rational>& rhs) {
    size_t n = objective.size();
    size_t m = lhs.size();
    if (rhs.size() != m) throw std::invalid_argument("lp::maximize: rhs size mismatch");
    for (const auto& row : lhs)
        if (row.size() != n) throw std::invalid_argument("lp::maximize: lhs column mismatch");

    size_t artificial_count = 0;
    for (const auto& b : rhs)
        if (b < 0) ++artificial_count;

    size_t total = n + m + artificial_count;
    Tableau t;
    t.rows.assign(m, std::vector<Rational>(total, Rational(0)));
    t.rhs.resize(m);
    t.basis.resize(m);

    size_t next_artificial = n + m;
    for (size_t i = 0; i < m; ++i) {
        bool flip = rhs[i] < 0;
        for (size_t j = 0; j < n; ++j) t.rows[i][j] = flip ? -lhs[i][j] : lhs[i][j];
        t.rows[i][n + i] = flip ? Rational(-1) : Rational(1);
        t.rhs[i] = flip ? -rhs[i] : rhs[i];
        if (flip) {
            t.rows[i][next_artificial] = 1;
            t.basis[i] = static_cast<int>(next_artificial++);
        } else {
            t.basis[i] = static_cast<int>(n + i);
        }
    }

    if (artificial_count > 0) {
        std::vector<Rational> phase1(total, Rational(0));
        for (size_t j = n + m; j < total; ++j) phase1[j] = -1;
        if (!run_simplex(t, phase1, total))
            throw std::logic_error("lp::maximize: phase 1 cannot be unbounded");
        Rational infeasibility(0);
        for (size_t i = 0; i < m; ++i)
            if (t.basis[i] >= static_cast<int>(n + m)) infeasibility += t.rhs[i];
        if (infeasibility > 0) return {Status::infeasible, Rational(0), {}};

        // Pivot any degenerate artificial out of the basis; a row with
        // no real column left is a redundant constraint.
        for (size_t i = 0; i < t.rows.size();) {
            if (t.basis[i] < static_cast<int>(n + m)) {
                ++i;
                continue;
            }
            size_t col = 0;
            for (; col < n + m; ++col)
                if (t.rows[i][col] != 0) break;
            if (col < n + m) {
                t.pivot(i, col);
                ++i;
            } else {
                t.rows.erase(t.rows.begin() + static_cast<long>(i));
                t.rhs.erase(t.rhs.begin() + static_cast<long>(i));
                t.basis.erase(t.basis.begin() + static_cast<long>(i));
            }
        }
    }

    std::vector<Rational> phase2(total, Rational(0));
    for (size_t j = 0; j < n; ++j) phase2[j] = objective[j];
    if (!run_simplex(t, phase2, n + m)) return {Status::unbounded, Rational(0), {}};

    Result res;
    res.status = Status::optimal;
    res.x.assign(n, Rational(0));
    for (size_t i = 0; i < t.rows.size(); ++i)
        if (t.basis[i] < static_cast<int>(n)) res.x[static_cast<size_t>(t.basis[i])] = t.rhs[i];
    res.objective = Rational(0);
    for (size_t j = 0; j < n; ++j) res.objective += objective[j] * res.x[j];
    return res;
}

}  // namespace absorb::lp
