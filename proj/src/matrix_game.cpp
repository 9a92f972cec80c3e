#include "absorb/matrix_game.hpp"

#include <algorithm>
#include <stdexcept>

#include "absorb/lp.hpp"

namespace absorb {

namespace {

void check_shape(const RationalMatrix& a) {
    if (a.empty() || a[0].empty()) throw std::invalid_argument("matrix game: empty matrix");
    for (const auto& row : a)
        if (row.size() != a[0].size()) throw std::invalid_argument("matrix game: ragged matrix");
}

Rational min_entry(const RationalMatrix& a) {
    Rational lo = a[0][0];
    for (const auto& row : a)
        for (const auto& v : row) lo = std::min(lo, v);
    return lo;
}

// Value and optimal column strategy of a game with all-positive
// entries: the classic reciprocal LP  max 1.w  s.t.  A w <= 1, w >= 0,
// whose optimum equals 1/value.
std::pair<Rational, std::vector<Rational>> positive_game_column_solve(const RationalMatrix& a) {
    size_t m = a.size(), n = a[0].size();
    std::vector<Rational> obj(n, Rational(1));
    std::vector<Rational> ones(m, Rational(1));
    lp::Result res = lp::maximize(obj, a, ones);
    if (res.status != lp::Status::optimal || res.objective <= 0)
        throw std::logic_error("matrix game: reciprocal LP must have a positive optimum");
    Rational value = 1 / res.objective;
    std::vector<Rational> y(n);
    for (size_t j = 0; j < n; ++j) y[j] = res.x[j] * value;
    return {value, y};
}

RationalMatrix shifted(const RationalMatrix& a, const Rational& c) {
    RationalMatrix out = a;
    for (auto& row : out)
        for (auto& v : row) v += c;
    return out;
}

RationalMatrix negated_transpose(const RationalMatrix& a) {
    size_t m = a.size(), n = a[0].size();
    RationalMatrix out(n, std::vector<Rational>(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) out[j][i] = -a[i][j];
    return out;
}

std::vector<int> support_of(const std::vector<Rational>& probs) {
    std::vector<int> s;
    for (size_t i = 0; i < probs.size(); ++i)
        if (probs[i] > 0) s.push_back(static_cast<int>(i));
    return s;
}

}  // namespace

Rational matrix_game_value(const RationalMatrix& a) {
    check_shape(a);
    Rational c = 1 - min_entry(a);
    auto [v, y] = positive_game_column_solve(shifted(a, c));
    return v - c;
}

MatrixGameSolution solve_matrix_game(const RationalMatrix& a) {
    check_shape(a);
    size_t m = a.size(), n = a[0].size();

    Rational c = 1 - min_entry(a);
    auto [v_shift, y] = positive_game_column_solve(shifted(a, c));
    Rational value = v_shift - c;

    RationalMatrix b = negated_transpose(a);
    Rational c2 = 1 - min_entry(b);
    auto [v2_shift, x] = positive_game_column_solve(shifted(b, c2));
    if (-(v2_shift - c2) != value)
        throw std::logic_error("matrix game: primal/dual value mismatch");

    MatrixGameSolution sol;
    sol.value = value;
    sol.x_opt = {Player::one, x};
    sol.y_opt = {Player::two, y};

    // Square kernel: pad the strategy supports inside the tight sets
    // (actions that are exact best replies) until both sides match.
    std::vector<int> srows = support_of(x), scols = support_of(y);
    size_t r = std::max(srows.size(), scols.size());
    auto pad = [&](std::vector<int> base, auto tight, size_t limit) {
        for (int i = 0; base.size() < r && i < static_cast<int>(limit); ++i) {
            if (std::find(base.begin(), base.end(), i) != base.end()) continue;
            if (tight(i)) base.push_back(i);
        }
        for (int i = 0; base.size() < r && i < static_cast<int>(limit); ++i)
            if (std::find(base.begin(), base.end(), i) == base.end()) base.push_back(i);
        std::sort(base.begin(), base.end());
        return base;
    };
    sol.kernel_rows = pad(srows,
                          [&](int i) {
                              Rational p(0);
                              for (size_t j = 0; j < n; ++j) p += a[static_cast<size_t>(i)][j] * y[j];
                              return p == value;
                          },
                          m);
    sol.kernel_cols = pad(scols,
                          [&](int j) {
                              Rational p(0);
                              for (size_t i = 0; i < m; ++i) p += x[i] * a[i][static_cast<size_t>(j)];
                              return p == value;
                          },
                          n);
    return sol;
}

Sign value_sign(const RationalMatrix& a) {
    check_shape(a);
    size_t m = a.size(), n = a[0].size();

    // Pure-strategy bounds: maximin <= value <= minimax.
    Rational maximin, minimax;
    for (size_t i = 0; i < m; ++i) {
        Rational row_min = a[i][0];
        for (size_t j = 1; j < n; ++j) row_min = std::min(row_min, a[i][j]);
        maximin = i == 0 ? row_min : std::max(maximin, row_min);
    }
    for (size_t j = 0; j < n; ++j) {
        Rational col_max = a[0][j];
        for (size_t i = 1; i < m; ++i) col_max = std::max(col_max, a[i][j]);
        minimax = j == 0 ? col_max : std::min(minimax, col_max);
    }
    if (maximin > 0) return Sign::positive;
    if (minimax < 0) return Sign::negative;
    if (maximin == 0 && minimax == 0) return Sign::zero;

    return sign_of_rational(matrix_game_value(a));
}

namespace {

RationalMatrix submatrix(const RationalMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols) {
    RationalMatrix b(rows.size(), std::vector<Rational>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            b[i][j] = a[static_cast<size_t>(rows[i])][static_cast<size_t>(cols[j])];
    return b;
}

Rational cofactor(const RationalMatrix& b, size_t i, size_t j) {
    size_t r = b.size();
    RationalMatrix minor(r - 1, std::vector<Rational>(r - 1));
    for (size_t p = 0, pi = 0; p < r; ++p) {
        if (p == i) continue;
        for (size_t q = 0, qj = 0; q < r; ++q) {
            if (q == j) continue;
            minor[pi][qj++] = b[p][q];
        }
        ++pi;
    }
    Rational d = r == 1 ? Rational(1) : det_rational(minor);
    return (i + j) % 2 == 0 ? d : -d;
}

void subsets_of_size(int n, int r, std::vector<std::vector<int>>& out) {
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

}  // namespace

Rational det_rational(const RationalMatrix& a) {
    size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("det_rational: matrix is not square");
    if (n == 0) return Rational(1);

    RationalMatrix m = a;
    Rational prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0) ++swap;
            if (swap == n) return Rational(0);
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

std::vector<KernelInfo> enumerate_kernels(const RationalMatrix& a) {
    check_shape(a);
    int m = static_cast<int>(a.size());
    int n = static_cast<int>(a[0].size());
    std::vector<KernelInfo> out;

    for (int r = 1; r <= std::min(m, n); ++r) {
        std::vector<std::vector<int>> row_sets, col_sets;
        subsets_of_size(m, r, row_sets);
        subsets_of_size(n, r, col_sets);
        for (const auto& rows : row_sets)
            for (const auto& cols : col_sets) {
                KernelInfo info;
                info.rows = rows;
                info.cols = cols;
                RationalMatrix b = submatrix(a, rows, cols);
                Rational det = det_rational(b);

                RationalMatrix cof(static_cast<size_t>(r), std::vector<Rational>(static_cast<size_t>(r)));
                Rational cofsum(0);
                for (size_t i = 0; i < static_cast<size_t>(r); ++i)
                    for (size_t j = 0; j < static_cast<size_t>(r); ++j) {
                        cof[i][j] = cofactor(b, i, j);
                        cofsum += cof[i][j];
                    }

                if (cofsum != 0) {
                    Rational v = det / cofsum;
                    info.candidate_value = v;

                    std::vector<Rational> x(static_cast<size_t>(m), Rational(0));
                    std::vector<Rational> y(static_cast<size_t>(n), Rational(0));
                    bool nonneg = true;
                    for (size_t i = 0; i < static_cast<size_t>(r); ++i) {
                        Rational xi(0);
                        for (size_t j = 0; j < static_cast<size_t>(r); ++j) xi += cof[i][j];
                        xi /= cofsum;
                        if (xi < 0) nonneg = false;
                        x[static_cast<size_t>(rows[i])] = xi;
                    }
                    for (size_t j = 0; j < static_cast<size_t>(r); ++j) {
                        Rational yj(0);
                        for (size_t i = 0; i < static_cast<size_t>(r); ++i) yj += cof[i][j];
                        yj /= cofsum;
                        if (yj < 0) nonneg = false;
                        y[static_cast<size_t>(cols[j])] = yj;
                    }

                    bool optimal = nonneg;
                    for (int j = 0; optimal && j < n; ++j) {
                        Rational p(0);
                        for (int i = 0; i < m; ++i) p += x[static_cast<size_t>(i)] * a[static_cast<size_t>(i)][static_cast<size_t>(j)];
                        if (p < v) optimal = false;
                    }
                    for (int i = 0; optimal && i < m; ++i) {
                        Rational p(0);
                        for (int j = 0; j < n; ++j) p += a[static_cast<size_t>(i)][static_cast<size_t>(j)] * y[static_cast<size_t>(j)];
                        if (p > v) optimal = false;
                    }
                    info.verified = optimal;
                }
                out.push_back(std::move(info));
            }
    }
    return out;
}

}  // namespace absorb
