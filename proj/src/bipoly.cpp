#include "absorb/bipoly.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace absorb {

BiPoly BiPoly::term(int deg_lambda, int deg_z, const Rational& c) {
    BiPoly p;
    if (c != 0) p.terms_[{deg_lambda, deg_z}] = c;
    return p;
}

int BiPoly::lambda_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int BiPoly::z_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

int BiPoly::lambda_valuation() const {
    if (is_zero()) throw std::domain_error("lambda_valuation: zero polynomial");
    int v = terms_.begin()->first.first;
    for (const auto& [k, c] : terms_) v = std::min(v, k.first);
    return v;
}

Rational BiPoly::coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Rational(0) : it->second;
}

void BiPoly::add_term(int a, int b, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({a, b}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPoly BiPoly::operator-() const {
    BiPoly p;
    for (const auto& [k, c] : terms_) p.terms_[k] = -c;
    return p;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly p = *this;
    for (const auto& [k, c] : o.terms_) p.add_term(k.first, k.second, c);
    return p;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    BiPoly p = *this;
    for (const auto& [k, c] : o.terms_) p.add_term(k.first, k.second, -c);
    return p;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly p;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) p.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return p;
}

BiPoly BiPoly::operator*(const Rational& s) const {
    BiPoly p;
    if (s == 0) return p;
    for (const auto& [k, c] : terms_) p.terms_[k] = c * s;
    return p;
}

Rational BiPoly::eval(const Rational& lambda_value, const Rational& z_value) const {
    Rational acc(0);
    for (const auto& [k, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < k.first; ++i) t *= lambda_value;
        for (int i = 0; i < k.second; ++i) t *= z_value;
        acc += t;
    }
    return acc;
}

UniPoly BiPoly::at_lambda(const Rational& lambda_value) const {
    std::vector<Rational> coeffs(static_cast<size_t>(std::max(z_degree(), 0)) + 1, Rational(0));
    for (const auto& [k, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < k.first; ++i) t *= lambda_value;
        coeffs[static_cast<size_t>(k.second)] += t;
    }
    return UniPoly(std::move(coeffs));
}

UniPoly BiPoly::lambda_slice(int slice) const {
    std::vector<Rational> coeffs(static_cast<size_t>(std::max(z_degree(), 0)) + 1, Rational(0));
    for (const auto& [k, c] : terms_)
        if (k.first == slice) coeffs[static_cast<size_t>(k.second)] += c;
    return UniPoly(std::move(coeffs));
}

std::string BiPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        auto [a, b] = k;
        if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
        else if (sgn(c) < 0) out += "-";
        Rational m = abs(c);
        bool unit = m == 1 && (a > 0 || b > 0);
        if (!unit) out += to_fraction_string(m);
        if (a > 0) {
            if (!unit) out += "*";
            out += "lambda";
            if (a > 1) out += "^" + std::to_string(a);
            unit = false;
        }
        if (b > 0) {
            if (!unit) out += "*";
            out += "z";
            if (b > 1) out += "^" + std::to_string(b);
        }
    }
    return out;
}

namespace detail {

// Determinants of all (row subset, column subset) pairs of equal size,
// computed by Laplace expansion along the lowest selected row and
// memoized; the same cache serves kernel enumeration, which needs every
// square sub-matrix of a small symbolic matrix.
BiPoly det_masked(const std::vector<std::vector<BiPoly>>& m, std::uint32_t rows, std::uint32_t cols,
                  std::unordered_map<std::uint64_t, BiPoly>& memo) {
    if (rows == 0) return BiPoly::constant(Rational(1));
    std::uint64_t key = (static_cast<std::uint64_t>(rows) << 32) | cols;
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int row = std::countr_zero(rows);
    std::uint32_t rest_rows = rows & (rows - 1);
    BiPoly acc;
    int pos = 0;
    for (std::uint32_t c = cols; c != 0; c &= c - 1, ++pos) {
        int col = std::countr_zero(c);
        const BiPoly& entry = m[static_cast<size_t>(row)][static_cast<size_t>(col)];
        if (!entry.is_zero()) {
            BiPoly minor = det_masked(m, rest_rows, cols & ~(1u << col), memo);
            BiPoly contrib = entry * minor;
            acc = (pos % 2 == 0) ? acc + contrib : acc - contrib;
        }
    }
    memo.emplace(key, acc);
    return acc;
}

}  // namespace detail

BiPoly det_poly(const std::vector<std::vector<BiPoly>>& matrix) {
    size_t n = matrix.size();
    if (n == 0) throw std::invalid_argument("det_poly: empty matrix");
    if (n > 16) throw std::invalid_argument("det_poly: matrix too large");
    for (const auto& row : matrix)
        if (row.size() != n) throw std::invalid_argument("det_poly: matrix is not square");
    std::unordered_map<std::uint64_t, BiPoly> memo;
    std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
    return detail::det_masked(matrix, full, full, memo);
}

UniPoly lambda_normalize(const BiPoly& p) {
    if (p.is_zero()) throw std::domain_error("lambda_normalize: zero polynomial");
    return p.lambda_slice(p.lambda_valuation());
}

}  // namespace absorb
