#pragma once

// Test-only oracles, kept independent of the library code paths they
// check: plain integer Bareiss for determinants, double bisection for
// root locations.

#include <cstdint>
#include <functional>
#include <vector>

namespace testsupport {

// Fraction-free determinant over 64-bit integers; fine for the small
// random matrices used in tests.
inline std::int64_t int_det(std::vector<std::vector<std::int64_t>> m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    std::int64_t prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && m[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(m[k], m[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Bisection on doubles; expects f(lo) and f(hi) of opposite signs.
inline double double_bisect(const std::function<double(double)>& f, double lo, double hi,
                            int iterations = 80) {
    double flo = f(lo);
    for (int i = 0; i < iterations; ++i) {
        double mid = (lo + hi) / 2;
        double fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2;
}

}  // namespace testsupport
