#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "absorb/rational.hpp"
#include "absorb/unipoly.hpp"

namespace absorb {

// Sparse bivariate polynomial in (lambda, z) with exact rational
// coefficients; zero coefficients are never stored.
class BiPoly {
  public:
    BiPoly() = default;

    static BiPoly constant(const Rational& c) { return term(0, 0, c); }
    static BiPoly term(int deg_lambda, int deg_z, const Rational& c);
    static BiPoly lambda() { return term(1, 0, Rational(1)); }
    static BiPoly z() { return term(0, 1, Rational(1)); }

    bool is_zero() const { return terms_.empty(); }
    int lambda_degree() const;
    int z_degree() const;
    // Smallest power of lambda with a nonzero coefficient.
    int lambda_valuation() const;

    Rational coeff(int deg_lambda, int deg_z) const;
    const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }

    BiPoly operator-() const;
    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator*(const Rational& s) const;

    Rational eval(const Rational& lambda_value, const Rational& z_value) const;
    // Substitute a numeric lambda, leaving a polynomial in z.
    UniPoly at_lambda(const Rational& lambda_value) const;
    // Coefficient of lambda^k as a polynomial in z.
    UniPoly lambda_slice(int k) const;

    bool operator==(const BiPoly& o) const = default;

    std::string to_string() const;

  private:
    void add_term(int a, int b, const Rational& c);
    std::map<std::pair<int, int>, Rational> terms_;
};

// Exact determinant of a square matrix of bivariate polynomials,
// Laplace expansion with subset memoization.
BiPoly det_poly(const std::vector<std::vector<BiPoly>>& matrix);

namespace detail {
// Determinant of the sub-matrix selected by row/column bitmasks of
// equal popcount, sharing a memo across calls.
BiPoly det_masked(const std::vector<std::vector<BiPoly>>& matrix, std::uint32_t rows,
                  std::uint32_t cols, std::unordered_map<std::uint64_t, BiPoly>& memo);
}  // namespace detail

// p / lambda^v evaluated at lambda = 0, where v is the lambda-valuation.
UniPoly lambda_normalize(const BiPoly& p);

}  // namespace absorb
