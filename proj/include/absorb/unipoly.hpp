#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "absorb/rational.hpp"

namespace absorb {

// Dense univariate polynomial with exact rational coefficients,
// stored c0..cd with a nonzero leading coefficient (zero poly = empty).
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    UniPoly(std::initializer_list<long> coeffs);

    static UniPoly constant(const Rational& c);
    static UniPoly linear(const Rational& c0, const Rational& c1);  // c0 + c1*z

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int k) const;
    const Rational& leading() const { return coeffs_.back(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational operator()(const Rational& at) const;
    int sign_at(const Rational& at) const;

    UniPoly derivative() const;

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rational& s) const;

    // Exact division with remainder over the rationals.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den);

    // Integer-coefficient, coprime, positive leading coefficient.
    UniPoly primitive_part() const;
    // Same but keeps the sign of the leading coefficient (used where
    // sign structure matters, e.g. Sturm chains).
    UniPoly primitive_part_keep_sign() const;

    // p / gcd(p, p'), returned primitive with positive leading coefficient.
    UniPoly squarefree_part() const;

    bool operator==(const UniPoly& o) const = default;

    std::string to_string(const std::string& var = "z") const;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

UniPoly gcd_poly(const UniPoly& a, const UniPoly& b);

}  // namespace absorb
