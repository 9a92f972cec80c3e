#pragma once

#include <string>
#include <vector>

#include "absorb/rational.hpp"
#include "absorb/unipoly.hpp"

namespace absorb {

struct Interval {
    Rational lo, hi;
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

// Sturm chain of the polynomial (remainder signs negated, each member
// scaled to primitive integer form by a positive factor).
std::vector<UniPoly> sturm_chain(const UniPoly& p);

int sign_variations_at(const std::vector<UniPoly>& chain, const Rational& x);

// Number of distinct real roots in the half-open interval (lo, hi].
// Both endpoints must be non-roots of the squarefree part.
int count_distinct_roots(const UniPoly& p, const Rational& lo, const Rational& hi);

// All roots have |r| < cauchy_bound(p).
Rational cauchy_bound(const UniPoly& p);

// One interval per distinct real root, pairwise disjoint, sorted
// ascending; the squarefree part changes sign across each interval.
std::vector<Interval> isolate_real_roots(const UniPoly& p);

// Shrinks an isolating interval to length <= width by sign bisection.
Interval refine_root(const UniPoly& p, Interval iv, const Rational& width);

// All rational roots, exactly. Denominator candidates are divisors of
// the primitive leading coefficient; numerators are recovered from
// isolating intervals, so no divisor search of the constant term is needed.
std::vector<Rational> rational_roots(const UniPoly& p);

// A real algebraic number: a squarefree primitive polynomial with
// exactly one root in [lo, hi]. minimality_certified is set when the
// polynomial is provably irreducible over Q (degree 1, or degree <= 3
// with no rational root).
struct AlgebraicNumber {
    UniPoly poly;
    Interval interval;
    bool minimality_certified = false;

    bool is_rational() const { return poly.degree() == 1; }
    Rational rational_value() const;  // requires degree 1
    double approx() const;
    std::string to_string() const;
};

// The squarefree factor of p carrying the isolated root, with rational
// linear factors other than the root itself removed; if the root is
// rational the result is its degree-1 minimal polynomial.
AlgebraicNumber minimal_poly_candidate(const UniPoly& p, const Interval& iv);

}  // namespace absorb
