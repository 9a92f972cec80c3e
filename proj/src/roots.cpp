#include "absorb/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace absorb {

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p.primitive_part_keep_sign());
    if (p.degree() == 0) return chain;
    chain.push_back(p.derivative().primitive_part_keep_sign());
    while (chain.back().degree() > 0) {
        UniPoly r = UniPoly::divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back((-r).primitive_part_keep_sign());
    }
    return chain;
}

int sign_variations_at(const std::vector<UniPoly>& chain, const Rational& x) {
    int variations = 0, prev = 0;
    for (const auto& q : chain) {
        int s = q.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

namespace {

int count_roots_chain(const std::vector<UniPoly>& chain, const Rational& lo, const Rational& hi) {
    return sign_variations_at(chain, lo) - sign_variations_at(chain, hi);
}

}  // namespace

int count_distinct_roots(const UniPoly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw std::domain_error("count_distinct_roots: zero polynomial");
    if (lo > hi) throw std::domain_error("count_distinct_roots: empty interval");
    UniPoly s = p.squarefree_part();
    if (s.degree() <= 0) return 0;
    auto chain = sturm_chain(s);
    return count_roots_chain(chain, lo, hi);
}

Rational cauchy_bound(const UniPoly& p) {
    if (p.is_zero() || p.degree() == 0) return Rational(1);
    Rational m(0);
    for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(p.coeff(k))));
    return 1 + m / abs(p.leading());
}

std::vector<Interval> isolate_real_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("isolate_real_roots: zero polynomial");
    std::vector<Interval> out;
    UniPoly s = p.squarefree_part();
    if (s.degree() <= 0) return out;
    auto chain = sturm_chain(s);
    Rational bound = cauchy_bound(s);

    struct Seg {
        Rational lo, hi;
    };
    std::vector<Seg> stack{{-bound, bound}};
    while (!stack.empty()) {
        Seg seg = stack.back();
        stack.pop_back();
        int count = count_roots_chain(chain, seg.lo, seg.hi);
        if (count == 0) continue;
        if (count == 1) {
            out.push_back({seg.lo, seg.hi});
            continue;
        }
        Rational mid = (seg.lo + seg.hi) / 2;
        if (s.sign_at(mid) == 0) {
            // The midpoint is itself a root; carve out a symmetric
            // isolating interval around it.
            Rational delta = (seg.hi - seg.lo) / 4;
            while (s.sign_at(mid - delta) == 0 || s.sign_at(mid + delta) == 0 ||
                   count_roots_chain(chain, mid - delta, mid + delta) != 1)
                delta /= 2;
            out.push_back({mid - delta, mid + delta});
            stack.push_back({seg.lo, mid - delta});
            stack.push_back({mid + delta, seg.hi});
        } else {
            stack.push_back({seg.lo, mid});
            stack.push_back({mid, seg.hi});
        }
    }
    std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    return out;
}

Interval refine_root(const UniPoly& p, Interval iv, const Rational& width) {
    if (p.is_zero()) throw std::domain_error("refine_root: zero polynomial");
    if (width <= 0) throw std::domain_error("refine_root: width must be positive");
    UniPoly s = p.squarefree_part();
    if (s.degree() <= 0) throw std::domain_error("refine_root: constant polynomial");

    int slo = s.sign_at(iv.lo), shi = s.sign_at(iv.hi);
    if (slo == 0 && shi == 0) {
        if (iv.lo == iv.hi) return iv;
        throw std::domain_error("refine_root: interval is not isolating");
    }
    // A root sitting exactly on an endpoint: the interval isolates it
    // only if the interior is root-free.
    if (slo == 0 || shi == 0) {
        Rational r = slo == 0 ? iv.lo : iv.hi;
        int interior = count_distinct_roots(s, iv.lo, iv.hi) - (shi == 0 ? 1 : 0);
        if (interior != 0) throw std::domain_error("refine_root: interval is not isolating");
        return {r, r};
    }
    if (count_distinct_roots(s, iv.lo, iv.hi) != 1)
        throw std::domain_error("refine_root: interval is not isolating");

    while (iv.hi - iv.lo > width) {
        Rational mid = (iv.lo + iv.hi) / 2;
        int sm = s.sign_at(mid);
        if (sm == 0) {
            Rational h = width / 2;
            return {std::max(iv.lo, Rational(mid - h)), std::min(iv.hi, Rational(mid + h))};
        }
        if (sm == slo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return iv;
}

namespace {

std::vector<BigInt> positive_divisors(BigInt n) {
    n = abs(n);
    std::vector<BigInt> divs;
    BigInt i = 1;
    for (; i * i <= n; ++i) {
        if (n % i == 0) {
            divs.push_back(i);
            if (i * i != n) divs.push_back(n / i);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
    std::vector<Rational> out;
    UniPoly s = p.squarefree_part();
    if (s.degree() <= 0) return out;

    auto divs = positive_divisors(s.leading().get_num());
    for (const Interval& iv : isolate_real_roots(s)) {
        // A rational root u/v (reduced) must have v | leading coefficient.
        // Refine until at most one fraction with each denominator fits.
        BigInt vmax = divs.back();
        Interval fine = refine_root(s, iv, make_rational(BigInt(1), 2 * vmax * vmax));
        Rational mid = fine.midpoint();
        for (const BigInt& v : divs) {
            BigInt u = round_to_int(mid * Rational(v));
            Rational cand = make_rational(u, v);
            if (fine.contains(cand) && s(cand) == 0) {
                out.push_back(cand);
                break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rational AlgebraicNumber::rational_value() const {
    if (!is_rational()) throw std::domain_error("AlgebraicNumber: not rational");
    return -poly.coeff(0) / poly.coeff(1);
}

double AlgebraicNumber::approx() const {
    if (is_rational()) return to_double(rational_value());
    Interval fine = refine_root(poly, interval, pow10(-15));
    return to_double(fine.midpoint());
}

std::string AlgebraicNumber::to_string() const {
    if (is_rational()) return to_fraction_string(rational_value());
    return "root of " + poly.to_string() + " in [" + to_fraction_string(interval.lo) + ", " +
           to_fraction_string(interval.hi) + "]";
}

AlgebraicNumber minimal_poly_candidate(const UniPoly& p, const Interval& iv) {
    if (p.is_zero()) throw std::domain_error("minimal_poly_candidate: zero polynomial");
    UniPoly s = p.squarefree_part();
    if (s.degree() <= 0) throw std::domain_error("minimal_poly_candidate: constant polynomial");

    int roots_at_lo = s.sign_at(iv.lo) == 0 ? 1 : 0;
    int interior = iv.lo == iv.hi ? 0 : count_distinct_roots(s, iv.lo, iv.hi);
    if (roots_at_lo + interior != 1)
        throw std::domain_error("minimal_poly_candidate: interval is not isolating");

    // If the isolated root is rational, its minimal polynomial is linear.
    for (const Rational& r : rational_roots(s)) {
        if (iv.contains(r)) {
            UniPoly lin = UniPoly::linear(-r, Rational(1)).primitive_part();
            return AlgebraicNumber{lin, {r, r}, true};
        }
    }

    // Otherwise strip every rational linear factor; the root survives.
    UniPoly t = s;
    for (const Rational& r : rational_roots(s)) {
        UniPoly lin = UniPoly::linear(-r, Rational(1));
        auto [q, rem] = UniPoly::divmod(t, lin);
        if (!rem.is_zero()) throw std::logic_error("minimal_poly_candidate: factor must divide");
        t = q;
    }
    t = t.primitive_part();
    // Degree <= 3 with no rational root is irreducible over Q.
    bool certified = t.degree() <= 3;
    return AlgebraicNumber{t, iv, certified};
}

}  // namespace absorb
