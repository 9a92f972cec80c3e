#include "absorb/roots.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "support/test_oracles.hpp"

using namespace absorb;

namespace {

const UniPoly kCubic({-7, 10, -5, 1});  // z^3 - 5 z^2 + 10 z - 7

double poly_at(const UniPoly& p, double z) {
    double acc = 0;
    for (int k = p.degree(); k >= 0; --k) acc = acc * z + to_double(p.coeff(k));
    return acc;
}

}  // namespace

TEST_SUITE("roots") {
    TEST_CASE("cubic has a unique real root inside (1,2)") {
        // sign oracle at integer points: p(1) = -1 < 0 < 1 = p(2)
        CHECK(kCubic.sign_at(Rational(1)) == -1);
        CHECK(kCubic.sign_at(Rational(2)) == 1);

        auto roots = isolate_real_roots(kCubic);
        REQUIRE(roots.size() == 1);
        Interval iv = refine_root(kCubic, roots[0], make_rational(1, 4));
        CHECK(iv.lo > 1);
        CHECK(iv.hi < 2);
    }

    TEST_CASE("cubic root refines to the bisection oracle") {
        auto roots = isolate_real_roots(kCubic);
        REQUIRE(roots.size() == 1);
        Interval fine = refine_root(kCubic, roots[0], pow10(-6));
        CHECK(fine.width() <= pow10(-6));

        double oracle = testsupport::double_bisect([](double z) { return poly_at(kCubic, z); }, 1, 2);
        CHECK(std::abs(to_double(fine.midpoint()) - oracle) < 2e-6);
        // frozen digits: the root lies between 1.4301 and 1.4302
        CHECK(kCubic.sign_at(make_rational(14301, 10000)) == -1);
        CHECK(kCubic.sign_at(make_rational(14302, 10000)) == 1);
    }

    TEST_CASE("symmetric quadratic isolates both square roots") {
        UniPoly p({-2, 0, 1});
        auto roots = isolate_real_roots(p);
        REQUIRE(roots.size() == 2);
        CHECK(roots[0].hi <= roots[1].lo);
        Interval neg = refine_root(p, roots[0], pow10(-6));
        Interval pos = refine_root(p, roots[1], pow10(-6));
        CHECK(std::abs(to_double(neg.midpoint()) + std::sqrt(2.0)) < 2e-6);
        CHECK(std::abs(to_double(pos.midpoint()) - std::sqrt(2.0)) < 2e-6);
    }

    TEST_CASE("no real roots, repeated roots, zero polynomial") {
        CHECK(isolate_real_roots(UniPoly({1, 0, 1})).empty());
        UniPoly repeated = UniPoly({-1, 1}) * UniPoly({-1, 1}) * UniPoly({3, 1});
        CHECK(isolate_real_roots(repeated).size() == 2);
        CHECK_THROWS_AS(isolate_real_roots(UniPoly()), std::domain_error);
    }

    TEST_CASE("refinement examples") {
        Interval iv = refine_root(UniPoly(std::vector<Rational>{make_rational(-1, 2), Rational(1)}),
                                  {Rational(0), Rational(1)}, pow10(-9));
        CHECK(iv.contains(make_rational(1, 2)));
        CHECK(iv.width() <= pow10(-9));

        Interval sqrt2 = refine_root(UniPoly({-2, 0, 1}), {Rational(1), Rational(2)}, pow10(-6));
        CHECK(std::abs(to_double(sqrt2.midpoint()) - 1.414214) < 2e-6);
    }

    TEST_CASE("refinement rejects non-isolating intervals") {
        UniPoly p({-2, 0, 1});
        CHECK_THROWS_AS(refine_root(p, {Rational(-2), Rational(2)}, pow10(-3)), std::domain_error);
        CHECK_THROWS_AS(refine_root(p, {Rational(5), Rational(6)}, pow10(-3)), std::domain_error);
        CHECK_THROWS_AS(refine_root(p, {Rational(1), Rational(2)}, Rational(0)), std::domain_error);
    }

    TEST_CASE("rational roots") {
        CHECK(rational_roots(kCubic).empty());
        // the candidates the rational-root theorem would try all fail
        for (long c : {1L, -1L, 7L, -7L}) CHECK(kCubic(Rational(c)) != 0);

        auto pm2 = rational_roots(UniPoly({-4, 0, 1}));
        REQUIRE(pm2.size() == 2);
        CHECK(pm2[0] == -2);
        CHECK(pm2[1] == 2);

        auto half = rational_roots(UniPoly({1, -2}));  // 1 - 2z
        REQUIRE(half.size() == 1);
        CHECK(half[0] == make_rational(1, 2));

        auto mixed = rational_roots(UniPoly({0, 1}) * UniPoly({-3, 2}) * UniPoly({-2, 0, 1}));
        REQUIRE(mixed.size() == 2);  // 0 and 3/2; the sqrt(2) pair is irrational
        CHECK(mixed[0] == 0);
        CHECK(mixed[1] == make_rational(3, 2));
    }

    TEST_CASE("minimal polynomial candidates") {
        UniPoly sq2({-2, 0, 1});
        AlgebraicNumber a = minimal_poly_candidate(sq2 * sq2, {Rational(1), Rational(2)});
        CHECK(a.poly == sq2);
        CHECK(a.minimality_certified);

        AlgebraicNumber b = minimal_poly_candidate(kCubic, isolate_real_roots(kCubic)[0]);
        CHECK(b.poly == kCubic);
        CHECK(b.minimality_certified);
        CHECK(b.poly.degree() == 3);

        // content normalization: ((k-1)/k)(k - z^2) at k = 2
        UniPoly scaled(std::vector<Rational>{Rational(1), Rational(0), make_rational(-1, 2)});
        AlgebraicNumber c = minimal_poly_candidate(scaled, {Rational(1), Rational(2)});
        CHECK(c.poly == sq2);
        CHECK(c.minimality_certified);

        // a rational root collapses to its linear minimal polynomial
        AlgebraicNumber d = minimal_poly_candidate(UniPoly({-4, 0, 1}),
                                                   {make_rational(3, 2), make_rational(5, 2)});
        CHECK(d.poly == UniPoly({-2, 1}));
        CHECK(d.minimality_certified);
        CHECK(d.is_rational());
        CHECK(d.rational_value() == 2);

        // degree 4 with no rational root stays an uncertified candidate
        UniPoly quartic = sq2 * UniPoly({-3, 0, 1});
        auto iv = isolate_real_roots(quartic);
        REQUIRE(iv.size() == 4);
        AlgebraicNumber e = minimal_poly_candidate(quartic, iv[2]);  // sqrt(2)
        CHECK(e.poly == quartic.primitive_part());
        CHECK(!e.minimality_certified);

        CHECK_THROWS_AS(minimal_poly_candidate(sq2, {Rational(-2), Rational(2)}), std::domain_error);
    }

    TEST_CASE("isolation is certified by sturm counts") {
        std::mt19937_64 rng(2024);
        for (int t = 0; t < 60; ++t) {
            std::vector<Rational> coeffs;
            int d = 1 + static_cast<int>(rng() % 6);
            for (int k = 0; k <= d; ++k) coeffs.emplace_back(static_cast<long>(rng() % 13) - 6);
            UniPoly p(coeffs);
            if (p.is_zero() || p.degree() < 1) continue;

            auto roots = isolate_real_roots(p);
            UniPoly s = p.squarefree_part();
            Rational bound = cauchy_bound(s);
            int total = count_distinct_roots(p, -bound, bound);
            CHECK(static_cast<int>(roots.size()) == total);
            for (size_t i = 0; i < roots.size(); ++i) {
                CHECK(count_distinct_roots(p, roots[i].lo, roots[i].hi) == 1);
                CHECK(s.sign_at(roots[i].lo) * s.sign_at(roots[i].hi) == -1);
                if (i + 1 < roots.size()) CHECK(roots[i].hi <= roots[i + 1].lo);
            }

            // nested refinement
            if (!roots.empty()) {
                Interval coarse = refine_root(p, roots[0], pow10(-4));
                Interval fine = refine_root(p, coarse, pow10(-8));
                CHECK(fine.lo >= coarse.lo);
                CHECK(fine.hi <= coarse.hi);
                CHECK(fine.width() <= pow10(-8));
            }

            // every rational root lies in some isolating interval
            for (const Rational& r : rational_roots(p)) {
                bool covered = false;
                for (const Interval& iv : roots)
                    if (iv.contains(r)) covered = true;
                CHECK(covered);
            }
        }
    }
}
