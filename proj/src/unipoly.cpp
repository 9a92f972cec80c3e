#include "absorb/unipoly.hpp"

#include <stdexcept>

namespace absorb {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

UniPoly UniPoly::constant(const Rational& c) {
    UniPoly p;
    if (c != 0) p.coeffs_ = {c};
    return p;
}

UniPoly UniPoly::linear(const Rational& c0, const Rational& c1) {
    return UniPoly(std::vector<Rational>{c0, c1});
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<size_t>(k)];
}

Rational UniPoly::operator()(const Rational& at) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

int UniPoly::sign_at(const Rational& at) const { return sgn((*this)(at)); }

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> c(coeffs_);
    for (auto& x : c) x = -x;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
    for (size_t k = 0; k < o.coeffs_.size(); ++k) c[k] += o.coeffs_[k];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Rational& s) const {
    if (s == 0) return UniPoly();
    std::vector<Rational> c(coeffs_);
    for (auto& x : c) x *= s;
    return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw std::domain_error("UniPoly::divmod: division by zero polynomial");
    std::vector<Rational> rem(num.coeffs_);
    int dd = den.degree();
    int dn = static_cast<int>(rem.size()) - 1;
    if (dn < dd) return {UniPoly(), num};
    std::vector<Rational> quot(static_cast<size_t>(dn - dd + 1), Rational(0));
    for (int k = dn; k >= dd; --k) {
        Rational f = rem[static_cast<size_t>(k)] / den.leading();
        if (f == 0) continue;
        quot[static_cast<size_t>(k - dd)] = f;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<size_t>(k - dd + j)] -= f * den.coeffs_[static_cast<size_t>(j)];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

namespace {

// Positive scalar s such that p*s has coprime integer coefficients.
Rational positive_scale(const std::vector<Rational>& coeffs) {
    BigInt l = 1, g = 0;
    for (const auto& c : coeffs) {
        if (c == 0) continue;
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    }
    for (const auto& c : coeffs) {
        if (c == 0) continue;
        BigInt scaled = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
    }
    if (g == 0) return Rational(1);
    return make_rational(l, g);
}

}  // namespace

UniPoly UniPoly::primitive_part_keep_sign() const {
    if (is_zero()) return UniPoly();
    return *this * positive_scale(coeffs_);
}

UniPoly UniPoly::primitive_part() const {
    UniPoly p = primitive_part_keep_sign();
    if (!p.is_zero() && sgn(p.leading()) < 0) p = -p;
    return p;
}

UniPoly gcd_poly(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = UniPoly::divmod(x, y).second;
        x = y;
        y = r.primitive_part_keep_sign();  // keep remainders small
    }
    return x.primitive_part();
}

UniPoly UniPoly::squarefree_part() const {
    if (is_zero()) return UniPoly();
    if (degree() == 0) return UniPoly::constant(Rational(1));
    UniPoly g = gcd_poly(*this, derivative());
    if (g.degree() == 0) return primitive_part();
    auto [q, r] = divmod(*this, g);
    if (!r.is_zero()) throw std::logic_error("squarefree_part: gcd does not divide polynomial");
    return q.primitive_part();
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<size_t>(k)];
        if (c == 0) continue;
        Rational a = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        bool unit = a == 1 && k > 0;
        if (!unit) out += to_fraction_string(a);
        if (k > 0) {
            if (!unit) out += "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace absorb
