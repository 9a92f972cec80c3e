#include "absorb/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace absorb {

Rational pow10(int e) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return Rational(p);
    return make_rational(BigInt(1), p);
}

BigInt floor_to_int(const Rational& q) {
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return out;
}

BigInt round_to_int(const Rational& q) {
    if (sgn(q) >= 0) return floor_to_int(q + Rational(1, 2));
    return -floor_to_int(-q + Rational(1, 2));
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

std::optional<Rational> parse_rational_strict(const std::string& text) {
    std::string s = text;
    // trim
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) return std::nullopt;

    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        s.erase(s.begin());
    }
    auto slash = s.find('/');
    BigInt num, den = 1;
    if (slash == std::string::npos) {
        if (!all_digits(s)) return std::nullopt;
        num = BigInt(s);
    } else {
        std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (!all_digits(ns) || !all_digits(ds)) return std::nullopt;
        num = BigInt(ns);
        den = BigInt(ds);
        if (den == 0) return std::nullopt;
    }
    Rational r = make_rational(num, den);
    if (neg) r = -r;
    return r;
}

std::optional<Rational> parse_rational(const std::string& text) {
    if (auto r = parse_rational_strict(text)) return r;

    std::string s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) return std::nullopt;

    bool neg = false;
    size_t i = 0;
    if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';

    std::string int_part, frac_part, exp_part;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) int_part += s[i++];
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) frac_part += s[i++];
    }
    if (int_part.empty() && frac_part.empty()) return std::nullopt;
    long exp10 = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        std::string es;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) es += s[i++];
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) es += s[i++];
        if (es.empty() || es == "+" || es == "-") return std::nullopt;
        exp10 = std::strtol(es.c_str(), nullptr, 10);
    }
    if (i != s.size()) return std::nullopt;

    BigInt mantissa((int_part.empty() ? "0" : int_part) + frac_part);
    Rational r(mantissa);
    r *= pow10(static_cast<int>(exp10) - static_cast<int>(frac_part.size()));
    if (neg) r = -r;
    return Rational(r);
}

std::string to_fraction_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string decimal_string(const Rational& q, int significant_digits) {
    if (significant_digits < 1) significant_digits = 1;
    if (q == 0) return "0";
    std::string sign = sgn(q) < 0 ? "-" : "";
    Rational a = abs(q);

    // e = floor(log10(a)): a in [10^e, 10^{e+1})
    int e = 0;
    if (a >= 1) {
        while (a >= pow10(e + 1)) ++e;
    } else {
        while (a < pow10(e)) --e;
    }

    // Round a to `significant_digits` digits: n = round(a * 10^{digits-1-e}).
    int shift = significant_digits - 1 - e;
    BigInt n = round_to_int(a * pow10(shift));
    std::string digits = n.get_str();
    if (static_cast<int>(digits.size()) > significant_digits) {
        // Rounding carried over (e.g. 9.99 -> 10.0).
        ++e;
        digits.pop_back();
    }

    if (e >= significant_digits || e < -4) {
        // Scientific notation.
        std::string mant = digits.substr(0, 1);
        std::string rest = digits.substr(1);
        while (!rest.empty() && rest.back() == '0') rest.pop_back();
        if (!rest.empty()) mant += "." + rest;
        return sign + mant + "e" + (e < 0 ? "-" : "+") + std::to_string(e < 0 ? -e : e);
    }
    if (e >= 0) {
        std::string ip = digits.substr(0, e + 1);
        std::string fp = digits.substr(e + 1);
        while (!fp.empty() && fp.back() == '0') fp.pop_back();
        return sign + ip + (fp.empty() ? "" : "." + fp);
    }
    std::string fp(static_cast<size_t>(-e - 1), '0');
    fp += digits;
    while (fp.size() > 1 && fp.back() == '0') fp.pop_back();
    return sign + "0." + fp;
}

}  // namespace absorb
