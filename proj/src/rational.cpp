#include "robtree/rational.hpp"

#include "robtree/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace robtree {

namespace {

mpz_class pow10(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Rational parse_decimal(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
        std::string exp_text(s.substr(epos + 1));
        std::string_view digits = exp_text;
        if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) digits.remove_prefix(1);
        if (!all_digits(digits)) throw ParseError("malformed exponent in '" + std::string(text) + "'");
        exponent = std::strtol(exp_text.c_str(), nullptr, 10);
        s = s.substr(0, epos);
    }
    std::string_view int_part = s;
    std::string_view frac_part;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        int_part = s.substr(0, dot);
        frac_part = s.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) throw ParseError("empty number '" + std::string(text) + "'");
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
        throw ParseError("malformed number '" + std::string(text) + "'");
    }
    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class mantissa(digits.empty() ? "0" : digits, 10);
    long scale = static_cast<long>(frac_part.size()) - exponent;
    Rational value;
    if (scale >= 0) {
        value = Rational(mantissa, pow10(static_cast<unsigned long>(scale)));
    } else {
        value = Rational(mantissa * pow10(static_cast<unsigned long>(-scale)));
    }
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty numeric cell");
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Rational num = parse_decimal(trim(s.substr(0, slash)));
        Rational den = parse_decimal(trim(s.substr(slash + 1)));
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        Rational r = num / den;
        return r;
    }
    return parse_decimal(s);
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Rational& value) {
    // Correctly rounded (half to even); get_d() truncates.
    if (value == 0) return 0.0;
    mpz_class num = abs(value.get_num());
    mpz_class den = value.get_den();
    long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) - static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
    // Now 2^(e-1) < |x| < 2^(e+1); make 2^e <= |x|.
    mpz_class lhs = num, rhs = den;
    if (e >= 0) rhs <<= static_cast<mp_bitcnt_t>(e); else lhs <<= static_cast<mp_bitcnt_t>(-e);
    if (lhs < rhs) --e;
    const long shift = 52 - e;
    if (shift >= 0) num <<= static_cast<mp_bitcnt_t>(shift); else den <<= static_cast<mp_bitcnt_t>(-shift);
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const int cmp = mpz_cmp(mpz_class(r * 2).get_mpz_t(), den.get_mpz_t());
    if (cmp > 0 || (cmp == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;
    const double magnitude = std::ldexp(q.get_d(), static_cast<int>(-shift));
    return value < 0 ? -magnitude : magnitude;
}

bool has_finite_decimal(const Rational& value) {
    mpz_class den = value.get_den();
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) den /= 2;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) den /= 5;
    return den == 1;
}

namespace {

std::string place_point(const std::string& digits, std::size_t frac_len) {
    std::string padded = digits;
    if (padded.size() <= frac_len) padded.insert(0, frac_len + 1 - padded.size(), '0');
    if (frac_len == 0) return padded;
    std::string out = padded.substr(0, padded.size() - frac_len) + "." + padded.substr(padded.size() - frac_len);
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
    return out;
}

}  // namespace

std::string to_decimal_string(const Rational& value, int significant) {
    if (value == 0) return "0";
    const bool negative = value < 0;
    Rational mag = abs(value);
    std::string body;
    if (has_finite_decimal(mag)) {
        mpz_class den = mag.get_den();
        std::size_t frac_len = 0;
        mpz_class num = mag.get_num();
        while (den != 1) {
            num *= 10;
            ++frac_len;
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            num /= g;
            den /= g;
        }
        body = place_point(num.get_str(), frac_len);
    } else {
        // Find k with 10^(sig-1) <= mag * 10^k < 10^sig.
        long k = 0;
        const Rational lo(pow10(static_cast<unsigned long>(significant - 1)));
        const Rational hi(pow10(static_cast<unsigned long>(significant)));
        Rational scaled = mag;
        while (scaled < lo) { scaled *= 10; ++k; }
        while (scaled >= hi) { scaled /= 10; --k; }
        // Round half up.
        mpz_class q = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
        if (q == pow10(static_cast<unsigned long>(significant))) { q /= 10; --k; }
        std::string digits = q.get_str();
        if (k >= 0) {
            body = place_point(digits, static_cast<std::size_t>(k));
        } else {
            body = digits + std::string(static_cast<std::size_t>(-k), '0');
        }
    }
    return negative ? "-" + body : body;
}

Rational from_integer(long long value) {
    const unsigned long long magnitude =
        value < 0 ? 0ULL - static_cast<unsigned long long>(value) : static_cast<unsigned long long>(value);
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof magnitude, 0, 0, &magnitude);
    if (value < 0) z = -z;
    return Rational(z);
}

Rational make_rational(long long num, long long den) {
    if (den == 0) throw DomainError("zero denominator");
    Rational r = from_integer(num) / from_integer(den);
    return r;
}

int ceil_log2(long long x) {
    int r = 0;
    long long p = 1;
    while (p < x) { p <<= 1; ++r; }
    return r;
}

int floor_log2(long long x) {
    int r = -1;
    while (x > 0) { x >>= 1; ++r; }
    return r;
}

}  // namespace robtree
