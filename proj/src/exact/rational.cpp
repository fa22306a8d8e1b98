#include "certsolve/rational.hpp"

#include <cctype>
#include <cmath>

#include "certsolve/errors.hpp"

namespace certsolve {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) {
    if (q_.get_den() == 0) throw InvalidInput("rational with zero denominator");
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InvalidInput("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
    s = s.substr(start);
    if (s.empty()) throw ParseError("empty number");

    if (auto slash = s.find('/'); slash != std::string::npos) {
        Rational n = parse(s.substr(0, slash));
        Rational d = parse(s.substr(slash + 1));
        if (d.is_zero()) throw ParseError("zero denominator in '" + s + "'");
        return n / d;
    }

    bool neg = false;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
    }
    std::string digits;
    long scale = 0;
    bool seen_digit = false;
    bool seen_point = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            seen_digit = true;
            if (seen_point) ++scale;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!seen_digit) throw ParseError("malformed number '" + s + "'");
    long exponent = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        std::size_t used = 0;
        try {
            exponent = std::stol(s.substr(i), &used);
        } catch (const std::exception&) {
            throw ParseError("malformed exponent in '" + s + "'");
        }
        i += used;
    }
    if (i != s.size()) throw ParseError("malformed number '" + s + "'");

    Integer n(digits, 10);
    if (neg) n = -n;
    Integer ten_pow;
    long e = exponent - scale;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rational(n * ten_pow) : Rational(n, ten_pow);
}

Rational Rational::from_double(double v) {
    if (!std::isfinite(v)) throw InvalidInput("non-finite double");
    return Rational(mpq_class(v));
}

std::string Rational::to_string() const { return q_.get_str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, unsigned exp) {
    Rational out(1);
    Rational b = base;
    while (exp) {
        if (exp & 1U) out *= b;
        exp >>= 1U;
        if (exp) b *= b;
    }
    return out;
}

Integer floor(const Rational& r) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
    return out;
}

Integer ceil(const Rational& r) {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
    return out;
}

namespace {

// Simplest rational in [lo, hi] with 0 <= lo <= hi, via continued fractions.
Rational simplest_nonneg(const Rational& lo, const Rational& hi) {
    Integer fl = floor(lo);
    if (Rational(fl) == lo) return lo;
    if (Rational(fl + 1) <= hi) return Rational(fl + 1);
    // lo and hi share the integer part fl; recurse on reciprocals of fractional parts.
    Rational lo_frac = lo - Rational(fl);
    Rational hi_frac = hi - Rational(fl);
    Rational inner = simplest_nonneg(Rational(1) / hi_frac, Rational(1) / lo_frac);
    return Rational(fl) + Rational(1) / inner;
}

}  // namespace

Rational simplest_between(const Rational& lo, const Rational& hi) {
    if (hi < lo) throw InvalidInput("simplest_between: empty interval");
    if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
    if (lo.sign() > 0) return simplest_nonneg(lo, hi);
    return -simplest_nonneg(-hi, -lo);
}

std::string to_decimal(const Rational& r, int digits, bool round_up) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rational scaled = r * Rational(scale);
    Integer v = round_up ? ceil(scaled) : floor(scaled);
    bool neg = v < 0;
    if (neg) v = -v;
    std::string s = v.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    return (neg ? "-" : "") + s;
}

std::size_t bit_length(const Integer& v) {
    if (v == 0) return 0;
    return mpz_sizeinbase(v.get_mpz_t(), 2);
}

}  // namespace certsolve
