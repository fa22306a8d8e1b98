#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace certsolve {

using Integer = mpz_class;

/// Exact rational number in canonical form: gcd(|num|, den) = 1, den > 0, zero is 0/1.
///
/// Every constructor canonicalizes, so two equal values always have identical
/// numerator and denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
    Rational(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    template <class U>
    Rational(const __gmp_expr<mpz_t, U>& e) : q_(Integer(e)) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
    explicit Rational(const mpq_class& q);

    /// Accepts "7", "-3/4", "0.608", "1.5e-3".
    static Rational parse(std::string_view text);
    /// Exact value of a finite double.
    static Rational from_double(double v);

    const mpq_class& raw() const noexcept { return q_; }
    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    int sign() const noexcept { return sgn(q_); }
    bool is_zero() const noexcept { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    double to_double() const { return q_.get_d(); }
    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class q_;
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, unsigned exp);
Integer floor(const Rational& r);
Integer ceil(const Rational& r);
/// Rational with the smallest denominator in the closed interval [lo, hi] (Stern-Brocot).
Rational simplest_between(const Rational& lo, const Rational& hi);
/// Decimal rendering with `digits` fractional digits; `round_up` selects ceiling, otherwise floor.
std::string to_decimal(const Rational& r, int digits, bool round_up = false);

std::size_t bit_length(const Integer& v);

// Coefficient-ring hooks used by the generic subresultant code.
inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

}  // namespace certsolve

template <>
struct std::hash<certsolve::Rational> {
    std::size_t operator()(const certsolve::Rational& r) const noexcept {
        return std::hash<std::string>{}(r.to_string());
    }
};
