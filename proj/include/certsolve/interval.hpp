#pragma once

#include <span>
#include <string>
#include <vector>

#include "certsolve/rational.hpp"

namespace certsolve {

inline constexpr int kDefaultPrecision = 53;

/// mantissa * 2^exponent, normalized so the mantissa is odd (or the value is 0 * 2^0).
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(Integer mantissa, long exponent);
    explicit Dyadic(long v) : Dyadic(Integer(v), 0) {}

    const Integer& mantissa() const noexcept { return mant_; }
    long exponent() const noexcept { return exp_; }
    int sign() const { return sgn(mant_); }
    /// Significant bits of the mantissa.
    std::size_t bits() const { return bit_length(abs(mant_)); }

    Rational to_rational() const;
    /// Exact rendering "m*2^e".
    std::string to_string() const;

    /// Largest dyadic with at most `precision` mantissa bits that is <= r (round_up: smallest >= r).
    static Dyadic round(const Rational& r, int precision, bool round_up);
    Dyadic rounded(int precision, bool round_up) const;

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
    Dyadic operator-() const { return Dyadic(-mant_, exp_); }

    friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.mant_ == b.mant_ && a.exp_ == b.exp_; }
    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

private:
    Integer mant_{0};
    long exp_ = 0;
};

/// Closed interval [lo, hi] with dyadic endpoints carrying at most `precision` mantissa bits.
///
/// Every arithmetic result contains the exact result for all operand pairs
/// drawn from the inputs; endpoints are rounded outward to the working
/// precision, which is the larger of the operand precisions.
class MPInterval {
public:
    MPInterval() : MPInterval(Rational(0)) {}
    explicit MPInterval(const Rational& point, int precision = kDefaultPrecision);
    MPInterval(const Rational& lo, const Rational& hi, int precision = kDefaultPrecision);
    MPInterval(Dyadic lo, Dyadic hi, int precision);

    const Dyadic& lo() const noexcept { return lo_; }
    const Dyadic& hi() const noexcept { return hi_; }
    int precision() const noexcept { return prec_; }

    Rational lower() const { return lo_.to_rational(); }
    Rational upper() const { return hi_.to_rational(); }
    Rational width() const { return upper() - lower(); }
    Rational midpoint() const { return (lower() + upper()) / Rational(2); }

    bool is_point() const { return lo_ == hi_; }
    bool contains(const Rational& x) const { return lower() <= x && x <= upper(); }
    bool contains(const MPInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    /// o lies in the open interior of *this.
    bool strictly_contains(const MPInterval& o) const { return lo_ < o.lo_ && o.hi_ < hi_; }
    bool intersects(const MPInterval& o) const { return !(hi_ < o.lo_ || o.hi_ < lo_); }

    /// Same enclosure, endpoints re-expressed at a larger precision.
    MPInterval refined(int new_precision) const;
    MPInterval with_precision(int precision) const;

    /// "[1.6179, 1.6181]" with `digits` fractional digits, rounded outward.
    std::string to_decimal(int digits) const;
    /// "[m*2^e, m*2^e]"
    std::string to_dyadic_string() const;

    friend MPInterval operator+(const MPInterval& a, const MPInterval& b);
    friend MPInterval operator-(const MPInterval& a, const MPInterval& b);
    friend MPInterval operator*(const MPInterval& a, const MPInterval& b);
    /// Throws PossibleSingularity when 0 lies in b.
    friend MPInterval operator/(const MPInterval& a, const MPInterval& b);
    MPInterval operator-() const { return MPInterval(-hi_, -lo_, prec_); }

    friend bool operator==(const MPInterval& a, const MPInterval& b) = default;

private:
    Dyadic lo_;
    Dyadic hi_;
    int prec_ = kDefaultPrecision;
};

enum class IvOp { add, sub, mul, div };

MPInterval iv_arith(const MPInterval& a, const MPInterval& b, IvOp op);
MPInterval hull(const MPInterval& a, const MPInterval& b);
/// Intersection; throws InvalidInput when disjoint.
MPInterval intersect(const MPInterval& a, const MPInterval& b);

/// Horner evaluation of sum coeffs[i] x^i with outward rounding at `precision`
/// (or the precision of x when larger).
MPInterval iv_eval_poly(std::span<const Rational> coeffs, const MPInterval& x, int precision = 0);

/// One interval per variable. When `certified` is set the box holds exactly one
/// real solution of the system it was produced from.
struct SolutionBox {
    std::vector<MPInterval> coords;
    bool certified = false;

    std::size_t dimension() const { return coords.size(); }
    Rational max_width() const;
    std::vector<Rational> midpoint() const;
};

}  // namespace certsolve
