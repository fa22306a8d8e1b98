#include "certsolve/interval.hpp"

#include <algorithm>
#include <array>

#include "certsolve/errors.hpp"

namespace certsolve {

namespace {

Integer shifted(const Integer& v, unsigned long bits) {
    Integer out;
    mpz_mul_2exp(out.get_mpz_t(), v.get_mpz_t(), bits);
    return out;
}

}  // namespace

// ---------------------------------------------------------------- Dyadic

Dyadic::Dyadic(Integer mantissa, long exponent) : mant_(std::move(mantissa)), exp_(exponent) {
    if (mant_ == 0) {
        exp_ = 0;
        return;
    }
    auto tz = mpz_scan1(mant_.get_mpz_t(), 0);
    if (tz > 0) {
        mpz_fdiv_q_2exp(mant_.get_mpz_t(), mant_.get_mpz_t(), tz);
        exp_ += static_cast<long>(tz);
    }
}

Rational Dyadic::to_rational() const {
    if (exp_ >= 0) return Rational(shifted(mant_, static_cast<unsigned long>(exp_)));
    return Rational(mant_, shifted(Integer(1), static_cast<unsigned long>(-exp_)));
}

std::string Dyadic::to_string() const { return mant_.get_str() + "*2^" + std::to_string(exp_); }

Dyadic Dyadic::round(const Rational& r, int precision, bool round_up) {
    if (precision < 1) throw InvalidInput("precision must be positive");
    if (r.is_zero()) return Dyadic();
    const Integer num = r.num();
    const Integer den = r.den();
    long k = precision - (static_cast<long>(bit_length(abs(num))) - static_cast<long>(bit_length(den)));
    for (;;) {
        Integer n = num;
        Integer d = den;
        if (k >= 0) n = shifted(n, static_cast<unsigned long>(k));
        else d = shifted(d, static_cast<unsigned long>(-k));
        Integer m;
        if (round_up) mpz_cdiv_q(m.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        else mpz_fdiv_q(m.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        Dyadic out(m, -k);
        if (out.bits() <= static_cast<std::size_t>(precision)) return out;
        --k;
    }
}

Dyadic Dyadic::rounded(int precision, bool round_up) const {
    if (precision < 1) throw InvalidInput("precision must be positive");
    const std::size_t b = bits();
    if (b <= static_cast<std::size_t>(precision)) return *this;
    const auto s = static_cast<unsigned long>(b - static_cast<std::size_t>(precision));
    Integer m;
    if (round_up) mpz_cdiv_q_2exp(m.get_mpz_t(), mant_.get_mpz_t(), s);
    else mpz_fdiv_q_2exp(m.get_mpz_t(), mant_.get_mpz_t(), s);
    return Dyadic(m, exp_ + static_cast<long>(s));
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.mant_ == 0) return b;
    if (b.mant_ == 0) return a;
    const long e = std::min(a.exp_, b.exp_);
    return Dyadic(shifted(a.mant_, static_cast<unsigned long>(a.exp_ - e)) +
                      shifted(b.mant_, static_cast<unsigned long>(b.exp_ - e)),
                  e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) { return Dyadic(a.mant_ * b.mant_, a.exp_ + b.exp_); }

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    const int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// ---------------------------------------------------------------- MPInterval

MPInterval::MPInterval(const Rational& point, int precision)
    : lo_(Dyadic::round(point, precision, false)), hi_(Dyadic::round(point, precision, true)), prec_(precision) {}

MPInterval::MPInterval(const Rational& lo, const Rational& hi, int precision)
    : lo_(Dyadic::round(lo, precision, false)), hi_(Dyadic::round(hi, precision, true)), prec_(precision) {
    if (hi < lo) throw InvalidInput("interval with lo > hi");
}

MPInterval::MPInterval(Dyadic lo, Dyadic hi, int precision)
    : lo_(lo.rounded(precision, false)), hi_(hi.rounded(precision, true)), prec_(precision) {
    if (hi_ < lo_) throw InvalidInput("interval with lo > hi");
}

MPInterval MPInterval::refined(int new_precision) const {
    if (new_precision < prec_) throw InvalidInput("refined: precision can only increase");
    return MPInterval(lo_, hi_, new_precision);
}

MPInterval MPInterval::with_precision(int precision) const { return MPInterval(lo_, hi_, precision); }

std::string MPInterval::to_decimal(int digits) const {
    return "[" + certsolve::to_decimal(lower(), digits, false) + ", " + certsolve::to_decimal(upper(), digits, true) +
           "]";
}

std::string MPInterval::to_dyadic_string() const { return "[" + lo_.to_string() + ", " + hi_.to_string() + "]"; }

MPInterval operator+(const MPInterval& a, const MPInterval& b) {
    const int p = std::max(a.prec_, b.prec_);
    return MPInterval(a.lo_ + b.lo_, a.hi_ + b.hi_, p);
}

MPInterval operator-(const MPInterval& a, const MPInterval& b) {
    const int p = std::max(a.prec_, b.prec_);
    return MPInterval(a.lo_ - b.hi_, a.hi_ - b.lo_, p);
}

MPInterval operator*(const MPInterval& a, const MPInterval& b) {
    const int p = std::max(a.prec_, b.prec_);
    std::array<Dyadic, 4> c{a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    auto [mn, mx] = std::minmax_element(c.begin(), c.end());
    return MPInterval(*mn, *mx, p);
}

MPInterval operator/(const MPInterval& a, const MPInterval& b) {
    if (b.contains_zero()) throw PossibleSingularity("interval division by an interval containing zero");
    const int p = std::max(a.prec_, b.prec_);
    const Rational al = a.lower(), ah = a.upper(), bl = b.lower(), bh = b.upper();
    std::array<Rational, 4> c{al / bl, al / bh, ah / bl, ah / bh};
    auto [mn, mx] = std::minmax_element(c.begin(), c.end());
    return MPInterval(*mn, *mx, p);
}

MPInterval iv_arith(const MPInterval& a, const MPInterval& b, IvOp op) {
    switch (op) {
        case IvOp::add: return a + b;
        case IvOp::sub: return a - b;
        case IvOp::mul: return a * b;
        case IvOp::div: return a / b;
    }
    throw InternalError("unknown interval operation");
}

MPInterval hull(const MPInterval& a, const MPInterval& b) {
    return MPInterval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()), std::max(a.precision(), b.precision()));
}

MPInterval intersect(const MPInterval& a, const MPInterval& b) {
    if (!a.intersects(b)) throw InvalidInput("intersect: disjoint intervals");
    return MPInterval(std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi()), std::max(a.precision(), b.precision()));
}

MPInterval iv_eval_poly(std::span<const Rational> coeffs, const MPInterval& x, int precision) {
    const int p = std::max(precision, x.precision());
    if (coeffs.empty()) return MPInterval(Rational(0), p);
    MPInterval acc(coeffs.back(), p);
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * x + MPInterval(coeffs[i], p);
    return acc;
}

Rational SolutionBox::max_width() const {
    Rational w(0);
    for (const auto& c : coords) w = std::max(w, c.width());
    return w;
}

std::vector<Rational> SolutionBox::midpoint() const {
    std::vector<Rational> out;
    out.reserve(coords.size());
    for (const auto& c : coords) out.push_back(c.midpoint());
    return out;
}

}  // namespace certsolve
