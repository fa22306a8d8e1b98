#include "certsolve/polytext.hpp"

#include <algorithm>
#include <cctype>

#include "certsolve/errors.hpp"

namespace certsolve {

namespace {

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

    RatFunc parse() {
        RatFunc r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(s_) + "'");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly constant(const Rational& c) const { return MultiPoly(c, vars_); }

    static RatFunc add(const RatFunc& a, const RatFunc& b, bool subtract) {
        if (a.den == b.den) return {subtract ? a.num - b.num : a.num + b.num, a.den};
        MultiPoly n1 = a.num * b.den;
        MultiPoly n2 = b.num * a.den;
        return {subtract ? n1 - n2 : n1 + n2, a.den * b.den};
    }

    RatFunc expr() {
        RatFunc acc = term();
        for (;;) {
            if (accept('+')) acc = add(acc, term(), false);
            else if (accept('-')) acc = add(acc, term(), true);
            else return acc;
        }
    }

    RatFunc term() {
        RatFunc acc = unary();
        for (;;) {
            if (accept('*')) {
                RatFunc f = unary();
                acc = {acc.num * f.num, acc.den * f.den};
            } else if (accept('/')) {
                RatFunc f = unary();
                if (f.num.is_zero()) fail("division by zero");
                acc = {acc.num * f.den, acc.den * f.num};
            } else {
                return acc;
            }
        }
    }

    RatFunc unary() {
        if (accept('-')) {
            RatFunc r = unary();
            return {-r.num, r.den};
        }
        if (accept('+')) return unary();
        return power();
    }

    RatFunc power() {
        RatFunc base = atom();
        if (!accept('^')) return base;
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a non-negative integer exponent");
        const std::string digits(s_.substr(start, pos_ - start));
        if (digits.size() > 6) fail("exponent too large");
        const auto e = static_cast<unsigned>(std::stoul(digits));
        return {pow(base.num, e), pow(base.den, e)};
    }

    RatFunc atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc r = expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return {constant(number()), constant(1)};
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            const std::string name(s_.substr(start, pos_ - start));
            if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) {
                pos_ = start;
                fail("undeclared identifier '" + name + "'");
            }
            return {MultiPoly::variable(name, vars_), constant(1)};
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Rational number() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            std::size_t look = pos_ + 1;
            if (look < s_.size() && (s_[look] == '+' || s_[look] == '-')) ++look;
            if (look < s_.size() && std::isdigit(static_cast<unsigned char>(s_[look]))) {
                pos_ = look;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            }
        }
        try {
            return Rational::parse(s_.substr(start, pos_ - start));
        } catch (const ParseError&) {
            pos_ = start;
            fail("malformed number");
        }
    }

    std::string_view s_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text, const std::vector<std::string>& vars) {
    RatFunc r = Parser(text, vars).parse();
    // Normalize: cancel common factors and make the denominator's leading coefficient 1.
    MultiPoly g = gcd(r.num, r.den);
    if (!g.is_constant()) {
        r.num = exact_div(r.num, g);
        r.den = exact_div(r.den, g);
    }
    const Rational l = r.den.lex_leading_coeff();
    r.num = (Rational(1) / l) * r.num;
    r.den = (Rational(1) / l) * r.den;
    r.num = r.num.with_vars(vars);
    r.den = r.den.with_vars(vars);
    return r;
}

MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
    RatFunc r = Parser(text, vars).parse();
    if (r.den.is_constant()) return ((Rational(1) / r.den.constant_value()) * r.num).with_vars(vars);
    MultiPoly q;
    if (divides(r.den, r.num, &q)) return q.with_vars(vars);
    throw ParseError("division by a non-constant polynomial in '" + std::string(text) + "'");
}

UniPoly parse_unipoly(std::string_view text, const std::string& var) {
    return parse_poly(text, {var}).to_unipoly(var).with_var(var);
}

}  // namespace certsolve
