#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dynamo {

/// Exact rational number. Stored reduced with a positive denominator;
/// arithmetic goes through 128-bit intermediates and throws on overflow of
/// the reduced result rather than silently wrapping.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(std::int64_t value) : num_(value), den_(1) {}

    Rational(std::int64_t num, std::int64_t den) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num, den);
        num_ = g ? num / g : num;
        den_ = g ? den / g : den;
    }

    /// Parses "p/q" or a plain integer.
    static Rational parse(std::string_view text) {
        const auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos)
                return Rational(std::stoll(std::string(text)));
            return Rational(std::stoll(std::string(text.substr(0, slash))),
                            std::stoll(std::string(text.substr(slash + 1))));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("cannot parse rational: '" + std::string(text) + "'");
        }
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    std::int64_t ceil() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("rational division by zero");
        return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    using i128 = __int128;

    static Rational from_i128(i128 num, i128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const i128 g = gcd128(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
        if (num < lo || num > hi || den > hi)
            throw std::overflow_error("rational overflow");
        return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b) {
            const i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    std::int64_t num_;
    std::int64_t den_;
};

/// Value of the form base + coef * sqrt(radicand), compared exactly against
/// rationals via squaring. Covers every closed-form bound used here; when the
/// radicand is a perfect square the term folds into the rational part.
class BoundValue {
public:
    BoundValue(Rational value) : base_(value), coef_(0), rad_(0) {}
    BoundValue(std::int64_t value) : BoundValue(Rational(value)) {}

    static BoundValue with_sqrt(Rational base, Rational coef, Rational radicand) {
        if (radicand < Rational(0))
            throw std::invalid_argument("negative radicand");
        BoundValue v{base};
        v.coef_ = coef;
        v.rad_ = radicand;
        v.normalize();
        return v;
    }

    bool is_rational() const { return coef_ == Rational(0); }

    /// Requires is_rational().
    Rational rational() const {
        if (!is_rational()) throw std::logic_error("bound value is irrational");
        return base_;
    }

    Rational base() const { return base_; }
    Rational coef() const { return coef_; }
    Rational radicand() const { return rad_; }

    /// Sign of (*this - x): negative, zero or positive.
    int compare(const Rational& x) const { return sign_of(base_ - x, coef_, rad_); }

    bool at_most(const Rational& x) const { return compare(x) <= 0; }
    bool at_least(const Rational& x) const { return compare(x) >= 0; }

    double to_double() const;

    std::string str() const {
        if (is_rational()) return base_.str();
        std::string out;
        if (!(base_ == Rational(0))) out += base_.str() + " + ";
        if (!(coef_ == Rational(1))) out += coef_.str() + "*";
        out += "sqrt(" + rad_.str() + ")";
        return out;
    }

private:
    // Sign of a + b*sqrt(s) with s >= 0.
    static int sign_of(const Rational& a, const Rational& b, const Rational& s) {
        const Rational zero(0);
        if (b == zero || s == zero) return a < zero ? -1 : (zero < a ? 1 : 0);
        if (b < zero) return -sign_of(-a, -b, s);
        // b*sqrt(s) > 0 from here on.
        if (a >= zero) return 1;
        // Compare b*sqrt(s) against -a > 0 by squaring.
        const Rational lhs = b * b * s;
        const Rational rhs = a * a;
        return lhs < rhs ? -1 : (rhs < lhs ? 1 : 0);
    }

    void normalize() {
        if (coef_ == Rational(0) || rad_ == Rational(0)) {
            coef_ = Rational(0);
            rad_ = Rational(0);
            return;
        }
        const auto root = exact_sqrt(rad_);
        if (root) {
            base_ = base_ + coef_ * *root;
            coef_ = Rational(0);
            rad_ = Rational(0);
        }
    }

    static std::int64_t isqrt(std::int64_t v) {
        if (v < 0) return -1;
        std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
        while (r > 0 && r * r > v) --r;
        while ((r + 1) * (r + 1) <= v) ++r;
        return r;
    }

    static std::optional<Rational> exact_sqrt(const Rational& v) {
        const std::int64_t pn = isqrt(v.num());
        const std::int64_t pd = isqrt(v.den());
        if (pn * pn == v.num() && pd * pd == v.den()) return Rational(pn, pd);
        return std::nullopt;
    }

    Rational base_;
    Rational coef_;
    Rational rad_;
};

inline double BoundValue::to_double() const {
    return base_.to_double() + coef_.to_double() * std::sqrt(rad_.to_double());
}

}  // namespace dynamo
