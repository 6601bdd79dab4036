#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <utility>

#include "bezout/errors.hpp"

namespace bezout {

using Integer = mpz_class;

/// Exact rational number. Always stored reduced, denominator always positive.
/// Arithmetic never rounds; division by zero throws.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor): integers embed
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
    Rational(const Integer& num, const Integer& den) {
        if (sgn(den) == 0) throw division_by_zero("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(const Integer& n) : q_(n) {}

    /// Accepts "p", "-p" or "p/q" with decimal digits; anything else throws parse_error.
    static Rational parse(std::string_view text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }
    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    /// Exact e-th power. gcd(p,q) = 1 implies gcd(p^e, q^e) = 1, so no re-reduction happens.
    Rational pow(unsigned long e) const {
        Integer np, dp;
        const Integer num = q_.get_num(), den = q_.get_den();
        mpz_pow_ui(np.get_mpz_t(), num.get_mpz_t(), e);
        mpz_pow_ui(dp.get_mpz_t(), den.get_mpz_t(), e);
        mpq_class r(np, dp);
        r.canonicalize();
        return Rational(std::move(r));
    }

    /// 2^e for either sign of e.
    static Rational pow2(long e) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
        return e < 0 ? Rational(Integer(1), p) : Rational(p);
    }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw division_by_zero("Rational: division by zero");
        return Rational(mpq_class(q_ / o.q_));
    }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        const int c = cmp(q_, o.q_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "p/q", or just "p" when the denominator is 1. Round-trips through parse().
    std::string str() const { return q_.get_str(); }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

inline Rational Rational::parse(std::string_view text) {
    const auto is_integer = [](std::string_view s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    const std::size_t slash = text.find('/');
    const std::string_view num = text.substr(0, slash == std::string_view::npos ? text.size() : slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer(num, true) || !is_integer(den, false))
        throw parse_error("invalid rational '" + std::string(text) + "'");
    const Integer d{std::string(den)};
    if (sgn(d) == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
    return Rational(Integer(std::string(num)), d);
}

}  // namespace bezout
