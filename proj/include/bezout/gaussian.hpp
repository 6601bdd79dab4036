#pragma once

#include <string>
#include <utility>

#include "bezout/rational.hpp"

namespace bezout {

/// Exact complex number with rational real and imaginary parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT: rationals embed
    GaussianRational(long n) : re_(n) {}                   // NOLINT: integers embed
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm_sq() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re_ + o.re_, im_ + o.im_}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re_ - o.re_, im_ - o.im_}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    GaussianRational operator/(const GaussianRational& o) const {
        const Rational n = o.norm_sq();
        if (n.is_zero()) throw division_by_zero("GaussianRational: division by zero");
        const GaussianRational p = *this * o.conj();
        return {p.re_ / n, p.im_ / n};
    }
    GaussianRational inverse() const { return GaussianRational(1) / *this; }

    bool operator==(const GaussianRational&) const = default;

    /// Diagnostics only; not a serialization format.
    std::string str() const {
        if (im_.is_zero()) return re_.str();
        std::string im_part;
        if (im_.is_one()) im_part = "i";
        else if (im_ == Rational(-1)) im_part = "-i";
        else im_part = im_.str() + "i";
        if (re_.is_zero()) return im_part;
        return re_.str() + (im_.sign() > 0 ? "+" : "") + im_part;
    }

private:
    Rational re_{0}, im_{0};
};

/// How complex moduli are over-approximated by rationals.
enum class BoundPolicy { Sum, Sqrt };

/// A rational B with |c| <= B, i.e. B^2 >= re^2 + im^2.
///
/// Sum:  B = |re| + |im|. Subadditive and submultiplicative, the default.
/// Sqrt: ceiling of sqrt(re^2 + im^2) taken over integers after scaling by
///       2^16, so the bound is tight to one part in 2^16. Sound but not
///       necessarily subadditive because of the ceiling.
inline Rational modulus_upper_bound(const GaussianRational& c,
                                    BoundPolicy policy = BoundPolicy::Sum) {
    if (policy == BoundPolicy::Sum) return c.re().abs() + c.im().abs();
    const Rational s = c.norm_sq();
    if (s.is_zero()) return Rational(0);
    constexpr unsigned long kScaleBits = 16;
    // sqrt(p/q) = sqrt(p*q*4^S) / (q*2^S) <= ceil_sqrt(p*q*4^S) / (q*2^S)
    Integer m = s.numerator() * s.denominator();
    mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), 2 * kScaleBits);
    Integer root;
    mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
    if (root * root < m) root += 1;
    Integer den = s.denominator();
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), kScaleBits);
    return Rational(root, den);
}

}  // namespace bezout
