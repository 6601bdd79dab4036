// Independent univariate oracle: classic polynomial long division and the
// extended Euclidean algorithm, written against MultiPoly restricted to one
// variable. Used to cross-check the Groebner-based solver on univariate pairs.
#pragma once

#include <utility>

#include "bezout/multipoly.hpp"

namespace euclid {

using bezout::GaussianRational;
using bezout::Monomial;
using bezout::MultiPoly;

inline int degree_1var(const MultiPoly& p) { return p.total_degree(); }

inline GaussianRational coeff_1var(const MultiPoly& p, int d) {
    return p.coefficient(Monomial({d}));
}

/// Long division p = q*d + r with deg r < deg d. Requires d nonzero.
inline std::pair<MultiPoly, MultiPoly> divmod_1var(MultiPoly p, const MultiPoly& d) {
    MultiPoly q(1);
    const int dd = degree_1var(d);
    const GaussianRational lead = coeff_1var(d, dd);
    while (!p.is_zero() && degree_1var(p) >= dd) {
        const int dp = degree_1var(p);
        const GaussianRational c = coeff_1var(p, dp) / lead;
        MultiPoly t = MultiPoly::term(1, Monomial({dp - dd}), c);
        q = q + t;
        p = p - t * d;
    }
    return {q, p};
}

struct ExtendedGcd {
    MultiPoly gcd;
    MultiPoly s;
    MultiPoly t;
};

/// Extended Euclid: returns (gcd, s, t) with s*a + t*b = gcd. The gcd is not
/// normalized; callers decide what "unit" means.
inline ExtendedGcd extended_euclid(MultiPoly a, MultiPoly b) {
    MultiPoly s0 = MultiPoly::constant(1, GaussianRational(1)), s1(1);
    MultiPoly t0(1), t1 = MultiPoly::constant(1, GaussianRational(1));
    while (!b.is_zero()) {
        auto [q, r] = divmod_1var(a, b);
        a = std::move(b);
        b = std::move(r);
        MultiPoly s2 = s0 - q * s1;
        MultiPoly t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return {std::move(a), std::move(s0), std::move(t0)};
}

inline bool coprime(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() && b.is_zero()) return false;
    return extended_euclid(a, b).gcd.is_constant();
}

/// When a, b are coprime, scale the Euclid cofactors so s*a + t*b = 1 exactly.
inline std::pair<MultiPoly, MultiPoly> euclid_bezout(const MultiPoly& a, const MultiPoly& b) {
    ExtendedGcd e = extended_euclid(a, b);
    const GaussianRational c = e.gcd.constant_value();
    const GaussianRational inv = c.inverse();
    return {e.s * inv, e.t * inv};
}

}  // namespace euclid
