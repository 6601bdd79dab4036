// Shared helpers for the test binaries: a deterministic random generator for
// rationals, polynomials, tuples and antisymmetric matrices, plus a couple of
// numeric utilities the oracles need.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "bezout/antisym.hpp"
#include "bezout/multipoly.hpp"

namespace testkit {

using bezout::AntisymMatrix;
using bezout::GaussianRational;
using bezout::Integer;
using bezout::Monomial;
using bezout::MultiPoly;
using bezout::PolyTuple;
using bezout::Rational;

inline Integer factorial(unsigned long k) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed) {}

    long range(long lo, long hi) {
        std::uniform_int_distribution<long> dist(lo, hi);
        return dist(engine);
    }

    Rational rational(long max_num = 3, long max_den = 3) {
        const long num = range(-max_num, max_num);
        const long den = range(1, max_den);
        return Rational(num, den);
    }

    GaussianRational gaussian(long max_num = 3, long max_den = 3) {
        return GaussianRational(rational(max_num, max_den), rational(max_num, max_den));
    }

    GaussianRational nonzero_gaussian(long max_num = 3, long max_den = 3) {
        for (;;) {
            GaussianRational c = gaussian(max_num, max_den);
            if (!c.is_zero()) return c;
        }
    }

    Monomial monomial(std::size_t n, int max_total_degree) {
        std::vector<int> exp(n, 0);
        int budget = max_total_degree;
        for (std::size_t j = 0; j < n; ++j) {
            const int e = static_cast<int>(range(0, budget));
            exp[j] = e;
            budget -= e;
        }
        return Monomial(std::move(exp));
    }

    MultiPoly poly(std::size_t n, int max_total_degree, int max_terms = 4) {
        MultiPoly p(n);
        const long terms = range(0, max_terms);
        for (long t = 0; t < terms; ++t)
            p.add_term(monomial(n, max_total_degree), gaussian());
        return p;
    }

    MultiPoly nonzero_poly(std::size_t n, int max_total_degree, int max_terms = 4) {
        for (;;) {
            MultiPoly p = poly(n, max_total_degree, max_terms);
            if (!p.is_zero()) return p;
        }
    }

    PolyTuple tuple(std::size_t count, std::size_t n, int max_total_degree, int max_terms = 4) {
        std::vector<MultiPoly> entries;
        entries.reserve(count);
        for (std::size_t j = 0; j < count; ++j)
            entries.push_back(poly(n, max_total_degree, max_terms));
        return PolyTuple(std::move(entries));
    }

    AntisymMatrix antisym(std::size_t count, std::size_t n, int max_total_degree,
                          int max_terms = 3) {
        AntisymMatrix h = AntisymMatrix::zero(count, n);
        for (std::size_t j = 0; j < count; ++j)
            for (std::size_t k = j + 1; k < count; ++k)
                h.set_upper(j, k, poly(n, max_total_degree, max_terms));
        return h;
    }

    /// A point of the closed polydisk of radius r: scale a random direction w
    /// so its modulus bound lands at a random fraction of r.
    std::vector<GaussianRational> in_disk_point(std::size_t n, const Rational& r,
                                                bezout::BoundPolicy policy) {
        static const Rational fractions[] = {Rational(0), Rational(1, 4), Rational(1, 2),
                                             Rational(3, 4), Rational(1)};
        std::vector<GaussianRational> z(n, GaussianRational());
        for (std::size_t j = 0; j < n; ++j) {
            const Rational t = fractions[range(0, 4)];
            if (t.is_zero()) continue;
            const GaussianRational w = nonzero_gaussian();
            const Rational ub = bezout::modulus_upper_bound(w, policy);
            // ub(scale * w) = scale * ub(w) = t * r for the Sum policy; for
            // Sqrt the bound only shrinks, so the point stays inside either way.
            z[j] = w * GaussianRational(r * t / ub);
        }
        return z;
    }

    /// A pair (x, a) with sum x_j a_j = 1, built directly: the last x is the
    /// constant 1 and its partner absorbs the rest of the sum.
    std::pair<PolyTuple, PolyTuple> solution_pair(std::size_t count, std::size_t n) {
        std::vector<MultiPoly> x, a;
        MultiPoly acc = MultiPoly::constant(n, GaussianRational(1));
        for (std::size_t j = 0; j + 1 < count; ++j) {
            x.push_back(poly(n, 1, 3));
            a.push_back(poly(n, 2, 3));
            acc = acc - x.back() * a.back();
        }
        x.push_back(MultiPoly::constant(n, GaussianRational(1)));
        a.push_back(std::move(acc));
        return {PolyTuple(std::move(x)), PolyTuple(std::move(a))};
    }
};

}  // namespace testkit
