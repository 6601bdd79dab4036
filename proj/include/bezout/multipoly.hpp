#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bezout/gaussian.hpp"
#include "bezout/monomial.hpp"

namespace bezout {

/// Sparse multivariate polynomial over the Gaussian rationals.
/// Canonical form: no zero coefficients are stored and terms are keyed in
/// graded-lex order, so structural equality is semantic equality.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, GaussianRational, GrlexLess>;

    explicit MultiPoly(std::size_t n) : n_(n) {}
    static MultiPoly constant(std::size_t n, const GaussianRational& c);
    /// z_{index+1}; index is zero-based.
    static MultiPoly variable(std::size_t n, std::size_t index);
    static MultiPoly term(std::size_t n, const Monomial& m, const GaussianRational& c);

    std::size_t var_count() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }
    bool is_one() const { return is_constant() && constant_value().is_one(); }
    /// Requires is_constant(); the zero polynomial yields 0.
    GaussianRational constant_value() const;
    /// -1 for the zero polynomial.
    int total_degree() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    GaussianRational coefficient(const Monomial& m) const;

    /// Accumulates c onto the coefficient at m; entries that cancel are dropped.
    void add_term(const Monomial& m, const GaussianRational& c);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const GaussianRational& c) const;
    MultiPoly pow(unsigned long e) const;
    bool operator==(const MultiPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    /// Exact evaluation; a ring homomorphism in every coordinate.
    GaussianRational evaluate(const std::vector<GaussianRational>& point) const;

    /// Splits into (terms of total degree <= d, the rest). head + tail == *this
    /// exactly; d = -1 puts everything in the tail.
    std::pair<MultiPoly, MultiPoly> truncate_total_degree(int d) const;

    /// Largest term under the given order. Requires a nonzero polynomial.
    std::pair<Monomial, GaussianRational> leading_term(TermOrder order) const;

    /// Human-readable rendering for diagnostics; not a serialization format.
    std::string str() const;

private:
    std::size_t n_;
    TermMap terms_;
};

/// Closed polydisk: every coordinate has modulus at most radius.
class Polydisk {
public:
    Polydisk(std::size_t n, Rational radius);
    std::size_t var_count() const { return n_; }
    const Rational& radius() const { return radius_; }

private:
    std::size_t n_;
    Rational radius_;
};

/// Coefficient majorant: sum over terms of modulus_upper_bound(c) * r^degree.
/// Dominates sup |p| over the closed polydisk for any bound policy, and is
/// monotone in the radius.
Rational polydisk_majorant(const MultiPoly& p, const Polydisk& disk,
                           BoundPolicy policy = BoundPolicy::Sum);

/// Nonempty vector of polynomials over a common variable set.
class PolyTuple {
public:
    explicit PolyTuple(std::vector<MultiPoly> entries);
    static PolyTuple zeros(std::size_t count, std::size_t n);
    /// All zeros except a 1 at the given position.
    static PolyTuple unit_vector(std::size_t count, std::size_t n, std::size_t index);

    std::size_t size() const { return entries_.size(); }
    std::size_t var_count() const { return entries_.front().var_count(); }
    const MultiPoly& operator[](std::size_t i) const { return entries_[i]; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    PolyTuple operator+(const PolyTuple& o) const;
    PolyTuple operator-(const PolyTuple& o) const;
    PolyTuple operator*(const MultiPoly& p) const;
    PolyTuple operator*(const GaussianRational& c) const;
    bool operator==(const PolyTuple&) const = default;

    /// sum_j (*this)[j] * o[j]
    MultiPoly dot(const PolyTuple& o) const;

private:
    std::vector<MultiPoly> entries_;
};

/// Max of the entrywise polydisk majorants (the tuple norm is the max norm).
Rational tuple_majorant(const PolyTuple& t, const Polydisk& disk,
                        BoundPolicy policy = BoundPolicy::Sum);

}  // namespace bezout
