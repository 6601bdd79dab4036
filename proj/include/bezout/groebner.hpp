#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bezout/multipoly.hpp"

namespace bezout {

/// Result of multivariate division: p = sum_i quotients[i] * basis[i] + remainder,
/// and no basis leading term divides any remainder term.
struct Reduction {
    MultiPoly remainder;
    std::vector<MultiPoly> quotients;
};

/// A Groebner basis that carries, for every element, an exact expression of
/// that element as a combination of the original generators.
class TrackedBasis {
public:
    TrackedBasis(PolyTuple generators, TermOrder order, std::vector<MultiPoly> elements,
                 std::vector<PolyTuple> cofactors);

    const PolyTuple& generators() const { return generators_; }
    TermOrder order() const { return order_; }
    const std::vector<MultiPoly>& elements() const { return elements_; }
    /// sum_j cofactor(i)[j] * generators()[j] == elements()[i], exactly.
    const PolyTuple& cofactor(std::size_t i) const;
    std::size_t size() const { return elements_.size(); }

private:
    PolyTuple generators_;
    TermOrder order_;
    std::vector<MultiPoly> elements_;
    std::vector<PolyTuple> cofactors_;
};

/// Buchberger's algorithm with cofactor tracking.
///
/// Deterministic by construction: S-pairs are processed lowest lcm total
/// degree first with ties broken by creation index, reducers are tried in
/// basis order, and appended elements are normalized monic. Pairs with
/// coprime leading monomials are skipped (their S-polynomials reduce to
/// zero and contribute no cofactors). Once a nonzero constant enters the
/// basis the run stops: any list containing a constant is already a
/// Groebner basis of the unit ideal.
///
/// Throws all_zero_input when every generator is zero.
TrackedBasis buchberger(const PolyTuple& f, TermOrder order = TermOrder::Grevlex);

/// Divides p by the tracked basis, reducers tried in basis order.
Reduction reduce(const MultiPoly& p, const TrackedBasis& basis);

struct BezoutCertificate {
    PolyTuple f;
    PolyTuple g;
    bool verified = false;  // set only after sum_j g_j f_j == 1 was checked symbolically
};

/// True when sum_j g_j f_j is identically 1.
bool solves_unit_equation(const PolyTuple& g, const PolyTuple& f);

/// Cofactors of 1 when the f_j generate the unit ideal, nullopt otherwise.
/// A returned certificate was verified symbolically before being handed out;
/// a verification mismatch would indicate a defect here and throws
/// verification_failure.
std::optional<BezoutCertificate> solve_bezout(const PolyTuple& f,
                                              TermOrder order = TermOrder::Grevlex);

}  // namespace bezout
