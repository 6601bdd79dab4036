#include "bezout/groebner.hpp"

#include <algorithm>
#include <utility>

namespace bezout {

namespace {

Reduction reduce_by(const MultiPoly& p, const std::vector<MultiPoly>& basis, TermOrder order) {
    const std::size_t n = p.var_count();
    Reduction out{MultiPoly(n), std::vector<MultiPoly>(basis.size(), MultiPoly(n))};
    MultiPoly work = p;
    while (!work.is_zero()) {
        const auto [lm, lc] = work.leading_term(order);
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].is_zero()) continue;
            const auto [bm, bc] = basis[i].leading_term(order);
            if (!bm.divides(lm)) continue;
            const MultiPoly q = MultiPoly::term(n, lm.divide_by(bm), lc / bc);
            work = work - q * basis[i];
            out.quotients[i] = out.quotients[i] + q;
            reduced = true;
            break;
        }
        if (!reduced) {
            const MultiPoly t = MultiPoly::term(n, lm, lc);
            out.remainder = out.remainder + t;
            work = work - t;
        }
    }
    return out;
}

struct PendingPair {
    std::size_t i, j;
    Monomial lcm;
    int degree;
    std::size_t index;  // creation order, the deterministic tie-breaker
};

}  // namespace

TrackedBasis::TrackedBasis(PolyTuple generators, TermOrder order, std::vector<MultiPoly> elements,
                           std::vector<PolyTuple> cofactors)
    : generators_(std::move(generators)),
      order_(order),
      elements_(std::move(elements)),
      cofactors_(std::move(cofactors)) {
    if (elements_.size() != cofactors_.size())
        throw dimension_mismatch("TrackedBasis: one cofactor tuple per element required");
}

const PolyTuple& TrackedBasis::cofactor(std::size_t i) const {
    if (i >= cofactors_.size()) throw index_out_of_range("TrackedBasis: cofactor index out of range");
    return cofactors_[i];
}

TrackedBasis buchberger(const PolyTuple& f, TermOrder order) {
    const std::size_t count = f.size();
    const std::size_t n = f.var_count();
    if (std::all_of(f.begin(), f.end(), [](const MultiPoly& p) { return p.is_zero(); }))
        throw all_zero_input("buchberger: all generators are zero");

    std::vector<MultiPoly> basis;
    std::vector<PolyTuple> cofactors;
    const auto append = [&](MultiPoly p, PolyTuple cof) {
        const auto [lm, lc] = p.leading_term(order);
        if (!lc.is_one()) {
            const GaussianRational inv = lc.inverse();
            p = p * inv;
            cof = cof * inv;
        }
        basis.push_back(std::move(p));
        cofactors.push_back(std::move(cof));
    };
    for (std::size_t j = 0; j < count; ++j)
        if (!f[j].is_zero()) append(f[j], PolyTuple::unit_vector(count, n, j));

    std::vector<PendingPair> pending;
    std::size_t next_index = 0;
    const auto add_pairs_for = [&](std::size_t t) {
        const Monomial lm_t = basis[t].leading_term(order).first;
        for (std::size_t s = 0; s < t; ++s) {
            const Monomial lm_s = basis[s].leading_term(order).first;
            Monomial l = Monomial::lcm(lm_s, lm_t);
            if (l == lm_s * lm_t) continue;  // coprime leading monomials: S-polynomial drops to zero
            const int deg = l.total_degree();
            pending.push_back({s, t, std::move(l), deg, next_index++});
        }
    };
    for (std::size_t t = 0; t < basis.size(); ++t) add_pairs_for(t);

    while (!pending.empty()) {
        const auto it = std::min_element(
            pending.begin(), pending.end(), [](const PendingPair& a, const PendingPair& b) {
                return a.degree != b.degree ? a.degree < b.degree : a.index < b.index;
            });
        const PendingPair pair = *it;
        pending.erase(it);

        // Basis elements are monic, so the S-polynomial needs no coefficient scaling.
        const Monomial lm_i = basis[pair.i].leading_term(order).first;
        const Monomial lm_j = basis[pair.j].leading_term(order).first;
        const MultiPoly u = MultiPoly::term(n, pair.lcm.divide_by(lm_i), GaussianRational(1));
        const MultiPoly v = MultiPoly::term(n, pair.lcm.divide_by(lm_j), GaussianRational(1));
        const MultiPoly s_poly = u * basis[pair.i] - v * basis[pair.j];
        if (s_poly.is_zero()) continue;
        PolyTuple cof = cofactors[pair.i] * u - cofactors[pair.j] * v;

        Reduction red = reduce_by(s_poly, basis, order);
        if (red.remainder.is_zero()) continue;
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (!red.quotients[k].is_zero()) cof = cof - cofactors[k] * red.quotients[k];
        append(std::move(red.remainder), std::move(cof));
        add_pairs_for(basis.size() - 1);
        if (basis.back().is_constant()) break;
    }
    return TrackedBasis(f, order, std::move(basis), std::move(cofactors));
}

Reduction reduce(const MultiPoly& p, const TrackedBasis& basis) {
    if (p.var_count() != basis.generators().var_count())
        throw dimension_mismatch("reduce: polynomial and basis disagree on variables");
    return reduce_by(p, basis.elements(), basis.order());
}

bool solves_unit_equation(const PolyTuple& g, const PolyTuple& f) {
    return g.dot(f).is_one();
}

std::optional<BezoutCertificate> solve_bezout(const PolyTuple& f, TermOrder order) {
    const TrackedBasis tb = buchberger(f, order);
    for (std::size_t i = 0; i < tb.size(); ++i) {
        const MultiPoly& b = tb.elements()[i];
        if (!b.is_constant()) continue;
        const GaussianRational c = b.constant_value();
        const PolyTuple g = tb.cofactor(i) * c.inverse();
        if (!solves_unit_equation(g, f))
            throw verification_failure("solve_bezout: certificate failed symbolic verification");
        return BezoutCertificate{f, g, true};
    }
    return std::nullopt;
}

}  // namespace bezout
