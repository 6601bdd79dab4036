#include "bezout/multipoly.hpp"

#include <algorithm>

namespace bezout {

MultiPoly MultiPoly::constant(std::size_t n, const GaussianRational& c) {
    MultiPoly p(n);
    p.add_term(Monomial::unit(n), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t n, std::size_t index) {
    if (index >= n) throw index_out_of_range("MultiPoly: variable index out of range");
    std::vector<int> e(n, 0);
    e[index] = 1;
    return term(n, Monomial(std::move(e)), GaussianRational(1));
}

MultiPoly MultiPoly::term(std::size_t n, const Monomial& m, const GaussianRational& c) {
    MultiPoly p(n);
    p.add_term(m, c);
    return p;
}

GaussianRational MultiPoly::constant_value() const {
    if (terms_.empty()) return GaussianRational(0);
    if (!is_constant()) throw error("MultiPoly: constant_value of a non-constant");
    return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

GaussianRational MultiPoly::coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const GaussianRational& c) {
    if (m.var_count() != n_) throw dimension_mismatch("MultiPoly: monomial has wrong variable count");
    if (c.is_zero()) return;
    const auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (n_ != o.n_) throw dimension_mismatch("MultiPoly: variable counts differ in +");
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    if (n_ != o.n_) throw dimension_mismatch("MultiPoly: variable counts differ in -");
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (n_ != o.n_) throw dimension_mismatch("MultiPoly: variable counts differ in *");
    MultiPoly r(n_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

MultiPoly MultiPoly::operator*(const GaussianRational& c) const {
    MultiPoly r(n_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned long e) const {
    MultiPoly acc = constant(n_, GaussianRational(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

GaussianRational MultiPoly::evaluate(const std::vector<GaussianRational>& point) const {
    if (point.size() != n_) throw dimension_mismatch("MultiPoly: evaluation point has wrong length");
    // Power tables keep repeated exponents cheap.
    std::vector<int> max_exp(n_, 0);
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < n_; ++i) max_exp[i] = std::max(max_exp[i], m.exponent(i));
    std::vector<std::vector<GaussianRational>> powers(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        powers[i].reserve(max_exp[i] + 1);
        powers[i].push_back(GaussianRational(1));
        for (int e = 1; e <= max_exp[i]; ++e) powers[i].push_back(powers[i].back() * point[i]);
    }
    GaussianRational sum(0);
    for (const auto& [m, c] : terms_) {
        GaussianRational prod = c;
        for (std::size_t i = 0; i < n_; ++i)
            if (m.exponent(i) > 0) prod = prod * powers[i][m.exponent(i)];
        sum = sum + prod;
    }
    return sum;
}

std::pair<MultiPoly, MultiPoly> MultiPoly::truncate_total_degree(int d) const {
    MultiPoly head(n_), tail(n_);
    for (const auto& [m, c] : terms_)
        (m.total_degree() <= d ? head : tail).terms_.emplace(m, c);
    return {head, tail};
}

std::pair<Monomial, GaussianRational> MultiPoly::leading_term(TermOrder order) const {
    if (terms_.empty()) throw error("MultiPoly: leading_term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (monomial_less(best->first, it->first, order)) best = it;
    return {best->first, best->second};
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!out.empty()) out += " + ";
        std::string vars;
        for (std::size_t i = 0; i < n_; ++i) {
            const int e = m.exponent(i);
            if (e == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "z" + std::to_string(i + 1);
            if (e > 1) vars += "^" + std::to_string(e);
        }
        if (vars.empty()) {
            out += "(" + c.str() + ")";
        } else if (c.is_one()) {
            out += vars;
        } else {
            out += "(" + c.str() + ")*" + vars;
        }
    }
    return out;
}

Polydisk::Polydisk(std::size_t n, Rational radius) : n_(n), radius_(std::move(radius)) {
    if (radius_.sign() <= 0) throw error("Polydisk: radius must be positive");
}

Rational polydisk_majorant(const MultiPoly& p, const Polydisk& disk, BoundPolicy policy) {
    if (p.var_count() != disk.var_count())
        throw dimension_mismatch("polydisk_majorant: variable counts differ");
    Rational sum(0);
    for (const auto& [m, c] : p.terms())
        sum += modulus_upper_bound(c, policy) *
               disk.radius().pow(static_cast<unsigned long>(m.total_degree()));
    return sum;
}

PolyTuple::PolyTuple(std::vector<MultiPoly> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw dimension_mismatch("PolyTuple: at least one entry required");
    for (const auto& p : entries_)
        if (p.var_count() != entries_.front().var_count())
            throw dimension_mismatch("PolyTuple: entries disagree on the variable count");
}

PolyTuple PolyTuple::zeros(std::size_t count, std::size_t n) {
    return PolyTuple(std::vector<MultiPoly>(count, MultiPoly(n)));
}

PolyTuple PolyTuple::unit_vector(std::size_t count, std::size_t n, std::size_t index) {
    if (index >= count) throw index_out_of_range("PolyTuple: unit_vector index out of range");
    std::vector<MultiPoly> e(count, MultiPoly(n));
    e[index] = MultiPoly::constant(n, GaussianRational(1));
    return PolyTuple(std::move(e));
}

PolyTuple PolyTuple::operator+(const PolyTuple& o) const {
    if (size() != o.size()) throw dimension_mismatch("PolyTuple: lengths differ in +");
    std::vector<MultiPoly> r;
    r.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) r.push_back(entries_[i] + o.entries_[i]);
    return PolyTuple(std::move(r));
}

PolyTuple PolyTuple::operator-(const PolyTuple& o) const {
    if (size() != o.size()) throw dimension_mismatch("PolyTuple: lengths differ in -");
    std::vector<MultiPoly> r;
    r.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) r.push_back(entries_[i] - o.entries_[i]);
    return PolyTuple(std::move(r));
}

PolyTuple PolyTuple::operator*(const MultiPoly& p) const {
    std::vector<MultiPoly> r;
    r.reserve(size());
    for (const auto& e : entries_) r.push_back(e * p);
    return PolyTuple(std::move(r));
}

PolyTuple PolyTuple::operator*(const GaussianRational& c) const {
    std::vector<MultiPoly> r;
    r.reserve(size());
    for (const auto& e : entries_) r.push_back(e * c);
    return PolyTuple(std::move(r));
}

MultiPoly PolyTuple::dot(const PolyTuple& o) const {
    if (size() != o.size()) throw dimension_mismatch("PolyTuple: lengths differ in dot");
    MultiPoly sum(var_count());
    for (std::size_t i = 0; i < size(); ++i) sum = sum + entries_[i] * o.entries_[i];
    return sum;
}

Rational tuple_majorant(const PolyTuple& t, const Polydisk& disk, BoundPolicy policy) {
    Rational best(0);
    for (const auto& p : t) best = std::max(best, polydisk_majorant(p, disk, policy));
    return best;
}

}  // namespace bezout
