#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "bezout/errors.hpp"

namespace bezout {

/// Exponent vector of a power product. Its length is the ambient variable count.
class Monomial {
public:
    explicit Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
        for (int e : exp_)
            if (e < 0) throw error("Monomial: negative exponent");
    }
    static Monomial unit(std::size_t n) { return Monomial(std::vector<int>(n, 0)); }

    std::size_t var_count() const { return exp_.size(); }
    int exponent(std::size_t i) const { return exp_[i]; }
    const std::vector<int>& exponents() const { return exp_; }
    int total_degree() const { return std::accumulate(exp_.begin(), exp_.end(), 0); }
    bool is_unit() const {
        return std::all_of(exp_.begin(), exp_.end(), [](int e) { return e == 0; });
    }

    Monomial operator*(const Monomial& o) const {
        check_dims(o);
        std::vector<int> e(exp_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.exp_[i];
        return Monomial(std::move(e));
    }
    /// True when this power product divides m.
    bool divides(const Monomial& m) const {
        check_dims(m);
        for (std::size_t i = 0; i < exp_.size(); ++i)
            if (exp_[i] > m.exp_[i]) return false;
        return true;
    }
    Monomial divide_by(const Monomial& d) const {
        check_dims(d);
        std::vector<int> e(exp_);
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] -= d.exp_[i];
            if (e[i] < 0) throw error("Monomial: divide_by with a non-divisor");
        }
        return Monomial(std::move(e));
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        a.check_dims(b);
        std::vector<int> e(a.exp_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b.exp_[i]);
        return Monomial(std::move(e));
    }

    bool operator==(const Monomial&) const = default;

private:
    void check_dims(const Monomial& o) const {
        if (exp_.size() != o.exp_.size())
            throw dimension_mismatch("Monomial: variable counts differ");
    }
    std::vector<int> exp_;
};

enum class TermOrder { Grevlex, Grlex, Lex };

/// Strict "a below b" in the given monomial order.
///
/// Grevlex: total degree, ties broken by the rightmost differing exponent
/// (larger exponent there means smaller monomial). Grlex: total degree, ties
/// broken lexicographically. Lex: z1 > z2 > ... regardless of degree.
inline bool monomial_less(const Monomial& a, const Monomial& b, TermOrder order) {
    const auto& x = a.exponents();
    const auto& y = b.exponents();
    if (x.size() != y.size()) throw dimension_mismatch("monomial_less: variable counts differ");
    if (order != TermOrder::Lex) {
        const int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
    }
    if (order == TermOrder::Grevlex) {
        for (std::size_t i = x.size(); i-- > 0;)
            if (x[i] != y[i]) return x[i] > y[i];
        return false;
    }
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) return x[i] < y[i];
    return false;
}

/// Storage comparator. Graded lexicographic is the canonical display order.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return monomial_less(a, b, TermOrder::Grlex);
    }
};

}  // namespace bezout
