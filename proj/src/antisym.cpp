#include "bezout/antisym.hpp"

#include <algorithm>
#include <string>

namespace bezout {

AntisymMatrix::AntisymMatrix(std::size_t count, std::size_t n)
    : count_(count), n_(n), cells_(count * count, MultiPoly(n)) {
    if (count_ == 0) throw dimension_mismatch("AntisymMatrix: size must be positive");
}

AntisymMatrix AntisymMatrix::zero(std::size_t count, std::size_t n) {
    return AntisymMatrix(count, n);
}

AntisymMatrix AntisymMatrix::from_entries(const std::vector<std::vector<MultiPoly>>& grid) {
    const std::size_t count = grid.size();
    if (count == 0) throw dimension_mismatch("AntisymMatrix: size must be positive");
    for (const auto& row : grid)
        if (row.size() != count) throw dimension_mismatch("AntisymMatrix: grid is not square");
    const std::size_t n = grid[0][0].var_count();
    for (const auto& row : grid)
        for (const MultiPoly& entry : row)
            if (entry.var_count() != n)
                throw dimension_mismatch("AntisymMatrix: entries disagree on the variable count");
    AntisymMatrix m(count, n);
    for (std::size_t j = 0; j < count; ++j) {
        if (!grid[j][j].is_zero())
            throw not_antisymmetric("AntisymMatrix: nonzero diagonal at (" +
                                    std::to_string(j + 1) + "," + std::to_string(j + 1) + ")");
        for (std::size_t k = j + 1; k < count; ++k) {
            if (!((-grid[j][k]) == grid[k][j]))
                throw not_antisymmetric("AntisymMatrix: entry (" + std::to_string(k + 1) + "," +
                                        std::to_string(j + 1) + ") is not the negation of its mirror");
            m.set_upper(j, k, grid[j][k]);
        }
    }
    return m;
}

const MultiPoly& AntisymMatrix::at(std::size_t row, std::size_t col) const {
    if (row >= count_ || col >= count_) throw index_out_of_range("AntisymMatrix: index out of range");
    return cells_[row * count_ + col];
}

void AntisymMatrix::set_upper(std::size_t row, std::size_t col, const MultiPoly& p) {
    if (row >= col || col >= count_)
        throw index_out_of_range("AntisymMatrix: set_upper requires row < col < size");
    if (p.var_count() != n_)
        throw dimension_mismatch("AntisymMatrix: entry has wrong variable count");
    cells_[row * count_ + col] = p;
    cells_[col * count_ + row] = -p;
}

bool AntisymMatrix::is_zero() const {
    return std::all_of(cells_.begin(), cells_.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

int AntisymMatrix::max_entry_degree() const {
    int d = -1;
    for (const auto& p : cells_) d = std::max(d, p.total_degree());
    return d;
}

AntisymMatrix AntisymMatrix::operator+(const AntisymMatrix& o) const {
    if (count_ != o.count_ || n_ != o.n_)
        throw dimension_mismatch("AntisymMatrix: shapes differ in +");
    AntisymMatrix r(count_, n_);
    for (std::size_t j = 0; j < count_; ++j)
        for (std::size_t k = j + 1; k < count_; ++k)
            r.set_upper(j, k, at(j, k) + o.at(j, k));
    return r;
}

AntisymMatrix AntisymMatrix::operator-(const AntisymMatrix& o) const {
    if (count_ != o.count_ || n_ != o.n_)
        throw dimension_mismatch("AntisymMatrix: shapes differ in -");
    AntisymMatrix r(count_, n_);
    for (std::size_t j = 0; j < count_; ++j)
        for (std::size_t k = j + 1; k < count_; ++k)
            r.set_upper(j, k, at(j, k) - o.at(j, k));
    return r;
}

PolyTuple row_times_matrix(const PolyTuple& v, const AntisymMatrix& m) {
    if (v.size() != m.size() || v.var_count() != m.var_count())
        throw dimension_mismatch("row_times_matrix: shapes differ");
    std::vector<MultiPoly> out;
    out.reserve(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        MultiPoly sum(v.var_count());
        for (std::size_t j = 0; j < v.size(); ++j) sum = sum + v[j] * m.at(j, k);
        out.push_back(std::move(sum));
    }
    return PolyTuple(std::move(out));
}

PolyTuple apply_shift(const PolyTuple& a, const PolyTuple& x, const AntisymMatrix& h) {
    if (a.size() != x.size() || a.var_count() != x.var_count())
        throw dimension_mismatch("apply_shift: tuples disagree on shape");
    if (a.size() != h.size() || a.var_count() != h.var_count())
        throw dimension_mismatch("apply_shift: matrix does not match the tuples");
    return x + row_times_matrix(a, h);
}

AntisymMatrix difference_matrix(const PolyTuple& x, const PolyTuple& y) {
    if (x.size() != y.size() || x.var_count() != y.var_count())
        throw dimension_mismatch("difference_matrix: tuples disagree on shape");
    AntisymMatrix h = AntisymMatrix::zero(x.size(), x.var_count());
    for (std::size_t j = 0; j < x.size(); ++j)
        for (std::size_t k = j + 1; k < x.size(); ++k)
            h.set_upper(j, k, x[j] * y[k] - x[k] * y[j]);
    return h;
}

MultiPoly annihilation_residual(const PolyTuple& a, const AntisymMatrix& h) {
    if (a.size() != h.size() || a.var_count() != h.var_count())
        throw dimension_mismatch("annihilation_residual: shapes differ");
    return row_times_matrix(a, h).dot(a);
}

}  // namespace bezout
