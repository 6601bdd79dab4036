#pragma once

#include <cstddef>
#include <vector>

#include "bezout/multipoly.hpp"

namespace bezout {

/// Square matrix of polynomials with H = -H^t (zero diagonal). The invariant
/// is established at construction and preserved by every operation, so a
/// value of this type is antisymmetric by fiat.
class AntisymMatrix {
public:
    static AntisymMatrix zero(std::size_t count, std::size_t n);
    /// Validates H[j][k] == -H[k][j] symbolically; throws not_antisymmetric.
    static AntisymMatrix from_entries(const std::vector<std::vector<MultiPoly>>& grid);

    std::size_t size() const { return count_; }
    std::size_t var_count() const { return n_; }
    const MultiPoly& at(std::size_t row, std::size_t col) const;
    /// Sets (row, col) = p and (col, row) = -p. Requires row < col.
    void set_upper(std::size_t row, std::size_t col, const MultiPoly& p);

    bool is_zero() const;
    /// Largest total degree over all entries, -1 for the zero matrix.
    int max_entry_degree() const;

    AntisymMatrix operator+(const AntisymMatrix& o) const;
    AntisymMatrix operator-(const AntisymMatrix& o) const;
    bool operator==(const AntisymMatrix&) const = default;

private:
    AntisymMatrix(std::size_t count, std::size_t n);
    std::size_t count_, n_;
    std::vector<MultiPoly> cells_;  // row-major
};

/// (v M)_k = sum_j v_j M[j][k]
PolyTuple row_times_matrix(const PolyTuple& v, const AntisymMatrix& m);

/// y = x + a H. Antisymmetry of H makes the shift preserve the unit equation:
/// if sum_j x_j a_j = 1 then sum_j y_j a_j = 1, because (a H) a^t cancels.
PolyTuple apply_shift(const PolyTuple& a, const PolyTuple& x, const AntisymMatrix& h);

/// H[j][k] = x_j y_k - x_k y_j. When x and y both satisfy sum_j t_j a_j = 1
/// against a common tuple a, this H reconstructs y as x + a H exactly.
AntisymMatrix difference_matrix(const PolyTuple& x, const PolyTuple& y);

/// Expands (a H) a^t term by term and returns the computed polynomial.
/// Antisymmetry forces every product to cancel, so the result is the zero
/// polynomial for every a, whether or not a satisfies any unit equation.
MultiPoly annihilation_residual(const PolyTuple& a, const AntisymMatrix& h);

}  // namespace bezout
