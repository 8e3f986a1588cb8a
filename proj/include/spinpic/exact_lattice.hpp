#ifndef SPINPIC_EXACT_LATTICE_HPP
#define SPINPIC_EXACT_LATTICE_HPP

#include "spinpic/numbers.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace spinpic {

// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    // row i += f * row j
    void add_row(std::size_t i, std::size_t j, const Int& f);
    // col i += f * col j
    void add_col(std::size_t i, std::size_t j, const Int& f);
    void negate_row(std::size_t i);

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// Exact determinant (Bareiss fraction-free elimination).
Int determinant(const IntMatrix& a);

// Smith normal form d = u*a*v with u, v unimodular, d diagonal with
// non-negative entries d_1 | d_2 | ... ; invariant_factors lists the
// min(rows, cols) diagonal entries, nonzero ones first, then zeros.
struct SnfResult {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
    std::vector<Int> invariant_factors;
};

SnfResult snf(const IntMatrix& a);

// One exact rational solution of a*x = b, if any. When the solution
// space is positive-dimensional, free variables are set to zero and
// `underdetermined` is set.
struct RationalSolution {
    std::vector<Rat> x;
    bool underdetermined = false;
};

std::optional<RationalSolution> solve_rational(const IntMatrix& a, const std::vector<Int>& b);

// Rows of `lat` generate a sublattice of Z^n. Returns integer c with
// c*lat = x when x lies in the row lattice, nullopt otherwise.
std::optional<std::vector<Int>> lattice_membership(const IntMatrix& lat, const std::vector<Int>& x);

// Least k >= 1 with k*x in the row lattice of lat; nullopt = infinite
// order. Computed through SNF coordinates, never by unbounded search.
// The zero vector has order 1.
std::optional<Int> element_order_mod_lattice(const IntMatrix& lat, const std::vector<Int>& x);

} // namespace spinpic

#endif
