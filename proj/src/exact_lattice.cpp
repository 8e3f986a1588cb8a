#include "spinpic/exact_lattice.hpp"

#include <algorithm>
#include <utility>

namespace spinpic {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (entries_.size() != rows_ * cols_)
        throw usage_error("IntMatrix: entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row(std::size_t i, std::size_t j, const Int& f)
{
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) += f * at(j, c);
}

void IntMatrix::add_col(std::size_t i, std::size_t j, const Int& f)
{
    for (std::size_t r = 0; r < rows_; ++r) at(r, i) += f * at(r, j);
}

void IntMatrix::negate_row(std::size_t i)
{
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw usage_error("matrix product: inner dimensions differ");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

Int determinant(const IntMatrix& a)
{
    if (a.rows() != a.cols())
        throw usage_error("determinant: matrix is not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;

    // Bareiss: every division below is exact.
    IntMatrix m = a;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m.at(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

namespace {

// Locate the entry of smallest nonzero absolute value in the submatrix
// d[t.., t..]; false when that submatrix is zero.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pr, std::size_t& pc)
{
    bool found = false;
    Int best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            const Int& e = d.at(i, j);
            if (e == 0) continue;
            Int a = abs(e);
            if (!found || a < best) {
                found = true;
                best = a;
                pr = i;
                pc = j;
            }
        }
    return found;
}

bool row_col_clear(const IntMatrix& d, std::size_t t)
{
    for (std::size_t i = t + 1; i < d.rows(); ++i)
        if (d.at(i, t) != 0) return false;
    for (std::size_t j = t + 1; j < d.cols(); ++j)
        if (d.at(t, j) != 0) return false;
    return true;
}

} // namespace

SnfResult snf(const IntMatrix& a)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    const std::size_t nmin = std::min(m, n);

    SnfResult res;
    res.u = IntMatrix::identity(m);
    res.v = IntMatrix::identity(n);
    res.d = a;
    IntMatrix& d = res.d;

    for (std::size_t t = 0; t < nmin; ++t) {
        std::size_t pr = t, pc = t;
        if (!find_pivot(d, t, pr, pc)) break; // remaining submatrix is zero

        for (;;) {
            d.swap_rows(t, pr);
            res.u.swap_rows(t, pr);
            d.swap_cols(t, pc);
            res.v.swap_cols(t, pc);

            for (std::size_t i = t + 1; i < m; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / d.at(t, t);
                d.add_row(i, t, -q);
                res.u.add_row(i, t, -q);
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / d.at(t, t);
                d.add_col(j, t, -q);
                res.v.add_col(j, t, -q);
            }

            if (!row_col_clear(d, t)) {
                find_pivot(d, t, pr, pc);
                continue;
            }

            // Pivot is lone; enforce that it divides the rest of the
            // submatrix, else pull an offending row in and restart.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < m && divides_all; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        d.add_row(t, i, 1);
                        res.u.add_row(t, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
            find_pivot(d, t, pr, pc);
        }

        if (d.at(t, t) < 0) {
            d.negate_row(t);
            res.u.negate_row(t);
        }
    }

    res.invariant_factors.reserve(nmin);
    for (std::size_t t = 0; t < nmin; ++t)
        res.invariant_factors.push_back(d.at(t, t));
    return res;
}

std::optional<RationalSolution> solve_rational(const IntMatrix& a, const std::vector<Int>& b)
{
    if (b.size() != a.rows())
        throw usage_error("solve_rational: right-hand side length does not match row count");

    const std::size_t m = a.rows();
    const std::size_t n = a.cols();

    // Gauss-Jordan on the augmented rational matrix.
    std::vector<std::vector<Rat>> w(m, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) w[i][j] = Rat(a.at(i, j));
        w[i][n] = Rat(b[i]);
    }

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t p = row;
        while (p < m && w[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(w[p], w[row]);
        Rat inv = w[row][col];
        for (std::size_t j = col; j <= n; ++j) w[row][j] /= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || w[i][col] == 0) continue;
            Rat f = w[i][col];
            for (std::size_t j = col; j <= n; ++j) w[i][j] -= f * w[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }

    for (std::size_t i = row; i < m; ++i)
        if (w[i][n] != 0) return std::nullopt;

    RationalSolution sol;
    sol.x.assign(n, Rat(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        sol.x[pivot_col[i]] = w[i][n];
    sol.underdetermined = pivot_col.size() < n;
    return sol;
}

namespace {

// Coordinates of x against the SNF of the lattice matrix: y = x * v.
std::vector<Int> snf_coordinates(const SnfResult& s, const std::vector<Int>& x)
{
    const std::size_t n = s.v.rows();
    std::vector<Int> y(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            y[j] += x[i] * s.v.at(i, j);
    return y;
}

Int diag_entry(const SnfResult& s, std::size_t j)
{
    const std::size_t nmin = std::min(s.d.rows(), s.d.cols());
    return j < nmin ? s.d.at(j, j) : Int(0);
}

} // namespace

std::optional<std::vector<Int>> lattice_membership(const IntMatrix& lat, const std::vector<Int>& x)
{
    if (x.size() != lat.cols())
        throw usage_error("lattice_membership: vector length does not match ambient dimension");

    SnfResult s = snf(lat);
    std::vector<Int> y = snf_coordinates(s, x);

    // c*lat = x  <=>  w*d = x*v with w = c*u^{-1}; then c = w*u.
    const std::size_t m = lat.rows();
    std::vector<Int> w(m);
    for (std::size_t j = 0; j < x.size(); ++j) {
        Int dj = diag_entry(s, j);
        if (dj == 0) {
            if (y[j] != 0) return std::nullopt;
        } else {
            if (y[j] % dj != 0) return std::nullopt;
            if (j < m) w[j] = y[j] / dj;
        }
    }

    std::vector<Int> c(m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < m; ++i)
            c[j] += w[i] * s.u.at(i, j);
    return c;
}

std::optional<Int> element_order_mod_lattice(const IntMatrix& lat, const std::vector<Int>& x)
{
    if (x.size() != lat.cols())
        throw usage_error("element_order_mod_lattice: vector length does not match ambient dimension");

    SnfResult s = snf(lat);
    std::vector<Int> y = snf_coordinates(s, x);

    Int order = 1;
    for (std::size_t j = 0; j < x.size(); ++j) {
        Int dj = diag_entry(s, j);
        if (dj == 0) {
            if (y[j] != 0) return std::nullopt; // no multiple ever lands in the lattice
        } else {
            order = lcm(order, dj / gcd(dj, y[j]));
        }
    }
    return order;
}

} // namespace spinpic
