#include "sheffer/determinantal.hpp"

#include "sheffer/errors.hpp"

namespace sheffer {

Rational det_numeric(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw DimensionMismatch("numeric minor is not square");
    if (n == 0) return Rational(1);
    Rational prev_pivot(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return Rational(0);
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev_pivot;
            m[i][k] = Rational(0);
        }
        prev_pivot = m[k][k];
    }
    const Rational det = m[n - 1][n - 1];
    return negate ? Rational(-det) : det;
}

Polynomial det_exact(const BorderedMatrix& m) {
    const std::size_t cols = m.top_row.size();
    if (cols == 0) throw DimensionMismatch("empty bordered matrix");
    if (m.block.size() + 1 != cols)
        throw DimensionMismatch("bordered matrix is not square: top row length " + std::to_string(cols) +
                                ", block rows " + std::to_string(m.block.size()));
    for (const auto& row : m.block)
        if (row.size() != cols) throw DimensionMismatch("block row length differs from top row");

    Polynomial det;
    Rational sign(1);
    for (std::size_t j = 0; j < cols; ++j) {
        if (!m.top_row[j].is_zero()) {
            // numeric minor: block with column j removed
            std::vector<std::vector<Rational>> minor(m.block.size());
            for (std::size_t i = 0; i < m.block.size(); ++i) {
                minor[i].reserve(cols - 1);
                for (std::size_t jj = 0; jj < cols; ++jj)
                    if (jj != j) minor[i].push_back(m.block[i][jj]);
            }
            det = det + m.top_row[j].scale(sign * det_numeric(std::move(minor)));
        }
        sign = -sign;
    }
    return det;
}

namespace {

Rational diagonal_product(const RiordanArray& array, int first, int last) {
    Rational p(1);
    for (int k = first; k <= last; ++k) {
        if (array.entry(k, k) == 0) throw ZeroDiagonal("a_{" + std::to_string(k) + "," + std::to_string(k) + "} = 0");
        p *= array.entry(k, k);
    }
    return p;
}

// top row (top_0 .. top_n), block row i (1-based, i = 1..n) holds
// a_{j-1, i-1} for j = 1..n+1
Polynomial bordered_full(const RiordanArray& array, std::vector<Polynomial> top, int n) {
    if (n > array.max_row()) throw IndexOutOfRange("determinantal", "index beyond array size");
    if (n == 0) return top[0].scale(Rational(1) / array.entry(0, 0));
    BorderedMatrix m;
    m.top_row = std::move(top);
    m.block.assign(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n) + 1, Rational(0)));
    for (int i = 1; i <= n; ++i)
        for (int j = i - 1; j <= n; ++j)
            m.block[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] = array.entry(j, i - 1);
    const Rational prefactor = (n % 2 == 0 ? Rational(1) : Rational(-1)) / diagonal_product(array, 0, n);
    return det_exact(m).scale(prefactor);
}

// associated reduction: n x n, top row (top_1 .. top_n), block row i
// (i = 1..n-1) holds a_{j,i} for j = 1..n; prefactor (-1)^(n+1)
Polynomial bordered_associated(const RiordanArray& array, const std::vector<Polynomial>& top, int n) {
    if (n > array.max_row()) throw IndexOutOfRange("determinantal", "index beyond array size");
    if (n == 0) return Polynomial::constant(Rational(1) / array.entry(0, 0));
    BorderedMatrix m;
    m.top_row.assign(top.begin() + 1, top.begin() + n + 1);
    m.block.assign(static_cast<std::size_t>(n - 1), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n; ++j)
            m.block[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = array.entry(j, i);
    const Rational prefactor = (n % 2 == 0 ? Rational(-1) : Rational(1)) / diagonal_product(array, 0, n);
    return det_exact(m).scale(prefactor);
}

std::vector<Polynomial> monomial_top(int n) {
    std::vector<Polynomial> top;
    top.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) top.push_back(Polynomial::monomial(Rational(1), k));
    return top;
}

std::vector<Polynomial> inner_top(const PolynomialSequence& inner, int n) {
    if (inner.max_index() < n)
        throw InsufficientOrder("determinantal", "inner sequence shorter than requested index");
    std::vector<Polynomial> top;
    top.reserve(static_cast<std::size_t>(n) + 1);
    top.push_back(Polynomial::constant(Rational(1)));
    for (int k = 1; k <= n; ++k) top.push_back(inner.at(k));
    return top;
}

void require_associated(const RiordanArray& array, int n) {
    for (int m = 1; m <= n; ++m)
        if (array.entry(m, 0) != 0)
            throw Error("determinantal", "associated determinant needs a_{n,0} = delta_{n,0}; a_{" +
                                             std::to_string(m) + ",0} = " + to_string(array.entry(m, 0)));
}

} // namespace

Polynomial sheffer_det(const RiordanArray& array, int n) { return bordered_full(array, monomial_top(n), n); }

Polynomial iterated_det(const RiordanArray& array, const PolynomialSequence& inner, int n) {
    return bordered_full(array, inner_top(inner, n), n);
}

Polynomial associated_det(const RiordanArray& array, int n) {
    require_associated(array, n);
    return bordered_associated(array, monomial_top(n), n);
}

Polynomial iterated_associated_det(const RiordanArray& array, const PolynomialSequence& inner, int n) {
    require_associated(array, n);
    return bordered_associated(array, inner_top(inner, n), n);
}

std::vector<Polynomial> solve_triangular(const RiordanArray& array, const std::vector<Polynomial>& rhs) {
    if (static_cast<int>(rhs.size()) > array.max_row() + 1)
        throw DimensionMismatch("right-hand side longer than the array triangle");
    std::vector<Polynomial> s;
    s.reserve(rhs.size());
    for (std::size_t n = 0; n < rhs.size(); ++n) {
        Polynomial acc = rhs[n];
        for (std::size_t k = 0; k < n; ++k) acc = acc - s[k].scale(array.entry(static_cast<int>(n), static_cast<int>(k)));
        const Rational& diag = array.entry(static_cast<int>(n), static_cast<int>(n));
        if (diag == 0) throw ZeroDiagonal("a_{" + std::to_string(n) + "," + std::to_string(n) + "} = 0");
        s.push_back(acc.scale(Rational(1) / diag));
    }
    return s;
}

} // namespace sheffer
