#pragma once

#include <vector>

#include "sheffer/polynomial.hpp"
#include "sheffer/riordan.hpp"
#include "sheffer/sheffer.hpp"

namespace sheffer {

// Bordered square matrix: a polynomial top row over a numeric block of
// shape n x (n+1). Row i of the block is allowed nonzeros from column
// i-1 on (the shifted lower-triangular shape the determinantal
// constructions produce).
struct BorderedMatrix {
    std::vector<Polynomial> top_row;
    std::vector<std::vector<Rational>> block;
};

// exact determinant of the full matrix: Laplace expansion along the top
// row, numeric minors by fraction-free (Bareiss) elimination
Polynomial det_exact(const BorderedMatrix& m);

// exact determinant of a square numeric matrix (Bareiss with pivoting)
Rational det_numeric(std::vector<std::vector<Rational>> m);

// s_n = (-1)^n / (a_00 ... a_nn) * det with top row (1, x, ..., x^n) and
// block rows (a_{j-1,i-1}); equals the generating-function route
Polynomial sheffer_det(const RiordanArray& array, int n);

// 2-iterated version: top row (1, inner_1(x), ..., inner_n(x)); `array`
// is the triangle of the OUTER pair (g, f) so that the Cramer solution of
// a * s^[2] = inner is the iterated sequence. (The displayed theorem in
// the source material labels this array as the composed pair's; that
// labeling contradicts its own worked examples, which use the single
// outer pair. The worked examples win.)
Polynomial iterated_det(const RiordanArray& array, const PolynomialSequence& inner, int n);

// associated case ((1, f) arrays, a_{n,0} = delta_{n,0}): n x n matrix
// with top row (x, ..., x^n) and prefactor (-1)^(n+1) / (a_11 ... a_nn)
Polynomial associated_det(const RiordanArray& array, int n);
Polynomial iterated_associated_det(const RiordanArray& array, const PolynomialSequence& inner, int n);

// independent solver for the same triangular system, used to cross-check
// the Cramer/determinant route: solves a * s = rhs by forward substitution
std::vector<Polynomial> solve_triangular(const RiordanArray& array, const std::vector<Polynomial>& rhs);

} // namespace sheffer
