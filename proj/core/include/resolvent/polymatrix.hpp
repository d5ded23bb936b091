#pragma once

#include <vector>

#include "resolvent/poly.hpp"

namespace resolvent {

// Rectangular grid of polynomials in s.
class PolyMatrix {
public:
    PolyMatrix(int rows, int cols);
    PolyMatrix(std::initializer_list<std::initializer_list<RatPoly>> init);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    RatPoly& at(int r, int c) { return data_[r * cols_ + c]; }
    const RatPoly& at(int r, int c) const { return data_[r * cols_ + c]; }

private:
    int rows_, cols_;
    std::vector<RatPoly> data_;
};

// Nonzero vector v of polynomials with M.v = 0 identically, for a matrix
// whose nullspace over the rational-function field is one-dimensional.
// Fraction-free elimination; pivot = first row whose entry in the current
// column has minimal polynomial degree. The result is normalized: common
// polynomial factor and content gcd divided out, sign of the first
// nonzero entry's leading coefficient positive.
//
// Throws SolverError(degenerate) for a zero-dimensional nullspace and for
// nullspace dimension > 1, with distinct messages.
std::vector<RatPoly> nullspace_poly_matrix(const PolyMatrix& M);

}  // namespace resolvent
