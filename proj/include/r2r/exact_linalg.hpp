#pragma once

#include "r2r/polynomial.hpp"
#include "r2r/scalar.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <optional>
#include <utility>
#include <vector>

namespace r2r {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using ExactMatrix = DenseMatrix<BigRational>;
using ExactVector = DenseVector<BigRational>;
using IntMatrix = DenseMatrix<BigInt>;
using Index = Eigen::Index;

// In-place Gauss-Jordan elimination over a field. On return m is in reduced
// row echelon form; the pivot columns are returned in row order.
template <typename Field>
std::vector<Index> row_reduce(DenseMatrix<Field>& m) {
    std::vector<Index> pivots;
    const Index rows = m.rows(), cols = m.cols();
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index p = r;
        while (p < rows && m(p, c) == Field(0)) ++p;
        if (p == rows) continue;
        if (p != r) m.row(p).swap(m.row(r));
        const Field inv = Field(1) / m(r, c);
        for (Index j = c; j < cols; ++j) m(r, j) *= inv;
        for (Index i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == Field(0)) continue;
            const Field f = m(i, c);
            for (Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

ExactMatrix reduced_row_echelon(const ExactMatrix& m, std::vector<Index>* pivots = nullptr);

// Exact rank over Q via fraction-free elimination.
Index rank(const ExactMatrix& m);

// True iff rank(m) == m.rows(). Tries a modular certificate first and falls
// back to exact elimination.
bool has_full_row_rank(const ExactMatrix& m);

// Canonical basis of {v : m v = 0}: the rows of the reduced row echelon form
// of the kernel.
std::vector<ExactVector> nullspace(const ExactMatrix& m);

// Some x with m x = b (free variables set to zero), or nullopt if inconsistent.
std::optional<ExactVector> solve(const ExactMatrix& m, const ExactVector& b);

std::optional<ExactMatrix> inverse(const ExactMatrix& m);

// Bareiss determinant.
BigRational determinant(const ExactMatrix& m);

// det(xI - m) for a square integral matrix, by Hessenberg reduction modulo
// enough primes to cover a rigorous coefficient bound, then CRT.
// Throws std::invalid_argument for non-square or non-integral input.
IntPolynomial char_poly(const ExactMatrix& m);

// Rows scaled by the lcm of their denominators.
IntMatrix clear_row_denominators(const ExactMatrix& m);

ExactMatrix to_exact(const IntMatrix& m);

}  // namespace r2r
