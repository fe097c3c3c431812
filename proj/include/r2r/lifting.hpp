#pragma once

#include "r2r/combinatorics.hpp"
#include "r2r/word.hpp"

#include <cstdint>
#include <vector>

namespace r2r {

// Closed-form lift S^shape -> S^(shape + e_row): sum over chains
// b_1 < ... < b_t < row of prod 1/gamma(b_j) Theta_{b_t,row} ... Theta_{b_1,b_2} sh_{b_1},
// gamma(b) = (shape_row - row) - (shape_b - b). Rows are 1-based.
WordVector lift_closed_form(const Partition& shape, int row, const WordVector& v);

// proj_{shape + e_row}(sh_row(v))
WordVector lift_via_projection(const Partition& shape, int row, const WordVector& v);

enum class LiftMethod { ClosedForm, Projection };

// Applies lifts for the given rows in order, starting from `shape`.
// Rows must be weakly increasing; throws std::invalid_argument otherwise.
WordVector lift_rows(const Partition& shape, const std::vector<int>& rows, const WordVector& v,
                     LiftMethod method = LiftMethod::ClosedForm);

// Rows of the cells of outer/inner in weakly increasing order.
std::vector<int> strip_rows(const SkewShape& strip);

// Lifts through every cell of the skew shape, rows in weakly increasing order.
// Vanishes on S^inner when the skew shape is not a horizontal strip.
WordVector lift_chain(const SkewShape& strip, const WordVector& v);

// Integer coefficients, content 1, first nonzero coefficient (in word order) positive.
WordVector normalize(const WordVector& v);

// Normalized basis of ker(R2R) on S^shape, from the nullspace of the matrix in the w_t basis.
std::vector<WordVector> kernel_basis(const Partition& shape);

struct EigenbasisEntry {
    SkewShape strip;
    std::int64_t eigenvalue;
    std::vector<WordVector> vectors;
    std::vector<std::size_t> provenance;  // index into kernel_basis(strip.inner())
};

// One entry per horizontal strip shape/mu with a nonzero kernel on S^mu.
// Every vector is checked against the eigen-equation and the union against
// full rank; a failure throws std::logic_error.
std::vector<EigenbasisEntry> eigenbasis(const Partition& shape);

struct EmbeddedEigenbasisEntry {
    SemistandardTableau embedding;
    EigenbasisEntry entry;
};

// Eigenbasis of M^eval: each Specht eigenbasis pushed through every Young's rule embedding.
std::vector<EmbeddedEigenbasisEntry> eigenbasis_for_evaluation(const Evaluation& eval);

}  // namespace r2r
