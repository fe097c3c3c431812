#pragma once

#include "r2r/combinatorics.hpp"
#include "r2r/exact_linalg.hpp"
#include "r2r/word.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace r2r {

// Position i carries the row index of entry i. Entries must be exactly 1..n.
Word word_of_tableau(const Tableau& t);

// Signed sum of word(sigma(t)) over the column stabilizer of t.
WordVector polytabloid_vector(const Tableau& t);

struct SpechtBasis {
    Partition shape;
    std::vector<StandardTableau> tableaux;
    std::vector<WordVector> vectors;  // vectors[k] = polytabloid_vector(tableaux[k])
};

SpechtBasis specht_basis(const Partition& shape);

ExactMatrix gram_matrix(const std::vector<WordVector>& vectors);

// Young's rule embedding M^shape(T) -> M^content(T): the increasing word maps to
// the sum of all distinct row rearrangements of T read row by row, extended
// by the position action.
WordVector theta_embedding(const Tableau& t, const WordVector& v);

// Orthogonal projection onto span{w_t} in the inner product where words are orthonormal.
WordVector project_onto_specht(const Partition& shape, const WordVector& v);

// Coordinates of v in the w_t basis, or nullopt if v is not in the Specht module.
std::optional<std::vector<BigRational>> specht_coordinates(const Partition& shape, const WordVector& v);

WordVector combine(const std::vector<WordVector>& vectors, const std::vector<BigRational>& coefficients);

// Matrix of random-to-random on S^shape in the w_t basis: row t holds the
// coordinates of R2R(w_t).
ExactMatrix r2r_on_specht(const Partition& shape);

}  // namespace r2r
