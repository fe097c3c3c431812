#pragma once

#include "r2r/exact_linalg.hpp"
#include "r2r/word.hpp"

#include <vector>

namespace r2r {

// Words of length r over {1..n} with distinct letters, in lexicographic order.
std::vector<Word> injective_words(int n, int r);

// Sign of the permutation sorting the letters of an injective word.
int sign(const Word& w);

// d_r(w) = sum_j (-1)^j w with its j-th letter removed. Requires 1 <= r <= n.
WordVector boundary(int n, int r, const WordVector& v);
// Adjoint of d_{r+1}: sum over absent letters x and positions j of (-1)^j (x inserted at j). Requires 0 <= r < n.
WordVector coboundary(int n, int r, const WordVector& v);

// Entry (w, u) = coefficient of u in d_r(w); rows index injective_words(n, r).
ExactMatrix boundary_matrix(int n, int r);

// delta_{r-1} d_r + d_{r+1} delta_r, with the out-of-range terms dropped.
ExactMatrix laplacian(int n, int r);

// r w + sum over u != v of (-1)^{|u-v|} (w with the letter at u moved to position v).
WordVector signed_r2r(int n, int r, const WordVector& v);
ExactMatrix signed_r2r_matrix(int n, int r);

// Plain random-to-random restricted to injective words.
ExactMatrix r2r_matrix_on_injective(int n, int r);

// Diagonal matrix of w -> sign(w) w.
ExactMatrix sign_matrix(int n, int r);

}  // namespace r2r
