#pragma once

#include "r2r/exact_linalg.hpp"
#include "r2r/permutation.hpp"
#include "r2r/word.hpp"

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

namespace r2r {

// Words of the given evaluation, sorted in decreasing lexicographic order of
// their reversals (for (2,2): 1122, 1212, 2112, 1221, 2121, 2211).
std::vector<Word> enumerate_words(const Evaluation& eval);

// Insert letter i at every position.
WordVector apply_sh(Letter i, const WordVector& v);
// Delete one occurrence of letter i, summed over occurrences.
WordVector apply_del(Letter i, const WordVector& v);
// Replace one occurrence of letter i by j, summed over occurrences.
WordVector apply_theta(Letter i, Letter j, const WordVector& v);

WordVector shuffle_product(const Word& u, const Word& w);

// (w . sigma)_i = w_{sigma(i)}
Word apply_permutation(const Word& w, const Permutation& sigma);
WordVector apply_permutation(const WordVector& v, const Permutation& sigma);

// sum_a sh_a o del_a
WordVector random_to_random(const WordVector& v);
// w -> sum_a del_a(w) a
WordVector random_to_top(const WordVector& v);
// w_1...w_n -> sh_{w_n}(w_1...w_{n-1})
WordVector top_to_random(const WordVector& v);

// w . (n id + sum of the cycles (u,u+1,...,v) and (u,u-1,...,v)).
WordVector r2r_via_group_algebra(const Word& w);

enum class Shuffle { RandomToRandom, RandomToTop, TopToRandom };

std::string_view to_string(Shuffle s);
// "r2r", "r2t" or "t2r".
Shuffle parse_shuffle(std::string_view name);
WordVector apply_shuffle(Shuffle s, const WordVector& v);

// Unnormalized operator: entry (w, u) = coefficient of u in OP(w).
struct OperatorMatrix {
    std::vector<Word> order;
    ExactMatrix entries;
    std::int64_t scale;  // n for r2t and t2r, n^2 for r2r
};

// Matrix of a linear map on span(basis); entry (i, j) = coefficient of basis[j] in f(basis[i]).
// Throws if some image leaves the span.
ExactMatrix matrix_of(const std::vector<Word>& basis, const std::function<WordVector(const WordVector&)>& f);

OperatorMatrix operator_matrix(Shuffle s, const Evaluation& eval);
// Row-stochastic transition matrix: operator matrix divided by its scale.
ExactMatrix transition_matrix(Shuffle s, const Evaluation& eval);

}  // namespace r2r
