#pragma once

#include "r2r/combinatorics.hpp"
#include "r2r/word.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace r2r {

// C(|outer|+1, 2) - C(|inner|+1, 2) + diag(outer/inner)
std::int64_t eig_strip(const SkewShape& shape);

struct StripEigenvalue {
    SkewShape strip;
    std::int64_t eig;
    std::uint64_t kostka;
    std::uint64_t desarrangements;

    std::uint64_t multiplicity() const { return kostka * desarrangements; }
    std::int64_t outer_term() const { return triangular(strip.outer().size()); }
    std::int64_t inner_term() const { return triangular(strip.inner().size()); }
};

struct SpectrumReport {
    std::vector<int> evaluation;  // as given
    Partition partition;          // sorted evaluation
    std::vector<StripEigenvalue> entries;
    std::map<std::int64_t, std::uint64_t> totals;  // n^2-scaled eigenvalue -> multiplicity

    std::uint64_t dimension() const;
};

// Every horizontal strip outer/inner with outer dominating the evaluation;
// outer shapes in decreasing lexicographic order, inners by size then lex.
SpectrumReport spectrum_for_evaluation(const Evaluation& eval);

struct WordEigenvalue {
    Word word;
    Word suffix;  // longest suffix whose first ascent is even
    Partition shape, suffix_shape;
    std::int64_t eig;

    std::int64_t outer_binomial() const { return triangular(shape.size()); }
    std::int64_t outer_diag() const { return diag(shape); }
    std::int64_t inner_binomial() const { return triangular(suffix_shape.size()); }
    std::int64_t inner_diag() const { return diag(suffix_shape); }
};

WordEigenvalue eig_word_trace(const Word& w);
std::int64_t eig_word(const Word& w);

// ((n-2)(n+1), length - 1), checked against the enumerated spectrum.
// Throws std::invalid_argument for a one-row evaluation.
std::pair<std::int64_t, std::uint64_t> second_largest(const Partition& eval);

// Predicted n-scaled random-to-top spectrum: eigenvalue n - |mu| collects
// K_{lambda,nu} d^mu over the horizontal strips lambda/mu.
std::map<std::int64_t, std::uint64_t> r2t_spectrum(const Partition& eval);

}  // namespace r2r
