#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace r2r;

namespace {

WordVector wv(std::string_view text) { return WordVector(parse_word(text)); }

WordVector sum_of(std::initializer_list<const char*> words) {
    WordVector v;
    for (auto w : words) v += wv(w);
    return v;
}

std::vector<Partition> all_partitions_between(int lo, int hi) {
    std::vector<Partition> out;
    for (int k = lo; k <= hi; ++k)
        for (auto& p : partitions_of(k)) out.push_back(p);
    return out;
}

}  // namespace

TEST_CASE("word of a tableau") {
    const Tableau t{{2, 8, 6, 7}, {5, 3}, {1, 4}};
    const Tableau s{{5, 3, 7, 1}, {6, 8}, {2, 4}};
    CHECK(word_of_tableau(t) == parse_word("31232111"));
    CHECK(word_of_tableau(s) == parse_word("13131212"));
    CHECK(word_of_tableau(Tableau{{1, 2, 3, 4}}) == parse_word("1111"));
    CHECK_THROWS_AS(word_of_tableau(Tableau{{1, 2}, {4}}), std::invalid_argument);

    // word(t) . sigma = word(sigma^{-1}(t)) with s = sigma^{-1}(t).
    const Permutation sigma = Permutation::parse("71842563");
    CHECK(apply_permutation(word_of_tableau(t), sigma) == word_of_tableau(s));
    for (const auto& tau : all_permutations(5)) {
        const Tableau u{{3, 1, 5}, {2, 4}};
        std::vector<std::vector<int>> rows = u.rows();
        for (auto& row : rows)
            for (auto& e : row) e = tau.inverse()(e);
        CHECK(apply_permutation(word_of_tableau(u), tau) == word_of_tableau(Tableau(rows)));
    }
}

TEST_CASE("polytabloid vectors") {
    CHECK(polytabloid_vector(Tableau{{1}, {2}}) == wv("ab") - wv("ba"));
    CHECK(polytabloid_vector(Tableau{{1, 2}, {3}}) == wv("aab") - wv("baa"));
    CHECK(polytabloid_vector(Tableau{{1, 3}, {2}}) == wv("aba") - wv("baa"));
    CHECK(polytabloid_vector(Tableau{{1, 2, 3}}) == wv("111"));

    const SpechtBasis b = specht_basis({2, 2});
    REQUIRE(b.vectors.size() == 2);
    CHECK(b.vectors[0] == wv("aabb") - wv("abba") - wv("baab") + wv("bbaa"));
    CHECK(b.vectors[1] == wv("abab") - wv("abba") - wv("baab") + wv("baba"));
    CHECK(specht_basis({4}).vectors.size() == 1);
    CHECK(specht_basis({3, 2}).vectors.size() == 5);
}

TEST_CASE("Young's rule embeddings") {
    const Tableau t{{2, 1, 1}, {3, 2}};
    CHECK(theta_embedding(t, wv("11122")) ==
          sum_of({"21132", "12132", "11232", "21123", "12123", "11223"}));
    CHECK(theta_embedding(Tableau{{1, 1, 2}, {2}}, wv("1112")) == apply_theta(1, 2, wv("1112")));
    CHECK(theta_embedding(Tableau{{1, 1, 2}, {2}}, wv("1112")) == sum_of({"2112", "1212", "1122"}));
    CHECK_THROWS_AS(theta_embedding(t, wv("11112")), std::invalid_argument);

    // Row-constant fillings embed as the identity; embeddings commute with the position action.
    const Tableau row_constant{{1, 1, 1}, {2, 2}};
    for (const auto& w : enumerate_words({3, 2})) {
        CHECK(theta_embedding(row_constant, WordVector(w)) == WordVector(w));
        for (const auto& sigma : {Permutation::parse("21345"), Permutation::parse("25314")})
            CHECK(theta_embedding(t, WordVector(apply_permutation(w, sigma))) ==
                  apply_permutation(theta_embedding(t, WordVector(w)), sigma));
    }
}

TEST_CASE("projection examples") {
    const WordVector k21 = wv("aab") - BigRational(2) * wv("aba") + wv("baa");
    const WordVector expected = BigRational(2) * wv("aabb") - wv("abab") - wv("abba") - wv("baab") - wv("baba") +
                                BigRational(2) * wv("bbaa");
    CHECK(project_onto_specht({2, 2}, apply_sh(2, k21)) == expected);

    for (const auto& v : specht_basis({3, 2}).vectors) CHECK(project_onto_specht({3, 2}, v) == v);

    // The all-ones vector of M^(2,2) spans the trivial summand, orthogonal to S^(2,2).
    WordVector ones;
    for (const auto& w : enumerate_words({2, 2})) ones += WordVector(w);
    CHECK(project_onto_specht({2, 2}, ones).empty());
}

TEST_CASE("Gram solve reproduces the projected coefficients") {
    const WordVector k21 = wv("aab") - BigRational(2) * wv("aba") + wv("baa");
    const WordVector target = apply_sh(2, k21);
    const SpechtBasis b = specht_basis({2, 2});
    const ExactMatrix g = gram_matrix(b.vectors);
    ExactVector rhs(2);
    for (Index i = 0; i < 2; ++i) rhs(i) = dot(b.vectors[static_cast<std::size_t>(i)], target);
    auto x = solve(g, rhs);
    REQUIRE(x);
    const WordVector first = combine(b.vectors, {(*x)(0), (*x)(1)});
    CHECK(first == BigRational(2) * wv("aabb") - wv("abab") - wv("abba") - wv("baab") - wv("baba") +
                       BigRational(2) * wv("bbaa"));
    CHECK(specht_coordinates({2, 2}, first) == std::vector<BigRational>{(*x)(0), (*x)(1)});
    CHECK_FALSE(specht_coordinates({2, 2}, wv("aabb")).has_value());
}

TEST_CASE("Specht bases are independent and Young's rule counts dimensions") {
    for (const auto& lambda : all_partitions_between(1, 6)) {
        const SpechtBasis b = specht_basis(lambda);
        CHECK(b.vectors.size() == count_standard_tableaux(lambda));
        CHECK(determinant(gram_matrix(b.vectors)) != 0);
        for (const auto& v : b.vectors)
            for (const auto& [w, c] : v) CHECK(Evaluation(w.evaluation()) == Evaluation(lambda.parts()));
    }
    for (int n = 1; n <= 6; ++n)
        for (const auto& nu : partitions_of(n)) {
            std::uint64_t total = 0;
            for (const auto& lambda : partitions_of(n))
                if (dominates(lambda, nu)) total += kostka(lambda, nu) * count_standard_tableaux(lambda);
            CHECK(total == enumerate_words(Evaluation(nu.parts())).size());
        }
}

TEST_CASE("Young's rule embeddings decompose M^nu") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& nu : partitions_of(n)) {
            std::vector<WordVector> all;
            for (const auto& lambda : partitions_of(n))
                for (const auto& t : semistandard_tableaux(lambda, nu.parts()))
                    for (const auto& v : specht_basis(lambda).vectors) all.push_back(theta_embedding(t, v));
            const auto words = enumerate_words(Evaluation(nu.parts()));
            REQUIRE(all.size() == words.size());
            ExactMatrix m(static_cast<Index>(all.size()), static_cast<Index>(words.size()));
            for (std::size_t i = 0; i < all.size(); ++i)
                for (std::size_t j = 0; j < words.size(); ++j)
                    m(static_cast<Index>(i), static_cast<Index>(j)) = all[i].coefficient(words[j]);
            CHECK(has_full_row_rank(m));
        }
}

TEST_CASE("projection commutes with r2r and Specht modules are r2r-stable") {
    for (const auto& lambda : all_partitions_between(1, 5)) {
        const auto words = enumerate_words(Evaluation(lambda.parts()));
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<WordVector> singles;
            for (const auto& w : words) singles.emplace_back(w);
            const WordVector v = oracle::random_combination(singles);
            CHECK(project_onto_specht(lambda, random_to_random(v)) == random_to_random(project_onto_specht(lambda, v)));
        }
        for (const auto& w : specht_basis(lambda).vectors) {
            const WordVector r = random_to_random(w);
            CHECK(project_onto_specht(lambda, r) == r);
        }
    }
}

TEST_CASE("theta with a smaller target letter kills Specht modules") {
    for (const auto& lambda : all_partitions_between(1, 5))
        for (Letter b = 1; b <= lambda.length(); ++b)
            for (Letter a = 1; a < b; ++a)
                for (const auto& v : specht_basis(lambda).vectors) CHECK(apply_theta(b, a, v).empty());
}

TEST_CASE("r2r matrix on a Specht module") {
    const ExactMatrix m = r2r_on_specht({2, 1});
    const SpechtBasis b = specht_basis({2, 1});
    for (Index i = 0; i < m.rows(); ++i) {
        std::vector<BigRational> row;
        for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        CHECK(combine(b.vectors, row) == random_to_random(b.vectors[static_cast<std::size_t>(i)]));
    }
}
