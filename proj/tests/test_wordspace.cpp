#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace r2r;

namespace {

WordVector wv(std::string_view text) { return WordVector(parse_word(text)); }

WordVector terms(std::initializer_list<std::pair<const char*, long>> ts) {
    WordVector v;
    for (const auto& [w, c] : ts) v.add(parse_word(w), BigRational(c));
    return v;
}

// Every word of length n over {1..k}.
std::vector<Word> all_words(int n, int k) {
    std::vector<Word> out{Word()};
    for (int i = 0; i < n; ++i) {
        std::vector<Word> next;
        for (const auto& w : out)
            for (Letter a = 1; a <= k; ++a) next.push_back(w.append(a));
        out = std::move(next);
    }
    return out;
}

ExactMatrix from_ints(const std::vector<std::vector<long>>& rows) {
    ExactMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(static_cast<Index>(i), static_cast<Index>(j)) = BigRational(rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("word text forms") {
    CHECK(to_string(parse_word("aaba")) == "1121");
    CHECK(to_string(Word{1, 12, 3}) == "[1,12,3]");
    CHECK(parse_word("[1,12,3]") == Word{1, 12, 3});
    CHECK(to_string(Word()) == "");
    CHECK_THROWS_AS(Word({0, 1}), std::invalid_argument);
    CHECK_THROWS(parse_word("1x2"));
    CHECK(to_string(terms({{"1122", 2}}) - BigRational(1, 2) * wv("1212")) == "2*1122 - 1/2*1212");
    CHECK(Evaluation({2, 2, 0}) == Evaluation({2, 2}));
    CHECK_THROWS_AS(Evaluation({-1}), std::invalid_argument);
    WordVector mixed = wv("1") + wv("12");
    CHECK_THROWS(mixed.word_length());
}

TEST_CASE("enumerate_words") {
    std::vector<Word> expected;
    for (auto s : {"1122", "1212", "2112", "1221", "2121", "2211"}) expected.push_back(parse_word(s));
    CHECK(enumerate_words({2, 2}) == expected);
    CHECK(enumerate_words({1}) == std::vector<Word>{Word{1}});
    CHECK(enumerate_words({1, 1, 1}).size() == 6);
    CHECK(enumerate_words({2, 0, 1}).size() == 3);
}

TEST_CASE("sh, del and theta examples") {
    CHECK(apply_sh(1, wv("aaba")) == terms({{"aaaba", 3}, {"aabaa", 2}}));
    CHECK(apply_sh(1, wv("ab") - wv("ba")) == terms({{"aab", 2}, {"baa", -2}}));
    CHECK(apply_sh(1, WordVector(Word())) == wv("a"));

    CHECK(apply_del(1, wv("aaba")) == terms({{"aba", 2}, {"aab", 1}}));
    CHECK(apply_del(2, wv("aaba")) == wv("aaa"));
    CHECK(apply_del(3, wv("aaba")).empty());

    CHECK(apply_theta(1, 2, wv("aaab")) == wv("baab") + wv("abab") + wv("aabb"));
    CHECK(apply_theta(1, 1, wv("aaba")) == BigRational(3) * wv("aaba"));
    CHECK(apply_theta(2, 1, wv("aaa")).empty());
}

TEST_CASE("shuffle product") {
    CHECK(shuffle_product(parse_word("ab"), Word()) == wv("ab"));
    CHECK(shuffle_product(parse_word("a"), parse_word("a")) == BigRational(2) * wv("aa"));
    for (int n = 0; n <= 6; ++n)
        for (int trial = 0; trial < 20; ++trial) {
            const Word w = n ? oracle::random_word(static_cast<std::size_t>(n), 3) : Word();
            for (Letter a = 1; a <= 3; ++a) CHECK(shuffle_product(w, Word{a}) == apply_sh(a, WordVector(w)));
        }
}

TEST_CASE("position action") {
    const Permutation sigma = Permutation::parse("71842563");
    const Permutation tau = Permutation::parse("26347158");
    const Word w = parse_word("cabcbaaa");
    CHECK(apply_permutation(w, sigma) == parse_word("acacabab"));
    CHECK(apply_permutation(w, Permutation::identity(8)) == w);
    CHECK(apply_permutation(apply_permutation(w, sigma), tau) == parse_word("cbacaaab"));
    CHECK(apply_permutation(w, sigma * tau) == parse_word("cbacaaab"));
    CHECK(sigma * tau == Permutation::parse("15846723"));
    CHECK_THROWS(apply_permutation(parse_word("ab"), sigma));
    for (int trial = 0; trial < 50; ++trial) {
        const auto perms = all_permutations(5);
        std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
        const Permutation s = perms[pick(oracle::rng())], t = perms[pick(oracle::rng())];
        const Word u = oracle::random_word(5, 3);
        CHECK(apply_permutation(apply_permutation(u, s), t) == apply_permutation(u, s * t));
    }
}

TEST_CASE("shuffle operator examples") {
    const auto order = enumerate_words({2, 2});
    const WordVector image = random_to_random(wv("1122"));
    const std::vector<long> row{8, 4, 2, 2, 0, 0};
    for (std::size_t k = 0; k < order.size(); ++k) CHECK(image.coefficient(order[k]) == row[k]);

    CHECK(random_to_random(wv("a")) == wv("a"));
    CHECK(random_to_random(WordVector(Word())).empty());
    CHECK(top_to_random(wv("1234")) == wv("4123") + wv("1423") + wv("1243") + wv("1234"));
    CHECK(r2r_via_group_algebra(parse_word("a")) == wv("a"));
    CHECK(r2r_via_group_algebra(parse_word("ab")) == terms({{"ab", 2}, {"ba", 2}}));
    CHECK_THROWS(random_to_random(wv("1") + wv("12")));

    for (const auto& w : all_words(4, 3))
        for (const auto& [u, c] : random_to_random(WordVector(w))) CHECK((is_integral(c) && c > 0));
}

TEST_CASE("r2r agrees with the group algebra and with t2r after r2t") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : all_words(n, 3)) {
            const WordVector v(w);
            const WordVector r = random_to_random(v);
            CHECK(r == r2r_via_group_algebra(w));
            CHECK(r == top_to_random(random_to_top(v)));
        }
}

TEST_CASE("adjointness of sh and del") {
    for (int n = 0; n <= 5; ++n)
        for (const auto& w : all_words(n, 3))
            for (Letter i = 1; i <= 3; ++i) {
                const WordVector up = apply_sh(i, WordVector(w));
                for (const auto& [u, c] : up) CHECK(apply_del(i, WordVector(u)).coefficient(w) == c);
            }
    // The converse direction: every nonzero del coefficient is matched.
    for (const auto& u : all_words(6, 2))
        for (Letter i = 1; i <= 2; ++i)
            for (const auto& [w, c] : apply_del(i, WordVector(u))) CHECK(apply_sh(i, WordVector(w)).coefficient(u) == c);
}

TEST_CASE("sh and del commute among themselves") {
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> len(1, 6), letter(1, 3);
        const WordVector v(oracle::random_word(static_cast<std::size_t>(len(oracle::rng())), 3));
        const Letter a = letter(oracle::rng()), b = letter(oracle::rng());
        CHECK(apply_sh(a, apply_sh(b, v)) == apply_sh(b, apply_sh(a, v)));
        CHECK(apply_del(b, apply_del(a, v)) == apply_del(a, apply_del(b, v)));
    }
}

TEST_CASE("commutation identities between sh, del and theta") {
    for (int n = 0; n <= 5; ++n)
        for (const auto& w : all_words(n, 3)) {
            const WordVector v(w);
            for (Letter a = 1; a <= 3; ++a)
                for (Letter b = 1; b <= 3; ++b) {
                    WordVector rhs13 = apply_theta(b, a, v);
                    if (a == b) rhs13 += BigRational(n + 1) * v;
                    CHECK(apply_del(b, apply_sh(a, v)) - apply_sh(a, apply_del(b, v)) == rhs13);
                    CHECK(apply_theta(a, b, apply_sh(a, v)) - apply_sh(a, apply_theta(a, b, v)) == apply_sh(b, v));
                    CHECK(apply_del(a, apply_theta(b, a, v)) - apply_theta(b, a, apply_del(a, v)) == apply_del(b, v));
                }
        }
}

TEST_CASE("r2r shifted across sh") {
    for (int n = 0; n <= 5; ++n)
        for (const auto& w : all_words(n, 3)) {
            const WordVector v(w);
            for (Letter a = 1; a <= 3; ++a) {
                const WordVector lhs = random_to_random(apply_sh(a, v)) - apply_sh(a, random_to_random(v));
                WordVector first = BigRational(n + 1) * apply_sh(a, v);
                WordVector second = BigRational(n + 1 - 3) * apply_sh(a, v);
                for (Letter b = 1; b <= 3; ++b) {
                    first += apply_sh(b, apply_theta(b, a, v));
                    second += apply_theta(b, a, apply_sh(b, v));
                }
                CHECK(lhs == first);
                CHECK(lhs == second);
            }
        }
}

TEST_CASE("r2r shifted across sh, length n over n letters") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& w : all_words(n, n)) {
            const WordVector v(w);
            for (Letter a = 1; a <= n; ++a) {
                const WordVector lhs = random_to_random(apply_sh(a, v)) - apply_sh(a, random_to_random(v));
                WordVector second = apply_sh(a, v);
                for (Letter b = 1; b <= n; ++b) second += apply_theta(b, a, apply_sh(b, v));
                CHECK(lhs == second);
            }
        }
}

TEST_CASE("transition matrices on words with two 1s and two 2s") {
    const OperatorMatrix r2t = operator_matrix(Shuffle::RandomToTop, {2, 2});
    CHECK(r2t.scale == 4);
    CHECK(r2t.entries == from_ints({{2, 0, 0, 2, 0, 0},
                                    {1, 1, 0, 1, 1, 0},
                                    {1, 0, 1, 0, 2, 0},
                                    {0, 2, 0, 1, 0, 1},
                                    {0, 1, 1, 0, 1, 1},
                                    {0, 0, 2, 0, 0, 2}}));
    const OperatorMatrix r2r = operator_matrix(Shuffle::RandomToRandom, {2, 2});
    CHECK(r2r.scale == 16);
    CHECK(r2r.entries == from_ints({{8, 4, 2, 2, 0, 0},
                                    {4, 4, 3, 3, 2, 0},
                                    {2, 3, 6, 0, 3, 2},
                                    {2, 3, 0, 6, 3, 2},
                                    {0, 2, 3, 3, 4, 4},
                                    {0, 0, 2, 2, 4, 8}}));
    CHECK(transition_matrix(Shuffle::RandomToRandom, {1}) == ExactMatrix::Identity(1, 1));
    CHECK(parse_shuffle("t2r") == Shuffle::TopToRandom);
    CHECK(to_string(Shuffle::RandomToTop) == "r2t");
    CHECK_THROWS_AS(parse_shuffle("riffle"), std::invalid_argument);
}

TEST_CASE("transition matrices are stochastic and r2r is symmetric") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& nu : partitions_of(n))
            for (Shuffle s : {Shuffle::RandomToRandom, Shuffle::RandomToTop, Shuffle::TopToRandom}) {
                const ExactMatrix t = transition_matrix(s, Evaluation(nu.parts()));
                for (Index i = 0; i < t.rows(); ++i) CHECK(t.row(i).sum() == 1);
                if (s == Shuffle::RandomToRandom) {
                    CHECK(t == t.transpose());
                    const ExactMatrix a = transition_matrix(Shuffle::RandomToTop, Evaluation(nu.parts()));
                    const ExactMatrix b = transition_matrix(Shuffle::TopToRandom, Evaluation(nu.parts()));
                    CHECK(t == a * b);
                }
            }
}

TEST_CASE("r2r and r2t have the same kernel") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& nu : partitions_of(n)) {
            const Evaluation e(nu.parts());
            // Left kernels: the operator acts on row vectors.
            const ExactMatrix r = operator_matrix(Shuffle::RandomToRandom, e).entries.transpose();
            const ExactMatrix t = operator_matrix(Shuffle::RandomToTop, e).entries.transpose();
            const auto kr = nullspace(r);
            const auto kt = nullspace(t);
            REQUIRE(kr.size() == kt.size());
            for (std::size_t i = 0; i < kr.size(); ++i) CHECK(kr[i] == kt[i]);
        }
}
