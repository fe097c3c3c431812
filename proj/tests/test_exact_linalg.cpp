#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace r2r;

namespace {

ExactMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows) {
    ExactMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
    Index i = 0;
    for (const auto& row : rows) {
        Index j = 0;
        for (long v : row) m(i, j++) = BigRational(v);
        ++i;
    }
    return m;
}

ExactMatrix random_int_matrix(Index rows, Index cols, int lo, int hi) {
    std::uniform_int_distribution<int> pick(lo, hi);
    ExactMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = BigRational(pick(oracle::rng()));
    return m;
}

// Deliberately rank-deficient: product of thin factors.
ExactMatrix random_low_rank(Index n, Index k) {
    return random_int_matrix(n, k, -3, 3) * random_int_matrix(k, n, -3, 3);
}

const ExactMatrix kR2R22 = from_ints({{8, 4, 2, 2, 0, 0},
                                      {4, 4, 3, 3, 2, 0},
                                      {2, 3, 6, 0, 3, 2},
                                      {2, 3, 0, 6, 3, 2},
                                      {0, 2, 3, 3, 4, 4},
                                      {0, 0, 2, 2, 4, 8}});

}  // namespace

TEST_CASE("BigRational is kept in lowest terms") {
    const BigRational q = BigRational(6) / BigRational(-4);
    CHECK(mp::numerator(q) == -3);
    CHECK(mp::denominator(q) == 2);
    CHECK(to_string(BigRational(0)) == "0");
    CHECK(to_string(q) == "-3/2");
    CHECK(parse_rational("-3/2") == q);
    CHECK(parse_rational("10/5") == BigRational(2));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("nullspace examples") {
    CHECK(nullspace(ExactMatrix::Identity(2, 2)).empty());

    auto k = nullspace(from_ints({{1, -1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0](0) == 1);
    CHECK(k[0](1) == 1);
}

TEST_CASE("rank examples") {
    CHECK(rank(ExactMatrix::Zero(3, 3)) == 0);
    CHECK(rank(ExactMatrix::Identity(3, 3)) == 3);
    ExactMatrix shifted = kR2R22 - BigRational(16) * ExactMatrix::Identity(6, 6);
    CHECK(rank(shifted) == oracle::naive_rank(shifted));
    CHECK(rank(shifted) == 5);
}

TEST_CASE("char_poly examples") {
    CHECK(char_poly(from_ints({{5}})) == IntPolynomial::linear(5));
    CHECK(char_poly(ExactMatrix::Identity(2, 2)) == IntPolynomial::from_roots({{1, 2}}));

    const IntPolynomial p = char_poly(kR2R22);
    CHECK(p == oracle::leverrier_char_poly(kR2R22));
    const IntegerRoots roots = integer_roots(p);
    CHECK(roots.splits());
    CHECK(roots.roots == std::map<std::int64_t, std::size_t>{{0, 2}, {4, 1}, {6, 1}, {10, 1}, {16, 1}});

    CHECK_THROWS_AS(char_poly(ExactMatrix::Zero(2, 3)), std::invalid_argument);
    ExactMatrix half = ExactMatrix::Identity(2, 2);
    half(0, 1) = BigRational(1, 2);
    CHECK_THROWS_AS(char_poly(half), std::invalid_argument);
}

TEST_CASE("solve examples") {
    ExactVector b(3);
    b << BigRational(1), BigRational(-2, 3), BigRational(7);
    auto x = solve(ExactMatrix::Identity(3, 3), b);
    REQUIRE(x);
    CHECK(*x == b);

    ExactVector c(2);
    c << BigRational(1), BigRational(0);
    CHECK_FALSE(solve(from_ints({{1, 1}, {1, 1}}), c).has_value());
}

TEST_CASE("rank plus nullity equals the column count") {
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> dim(1, 7);
        const Index r = dim(oracle::rng()), c = dim(oracle::rng());
        ExactMatrix m = trial % 2 ? random_int_matrix(r, c, -2, 2) : random_low_rank(std::max(r, c), 2).topLeftCorner(r, c);
        const auto k = nullspace(m);
        CHECK(rank(m) + static_cast<Index>(k.size()) == c);
        CHECK(rank(m) == oracle::naive_rank(m));
        for (const auto& v : k) CHECK((m * v).isZero());
    }
}

TEST_CASE("nullspace is in reduced row echelon form and reproducible") {
    for (int trial = 0; trial < 30; ++trial) {
        ExactMatrix m = random_low_rank(6, 3);
        const auto a = nullspace(m);
        const auto b = nullspace(m);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
        if (a.empty()) continue;
        ExactMatrix stacked(static_cast<Index>(a.size()), m.cols());
        for (std::size_t i = 0; i < a.size(); ++i) stacked.row(static_cast<Index>(i)) = a[i].transpose();
        CHECK(reduced_row_echelon(stacked) == stacked);
    }
}

TEST_CASE("char_poly of a block-diagonal matrix factors") {
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<int> dim(1, 5);
        const Index p = dim(oracle::rng()), q = dim(oracle::rng());
        ExactMatrix a = random_int_matrix(p, p, -4, 4), b = random_int_matrix(q, q, -4, 4);
        ExactMatrix block = ExactMatrix::Zero(p + q, p + q);
        block.topLeftCorner(p, p) = a;
        block.bottomRightCorner(q, q) = b;
        CHECK(char_poly(block) == char_poly(a) * char_poly(b));
        CHECK(char_poly(a) == oracle::leverrier_char_poly(a));
    }
}

TEST_CASE("char_poly handles entries that need several primes") {
    ExactMatrix m = random_int_matrix(12, 12, -1000000, 1000000);
    CHECK(char_poly(m) == oracle::leverrier_char_poly(m));
}

TEST_CASE("determinant, inverse and full row rank") {
    for (int trial = 0; trial < 30; ++trial) {
        ExactMatrix m = random_int_matrix(4, 4, -5, 5);
        const BigRational d = determinant(m);
        const IntPolynomial p = oracle::leverrier_char_poly(m);
        CHECK(d == BigRational(p.coefficient(0)));  // det(-m) = det(m) for even size
        auto inv = inverse(m);
        CHECK(inv.has_value() == (d != 0));
        if (inv) CHECK(m * *inv == ExactMatrix::Identity(4, 4));
        CHECK(has_full_row_rank(m) == (d != 0));
    }
    CHECK_FALSE(has_full_row_rank(random_low_rank(5, 3)));
    const ExactMatrix top = random_low_rank(5, 3).topRows(2);
    CHECK(has_full_row_rank(top) == (oracle::naive_rank(top) == 2));
}

TEST_CASE("integer_roots separates integer roots from the cofactor") {
    IntPolynomial p = IntPolynomial::from_roots({{0, 3}, {-7, 1}, {12, 2}});
    IntPolynomial irreducible(std::vector<BigInt>{BigInt(2), BigInt(0), BigInt(1)});  // x^2 + 2
    IntegerRoots r = integer_roots(p * irreducible);
    CHECK(r.roots == std::map<std::int64_t, std::size_t>{{-7, 1}, {0, 3}, {12, 2}});
    CHECK_FALSE(r.splits());
    CHECK(r.cofactor == irreducible);
    CHECK(r.count() == 6);
    CHECK_THROWS_AS(p.deflate(BigInt(5)), std::domain_error);
}
