#pragma once

#include "r2r/scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace r2r {

// Dense univariate polynomial over the integers, lowest degree first.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients);

    static IntPolynomial monomial(std::size_t degree);
    // x - root
    static IntPolynomial linear(const BigInt& root);
    // prod (x - r)^m
    static IntPolynomial from_roots(const std::map<std::int64_t, std::size_t>& roots);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    BigInt coefficient(std::size_t k) const;
    const BigInt& leading() const;

    BigInt operator()(const BigInt& x) const;

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

    // Exact division by (x - r); throws std::domain_error if r is not a root.
    IntPolynomial deflate(const BigInt& r) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

struct IntegerRoots {
    std::map<std::int64_t, std::size_t> roots;  // root -> multiplicity
    IntPolynomial cofactor;                     // what is left after dividing out every integer root

    bool splits() const { return cofactor.degree() == 0; }
    std::size_t count() const;
};

// All integer roots of a nonzero polynomial, with multiplicity.
// Candidates come from the Fujiwara root bound and the divisors of the
// trailing coefficient, filtered modulo a large prime, then confirmed by exact
// synthetic division. Throws std::range_error if the bound exceeds 2^40.
IntegerRoots integer_roots(const IntPolynomial& p);

}  // namespace r2r
