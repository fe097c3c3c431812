#include "r2r/exact_linalg.hpp"

#include "r2r/modular.hpp"

#include <gmp.h>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace r2r {

namespace {

// Fraction-free forward elimination; returns the rank, leaves the pivots on
// the echelon diagonal, and tracks the parity of row swaps.
Index bareiss(IntMatrix& a, bool* odd_swaps = nullptr) {
    const Index rows = a.rows(), cols = a.cols();
    BigInt prev = 1;
    Index r = 0;
    bool odd = false;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index p = r;
        while (p < rows && a(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            a.row(p).swap(a.row(r));
            odd = !odd;
        }
        const BigInt pivot = a(r, c);
        for (Index i = r + 1; i < rows; ++i) {
            const BigInt lead = a(i, c);
            for (Index j = c + 1; j < cols; ++j) {
                BigInt v = pivot * a(i, j) - lead * a(r, j);
                a(i, j) = v / prev;
            }
            a(i, c) = 0;
        }
        prev = pivot;
        ++r;
    }
    if (odd_swaps) *odd_swaps = odd;
    return r;
}

std::uint32_t reduce_mod(const BigInt& z, std::uint32_t p) {
    return static_cast<std::uint32_t>(mpz_fdiv_ui(z.backend().data(), p));
}

}  // namespace

IntMatrix clear_row_denominators(const ExactMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i) {
        BigInt l = 1;
        for (Index j = 0; j < m.cols(); ++j) l = lcm(l, mp::denominator(m(i, j)));
        for (Index j = 0; j < m.cols(); ++j) out(i, j) = mp::numerator(m(i, j)) * (l / mp::denominator(m(i, j)));
    }
    return out;
}

ExactMatrix to_exact(const IntMatrix& m) {
    ExactMatrix out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) out(i, j) = BigRational(m(i, j));
    return out;
}

ExactMatrix reduced_row_echelon(const ExactMatrix& m, std::vector<Index>* pivots) {
    ExactMatrix a = m;
    auto piv = row_reduce(a);
    if (pivots) *pivots = std::move(piv);
    return a;
}

Index rank(const ExactMatrix& m) {
    IntMatrix a = clear_row_denominators(m);
    return bareiss(a);
}

bool has_full_row_rank(const ExactMatrix& m) {
    if (m.rows() > m.cols()) return false;
    if (m.rows() == 0) return true;
    IntMatrix a = clear_row_denominators(m);
    modular::PrimeSequence primes;
    for (int attempt = 0; attempt < 3; ++attempt) {
        modular::Modulus mod(primes.next());
        std::vector<std::uint32_t> red(static_cast<std::size_t>(a.rows() * a.cols()));
        for (Index i = 0; i < a.rows(); ++i)
            for (Index j = 0; j < a.cols(); ++j) red[i * a.cols() + j] = reduce_mod(a(i, j), mod.prime());
        if (modular::rank(std::move(red), a.rows(), a.cols(), mod) == static_cast<std::size_t>(a.rows())) return true;
    }
    return bareiss(a) == a.rows();
}

std::vector<ExactVector> nullspace(const ExactMatrix& m) {
    std::vector<Index> pivots;
    ExactMatrix r = reduced_row_echelon(m, &pivots);
    const Index cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (Index c : pivots) is_pivot[c] = true;
    std::vector<Index> free;
    for (Index c = 0; c < cols; ++c)
        if (!is_pivot[c]) free.push_back(c);
    if (free.empty()) return {};

    ExactMatrix basis = ExactMatrix::Zero(static_cast<Index>(free.size()), cols);
    for (std::size_t k = 0; k < free.size(); ++k) {
        basis(k, free[k]) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) basis(k, pivots[i]) = -r(i, free[k]);
    }
    row_reduce(basis);
    std::vector<ExactVector> out;
    for (Index k = 0; k < basis.rows(); ++k) out.push_back(basis.row(k).transpose());
    return out;
}

std::optional<ExactVector> solve(const ExactMatrix& m, const ExactVector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
    ExactMatrix aug(m.rows(), m.cols() + 1);
    aug.leftCols(m.cols()) = m;
    aug.col(m.cols()) = b;
    std::vector<Index> pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    ExactVector x = ExactVector::Zero(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x(pivots[i]) = aug(static_cast<Index>(i), m.cols());
    return x;
}

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
    const Index n = m.rows();
    ExactMatrix aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n) = ExactMatrix::Identity(n, n);
    std::vector<Index> pivots = row_reduce(aug);
    if (static_cast<Index>(pivots.size()) < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
    return ExactMatrix(aug.rightCols(n));
}

BigRational determinant(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
    const Index n = m.rows();
    if (n == 0) return 1;
    BigRational scale = 1;
    for (Index i = 0; i < n; ++i) {
        BigInt l = 1;
        for (Index j = 0; j < n; ++j) l = lcm(l, mp::denominator(m(i, j)));
        scale *= BigRational(l);
    }
    IntMatrix a = clear_row_denominators(m);
    bool odd = false;
    if (bareiss(a, &odd) < n) return 0;
    BigRational d(a(n - 1, n - 1));
    if (odd) d = -d;
    return d / scale;
}

IntPolynomial char_poly(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: matrix is not square");
    const std::size_t n = static_cast<std::size_t>(m.rows());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (!is_integral(m(i, j))) throw std::invalid_argument("char_poly: entries must be integral");
    if (n == 0) return IntPolynomial({BigInt(1)});

    // Every eigenvalue lies within rho of the origin, so the coefficient of
    // x^k is bounded by C(n,k) rho^(n-k).
    BigInt rho = 0;
    bool small = true;
    const BigInt limit = BigInt(1) << 62;
    for (Index i = 0; i < m.rows(); ++i) {
        BigInt s = 0;
        for (Index j = 0; j < m.cols(); ++j) {
            BigInt v = abs(mp::numerator(m(i, j)));
            if (v >= limit) small = false;
            s += v;
        }
        rho = std::max(rho, s);
    }
    BigInt bound = 0, binom = 1, power = 1;
    std::vector<BigInt> rho_pow(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        rho_pow[k] = power;
        power *= rho;
    }
    for (std::size_t k = 0; k <= n; ++k) {
        bound = std::max(bound, binom * rho_pow[n - k]);
        binom = binom * BigInt(n - k) / BigInt(k + 1);
    }
    const BigInt needed = 2 * bound + 1;

    std::vector<std::int64_t> small_entries;
    if (small) {
        small_entries.resize(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) small_entries[i * n + j] = mp::numerator(m(i, j)).convert_to<std::int64_t>();
    }

    std::vector<BigInt> x(n + 1, BigInt(0));
    BigInt modulus = 1;
    modular::PrimeSequence primes;
    std::vector<std::uint32_t> reduced(n * n);
    while (modulus < needed) {
        modular::Modulus mod(primes.next());
        const std::uint32_t p = mod.prime();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                reduced[i * n + j] = small ? mod.from_signed(small_entries[i * n + j])
                                           : reduce_mod(mp::numerator(m(i, j)), p);
        std::vector<std::uint32_t> res = modular::char_poly(reduced, n, mod);
        const std::uint32_t minv = mod.inv(reduce_mod(modulus, p));
        for (std::size_t k = 0; k <= n; ++k) {
            const std::uint32_t t = mod.mul(mod.sub(res[k], reduce_mod(x[k], p)), minv);
            if (t) x[k] += modulus * t;
        }
        modulus *= p;
    }
    const BigInt half = modulus / 2;
    for (auto& c : x)
        if (c > half) c -= modulus;
    return IntPolynomial(std::move(x));
}

}  // namespace r2r
