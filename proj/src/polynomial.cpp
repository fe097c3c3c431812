#include "r2r/polynomial.hpp"

#include <gmp.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace r2r {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree) {
    std::vector<BigInt> c(degree + 1, BigInt(0));
    c[degree] = 1;
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::linear(const BigInt& root) {
    return IntPolynomial({-root, BigInt(1)});
}

IntPolynomial IntPolynomial::from_roots(const std::map<std::int64_t, std::size_t>& roots) {
    IntPolynomial p({BigInt(1)});
    for (const auto& [r, m] : roots)
        for (std::size_t k = 0; k < m; ++k) p = p * linear(BigInt(r));
    return p;
}

BigInt IntPolynomial::coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

const BigInt& IntPolynomial::leading() const {
    if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

BigInt IntPolynomial::operator()(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) - b.coefficient(i);
    return IntPolynomial(std::move(c));
}

namespace {

bool try_deflate(const std::vector<BigInt>& a, const BigInt& r, std::vector<BigInt>& out) {
    const std::size_t d = a.size() - 1;
    out.assign(d, BigInt(0));
    BigInt carry = a[d];
    for (std::size_t i = d; i-- > 0;) {
        out[i] = carry;
        carry = a[i] + r * carry;
    }
    return carry == 0;
}

BigInt iroot_ceil(const BigInt& x, unsigned k) {
    BigInt r;
    int exact = mpz_root(r.backend().data(), x.backend().data(), k);
    return exact ? r : r + 1;
}

constexpr std::uint64_t kFilterPrime = 2305843009213693951ULL;  // 2^61 - 1

std::uint64_t mod_filter(const BigInt& z) {
    BigInt m = z % BigInt(kFilterPrime);
    if (m < 0) m += BigInt(kFilterPrime);
    return m.convert_to<std::uint64_t>();
}

}  // namespace

IntPolynomial IntPolynomial::deflate(const BigInt& r) const {
    if (coeffs_.size() < 2) throw std::domain_error("cannot deflate a constant polynomial");
    std::vector<BigInt> out;
    if (!try_deflate(coeffs_, r, out)) throw std::domain_error("not a root: " + r.str());
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigInt& c = coeffs_[k];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (mag != 1 || k == 0) os << mag;
        if (k >= 1) os << "x";
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

std::size_t IntegerRoots::count() const {
    std::size_t s = 0;
    for (const auto& [r, m] : roots) s += m;
    return s;
}

IntegerRoots integer_roots(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("integer_roots of the zero polynomial");
    IntegerRoots result;
    std::vector<BigInt> a = p.coefficients();

    std::size_t zeros = 0;
    while (a[zeros] == 0) ++zeros;
    if (zeros) {
        result.roots[0] = zeros;
        a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(zeros));
    }
    const std::size_t d = a.size() - 1;
    if (d == 0) {
        result.cofactor = IntPolynomial(a);
        return result;
    }

    BigInt lead = abs(a[d]);
    BigInt bound = 1;
    for (std::size_t k = 1; k <= d; ++k) {
        BigInt c = abs(a[d - k]);
        if (c == 0) continue;
        BigInt ratio = (c + lead - 1) / lead;
        bound = std::max(bound, iroot_ceil(ratio, static_cast<unsigned>(k)));
    }
    bound *= 2;
    if (bound > (BigInt(1) << 40)) throw std::range_error("integer root search bound too large: " + bound.str());
    const std::int64_t B = bound.convert_to<std::int64_t>();

    std::vector<std::uint64_t> am(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) am[i] = mod_filter(a[i]);
    auto eval_mod = [&](std::int64_t r) {
        std::uint64_t x = r >= 0 ? static_cast<std::uint64_t>(r) % kFilterPrime
                                 : kFilterPrime - static_cast<std::uint64_t>(-r) % kFilterPrime;
        unsigned __int128 acc = 0;
        for (std::size_t i = am.size(); i-- > 0;) acc = (acc * x + am[i]) % kFilterPrime;
        return static_cast<std::uint64_t>(acc);
    };

    const BigInt trailing = a[0];
    std::vector<BigInt> deflated;
    for (std::int64_t r = -B; r <= B; ++r) {
        if (r == 0) continue;
        if (trailing % BigInt(r) != 0) continue;
        if (eval_mod(r) != 0) continue;
        std::size_t mult = 0;
        while (a.size() > 1 && try_deflate(a, BigInt(r), deflated)) {
            a.swap(deflated);
            ++mult;
        }
        if (mult) result.roots[r] += mult;
        if (a.size() == 1) break;
    }
    result.cofactor = IntPolynomial(a);
    return result;
}

}  // namespace r2r
