#include "r2r/modular.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace r2r::modular {

Modulus::Modulus(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 31)) throw std::invalid_argument("modulus out of range");
    barrett_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / p);
}

std::uint32_t Modulus::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    return static_cast<std::uint32_t>(t < 0 ? t + p_ : t);
}

std::uint32_t Modulus::from_signed(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 7ull, 61ull}) {
        if (a % n == 0) continue;
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeSequence::PrimeSequence() : cursor_(1u << 28) {}

std::uint32_t PrimeSequence::next() {
    while (cursor_ > 2) {
        --cursor_;
        if (is_prime(cursor_)) return cursor_;
    }
    throw std::runtime_error("prime sequence exhausted");
}

std::vector<std::uint32_t> char_poly(std::vector<std::uint32_t> h, std::size_t n, const Modulus& mod) {
    auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& { return h[i * n + j]; };
    const std::uint32_t p = mod.prime();
    if (p >= (1u << 28)) throw std::invalid_argument("char_poly needs a prime below 2^28");

    // Similarity reduction to upper Hessenberg form.
    std::vector<std::uint32_t> u(n);
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t piv = j + 1;
        while (piv < n && at(piv, j) == 0) ++piv;
        if (piv == n) continue;
        if (piv != j + 1) {
            for (std::size_t k = 0; k < n; ++k) std::swap(at(piv, k), at(j + 1, k));
            for (std::size_t k = 0; k < n; ++k) std::swap(at(k, piv), at(k, j + 1));
        }
        const std::uint32_t inv = mod.inv(at(j + 1, j));
        const std::uint32_t* prow = &h[(j + 1) * n];
        bool any = false;
        for (std::size_t i = j + 2; i < n; ++i) {
            u[i] = mod.mul(at(i, j), inv);
            if (u[i] == 0) continue;
            any = true;
            const std::uint32_t f = p - u[i];
            std::uint32_t* row = &h[i * n];
            for (std::size_t k = j; k < n; ++k) row[k] = mod.reduce(row[k] + static_cast<std::uint64_t>(f) * prow[k]);
        }
        if (!any) continue;
        // column j+1 += sum_i u_i * column i; products < 2^56 so 128 of them fit in 64 bits.
        for (std::size_t r = 0; r < n; ++r) {
            const std::uint32_t* row = &h[r * n];
            std::uint64_t acc = at(r, j + 1);
            std::size_t since = 0;
            for (std::size_t i = j + 2; i < n; ++i) {
                acc += static_cast<std::uint64_t>(u[i]) * row[i];
                if (++since == 128) {
                    acc = mod.reduce(acc);
                    since = 0;
                }
            }
            at(r, j + 1) = mod.reduce(acc);
        }
    }

    // Recurrence on leading principal submatrices of the Hessenberg matrix.
    std::vector<std::vector<std::uint32_t>> polys(n + 1);
    polys[0] = {1};
    for (std::size_t m = 1; m <= n; ++m) {
        const std::vector<std::uint32_t>& prev = polys[m - 1];
        std::vector<std::uint32_t> cur(m + 1, 0);
        const std::uint32_t hmm = at(m - 1, m - 1);
        for (std::size_t k = 0; k < prev.size(); ++k) {
            cur[k + 1] = mod.add(cur[k + 1], prev[k]);
            cur[k] = mod.sub(cur[k], mod.mul(hmm, prev[k]));
        }
        std::uint32_t prod = 1;
        for (std::size_t i = m - 1; i-- > 0;) {
            prod = mod.mul(prod, at(i + 1, i));
            if (prod == 0) break;
            const std::uint32_t coef = mod.mul(at(i, m - 1), prod);
            if (coef == 0) continue;
            const std::vector<std::uint32_t>& q = polys[i];
            for (std::size_t k = 0; k < q.size(); ++k) cur[k] = mod.sub(cur[k], mod.mul(coef, q[k]));
        }
        polys[m] = std::move(cur);
    }
    return polys[n];
}

std::size_t rank(std::vector<std::uint32_t> a, std::size_t rows, std::size_t cols, const Modulus& mod) {
    const std::uint32_t p = mod.prime();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t k = 0; k < cols; ++k) std::swap(a[piv * cols + k], a[r * cols + k]);
        const std::uint32_t inv = mod.inv(a[r * cols + c]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            std::uint32_t x = a[i * cols + c];
            if (x == 0) continue;
            const std::uint32_t f = p - mod.mul(x, inv);
            for (std::size_t k = c; k < cols; ++k)
                a[i * cols + k] = mod.reduce(a[i * cols + k] + static_cast<std::uint64_t>(f) * a[r * cols + k]);
        }
        ++r;
    }
    return r;
}

}  // namespace r2r::modular
