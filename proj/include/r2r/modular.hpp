#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace r2r::modular {

// Arithmetic modulo a prime p < 2^31 with Barrett reduction of 64-bit values.
class Modulus {
public:
    explicit Modulus(std::uint32_t p);

    std::uint32_t prime() const { return p_; }
    std::uint32_t reduce(std::uint64_t x) const {
        std::uint64_t q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett_) >> 64);
        std::uint64_t r = x - q * p_;
        return static_cast<std::uint32_t>(r >= p_ ? r - p_ : r);
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return reduce(static_cast<std::uint64_t>(a) * b);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a ? p_ - a : 0; }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t from_signed(std::int64_t x) const;

private:
    std::uint32_t p_;
    std::uint64_t barrett_;
};

bool is_prime(std::uint32_t n);

// Consecutive primes below 2^28, largest first.
class PrimeSequence {
public:
    PrimeSequence();
    std::uint32_t next();

private:
    std::uint32_t cursor_;
};

// Characteristic polynomial det(xI - A) mod p of an n x n row-major matrix,
// lowest degree first (length n + 1, monic). The input is consumed.
std::vector<std::uint32_t> char_poly(std::vector<std::uint32_t> a, std::size_t n, const Modulus& mod);

std::size_t rank(std::vector<std::uint32_t> a, std::size_t rows, std::size_t cols, const Modulus& mod);

}  // namespace r2r::modular
