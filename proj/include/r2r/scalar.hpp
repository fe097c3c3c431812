#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace r2r {

namespace mp = boost::multiprecision;

using BigInt = mp::number<mp::gmp_int, mp::et_off>;
using BigRational = mp::number<mp::gmp_rational, mp::et_off>;

// "p" for integers, "p/q" otherwise.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument.
BigRational parse_rational(std::string_view text);

bool is_integral(const BigRational& q);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace r2r
