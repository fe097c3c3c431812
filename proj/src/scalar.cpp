#include "r2r/scalar.hpp"

#include <stdexcept>

namespace r2r {

std::string to_string(const BigRational& q) {
    return q.str();
}

std::string to_string(const BigInt& z) {
    return z.str();
}

BigRational parse_rational(std::string_view text) {
    auto bad = [&] { return std::invalid_argument("not a rational number: '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (!s.empty() && allow_sign && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!valid_int(num, true)) throw bad();
    std::string num_s(num[0] == '+' ? num.substr(1) : num);
    if (slash == std::string_view::npos) return BigRational(BigInt(num_s));
    std::string_view den = text.substr(slash + 1);
    if (!valid_int(den, false)) throw bad();
    BigInt d{std::string(den)};
    if (d == 0) throw bad();
    return BigRational(BigInt(num_s), d);
}

bool is_integral(const BigRational& q) {
    return mp::denominator(q) == 1;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    return mp::gcd(a, b);
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    return mp::lcm(a, b);
}

}  // namespace r2r
