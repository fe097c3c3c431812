#pragma once

#include "r2r/combinatorics.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace r2r {

// Formal non-negative integer combination of Schur functions.
class SchurExpansion {
public:
    void add(const Partition& lambda, std::uint64_t coefficient);
    std::uint64_t coefficient(const Partition& lambda) const;
    const std::map<Partition, std::uint64_t>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    // sum of coefficient * f^lambda
    std::uint64_t dimension() const;

    // "s[3,2,1] + 2*s[4,1,1] + 2*s[4,2]"; "0" when empty.
    std::string to_string() const;

    bool operator==(const SchurExpansion&) const = default;

private:
    std::map<Partition, std::uint64_t> terms_;
};

// sum of d^mu s_lambda over horizontal strips lambda/mu, lambda of size n, with eig = eigenvalue
SchurExpansion frobenius_of_eigenspace(int n, std::int64_t eigenvalue);

// sum of d^mu s_lambda over horizontal strips lambda/mu with |mu| = j; this is the
// random-to-top eigenspace for the eigenvalue (n - j)/n.
SchurExpansion r2t_frobenius(int n, int j);

}  // namespace r2r
