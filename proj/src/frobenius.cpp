#include "r2r/frobenius.hpp"

#include "r2r/spectrum.hpp"

#include <functional>
#include <stdexcept>

namespace r2r {

void SchurExpansion::add(const Partition& lambda, std::uint64_t coefficient) {
    if (coefficient == 0) return;
    if (!terms_.empty() && terms_.begin()->first.size() != lambda.size())
        throw std::invalid_argument("Schur terms must have equal size");
    terms_[lambda] += coefficient;
}

std::uint64_t SchurExpansion::coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? 0 : it->second;
}

std::uint64_t SchurExpansion::dimension() const {
    std::uint64_t d = 0;
    for (const auto& [lambda, c] : terms_) d += c * count_standard_tableaux(lambda);
    return d;
}

std::string SchurExpansion::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [lambda, c] : terms_) {
        if (!s.empty()) s += " + ";
        if (c != 1) s += std::to_string(c) + "*";
        s += "s[";
        for (int i = 0; i < lambda.length(); ++i) s += (i ? "," : "") + std::to_string(lambda[i]);
        s += "]";
    }
    return s;
}

namespace {

template <typename Keep>
SchurExpansion collect(int n, Keep&& keep) {
    if (n < 0) throw std::invalid_argument("negative size");
    SchurExpansion out;
    for (const Partition& lambda : partitions_of(n))
        for (const Partition& mu : horizontal_strip_inners(lambda)) {
            SkewShape strip(lambda, mu);
            if (keep(strip)) out.add(lambda, desarrangement_count(mu));
        }
    return out;
}

}  // namespace

SchurExpansion frobenius_of_eigenspace(int n, std::int64_t eigenvalue) {
    return collect(n, [&](const SkewShape& s) { return eig_strip(s) == eigenvalue; });
}

SchurExpansion r2t_frobenius(int n, int j) {
    if (j < 0 || j > n) throw std::invalid_argument("r2t_frobenius needs 0 <= j <= n");
    return collect(n, [&](const SkewShape& s) { return s.inner().size() == j; });
}

}  // namespace r2r
