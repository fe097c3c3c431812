#include "r2r/injective.hpp"

#include "r2r/wordspace.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>

namespace r2r {

namespace {

void check_word(int n, int r, const Word& w) {
    if (static_cast<int>(w.size()) != r) throw std::invalid_argument("expected a word of length " + std::to_string(r));
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (Letter a : w) {
        if (a > n || seen[a]) throw std::invalid_argument("not an injective word over 1.." + std::to_string(n) + ": " + to_string(w));
        seen[a] = true;
    }
}

int alternating(std::size_t j) {
    return j % 2 ? -1 : 1;
}

}  // namespace

std::vector<Word> injective_words(int n, int r) {
    if (n < 0 || r < 0 || r > n) throw std::invalid_argument("need 0 <= r <= n");
    std::vector<Word> out;
    std::vector<Letter> cur;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    std::function<void()> rec = [&] {
        if (static_cast<int>(cur.size()) == r) {
            out.emplace_back(cur);
            return;
        }
        for (Letter a = 1; a <= n; ++a) {
            if (used[a]) continue;
            used[a] = true;
            cur.push_back(a);
            rec();
            cur.pop_back();
            used[a] = false;
        }
    };
    rec();
    return out;
}

int sign(const Word& w) {
    int inversions = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (w[i] == w[j]) throw std::invalid_argument("sign of a word with a repeated letter");
            if (w[i] > w[j]) ++inversions;
        }
    return inversions % 2 ? -1 : 1;
}

WordVector boundary(int n, int r, const WordVector& v) {
    if (r < 1 || r > n) throw std::invalid_argument("boundary needs 1 <= r <= n");
    WordVector out;
    for (const auto& [w, c] : v) {
        check_word(n, r, w);
        for (std::size_t j = 1; j <= w.size(); ++j) out.add(w.erase(j - 1), c * alternating(j));
    }
    return out;
}

WordVector coboundary(int n, int r, const WordVector& v) {
    if (r < 0 || r >= n) throw std::invalid_argument("coboundary needs 0 <= r < n");
    WordVector out;
    for (const auto& [w, c] : v) {
        check_word(n, r, w);
        for (Letter x = 1; x <= n; ++x) {
            if (w.multiplicity(x)) continue;
            for (std::size_t j = 1; j <= w.size() + 1; ++j) out.add(w.insert(j - 1, x), c * alternating(j));
        }
    }
    return out;
}

ExactMatrix boundary_matrix(int n, int r) {
    const auto rows = injective_words(n, r);
    const auto cols = injective_words(n, r - 1);
    std::map<Word, Index> index;
    for (std::size_t k = 0; k < cols.size(); ++k) index.emplace(cols[k], static_cast<Index>(k));
    ExactMatrix m = ExactMatrix::Zero(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [u, c] : boundary(n, r, WordVector(rows[i]))) m(static_cast<Index>(i), index.at(u)) = c;
    return m;
}

ExactMatrix laplacian(int n, int r) {
    if (r < 0 || r > n) throw std::invalid_argument("laplacian needs 0 <= r <= n");
    return matrix_of(injective_words(n, r), [n, r](const WordVector& v) {
        WordVector out;
        if (r >= 1) out += coboundary(n, r - 1, boundary(n, r, v));
        if (r < n) out += boundary(n, r + 1, coboundary(n, r, v));
        return out;
    });
}

WordVector signed_r2r(int n, int r, const WordVector& v) {
    WordVector out;
    for (const auto& [w, c] : v) {
        check_word(n, r, w);
        out.add(w, c * r);
        for (std::size_t u = 1; u <= w.size(); ++u) {
            const Word rest = w.erase(u - 1);
            for (std::size_t t = 1; t <= w.size(); ++t) {
                if (t == u) continue;
                out.add(rest.insert(t - 1, w[u - 1]), c * alternating(u > t ? u - t : t - u));
            }
        }
    }
    return out;
}

ExactMatrix signed_r2r_matrix(int n, int r) {
    return matrix_of(injective_words(n, r), [n, r](const WordVector& v) { return signed_r2r(n, r, v); });
}

ExactMatrix r2r_matrix_on_injective(int n, int r) {
    return matrix_of(injective_words(n, r), [](const WordVector& v) { return random_to_random(v); });
}

ExactMatrix sign_matrix(int n, int r) {
    const auto words = injective_words(n, r);
    ExactMatrix t = ExactMatrix::Zero(static_cast<Index>(words.size()), static_cast<Index>(words.size()));
    for (std::size_t i = 0; i < words.size(); ++i) t(static_cast<Index>(i), static_cast<Index>(i)) = sign(words[i]);
    return t;
}

}  // namespace r2r
