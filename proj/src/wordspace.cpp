#include "r2r/wordspace.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace r2r {

std::vector<Word> enumerate_words(const Evaluation& eval) {
    std::vector<Letter> letters;
    const auto& m = eval.multiplicities();
    for (std::size_t a = 0; a < m.size(); ++a) letters.insert(letters.end(), static_cast<std::size_t>(m[a]), static_cast<Letter>(a + 1));
    std::vector<Word> out;
    do {
        out.emplace_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    std::sort(out.begin(), out.end(), [](const Word& x, const Word& y) {
        return std::lexicographical_compare(y.letters().rbegin(), y.letters().rend(), x.letters().rbegin(), x.letters().rend());
    });
    return out;
}

WordVector apply_sh(Letter i, const WordVector& v) {
    WordVector out;
    for (const auto& [w, c] : v)
        for (std::size_t j = 0; j <= w.size(); ++j) out.add(w.insert(j, i), c);
    return out;
}

WordVector apply_del(Letter i, const WordVector& v) {
    WordVector out;
    for (const auto& [w, c] : v)
        for (std::size_t j = 0; j < w.size(); ++j)
            if (w[j] == i) out.add(w.erase(j), c);
    return out;
}

WordVector apply_theta(Letter i, Letter j, const WordVector& v) {
    WordVector out;
    for (const auto& [w, c] : v)
        for (std::size_t k = 0; k < w.size(); ++k)
            if (w[k] == i) out.add(w.replace(k, j), c);
    return out;
}

WordVector shuffle_product(const Word& u, const Word& w) {
    if (u.empty()) return WordVector(w);
    if (w.empty()) return WordVector(u);
    WordVector out;
    const Word u_head(std::vector<Letter>(u.begin(), u.end() - 1));
    const Word w_head(std::vector<Letter>(w.begin(), w.end() - 1));
    for (const auto& [x, c] : shuffle_product(u_head, w)) out.add(x.append(u[u.size() - 1]), c);
    for (const auto& [x, c] : shuffle_product(u, w_head)) out.add(x.append(w[w.size() - 1]), c);
    return out;
}

Word apply_permutation(const Word& w, const Permutation& sigma) {
    if (static_cast<int>(w.size()) != sigma.degree())
        throw std::invalid_argument("word length " + std::to_string(w.size()) + " differs from permutation degree " +
                                    std::to_string(sigma.degree()));
    std::vector<Letter> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[sigma(static_cast<int>(i) + 1) - 1];
    return Word(std::move(out));
}

WordVector apply_permutation(const WordVector& v, const Permutation& sigma) {
    WordVector out;
    for (const auto& [w, c] : v) out.add(apply_permutation(w, sigma), c);
    return out;
}

WordVector random_to_random(const WordVector& v) {
    v.word_length();
    WordVector out;
    for (const auto& [w, c] : v) {
        const std::size_t n = w.size();
        for (std::size_t j = 0; j < n; ++j) {
            const Word rest = w.erase(j);
            for (std::size_t k = 0; k < n; ++k) out.add(rest.insert(k, w[j]), c);
        }
    }
    return out;
}

WordVector random_to_top(const WordVector& v) {
    v.word_length();
    WordVector out;
    for (const auto& [w, c] : v)
        for (std::size_t j = 0; j < w.size(); ++j) out.add(w.erase(j).append(w[j]), c);
    return out;
}

WordVector top_to_random(const WordVector& v) {
    v.word_length();
    WordVector out;
    for (const auto& [w, c] : v) {
        if (w.empty()) continue;
        const Letter top = w[w.size() - 1];
        const Word rest = w.erase(w.size() - 1);
        for (std::size_t k = 0; k <= rest.size(); ++k) out.add(rest.insert(k, top), c);
    }
    return out;
}

WordVector r2r_via_group_algebra(const Word& w) {
    const int n = static_cast<int>(w.size());
    WordVector out(w, BigRational(n));
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v) {
            if (u == v) continue;
            std::vector<int> cyc;
            if (u < v)
                for (int k = u; k <= v; ++k) cyc.push_back(k);
            else
                for (int k = u; k >= v; --k) cyc.push_back(k);
            out.add(apply_permutation(w, Permutation::cycle(n, cyc)), BigRational(1));
        }
    return out;
}

std::string_view to_string(Shuffle s) {
    switch (s) {
        case Shuffle::RandomToRandom: return "r2r";
        case Shuffle::RandomToTop: return "r2t";
        case Shuffle::TopToRandom: return "t2r";
    }
    return "?";
}

Shuffle parse_shuffle(std::string_view name) {
    if (name == "r2r") return Shuffle::RandomToRandom;
    if (name == "r2t") return Shuffle::RandomToTop;
    if (name == "t2r") return Shuffle::TopToRandom;
    throw std::invalid_argument("unknown shuffle '" + std::string(name) + "' (expected r2r, r2t or t2r)");
}

WordVector apply_shuffle(Shuffle s, const WordVector& v) {
    switch (s) {
        case Shuffle::RandomToRandom: return random_to_random(v);
        case Shuffle::RandomToTop: return random_to_top(v);
        case Shuffle::TopToRandom: return top_to_random(v);
    }
    throw std::logic_error("bad shuffle");
}

ExactMatrix matrix_of(const std::vector<Word>& basis, const std::function<WordVector(const WordVector&)>& f) {
    std::map<Word, Index> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<Index>(i));
    const Index n = static_cast<Index>(basis.size());
    ExactMatrix m = ExactMatrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
        for (const auto& [u, c] : f(WordVector(basis[i]))) {
            auto it = index.find(u);
            if (it == index.end()) throw std::logic_error("image leaves the span of the basis: " + to_string(u));
            m(i, it->second) = c;
        }
    }
    return m;
}

OperatorMatrix operator_matrix(Shuffle s, const Evaluation& eval) {
    OperatorMatrix out;
    out.order = enumerate_words(eval);
    const std::int64_t n = eval.total();
    out.scale = s == Shuffle::RandomToRandom ? n * n : n;
    if (out.scale == 0) out.scale = 1;
    out.entries = matrix_of(out.order, [s](const WordVector& v) { return apply_shuffle(s, v); });
    return out;
}

ExactMatrix transition_matrix(Shuffle s, const Evaluation& eval) {
    OperatorMatrix m = operator_matrix(s, eval);
    ExactMatrix t = m.entries;
    const BigRational inv(BigInt(1), BigInt(m.scale));
    for (Index i = 0; i < t.rows(); ++i)
        for (Index j = 0; j < t.cols(); ++j) t(i, j) *= inv;
    return t;
}

}  // namespace r2r
