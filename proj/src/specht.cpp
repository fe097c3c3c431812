#include "r2r/specht.hpp"

#include "r2r/wordspace.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace r2r {

Word word_of_tableau(const Tableau& t) {
    const int n = t.size();
    std::vector<Letter> w(static_cast<std::size_t>(n), 0);
    for (std::size_t r = 0; r < t.rows().size(); ++r)
        for (int x : t.rows()[r]) {
            if (x < 1 || x > n || w[x - 1] != 0) throw std::invalid_argument("tableau entries must be exactly 1..n: " + t.to_string());
            w[x - 1] = static_cast<Letter>(r + 1);
        }
    return Word(std::move(w));
}

namespace {

int parity_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 ? -1 : 1;
}

}  // namespace

WordVector polytabloid_vector(const Tableau& t) {
    const Word base = word_of_tableau(t);
    const int cols = t.shape()[0];
    std::vector<std::vector<int>> columns;
    for (int c = 1; c <= cols; ++c) columns.push_back(t.column(c));

    // Permuting column c by pi puts entry columns[c][pi(r)] in row r.
    std::vector<Letter> letters = base.letters();
    WordVector out;
    std::function<void(std::size_t, int)> rec = [&](std::size_t c, int sign) {
        if (c == columns.size()) {
            out.add(Word(letters), BigRational(sign));
            return;
        }
        const auto& col = columns[c];
        std::vector<int> perm(col.size());
        for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = static_cast<int>(k);
        do {
            for (std::size_t r = 0; r < col.size(); ++r) letters[col[perm[r]] - 1] = static_cast<Letter>(r + 1);
            rec(c + 1, sign * parity_sign(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (std::size_t r = 0; r < col.size(); ++r) letters[col[r] - 1] = static_cast<Letter>(r + 1);
    };
    rec(0, 1);
    return out;
}

SpechtBasis specht_basis(const Partition& shape) {
    SpechtBasis b;
    b.shape = shape;
    b.tableaux = standard_tableaux(shape);
    for (const auto& t : b.tableaux) b.vectors.push_back(polytabloid_vector(t));
    return b;
}

ExactMatrix gram_matrix(const std::vector<WordVector>& vectors) {
    const Index f = static_cast<Index>(vectors.size());
    ExactMatrix g(f, f);
    for (Index i = 0; i < f; ++i)
        for (Index j = i; j < f; ++j) g(i, j) = g(j, i) = dot(vectors[i], vectors[j]);
    return g;
}

WordVector combine(const std::vector<WordVector>& vectors, const std::vector<BigRational>& coefficients) {
    if (vectors.size() != coefficients.size()) throw std::invalid_argument("combine: size mismatch");
    WordVector out;
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        if (coefficients[k] == 0) continue;
        for (const auto& [w, c] : vectors[k]) out.add(w, c * coefficients[k]);
    }
    return out;
}

WordVector theta_embedding(const Tableau& t, const WordVector& v) {
    const Partition shape = t.shape();
    const auto& rows = t.rows();
    WordVector out;
    for (const auto& [u, c] : v) {
        if (u.evaluation() != shape.parts())
            throw std::invalid_argument("word " + to_string(u) + " does not have evaluation " + shape.to_string());
        std::vector<std::vector<std::size_t>> positions(rows.size());
        for (std::size_t i = 0; i < u.size(); ++i) positions[u[i] - 1].push_back(i);
        std::vector<Letter> letters(u.size());
        std::function<void(std::size_t)> rec = [&](std::size_t r) {
            if (r == rows.size()) {
                out.add(Word(letters), c);
                return;
            }
            std::vector<int> arrangement = rows[r];
            std::sort(arrangement.begin(), arrangement.end());
            do {
                for (std::size_t k = 0; k < arrangement.size(); ++k) letters[positions[r][k]] = arrangement[k];
                rec(r + 1);
            } while (std::next_permutation(arrangement.begin(), arrangement.end()));
        };
        rec(0);
    }
    return out;
}

namespace {

struct SpechtData {
    SpechtBasis basis;
    ExactMatrix gram_inverse;
    std::vector<Word> key_words;  // word(t) for each standard t
    ExactMatrix key_inverse;      // inverse of B(t, s) = coefficient of word(s) in w_t
};

std::shared_ptr<const SpechtData> build(const Partition& shape) {
    auto data = std::make_shared<SpechtData>();
    data->basis = specht_basis(shape);
    const auto& vecs = data->basis.vectors;
    auto g = inverse(gram_matrix(vecs));
    if (!g) throw std::logic_error("singular Gram matrix for " + shape.to_string());
    data->gram_inverse = std::move(*g);
    const Index f = static_cast<Index>(vecs.size());
    ExactMatrix b(f, f);
    for (const auto& t : data->basis.tableaux) data->key_words.push_back(word_of_tableau(t));
    for (Index i = 0; i < f; ++i)
        for (Index j = 0; j < f; ++j) b(i, j) = vecs[i].coefficient(data->key_words[j]);
    auto bi = inverse(b);
    if (!bi) throw std::logic_error("tabloid coordinate matrix is singular for " + shape.to_string());
    data->key_inverse = std::move(*bi);
    return data;
}

std::shared_ptr<const SpechtData> specht_data(const Partition& shape) {
    static std::shared_mutex mutex;
    static std::map<Partition, std::shared_ptr<const SpechtData>> cache;
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(shape);
        if (it != cache.end()) return it->second;
    }
    auto data = build(shape);
    std::unique_lock lock(mutex);
    return cache.emplace(shape, std::move(data)).first->second;
}

}  // namespace

WordVector project_onto_specht(const Partition& shape, const WordVector& v) {
    auto data = specht_data(shape);
    const auto& vecs = data->basis.vectors;
    const Index f = static_cast<Index>(vecs.size());
    ExactVector b(f);
    for (Index i = 0; i < f; ++i) b(i) = dot(vecs[i], v);
    ExactVector c = data->gram_inverse * b;
    return combine(vecs, std::vector<BigRational>(c.data(), c.data() + f));
}

std::optional<std::vector<BigRational>> specht_coordinates(const Partition& shape, const WordVector& v) {
    auto data = specht_data(shape);
    const auto& vecs = data->basis.vectors;
    const Index f = static_cast<Index>(vecs.size());
    Eigen::Matrix<BigRational, 1, Eigen::Dynamic> key(f);
    for (Index j = 0; j < f; ++j) key(j) = v.coefficient(data->key_words[j]);
    Eigen::Matrix<BigRational, 1, Eigen::Dynamic> c = key * data->key_inverse;
    std::vector<BigRational> coords(c.data(), c.data() + f);
    if (combine(vecs, coords) != v) return std::nullopt;
    return coords;
}

ExactMatrix r2r_on_specht(const Partition& shape) {
    auto data = specht_data(shape);
    const auto& vecs = data->basis.vectors;
    const Index f = static_cast<Index>(vecs.size());
    ExactMatrix m(f, f);
    for (Index i = 0; i < f; ++i) {
        auto coords = specht_coordinates(shape, random_to_random(vecs[i]));
        if (!coords) throw std::logic_error("random-to-random left the Specht module " + shape.to_string());
        for (Index j = 0; j < f; ++j) m(i, j) = (*coords)[j];
    }
    return m;
}

}  // namespace r2r
