#include "r2r/lifting.hpp"

#include "r2r/exact_linalg.hpp"
#include "r2r/spectrum.hpp"
#include "r2r/specht.hpp"
#include "r2r/wordspace.hpp"

#include <map>
#include <stdexcept>

namespace r2r {

WordVector lift_closed_form(const Partition& shape, int row, const WordVector& v) {
    if (!shape.can_add_cell(row))
        throw std::invalid_argument("adding a cell in row " + std::to_string(row) + " of " + shape.to_string() + " is not a partition");
    const std::int64_t target = static_cast<std::int64_t>(shape[row - 1]) - row;
    std::vector<WordVector> x(static_cast<std::size_t>(row) + 1);
    for (int b = 1; b <= row; ++b) {
        WordVector acc = apply_sh(b, v);
        for (int c = 1; c < b; ++c) {
            const std::int64_t gamma = target - (static_cast<std::int64_t>(shape[c - 1]) - c);
            if (gamma == 0) throw std::logic_error("vanishing lift denominator");
            acc += BigRational(BigInt(1), BigInt(gamma)) * apply_theta(c, b, x[c]);
        }
        x[b] = std::move(acc);
    }
    return x[row];
}

WordVector lift_via_projection(const Partition& shape, int row, const WordVector& v) {
    const Partition target = shape.add_cell(row);
    return project_onto_specht(target, apply_sh(row, v));
}

WordVector lift_rows(const Partition& shape, const std::vector<int>& rows, const WordVector& v, LiftMethod method) {
    for (std::size_t k = 1; k < rows.size(); ++k)
        if (rows[k] < rows[k - 1]) throw std::invalid_argument("lift rows must be weakly increasing");
    Partition cur = shape;
    WordVector out = v;
    for (int r : rows) {
        out = method == LiftMethod::ClosedForm ? lift_closed_form(cur, r, out) : lift_via_projection(cur, r, out);
        cur = cur.add_cell(r);
    }
    return out;
}

std::vector<int> strip_rows(const SkewShape& strip) {
    std::vector<int> rows;
    for (auto [i, j] : strip.cells()) rows.push_back(i);
    return rows;
}

WordVector lift_chain(const SkewShape& strip, const WordVector& v) {
    return lift_rows(strip.inner(), strip_rows(strip), v);
}

WordVector normalize(const WordVector& v) {
    if (v.empty()) return v;
    BigInt den = 1;
    for (const auto& [w, c] : v) den = lcm(den, mp::denominator(c));
    BigInt content = 0;
    for (const auto& [w, c] : v) content = gcd(content, mp::numerator(c) * (den / mp::denominator(c)));
    BigRational scale(den, content);
    if (v.begin()->second < 0) scale = -scale;
    return scale * v;
}

std::vector<WordVector> kernel_basis(const Partition& shape) {
    const ExactMatrix a = r2r_on_specht(shape);
    const SpechtBasis basis = specht_basis(shape);
    std::vector<WordVector> out;
    for (const ExactVector& c : nullspace(a.transpose())) {
        std::vector<BigRational> coeffs(c.data(), c.data() + c.size());
        WordVector v = combine(basis.vectors, coeffs);
        if (!random_to_random(v).empty()) throw std::logic_error("kernel vector is not annihilated on " + shape.to_string());
        out.push_back(normalize(v));
    }
    return out;
}

namespace {

void require_independent(const std::vector<const WordVector*>& vectors, const std::string& what) {
    std::map<Word, Index> columns;
    for (const WordVector* v : vectors)
        for (const auto& [w, c] : *v) columns.emplace(w, 0);
    Index k = 0;
    for (auto& [w, idx] : columns) idx = k++;
    ExactMatrix m = ExactMatrix::Zero(static_cast<Index>(vectors.size()), k);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (const auto& [w, c] : *vectors[i]) m(static_cast<Index>(i), columns[w]) = c;
    if (!has_full_row_rank(m)) throw std::logic_error(what + ": vectors are linearly dependent");
}

void require_eigen(const WordVector& v, std::int64_t eig, const std::string& what) {
    if (v.empty()) throw std::logic_error(what + ": zero vector");
    if (random_to_random(v) != BigRational(eig) * v) throw std::logic_error(what + ": eigen-equation fails");
}

}  // namespace

std::vector<EigenbasisEntry> eigenbasis(const Partition& shape) {
    std::vector<EigenbasisEntry> out;
    std::vector<const WordVector*> all;
    for (const Partition& mu : horizontal_strip_inners(shape)) {
        const std::vector<WordVector> kernel = kernel_basis(mu);
        if (kernel.empty()) continue;
        SkewShape strip(shape, mu);
        EigenbasisEntry e{strip, eig_strip(strip), {}, {}};
        for (std::size_t k = 0; k < kernel.size(); ++k) {
            WordVector v = lift_chain(strip, kernel[k]);
            require_eigen(v, e.eigenvalue, "lift through " + strip.to_string());
            e.vectors.push_back(normalize(v));
            e.provenance.push_back(k);
        }
        out.push_back(std::move(e));
    }
    for (const auto& e : out)
        for (const auto& v : e.vectors) all.push_back(&v);
    if (all.size() != count_standard_tableaux(shape))
        throw std::logic_error("eigenbasis of " + shape.to_string() + " has the wrong size");
    require_independent(all, "eigenbasis of " + shape.to_string());
    return out;
}

std::vector<EmbeddedEigenbasisEntry> eigenbasis_for_evaluation(const Evaluation& eval) {
    const Partition nu = Partition::from_composition(eval.multiplicities());
    std::vector<int> content = eval.multiplicities();
    std::vector<EmbeddedEigenbasisEntry> out;
    for (const Partition& lambda : partitions_of(nu.size())) {
        if (!dominates(lambda, nu)) continue;
        const auto specht = eigenbasis(lambda);
        for (const auto& t : semistandard_tableaux(lambda, content)) {
            for (const auto& e : specht) {
                EigenbasisEntry image{e.strip, e.eigenvalue, {}, e.provenance};
                for (const auto& v : e.vectors) {
                    WordVector w = theta_embedding(t, v);
                    require_eigen(w, e.eigenvalue, "embedding by " + t.to_string());
                    image.vectors.push_back(normalize(w));
                }
                out.push_back({t, std::move(image)});
            }
        }
    }
    std::vector<const WordVector*> all;
    for (const auto& e : out)
        for (const auto& v : e.entry.vectors) all.push_back(&v);
    if (all.size() != enumerate_words(eval).size()) throw std::logic_error("eigenbasis of M^nu has the wrong size");
    require_independent(all, "eigenbasis of M^nu");
    return out;
}

}  // namespace r2r
