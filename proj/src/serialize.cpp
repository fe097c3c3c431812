#include "r2r/serialize.hpp"

#include <stdexcept>

namespace r2r {

Json to_json(const Partition& p) {
    return Json(p.parts());
}

Partition partition_from_json(const Json& j) {
    return Partition(j.get<std::vector<int>>());
}

Json to_json(const Tableau& t) {
    return Json(t.rows());
}

Tableau tableau_from_json(const Json& j) {
    return Tableau(j.get<std::vector<std::vector<int>>>());
}

Json to_json(const WordVector& v) {
    Json out = Json::object();
    for (const auto& [w, c] : v) out[to_string(w)] = to_string(c);
    return out;
}

WordVector word_vector_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("word vector JSON must be an object");
    WordVector v;
    for (const auto& [key, value] : j.items()) v.add(parse_word(key, false), parse_rational(value.get<std::string>()));
    return v;
}

Json to_json(const SkewShape& s) {
    return Json{{"outer", to_json(s.outer())}, {"inner", to_json(s.inner())}};
}

SkewShape skew_shape_from_json(const Json& j) {
    return SkewShape(partition_from_json(j.at("outer")), partition_from_json(j.at("inner")));
}

Json to_json(const OperatorMatrix& m) {
    Json order = Json::array();
    for (const auto& w : m.order) order.push_back(to_string(w));
    Json rows = Json::array();
    for (Index i = 0; i < m.entries.rows(); ++i) {
        Json row = Json::array();
        for (Index j = 0; j < m.entries.cols(); ++j) {
            if (!is_integral(m.entries(i, j))) throw std::logic_error("operator matrix entries must be integers");
            row.push_back(mp::numerator(m.entries(i, j)).convert_to<std::int64_t>());
        }
        rows.push_back(std::move(row));
    }
    return Json{{"order", order}, {"scale", "1/" + std::to_string(m.scale)}, {"entries", rows}};
}

OperatorMatrix operator_matrix_from_json(const Json& j) {
    OperatorMatrix m;
    for (const auto& w : j.at("order")) m.order.push_back(parse_word(w.get<std::string>(), false));
    const std::string scale = j.at("scale").get<std::string>();
    if (scale.rfind("1/", 0) != 0) throw std::invalid_argument("scale must look like 1/k");
    m.scale = std::stoll(scale.substr(2));
    const auto& rows = j.at("entries");
    const Index n = static_cast<Index>(rows.size());
    m.entries = ExactMatrix::Zero(n, n);
    for (Index r = 0; r < n; ++r) {
        if (static_cast<Index>(rows[r].size()) != n) throw std::invalid_argument("matrix is not square");
        for (Index c = 0; c < n; ++c) m.entries(r, c) = BigRational(rows[r][c].get<std::int64_t>());
    }
    return m;
}

Json to_json(const StripEigenvalue& e) {
    return Json{{"lambda", to_json(e.strip.outer())},
                {"mu", to_json(e.strip.inner())},
                {"d_mu", e.desarrangements},
                {"kostka", e.kostka},
                {"multiplicity", e.multiplicity()},
                {"binom_lambda", e.outer_term()},
                {"binom_mu", e.inner_term()},
                {"diag", diag(e.strip)},
                {"eig", e.eig}};
}

Json to_json(const SpectrumReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries)
        if (e.multiplicity() > 0) entries.push_back(to_json(e));
    Json totals = Json::array();
    for (auto it = r.totals.rbegin(); it != r.totals.rend(); ++it)
        totals.push_back(Json{{"eig", it->first}, {"multiplicity", it->second}});
    return Json{{"evaluation", r.evaluation},
                {"partition", to_json(r.partition)},
                {"dimension", r.dimension()},
                {"entries", entries},
                {"totals", totals}};
}

Json to_json(const WordEigenvalue& w) {
    return Json{{"word", to_string(w.word)},
                {"suffix", to_string(w.suffix)},
                {"shape", to_json(w.shape)},
                {"suffix_shape", to_json(w.suffix_shape)},
                {"outer", {w.outer_binomial(), w.outer_diag()}},
                {"inner", {w.inner_binomial(), w.inner_diag()}},
                {"eig", w.eig}};
}

Json to_json(const EigenbasisEntry& e) {
    Json vectors = Json::array();
    for (const auto& v : e.vectors) vectors.push_back(to_json(v));
    return Json{{"strip", to_json(e.strip)}, {"eigenvalue", e.eigenvalue}, {"vectors", vectors}, {"provenance", e.provenance}};
}

EigenbasisEntry eigenbasis_entry_from_json(const Json& j) {
    EigenbasisEntry e{skew_shape_from_json(j.at("strip")), j.at("eigenvalue").get<std::int64_t>(), {}, {}};
    for (const auto& v : j.at("vectors")) e.vectors.push_back(word_vector_from_json(v));
    if (j.contains("provenance")) e.provenance = j.at("provenance").get<std::vector<std::size_t>>();
    return e;
}

Json to_json(const SchurExpansion& s) {
    Json out = Json::object();
    for (const auto& [lambda, c] : s.terms()) {
        std::string key;
        for (int i = 0; i < lambda.length(); ++i) key += (i ? "," : "") + std::to_string(lambda[i]);
        out[key] = c;
    }
    return out;
}

SchurExpansion schur_expansion_from_json(const Json& j) {
    SchurExpansion s;
    for (const auto& [key, value] : j.items()) s.add(Partition::parse(key), value.get<std::uint64_t>());
    return s;
}

}  // namespace r2r
