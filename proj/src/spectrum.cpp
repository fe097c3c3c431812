#include "r2r/spectrum.hpp"

#include <stdexcept>

namespace r2r {

std::int64_t eig_strip(const SkewShape& shape) {
    return triangular(shape.outer().size()) - triangular(shape.inner().size()) + diag(shape);
}

std::uint64_t SpectrumReport::dimension() const {
    std::uint64_t s = 0;
    for (const auto& [e, m] : totals) s += m;
    return s;
}

SpectrumReport spectrum_for_evaluation(const Evaluation& eval) {
    SpectrumReport report;
    report.evaluation = eval.multiplicities();
    report.partition = Partition::from_composition(eval.multiplicities());
    const Partition& nu = report.partition;
    std::map<Partition, std::uint64_t> d_cache;
    auto d = [&](const Partition& mu) {
        auto it = d_cache.find(mu);
        if (it == d_cache.end()) it = d_cache.emplace(mu, desarrangement_count(mu)).first;
        return it->second;
    };
    for (const Partition& lambda : partitions_of(nu.size())) {
        if (!dominates(lambda, nu)) continue;
        const std::uint64_t k = kostka(lambda, nu);
        for (const Partition& mu : horizontal_strip_inners(lambda)) {
            SkewShape strip(lambda, mu);
            StripEigenvalue e{strip, eig_strip(strip), k, d(mu)};
            if (e.multiplicity() > 0) report.totals[e.eig] += e.multiplicity();
            report.entries.push_back(std::move(e));
        }
    }
    return report;
}

WordEigenvalue eig_word_trace(const Word& w) {
    WordEigenvalue r;
    r.word = w;
    r.suffix = even_ascent_suffix(w);
    r.shape = rsk(w).recording.shape();
    r.suffix_shape = rsk(r.suffix).recording.shape();
    r.eig = (r.outer_binomial() + r.outer_diag()) - (r.inner_binomial() + r.inner_diag());
    return r;
}

std::int64_t eig_word(const Word& w) {
    return eig_word_trace(w).eig;
}

std::pair<std::int64_t, std::uint64_t> second_largest(const Partition& eval) {
    const std::int64_t n = eval.size();
    if (eval.length() <= 1) throw std::invalid_argument("no second eigenvalue for the one-row evaluation " + eval.to_string());
    const std::pair<std::int64_t, std::uint64_t> predicted{(n - 2) * (n + 1), static_cast<std::uint64_t>(eval.length() - 1)};
    const SpectrumReport report = spectrum_for_evaluation(Evaluation(eval.parts()));
    auto it = report.totals.rbegin();
    if (it == report.totals.rend() || it->first != n * n || it->second != 1) throw std::logic_error("top eigenvalue is not simple n^2");
    ++it;
    if (it == report.totals.rend() || it->first != predicted.first || it->second != predicted.second)
        throw std::logic_error("second eigenvalue of " + eval.to_string() + " disagrees with the enumerated spectrum");
    return predicted;
}

std::map<std::int64_t, std::uint64_t> r2t_spectrum(const Partition& eval) {
    const SpectrumReport report = spectrum_for_evaluation(Evaluation(eval.parts()));
    const std::int64_t n = eval.size();
    std::map<std::int64_t, std::uint64_t> out;
    for (const auto& e : report.entries)
        if (e.multiplicity() > 0) out[n - e.strip.inner().size()] += e.multiplicity();
    return out;
}

}  // namespace r2r
