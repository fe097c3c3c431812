#include "cli.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

namespace r2r::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Column width in terminal cells; counts UTF-8 code points.
std::size_t display_width(const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string pad(const std::string& s, std::size_t width, bool left) {
    const std::size_t w = display_width(s);
    const std::string fill(width > w ? width - w : 0, ' ');
    return left ? s + fill : fill + s;
}

// Left-aligns column 0 and right-aligns the rest.
std::string render(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (widths.size() <= c) widths.push_back(0);
            widths[c] = std::max(widths[c], display_width(row[c]));
        }
    std::ostringstream out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) line += "  ";
            line += pad(row[c], widths[c], c == 0);
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    }
    return out.str();
}

std::string parts_text(const std::vector<int>& parts) {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s + ")";
}

std::string eigen_text(std::int64_t eig, int n, bool probability) {
    if (!probability) return std::to_string(eig);
    if (n == 0) return to_string(BigRational(eig));
    return to_string(BigRational(eig) / BigRational(static_cast<long>(n) * n));
}

Partition parse_partition_arg(const std::string& text) {
    try {
        return Partition::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad partition '") + text + "': " + e.what());
    }
}

Evaluation parse_evaluation_arg(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        std::size_t used = 0;
        int value = -1;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (token.empty() || used != token.size() || value < 0)
            throw UsageError("bad evaluation '" + text + "': offending token '" + token + "'");
        parts.push_back(value);
    }
    if (parts.empty()) throw UsageError("empty evaluation");
    return Evaluation(std::move(parts));
}

void check_size(int n, const char* what) {
    const int cap = max_brute_force_size();
    if (n > cap)
        throw UsageError(std::string(what) + " of size " + std::to_string(n) + " exceeds R2R_MAX_N=" + std::to_string(cap));
}

Json with_schema(const char* schema, Json body) {
    Json out{{"schema", schema}};
    for (auto& [k, v] : body.items()) out[k] = v;
    return out;
}

std::string format_word(const Word& w) { return w.empty() ? "∅" : to_string(w); }

// ---------------------------------------------------------------- eigenvalues

struct EigenvaluesArgs {
    std::optional<int> n;
    std::optional<std::string> evaluation;
    std::string format = "table";
    bool probability = false;
};

Json report_json(const SpectrumReport& r, bool probability) {
    Json j = to_json(r);
    if (probability) {
        const int n = r.partition.size();
        for (auto& e : j["entries"]) e["probability"] = eigen_text(e["eig"].get<std::int64_t>(), n, true);
        for (auto& t : j["totals"]) t["probability"] = eigen_text(t["eig"].get<std::int64_t>(), n, true);
    }
    return j;
}

int cmd_eigenvalues(const EigenvaluesArgs& a, std::ostream& out) {
    std::vector<SpectrumReport> reports;
    if (a.evaluation) {
        const Evaluation e = parse_evaluation_arg(*a.evaluation);
        if (a.n && *a.n != e.total())
            throw UsageError("--n " + std::to_string(*a.n) + " does not match evaluation of size " + std::to_string(e.total()));
        reports.push_back(spectrum_for_evaluation(e));
    } else if (a.n) {
        if (*a.n < 0) throw UsageError("--n must be non-negative");
        for (const auto& nu : partitions_of(*a.n)) reports.push_back(spectrum_for_evaluation(Evaluation(nu.parts())));
    } else {
        throw UsageError("eigenvalues needs --n or --evaluation");
    }

    if (a.format == "json") {
        Json list = Json::array();
        for (const auto& r : reports) list.push_back(report_json(r, a.probability));
        out << with_schema("r2r.eigenvalues/1", Json{{"reports", list}}).dump(2) << '\n';
    } else if (a.format == "csv") {
        out << spectrum_csv(reports, a.probability);
    } else {
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (i) out << '\n';
            out << spectrum_table(reports[i], a.probability);
        }
    }
    return kOk;
}

// ------------------------------------------------------------------ eig-word

int cmd_eig_word(const std::string& text, const std::string& format, std::ostream& out) {
    Word w;
    try {
        w = parse_word(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad word '") + text + "': " + e.what());
    }
    const WordEigenvalue t = eig_word_trace(w);
    if (format == "json") {
        out << with_schema("r2r.eig-word/1", to_json(t)).dump(2) << '\n';
        return kOk;
    }
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"w", format_word(t.word)});
    if (!w.empty()) {
        rows.push_back({"w'", format_word(t.suffix)});
        rows.push_back({"Q(w)", t.shape.to_string()});
        rows.push_back({"Q(w')", t.suffix_shape.to_string()});
        std::ostringstream trace;
        trace << "[" << t.outer_binomial() << " + " << t.outer_diag() << "] − [" << t.inner_binomial() << " + "
              << t.inner_diag() << "] = " << t.eig;
        rows.push_back({"eig", trace.str()});
    } else {
        rows.push_back({"eig", "0"});
    }
    for (const auto& r : rows) out << pad(r[0], 6, true) << r[1] << '\n';
    return kOk;
}

// --------------------------------------------------------- transition-matrix

int cmd_transition_matrix(const std::string& shuffle, const std::string& evaluation, const std::string& format,
                          std::ostream& out) {
    Shuffle s;
    try {
        s = parse_shuffle(shuffle);
    } catch (const std::invalid_argument&) {
        throw UsageError("unknown shuffle '" + shuffle + "' (expected r2r, r2t or t2r)");
    }
    const Evaluation e = parse_evaluation_arg(evaluation);
    check_size(e.total(), "evaluation");
    const OperatorMatrix m = operator_matrix(s, e);
    if (format == "json") {
        Json body = to_json(m);
        body["shuffle"] = std::string(to_string(s));
        body["evaluation"] = e.multiplicities();
        out << with_schema("r2r.transition-matrix/1", body).dump() << '\n';
        return kOk;
    }
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{""};
    for (const auto& w : m.order) header.push_back(format_word(w));
    rows.push_back(header);
    for (Index i = 0; i < m.entries.rows(); ++i) {
        std::vector<std::string> row{format_word(m.order[static_cast<std::size_t>(i)])};
        for (Index j = 0; j < m.entries.cols(); ++j) row.push_back(to_string(m.entries(i, j)));
        rows.push_back(row);
    }
    out << "1/" << m.scale << " ×\n" << render(rows);
    return kOk;
}

// ------------------------------------------------------------------ eigenbasis

void verify_entry(const EigenbasisEntry& e) {
    for (const auto& v : e.vectors) {
        const WordVector image = random_to_random(v);
        const WordVector expected = BigRational(e.eigenvalue) * v;
        if (image != expected)
            throw Mismatch("strip " + e.strip.to_string() + ": R2R(v) - " + std::to_string(e.eigenvalue) +
                           "v = " + to_string(image - expected));
    }
}

int cmd_eigenbasis(const std::optional<std::string>& partition, const std::optional<std::string>& evaluation, bool verify,
                   std::ostream& out) {
    if (!partition && !evaluation) throw UsageError("eigenbasis needs --partition or --evaluation");
    std::optional<Partition> shape;
    if (partition) {
        shape = parse_partition_arg(*partition);
        check_size(shape->size(), "partition");
    }
    Json body;
    Json entries = Json::array();
    std::size_t count = 0;
    if (evaluation) {
        const Evaluation e = parse_evaluation_arg(*evaluation);
        check_size(e.total(), "evaluation");
        if (shape && shape->size() != e.total()) throw UsageError("partition and evaluation sizes differ");
        for (const auto& item : eigenbasis_for_evaluation(e)) {
            if (shape && item.embedding.shape() != *shape) continue;
            if (verify) verify_entry(item.entry);
            Json j = to_json(item.entry);
            j["embedding"] = to_json(static_cast<const Tableau&>(item.embedding));
            entries.push_back(j);
            count += item.entry.vectors.size();
        }
        body["evaluation"] = e.multiplicities();
        if (shape) body["partition"] = to_json(*shape);
    } else {
        for (const auto& entry : eigenbasis(*shape)) {
            if (verify) verify_entry(entry);
            entries.push_back(to_json(entry));
            count += entry.vectors.size();
        }
        body["partition"] = to_json(*shape);
    }
    body["dimension"] = count;
    body["verified"] = verify;
    body["entries"] = entries;
    out << with_schema("r2r.eigenbasis/1", body).dump(2) << '\n';
    return kOk;
}

int cmd_kernel(const std::string& partition, std::ostream& out) {
    const Partition shape = parse_partition_arg(partition);
    check_size(shape.size(), "partition");
    const auto basis = kernel_basis(shape);
    Json vectors = Json::array();
    for (const auto& v : basis) vectors.push_back(to_json(v));
    out << with_schema("r2r.kernel/1", Json{{"partition", to_json(shape)},
                                            {"dimension", basis.size()},
                                            {"desarrangements", desarrangement_count(shape)},
                                            {"vectors", vectors}})
               .dump(2)
        << '\n';
    return basis.size() == desarrangement_count(shape) ? kOk : kMismatch;
}

// ------------------------------------------------------------------- frobenius

int cmd_frobenius(int n, std::int64_t eigenvalue, const std::string& shuffle, const std::string& format,
                  std::ostream& out) {
    if (n < 0) throw UsageError("--n must be non-negative");
    SchurExpansion s;
    if (shuffle == "r2r") {
        s = frobenius_of_eigenspace(n, eigenvalue);
    } else if (shuffle == "r2t") {
        // n-scaled eigenvalue n - j collects the inner shapes of size j.
        if (eigenvalue < 0 || eigenvalue > n) throw UsageError("r2t eigenvalues lie in 0..n");
        s = r2t_frobenius(n, n - static_cast<int>(eigenvalue));
    } else {
        throw UsageError("frobenius supports --shuffle r2r or r2t");
    }
    if (format == "json") {
        out << with_schema("r2r.frobenius/1", Json{{"n", n},
                                                   {"shuffle", shuffle},
                                                   {"eigenvalue", eigenvalue},
                                                   {"dimension", s.dimension()},
                                                   {"expansion", to_json(s)},
                                                   {"text", s.to_string()}})
                   .dump(2)
            << '\n';
    } else {
        out << s.to_string() << '\n';
    }
    return kOk;
}

// ------------------------------------------------------------------- laplacian

int cmd_laplacian(int n, int r, bool spectrum, std::ostream& out) {
    if (n < 0 || r < 0 || r > n) throw UsageError("need 0 <= r <= n");
    check_size(n, "alphabet");
    const ExactMatrix l = laplacian(n, r);
    const auto words = injective_words(n, r);
    Json body{{"n", n}, {"r", r}, {"dimension", words.size()}};
    int code = kOk;
    if (spectrum) {
        const IntegerRoots roots = integer_roots(char_poly(l));
        Json list = Json::array();
        for (auto it = roots.roots.rbegin(); it != roots.roots.rend(); ++it)
            list.push_back(Json{{"eigenvalue", it->first}, {"multiplicity", it->second}});
        body["spectrum"] = list;
        body["integral"] = roots.splits();
        if (!roots.splits()) {
            body["cofactor"] = roots.cofactor.to_string();
            code = kMismatch;
        }
    } else {
        OperatorMatrix m{words, l, 1};
        Json mj = to_json(m);
        body["order"] = mj["order"];
        body["entries"] = mj["entries"];
    }
    out << with_schema("r2r.laplacian/1", body).dump(2) << '\n';
    return code;
}

// ---------------------------------------------------------------------- verify

struct Check {
    std::string name;
    bool ok;
    std::string detail;
};

std::string totals_text(const std::map<std::int64_t, std::uint64_t>& t) {
    std::string s = "{";
    bool first = true;
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        s += (first ? "" : ", ") + std::to_string(it->first) + ":" + std::to_string(it->second);
        first = false;
    }
    return s + "}";
}

std::vector<Check> run_verification(int n) {
    std::vector<Check> checks;
    for (const auto& nu : partitions_of(n)) {
        const Evaluation e(nu.parts());
        const auto predicted = spectrum_for_evaluation(e).totals;

        const IntegerRoots roots = integer_roots(char_poly(operator_matrix(Shuffle::RandomToRandom, e).entries));
        std::map<std::int64_t, std::uint64_t> brute;
        for (const auto& [root, k] : roots.roots) brute[root] = k;
        const bool split = roots.splits();
        checks.push_back({"char-poly " + nu.to_string(), split && brute == predicted,
                          split ? "predicted " + totals_text(predicted) + " found " + totals_text(brute)
                                : "characteristic polynomial has a non-integral factor " + roots.cofactor.to_string()});

        std::map<std::int64_t, std::uint64_t> words;
        for (const auto& w : enumerate_words(e)) ++words[eig_word(w)];
        checks.push_back({"eig-word " + nu.to_string(), words == predicted,
                          "strips " + totals_text(predicted) + " words " + totals_text(words)});
    }
    for (const auto& lambda : partitions_of(n)) {
        try {
            std::size_t count = 0;
            for (const auto& entry : eigenbasis(lambda)) {
                verify_entry(entry);
                count += entry.vectors.size();
            }
            checks.push_back({"eigenbasis " + lambda.to_string(), count == count_standard_tableaux(lambda),
                              std::to_string(count) + " vectors, f = " + std::to_string(count_standard_tableaux(lambda))});
        } catch (const std::exception& ex) {
            checks.push_back({"eigenbasis " + lambda.to_string(), false, ex.what()});
        }
        const std::size_t k = kernel_basis(lambda).size();
        checks.push_back({"kernel " + lambda.to_string(), k == desarrangement_count(lambda),
                          "dimension " + std::to_string(k) + ", d = " + std::to_string(desarrangement_count(lambda))});
    }
    const auto totals = spectrum_for_evaluation(Evaluation(std::vector<int>(static_cast<std::size_t>(n), 1))).totals;
    bool frob = true;
    for (const auto& [eig, mult] : totals) frob = frob && frobenius_of_eigenspace(n, eig).dimension() == mult;
    checks.push_back({"frobenius dimensions", frob, totals_text(totals)});
    return checks;
}

int cmd_verify(int n, const std::string& format, std::ostream& out) {
    if (n < 1) throw UsageError("--n must be positive");
    check_size(n, "verification");
    const auto checks = run_verification(n);
    const bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
    if (format == "json") {
        Json list = Json::array();
        for (const auto& c : checks) list.push_back(Json{{"check", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        out << with_schema("r2r.verify/1", Json{{"n", n}, {"ok", ok}, {"checks", list}}).dump(2) << '\n';
    } else {
        for (const auto& c : checks) out << (c.ok ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        out << (ok ? "all checks passed" : "verification FAILED") << '\n';
    }
    return ok ? kOk : kMismatch;
}

}  // namespace

int max_brute_force_size() {
    const char* v = std::getenv("R2R_MAX_N");
    if (!v || !*v) return 6;
    try {
        return std::stoi(v);
    } catch (const std::exception&) {
        return 6;
    }
}

std::string spectrum_table(const SpectrumReport& report, bool probability) {
    const int n = report.partition.size();
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"λ/μ", "d^μ", "K", "multiplicity", "C(|λ|+1,2)", "C(|μ|+1,2)", "diag(λ/μ)",
                    probability ? "eig/n²" : "eig(λ/μ)"});
    for (const auto& e : report.entries) {
        if (e.multiplicity() == 0) continue;
        rows.push_back({e.strip.to_string(), std::to_string(e.desarrangements), std::to_string(e.kostka),
                        std::to_string(e.multiplicity()), std::to_string(e.outer_term()), std::to_string(e.inner_term()),
                        std::to_string(diag(e.strip)), eigen_text(e.eig, n, probability)});
    }
    std::ostringstream out;
    out << "evaluation " << parts_text(report.evaluation) << ", dimension " << report.dimension() << '\n' << render(rows);
    return out.str();
}

std::string spectrum_csv(const std::vector<SpectrumReport>& reports, bool probability) {
    auto quoted = [](const Partition& p) {
        std::string s;
        for (int i = 0; i < p.length(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
        return "\"" + s + "\"";
    };
    std::ostringstream out;
    out << "evaluation,lambda,mu,d_mu,kostka,multiplicity,binom_lambda,binom_mu,diag,eig";
    if (probability) out << ",probability";
    out << '\n';
    for (const auto& r : reports) {
        std::string eval;
        for (std::size_t i = 0; i < r.evaluation.size(); ++i) eval += (i ? "," : "") + std::to_string(r.evaluation[i]);
        for (const auto& e : r.entries) {
            if (e.multiplicity() == 0) continue;
            out << '"' << eval << "\"," << quoted(e.strip.outer()) << ',' << quoted(e.strip.inner()) << ','
                << e.desarrangements << ',' << e.kostka << ',' << e.multiplicity() << ',' << e.outer_term() << ','
                << e.inner_term() << ',' << diag(e.strip) << ',' << e.eig;
            if (probability) out << ',' << eigen_text(e.eig, r.partition.size(), true);
            out << '\n';
        }
    }
    return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact spectra and eigenvectors of the random-to-random shuffle", "r2r"};
    app.require_subcommand(1);

    EigenvaluesArgs ev;
    auto* eigenvalues = app.add_subcommand("eigenvalues", "Eigenvalue table for an evaluation, or every evaluation of size n");
    eigenvalues->add_option("--n", ev.n, "Deck size");
    eigenvalues->add_option("--evaluation", ev.evaluation, "Letter multiplicities, e.g. 2,2");
    eigenvalues->add_option("--format", ev.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
    eigenvalues->add_flag("--probability", ev.probability, "Print eigenvalues as probabilities eig/n^2");

    std::string word_text, word_format = "text";
    auto* eig_word_cmd = app.add_subcommand("eig-word", "Eigenvalue attached to a single word");
    eig_word_cmd->add_option("word", word_text, "Word, e.g. 234133134 or aab")->required();
    eig_word_cmd->add_option("--format", word_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::string shuffle, tm_eval, tm_format = "json";
    auto* tm = app.add_subcommand("transition-matrix", "Unnormalized operator matrix with its scale");
    tm->add_option("--shuffle", shuffle, "r2r, r2t or t2r")->required();
    tm->add_option("--evaluation", tm_eval, "Letter multiplicities")->required();
    tm->add_option("--format", tm_format, "json or table")->check(CLI::IsMember({"json", "table"}));

    std::optional<std::string> eb_partition, eb_eval;
    bool eb_verify = false;
    auto* eb = app.add_subcommand("eigenbasis", "Explicit eigenbasis of a Specht module or word space");
    eb->add_option("--partition", eb_partition, "Shape, e.g. 3,2");
    eb->add_option("--evaluation", eb_eval, "Embed into the word space of this evaluation");
    eb->add_flag("--verify", eb_verify, "Re-check every eigen-equation before printing");

    std::string k_partition;
    auto* kern = app.add_subcommand("kernel", "Kernel of random-to-random on a Specht module");
    kern->add_option("--partition", k_partition, "Shape")->required();

    int fr_n = 0;
    std::int64_t fr_eig = 0;
    std::string fr_shuffle = "r2r", fr_format = "text";
    auto* fr = app.add_subcommand("frobenius", "Schur expansion of an eigenspace on permutations");
    fr->add_option("--n", fr_n, "Deck size")->required();
    fr->add_option("--eigenvalue", fr_eig, "Scaled eigenvalue (n^2 for r2r, n for r2t)")->required();
    fr->add_option("--shuffle", fr_shuffle, "r2r or r2t")->check(CLI::IsMember({"r2r", "r2t"}));
    fr->add_option("--format", fr_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    int lap_n = 0, lap_r = 0;
    bool lap_spectrum = false;
    auto* lap = app.add_subcommand("laplacian", "Laplacian of the complex of injective words");
    lap->add_option("--n", lap_n, "Alphabet size")->required();
    lap->add_option("--r", lap_r, "Word length")->required();
    lap->add_flag("--spectrum", lap_spectrum, "Print the integer spectrum instead of the matrix");

    int ver_n = 0;
    std::string ver_format = "text";
    auto* ver = app.add_subcommand("verify", "Run every oracle check at size n");
    ver->add_option("--n", ver_n, "Deck size")->required();
    ver->add_option("--format", ver_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        const auto subs = app.get_subcommands();
        err << (subs.empty() ? app.help() : subs.front()->help());
        return kUsage;
    }

    try {
        if (eigenvalues->parsed()) return cmd_eigenvalues(ev, out);
        if (eig_word_cmd->parsed()) return cmd_eig_word(word_text, word_format, out);
        if (tm->parsed()) return cmd_transition_matrix(shuffle, tm_eval, tm_format, out);
        if (eb->parsed()) return cmd_eigenbasis(eb_partition, eb_eval, eb_verify, out);
        if (kern->parsed()) return cmd_kernel(k_partition, out);
        if (fr->parsed()) return cmd_frobenius(fr_n, fr_eig, fr_shuffle, fr_format, out);
        if (lap->parsed()) return cmd_laplacian(lap_n, lap_r, lap_spectrum, out);
        if (ver->parsed()) return cmd_verify(ver_n, ver_format, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Mismatch& e) {
        err << "mismatch: " << e.what() << '\n';
        return kMismatch;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::logic_error& e) {
        err << "mismatch: " << e.what() << '\n';
        return kMismatch;
    }
    return kUsage;
}

}  // namespace r2r::cli
