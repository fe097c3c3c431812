#include "r2r/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace r2r {

// ---------------------------------------------------------------- Partition

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive: " + to_string());
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must weakly decrease: " + to_string());
    }
}

Partition Partition::from_composition(std::vector<int> parts) {
    for (int p : parts)
        if (p < 0) throw std::invalid_argument("negative part");
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    if (text.empty()) return {};
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (tok.empty() || tok.size() > 6 || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw std::invalid_argument("malformed partition token '" + std::string(tok) + "' in '" + std::string(text) + "'");
        parts.push_back(std::stoi(std::string(tok)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::can_add_cell(int row) const {
    if (row < 1 || row > length() + 1) return false;
    return row == 1 || (*this)[row - 2] > (*this)[row - 1];
}

Partition Partition::add_cell(int row) const {
    if (!can_add_cell(row))
        throw std::invalid_argument("adding a cell in row " + std::to_string(row) + " of " + to_string() + " is not a partition");
    std::vector<int> p = parts_;
    if (row == length() + 1)
        p.push_back(1);
    else
        ++p[row - 1];
    return Partition(std::move(p));
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner[i] > (*this)[i]) return false;
    return true;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    for (int j = 1; j <= (*this)[0]; ++j) {
        int h = 0;
        while (h < length() && parts_[h] >= j) ++h;
        c.push_back(h);
    }
    return Partition(std::move(c));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "∅";
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + ")";
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

// ---------------------------------------------------------------- SkewShape

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
        throw std::invalid_argument(inner_.to_string() + " is not contained in " + outer_.to_string());
}

std::vector<Cell> SkewShape::cells() const {
    std::vector<Cell> c;
    for (int i = 0; i < outer_.length(); ++i)
        for (int j = inner_[i]; j < outer_[i]; ++j) c.emplace_back(i + 1, j + 1);
    return c;
}

std::string SkewShape::to_string() const {
    return outer_.to_string() + "/" + inner_.to_string();
}

std::int64_t diag(const SkewShape& shape) {
    std::int64_t s = 0;
    for (auto [i, j] : shape.cells()) s += j - i;
    return s;
}

std::int64_t diag(const Partition& shape) {
    return diag(SkewShape(shape, Partition()));
}

std::int64_t triangular(std::int64_t k) {
    return k * (k + 1) / 2;
}

bool is_horizontal_strip(const SkewShape& shape) {
    const Partition& lam = shape.outer();
    const Partition& mu = shape.inner();
    for (int i = 1; i < lam.length(); ++i)
        if (lam[i] > mu[i - 1]) return false;
    return true;
}

std::vector<Partition> horizontal_strip_inners(const Partition& outer) {
    std::vector<Partition> out;
    std::vector<int> cur(static_cast<std::size_t>(outer.length()));
    std::function<void(int)> rec = [&](int i) {
        if (i == outer.length()) {
            std::vector<int> p(cur.begin(), cur.end());
            while (!p.empty() && p.back() == 0) p.pop_back();
            out.emplace_back(std::move(p));
            return;
        }
        for (int m = outer[i + 1]; m <= outer[i]; ++m) {
            cur[i] = m;
            rec(i + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dominance needs partitions of equal size");
    int sa = 0, sb = 0;
    for (int i = 0; i < std::max(a.length(), b.length()); ++i) {
        sa += a[i];
        sb += b[i];
        if (sa < sb) return false;
    }
    return true;
}

// ---------------------------------------------------------------- Tableaux

namespace {

std::vector<std::vector<int>> to_rows(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<int>> out;
    for (const auto& r : rows) out.emplace_back(r);
    return out;
}

}  // namespace

Tableau::Tableau(std::initializer_list<std::initializer_list<int>> rows) : Tableau(to_rows(rows)) {}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].empty()) throw std::invalid_argument("tableau rows must be nonempty");
        if (i > 0 && rows_[i].size() > rows_[i - 1].size()) throw std::invalid_argument("tableau row lengths must weakly decrease");
        for (int x : rows_[i])
            if (x < 1) throw std::invalid_argument("tableau entries must be positive");
    }
}

Partition Tableau::shape() const {
    std::vector<int> p;
    for (const auto& r : rows_) p.push_back(static_cast<int>(r.size()));
    return Partition(std::move(p));
}

int Tableau::size() const {
    int s = 0;
    for (const auto& r : rows_) s += static_cast<int>(r.size());
    return s;
}

std::vector<int> Tableau::column(int c) const {
    std::vector<int> col;
    for (const auto& r : rows_) {
        if (static_cast<int>(r.size()) < c) break;
        col.push_back(r[c - 1]);
    }
    return col;
}

Cell Tableau::find(int entry) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < rows_[i].size(); ++j)
            if (rows_[i][j] == entry) return {static_cast<int>(i) + 1, static_cast<int>(j) + 1};
    return {0, 0};
}

bool Tableau::is_semistandard() const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j > 0 && rows_[i][j] < rows_[i][j - 1]) return false;
            if (i > 0 && rows_[i][j] <= rows_[i - 1][j]) return false;
        }
    return true;
}

bool Tableau::is_standard() const {
    if (!is_semistandard()) return false;
    std::vector<int> all;
    for (const auto& r : rows_) {
        for (std::size_t j = 1; j < r.size(); ++j)
            if (r[j] == r[j - 1]) return false;
        all.insert(all.end(), r.begin(), r.end());
    }
    std::sort(all.begin(), all.end());
    for (std::size_t k = 0; k < all.size(); ++k)
        if (all[k] != static_cast<int>(k) + 1) return false;
    return true;
}

std::vector<int> Tableau::content() const {
    std::vector<int> c;
    for (const auto& r : rows_)
        for (int x : r) {
            if (x > static_cast<int>(c.size())) c.resize(x, 0);
            ++c[x - 1];
        }
    return c;
}

std::string Tableau::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) s += " / ";
        for (std::size_t j = 0; j < rows_[i].size(); ++j) s += (j ? " " : "") + std::to_string(rows_[i][j]);
    }
    return s + "]";
}

StandardTableau::StandardTableau(std::initializer_list<std::initializer_list<int>> rows) : Tableau(rows) {
    if (!is_standard()) throw std::invalid_argument("not a standard tableau: " + to_string());
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : Tableau(std::move(rows)) {
    if (!is_standard()) throw std::invalid_argument("not a standard tableau: " + to_string());
}

SemistandardTableau::SemistandardTableau(std::initializer_list<std::initializer_list<int>> rows) : Tableau(rows) {
    if (!is_semistandard()) throw std::invalid_argument("not a semistandard tableau: " + to_string());
}

SemistandardTableau::SemistandardTableau(std::vector<std::vector<int>> rows) : Tableau(std::move(rows)) {
    if (!is_semistandard()) throw std::invalid_argument("not a semistandard tableau: " + to_string());
}

std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
    const int n = shape.size();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
    std::vector<StandardTableau> out;
    std::function<void(int)> rec = [&](int k) {
        if (k > n) {
            out.emplace_back(rows);
            return;
        }
        for (int i = 0; i < shape.length(); ++i) {
            const int len = static_cast<int>(rows[i].size());
            if (len == shape[i]) continue;
            if (i > 0 && static_cast<int>(rows[i - 1].size()) <= len) continue;
            rows[i].push_back(k);
            rec(k + 1);
            rows[i].pop_back();
        }
    };
    rec(1);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t count_standard_tableaux(const Partition& shape) {
    const int n = shape.size();
    const Partition conj = shape.conjugate();
    std::vector<int> hooks;
    for (int i = 0; i < shape.length(); ++i)
        for (int j = 0; j < shape[i]; ++j) hooks.push_back((shape[i] - j - 1) + (conj[j] - i - 1) + 1);
    // n! / prod(hooks) computed without overflow by cancelling against 1..n.
    std::vector<std::uint64_t> num(static_cast<std::size_t>(n));
    std::iota(num.begin(), num.end(), 1);
    for (int h : hooks) {
        std::uint64_t rest = static_cast<std::uint64_t>(h);
        for (auto& x : num) {
            std::uint64_t g = std::gcd(x, rest);
            x /= g;
            rest /= g;
            if (rest == 1) break;
        }
        if (rest != 1) throw std::logic_error("hook length cancellation failed");
    }
    std::uint64_t f = 1;
    for (auto x : num) f *= x;
    return f;
}

namespace {

// Calls visit(nu) for every nu with cur subset nu subset bound, nu/cur a horizontal strip of size k.
template <typename Visit>
void for_each_strip_extension(const std::vector<int>& cur, const Partition& bound, int k, Visit&& visit) {
    const int len = bound.length();
    std::vector<int> nu(static_cast<std::size_t>(len), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == len) {
            if (left == 0) visit(nu);
            return;
        }
        const int base = cur[i];
        const int top = std::min(bound[i], i == 0 ? bound[0] : cur[i - 1]);
        for (int v = base; v <= top && v - base <= left; ++v) {
            nu[i] = v;
            rec(i + 1, left - (v - base));
        }
    };
    rec(0, k);
}

}  // namespace

std::vector<SemistandardTableau> semistandard_tableaux(const Partition& shape, const std::vector<int>& content) {
    int total = 0;
    for (int c : content) {
        if (c < 0) throw std::invalid_argument("negative content");
        total += c;
    }
    if (total != shape.size()) throw std::invalid_argument("content size differs from shape size");
    std::vector<SemistandardTableau> out;
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
    std::function<void(std::size_t, const std::vector<int>&)> rec = [&](std::size_t letter, const std::vector<int>& cur) {
        if (letter == content.size()) {
            out.emplace_back(rows);
            return;
        }
        for_each_strip_extension(cur, shape, content[letter], [&](const std::vector<int>& nu) {
            for (int i = 0; i < shape.length(); ++i)
                for (int j = cur[i]; j < nu[i]; ++j) rows[i].push_back(static_cast<int>(letter) + 1);
            rec(letter + 1, nu);
            for (int i = 0; i < shape.length(); ++i) rows[i].resize(static_cast<std::size_t>(cur[i]));
        });
    };
    rec(0, std::vector<int>(static_cast<std::size_t>(shape.length()), 0));
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t kostka(const Partition& shape, const Partition& eval) {
    if (shape.size() != eval.size()) throw std::invalid_argument("kostka needs partitions of equal size");
    std::uint64_t count = 0;
    std::function<void(int, const std::vector<int>&)> rec = [&](int letter, const std::vector<int>& cur) {
        if (letter == eval.length()) {
            ++count;
            return;
        }
        for_each_strip_extension(cur, shape, eval[letter], [&](const std::vector<int>& nu) { rec(letter + 1, nu); });
    };
    rec(0, std::vector<int>(static_cast<std::size_t>(shape.length()), 0));
    return count;
}

int smallest_ascent(const StandardTableau& t) {
    const int n = t.size();
    for (int i = 1; i < n; ++i) {
        auto [ri, ci] = t.find(i);
        auto [rj, cj] = t.find(i + 1);
        if (rj <= ri && cj >= ci) return i;
    }
    return n;
}

bool is_desarrangement(const StandardTableau& t) {
    return smallest_ascent(t) % 2 == 0;
}

std::uint64_t desarrangement_count(const Partition& shape) {
    std::uint64_t c = 0;
    for (const auto& t : standard_tableaux(shape))
        if (is_desarrangement(t)) ++c;
    return c;
}

RskPair rsk(const Word& w) {
    std::vector<std::vector<int>> p, q;
    for (std::size_t k = 0; k < w.size(); ++k) {
        int x = w[k];
        std::size_t r = 0;
        while (true) {
            if (r == p.size()) {
                p.push_back({x});
                q.push_back({static_cast<int>(k) + 1});
                break;
            }
            auto it = std::upper_bound(p[r].begin(), p[r].end(), x);
            if (it == p[r].end()) {
                p[r].push_back(x);
                q[r].push_back(static_cast<int>(k) + 1);
                break;
            }
            std::swap(*it, x);
            ++r;
        }
    }
    return {SemistandardTableau(std::move(p)), StandardTableau(std::move(q))};
}

int first_ascent(const Word& w) {
    if (w.empty()) throw std::invalid_argument("first_ascent of the empty word");
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] <= w[i + 1]) return static_cast<int>(i) + 1;
    return static_cast<int>(w.size());
}

Word even_ascent_suffix(const Word& w) {
    for (std::size_t start = 0; start < w.size(); ++start) {
        Word s = w.suffix(start);
        if (first_ascent(s) % 2 == 0) return s;
    }
    return Word();
}

}  // namespace r2r
