#include "r2r/word.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace r2r {

Word::Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    for (Letter a : letters_)
        if (a < 1) throw std::invalid_argument("letters must be positive");
}

Letter Word::max_letter() const {
    return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

int Word::multiplicity(Letter a) const {
    return static_cast<int>(std::count(letters_.begin(), letters_.end(), a));
}

std::vector<int> Word::evaluation() const {
    std::vector<int> e(static_cast<std::size_t>(max_letter()), 0);
    for (Letter a : letters_) ++e[a - 1];
    return e;
}

Word Word::suffix(std::size_t start) const {
    Word w;
    w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(start), letters_.end());
    return w;
}

Word Word::erase(std::size_t pos) const {
    Word w = *this;
    w.letters_.erase(w.letters_.begin() + static_cast<std::ptrdiff_t>(pos));
    return w;
}

Word Word::insert(std::size_t pos, Letter a) const {
    Word w = *this;
    w.letters_.insert(w.letters_.begin() + static_cast<std::ptrdiff_t>(pos), a);
    return w;
}

Word Word::replace(std::size_t pos, Letter a) const {
    Word w = *this;
    w.letters_[pos] = a;
    return w;
}

Word Word::append(Letter a) const {
    Word w = *this;
    w.letters_.push_back(a);
    return w;
}

Evaluation::Evaluation(std::initializer_list<int> multiplicities) : Evaluation(std::vector<int>(multiplicities)) {}

Evaluation::Evaluation(std::vector<int> multiplicities) : mult_(std::move(multiplicities)) {
    for (int m : mult_)
        if (m < 0) throw std::invalid_argument("evaluation entries must be non-negative");
}

int Evaluation::total() const {
    return std::accumulate(mult_.begin(), mult_.end(), 0);
}

std::vector<int> Evaluation::sorted_parts() const {
    std::vector<int> p;
    for (int m : mult_)
        if (m > 0) p.push_back(m);
    std::sort(p.begin(), p.end(), std::greater<>());
    return p;
}

bool Evaluation::operator==(const Evaluation& other) const {
    auto trimmed = [](std::vector<int> v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    };
    return trimmed(mult_) == trimmed(other.mult_);
}

std::string to_string(const Word& w) {
    bool digits = std::all_of(w.begin(), w.end(), [](Letter a) { return a <= 9; });
    std::string s;
    if (digits) {
        for (Letter a : w) s += static_cast<char>('0' + a);
        return s;
    }
    s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + "]";
}

Word parse_word(std::string_view text, bool letter_aliases) {
    auto bad = [&] { return std::invalid_argument("malformed word: '" + std::string(text) + "'"); };
    std::vector<Letter> v;
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') throw bad();
        std::string_view body = text.substr(1, text.size() - 2);
        if (body.empty()) return Word();
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = body.find(',', pos);
            std::string_view tok = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
            if (tok.empty() || tok.size() > 9 || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
                throw bad();
            int x = std::stoi(std::string(tok));
            if (x < 1) throw bad();
            v.push_back(x);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return Word(std::move(v));
    }
    const bool digits = !text.empty() && text.front() >= '1' && text.front() <= '9';
    for (char c : text) {
        if (digits && c >= '1' && c <= '9')
            v.push_back(c - '0');
        else if (!digits && letter_aliases && c >= 'a' && c <= 'z')
            v.push_back(c - 'a' + 1);
        else
            throw bad();
    }
    return Word(std::move(v));
}

WordVector::WordVector(const Word& w, const BigRational& c) {
    add(w, c);
}

void WordVector::add(const Word& w, const BigRational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigRational WordVector::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? BigRational(0) : it->second;
}

int WordVector::word_length() const {
    if (terms_.empty()) return -1;
    const std::size_t n = terms_.begin()->first.size();
    for (const auto& [w, c] : terms_)
        if (w.size() != n) throw std::invalid_argument("word vector mixes word lengths");
    return static_cast<int>(n);
}

WordVector& WordVector::operator+=(const WordVector& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

WordVector& WordVector::operator-=(const WordVector& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

WordVector& WordVector::operator*=(const BigRational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, x] : terms_) x *= c;
    return *this;
}

BigRational dot(const WordVector& a, const WordVector& b) {
    const WordVector& small = a.size() <= b.size() ? a : b;
    const WordVector& large = a.size() <= b.size() ? b : a;
    BigRational s = 0;
    for (const auto& [w, c] : small) {
        auto it = large.terms().find(w);
        if (it != large.terms().end()) s += c * it->second;
    }
    return s;
}

std::string to_string(const WordVector& v) {
    if (v.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : v) {
        BigRational mag = c < 0 ? BigRational(-c) : c;
        if (first)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        if (mag != 1) s += to_string(mag) + "*";
        s += w.empty() ? "()" : to_string(w);
        first = false;
    }
    return s;
}

}  // namespace r2r
