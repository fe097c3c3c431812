#include "r2r/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace r2r {

Permutation::Permutation(std::initializer_list<int> images) : Permutation(std::vector<int>(images)) {}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int x : images_) {
        if (x < 1 || x > degree() || seen[x]) throw std::invalid_argument("not a permutation: " + to_string());
        seen[x] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::cycle(int n, const std::vector<int>& c) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] < 1 || c[k] > n) throw std::invalid_argument("cycle entry out of range");
        v[c[k] - 1] = c[(k + 1) % c.size()];
    }
    return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> v;
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') throw std::invalid_argument("bad permutation: " + text);
        std::string body = text.substr(1, text.size() - 2);
        std::size_t pos = 0;
        while (pos <= body.size() && !body.empty()) {
            std::size_t comma = body.find(',', pos);
            std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit))
                throw std::invalid_argument("bad permutation: " + text);
            v.push_back(std::stoi(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw std::invalid_argument("bad permutation: " + text);
            v.push_back(c - '0');
        }
    }
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> v(images_.size());
    for (int i = 1; i <= degree(); ++i) v[images_[i - 1] - 1] = i;
    return Permutation(std::move(v));
}

int Permutation::sign() const {
    std::vector<bool> seen(images_.size(), false);
    int s = 1;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = images_[j] - 1) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

Permutation operator*(const Permutation& s, const Permutation& t) {
    if (s.degree() != t.degree()) throw std::invalid_argument("permutation degrees differ");
    std::vector<int> v(t.images_.size());
    for (int i = 1; i <= t.degree(); ++i) v[i - 1] = s(t(i));
    return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
    bool digits = std::all_of(images_.begin(), images_.end(), [](int x) { return x >= 1 && x <= 9; });
    std::string s;
    if (digits) {
        for (int x : images_) s += static_cast<char>('0' + x);
        return s;
    }
    s = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) s += (i ? "," : "") + std::to_string(images_[i]);
    return s + "]";
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace r2r
