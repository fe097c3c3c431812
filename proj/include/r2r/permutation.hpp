#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace r2r {

// Permutation of {1..n} in one-line notation.
class Permutation {
public:
    Permutation() = default;
    Permutation(std::initializer_list<int> images);
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    // The cycle c[0] -> c[1] -> ... -> c[k-1] -> c[0] in S_n.
    static Permutation cycle(int n, const std::vector<int>& c);
    // Parses one-line notation such as "71842563" (degree <= 9) or "[10,2,...]".
    static Permutation parse(const std::string& text);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    int sign() const;

    // (s * t)(i) = s(t(i)), so that w.(s t) = (w.s).t for the position action.
    friend Permutation operator*(const Permutation& s, const Permutation& t);
    auto operator<=>(const Permutation&) const = default;

    std::string to_string() const;

private:
    std::vector<int> images_;
};

// All permutations of {1..n} in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

}  // namespace r2r
