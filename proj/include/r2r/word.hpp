#pragma once

#include "r2r/scalar.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace r2r {

using Letter = int;

class Word {
public:
    Word() = default;
    Word(std::initializer_list<Letter> letters);
    explicit Word(std::vector<Letter> letters);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    Letter max_letter() const;
    int multiplicity(Letter a) const;
    // Multiplicities of 1..max_letter().
    std::vector<int> evaluation() const;

    Word suffix(std::size_t start) const;
    Word erase(std::size_t pos) const;
    Word insert(std::size_t pos, Letter a) const;
    Word replace(std::size_t pos, Letter a) const;
    Word append(Letter a) const;

    auto operator<=>(const Word&) const = default;

private:
    std::vector<Letter> letters_;
};

// Letter multiplicities (nu_1, nu_2, ...); trailing zeros are allowed.
class Evaluation {
public:
    Evaluation() = default;
    Evaluation(std::initializer_list<int> multiplicities);
    explicit Evaluation(std::vector<int> multiplicities);

    const std::vector<int>& multiplicities() const { return mult_; }
    int total() const;
    // Multiplicities sorted into weakly decreasing order with zeros removed.
    std::vector<int> sorted_parts() const;

    bool operator==(const Evaluation& other) const;

private:
    std::vector<int> mult_;
};

// Digit string when every letter is at most 9, otherwise "[1,12,3]".
std::string to_string(const Word& w);
// Accepts the digit form, the bracketed form, and (optionally) a,b,c,... as 1,2,3,...
Word parse_word(std::string_view text, bool letter_aliases = true);

// Sparse exact linear combination of words. Zero coefficients are never stored.
class WordVector {
public:
    using Terms = std::map<Word, BigRational>;

    WordVector() = default;
    WordVector(const Word& w, const BigRational& c = BigRational(1));

    void add(const Word& w, const BigRational& c);
    BigRational coefficient(const Word& w) const;

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    // Common word length; -1 for the zero vector. Throws on mixed lengths.
    int word_length() const;

    WordVector& operator+=(const WordVector& o);
    WordVector& operator-=(const WordVector& o);
    WordVector& operator*=(const BigRational& c);
    friend WordVector operator+(WordVector a, const WordVector& b) { return a += b; }
    friend WordVector operator-(WordVector a, const WordVector& b) { return a -= b; }
    friend WordVector operator*(const BigRational& c, WordVector v) { return v *= c; }
    friend WordVector operator*(WordVector v, const BigRational& c) { return v *= c; }
    friend WordVector operator-(WordVector v) { return v *= BigRational(-1); }
    friend bool operator==(const WordVector& a, const WordVector& b) = default;

private:
    Terms terms_;
};

// Standard inner product in which words are orthonormal.
BigRational dot(const WordVector& a, const WordVector& b);

// Human-readable form such as "2*1122 - 1/2*1212".
std::string to_string(const WordVector& v);

}  // namespace r2r
