#pragma once

#include "r2r/word.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace r2r {

class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    // Sorts a composition and drops zeros.
    static Partition from_composition(std::vector<int> parts);
    // "3,2,1"; the empty string is the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // 0-based row access; rows beyond the length have part 0.
    int operator[](int i) const { return i >= 0 && i < length() ? parts_[i] : 0; }

    // Adds a cell at the end of 1-based row i; throws if the result is not a partition.
    Partition add_cell(int row) const;
    bool can_add_cell(int row) const;
    bool contains(const Partition& inner) const;
    Partition conjugate() const;

    auto operator<=>(const Partition&) const = default;

    // "(3,2,1)", and "∅" for the empty partition.
    std::string to_string() const;

private:
    std::vector<int> parts_;
};

// All partitions of n in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);

// Cell (row, column), both 1-based.
using Cell = std::pair<int, int>;

class SkewShape {
public:
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int size() const { return outer_.size() - inner_.size(); }
    std::vector<Cell> cells() const;

    auto operator<=>(const SkewShape&) const = default;
    std::string to_string() const;

private:
    Partition outer_, inner_;
};

std::int64_t diag(const Partition& shape);
std::int64_t diag(const SkewShape& shape);
// C(k+1, 2)
std::int64_t triangular(std::int64_t k);

bool is_horizontal_strip(const SkewShape& shape);

// Every mu with outer/mu a horizontal strip, ordered by size and then lexicographically.
std::vector<Partition> horizontal_strip_inners(const Partition& outer);

// Throws std::invalid_argument when sizes differ.
bool dominates(const Partition& a, const Partition& b);

// A filling of a partition diagram by positive integers (no order conditions).
class Tableau {
public:
    Tableau() = default;
    Tableau(std::initializer_list<std::initializer_list<int>> rows);
    explicit Tableau(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Partition shape() const;
    int size() const;
    // 1-based coordinates.
    int at(int row, int col) const { return rows_[row - 1][col - 1]; }
    // Column c (1-based), top to bottom.
    std::vector<int> column(int c) const;
    // Row and column (1-based) of an entry; (0,0) if absent.
    Cell find(int entry) const;

    bool is_standard() const;
    bool is_semistandard() const;
    // Multiplicities of 1..max entry.
    std::vector<int> content() const;

    auto operator<=>(const Tableau&) const = default;
    std::string to_string() const;

protected:
    std::vector<std::vector<int>> rows_;
};

class StandardTableau : public Tableau {
public:
    StandardTableau() = default;
    StandardTableau(std::initializer_list<std::initializer_list<int>> rows);
    explicit StandardTableau(std::vector<std::vector<int>> rows);
};

class SemistandardTableau : public Tableau {
public:
    SemistandardTableau() = default;
    SemistandardTableau(std::initializer_list<std::initializer_list<int>> rows);
    explicit SemistandardTableau(std::vector<std::vector<int>> rows);
};

// Ordered lexicographically by the rows read top to bottom.
std::vector<StandardTableau> standard_tableaux(const Partition& shape);
// Hook length formula.
std::uint64_t count_standard_tableaux(const Partition& shape);

// Semistandard tableaux of the given shape and content (a composition),
// ordered lexicographically by rows.
std::vector<SemistandardTableau> semistandard_tableaux(const Partition& shape, const std::vector<int>& content);
std::uint64_t kostka(const Partition& shape, const Partition& eval);

// Smallest i such that i = n or i+1 lies weakly north-east of i; 0 for the empty tableau.
int smallest_ascent(const StandardTableau& t);
bool is_desarrangement(const StandardTableau& t);
std::uint64_t desarrangement_count(const Partition& shape);

struct RskPair {
    SemistandardTableau insertion;
    StandardTableau recording;
};
RskPair rsk(const Word& w);

// Smallest i with i = n or w_i <= w_{i+1} (1-based). Throws on the empty word.
int first_ascent(const Word& w);
Word even_ascent_suffix(const Word& w);

}  // namespace r2r
