#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qk {

// 1-based (row, col) cell.
struct Cell {
    int i = 0;
    int j = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Permutation in one-line notation: p(i) = img[i-1].
// Matrix view places a 1 at (i, p(i)).
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> one_line);

    static Perm identity(int m);
    static Perm longest(int m);
    static Perm simple(int i, int m);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }
    const std::vector<int>& one_line() const { return img_; }

    Perm inverse() const;
    // (p * q)(i) = p(q(i))
    Perm operator*(const Perm& q) const;
    Perm times_s(int i) const;  // p * s_i, swaps positions i, i+1
    Perm resized(int m) const;  // pad with fixed points or drop trailing fixed points
    Perm trimmed() const;       // drop trailing fixed points

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }
    std::string str() const;

private:
    std::vector<int> img_;
};

// Equality after padding with fixed points.
bool same_up_to_fixed_points(const Perm& a, const Perm& b);

// k x l 0/1 matrix with at most one 1 per row and column.
class PartialPerm {
public:
    PartialPerm() = default;
    PartialPerm(int rows, int cols);
    PartialPerm(int rows, int cols, const std::vector<Cell>& ones);

    static PartialPerm from_perm(const Perm& p);
    static PartialPerm identity(int rows, int cols);
    // NW rows x cols corner of p.
    static PartialPerm nw_corner(const Perm& p, int rows, int cols);
    static PartialPerm se_corner(const Perm& p, int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int rank() const;
    int col_of(int i) const { return r2c_[i - 1]; }  // 0 if row i is empty
    int row_of(int j) const { return c2r_[j - 1]; }
    bool at(int i, int j) const { return r2c_[i - 1] == j; }
    void set(int i, int j);
    void clear(int i, int j);
    std::vector<Cell> ones() const;

    PartialPerm rotated() const;     // 180 degree rotation
    PartialPerm transposed() const;
    bool is_identity() const;        // ones exactly on the main diagonal, full rank

    bool operator==(const PartialPerm& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && r2c_ == o.r2c_;
    }
    bool operator<(const PartialPerm& o) const {
        if (rows_ != o.rows_) return rows_ < o.rows_;
        if (cols_ != o.cols_) return cols_ < o.cols_;
        return r2c_ < o.r2c_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> r2c_;
    std::vector<int> c2r_;
};

using HeckeWord = std::vector<int>;

int length(const Perm& p);

// 0-Hecke evaluation: s_i acts only when it raises length.
// ambient <= 0 means max letter + 1.
Perm demazure_product(const HeckeWord& word, int ambient = 0);

std::vector<Cell> rothe_diagram(const PartialPerm& p);
std::vector<Cell> rothe_diagram(const Perm& p);
std::vector<Cell> essential_set(const PartialPerm& p);
std::vector<Cell> essential_set(const Perm& p);

Perm complete(const PartialPerm& p);
Perm opposite_complete(const PartialPerm& p);

// rank of the NW p x q corner, for all p,q in 0..m
std::vector<std::vector<int>> rank_table(const Perm& p);
bool bruhat_leq(const Perm& u, const Perm& v);

// lexicographically first reduced word: repeatedly strip the smallest descent
HeckeWord reduced_word(const Perm& p);
std::vector<int> descents(const Perm& p);

// unique v with v = w0 * p * w0 style conjugation by the longest element
Perm conj_longest(const Perm& p);

}  // namespace qk
