#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quiverk/perm.hpp"
#include "quiverk/quiver.hpp"

namespace qk {

struct ShapeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct EmptyInterval : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InconsistentMultiplicities : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct TooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense integer matrix, 1-based access.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
    static Matrix from_rows(const std::vector<std::vector<long long>>& rs, int cols = -1);
    static Matrix identity(int n);
    static Matrix of(const PartialPerm& p);

    long long& operator()(int i, int j) { return a[static_cast<std::size_t>(i - 1) * cols + (j - 1)]; }
    long long operator()(int i, int j) const { return a[static_cast<std::size_t>(i - 1) * cols + (j - 1)]; }
    // NW corner of the given size
    Matrix corner(int r, int c) const;
    void paste(const Matrix& m, int row_off, int col_off);
    std::vector<std::vector<long long>> to_rows() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

// Exact rank by fraction-free elimination.
int exact_rank(const Matrix& m);

// One matrix per arrow, shape d(tail) x d(head).
struct Representation {
    QuiverSpec quiver;
    std::vector<Matrix> maps;

    Representation() = default;
    Representation(QuiverSpec q, std::vector<Matrix> m);  // throws ShapeMismatch
    static Representation zero(const QuiverSpec& q);
};

// Arrow interval [first, last] (inclusive, left-to-right arrow indices).
using ArrowInterval = std::pair<int, int>;
using RankArray = std::map<ArrowInterval, int>;

// Block matrix with source blocks as rows (right to left) and sink blocks as columns (left to right).
Matrix interval_matrix(const Representation& v, ArrowInterval j);
RankArray rank_array(const Representation& v);

// Lace counts keyed by (left vertex, right vertex).
struct OrbitSpec {
    std::map<std::pair<int, int>, int> mult;

    int count(int l, int r) const;
    // throws InconsistentMultiplicities unless the lace counts add up to dims
    void check(const QuiverSpec& q) const;
    int lace_count() const;
    std::string str() const;

    friend bool operator==(const OrbitSpec& a, const OrbitSpec& b) { return a.mult == b.mult; }
    friend bool operator<(const OrbitSpec& a, const OrbitSpec& b) { return a.mult < b.mult; }
};

// All lace-count assignments compatible with the dimension vector, sorted.
std::vector<OrbitSpec> enumerate_orbits(const QuiverSpec& q, std::size_t limit = 100000);

// Orbit of an arbitrary representation, recovered from exact ranks.
OrbitSpec orbit_of(const Representation& v);

class LacingDiagram {
public:
    LacingDiagram() = default;
    LacingDiagram(QuiverSpec q, std::vector<PartialPerm> w);  // throws ShapeMismatch

    const QuiverSpec& quiver() const { return q_; }
    const std::vector<PartialPerm>& maps() const { return w_; }
    const PartialPerm& at(int a) const { return w_[a]; }

    // partner of dot i at vertex v across the arrow on the given side, 0 if none
    int right_partner(int v, int i) const;
    int left_partner(int v, int i) const;

    struct Lace {
        int left = 0;
        int right = 0;
        std::vector<int> dots;  // dot index at each vertex left..right
    };
    std::vector<Lace> laces() const;
    OrbitSpec orbit() const;
    Representation representation() const;

    std::string key() const;

    friend bool operator==(const LacingDiagram& a, const LacingDiagram& b) { return a.q_ == b.q_ && a.w_ == b.w_; }
    friend bool operator<(const LacingDiagram& a, const LacingDiagram& b) { return a.w_ < b.w_; }

private:
    QuiverSpec q_;
    std::vector<PartialPerm> w_;
};

LacingDiagram canonical_lacing(const QuiverSpec& q, const OrbitSpec& spec);
std::vector<LacingDiagram> enumerate_lacings(const QuiverSpec& q, const OrbitSpec& spec, std::size_t limit = 200000);

// c(w_a) on right arrows, oc(w_a) on left arrows
Perm extended_perm(const LacingDiagram& w, int a);
int extended_length(const LacingDiagram& w);

std::vector<LacingDiagram> minimal_lacings(const QuiverSpec& q, const OrbitSpec& spec, std::size_t limit = 200000);

// Diagrams reachable by one K-theoretic move at any middle column.
std::vector<LacingDiagram> k_moves(const LacingDiagram& w);
std::vector<LacingDiagram> ktheoretic_lacings(const QuiverSpec& q, const OrbitSpec& spec, std::size_t limit = 200000);

// Lift along a bipartite completion, identity on inverted arrows.
LacingDiagram lift(const LacingDiagram& w, const BipartiteCompletion& c);
Representation lift(const Representation& v, const BipartiteCompletion& c);
OrbitSpec lift(const OrbitSpec& spec, const BipartiteCompletion& c);
// Inverse of lift on diagrams that are identities on every inverted arrow.
LacingDiagram restrict_to_original(const LacingDiagram& w, const BipartiteCompletion& c);
bool identity_on_inverted(const LacingDiagram& w, const BipartiteCompletion& c);

std::string render(const LacingDiagram& w);

}  // namespace qk
