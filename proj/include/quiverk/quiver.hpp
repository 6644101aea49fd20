#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "quiverk/laurent.hpp"
#include "quiverk/perm.hpp"
#include "quiverk/schubert.hpp"

namespace qk {

// Direction of an arrow between vertex p and p+1 (left-to-right indexing).
enum class Dir { left, right };

struct InvalidQuiver : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct OutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Type A quiver with vertices 0..N-1 left to right; arrows[p] joins p and p+1.
struct QuiverSpec {
    std::vector<int> dims;
    std::vector<Dir> arrows;

    QuiverSpec() = default;
    QuiverSpec(std::vector<int> d, std::vector<Dir> a);

    int vertices() const { return static_cast<int>(dims.size()); }
    int arrow_count() const { return static_cast<int>(arrows.size()); }
    int tail(int a) const { return arrows[a] == Dir::right ? a : a + 1; }
    int head(int a) const { return arrows[a] == Dir::right ? a + 1 : a; }
    bool is_source(int v) const;
    bool is_sink(int v) const;
    bool is_bipartite() const;  // every vertex a source or sink
    int dim_rep() const;        // sum over arrows of d(tail) d(head)

    friend bool operator==(const QuiverSpec&, const QuiverSpec&) = default;
};

// Paper labels of a bipartite vertex: y_k (source) or x_k (sink).
struct VertexLabel {
    bool is_x = false;
    int k = 0;
    std::string str() const;
    Family family() const { return is_x ? Family::s : Family::t; }
    friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

// Arrow label: beta_k (y_k -> x_k, points right) or alpha_k (y_{k-1} -> x_k, points left).
struct ArrowLabel {
    bool is_alpha = false;
    int k = 0;
    std::string str() const;
};

// A bipartite quiver y_n, x_n, ..., x_1, y_0 read left to right.
class BipartiteStructure {
public:
    BipartiteStructure() = default;
    explicit BipartiteStructure(QuiverSpec q);  // throws unless alternating with source ends

    const QuiverSpec& quiver() const { return q_; }
    int n() const { return n_; }
    int d_x() const { return dx_; }
    int d_y() const { return dy_; }
    int d() const { return dx_ + dy_; }

    VertexLabel label(int v) const;
    int vertex_of(VertexLabel l) const;
    int dim(VertexLabel l) const { return q_.dims[vertex_of(l)]; }
    ArrowLabel arrow_label(int a) const;
    int arrow_of(ArrowLabel l) const;
    // alphabet t^k for y_k, s^k for x_k
    Alphabet alphabet(int v) const;

private:
    QuiverSpec q_;
    int n_ = 0;
    int dx_ = 0;
    int dy_ = 0;
};

enum class VertexOrigin { original, added, padding };
enum class ArrowOrigin { original, inverted, padding };

struct BipartiteCompletion {
    QuiverSpec original;
    BipartiteStructure completed;
    // per completed vertex / arrow
    std::vector<VertexOrigin> vertex_origin;
    std::vector<int> vertex_source;  // original vertex (the twin for added ones), -1 for padding
    std::vector<ArrowOrigin> arrow_origin;
    std::vector<int> arrow_source;  // original arrow index, -1 otherwise
    std::vector<int> completed_vertex;  // original vertex -> completed vertex
    std::vector<int> completed_arrow;   // original arrow -> completed arrow

    int added_count() const;
};

BipartiteCompletion bipartite_complete(const QuiverSpec& q);

// Substitution collapsing the alphabet of each added vertex onto its twin.
std::map<VarId, VarId> sub_map(const BipartiteCompletion& c);
// Full variable map over the completed quiver's alphabets (identity off added vertices).
VarId apply_sub(const std::map<VarId, VarId>& sub, VarId v);

// Block geometry of the Zelevinsky cell.
struct Block {
    VertexLabel label;
    int vertex = 0;  // bipartite vertex index
    int offset = 0;  // first row/col minus one
    int size = 0;
};

class BlockLayout {
public:
    explicit BlockLayout(const BipartiteStructure& b);

    const BipartiteStructure& structure() const { return b_; }
    // rows: y_0..y_n, x_n..x_1; cols: x_n..x_1, y_0..y_n
    const std::vector<Block>& row_blocks() const { return rows_; }
    const std::vector<Block>& col_blocks() const { return cols_; }
    int row_block_of(int i) const;  // index into row_blocks for row i
    int col_block_of(int j) const;
    const Block& row_block(VertexLabel l) const;
    const Block& col_block(VertexLabel l) const;

    // row/col block pair hosting arrow a in the NW d_y x d_x quadrant
    std::pair<const Block*, const Block*> arrow_blocks(int a) const;
    int arrow_at(Cell c) const;  // arrow whose block contains c, -1 outside the snake
    bool in_snake(Cell c) const { return arrow_at(c) >= 0; }
    std::vector<Cell> snake_cells() const;

    const Perm& v0() const { return v0_; }
    Alphabet row_alphabet() const;  // t^0..t^n, s^n..s^1
    Alphabet col_alphabet() const;  // s^n..s^1, t^0..t^n
    VarId row_var(int i) const;
    VarId col_var(int j) const;

private:
    BipartiteStructure b_;
    std::vector<Block> rows_;
    std::vector<Block> cols_;
    std::vector<int> row_of_;
    std::vector<int> col_of_;
    Perm v0_;
};

// Multigrading of entry (i, j) of the matrix on arrow a: row variable over column variable.
Monomial grading_degree(const BipartiteStructure& b, int a, int i, int j);

}  // namespace qk
