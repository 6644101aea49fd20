#include "quiverk/quiver.hpp"

#include <algorithm>

namespace qk {

QuiverSpec::QuiverSpec(std::vector<int> d, std::vector<Dir> a) : dims(std::move(d)), arrows(std::move(a)) {
    if (dims.empty()) throw InvalidQuiver("quiver needs at least one vertex");
    if (arrows.size() + 1 != dims.size()) throw InvalidQuiver("need exactly one arrow between consecutive vertices");
    for (int x : dims)
        if (x < 0) throw InvalidQuiver("negative dimension");
}

bool QuiverSpec::is_source(int v) const {
    for (int a : {v - 1, v})
        if (a >= 0 && a < arrow_count() && head(a) == v) return false;
    return true;
}

bool QuiverSpec::is_sink(int v) const {
    for (int a : {v - 1, v})
        if (a >= 0 && a < arrow_count() && tail(a) == v) return false;
    return true;
}

bool QuiverSpec::is_bipartite() const {
    for (int v = 0; v < vertices(); ++v)
        if (!is_source(v) && !is_sink(v)) return false;
    return true;
}

int QuiverSpec::dim_rep() const {
    int s = 0;
    for (int a = 0; a < arrow_count(); ++a) s += dims[tail(a)] * dims[head(a)];
    return s;
}

std::string VertexLabel::str() const { return (is_x ? "x" : "y") + std::to_string(k); }

std::string ArrowLabel::str() const { return (is_alpha ? "alpha" : "beta") + std::to_string(k); }

BipartiteStructure::BipartiteStructure(QuiverSpec q) : q_(std::move(q)) {
    if (q_.vertices() % 2 == 0) throw InvalidQuiver("bipartite structure needs sources at both ends");
    for (int a = 0; a < q_.arrow_count(); ++a)
        if (q_.arrows[a] != (a % 2 == 0 ? Dir::right : Dir::left))
            throw InvalidQuiver("arrows must alternate right, left starting from a source");
    n_ = q_.vertices() / 2;
    for (int v = 0; v < q_.vertices(); ++v) (v % 2 ? dx_ : dy_) += q_.dims[v];
}

VertexLabel BipartiteStructure::label(int v) const { return {v % 2 == 1, n_ - v / 2}; }

int BipartiteStructure::vertex_of(VertexLabel l) const {
    int v = 2 * (n_ - l.k) + (l.is_x ? 1 : 0);
    if (v < 0 || v >= q_.vertices() || (l.is_x && l.k < 1)) throw OutOfRange("no vertex " + l.str());
    return v;
}

ArrowLabel BipartiteStructure::arrow_label(int a) const {
    if (a % 2 == 0) return {false, n_ - a / 2};
    return {true, n_ - a / 2};
}

int BipartiteStructure::arrow_of(ArrowLabel l) const {
    if (l.k < 1 || l.k > n_) throw OutOfRange("no arrow " + l.str());
    return 2 * (n_ - l.k) + (l.is_alpha ? 1 : 0);
}

Alphabet BipartiteStructure::alphabet(int v) const {
    VertexLabel l = label(v);
    return Alphabet::of(l.family(), l.k, q_.dims[v]);
}

int BipartiteCompletion::added_count() const {
    return static_cast<int>(std::count(vertex_origin.begin(), vertex_origin.end(), VertexOrigin::added));
}

BipartiteCompletion bipartite_complete(const QuiverSpec& q) {
    BipartiteCompletion c;
    c.original = q;
    std::vector<int> dims;
    std::vector<Dir> arrows;
    c.completed_vertex.assign(q.vertices(), -1);
    c.completed_arrow.assign(q.arrow_count(), -1);

    auto push_vertex = [&](int d, VertexOrigin o, int src) {
        dims.push_back(d);
        c.vertex_origin.push_back(o);
        c.vertex_source.push_back(src);
    };
    auto push_arrow = [&](Dir d, ArrowOrigin o, int src) {
        arrows.push_back(d);
        c.arrow_origin.push_back(o);
        c.arrow_source.push_back(src);
    };

    for (int v = 0; v < q.vertices(); ++v) {
        if (v > 0) {
            Dir left = q.arrows[v - 1];
            bool through = v < q.vertices() - 1 && q.arrows[v] == left;
            c.completed_arrow[v - 1] = static_cast<int>(arrows.size());
            push_arrow(left, ArrowOrigin::original, v - 1);
            if (through) {
                // the rerouted arrow ends at the new vertex; delta joins it to v
                push_vertex(q.dims[v], VertexOrigin::added, v);
                push_arrow(left == Dir::right ? Dir::left : Dir::right, ArrowOrigin::inverted, -1);
            }
        }
        c.completed_vertex[v] = static_cast<int>(dims.size());
        push_vertex(q.dims[v], VertexOrigin::original, v);
    }

    if (!dims.empty() && arrows.size() > 0 && arrows.front() == Dir::left) {
        dims.insert(dims.begin(), 0);
        c.vertex_origin.insert(c.vertex_origin.begin(), VertexOrigin::padding);
        c.vertex_source.insert(c.vertex_source.begin(), -1);
        arrows.insert(arrows.begin(), Dir::right);
        c.arrow_origin.insert(c.arrow_origin.begin(), ArrowOrigin::padding);
        c.arrow_source.insert(c.arrow_source.begin(), -1);
        for (int& x : c.completed_vertex) ++x;
        for (int& x : c.completed_arrow) ++x;
    }
    if (!arrows.empty() && arrows.back() == Dir::right) {
        push_arrow(Dir::left, ArrowOrigin::padding, -1);
        push_vertex(0, VertexOrigin::padding, -1);
    }
    c.completed = BipartiteStructure(QuiverSpec(dims, arrows));
    return c;
}

std::map<VarId, VarId> sub_map(const BipartiteCompletion& c) {
    std::map<VarId, VarId> m;
    const BipartiteStructure& b = c.completed;
    for (int v = 0; v < b.quiver().vertices(); ++v) {
        if (c.vertex_origin[v] != VertexOrigin::added) continue;
        // the twin sits immediately to the right
        Alphabet from = b.alphabet(v), to = b.alphabet(v + 1);
        for (int i = 1; i <= from.size(); ++i) m[from[i]] = to[i];
    }
    return m;
}

VarId apply_sub(const std::map<VarId, VarId>& sub, VarId v) {
    auto it = sub.find(v);
    return it == sub.end() ? v : it->second;
}

BlockLayout::BlockLayout(const BipartiteStructure& b) : b_(b) {
    const int n = b.n();
    auto add = [&](std::vector<Block>& out, VertexLabel l) {
        int off = out.empty() ? 0 : out.back().offset + out.back().size;
        int v = b.vertex_of(l);
        out.push_back({l, v, off, b.quiver().dims[v]});
    };
    for (int k = 0; k <= n; ++k) add(rows_, {false, k});
    for (int k = n; k >= 1; --k) add(rows_, {true, k});
    for (int k = n; k >= 1; --k) add(cols_, {true, k});
    for (int k = 0; k <= n; ++k) add(cols_, {false, k});
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r)
        for (int i = 0; i < rows_[r].size; ++i) row_of_.push_back(r);
    for (int r = 0; r < static_cast<int>(cols_.size()); ++r)
        for (int i = 0; i < cols_[r].size; ++i) col_of_.push_back(r);

    std::vector<int> img;
    for (int i = 1; i <= b.d_y(); ++i) img.push_back(b.d_x() + i);
    for (int j = 1; j <= b.d_x(); ++j) img.push_back(j);
    v0_ = Perm(img);
}

int BlockLayout::row_block_of(int i) const {
    if (i < 1 || i > static_cast<int>(row_of_.size())) throw OutOfRange("row outside the layout");
    return row_of_[i - 1];
}

int BlockLayout::col_block_of(int j) const {
    if (j < 1 || j > static_cast<int>(col_of_.size())) throw OutOfRange("column outside the layout");
    return col_of_[j - 1];
}

const Block& BlockLayout::row_block(VertexLabel l) const {
    for (const Block& blk : rows_)
        if (blk.label == l) return blk;
    throw OutOfRange("no row block " + l.str());
}

const Block& BlockLayout::col_block(VertexLabel l) const {
    for (const Block& blk : cols_)
        if (blk.label == l) return blk;
    throw OutOfRange("no column block " + l.str());
}

std::pair<const Block*, const Block*> BlockLayout::arrow_blocks(int a) const {
    ArrowLabel l = b_.arrow_label(a);
    VertexLabel row{false, l.is_alpha ? l.k - 1 : l.k};
    return {&row_block(row), &col_block({true, l.k})};
}

int BlockLayout::arrow_at(Cell c) const {
    if (c.i < 1 || c.j < 1 || c.i > b_.d_y() || c.j > b_.d_x()) return -1;
    const VertexLabel r = rows_[row_block_of(c.i)].label;
    const VertexLabel col = cols_[col_block_of(c.j)].label;
    if (r.k == col.k) return b_.arrow_of({false, col.k});
    if (r.k == col.k - 1) return b_.arrow_of({true, col.k});
    return -1;
}

std::vector<Cell> BlockLayout::snake_cells() const {
    std::vector<Cell> out;
    for (int i = 1; i <= b_.d_y(); ++i)
        for (int j = 1; j <= b_.d_x(); ++j)
            if (in_snake({i, j})) out.push_back({i, j});
    return out;
}

Alphabet BlockLayout::row_alphabet() const {
    Alphabet a;
    for (const Block& blk : rows_) a = a.then(b_.alphabet(blk.vertex));
    return a;
}

Alphabet BlockLayout::col_alphabet() const {
    Alphabet a;
    for (const Block& blk : cols_) a = a.then(b_.alphabet(blk.vertex));
    return a;
}

VarId BlockLayout::row_var(int i) const {
    const Block& blk = rows_[row_block_of(i)];
    return {blk.label.family(), blk.label.k, i - blk.offset};
}

VarId BlockLayout::col_var(int j) const {
    const Block& blk = cols_[col_block_of(j)];
    return {blk.label.family(), blk.label.k, j - blk.offset};
}

Monomial grading_degree(const BipartiteStructure& b, int a, int i, int j) {
    if (a < 0 || a >= b.quiver().arrow_count()) throw OutOfRange("no such arrow");
    const QuiverSpec& q = b.quiver();
    if (i < 1 || j < 1 || i > q.dims[q.tail(a)] || j > q.dims[q.head(a)]) throw OutOfRange("entry outside the arrow matrix");
    ArrowLabel l = b.arrow_label(a);
    VarId row = var_t(l.is_alpha ? l.k - 1 : l.k, i);
    VarId col = var_s(l.k, j);
    Monomial m;
    m.emplace_back(row.key(), 1);
    m.emplace_back(col.key(), -1);
    std::sort(m.begin(), m.end());
    return m;
}

}  // namespace qk
