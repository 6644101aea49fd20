#include "quiverk/zelevinsky.hpp"

#include <sstream>

namespace qk {

Matrix zelevinsky_image(const Representation& v, const BlockLayout& layout) {
    const BipartiteStructure& b = layout.structure();
    if (!(v.quiver == b.quiver())) throw ShapeMismatch("representation does not live on the layout's quiver");
    const int dx = b.d_x(), dy = b.d_y();
    Matrix z(dx + dy, dx + dy);
    for (int a = 0; a < v.quiver.arrow_count(); ++a) {
        auto [rb, cb] = layout.arrow_blocks(a);
        z.paste(v.maps[a], rb->offset, cb->offset);
    }
    for (int i = 1; i <= dy; ++i) z(i, dx + i) = 1;
    for (int j = 1; j <= dx; ++j) z(dy + j, j) = 1;
    return z;
}

BlockRankMatrix block_rank_matrix(const Representation& v) {
    return block_rank_matrix(v, BlockLayout(BipartiteStructure(v.quiver)));
}

BlockRankMatrix block_rank_matrix(const Representation& v, const BlockLayout& layout) {
    const Matrix z = zelevinsky_image(v, layout);
    const auto& rows = layout.row_blocks();
    const auto& cols = layout.col_blocks();
    BlockRankMatrix out(rows.size(), std::vector<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out[i][j] = exact_rank(z.corner(rows[i].offset + rows[i].size, cols[j].offset + cols[j].size));
    return out;
}

Perm perm_from_block_counts(const std::vector<std::vector<int>>& count, const BlockLayout& layout) {
    const auto& rows = layout.row_blocks();
    const auto& cols = layout.col_blocks();
    std::vector<int> next_row(rows.size()), next_col(cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) next_row[i] = rows[i].offset + 1;
    for (std::size_t j = 0; j < cols.size(); ++j) next_col[j] = cols[j].offset + 1;
    const int d = layout.structure().d();
    std::vector<int> img(d, 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (count[i][j] < 0) throw NotRealizable("negative block count");
            for (int t = 0; t < count[i][j]; ++t) {
                if (next_row[i] > rows[i].offset + rows[i].size || next_col[j] > cols[j].offset + cols[j].size)
                    throw NotRealizable("block counts overflow a block row or column");
                img[next_row[i]++ - 1] = next_col[j]++;
            }
        }
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (next_row[i] != rows[i].offset + rows[i].size + 1) throw NotRealizable("block row not filled");
    return Perm(img);
}

Perm zperm_from_blockranks(const BlockRankMatrix& b, const BlockLayout& layout) {
    const std::size_t nr = layout.row_blocks().size(), nc = layout.col_blocks().size();
    if (b.size() != nr || (nr && b[0].size() != nc)) throw NotRealizable("block rank matrix has the wrong shape");
    auto at = [&](std::size_t i, std::size_t j) { return (i == 0 || j == 0) ? 0 : b[i - 1][j - 1]; };
    std::vector<std::vector<int>> count(nr, std::vector<int>(nc));
    for (std::size_t i = 1; i <= nr; ++i)
        for (std::size_t j = 1; j <= nc; ++j) count[i - 1][j - 1] = at(i, j) + at(i - 1, j - 1) - at(i, j - 1) - at(i - 1, j);
    return perm_from_block_counts(count, layout);
}

namespace {

std::vector<std::vector<int>> counts_from_laces(const OrbitSpec& spec, const std::vector<int>& edges, const BlockLayout& layout) {
    const auto& rows = layout.row_blocks();
    const auto& cols = layout.col_blocks();
    std::vector<std::vector<int>> count(rows.size(), std::vector<int>(cols.size(), 0));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            int zr = rows[i].vertex, zc = cols[j].vertex;
            if (zr <= zc) count[i][j] = spec.count(zr, zc);
            else if (zr == zc + 1) count[i][j] = edges[zc];
        }
    return count;
}

}  // namespace

Perm zperm_from_lacing(const LacingDiagram& w, const BlockLayout& layout) {
    if (!(w.quiver() == layout.structure().quiver())) throw ShapeMismatch("lacing diagram does not live on the layout's quiver");
    std::vector<int> edges;
    for (const PartialPerm& p : w.maps()) edges.push_back(p.rank());
    return perm_from_block_counts(counts_from_laces(w.orbit(), edges, layout), layout);
}

Perm zperm_from_orbit(const OrbitSpec& spec, const BlockLayout& layout) {
    const QuiverSpec& q = layout.structure().quiver();
    spec.check(q);
    std::vector<int> edges(q.arrow_count(), 0);
    for (const auto& [iv, m] : spec.mult)
        for (int a = iv.first; a < iv.second; ++a) edges[a] += m;
    return perm_from_block_counts(counts_from_laces(spec, edges, layout), layout);
}

Perm v_star(const BlockLayout& layout) {
    const BipartiteStructure& b = layout.structure();
    HeckeWord word;
    for (int i = 1; i <= b.d_y(); ++i)
        for (int j = b.d_x(); j >= 1; --j)
            if (!layout.in_snake({i, j})) word.push_back(i + j - 1);
    return demazure_product(word, b.d()).resized(b.d());
}

int codim(const Perm& vr, const Perm& vstar) {
    if (vr.size() != vstar.size() || !bruhat_leq(vstar, vr)) throw NotComparable("v_* is not below v(r) in Bruhat order");
    return length(vr) - length(vstar);
}

std::string render_block_perm(const Perm& p, const BlockLayout& layout) {
    const auto& rows = layout.row_blocks();
    const auto& cols = layout.col_blocks();
    std::ostringstream o;
    auto rule = [&] {
        bool lead = true;
        for (const Block& cb : cols) {
            if (!cb.size) continue;
            o << (lead ? "" : "+") << std::string(2 * cb.size, '-');
            lead = false;
        }
        o << '\n';
    };
    bool first = true;
    for (const Block& rb : rows) {
        if (!rb.size) continue;
        if (!first) rule();
        first = false;
        for (int i = rb.offset + 1; i <= rb.offset + rb.size; ++i) {
            bool firstc = true;
            for (const Block& cb : cols) {
                if (!cb.size) continue;
                if (!firstc) o << "|";
                firstc = false;
                for (int j = cb.offset + 1; j <= cb.offset + cb.size; ++j) o << ' ' << (p(i) == j ? '1' : '.');
            }
            o << '\n';
        }
    }
    return o.str();
}

}  // namespace qk
