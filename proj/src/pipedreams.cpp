#include "quiverk/pipedreams.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "quiverk/zelevinsky.hpp"

namespace qk {

PipeDream::PipeDream(int r, int c, std::vector<Cell> x) : rows(r), cols(c), crosses(std::move(x)) {
    std::sort(crosses.begin(), crosses.end());
    crosses.erase(std::unique(crosses.begin(), crosses.end()), crosses.end());
    for (const Cell& e : crosses)
        if (e.i < 1 || e.j < 1 || e.i > rows || e.j > cols) throw OutOfRange("cross outside the grid");
}

bool PipeDream::has(Cell c) const { return std::binary_search(crosses.begin(), crosses.end(), c); }

PipeDream PipeDream::rotated() const {
    std::vector<Cell> x;
    for (const Cell& e : crosses) x.push_back({rows + 1 - e.i, cols + 1 - e.j});
    return PipeDream(rows, cols, x);
}

PipeDream star_pipe_dream(const BlockLayout& layout) {
    const BipartiteStructure& b = layout.structure();
    std::vector<Cell> x;
    for (int i = 1; i <= b.d_y(); ++i)
        for (int j = 1; j <= b.d_x(); ++j)
            if (!layout.in_snake({i, j})) x.push_back({i, j});
    return PipeDream(b.d_y(), b.d_x(), x);
}

HeckeWord word_of(const PipeDream& p) {
    HeckeWord w;
    for (int i = 1; i <= p.rows; ++i)
        for (int j = p.cols; j >= 1; --j)
            if (p.has({i, j})) w.push_back(i + j - 1);
    return w;
}

Perm demazure_of(const PipeDream& p) { return demazure_product(word_of(p), p.rows + p.cols).resized(p.rows + p.cols); }

bool is_reduced(const PipeDream& p) { return length(demazure_of(p)) == p.size(); }

namespace {

// in place p <- p * s_k when that raises length; returns whether it did
bool hecke_step(std::vector<int>& p, int k) {
    if (p[k - 1] < p[k]) {
        std::swap(p[k - 1], p[k]);
        return true;
    }
    return false;
}

}  // namespace

std::vector<PipeDream> enumerate_pipes(const BlockLayout& layout, const Perm& target, bool reduced_only, std::size_t limit) {
    const BipartiteStructure& b = layout.structure();
    const int d = b.d(), rows = b.d_y(), cols = b.d_x();
    if (target.size() != d) throw std::invalid_argument("target permutation has the wrong size");
    const Perm vs = v_star(layout);
    if (!bruhat_leq(vs, target)) throw NotAboveStar("target is not above v_* in Bruhat order");

    struct Slot {
        Cell c;
        bool forced;
    };
    std::vector<Slot> order;
    for (int i = 1; i <= rows; ++i)
        for (int j = cols; j >= 1; --j) order.push_back({{i, j}, !layout.in_snake({i, j})});
    const int total = static_cast<int>(order.size());

    std::vector<PipeDream> out;
    std::vector<Cell> chosen;
    std::vector<int> cur = Perm::identity(d).one_line();

    // cur * (every remaining letter) bounds what the branch can still reach
    auto reachable = [&](int from) {
        std::vector<int> p = cur;
        for (int s = from; s < total; ++s) hecke_step(p, order[s].c.i + order[s].c.j - 1);
        return bruhat_leq(target, Perm(p));
    };

    std::function<void(int)> rec = [&](int s) {
        if (s == total) {
            if (Perm(cur) == target) {
                out.emplace_back(rows, cols, chosen);
                if (out.size() > limit) throw TooLarge("pipe dream count exceeds the enumeration limit");
            }
            return;
        }
        if (!reachable(s)) return;
        const Slot& slot = order[s];
        const int k = slot.c.i + slot.c.j - 1;
        if (!slot.forced) rec(s + 1);
        std::vector<int> saved = cur;
        bool grew = hecke_step(cur, k);
        if ((grew || !reduced_only) && (!grew || bruhat_leq(Perm(cur), target))) {
            chosen.push_back(slot.c);
            rec(s + 1);
            chosen.pop_back();
        }
        cur = saved;
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

PipeDream block_restriction(const PipeDream& p, const BlockLayout& layout, int a) {
    auto [rb, cb] = layout.arrow_blocks(a);
    std::vector<Cell> x;
    for (const Cell& e : p.crosses)
        if (e.i > rb->offset && e.i <= rb->offset + rb->size && e.j > cb->offset && e.j <= cb->offset + cb->size)
            x.push_back({e.i - rb->offset, e.j - cb->offset});
    return PipeDream(rb->size, cb->size, x);
}

PartialPerm follow_pipes(const PipeDream& p) {
    PartialPerm out(p.rows, p.cols);
    for (int start = 1; start <= p.rows; ++start) {
        int i = start, j = 1;
        bool east = true;
        while (i >= 1 && j <= p.cols) {
            bool cross = p.has({i, j});
            // straight through a cross, turn at an elbow
            if (cross == east) ++j;
            else --i;
            if (!cross) east = !east;
        }
        if (i == 0) out.set(start, j);
    }
    return out;
}

std::vector<PipeDream> reduced_representatives(const PipeDream& p) {
    const Perm target = demazure_of(p);
    const int need = length(target);
    const int n = p.size();
    std::vector<PipeDream> out;
    std::vector<Cell> pick;
    std::function<void(int)> rec = [&](int s) {
        if (static_cast<int>(pick.size()) == need) {
            PipeDream q(p.rows, p.cols, pick);
            if (demazure_of(q) == target) out.push_back(q);
            return;
        }
        if (s == n || need - static_cast<int>(pick.size()) > n - s) return;
        pick.push_back(p.crosses[s]);
        rec(s + 1);
        pick.pop_back();
        rec(s + 1);
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

LacingDiagram pipe_to_lace(const PipeDream& p, const BlockLayout& layout) {
    const BipartiteStructure& b = layout.structure();
    std::vector<PartialPerm> maps;
    for (int a = 0; a < b.quiver().arrow_count(); ++a) {
        const bool alpha = b.arrow_label(a).is_alpha;
        PipeDream blk = block_restriction(p, layout, a);
        if (alpha) blk = blk.rotated();
        if (!is_reduced(blk)) {
            auto reps = reduced_representatives(blk);
            if (reps.empty()) throw NoReducedRepresentative("block has no reduced sub-dream with its Demazure product");
            blk = reps.front();
        }
        PartialPerm w = follow_pipes(blk);
        maps.push_back(alpha ? w.rotated() : w);
    }
    return LacingDiagram(b.quiver(), maps);
}

std::vector<Cell> snake_crosses(const PipeDream& p, const BlockLayout& layout) {
    std::vector<Cell> out;
    for (const Cell& c : p.crosses)
        if (layout.in_snake(c)) out.push_back(c);
    return out;
}

PipeClass classify_good_bad(const PipeDream& p, const BlockLayout& layout, const BipartiteCompletion& c) {
    for (const Cell& e : snake_crosses(p, layout))
        if (c.arrow_origin[layout.arrow_at(e)] != ArrowOrigin::original) return PipeClass::bad;
    return PipeClass::good;
}

std::string render(const PipeDream& p, const BlockLayout& layout, const std::map<VarId, VarId>& rename) {
    auto name = [&](VarId v) { return apply_sub(rename, v).str(); };
    std::size_t width = 0;
    for (int i = 1; i <= p.rows; ++i) width = std::max(width, name(layout.row_var(i)).size());
    std::ostringstream o;
    o << "columns:";
    for (int j = 1; j <= p.cols; ++j) o << ' ' << name(layout.col_var(j));
    o << '\n';
    for (int i = 1; i <= p.rows; ++i) {
        if (i > 1 && layout.row_block_of(i) != layout.row_block_of(i - 1)) {
            o << std::string(width + 1, ' ');
            for (int j = 1; j <= p.cols; ++j) {
                if (j > 1 && layout.col_block_of(j) != layout.col_block_of(j - 1)) o << '+';
                o << "--";
            }
            o << '\n';
        }
        std::string label = name(layout.row_var(i));
        o << label << std::string(width + 1 - label.size(), ' ');
        for (int j = 1; j <= p.cols; ++j) {
            if (j > 1 && layout.col_block_of(j) != layout.col_block_of(j - 1)) o << '|';
            o << ' ' << (p.has({i, j}) ? '+' : '/');
        }
        o << '\n';
    }
    return o.str();
}

}  // namespace qk
