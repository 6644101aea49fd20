#include "quiverk/lacing.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

#include "quiverk/laurent.hpp"

namespace qk {

Matrix Matrix::from_rows(const std::vector<std::vector<long long>>& rs, int cols) {
    int c = cols >= 0 ? cols : (rs.empty() ? 0 : static_cast<int>(rs.front().size()));
    Matrix m(static_cast<int>(rs.size()), c);
    for (int i = 0; i < m.rows; ++i) {
        if (static_cast<int>(rs[i].size()) != c) throw ShapeMismatch("ragged matrix rows");
        for (int j = 0; j < c; ++j) m(i + 1, j + 1) = rs[i][j];
    }
    return m;
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 1; i <= n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::of(const PartialPerm& p) {
    Matrix m(p.rows(), p.cols());
    for (const Cell& c : p.ones()) m(c.i, c.j) = 1;
    return m;
}

Matrix Matrix::corner(int r, int c) const {
    Matrix m(r, c);
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= c; ++j) m(i, j) = (*this)(i, j);
    return m;
}

void Matrix::paste(const Matrix& m, int row_off, int col_off) {
    for (int i = 1; i <= m.rows; ++i)
        for (int j = 1; j <= m.cols; ++j) (*this)(row_off + i, col_off + j) = m(i, j);
}

std::vector<std::vector<long long>> Matrix::to_rows() const {
    std::vector<std::vector<long long>> out(rows, std::vector<long long>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out[i][j] = (*this)(i + 1, j + 1);
    return out;
}

int exact_rank(const Matrix& m) {
    std::vector<std::vector<Coeff>> a(m.rows, std::vector<Coeff>(m.cols));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) a[i][j] = m(i + 1, j + 1);
    // Bareiss
    Coeff prev = 1;
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int i = rank; i < m.rows; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        for (int i = rank + 1; i < m.rows; ++i) {
            for (int j = col + 1; j < m.cols; ++j) a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

Representation::Representation(QuiverSpec q, std::vector<Matrix> m) : quiver(std::move(q)), maps(std::move(m)) {
    if (static_cast<int>(maps.size()) != quiver.arrow_count()) throw ShapeMismatch("need one matrix per arrow");
    for (int a = 0; a < quiver.arrow_count(); ++a)
        if (maps[a].rows != quiver.dims[quiver.tail(a)] || maps[a].cols != quiver.dims[quiver.head(a)])
            throw ShapeMismatch("matrix on arrow " + std::to_string(a) + " has the wrong shape");
}

Representation Representation::zero(const QuiverSpec& q) {
    std::vector<Matrix> m;
    for (int a = 0; a < q.arrow_count(); ++a) m.emplace_back(q.dims[q.tail(a)], q.dims[q.head(a)]);
    return Representation(q, m);
}

Matrix interval_matrix(const Representation& v, ArrowInterval j) {
    const QuiverSpec& q = v.quiver;
    if (j.first > j.second || j.first < 0 || j.second >= q.arrow_count()) throw EmptyInterval("empty or out-of-range arrow interval");
    if (!q.is_bipartite()) throw InvalidQuiver("interval matrices need a bipartite quiver");
    std::map<int, int> row_off, col_off;
    int rows = 0, cols = 0;
    for (int z = j.second + 1; z >= j.first; --z)
        if (q.is_source(z)) {
            row_off[z] = rows;
            rows += q.dims[z];
        }
    for (int z = j.first; z <= j.second + 1; ++z)
        if (!q.is_source(z)) {
            col_off[z] = cols;
            cols += q.dims[z];
        }
    Matrix m(rows, cols);
    for (int a = j.first; a <= j.second; ++a) m.paste(v.maps[a], row_off.at(q.tail(a)), col_off.at(q.head(a)));
    return m;
}

RankArray rank_array(const Representation& v) {
    RankArray r;
    for (int f = 0; f < v.quiver.arrow_count(); ++f)
        for (int l = f; l < v.quiver.arrow_count(); ++l) r[{f, l}] = exact_rank(interval_matrix(v, {f, l}));
    return r;
}

int OrbitSpec::count(int l, int r) const {
    auto it = mult.find({l, r});
    return it == mult.end() ? 0 : it->second;
}

void OrbitSpec::check(const QuiverSpec& q) const {
    std::vector<int> cover(q.vertices(), 0);
    for (const auto& [iv, m] : mult) {
        if (iv.first < 0 || iv.first > iv.second || iv.second >= q.vertices())
            throw InconsistentMultiplicities("lace endpoints outside the quiver");
        if (m < 0) throw InconsistentMultiplicities("negative lace count");
        for (int z = iv.first; z <= iv.second; ++z) cover[z] += m;
    }
    for (int z = 0; z < q.vertices(); ++z)
        if (cover[z] != q.dims[z])
            throw InconsistentMultiplicities("laces through vertex " + std::to_string(z) + " do not match its dimension");
}

int OrbitSpec::lace_count() const {
    int s = 0;
    for (const auto& kv : mult) s += kv.second;
    return s;
}

std::string OrbitSpec::str() const {
    std::ostringstream o;
    bool first = true;
    for (const auto& [iv, m] : mult) {
        if (!m) continue;
        o << (first ? "" : " ") << "[" << iv.first << "," << iv.second << "]x" << m;
        first = false;
    }
    return first ? "(empty)" : o.str();
}

std::vector<OrbitSpec> enumerate_orbits(const QuiverSpec& q, std::size_t limit) {
    const int n = q.vertices();
    std::vector<OrbitSpec> out;
    OrbitSpec cur;
    // open[l] = laces started at l still running
    std::function<void(int, std::vector<int>)> rec = [&](int z, std::vector<int> open) {
        if (z == n) {
            for (int l = 0; l < n; ++l)
                if (open[l]) cur.mult[{l, n - 1}] = open[l];
            OrbitSpec s;
            for (const auto& kv : cur.mult)
                if (kv.second) s.mult.insert(kv);
            out.push_back(s);
            if (out.size() > limit) throw TooLarge("orbit count exceeds the enumeration limit");
            for (int l = 0; l < n; ++l) cur.mult.erase({l, n - 1});
            return;
        }
        // choose how many of each open group continue to z
        std::vector<int> keep(z, 0);
        std::function<void(int, int)> pick = [&](int l, int used) {
            if (l == z) {
                int fresh = q.dims[z] - used;
                if (fresh < 0) return;
                std::vector<int> next(n, 0);
                for (int k = 0; k < z; ++k) {
                    next[k] = keep[k];
                    if (open[k] - keep[k]) cur.mult[{k, z - 1}] = open[k] - keep[k];
                }
                next[z] = fresh;
                rec(z + 1, next);
                for (int k = 0; k < z; ++k) cur.mult.erase({k, z - 1});
                return;
            }
            for (int c = 0; c <= open[l] && used + c <= q.dims[z]; ++c) {
                keep[l] = c;
                pick(l + 1, used + c);
            }
            keep[l] = 0;
        };
        pick(0, 0);
    };
    rec(0, std::vector<int>(n, 0));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// f[a][b] = number of laces containing [a,b], solved from the ranks of interval matrices.
OrbitSpec orbit_of_bipartite(const Representation& v) {
    const QuiverSpec& q = v.quiver;
    const int n = q.vertices();
    std::vector<std::vector<long long>> f(n, std::vector<long long>(n, 0));
    for (int a = 0; a < n; ++a) f[a][a] = q.dims[a];
    auto fv = [&](int a, int b) -> long long { return (a < 0 || b >= n) ? 0 : f[a][b]; };
    for (int len = 2; len <= n; ++len)
        for (int a = 0; a + len - 1 < n; ++a) {
            const int b = a + len - 1;
            const long long rank = exact_rank(interval_matrix(v, {a, b - 1}));
            // sum over laces of floor(|L cap [a,b]| / 2), linear in f[a][b]
            auto total = [&](long long x) {
                f[a][b] = x;
                long long s = 0;
                for (int c = a; c <= b; ++c)
                    for (int e = c; e <= b; ++e) {
                        long long cnt = f[c][e];
                        if (c > a) cnt -= f[c - 1][e];
                        if (e < b) cnt -= f[c][e + 1];
                        if (c > a && e < b) cnt += f[c - 1][e + 1];
                        s += cnt * ((e - c + 1) / 2);
                    }
                return s;
            };
            long long s0 = total(0), s1 = total(1);
            long long slope = s1 - s0;
            long long x = (rank - s0) / slope;
            if (x * slope != rank - s0 || x < 0) throw InconsistentMultiplicities("ranks are not realized by any lacing");
            f[a][b] = x;
        }
    OrbitSpec s;
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            long long m = fv(a, b) - fv(a - 1, b) - fv(a, b + 1) + fv(a - 1, b + 1);
            if (m < 0) throw InconsistentMultiplicities("negative lace count recovered from ranks");
            if (m) s.mult[{a, b}] = static_cast<int>(m);
        }
    s.check(q);
    return s;
}

}  // namespace

OrbitSpec orbit_of(const Representation& v) {
    if (v.quiver.is_bipartite()) return orbit_of_bipartite(v);
    BipartiteCompletion c = bipartite_complete(v.quiver);
    OrbitSpec lifted = orbit_of_bipartite(lift(v, c));
    OrbitSpec s;
    for (const auto& [iv, m] : lifted.mult) {
        int l = -1;
        for (int z = iv.first; z <= iv.second && l < 0; ++z)
            if (c.vertex_origin[z] == VertexOrigin::original) l = c.vertex_source[z];
        int r = -1;
        for (int z = iv.second; z >= iv.first && r < 0; --z)
            if (c.vertex_origin[z] == VertexOrigin::original) r = c.vertex_source[z];
        if (l < 0 || r < 0) throw InconsistentMultiplicities("lace supported only on added vertices");
        s.mult[{l, r}] += m;
    }
    s.check(v.quiver);
    return s;
}

LacingDiagram::LacingDiagram(QuiverSpec q, std::vector<PartialPerm> w) : q_(std::move(q)), w_(std::move(w)) {
    if (static_cast<int>(w_.size()) != q_.arrow_count()) throw ShapeMismatch("need one partial permutation per arrow");
    for (int a = 0; a < q_.arrow_count(); ++a)
        if (w_[a].rows() != q_.dims[q_.tail(a)] || w_[a].cols() != q_.dims[q_.head(a)])
            throw ShapeMismatch("partial permutation on arrow " + std::to_string(a) + " has the wrong shape");
}

int LacingDiagram::right_partner(int v, int i) const {
    if (v + 1 >= q_.vertices()) return 0;
    const PartialPerm& p = w_[v];
    return q_.arrows[v] == Dir::right ? p.col_of(i) : p.row_of(i);
}

int LacingDiagram::left_partner(int v, int i) const {
    if (v == 0) return 0;
    const PartialPerm& p = w_[v - 1];
    return q_.arrows[v - 1] == Dir::right ? p.row_of(i) : p.col_of(i);
}

std::vector<LacingDiagram::Lace> LacingDiagram::laces() const {
    std::vector<Lace> out;
    for (int v = 0; v < q_.vertices(); ++v)
        for (int i = 1; i <= q_.dims[v]; ++i) {
            if (left_partner(v, i)) continue;
            Lace l{v, v, {i}};
            int z = v, d = i;
            while (int nxt = right_partner(z, d)) {
                ++z;
                d = nxt;
                l.dots.push_back(d);
            }
            l.right = z;
            out.push_back(l);
        }
    return out;
}

OrbitSpec LacingDiagram::orbit() const {
    OrbitSpec s;
    for (const Lace& l : laces()) ++s.mult[{l.left, l.right}];
    return s;
}

Representation LacingDiagram::representation() const {
    std::vector<Matrix> m;
    for (const PartialPerm& p : w_) m.push_back(Matrix::of(p));
    return Representation(q_, m);
}

std::string LacingDiagram::key() const {
    std::ostringstream o;
    for (const PartialPerm& p : w_) {
        for (int i = 1; i <= p.rows(); ++i) o << p.col_of(i) << ',';
        o << '|';
    }
    return o.str();
}

LacingDiagram canonical_lacing(const QuiverSpec& q, const OrbitSpec& spec) {
    spec.check(q);
    std::vector<std::pair<int, int>> order;
    for (const auto& [iv, m] : spec.mult)
        for (int k = 0; k < m; ++k) order.push_back(iv);
    std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
        int lx = x.second - x.first, ly = y.second - y.first;
        if (lx != ly) return lx > ly;
        return x.first < y.first;
    });
    std::vector<int> next(q.vertices(), 1);
    std::vector<PartialPerm> w;
    for (int a = 0; a < q.arrow_count(); ++a) w.emplace_back(q.dims[q.tail(a)], q.dims[q.head(a)]);
    for (const auto& [l, r] : order) {
        int prev = next[l]++;
        for (int z = l + 1; z <= r; ++z) {
            int cur = next[z]++;
            if (q.arrows[z - 1] == Dir::right) w[z - 1].set(prev, cur);
            else w[z - 1].set(cur, prev);
            prev = cur;
        }
    }
    return LacingDiagram(q, w);
}

std::vector<LacingDiagram> enumerate_lacings(const QuiverSpec& q, const OrbitSpec& spec, std::size_t limit) {
    spec.check(q);
    const int n = q.vertices();
    std::vector<LacingDiagram> out;
    if (n == 0) return out;
    std::vector<PartialPerm> w;
    for (int a = 0; a < q.arrow_count(); ++a) w.emplace_back(q.dims[q.tail(a)], q.dims[q.head(a)]);

    // through[a][z]: laces starting at a that pass beyond z
    auto continuing = [&](int a, int z) {
        int s = 0;
        for (const auto& [iv, m] : spec.mult)
            if (iv.first == a && iv.second > z) s += m;
        return s;
    };

    std::function<void(int, std::vector<int>)> at_vertex = [&](int z, std::vector<int> start) {
        if (z == n - 1) {
            out.push_back(LacingDiagram(q, w));
            if (out.size() > limit) throw TooLarge("lacing count exceeds the enumeration limit");
            return;
        }
        const int dz = q.dims[z], dn = q.dims[z + 1];
        std::vector<int> quota(z + 1, 0);  // continuing laces needed per start
        for (int a = 0; a <= z; ++a) quota[a] = continuing(a, z);
        std::vector<int> next_start(dn, z + 1);
        std::vector<bool> used(dn, false);
        std::function<void(int)> place = [&](int i) {
            if (i == dz) {
                for (int a = 0; a <= z; ++a)
                    if (quota[a]) return;
                at_vertex(z + 1, next_start);
                return;
            }
            int a = start[i];
            // end here if allowed: remaining dots of this start must still fit the quota
            int remaining = 0;
            for (int k = i; k < dz; ++k)
                if (start[k] == a) ++remaining;
            if (remaining > quota[a]) place(i + 1);
            if (quota[a] == 0) return;
            --quota[a];
            for (int j = 0; j < dn; ++j) {
                if (used[j]) continue;
                used[j] = true;
                next_start[j] = a;
                if (q.arrows[z] == Dir::right) w[z].set(i + 1, j + 1);
                else w[z].set(j + 1, i + 1);
                place(i + 1);
                if (q.arrows[z] == Dir::right) w[z].clear(i + 1, j + 1);
                else w[z].clear(j + 1, i + 1);
                next_start[j] = z + 1;
                used[j] = false;
            }
            ++quota[a];
        };
        place(0);
    };
    at_vertex(0, std::vector<int>(q.dims[0], 0));
    std::vector<LacingDiagram> kept;
    for (auto& d : out)
        if (d.orbit() == spec) kept.push_back(std::move(d));
    std::sort(kept.begin(), kept.end());
    return kept;
}

Perm extended_perm(const LacingDiagram& w, int a) {
    return w.quiver().arrows[a] == Dir::right ? complete(w.at(a)) : opposite_complete(w.at(a));
}

int extended_length(const LacingDiagram& w) {
    int s = 0;
    for (int a = 0; a < w.quiver().arrow_count(); ++a) s += length(extended_perm(w, a));
    return s;
}

std::vector<LacingDiagram> minimal_lacings(const QuiverSpec& q, const OrbitSpec& spec, std::size_t limit) {
    auto all = enumerate_lacings(q, spec, limit);
    int best = -1;
    for (const auto& d : all) {
        int l = extended_length(d);
        if (best < 0 || l < best) best = l;
    }
    std::vector<LacingDiagram> out;
    for (auto& d : all)
        if (extended_length(d) == best) out.push_back(std::move(d));
    return out;
}

namespace {

// One side of a middle column: the extended permutation of an adjacent arrow,
// seen from the middle column.
struct Side {
    int arrow = -1;
    Perm ext;
    bool middle_is_row = false;
    int offset = 0;      // extended index of real dot 1 of the middle column, minus one
    int far_offset = 0;  // same for the outer column
    int far_dim = 0;

    int partner(int q) const {
        int idx = q + offset;
        return middle_is_row ? ext(idx) : ext.inverse()(idx);
    }
    bool real_far(int idx) const { return idx > far_offset && idx <= far_offset + far_dim; }
};

Side make_side(const LacingDiagram& w, int a, int middle) {
    const QuiverSpec& q = w.quiver();
    Side s;
    s.arrow = a;
    s.ext = extended_perm(w, a);
    s.middle_is_row = q.tail(a) == middle;
    int far = s.middle_is_row ? q.head(a) : q.tail(a);
    s.far_dim = q.dims[far];
    int m = s.ext.size();
    if (q.arrows[a] == Dir::right) {
        s.offset = 0;
        s.far_offset = 0;
    } else {
        s.offset = m - q.dims[middle];
        s.far_offset = m - s.far_dim;
    }
    return s;
}

// Swaps the outer partners of middle dots q, q+1 on one side.
void swap_side(const LacingDiagram& w, const Side& s, int q, PartialPerm& out) {
    const QuiverSpec& quiv = w.quiver();
    std::vector<int> img = s.ext.one_line();
    if (s.middle_is_row) {
        std::swap(img[q + s.offset - 1], img[q + s.offset]);
    } else {
        Perm inv = s.ext.inverse();
        std::vector<int> ii = inv.one_line();
        std::swap(ii[q + s.offset - 1], ii[q + s.offset]);
        img = Perm(ii).inverse().one_line();
    }
    Perm np(img);
    const int rows = quiv.dims[quiv.tail(s.arrow)], cols = quiv.dims[quiv.head(s.arrow)];
    out = quiv.arrows[s.arrow] == Dir::right ? PartialPerm::nw_corner(np, rows, cols) : PartialPerm::se_corner(np, rows, cols);
    Perm back = quiv.arrows[s.arrow] == Dir::right ? complete(out) : opposite_complete(out);
    if (!(back == np)) throw std::logic_error("K-move produced a non-minimal extension");
}

}  // namespace

std::vector<LacingDiagram> k_moves(const LacingDiagram& w) {
    const QuiverSpec& q = w.quiver();
    std::vector<LacingDiagram> out;
    for (int v = 1; v + 1 < q.vertices(); ++v) {
        const int dv = q.dims[v];
        if (dv < 2) continue;
        Side left = make_side(w, v - 1, v), right = make_side(w, v, v);
        for (int d = 1; d < dv; ++d) {
            int l1 = left.partner(d), l2 = left.partner(d + 1);
            int r1 = right.partner(d), r2 = right.partner(d + 1);
            bool lreal = left.real_far(l1) || left.real_far(l2);
            bool rreal = right.real_far(r1) || right.real_far(r2);
            if (!lreal || !rreal) continue;
            bool lx = l1 > l2, rx = r1 > r2;
            if (rx) {
                std::vector<PartialPerm> maps = w.maps();
                swap_side(w, left, d, maps[v - 1]);
                out.emplace_back(q, maps);
            }
            if (lx) {
                std::vector<PartialPerm> maps = w.maps();
                swap_side(w, right, d, maps[v]);
                out.emplace_back(q, maps);
            }
        }
    }
    return out;
}

std::vector<LacingDiagram> ktheoretic_lacings(const QuiverSpec& q, const OrbitSpec& spec, std::size_t limit) {
    std::set<std::string> seen;
    std::deque<LacingDiagram> todo;
    std::vector<LacingDiagram> out;
    for (auto& d : minimal_lacings(q, spec, limit))
        if (seen.insert(d.key()).second) todo.push_back(std::move(d));
    while (!todo.empty()) {
        LacingDiagram d = std::move(todo.front());
        todo.pop_front();
        for (auto& e : k_moves(d))
            if (seen.insert(e.key()).second) todo.push_back(std::move(e));
        out.push_back(std::move(d));
        if (out.size() > limit) throw TooLarge("K-theoretic lacing count exceeds the enumeration limit");
    }
    std::sort(out.begin(), out.end());
    return out;
}

LacingDiagram lift(const LacingDiagram& w, const BipartiteCompletion& c) {
    const QuiverSpec& cq = c.completed.quiver();
    std::vector<PartialPerm> maps;
    for (int a = 0; a < cq.arrow_count(); ++a) {
        int rows = cq.dims[cq.tail(a)], cols = cq.dims[cq.head(a)];
        switch (c.arrow_origin[a]) {
            case ArrowOrigin::original: maps.push_back(w.at(c.arrow_source[a])); break;
            case ArrowOrigin::inverted: maps.push_back(PartialPerm::identity(rows, cols)); break;
            case ArrowOrigin::padding: maps.emplace_back(rows, cols); break;
        }
    }
    return LacingDiagram(cq, maps);
}

Representation lift(const Representation& v, const BipartiteCompletion& c) {
    const QuiverSpec& cq = c.completed.quiver();
    std::vector<Matrix> maps;
    for (int a = 0; a < cq.arrow_count(); ++a) {
        int rows = cq.dims[cq.tail(a)], cols = cq.dims[cq.head(a)];
        switch (c.arrow_origin[a]) {
            case ArrowOrigin::original: maps.push_back(v.maps[c.arrow_source[a]]); break;
            case ArrowOrigin::inverted: maps.push_back(Matrix::identity(rows)); break;
            case ArrowOrigin::padding: maps.emplace_back(rows, cols); break;
        }
    }
    return Representation(cq, maps);
}

OrbitSpec lift(const OrbitSpec& spec, const BipartiteCompletion& c) {
    OrbitSpec out;
    for (const auto& [iv, m] : spec.mult) {
        int l = c.completed_vertex[iv.first], r = c.completed_vertex[iv.second];
        if (l > 0 && c.vertex_origin[l - 1] == VertexOrigin::added) --l;
        out.mult[{l, r}] += m;
    }
    return out;
}

bool identity_on_inverted(const LacingDiagram& w, const BipartiteCompletion& c) {
    for (int a = 0; a < w.quiver().arrow_count(); ++a)
        if (c.arrow_origin[a] == ArrowOrigin::inverted && !w.at(a).is_identity()) return false;
    return true;
}

LacingDiagram restrict_to_original(const LacingDiagram& w, const BipartiteCompletion& c) {
    if (!identity_on_inverted(w, c)) throw std::invalid_argument("diagram is not an identity on inverted arrows");
    std::vector<PartialPerm> maps(c.original.arrow_count());
    for (int a = 0; a < w.quiver().arrow_count(); ++a)
        if (c.arrow_origin[a] == ArrowOrigin::original) maps[c.arrow_source[a]] = w.at(a);
    return LacingDiagram(c.original, maps);
}

std::string render(const LacingDiagram& w) {
    const QuiverSpec& q = w.quiver();
    const int n = q.vertices();
    // right arrows align tops, left arrows align bottoms
    std::vector<int> top(n, 0);
    for (int z = 1; z < n; ++z)
        top[z] = q.arrows[z - 1] == Dir::right ? top[z - 1] : top[z - 1] + q.dims[z - 1] - q.dims[z];
    int lo = n ? *std::min_element(top.begin(), top.end()) : 0;
    for (int& t : top) t -= lo;
    int height = 0;
    for (int z = 0; z < n; ++z) height = std::max(height, top[z] + q.dims[z]);

    std::ostringstream o;
    for (int z = 0; z < n; ++z) o << (z ? "    " : "") << z;
    o << '\n';
    if (height == 0) return o.str();
    for (int h = 0; h < height; ++h) {
        for (int z = 0; z < n; ++z) {
            int i = h - top[z] + 1;
            bool dot = i >= 1 && i <= q.dims[z];
            if (z) {
                const char* link = "   ";
                if (dot && w.left_partner(z, i)) link = q.arrows[z - 1] == Dir::right ? " ->" : " <-";
                o << link << ' ';
            }
            o << (dot ? std::to_string(i) : ".");
        }
        o << '\n';
    }
    o << "laces:";
    for (const auto& l : w.laces()) {
        o << " [" << l.left << ":";
        for (std::size_t k = 0; k < l.dots.size(); ++k) o << (k ? "-" : "") << l.dots[k];
        o << "]";
    }
    o << '\n';
    for (int a = 0; a < q.arrow_count(); ++a) {
        Perm e = extended_perm(w, a);
        int virt = e.size() - q.dims[q.tail(a)];
        o << "arrow " << a << (q.arrows[a] == Dir::right ? " c=" : " oc=") << e.str() << " virtual tail dots " << virt
          << " length " << length(e) << '\n';
    }
    o << "extended length " << extended_length(w) << '\n';
    return o.str();
}

}  // namespace qk
