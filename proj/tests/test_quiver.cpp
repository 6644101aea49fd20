#include <set>

#include <catch_amalgamated.hpp>

#include "quiverk/quiver.hpp"
#include "support.hpp"

using namespace qk;
using qk::test::bipartite;

namespace {

const Dir L = Dir::left, R = Dir::right;

std::vector<std::vector<Dir>> all_orientations(int arrows) {
    std::vector<std::vector<Dir>> out{{}};
    for (int k = 0; k < arrows; ++k) {
        std::vector<std::vector<Dir>> next;
        for (const auto& o : out)
            for (Dir d : {L, R}) {
                next.push_back(o);
                next.back().push_back(d);
            }
        out = std::move(next);
    }
    return out;
}

int through_vertices(const QuiverSpec& q) {
    int n = 0;
    for (int v = 1; v + 1 < q.vertices(); ++v) n += q.arrows[v - 1] == q.arrows[v];
    return n;
}

Monomial ratio(VarId a, VarId b) { return mono_mul(Monomial{{a.key(), 1}}, Monomial{{b.key(), -1}}); }

}  // namespace

TEST_CASE("quiver validation") {
    CHECK_THROWS_AS(QuiverSpec({1, 2}, {}), InvalidQuiver);
    CHECK_THROWS_AS(QuiverSpec({}, {}), InvalidQuiver);
    CHECK_THROWS_AS(QuiverSpec({1, -1}, {R}), InvalidQuiver);
    const QuiverSpec q({1, 2, 3}, {R, L});
    CHECK(q.is_source(0));
    CHECK(q.is_sink(1));
    CHECK(q.is_source(2));
    CHECK(q.is_bipartite());
    CHECK(q.dim_rep() == 1 * 2 + 3 * 2);
    CHECK_FALSE(QuiverSpec({1, 1, 1}, {R, R}).is_bipartite());
    CHECK(QuiverSpec({4}, {}).dim_rep() == 0);
}

TEST_CASE("bipartite labels of the running example") {
    const BipartiteStructure b(QuiverSpec({2, 2, 2, 3, 2, 2, 1}, {R, L, R, L, R, L}));
    CHECK(b.n() == 3);
    CHECK(b.d_x() == 7);
    CHECK(b.d_y() == 7);
    const char* labels[] = {"y3", "x3", "y2", "x2", "y1", "x1", "y0"};
    for (int v = 0; v < 7; ++v) {
        CHECK(b.label(v).str() == labels[v]);
        CHECK(b.vertex_of(b.label(v)) == v);
    }
    const char* arrows[] = {"beta3", "alpha3", "beta2", "alpha2", "beta1", "alpha1"};
    for (int a = 0; a < 6; ++a) CHECK(b.arrow_label(a).str() == arrows[a]);
    CHECK(b.alphabet(0).vars == Alphabet::of(Family::t, 3, 2).vars);
    CHECK(b.alphabet(3).vars == Alphabet::of(Family::s, 2, 3).vars);
    CHECK_THROWS_AS(BipartiteStructure(QuiverSpec({1, 1, 1}, {R, R})), InvalidQuiver);
    CHECK_THROWS_AS(BipartiteStructure(QuiverSpec({1, 1}, {L})), InvalidQuiver);
}

TEST_CASE("completion of a bipartite quiver adds nothing") {
    const QuiverSpec q = bipartite({1, 2, 1});
    const BipartiteCompletion c = bipartite_complete(q);
    CHECK(c.added_count() == 0);
    CHECK(c.completed.quiver() == q);
    CHECK(sub_map(c).empty());
    // sink ends get a dimension 0 source
    const BipartiteCompletion s = bipartite_complete(QuiverSpec({1, 1}, {L}));
    CHECK(s.added_count() == 0);
    CHECK(s.completed.quiver() == QuiverSpec({0, 1, 1}, {R, L}));
    CHECK(s.vertex_origin[0] == VertexOrigin::padding);
}

TEST_CASE("completion of the zig-zag example") {
    const QuiverSpec q({0, 2, 2, 3, 2, 1}, {L, R, R, L, L});
    const BipartiteCompletion c = bipartite_complete(q);
    CHECK(c.added_count() == 2);
    const BipartiteStructure& b = c.completed;
    CHECK(b.n() == 4);
    std::vector<std::string> labels;
    for (int v = 0; v < b.quiver().vertices(); ++v) labels.push_back(b.label(v).str());
    CHECK(labels == std::vector<std::string>{"y4", "x4", "y3", "x3", "y2", "x2", "y1", "x1", "y0"});
    // added twins sit left of original vertices 2 (z3) and 4 (z1)
    CHECK(c.vertex_origin[3] == VertexOrigin::added);
    CHECK(c.vertex_source[3] == 2);
    CHECK(c.vertex_origin[6] == VertexOrigin::added);
    CHECK(c.vertex_source[6] == 4);
    CHECK(b.quiver().dims == std::vector<int>{0, 0, 2, 2, 2, 3, 2, 2, 1});
    int inverted = 0;
    for (ArrowOrigin o : c.arrow_origin) inverted += o == ArrowOrigin::inverted;
    CHECK(inverted == 2);

    const auto sub = sub_map(c);
    CHECK(sub.size() == 4);
    for (int j = 1; j <= 2; ++j) {
        CHECK(sub.at(var_s(3, j)) == var_t(2, j));
        CHECK(sub.at(var_t(1, j)) == var_s(1, j));
    }
}

TEST_CASE("completion of equioriented A3") {
    const QuiverSpec q({1, 1, 1}, {R, R});
    const BipartiteCompletion c = bipartite_complete(q);
    CHECK(c.added_count() == 1);
    int inverted = 0;
    for (ArrowOrigin o : c.arrow_origin) inverted += o == ArrowOrigin::inverted;
    CHECK(inverted == 1);
    const auto sub = sub_map(c);
    CHECK(sub.size() == 1);
    const BipartiteStructure& b = c.completed;
    const int added = std::find(c.vertex_origin.begin(), c.vertex_origin.end(), VertexOrigin::added) - c.vertex_origin.begin();
    CHECK(sub.begin()->first == b.alphabet(added)[1]);
    CHECK(sub.begin()->second == b.alphabet(c.completed_vertex[1])[1]);
}

TEST_CASE("completion properties over all orientations") {
    for (int arrows = 0; arrows <= 5; ++arrows)
        for (const auto& o : all_orientations(arrows)) {
            std::vector<int> dims(arrows + 1);
            for (int v = 0; v <= arrows; ++v) dims[v] = 1 + v % 3;
            const QuiverSpec q(dims, o);
            const BipartiteCompletion c = bipartite_complete(q);
            const QuiverSpec& qt = c.completed.quiver();
            REQUIRE(qt.is_bipartite());
            REQUIRE(qt.is_source(0));
            REQUIRE(qt.is_source(qt.vertices() - 1));
            REQUIRE(c.added_count() == through_vertices(q));
            for (int v = 0; v < q.vertices(); ++v) REQUIRE(qt.dims[c.completed_vertex[v]] == q.dims[v]);
            for (int a = 0; a < q.arrow_count(); ++a) {
                const int ca = c.completed_arrow[a];
                REQUIRE(qt.arrows[ca] == q.arrows[a]);
                REQUIRE(c.arrow_origin[ca] == ArrowOrigin::original);
            }
            for (int v = 0; v < qt.vertices(); ++v) {
                if (c.vertex_origin[v] == VertexOrigin::padding) REQUIRE(qt.dims[v] == 0);
                if (c.vertex_origin[v] != VertexOrigin::added) continue;
                REQUIRE(qt.dims[v] == q.dims[c.vertex_source[v]]);
                REQUIRE(c.completed_vertex[c.vertex_source[v]] == v + 1);
                REQUIRE(c.arrow_origin[v] == ArrowOrigin::inverted);
            }
            // sub collapses onto exactly the alphabets of the original vertices
            const auto sub = sub_map(c);
            std::set<VarId> image, originals;
            for (int v = 0; v < qt.vertices(); ++v)
                for (VarId x : c.completed.alphabet(v).vars) image.insert(apply_sub(sub, x));
            for (int v = 0; v < q.vertices(); ++v)
                for (VarId x : c.completed.alphabet(c.completed_vertex[v]).vars) {
                    originals.insert(x);
                    REQUIRE(apply_sub(sub, x) == x);
                }
            REQUIRE(image == originals);
            // completing again changes nothing
            const BipartiteCompletion again = bipartite_complete(qt);
            REQUIRE(again.added_count() == 0);
            REQUIRE(again.completed.quiver() == qt);
        }
}

TEST_CASE("grading degrees") {
    const BipartiteStructure b(bipartite({3, 3, 3, 3, 3}));
    const int beta1 = b.arrow_of({false, 1}), alpha1 = b.arrow_of({true, 1}), alpha2 = b.arrow_of({true, 2});
    CHECK(grading_degree(b, beta1, 1, 1) == ratio(var_t(1, 1), var_s(1, 1)));
    CHECK(grading_degree(b, alpha1, 1, 2) == ratio(var_t(0, 1), var_s(1, 2)));
    CHECK(grading_degree(b, alpha2, 2, 3) == ratio(var_t(1, 2), var_s(2, 3)));
    CHECK_THROWS_AS(grading_degree(b, beta1, 4, 1), OutOfRange);
}

TEST_CASE("layout of the smallest bipartite quiver") {
    const BlockLayout layout(BipartiteStructure(bipartite({1, 1, 1})));
    CHECK(layout.snake_cells().size() == 2);
    CHECK(layout.v0().size() == 3);
    const auto d = rothe_diagram(layout.v0());
    CHECK(std::set<Cell>(d.begin(), d.end()) == std::set<Cell>{{1, 1}, {2, 1}});
}

TEST_CASE("layout of the running example") {
    const BlockLayout layout(BipartiteStructure(QuiverSpec({2, 2, 2, 3, 2, 2, 1}, {R, L, R, L, R, L})));
    CHECK(layout.snake_cells().size() == 26);
    std::vector<std::string> rows, cols;
    for (const Block& b : layout.row_blocks()) rows.push_back(b.label.str());
    for (const Block& b : layout.col_blocks()) cols.push_back(b.label.str());
    CHECK(rows == std::vector<std::string>{"y0", "y1", "y2", "y3", "x3", "x2", "x1"});
    CHECK(cols == std::vector<std::string>{"x3", "x2", "x1", "y0", "y1", "y2", "y3"});
    CHECK(layout.row_alphabet().size() == 14);
    CHECK(layout.row_var(1) == var_t(0, 1));
    CHECK(layout.col_var(1) == var_s(3, 1));
}

TEST_CASE("layout properties on random quivers") {
    for (int n = 0; n <= 3; ++n)
        for (int seed = 0; seed < 12; ++seed) {
            std::vector<int> dims(2 * n + 1);
            for (int v = 0; v <= 2 * n; ++v) dims[v] = (seed * 7 + v * 5 + v * v) % 4;
            const QuiverSpec q = bipartite(dims);
            const BipartiteStructure b(q);
            const BlockLayout layout(b);
            REQUIRE(static_cast<int>(layout.snake_cells().size()) == q.dim_rep());
            const auto d = rothe_diagram(layout.v0());
            std::set<Cell> rect;
            for (int i = 1; i <= b.d_y(); ++i)
                for (int j = 1; j <= b.d_x(); ++j) rect.insert({i, j});
            REQUIRE(std::set<Cell>(d.begin(), d.end()) == rect);
            for (int k = 1; k <= n; ++k) {
                const auto [ar, ac] = layout.arrow_blocks(b.arrow_of({true, k}));
                REQUIRE(ar->label == VertexLabel{false, k - 1});
                REQUIRE(ac->label == VertexLabel{true, k});
                const auto [br, bc] = layout.arrow_blocks(b.arrow_of({false, k}));
                REQUIRE(br->label == VertexLabel{false, k});
                REQUIRE(bc->label == VertexLabel{true, k});
            }
            // every snake cell is graded by its row label over its column label
            for (const Cell& c : layout.snake_cells()) {
                const int a = layout.arrow_at(c);
                const auto [rb, cb] = layout.arrow_blocks(a);
                // tails are sources, so the block holds V_a as is
                REQUIRE(grading_degree(b, a, c.i - rb->offset, c.j - cb->offset) ==
                        ratio(layout.row_var(c.i), layout.col_var(c.j)));
            }
        }
}
