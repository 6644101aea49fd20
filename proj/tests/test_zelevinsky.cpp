#include <random>

#include <catch_amalgamated.hpp>

#include "quiverk/zelevinsky.hpp"
#include "support.hpp"

using namespace qk;
using qk::test::all_dims;
using qk::test::all_perms;
using qk::test::bipartite;

namespace {

Perm perm_of_matrix(const io::json& m) {
    std::vector<int> img;
    for (const auto& row : m) {
        int col = 0;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j].get<int>() == 1) col = static_cast<int>(j) + 1;
        img.push_back(col);
    }
    return Perm(img);
}

// ones of p in the NW corner ending at block (i, j)
BlockRankMatrix perm_block_ranks(const Perm& p, const BlockLayout& layout) {
    const auto& rows = layout.row_blocks();
    const auto& cols = layout.col_blocks();
    BlockRankMatrix out(rows.size(), std::vector<int>(cols.size(), 0));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (int r = 1; r <= rows[i].offset + rows[i].size; ++r)
                out[i][j] += p(r) <= cols[j].offset + cols[j].size;
    return out;
}

// every permutation with these block ranks
std::vector<Perm> realizing(const BlockRankMatrix& b, const BlockLayout& layout) {
    std::vector<Perm> out;
    for (const Perm& p : all_perms(layout.structure().d()))
        if (perm_block_ranks(p, layout) == b) out.push_back(p);
    return out;
}

Representation random_rep(const QuiverSpec& q, std::mt19937& rng) {
    std::uniform_int_distribution<int> e(-100000, 100000);
    std::vector<Matrix> maps;
    for (int a = 0; a < q.arrow_count(); ++a) {
        Matrix m(q.dims[q.tail(a)], q.dims[q.head(a)]);
        for (auto& x : m.a) x = e(rng);
        maps.push_back(m);
    }
    return Representation(q, maps);
}

bool ranks_leq(const RankArray& a, const RankArray& b) {
    for (const auto& [j, r] : a)
        if (r > b.at(j)) return false;
    return true;
}

}  // namespace

TEST_CASE("running example block ranks and zelevinsky permutation") {
    const test::RunningExample ex;
    const BlockLayout layout{BipartiteStructure(ex.q)};
    const auto expected = ex.j["block_rank_matrix"].get<BlockRankMatrix>();
    const BlockRankMatrix b = block_rank_matrix(ex.rep(), layout);
    CHECK(b == expected);
    CHECK(b[6] == std::vector<int>{2, 5, 7, 8, 10, 12, 14});

    const Perm v = perm_of_matrix(ex.j["zperm_matrix"]);
    CHECK(zperm_from_blockranks(b, layout) == v);
    CHECK(zperm_from_lacing(ex.top(), layout) == v);
    CHECK(zperm_from_lacing(ex.bottom(), layout) == v);
    CHECK(zperm_from_orbit(orbit_of(ex.rep()), layout) == v);
    CHECK(perm_block_ranks(v, layout) == expected);

    // minimal diagrams have length equal to the codimension
    const int c = codim(v, v_star(layout));
    CHECK(c == extended_length(ex.top()));
    CHECK(c == extended_length(ex.bottom()));
}

TEST_CASE("zelevinsky image") {
    const test::RunningExample ex;
    const BlockLayout layout{BipartiteStructure(ex.q)};
    const Matrix z = zelevinsky_image(ex.rep(), layout);
    CHECK(z.rows == 14);
    CHECK(exact_rank(z) == 14);
    CHECK_THROWS_AS(zelevinsky_image(ex.rep(), BlockLayout(BipartiteStructure(bipartite({1, 1, 1})))), ShapeMismatch);
}

TEST_CASE("zelevinsky permutation is the minimal realizing permutation") {
    std::mt19937 rng(5);
    for (int n = 1; n <= 2; ++n)
        for (const auto& dims : all_dims(2 * n + 1, n == 1 ? 2 : 1)) {
            const QuiverSpec q = bipartite(dims);
            const BlockLayout layout{BipartiteStructure(q)};
            for (const OrbitSpec& o : enumerate_orbits(q)) {
                const LacingDiagram w = canonical_lacing(q, o);
                const BlockRankMatrix b = block_rank_matrix(w.representation(), layout);
                const Perm v = zperm_from_blockranks(b, layout);
                const auto all = realizing(b, layout);
                REQUIRE(!all.empty());
                int shorter = 0, equal = 0;
                for (const Perm& p : all) {
                    shorter += length(p) < length(v);
                    equal += length(p) == length(v);
                }
                REQUIRE(shorter == 0);
                REQUIRE(equal == 1);
                REQUIRE(zperm_from_orbit(o, layout) == v);
                REQUIRE(zperm_from_lacing(w, layout) == v);
            }
        }
}

TEST_CASE("constructions agree on every lacing of the sweep") {
    for (int n = 1; n <= 2; ++n)
        for (const auto& dims : all_dims(2 * n + 1, 2)) {
            const QuiverSpec q = bipartite(dims);
            const BlockLayout layout{BipartiteStructure(q)};
            for (const OrbitSpec& o : enumerate_orbits(q)) {
                const Perm v = zperm_from_orbit(o, layout);
                for (const LacingDiagram& w : minimal_lacings(q, o)) {
                    REQUIRE(zperm_from_lacing(w, layout) == v);
                    REQUIRE(zperm_from_blockranks(block_rank_matrix(w.representation(), layout), layout) == v);
                }
            }
        }
}

TEST_CASE("v_* is the zelevinsky permutation of a generic representation") {
    std::mt19937 rng(23);
    for (int n = 1; n <= 2; ++n)
        for (const auto& dims : all_dims(2 * n + 1, 2)) {
            const QuiverSpec q = bipartite(dims);
            const BlockLayout layout{BipartiteStructure(q)};
            const Perm vs = v_star(layout);
            CHECK(zperm_from_blockranks(block_rank_matrix(random_rep(q, rng), layout), layout) == vs);
            CHECK(codim(vs, vs) == 0);
        }
    const test::RunningExample ex;
    const BlockLayout layout{BipartiteStructure(ex.q)};
    CHECK(zperm_from_blockranks(block_rank_matrix(random_rep(ex.q, rng), layout), layout) == v_star(layout));
}

TEST_CASE("bruhat order reverses orbit closure order") {
    for (const auto& dims : all_dims(3, 2)) {
        const QuiverSpec q = bipartite(dims);
        const BlockLayout layout{BipartiteStructure(q)};
        const auto orbits = enumerate_orbits(q);
        for (const OrbitSpec& a : orbits)
            for (const OrbitSpec& b : orbits) {
                const RankArray ra = rank_array(canonical_lacing(q, a).representation());
                const RankArray rb = rank_array(canonical_lacing(q, b).representation());
                // a lies in the closure of b iff ra <= rb
                REQUIRE(ranks_leq(ra, rb) == bruhat_leq(zperm_from_orbit(b, layout), zperm_from_orbit(a, layout)));
            }
    }
}

TEST_CASE("errors") {
    const QuiverSpec q = bipartite({1, 1, 1});
    const BlockLayout layout{BipartiteStructure(q)};
    CHECK_THROWS_AS(zperm_from_blockranks({{0}}, layout), NotRealizable);
    BlockRankMatrix b = block_rank_matrix(canonical_lacing(q, enumerate_orbits(q).front()).representation(), layout);
    b[0][0] += 1;
    CHECK_THROWS_AS(zperm_from_blockranks(b, layout), NotRealizable);
    CHECK_THROWS_AS(perm_from_block_counts({{-1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}, layout), NotRealizable);
    CHECK_THROWS_AS(codim(Perm::identity(3), Perm::identity(4)), NotComparable);
    CHECK_THROWS_AS(codim(Perm::identity(3), Perm({2, 1, 3})), NotComparable);
}

TEST_CASE("block permutation render") {
    const test::RunningExample ex;
    const BlockLayout layout{BipartiteStructure(ex.q)};
    const std::string s = render_block_perm(perm_of_matrix(ex.j["zperm_matrix"]), layout);
    CHECK(std::count(s.begin(), s.end(), '1') == 14);
    CHECK(std::count(s.begin(), s.end(), '\n') == 14 + 6);
    const BlockLayout one{BipartiteStructure(bipartite({1, 1, 1}))};
    CHECK(render_block_perm(Perm({2, 3, 1}), one) == " .| 1| .\n--+--+--\n .| .| 1\n--+--+--\n 1| .| .\n");
}
