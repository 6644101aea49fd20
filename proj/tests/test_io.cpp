#include <cstdio>
#include <fstream>

#include <catch_amalgamated.hpp>

#include "quiverk/zelevinsky.hpp"
#include "support.hpp"

using namespace qk;
using qk::test::bipartite;
using json = io::json;

namespace {

const Dir L = Dir::left, R = Dir::right;

std::string temp_file(const std::string& body) {
    const std::string path = std::string("/tmp/qk_io_") + std::to_string(std::hash<std::string>{}(body)) + ".json";
    std::ofstream(path) << body;
    return path;
}

}  // namespace

TEST_CASE("quiver schema") {
    const QuiverSpec q({0, 2, 2, 3, 2, 1}, {L, R, R, L, L});
    const json j = io::to_json(q);
    CHECK(j == json::parse(R"({"dims":[0,2,2,3,2,1],"arrows":["left","right","right","left","left"]})"));
    CHECK(io::quiver_from_json(j) == q);
    CHECK_THROWS_AS(io::quiver_from_json(json::parse(R"({"dims":[1,1],"arrows":["up"]})")), io::InputError);
    CHECK_THROWS_AS(io::quiver_from_json(json::parse(R"({"dims":[1,1,1],"arrows":["left"]})")), io::InputError);
    CHECK_THROWS_AS(io::quiver_from_json(json::parse(R"({"dims":[1,-1],"arrows":["left"]})")), io::InputError);
    CHECK_THROWS_AS(io::quiver_from_json(json::parse(R"({"arrows":[]})")), io::InputError);
}

TEST_CASE("orbit schemas") {
    const QuiverSpec q = bipartite({1, 2, 1});
    for (const OrbitSpec& o : enumerate_orbits(q)) {
        const json j = io::to_json(o);
        REQUIRE(j.contains("multiplicities"));
        REQUIRE(io::orbit_from_json(j, q) == o);
        // the representative form reduces to the same orbit
        const json rep = {{"representative", io::to_json(canonical_lacing(q, o).representation())}};
        REQUIRE(io::orbit_from_json(rep, q) == o);
    }
    const json bad = json::parse(R"({"multiplicities":[{"left":0,"right":2,"count":3}]})");
    CHECK_THROWS_AS(io::orbit_from_json(bad, q), io::InputError);
    const json shape = json::parse(R"({"representative":[[[1]],[[1]]]})");
    CHECK_THROWS_AS(io::orbit_from_json(shape, q), io::InputError);
    CHECK_THROWS_AS(io::orbit_from_json(json::parse("{}"), q), io::InputError);
}

TEST_CASE("running example fixture round trips") {
    const test::RunningExample ex;
    CHECK(io::to_json(ex.q) == ex.j["quiver"]);
    CHECK(io::to_json(ex.rep()) == ex.j["representative"]);
    CHECK(io::lacing_from_json(io::to_json(ex.top()), ex.q) == ex.top());
    CHECK(io::to_json(ex.bottom()) == ex.j["lacing_bottom"]);
    const PipeDream p1 = ex.pipe("P1");
    CHECK(io::pipe_from_json(io::to_json(p1), 7, 7) == p1);
    CHECK(io::to_json(p1)["crosses"].size() == 27);
}

TEST_CASE("permutations and matrices") {
    const Perm p({6, 3, 4, 1, 2, 5});
    CHECK(io::to_json(p) == json::parse("[6,3,4,1,2,5]"));
    CHECK(io::perm_from_json(io::to_json(p)) == p);
    CHECK_THROWS_AS(io::perm_from_json(json::parse("[1,1]")), io::InputError);
    Matrix m(2, 3);
    m(1, 2) = -7;
    CHECK(io::matrix_from_json(io::to_json(m), 2, 3) == m);
    CHECK_THROWS_AS(io::matrix_from_json(io::to_json(m), 3, 2), io::InputError);
    CHECK_THROWS_AS(io::pipe_from_json(json::parse(R"({"rows":2,"cols":2,"crosses":[[3,1]]})"), 2, 2), io::InputError);
}

TEST_CASE("laurent term list") {
    const LaurentPoly p = 1 - LaurentPoly::var(var_t(0, 1)) * LaurentPoly::var(var_s(1, 1), -1);
    const json j = io::to_json(p);
    // same term order as the text form
    CHECK(j == json::parse(R"([{"coeff":1,"exps":{}},{"coeff":-1,"exps":{"t.0.1":1,"s.1.1":-1}}])"));
    CHECK(io::poly_from_json(j) == p);
    CHECK(io::to_json(p).dump() == io::to_json(io::poly_from_json(j)).dump());
    // coefficients past 64 bits travel as strings
    const LaurentPoly big = (1 + LaurentPoly::var(var_t(0, 1))).pow(80);
    CHECK(io::poly_from_json(io::to_json(big)) == big);
    CHECK(io::to_json(big).dump().find("\"107507208733336176461620\"") != std::string::npos);
    CHECK(io::poly_from_json(json::array()) == 0);
    CHECK_THROWS_AS(io::poly_from_json(json::parse(R"([{"coeff":1,"exps":{"u.0.1":1}}])")), io::InputError);
}

TEST_CASE("formula results") {
    const QuiverSpec q = bipartite({1, 1, 1});
    const OrientedContext ctx(q);
    const OrbitSpec o = enumerate_orbits(q).front();
    const CrosscheckReport rep = crosscheck(o, ctx);
    const json j = io::to_json(rep.results.front());
    for (const char* key : {"formula", "kpoly", "multidegree", "codim", "counts"}) CHECK(j.contains(key));
    CHECK(io::poly_from_json(j["kpoly"]) == rep.results.front().kpoly);
    CHECK(j["codim"] == rep.codim);
    const json r = io::to_json(rep);
    CHECK(r["results"].size() == 3);
    CHECK(r["skipped"].empty());
}

TEST_CASE("files") {
    const std::string good = temp_file(R"({"dims":[1,1,1],"arrows":["right","left"]})");
    CHECK(io::quiver_from_json(io::read_file(good)) == bipartite({1, 1, 1}));
    std::remove(good.c_str());
    const std::string broken = temp_file("{\"dims\":[1,");
    CHECK_THROWS_AS(io::read_file(broken), io::InputError);
    std::remove(broken.c_str());
    CHECK_THROWS_AS(io::read_file("/nonexistent/quiver.json"), io::InputError);
}
