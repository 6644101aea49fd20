#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include <catch_amalgamated.hpp>

#include "quiverk/io.hpp"

namespace qk::test {

inline io::json fixture(const std::string& name) { return io::read_file(std::string(QK_FIXTURES) + "/" + name); }

struct RunningExample {
    QuiverSpec q;
    io::json j;
    RunningExample() : j(fixture("running_example.json")) { q = io::quiver_from_json(j["quiver"]); }
    Representation rep() const { return io::representation_from_json(j["representative"], q); }
    LacingDiagram top() const { return io::lacing_from_json(j["lacing_top"], q); }
    LacingDiagram bottom() const { return io::lacing_from_json(j["lacing_bottom"], q); }
    PipeDream pipe(const char* key) const { return io::pipe_from_json(j[key], 7, 7); }
};

inline std::vector<Perm> all_perms(int m) {
    std::vector<int> v(m);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Perm> out;
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// every word over 1..max_letter of the given length
inline std::vector<HeckeWord> all_words(int len, int max_letter) {
    std::vector<HeckeWord> out{{}};
    for (int k = 0; k < len; ++k) {
        std::vector<HeckeWord> next;
        for (const auto& w : out)
            for (int i = 1; i <= max_letter; ++i) {
                next.push_back(w);
                next.back().push_back(i);
            }
        out = std::move(next);
    }
    return out;
}

// ordinary product s_{w1} s_{w2} ... in S_m
inline Perm word_product(const HeckeWord& w, int m) {
    Perm p = Perm::identity(m);
    for (int i : w) p = p.times_s(i);
    return p;
}

// bipartite quiver y_n, x_n, ..., x_1, y_0 with the given dims read left to right
inline QuiverSpec bipartite(std::vector<int> dims) {
    std::vector<Dir> a;
    for (std::size_t k = 0; k + 1 < dims.size(); ++k) a.push_back(k % 2 == 0 ? Dir::right : Dir::left);
    return QuiverSpec(std::move(dims), std::move(a));
}

// all dimension vectors of the given length with entries 0..max
inline std::vector<std::vector<int>> all_dims(int len, int max) {
    std::vector<std::vector<int>> out{{}};
    for (int k = 0; k < len; ++k) {
        std::vector<std::vector<int>> next;
        for (const auto& d : out)
            for (int e = 0; e <= max; ++e) {
                next.push_back(d);
                next.back().push_back(e);
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace qk::test

namespace Catch {
template <>
struct StringMaker<qk::Perm> {
    static std::string convert(const qk::Perm& p) { return p.str(); }
};
template <>
struct StringMaker<qk::LaurentPoly> {
    static std::string convert(const qk::LaurentPoly& p) { return p.str(); }
};
template <>
struct StringMaker<qk::Cell> {
    static std::string convert(const qk::Cell& c) { return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")"; }
};
}  // namespace Catch
