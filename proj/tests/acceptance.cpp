// One line per acceptance criterion. Exit status is the number of failed criteria.
#include <chrono>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "quiverk/formulas.hpp"
#include "quiverk/io.hpp"
#include "quiverk/schubert.hpp"
#include "quiverk/zelevinsky.hpp"

using namespace qk;
using io::json;

namespace {

const Dir L = Dir::left, R = Dir::right;

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

// budget in seconds; criteria sharing the sweep pass 0 and are timed under criterion 5
void report(int n, const std::string& what, double budget, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget > 0 && secs >= budget) {
        o.pass = false;
        o.detail += " over budget of " + std::to_string(static_cast<int>(budget)) + " s";
    }
    failures += !o.pass;
    std::printf("criterion %2d  %s  %8.2f s  %s%s%s\n", n, o.pass ? "PASS" : "FAIL", secs, what.c_str(),
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
}

json fixture() { return io::read_file(std::string(QK_FIXTURES) + "/running_example.json"); }

Perm perm_of_matrix(const json& m) {
    std::vector<int> img;
    for (const auto& row : m)
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j].get<int>() == 1) img.push_back(static_cast<int>(j) + 1);
    return Perm(img);
}

QuiverSpec bipartite(const std::vector<int>& dims) {
    std::vector<Dir> a;
    for (std::size_t k = 0; k + 1 < dims.size(); ++k) a.push_back(k % 2 == 0 ? R : L);
    return QuiverSpec(dims, a);
}

std::vector<std::vector<int>> all_dims(int len, int max) {
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

std::vector<Perm> all_perms(int m) {
    std::vector<int> v(m);
    for (int i = 0; i < m; ++i) v[i] = i + 1;
    std::vector<Perm> out;
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// Criteria 5, 7, 9 and 10 share one pass over the sweep.
struct Sweep {
    std::size_t quivers = 0, orbits = 0, diagrams = 0;
    std::size_t kpoly_mismatch = 0, md_mismatch = 0, transform_mismatch = 0;
    std::size_t zperm_mismatch = 0, red_mismatch = 0, k_mismatch = 0;
    std::size_t not_divisible = 0, residue = 0, other_errors = 0;
    std::size_t literal_sign_agrees = 0;
    std::string first_failure;

    void fail(const std::string& what, const QuiverSpec& q, const OrbitSpec& o) {
        if (first_failure.empty()) first_failure = what + " on " + io::to_json(q).dump() + " " + o.str();
    }
};

Sweep run_sweep() {
    Sweep s;
    for (int n = 1; n <= 2; ++n)
        for (const auto& dims : all_dims(2 * n + 1, 2)) {
            const QuiverSpec q = bipartite(dims);
            const BipartiteContext ctx(q);
            ++s.quivers;
            for (const OrbitSpec& o : enumerate_orbits(q)) {
                ++s.orbits;
                try {
                    const FormulaResult ratio = ratio_formula(o, ctx), pipe = pipe_formula(o, ctx),
                                        comp = component_formula(o, ctx);
                    if (!(ratio.kpoly == pipe.kpoly && pipe.kpoly == comp.kpoly)) ++s.kpoly_mismatch, s.fail("kpoly", q, o);
                    if (!(ratio.multidegree == pipe.multidegree && pipe.multidegree == comp.multidegree))
                        ++s.md_mismatch, s.fail("multidegree", q, o);
                    if (multidegree_of(comp.kpoly, comp.codim) != comp.multidegree) ++s.transform_mismatch, s.fail("transform", q, o);

                    // the component sign read literally as (-1)^{|w| - l(v(r))}
                    const int lv = length(ctx.zperm(o));
                    LaurentPoly literal;
                    for (const ComponentSummand& c : component_summands(o, ctx)) {
                        const int sign = (extended_length(c.diagram) - lv) % 2 ? -1 : 1;
                        literal += (sign * c.sign) * c.value;
                    }
                    s.literal_sign_agrees += literal == comp.kpoly;

                    const auto w = minimal_lacings(q, o);
                    const auto kw = ktheoretic_lacings(q, o);
                    for (const auto* set : {&w, &kw})
                        for (const LacingDiagram& d : *set) {
                            ++s.diagrams;
                            if (zperm_from_lacing(d, ctx.layout()) !=
                                zperm_from_blockranks(block_rank_matrix(d.representation(), ctx.layout()), ctx.layout()))
                                ++s.zperm_mismatch, s.fail("zperm", q, o);
                        }

                    const Perm v = ctx.zperm(o);
                    std::set<LacingDiagram> red, all;
                    for (const PipeDream& p : enumerate_pipes(ctx.layout(), v, true)) red.insert(pipe_to_lace(p, ctx.layout()));
                    for (const PipeDream& p : enumerate_pipes(ctx.layout(), v, false)) all.insert(pipe_to_lace(p, ctx.layout()));
                    if (red != std::set<LacingDiagram>(w.begin(), w.end())) ++s.red_mismatch, s.fail("RedPipes image", q, o);
                    if (all != std::set<LacingDiagram>(kw.begin(), kw.end())) ++s.k_mismatch, s.fail("Pipes image", q, o);
                } catch (const NotDivisible& e) {
                    ++s.not_divisible, s.fail(e.what(), q, o);
                } catch (const LowerDegreeResidue& e) {
                    ++s.residue, s.fail(e.what(), q, o);
                } catch (const std::exception& e) {
                    ++s.other_errors, s.fail(e.what(), q, o);
                }
            }
        }
    return s;
}

std::string counts(std::initializer_list<std::pair<const char*, std::size_t>> kv) {
    std::ostringstream o;
    bool first = true;
    for (const auto& [k, v] : kv) {
        o << (first ? "" : ", ") << k << ' ' << v;
        first = false;
    }
    return o.str();
}

}  // namespace

int main() {
    const json fx = fixture();
    const QuiverSpec q = io::quiver_from_json(fx["quiver"]);
    const Representation rep = io::representation_from_json(fx["representative"], q);
    const LacingDiagram top = io::lacing_from_json(fx["lacing_top"], q);
    const LacingDiagram bottom = io::lacing_from_json(fx["lacing_bottom"], q);
    const BlockLayout layout{BipartiteStructure(q)};
    const Perm v = perm_of_matrix(fx["zperm_matrix"]);

    report(1, "running-example block rank matrix", 1, [&] {
        const BlockRankMatrix b = block_rank_matrix(rep, layout);
        const bool row7 = b.size() == 7 && b[6] == std::vector<int>{2, 5, 7, 8, 10, 12, 14};
        return Outcome{b == fx["block_rank_matrix"].get<BlockRankMatrix>() && row7, "49 entries"};
    });

    report(2, "running-example Zelevinsky permutation", 1, [&] {
        const bool a = zperm_from_blockranks(block_rank_matrix(rep, layout), layout) == v;
        const bool b = zperm_from_lacing(top, layout) == v;
        const bool c = zperm_from_lacing(bottom, layout) == v && zperm_from_orbit(orbit_of(rep), layout) == v;
        return Outcome{a && b && c, "v(r) = " + v.str()};
    });

    report(3, "pipe dream fixtures P1, P2", 1, [&] {
        const PipeDream p1 = io::pipe_from_json(fx["P1"], 7, 7), p2 = io::pipe_from_json(fx["P2"], 7, 7);
        const bool ok = p1.size() == 27 && is_reduced(p1) && demazure_of(p1).resized(14) == v && p2.size() == 28 && !is_reduced(p2) &&
                        demazure_of(p2).resized(14) == v && pipe_to_lace(p1, layout) == top && pipe_to_lace(p2, layout) == top;
        return Outcome{ok, "|P1| = 27, |P2| = 28"};
    });

    report(4, "minimal lacing membership", 10, [&] {
        const auto w = minimal_lacings(q, orbit_of(rep));
        const bool in = std::find(w.begin(), w.end(), top) != w.end() && std::find(w.begin(), w.end(), bottom) != w.end();
        const bool ok = in && extended_length(top) == extended_length(bottom) &&
                        rank_array(top.representation()) == rank_array(bottom.representation());
        return Outcome{ok, std::to_string(w.size()) + " minimal diagrams, length " + std::to_string(extended_length(top))};
    });

    Sweep sw;
    std::string scope;

    report(5, "three-formula agreement sweep", 600, [&] {
        sw = run_sweep();
        scope = std::to_string(sw.quivers) + " quivers, " + std::to_string(sw.orbits) + " orbits";
        const bool ok = sw.kpoly_mismatch == 0 && sw.md_mismatch == 0 && sw.transform_mismatch == 0 && sw.other_errors == 0 &&
                        sw.not_divisible == 0 && sw.residue == 0;
        std::ostringstream d;
        d << scope << "; "
          << counts({{"kpoly mismatches", sw.kpoly_mismatch},
                     {"multidegree mismatches", sw.md_mismatch},
                     {"transform mismatches", sw.transform_mismatch},
                     {"errors", sw.other_errors}})
          << "; literal |w|-l(v(r)) sign agrees on " << sw.literal_sign_agrees << '/' << sw.orbits;
        if (!sw.first_failure.empty()) d << "; first: " << sw.first_failure;
        return Outcome{ok, d.str()};
    });

    report(6, "Grothendieck engine vs pipe-dream expansion on S4", 60, [&] {
        const Alphabet a = Alphabet::of(Family::t, 0, 4), b = Alphabet::of(Family::s, 1, 4);
        int bad = 0;
        for (const Perm& w : all_perms(4)) {
            bad += grothendieck(w, a, b) != grothendieck_fk(w, a, b);
            bad += !schubert(w, a, b).is_homogeneous(length(w));
        }
        return Outcome{bad == 0, "24 permutations, " + std::to_string(bad) + " failures"};
    });

    report(7, "Zelevinsky construction equivalence", 0, [&] {
        return Outcome{sw.zperm_mismatch == 0 && sw.other_errors == 0,
                       std::to_string(sw.diagrams) + " diagrams, " + std::to_string(sw.zperm_mismatch) + " mismatches"};
    });

    report(8, "arbitrary orientation", 300, [&] {
        std::vector<QuiverSpec> qs;
        for (const auto& arrows : {std::vector<Dir>{L, L}, std::vector<Dir>{R, R}})
            for (const auto& d : all_dims(3, 2)) qs.emplace_back(d, arrows);
        qs.emplace_back(std::vector<int>{0, 2, 2, 2, 2, 1}, std::vector<Dir>{L, R, R, L, L});
        for (const auto& d : all_dims(6, 1)) qs.emplace_back(d, std::vector<Dir>{L, R, R, L, L});
        std::size_t orbits = 0, vanishing = 0, bad = 0;
        for (const QuiverSpec& qq : qs) {
            const OrientedContext ctx(qq);
            for (const OrbitSpec& o : enumerate_orbits(qq)) {
                ++orbits;
                const FormulaResult comp = arbitrary_orientation(Formula::component, o, ctx);
                const FormulaResult pipe = arbitrary_orientation(Formula::pipe, o, ctx);
                bool ok = comp.kpoly == pipe.kpoly && comp.multidegree == pipe.multidegree;
                if (comp.restricted_kpoly) ok = ok && *comp.restricted_kpoly == comp.kpoly && *pipe.restricted_kpoly == comp.kpoly;
                if (ctx.bipartite().structure().d() <= Limits{}.max_ratio_d)
                    ok = ok && arbitrary_orientation(Formula::ratio, o, ctx).kpoly == comp.kpoly;
                for (const ComponentSummand& s : component_summands(ctx.lift(o), ctx.bipartite()))
                    if (!identity_on_inverted(s.diagram, ctx.completion())) {
                        ++vanishing;
                        ok = ok && ctx.apply(s.value).is_zero();
                    }
                bad += !ok;
            }
        }
        return Outcome{bad == 0, std::to_string(qs.size()) + " quivers, " + std::to_string(orbits) + " orbits, " +
                                     std::to_string(vanishing) + " vanishing summands, " + std::to_string(bad) + " failures"};
    });

    report(9, "pipe/lace correspondence", 0, [&] {
        return Outcome{sw.red_mismatch == 0 && sw.k_mismatch == 0 && sw.other_errors == 0,
                       scope + "; " + counts({{"W mismatches", sw.red_mismatch}, {"KW mismatches", sw.k_mismatch}})};
    });

    report(10, "exactness guards", 0, [&] {
        return Outcome{sw.not_divisible == 0 && sw.residue == 0,
                       counts({{"NotDivisible", sw.not_divisible}, {"LowerDegreeResidue", sw.residue}})};
    });

    return failures;
}
